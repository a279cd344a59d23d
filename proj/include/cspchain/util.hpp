#pragma once
// Small numeric and concurrency helpers shared across modules.

#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace cspchain {

// Kahan-compensated accumulator; summation order must stay fixed for
// reproducibility, which callers guarantee by chunking on indices.
class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }
    void merge(const KahanSum& other) { add(other.sum_); add(-other.comp_); }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Running mean / standard error over scalar observations.
class MeanAccumulator {
public:
    void add(double x) {
        ++n_;
        sum_.add(x);
        sumsq_.add(x * x);
    }
    long count() const { return n_; }
    double mean() const { return n_ ? sum_.value() / n_ : 0.0; }
    double variance() const {
        if (n_ < 2) return 0.0;
        const double m = mean();
        const double v = (sumsq_.value() - n_ * m * m) / (n_ - 1);
        return v > 0.0 ? v : 0.0;
    }
    double stderr_of_mean() const {
        return n_ >= 2 ? std::sqrt(variance() / n_) : 0.0;
    }

private:
    long n_ = 0;
    KahanSum sum_, sumsq_;
};

// Runs fn(chunk_index) for chunk_index in [0, chunks) on up to `threads`
// worker threads. Chunk decomposition is caller-defined and fixed, so results
// are identical for any thread count.
inline void parallel_for_chunks(int chunks, int threads,
                                const std::function<void(int)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads == 1 || chunks <= 1) {
        for (int c = 0; c < chunks; ++c) fn(c);
        return;
    }
    std::vector<std::thread> workers;
    const int nw = std::min(threads, chunks);
    workers.reserve(nw);
    for (int t = 0; t < nw; ++t) {
        workers.emplace_back([&fn, t, nw, chunks] {
            for (int c = t; c < chunks; c += nw) fn(c);
        });
    }
    for (auto& th : workers) th.join();
}

} // namespace cspchain
