#include "cspchain/ensembles.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cspchain {

std::string to_string(Problem p) {
    switch (p) {
        case Problem::KSAT: return "KSAT";
        case Problem::QCOL: return "QCOL";
        case Problem::XORSAT: return "XORSAT";
    }
    return "?";
}

std::string to_string(Boundary b) {
    switch (b) {
        case Boundary::Individual: return "INDIVIDUAL";
        case Boundary::Open: return "OPEN";
        case Boundary::Periodic: return "PERIODIC";
        case Boundary::Ring: return "RING";
        case Boundary::Connected: return "CONNECTED";
        case Boundary::Disconnected: return "DISCONNECTED";
    }
    return "?";
}

Problem problem_from_string(const std::string& s) {
    if (s == "KSAT") return Problem::KSAT;
    if (s == "QCOL") return Problem::QCOL;
    if (s == "XORSAT") return Problem::XORSAT;
    throw std::invalid_argument("unknown problem: " + s);
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "INDIVIDUAL") return Boundary::Individual;
    if (s == "OPEN") return Boundary::Open;
    if (s == "PERIODIC") return Boundary::Periodic;
    if (s == "RING") return Boundary::Ring;
    if (s == "CONNECTED") return Boundary::Connected;
    if (s == "DISCONNECTED") return Boundary::Disconnected;
    throw std::invalid_argument("unknown boundary: " + s);
}

void ChainSpec::validate() const {
    if (N <= 0) throw std::invalid_argument("ChainSpec: N must be positive");
    if (alpha < 0.0) throw std::invalid_argument("ChainSpec: alpha must be >= 0");
    if (K < 2) throw std::invalid_argument("ChainSpec: K must be >= 2");
    if (problem == Problem::QCOL) {
        if (K != 2) throw std::invalid_argument("ChainSpec: QCOL requires K = 2");
        if (Q < 2) throw std::invalid_argument("ChainSpec: QCOL requires Q >= 2");
    }
    if (w < 1) throw std::invalid_argument("ChainSpec: w must be >= 1");
    if (L < 1) throw std::invalid_argument("ChainSpec: L must be >= 1");
    if (boundary == Boundary::Individual) {
        if (L != 1 || w != 1)
            throw std::invalid_argument("ChainSpec: individual ensemble requires L = w = 1");
    } else if (L % 2 != 0) {
        throw std::invalid_argument("ChainSpec: coupled ensembles require even L");
    }
    if (w > L && boundary != Boundary::Individual && boundary != Boundary::Open)
        throw std::invalid_argument("ChainSpec: w must not exceed L for wrapped chains");
}

void FactorGraph::build_adjacency() {
    const int nv = spec.num_variables();
    var_offset.assign(nv + 1, 0);
    for (std::int32_t v : edge_var) var_offset[v + 1]++;
    for (int v = 0; v < nv; ++v) var_offset[v + 1] += var_offset[v];
    var_edges.resize(edge_var.size());
    std::vector<std::int32_t> fill(var_offset.begin(), var_offset.end() - 1);
    for (int e = 0; e < static_cast<int>(edge_var.size()); ++e)
        var_edges[fill[edge_var[e]]++] = e;
}

FactorGraph sample(const ChainSpec& spec, std::uint64_t seed) {
    spec.validate();
    FactorGraph g;
    g.spec = spec;
    g.seed = seed;

    SplitMix64 rng(derive_stream(seed, {0x656e73ULL /* "ens" */}));
    const int M = spec.constraints_per_position();
    const int K = spec.problem == Problem::QCOL ? 2 : spec.K;
    const int L = spec.L;
    const int N = spec.N;

    // Constraint positions. Fixed M per position for the individual/open/
    // periodic ensembles; u.a.r. positions (Binomial(LM, 1/L) per-position
    // counts) for the connected/ring/disconnected interpolation ensembles.
    switch (spec.boundary) {
        case Boundary::Individual:
        case Boundary::Open:
        case Boundary::Periodic:
            for (int z = 0; z < L; ++z)
                for (int c = 0; c < M; ++c) g.cons_pos.push_back(z);
            break;
        case Boundary::Ring:
        case Boundary::Connected:
        case Boundary::Disconnected: {
            const long total = static_cast<long>(L) * M;
            for (long c = 0; c < total; ++c)
                g.cons_pos.push_back(static_cast<std::int32_t>(rng.next_below(L)));
            break;
        }
    }

    const int nc = static_cast<int>(g.cons_pos.size());
    g.edge_var.reserve(static_cast<std::size_t>(nc) * K);
    if (spec.problem == Problem::KSAT) g.edge_neg.reserve(static_cast<std::size_t>(nc) * K);
    if (spec.problem == Problem::XORSAT) g.cons_parity.reserve(nc);

    for (int c = 0; c < nc; ++c) {
        const int z = g.cons_pos[c];
        for (int j = 0; j < K; ++j) {
            int v = -1;
            switch (spec.boundary) {
                case Boundary::Individual:
                    v = static_cast<int>(rng.next_below(N));
                    break;
                case Boundary::Open: {
                    const int k = static_cast<int>(rng.next_below(spec.w));
                    v = (z + k) * N + static_cast<int>(rng.next_below(N));
                    break;
                }
                case Boundary::Periodic:
                case Boundary::Ring: {
                    const int k = static_cast<int>(rng.next_below(spec.w));
                    v = ((z + k) % L) * N + static_cast<int>(rng.next_below(N));
                    break;
                }
                case Boundary::Connected:
                    v = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(L) * N));
                    break;
                case Boundary::Disconnected:
                    v = z * N + static_cast<int>(rng.next_below(N));
                    break;
            }
            g.edge_var.push_back(v);
            if (spec.problem == Problem::KSAT)
                g.edge_neg.push_back(static_cast<std::uint8_t>(rng.next_bool()));
        }
        if (spec.problem == Problem::XORSAT)
            g.cons_parity.push_back(static_cast<std::uint8_t>(rng.next_bool()));
    }

    g.build_adjacency();
    return g;
}

bool constraint_satisfied(const FactorGraph& g, int c, const Assignment& x) {
    const int K = g.degree_of_constraint();
    const int base = c * K;
    switch (g.spec.problem) {
        case Problem::KSAT:
            for (int j = 0; j < K; ++j) {
                const int lit = x[g.edge_var[base + j]] ^ g.edge_neg[base + j];
                if (lit) return true;
            }
            return false;
        case Problem::QCOL:
            return x[g.edge_var[base]] != x[g.edge_var[base + 1]];
        case Problem::XORSAT: {
            int s = 0;
            for (int j = 0; j < K; ++j) s ^= x[g.edge_var[base + j]];
            return s == g.cons_parity[c];
        }
    }
    return false;
}

long energy(const FactorGraph& g, const Assignment& x) {
    if (static_cast<int>(x.size()) != g.num_variables())
        throw std::invalid_argument("energy: assignment length mismatch");
    const int q = g.spec.alphabet_size();
    for (std::uint8_t v : x)
        if (v >= q) throw std::invalid_argument("energy: assignment value out of alphabet");
    long e = 0;
    for (int c = 0; c < g.num_constraints(); ++c)
        if (!constraint_satisfied(g, c, x)) ++e;
    return e;
}

void save_instance(const FactorGraph& g, std::ostream& out) {
    const ChainSpec& s = g.spec;
    const int kq = s.problem == Problem::QCOL ? s.Q : s.K;
    out << to_string(s.problem) << ' ' << kq << ' ' << s.N << ' '
        << s.constraints_per_position() << ' ' << s.L << ' ' << s.w << ' '
        << to_string(s.boundary) << ' ' << g.seed << '\n';
    const int K = g.degree_of_constraint();
    for (int c = 0; c < g.num_constraints(); ++c) {
        out << g.cons_pos[c];
        for (int j = 0; j < K; ++j) out << ' ' << g.edge_var[c * K + j];
        if (s.problem == Problem::KSAT)
            for (int j = 0; j < K; ++j) out << ' ' << int(g.edge_neg[c * K + j]);
        else if (s.problem == Problem::XORSAT)
            out << ' ' << int(g.cons_parity[c]);
        out << '\n';
    }
}

FactorGraph load_instance(std::istream& in) {
    std::string problem_s, boundary_s;
    int kq = 0, N = 0, M = 0, L = 0, w = 0;
    std::uint64_t seed = 0;
    if (!(in >> problem_s >> kq >> N >> M >> L >> w >> boundary_s >> seed))
        throw std::runtime_error("load_instance: bad header");

    FactorGraph g;
    ChainSpec& s = g.spec;
    s.problem = problem_from_string(problem_s);
    s.boundary = boundary_from_string(boundary_s);
    s.N = N;
    s.L = L;
    s.w = w;
    // alpha is reconstructed so that floor(alpha * N) == M holds exactly.
    s.alpha = (M + 0.5) / N;
    if (s.problem == Problem::QCOL) {
        s.Q = kq;
        s.K = 2;
    } else {
        s.K = kq;
    }
    g.seed = seed;

    const int K = g.degree_of_constraint();
    const long ncons = (s.boundary == Boundary::Individual) ? M : static_cast<long>(L) * M;
    for (long c = 0; c < ncons; ++c) {
        int pos = 0;
        if (!(in >> pos)) throw std::runtime_error("load_instance: truncated constraint list");
        g.cons_pos.push_back(pos);
        for (int j = 0; j < K; ++j) {
            int v = 0;
            if (!(in >> v)) throw std::runtime_error("load_instance: truncated edge list");
            g.edge_var.push_back(v);
        }
        if (s.problem == Problem::KSAT) {
            for (int j = 0; j < K; ++j) {
                int d = 0;
                if (!(in >> d)) throw std::runtime_error("load_instance: truncated payload");
                g.edge_neg.push_back(static_cast<std::uint8_t>(d));
            }
        } else if (s.problem == Problem::XORSAT) {
            int b = 0;
            if (!(in >> b)) throw std::runtime_error("load_instance: truncated payload");
            g.cons_parity.push_back(static_cast<std::uint8_t>(b));
        }
    }
    g.build_adjacency();
    return g;
}

void save_instance_file(const FactorGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for write: " + path);
    save_instance(g, out);
}

FactorGraph load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for read: " + path);
    return load_instance(in);
}

} // namespace cspchain
