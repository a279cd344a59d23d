#pragma once
// Brute-force ground-state oracles on tiny instances, desk-scale checks of
// the open-vs-periodic comparison bound, and exhaustive enumeration of
// zero-energy min-sum fixed points.

#include <cstdint>
#include <vector>

#include "cspchain/ensembles.hpp"

namespace cspchain {

struct GroundStateReport {
    long min_energy = 0;
    std::uint64_t minimizer_count = 0;
    std::uint64_t cluster_count = 0;   // single-flip Hamming adjacency
    std::uint64_t enumeration_size = 0;
    bool clusters_computed = false;    // false when minimizers exceed the cluster budget
};

// Exhaustive enumeration over |X|^n assignments. Refuses when the
// enumeration exceeds `budget` (default 2^26).
GroundStateReport brute_force(const FactorGraph& g,
                              std::uint64_t budget = 1ull << 26,
                              std::uint64_t cluster_budget = 1ull << 22);

// Exact minimum by transfer-matrix dynamic programming along the chain.
// Valid for Individual, Open, Periodic, Ring and Disconnected instances
// (constraints span at most w consecutive positions); throws for Connected
// or when the DP state space exceeds `state_budget`.
long chain_min_energy(const FactorGraph& g, std::uint64_t state_budget = 1ull << 15);

// Cheapest applicable exact minimizer (DP when valid, else enumeration).
long exact_min_energy(const FactorGraph& g);

struct EnergyEstimate {
    double e = 0.0;       // mean ground-state energy per node (1/(NL) E[min H])
    double stderr_ = 0.0;
    int instances = 0;
};

EnergyEstimate estimate_e(const ChainSpec& spec, int instances, std::uint64_t seed);

struct Theorem1Row {
    double alpha = 0.0;
    EnergyEstimate open, periodic;
    double bound = 0.0;      // alpha * w / L
    double margin = 0.0;     // bound + 4 sigma - |difference|
    bool pass = false;
};

struct Theorem1Report {
    std::vector<Theorem1Row> rows;
    bool all_pass = true;
};

// Checks |e_open - e_per| <= alpha w / L within 4 combined standard errors
// on each grid point.
Theorem1Report theorem1_check(const ChainSpec& base, const std::vector<double>& alphas,
                              int instances, std::uint64_t seed);

// Counts message configurations (binary alphabet) that solve both min-sum
// equations with zero Bethe energy. Exhaustive over the 3^E var-to-check
// configurations; refuses when the graph has more than `max_edges` edges.
std::uint64_t enumerate_minsum_states(const FactorGraph& g, int max_edges = 12);

} // namespace cspchain
