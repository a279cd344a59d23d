#pragma once
// Graph ensembles for random K-SAT, Q-coloring and K-XORSAT: the individual
// ensemble, spatially coupled chains (open and periodic boundaries), and the
// interpolation ensembles (connected, ring, disconnected).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cspchain/rng.hpp"

namespace cspchain {

enum class Problem { KSAT, QCOL, XORSAT };
enum class Boundary { Individual, Open, Periodic, Ring, Connected, Disconnected };

std::string to_string(Problem p);
std::string to_string(Boundary b);
Problem problem_from_string(const std::string& s);
Boundary boundary_from_string(const std::string& s);

// Parameters of a (possibly coupled) ensemble. Positions are stored 0-based
// internally; the chain coordinate z in {-L/2+1, ..., L/2} appears only in
// reports (paper_z below).
struct ChainSpec {
    int N = 0;            // variables per position
    double alpha = 0.0;   // constraint density (per position)
    int K = 3;            // constraint degree (2 for QCOL)
    int Q = 3;            // colors (QCOL only)
    int w = 1;            // coupling window
    int L = 1;            // chain length
    Boundary boundary = Boundary::Individual;
    Problem problem = Problem::KSAT;

    int constraints_per_position() const { return static_cast<int>(alpha * N); }
    int variable_positions() const { return boundary == Boundary::Open ? L + w - 1 : L; }
    int num_variables() const { return N * variable_positions(); }
    int alphabet_size() const { return problem == Problem::QCOL ? Q : 2; }

    // Throws std::invalid_argument when the spec is malformed (L odd for a
    // coupled chain, K < 2, QCOL with K != 2, ...).
    void validate() const;
};

inline int paper_z(int pos0, int L) { return pos0 - L / 2 + 1; }

// A sampled instance. Constraints are stored as K consecutive entries in the
// flat edge arrays; variables are indexed position-major (pos * N + i).
struct FactorGraph {
    ChainSpec spec;
    std::uint64_t seed = 0;

    std::vector<std::int32_t> cons_pos;     // 0-based position per constraint
    std::vector<std::uint8_t> cons_parity;  // XORSAT parity bit per constraint
    std::vector<std::int32_t> edge_var;     // variable id per edge slot
    std::vector<std::uint8_t> edge_neg;     // KSAT negation bit per edge slot

    // CSR adjacency: edge slots incident to each variable.
    std::vector<std::int32_t> var_offset;
    std::vector<std::int32_t> var_edges;

    int num_constraints() const { return static_cast<int>(cons_pos.size()); }
    int num_edges() const { return static_cast<int>(edge_var.size()); }
    int num_variables() const { return static_cast<int>(var_offset.size()) - 1; }
    int degree_of_constraint() const { return spec.problem == Problem::QCOL ? 2 : spec.K; }
    int edge_constraint(int e) const { return e / degree_of_constraint(); }
    int var_position(int v) const { return v / spec.N; }
    int var_degree(int v) const { return var_offset[v + 1] - var_offset[v]; }

    void build_adjacency();
};

using Assignment = std::vector<std::uint8_t>;

// Samples an instance; pure function of (spec, seed).
FactorGraph sample(const ChainSpec& spec, std::uint64_t seed);

// Whether one constraint is satisfied by the assignment.
bool constraint_satisfied(const FactorGraph& g, int c, const Assignment& x);

// Number of unsatisfied constraints. Throws on alphabet/length mismatch.
long energy(const FactorGraph& g, const Assignment& x);

// Line-oriented instance format; bit-exact round trip.
//   header: PROBLEM K/Q N M L w BOUNDARY SEED
//   per constraint: pos v_1 ... v_K payload
void save_instance(const FactorGraph& g, std::ostream& out);
FactorGraph load_instance(std::istream& in);
void save_instance_file(const FactorGraph& g, const std::string& path);
FactorGraph load_instance_file(const std::string& path);

} // namespace cspchain
