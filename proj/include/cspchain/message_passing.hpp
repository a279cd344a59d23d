#pragma once
// Instance-level warning (min-sum) propagation and the Bethe energy
// functional. Exact on trees; the oracle module cross-checks both claims.

#include <cstdint>
#include <span>
#include <vector>

#include "cspchain/ensembles.hpp"

namespace cspchain {

// Energy-cost message over the alphabet {0,...,q-1}: entries in {0,1},
// min-normalized (at least one zero entry). Stored as a bit mask.
struct WarningMessage {
    std::uint32_t bits = 0;

    int entry(int x) const { return (bits >> x) & 1u; }
    bool operator==(const WarningMessage&) const = default;
    bool min_normalized(int q) const { return bits != ((1u << q) - 1u); }
    int nonzero_count(int q) const;
};

// Evaluates one constraint's psi on small assignments.
struct PsiDescriptor {
    Problem problem = Problem::KSAT;
    int arity = 0;
    std::vector<std::uint8_t> neg;  // KSAT literal signs
    std::uint8_t parity = 0;        // XORSAT

    bool satisfied(std::span<const std::uint8_t> xs) const;
};

PsiDescriptor constraint_descriptor(const FactorGraph& g, int c);

// out(x) = min{1, sum_b in_b(x) - C}, C restoring min-normalization.
WarningMessage var_update(std::span<const WarningMessage> incoming, int q);

// out(x) = min over the other K-1 variables of {(1 - psi) + sum_j in_j(x_j)},
// min-normalized and capped at 1. `self_slot` marks the receiving variable's
// slot in the constraint. Requires |incoming| = arity - 1.
WarningMessage check_update(std::span<const WarningMessage> incoming, int q,
                            const PsiDescriptor& psi, int self_slot);

// One message per directed edge, indexed by the graph's flat edge slots.
struct MessageSet {
    std::vector<WarningMessage> var_to_check;
    std::vector<WarningMessage> check_to_var;
};

// Bethe energy functional evaluated on a full message set.
double bethe_energy(const FactorGraph& g, const MessageSet& msgs);

struct MinSumResult {
    MessageSet messages;
    bool converged = false;
    int iterations = 0;
};

// Synchronous iteration from the all-zero initialization until the message
// set is unchanged or max_iters is reached.
MinSumResult run_minsum(const FactorGraph& g, int max_iters = 1000);

} // namespace cspchain
