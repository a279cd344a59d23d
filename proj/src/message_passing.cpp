#include "cspchain/message_passing.hpp"

#include <algorithm>
#include <stdexcept>

namespace cspchain {

int WarningMessage::nonzero_count(int q) const {
    int n = 0;
    for (int x = 0; x < q; ++x) n += entry(x);
    return n;
}

bool PsiDescriptor::satisfied(std::span<const std::uint8_t> xs) const {
    switch (problem) {
        case Problem::KSAT:
            for (int j = 0; j < arity; ++j)
                if (xs[j] ^ neg[j]) return true;
            return false;
        case Problem::QCOL:
            return xs[0] != xs[1];
        case Problem::XORSAT: {
            int s = 0;
            for (int j = 0; j < arity; ++j) s ^= xs[j];
            return s == parity;
        }
    }
    return false;
}

PsiDescriptor constraint_descriptor(const FactorGraph& g, int c) {
    PsiDescriptor d;
    d.problem = g.spec.problem;
    d.arity = g.degree_of_constraint();
    if (d.problem == Problem::KSAT) {
        d.neg.assign(g.edge_neg.begin() + static_cast<long>(c) * d.arity,
                     g.edge_neg.begin() + static_cast<long>(c + 1) * d.arity);
    } else if (d.problem == Problem::XORSAT) {
        d.parity = g.cons_parity[c];
    }
    return d;
}

WarningMessage var_update(std::span<const WarningMessage> incoming, int q) {
    int sum[32] = {0};
    for (const WarningMessage& m : incoming)
        for (int x = 0; x < q; ++x) sum[x] += m.entry(x);
    int c = sum[0];
    for (int x = 1; x < q; ++x) c = std::min(c, sum[x]);
    WarningMessage out;
    for (int x = 0; x < q; ++x)
        if (sum[x] - c >= 1) out.bits |= 1u << x;
    return out;
}

WarningMessage check_update(std::span<const WarningMessage> incoming, int q,
                            const PsiDescriptor& psi, int self_slot) {
    const int k = psi.arity;
    if (static_cast<int>(incoming.size()) != k - 1)
        throw std::invalid_argument("check_update: need K-1 incoming messages");

    int best[32];
    std::fill(best, best + q, 1 << 20);
    std::vector<std::uint8_t> xs(k, 0);
    // Enumerate the K-1 other variables (odometer); q^(K-1) small by design.
    std::vector<std::uint8_t> rest(k - 1, 0);
    for (;;) {
        int cost_rest = 0;
        for (int j = 0; j < k - 1; ++j) cost_rest += incoming[j].entry(rest[j]);
        for (int j = 0, slot = 0; j < k; ++j)
            if (j != self_slot) xs[j] = rest[slot++];
        for (int xi = 0; xi < q; ++xi) {
            xs[self_slot] = static_cast<std::uint8_t>(xi);
            const int v = (psi.satisfied(xs) ? 0 : 1) + cost_rest;
            best[xi] = std::min(best[xi], v);
        }
        int j = 0;
        for (; j < k - 1; ++j) {
            if (++rest[j] < q) break;
            rest[j] = 0;
        }
        if (j == k - 1) break;
    }

    int c = best[0];
    for (int x = 1; x < q; ++x) c = std::min(c, best[x]);
    WarningMessage out;
    for (int x = 0; x < q; ++x)
        if (best[x] - c >= 1) out.bits |= 1u << x;
    return out;
}

namespace {

// min over full constraint assignments of (1 - psi) + sum_slots E_slot.
int constraint_term(const FactorGraph& g, int c, const MessageSet& msgs, int q) {
    const PsiDescriptor psi = constraint_descriptor(g, c);
    const int k = psi.arity;
    const int base = c * k;
    std::vector<std::uint8_t> xs(k, 0);
    int best = 1 << 20;
    for (;;) {
        int v = psi.satisfied(xs) ? 0 : 1;
        for (int j = 0; j < k; ++j) v += msgs.var_to_check[base + j].entry(xs[j]);
        best = std::min(best, v);
        int j = 0;
        for (; j < k; ++j) {
            if (++xs[j] < q) break;
            xs[j] = 0;
        }
        if (j == k) break;
    }
    return best;
}

} // namespace

double bethe_energy(const FactorGraph& g, const MessageSet& msgs) {
    const int ne = g.num_edges();
    if (static_cast<int>(msgs.var_to_check.size()) != ne ||
        static_cast<int>(msgs.check_to_var.size()) != ne)
        throw std::invalid_argument("bethe_energy: one message per directed edge required");
    const int q = g.spec.alphabet_size();

    long total = 0;
    for (int c = 0; c < g.num_constraints(); ++c)
        total += constraint_term(g, c, msgs, q);
    for (int v = 0; v < g.num_variables(); ++v) {
        int best = 1 << 20;
        for (int x = 0; x < q; ++x) {
            int s = 0;
            for (int a = g.var_offset[v]; a < g.var_offset[v + 1]; ++a)
                s += msgs.check_to_var[g.var_edges[a]].entry(x);
            best = std::min(best, s);
        }
        total += best;
    }
    for (int e = 0; e < ne; ++e) {
        int best = 1 << 20;
        for (int x = 0; x < q; ++x)
            best = std::min(best, msgs.var_to_check[e].entry(x) +
                                      msgs.check_to_var[e].entry(x));
        total -= best;
    }
    return static_cast<double>(total);
}

MinSumResult run_minsum(const FactorGraph& g, int max_iters) {
    const int ne = g.num_edges();
    const int q = g.spec.alphabet_size();
    const int k = g.degree_of_constraint();

    MinSumResult r;
    r.messages.var_to_check.assign(ne, WarningMessage{});
    r.messages.check_to_var.assign(ne, WarningMessage{});

    std::vector<PsiDescriptor> psis;
    psis.reserve(g.num_constraints());
    for (int c = 0; c < g.num_constraints(); ++c)
        psis.push_back(constraint_descriptor(g, c));

    MessageSet next = r.messages;
    std::vector<WarningMessage> incoming;
    for (int it = 1; it <= max_iters; ++it) {
        // Fully synchronous: generation t feeds both update families.
        for (int c = 0; c < g.num_constraints(); ++c) {
            for (int slot = 0; slot < k; ++slot) {
                incoming.clear();
                for (int s = 0; s < k; ++s)
                    if (s != slot) incoming.push_back(r.messages.var_to_check[c * k + s]);
                next.check_to_var[c * k + slot] = check_update(incoming, q, psis[c], slot);
            }
        }
        for (int v = 0; v < g.num_variables(); ++v) {
            for (int a = g.var_offset[v]; a < g.var_offset[v + 1]; ++a) {
                const int e = g.var_edges[a];
                incoming.clear();
                for (int b = g.var_offset[v]; b < g.var_offset[v + 1]; ++b)
                    if (b != a) incoming.push_back(r.messages.check_to_var[g.var_edges[b]]);
                next.var_to_check[e] = var_update(incoming, q);
            }
        }
        r.iterations = it;
        if (next.var_to_check == r.messages.var_to_check &&
            next.check_to_var == r.messages.check_to_var) {
            r.converged = true;
            return r;
        }
        std::swap(r.messages, next);
    }
    return r;
}

} // namespace cspchain
