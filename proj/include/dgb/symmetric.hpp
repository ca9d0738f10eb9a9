#ifndef DGB_SYMMETRIC_HPP
#define DGB_SYMMETRIC_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <dgb/completion.hpp>
#include <dgb/error.hpp>
#include <dgb/io.hpp>
#include <dgb/permutation.hpp>
#include <dgb/reduction.hpp>
#include <dgb/ring.hpp>

namespace dgb
{

/// Rank-1 ring with one symbol per cycle of gamma, lex on both blocks.
inline RingPtr symmetric_ring(const PermutationAction &gamma)
{
    RingSignature sig{1, gamma.default_symbol_names(), {}};
    auto spec = OrderingSpec::standard(1, sig.symbols.size(), OrderKind::lex, OrderKind::lex);
    return Ring::make(std::move(sig), std::move(spec));
}

/// Generators together with the cycle relations x_i(d_i) - x_i(0).
struct SymmetricIdeal {
    RingPtr ring;
    PermutationAction gamma;
    std::vector<Polynomial> generators;
    std::vector<Polynomial> relations;

    std::vector<Polynomial> all() const
    {
        std::vector<Polynomial> out = generators;
        out.insert(out.end(), relations.begin(), relations.end());
        return out;
    }
};

inline std::vector<Polynomial> cycle_relations(const RingPtr &ring, const PermutationAction &gamma)
{
    std::vector<Polynomial> out;
    const auto lengths = gamma.cycle_lengths();
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        const auto sym = static_cast<std::uint32_t>(i);
        Variable top{sym, Shift{static_cast<Shift::exponent_type>(lengths[i])}};
        Variable base{sym, Shift::identity(1)};
        out.push_back(Polynomial::variable(ring, top) - Polynomial::variable(ring, base));
    }
    return out;
}

inline SymmetricIdeal symmetric_setup(const PermutationAction &gamma, const std::vector<Polynomial> &generators)
{
    SymmetricIdeal L{nullptr, gamma, {}, {}};
    L.ring = generators.empty() ? symmetric_ring(gamma) : generators.front().ring();
    if (L.ring->rank() != 1 || L.ring->num_symbols() != gamma.num_cycles()) {
        throw structural_error("ring must have one shift generator and one symbol per cycle");
    }
    const auto lengths = gamma.cycle_lengths();
    for (const auto &g : generators) {
        if (g.ring() != L.ring) {
            throw structural_error("generators from different rings");
        }
        for (const auto &t : g.terms()) {
            for (const auto &f : t.mono.factors()) {
                if (f.var.shift[0] >= lengths[f.var.symbol]) {
                    throw structural_error("variable " + to_string(*L.ring, f.var) + " lies outside the cycle of length "
                                           + std::to_string(lengths[f.var.symbol]));
                }
            }
        }
        if (!g.is_zero()) {
            L.generators.push_back(g);
        }
    }
    L.relations = cycle_relations(L.ring, gamma);
    return L;
}

/// Completion of generators and cycle relations; returns the minimal,
/// interreduced elements other than the relations.
inline SigmaBasis groebner_gamma_basis(const SymmetricIdeal &L, const CompletionOptions &opts = {})
{
    SigmaBasis full = sigma_gbasis(L.all(), opts);
    SigmaBasis out = full;
    out.elements.clear();
    if (full.status != BasisStatus::complete && full.status != BasisStatus::complete_up_to_order) {
        out.elements = full.elements;
        return out;
    }
    std::vector<Polynomial> G = minimalize(full.elements);
    G = interreduce(G);
    for (auto &g : G) {
        bool is_relation = false;
        for (const auto &f : L.relations) {
            is_relation = is_relation || g == f;
        }
        if (!is_relation) {
            out.elements.push_back(std::move(g));
        }
    }
    return out;
}

inline SigmaBasis groebner_gamma_basis(const PermutationAction &gamma, const std::vector<Polynomial> &generators,
                                       const CompletionOptions &opts = {})
{
    return groebner_gamma_basis(symmetric_setup(gamma, generators), opts);
}

/// Usual Groebner basis of the ideal in K[x_i(k) : k < d_i]: all shifted
/// copies of the Gamma-basis, wrapped through the cycle relations and
/// minimalized classically. Interreduced classically unless only_minimal.
inline std::vector<Polynomial> expand_classical_basis(const std::vector<Polynomial> &gamma_basis,
                                                      const PermutationAction &gamma, bool only_minimal = false)
{
    if (gamma_basis.empty()) {
        return {};
    }
    const RingPtr ring = gamma_basis.front().ring();
    const auto relations = cycle_relations(ring, gamma);
    std::size_t period = 1;
    for (std::size_t l : gamma.cycle_lengths()) {
        period = std::lcm(period, l);
    }
    std::vector<Polynomial> copies;
    for (const auto &g : gamma_basis) {
        for (std::size_t k = 0; k < period; ++k) {
            Polynomial h = normal_form(shift_polynomial(Shift{static_cast<Shift::exponent_type>(k)}, g), relations);
            if (h.is_zero()) {
                continue;
            }
            h = h.monic();
            bool seen = false;
            for (const auto &c : copies) {
                seen = seen || c == h;
            }
            if (!seen) {
                copies.push_back(std::move(h));
            }
        }
    }
    const ReductionScope classical = ReductionScope::classical();
    std::vector<Polynomial> out = minimalize(copies, classical);
    if (!only_minimal) {
        out = interreduce(out, classical);
    }
    return out;
}

} // namespace dgb

#endif
