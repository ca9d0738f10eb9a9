#ifndef DGB_REDUCTION_HPP
#define DGB_REDUCTION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <dgb/error.hpp>
#include <dgb/monomial.hpp>
#include <dgb/polynomial.hpp>

namespace dgb
{

/// Restricts which shifted basis elements s.g may act as divisors.
/// max_shift_degree: deg(s) <= D (D = 0 gives classical reduction by G).
/// max_order: deg(s) + ord(g) <= D, the truncated setting.
struct ReductionScope {
    std::optional<std::uint64_t> max_shift_degree;
    std::optional<std::int64_t> max_order;

    static ReductionScope classical()
    {
        return {0, std::nullopt};
    }

    bool admits(const Shift &s, const Polynomial &g) const
    {
        if (max_shift_degree && s.degree() > *max_shift_degree) {
            return false;
        }
        if (max_order && !ord_poly(g).plus(s.degree()).at_most(*max_order)) {
            return false;
        }
        return true;
    }
};

/// q * (shift . lm(G[basis_index])) == target.
struct DivisorHit {
    std::size_t basis_index = 0;
    Shift shift;
    Monomial cofactor;
};

/// One head-reduction step h := h - coef * cofactor * (shift . G[basis_index]).
struct ReductionStep {
    FieldElement coef;
    Monomial cofactor;
    std::size_t basis_index = 0;
    Shift shift;
};

/// f = remainder + sum of the steps; remainder is taken before any monic
/// normalization.
struct Certificate {
    std::vector<ReductionStep> steps;
    std::optional<Polynomial> remainder;
};

namespace detail
{

inline void check_basis(const Polynomial &f, const std::vector<Polynomial> &G)
{
    for (const auto &g : G) {
        if (g.is_zero()) {
            throw domain_error("basis contains the zero polynomial");
        }
        if (!same_ring(f, g)) {
            throw structural_error("basis element from a different ring");
        }
    }
}

} // namespace detail

/// Searches Sigma.G for a divisor of target. Ties: lowest basis index, then
/// the smallest shift under the shift ordering.
inline std::optional<DivisorHit> find_divisor(const Monomial &target, const std::vector<Polynomial> &G,
                                              const ReductionScope &scope = {})
{
    for (std::size_t k = 0; k < G.size(); ++k) {
        const Polynomial &g = G[k];
        const OrderingSpec &o = g.order();
        const Monomial &lg = g.lm();
        if (lg.is_one()) {
            const Shift id = Shift::identity(g.ring()->rank());
            if (scope.admits(id, g)) {
                return DivisorHit{k, id, target};
            }
            continue;
        }
        // Any valid shift moves the largest variable of lm(g) onto some
        // variable of the target with the same symbol.
        const Variable &anchor = lg.largest_variable();
        std::optional<Shift> best;
        for (const auto &f : target.factors()) {
            if (f.var.symbol != anchor.symbol || !divides(anchor.shift, f.var.shift)) {
                continue;
            }
            Shift s = div(f.var.shift, anchor.shift);
            if (best && o.compare_shift(s, *best) >= 0) {
                continue;
            }
            if (!scope.admits(s, g)) {
                continue;
            }
            if (divides(o, shift_monomial(s, lg), target)) {
                best = s;
            }
        }
        if (best) {
            Monomial q = div(o, target, shift_monomial(*best, lg));
            return DivisorHit{k, *best, std::move(q)};
        }
    }
    return std::nullopt;
}

namespace detail
{

// Reduces terms from the top down; with head_only, stops at the first
// irreducible term.
inline Polynomial reduce_impl(const Polynomial &f, const std::vector<Polynomial> &G, const ReductionScope &scope,
                              Certificate *cert, bool head_only)
{
    check_basis(f, G);
    Polynomial h = f;
    std::size_t idx = 0;
    while (idx < h.size()) {
        const Term &t = h.terms()[idx];
        auto hit = find_divisor(t.mono, G, scope);
        if (!hit) {
            if (head_only) {
                break;
            }
            ++idx;
            continue;
        }
        const Polynomial &g = G[hit->basis_index];
        FieldElement c = t.coef / g.lc();
        if (cert) {
            cert->steps.push_back({c, hit->cofactor, hit->basis_index, hit->shift});
        }
        h = combine(h, -c, hit->cofactor, &hit->shift, g);
    }
    if (cert) {
        cert->remainder = h;
    }
    return h;
}

} // namespace detail

/// Head reduction modulo Sigma.G: the result is zero or has a leading
/// monomial outside lm(Sigma.G).
inline Polynomial reduce(const Polynomial &f, const std::vector<Polynomial> &G, const ReductionScope &scope = {},
                         Certificate *cert = nullptr)
{
    return detail::reduce_impl(f, G, scope, cert, true);
}

/// Full reduction: no term of the result is divisible by lm(Sigma.G); the
/// result is monic unless zero.
inline Polynomial reduce_full(const Polynomial &f, const std::vector<Polynomial> &G, const ReductionScope &scope = {},
                              Certificate *cert = nullptr)
{
    Polynomial h = detail::reduce_impl(f, G, scope, cert, false);
    return h.is_zero() ? h : h.monic();
}

/// Full reduction without the final monic normalization.
inline Polynomial normal_form(const Polynomial &f, const std::vector<Polynomial> &G, const ReductionScope &scope = {},
                              Certificate *cert = nullptr)
{
    return detail::reduce_impl(f, G, scope, cert, false);
}

/// remainder + sum coef * cofactor * (shift . G[i]); equals the reduced input
/// when the certificate is sound.
inline Polynomial replay(const Certificate &cert, const std::vector<Polynomial> &G)
{
    if (!cert.remainder) {
        throw domain_error("certificate without remainder");
    }
    Polynomial acc = *cert.remainder;
    for (const auto &st : cert.steps) {
        acc = combine(acc, st.coef, st.cofactor, &st.shift, G.at(st.basis_index));
    }
    return acc;
}

} // namespace dgb

#endif
