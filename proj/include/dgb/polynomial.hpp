#ifndef DGB_POLYNOMIAL_HPP
#define DGB_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <dgb/error.hpp>
#include <dgb/field.hpp>
#include <dgb/monomial.hpp>
#include <dgb/ring.hpp>

namespace dgb
{

struct Term {
    FieldElement coef;
    Monomial mono;

    friend bool operator==(const Term &, const Term &) = default;
};

/// Sparse difference polynomial: nonzero terms in strictly decreasing order
/// under the ring's monomial ordering.
class Polynomial
{
public:
    explicit Polynomial(RingPtr ring) : m_ring(std::move(ring))
    {
        if (!m_ring) {
            throw structural_error("polynomial without a ring");
        }
    }

    // Arbitrary terms; sorted and combined.
    Polynomial(RingPtr ring, std::vector<Term> terms) : Polynomial(std::move(ring))
    {
        const auto &o = m_ring->order();
        std::sort(terms.begin(), terms.end(),
                  [&](const Term &a, const Term &b) { return compare_monomials(o, a.mono, b.mono) > 0; });
        for (auto &t : terms) {
            if (!m_terms.empty() && m_terms.back().mono == t.mono) {
                m_terms.back().coef += t.coef;
                if (m_terms.back().coef.is_zero()) {
                    m_terms.pop_back();
                }
            } else if (!t.coef.is_zero()) {
                m_terms.push_back(std::move(t));
            }
        }
    }

    static Polynomial constant(RingPtr ring, const FieldElement &c)
    {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) {
            p.m_terms.push_back({c, Monomial()});
        }
        return p;
    }

    static Polynomial monomial(RingPtr ring, const Monomial &m, const FieldElement &c = FieldElement(1))
    {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) {
            p.m_terms.push_back({c, m});
        }
        return p;
    }

    static Polynomial variable(RingPtr ring, const Variable &v)
    {
        return monomial(std::move(ring), Monomial::variable(v));
    }

    // Terms given in strictly decreasing order with nonzero coefficients.
    static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms)
    {
        Polynomial p(std::move(ring));
        p.m_terms = std::move(terms);
        return p;
    }

    const RingPtr &ring() const noexcept
    {
        return m_ring;
    }
    const OrderingSpec &order() const noexcept
    {
        return m_ring->order();
    }
    const std::vector<Term> &terms() const noexcept
    {
        return m_terms;
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    bool is_constant() const noexcept
    {
        return m_terms.empty() || (m_terms.size() == 1 && m_terms[0].mono.is_one());
    }

    const Monomial &lm() const
    {
        require_nonzero();
        return m_terms.front().mono;
    }
    const FieldElement &lc() const
    {
        require_nonzero();
        return m_terms.front().coef;
    }
    const Term &lt() const
    {
        require_nonzero();
        return m_terms.front();
    }

    // Equality requires equal rings and identical terms.
    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return same_ring(a, b) && a.m_terms == b.m_terms;
    }

    friend bool same_ring(const Polynomial &a, const Polynomial &b)
    {
        return a.m_ring == b.m_ring || *a.m_ring == *b.m_ring;
    }

    Polynomial operator-() const
    {
        Polynomial r(*this);
        for (auto &t : r.m_terms) {
            t.coef = -t.coef;
        }
        return r;
    }

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b)
    {
        return combine(a, FieldElement(1), Monomial(), nullptr, b);
    }

    friend Polynomial operator-(const Polynomial &a, const Polynomial &b)
    {
        return combine(a, FieldElement(-1), Monomial(), nullptr, b);
    }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        check_rings(a, b);
        const Polynomial &small = a.size() <= b.size() ? a : b;
        const Polynomial &large = a.size() <= b.size() ? b : a;
        Polynomial r(a.m_ring);
        for (const auto &t : small.m_terms) {
            r = combine(r, t.coef, t.mono, nullptr, large);
        }
        return r;
    }

    Polynomial scaled(const FieldElement &c) const
    {
        if (c.is_zero()) {
            return Polynomial(m_ring);
        }
        Polynomial r(*this);
        for (auto &t : r.m_terms) {
            t.coef *= c;
        }
        return r;
    }

    // c * m * f; the ordering is multiplicative, so term order is kept.
    Polynomial times_term(const FieldElement &c, const Monomial &m) const
    {
        if (c.is_zero()) {
            return Polynomial(m_ring);
        }
        Polynomial r(m_ring);
        r.m_terms.reserve(m_terms.size());
        for (const auto &t : m_terms) {
            r.m_terms.push_back({t.coef * c, dgb::mul(order(), t.mono, m)});
        }
        return r;
    }

    /// a + c * m * (s . b), computed in one merge. s may be null for the
    /// identity shift.
    friend Polynomial combine(const Polynomial &a, const FieldElement &c, const Monomial &m, const Shift *s,
                              const Polynomial &b)
    {
        check_rings(a, b);
        const auto &o = a.order();
        Polynomial r(a.m_ring);
        if (c.is_zero() || b.is_zero()) {
            r.m_terms = a.m_terms;
            return r;
        }
        r.m_terms.reserve(a.size() + b.size());
        const bool plain = m.is_one() && s == nullptr;
        auto scaled_term = [&](const Term &t) {
            if (plain) {
                return Term{t.coef * c, t.mono};
            }
            Monomial tm = s ? shift_monomial(*s, t.mono) : t.mono;
            return Term{t.coef * c, m.is_one() ? std::move(tm) : dgb::mul(o, tm, m)};
        };
        std::size_t i = 0, j = 0;
        std::optional<Term> pending;
        while (i < a.size() || j < b.size()) {
            if (j < b.size() && !pending) {
                pending = scaled_term(b.m_terms[j]);
            }
            if (!pending) {
                r.m_terms.push_back(a.m_terms[i++]);
                continue;
            }
            if (i == a.size()) {
                r.m_terms.push_back(std::move(*pending));
                pending.reset();
                ++j;
                continue;
            }
            auto cmp = compare_monomials(o, a.m_terms[i].mono, pending->mono);
            if (cmp > 0) {
                r.m_terms.push_back(a.m_terms[i++]);
            } else if (cmp < 0) {
                r.m_terms.push_back(std::move(*pending));
                pending.reset();
                ++j;
            } else {
                FieldElement sum = a.m_terms[i].coef + pending->coef;
                if (!sum.is_zero()) {
                    r.m_terms.push_back({std::move(sum), a.m_terms[i].mono});
                }
                pending.reset();
                ++i;
                ++j;
            }
        }
        return r;
    }

    // Divide by the leading coefficient.
    Polynomial monic() const
    {
        if (is_zero()) {
            throw domain_error("cannot normalize the zero polynomial");
        }
        if (lc().is_one()) {
            return *this;
        }
        return scaled(lc().inverse());
    }

    bool is_monic() const
    {
        return !is_zero() && lc().is_one();
    }

private:
    void require_nonzero() const
    {
        if (m_terms.empty()) {
            throw domain_error("leading term of the zero polynomial");
        }
    }

    static void check_rings(const Polynomial &a, const Polynomial &b)
    {
        if (!same_ring(a, b)) {
            throw structural_error("polynomials belong to different rings");
        }
    }

    RingPtr m_ring;
    std::vector<Term> m_terms;
};

inline Polynomial normalize_monic(const Polynomial &f)
{
    return f.monic();
}

inline Polynomial shift_polynomial(const Shift &s, const Polynomial &f)
{
    if (s.rank() != f.ring()->rank()) {
        throw structural_error("shift rank does not match the ring");
    }
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto &t : f.terms()) {
        terms.push_back({t.coef, shift_monomial(s, t.mono)});
    }
    return Polynomial::from_sorted(f.ring(), std::move(terms));
}

inline OrderValue ord_poly(const Polynomial &f) noexcept
{
    OrderValue r = OrderValue::neg_inf();
    for (const auto &t : f.terms()) {
        r = max(r, ord(t.mono));
    }
    return r;
}

inline bool is_ord_homogeneous(const Polynomial &f) noexcept
{
    if (f.is_zero()) {
        return true;
    }
    const OrderValue first = ord(f.terms().front().mono);
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term &t) { return ord(t.mono) == first; });
}

/// (l / lt f) f - (l / lt g) g with l = lcm(lm f, lm g).
inline Polynomial spoly(const Polynomial &f, const Polynomial &g)
{
    if (f.is_zero() || g.is_zero()) {
        throw domain_error("S-polynomial of the zero polynomial");
    }
    const auto &o = f.order();
    const Monomial l = monomial_lcm(o, f.lm(), g.lm());
    Polynomial a = f.times_term(f.lc().inverse(), div(o, l, f.lm()));
    return combine(a, -g.lc().inverse(), div(o, l, g.lm()), nullptr, g);
}

/// spoly(s.f, t.g) without materializing the shifted polynomials.
inline Polynomial shifted_spoly(const Shift &s, const Polynomial &f, const Shift &t, const Polynomial &g)
{
    if (f.is_zero() || g.is_zero()) {
        throw domain_error("S-polynomial of the zero polynomial");
    }
    const auto &o = f.order();
    const Monomial lf = shift_monomial(s, f.lm());
    const Monomial lg = shift_monomial(t, g.lm());
    const Monomial l = monomial_lcm(o, lf, lg);
    Polynomial zero(f.ring());
    Polynomial a = combine(zero, f.lc().inverse(), div(o, l, lf), &s, f);
    return combine(a, -g.lc().inverse(), div(o, l, lg), &t, g);
}

} // namespace dgb

#endif
