#ifndef DGB_FIELD_HPP
#define DGB_FIELD_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <dgb/error.hpp>

namespace dgb
{

using rational = mpq_class;

/// Monomial in the parameters: sparse list of (parameter index, exponent)
/// sorted by increasing index, no zero exponents.
using ParamMonomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

namespace detail
{

// Lex order on parameter monomials with parameter 0 the most significant.
inline int compare_param_monomials(const ParamMonomial &a, const ParamMonomial &b) noexcept
{
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) {
            return a[i].first < b[i].first ? 1 : -1;
        }
        if (a[i].second != b[i].second) {
            return a[i].second > b[i].second ? 1 : -1;
        }
    }
    if (i < a.size()) {
        return 1;
    }
    if (i < b.size()) {
        return -1;
    }
    return 0;
}

inline ParamMonomial mul_param_monomials(const ParamMonomial &a, const ParamMonomial &b)
{
    ParamMonomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

// b | a; on success writes a / b into out.
inline bool div_param_monomials(const ParamMonomial &a, const ParamMonomial &b, ParamMonomial &out)
{
    out.clear();
    std::size_t i = 0;
    for (const auto &[v, e] : b) {
        while (i < a.size() && a[i].first < v) {
            out.push_back(a[i++]);
        }
        if (i == a.size() || a[i].first != v || a[i].second < e) {
            return false;
        }
        if (a[i].second > e) {
            out.emplace_back(v, a[i].second - e);
        }
        ++i;
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    return true;
}

struct ParamMonomialLess {
    bool operator()(const ParamMonomial &a, const ParamMonomial &b) const noexcept
    {
        return compare_param_monomials(a, b) < 0;
    }
};

} // namespace detail

/// Multivariate polynomial over Q in the ring parameters. Terms are kept in
/// strictly decreasing lex order with nonzero coefficients.
class ParamPolynomial
{
public:
    struct Term {
        ParamMonomial mono;
        rational coef;

        friend bool operator==(const Term &, const Term &) = default;
    };

    ParamPolynomial() = default;

    explicit ParamPolynomial(const rational &c)
    {
        if (sgn(c) != 0) {
            m_terms.push_back({{}, c});
            m_terms.back().coef.canonicalize();
        }
    }

    // c * p_index^exponent
    static ParamPolynomial parameter(std::uint32_t index, std::uint32_t exponent = 1, const rational &c = 1)
    {
        ParamPolynomial p;
        if (sgn(c) != 0) {
            ParamMonomial m;
            if (exponent > 0) {
                m.emplace_back(index, exponent);
            }
            p.m_terms.push_back({std::move(m), c});
            p.m_terms.back().coef.canonicalize();
        }
        return p;
    }

    static ParamPolynomial from_terms(std::vector<Term> terms)
    {
        std::map<ParamMonomial, rational, detail::ParamMonomialLess> acc;
        for (auto &t : terms) {
            acc[std::move(t.mono)] += t.coef;
        }
        ParamPolynomial p;
        for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
            if (sgn(it->second) != 0) {
                p.m_terms.push_back({it->first, it->second});
            }
        }
        return p;
    }

    const std::vector<Term> &terms() const noexcept
    {
        return m_terms;
    }

    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    bool is_constant() const noexcept
    {
        return m_terms.empty() || (m_terms.size() == 1 && m_terms[0].mono.empty());
    }

    bool is_one() const noexcept
    {
        return m_terms.size() == 1 && m_terms[0].mono.empty() && m_terms[0].coef == 1;
    }

    // Constant term value; only meaningful when is_constant().
    rational constant_value() const
    {
        return m_terms.empty() ? rational(0) : m_terms[0].coef;
    }

    const rational &leading_coefficient() const
    {
        return m_terms.front().coef;
    }

    std::uint32_t degree_in(std::uint32_t var) const noexcept
    {
        std::uint32_t d = 0;
        for (const auto &t : m_terms) {
            for (const auto &[v, e] : t.mono) {
                if (v == var) {
                    d = std::max(d, e);
                }
            }
        }
        return d;
    }

    // Smallest parameter index occurring in the polynomial.
    std::optional<std::uint32_t> main_variable() const noexcept
    {
        std::optional<std::uint32_t> r;
        for (const auto &t : m_terms) {
            if (!t.mono.empty() && (!r || t.mono.front().first < *r)) {
                r = t.mono.front().first;
            }
        }
        return r;
    }

    friend bool operator==(const ParamPolynomial &, const ParamPolynomial &) = default;

    ParamPolynomial operator-() const
    {
        ParamPolynomial r(*this);
        for (auto &t : r.m_terms) {
            t.coef = -t.coef;
        }
        return r;
    }

    friend ParamPolynomial operator+(const ParamPolynomial &a, const ParamPolynomial &b)
    {
        return merge(a, b, false);
    }

    friend ParamPolynomial operator-(const ParamPolynomial &a, const ParamPolynomial &b)
    {
        return merge(a, b, true);
    }

    friend ParamPolynomial operator*(const ParamPolynomial &a, const ParamPolynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (a.is_constant()) {
            return b.scaled(a.constant_value());
        }
        if (b.is_constant()) {
            return a.scaled(b.constant_value());
        }
        std::map<ParamMonomial, rational, detail::ParamMonomialLess> acc;
        for (const auto &s : a.m_terms) {
            for (const auto &t : b.m_terms) {
                acc[detail::mul_param_monomials(s.mono, t.mono)] += s.coef * t.coef;
            }
        }
        ParamPolynomial r;
        for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
            if (sgn(it->second) != 0) {
                r.m_terms.push_back({it->first, it->second});
            }
        }
        return r;
    }

    ParamPolynomial scaled(const rational &c) const
    {
        if (sgn(c) == 0) {
            return {};
        }
        ParamPolynomial r(*this);
        for (auto &t : r.m_terms) {
            t.coef *= c;
        }
        return r;
    }

    // Multiply by a monomial.
    ParamPolynomial times_monomial(const ParamMonomial &m) const
    {
        ParamPolynomial r;
        r.m_terms.reserve(m_terms.size());
        for (const auto &t : m_terms) {
            r.m_terms.push_back({detail::mul_param_monomials(t.mono, m), t.coef});
        }
        return r;
    }

    /// Exact division; std::nullopt when b does not divide a.
    static std::optional<ParamPolynomial> divide_exact(const ParamPolynomial &a, const ParamPolynomial &b)
    {
        if (b.is_zero()) {
            throw domain_error("parameter polynomial division by zero");
        }
        if (b.is_constant()) {
            return a.scaled(1 / b.constant_value());
        }
        ParamPolynomial rem(a), quot;
        const auto &lt_b = b.m_terms.front();
        ParamMonomial qm;
        while (!rem.is_zero()) {
            const auto &lt_r = rem.m_terms.front();
            if (!detail::div_param_monomials(lt_r.mono, lt_b.mono, qm)) {
                return std::nullopt;
            }
            rational qc = lt_r.coef / lt_b.coef;
            ParamPolynomial step = b.times_monomial(qm).scaled(qc);
            rem = rem - step;
            quot.m_terms.push_back({qm, qc});
        }
        return quot;
    }

    // Divide by the leading coefficient (no-op on zero).
    ParamPolynomial monic() const
    {
        return is_zero() ? *this : scaled(1 / leading_coefficient());
    }

    /// Monic gcd over Q; gcd(0, 0) = 0.
    static ParamPolynomial gcd(const ParamPolynomial &a, const ParamPolynomial &b)
    {
        if (a.is_zero()) {
            return b.monic();
        }
        if (b.is_zero()) {
            return a.monic();
        }
        if (a.is_constant() || b.is_constant()) {
            return ParamPolynomial(rational(1));
        }
        auto va = a.main_variable(), vb = b.main_variable();
        const std::uint32_t v = std::min(*va, *vb);
        auto ua = to_univariate(a, v), ub = to_univariate(b, v);
        ParamPolynomial ca = content(ua), cb = content(ub);
        ParamPolynomial c = gcd(ca, cb);
        primitive_part(ua, ca);
        primitive_part(ub, cb);
        if (ua.size() < ub.size()) {
            std::swap(ua, ub);
        }
        // Primitive polynomial remainder sequence in v.
        while (ub.size() > 1) {
            auto r = pseudo_remainder(ua, ub);
            ua = std::move(ub);
            if (r.empty()) {
                ub.clear();
                break;
            }
            primitive_part(r, content(r));
            ub = std::move(r);
        }
        ParamPolynomial g;
        if (ub.empty()) {
            g = from_univariate(ua, v);
        } else {
            // Nonzero constant in v: the primitive parts are coprime.
            g = ParamPolynomial(rational(1));
        }
        return (g * c).monic();
    }

    std::string to_string(const std::vector<std::string> &names) const
    {
        if (is_zero()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &t : m_terms) {
            rational c = t.coef;
            if (sgn(c) < 0) {
                os << '-';
                c = -c;
            } else if (!first) {
                os << '+';
            }
            first = false;
            bool need_star = false;
            if (c != 1 || t.mono.empty()) {
                os << c.get_str();
                need_star = true;
            }
            for (const auto &[v, e] : t.mono) {
                if (need_star) {
                    os << '*';
                }
                os << (v < names.size() ? names[v] : "p" + std::to_string(v));
                if (e != 1) {
                    os << '^' << e;
                }
                need_star = true;
            }
        }
        return os.str();
    }

private:
    using Univariate = std::vector<ParamPolynomial>; // index = power of the main variable

    static ParamPolynomial merge(const ParamPolynomial &a, const ParamPolynomial &b, bool subtract)
    {
        ParamPolynomial r;
        r.m_terms.reserve(a.m_terms.size() + b.m_terms.size());
        std::size_t i = 0, j = 0;
        while (i < a.m_terms.size() || j < b.m_terms.size()) {
            int c;
            if (i == a.m_terms.size()) {
                c = -1;
            } else if (j == b.m_terms.size()) {
                c = 1;
            } else {
                c = detail::compare_param_monomials(a.m_terms[i].mono, b.m_terms[j].mono);
            }
            if (c > 0) {
                r.m_terms.push_back(a.m_terms[i++]);
            } else if (c < 0) {
                r.m_terms.push_back(b.m_terms[j++]);
                if (subtract) {
                    r.m_terms.back().coef = -r.m_terms.back().coef;
                }
            } else {
                rational s = subtract ? rational(a.m_terms[i].coef - b.m_terms[j].coef)
                                      : rational(a.m_terms[i].coef + b.m_terms[j].coef);
                if (sgn(s) != 0) {
                    r.m_terms.push_back({a.m_terms[i].mono, std::move(s)});
                }
                ++i;
                ++j;
            }
        }
        return r;
    }

    static Univariate to_univariate(const ParamPolynomial &p, std::uint32_t v)
    {
        std::vector<std::vector<Term>> buckets(p.degree_in(v) + 1);
        for (const auto &t : p.m_terms) {
            std::uint32_t e = 0;
            ParamMonomial rest;
            for (const auto &f : t.mono) {
                if (f.first == v) {
                    e = f.second;
                } else {
                    rest.push_back(f);
                }
            }
            buckets[e].push_back({std::move(rest), t.coef});
        }
        Univariate u;
        u.reserve(buckets.size());
        for (auto &b : buckets) {
            u.push_back(from_terms(std::move(b)));
        }
        trim(u);
        return u;
    }

    static ParamPolynomial from_univariate(const Univariate &u, std::uint32_t v)
    {
        ParamPolynomial r;
        for (std::size_t k = 0; k < u.size(); ++k) {
            ParamMonomial m;
            if (k > 0) {
                m.emplace_back(v, static_cast<std::uint32_t>(k));
            }
            r = r + u[k].times_monomial(m);
        }
        return r;
    }

    static void trim(Univariate &u)
    {
        while (!u.empty() && u.back().is_zero()) {
            u.pop_back();
        }
    }

    static ParamPolynomial content(const Univariate &u)
    {
        ParamPolynomial c;
        for (const auto &coef : u) {
            c = gcd(c, coef);
            if (c.is_one()) {
                break;
            }
        }
        return c;
    }

    static void primitive_part(Univariate &u, const ParamPolynomial &c)
    {
        if (c.is_zero() || c.is_one()) {
            return;
        }
        for (auto &coef : u) {
            coef = *divide_exact(coef, c);
        }
    }

    static Univariate pseudo_remainder(Univariate a, const Univariate &b)
    {
        const auto &lb = b.back();
        while (!a.empty() && a.size() >= b.size()) {
            const ParamPolynomial la = a.back();
            const std::size_t shift = a.size() - b.size();
            for (auto &coef : a) {
                coef = coef * lb;
            }
            for (std::size_t k = 0; k < b.size(); ++k) {
                a[k + shift] = a[k + shift] - b[k] * la;
            }
            trim(a);
        }
        return a;
    }

    std::vector<Term> m_terms;
};

/// Element of Q(parameters): a reduced fraction num/den with den monic in the
/// lex order on parameter monomials. With no parameters this is just Q.
class FieldElement
{
public:
    FieldElement() : m_den(rational(1)) {}
    FieldElement(long v) : m_num(rational(v)), m_den(rational(1)) {}
    FieldElement(const rational &v) : m_num(v), m_den(rational(1)) {}
    explicit FieldElement(ParamPolynomial p) : m_num(std::move(p)), m_den(rational(1)) {}

    static FieldElement fraction(ParamPolynomial num, ParamPolynomial den)
    {
        if (den.is_zero()) {
            throw domain_error("division by zero in coefficient field");
        }
        FieldElement r;
        r.m_num = std::move(num);
        r.m_den = std::move(den);
        r.normalize();
        return r;
    }

    const ParamPolynomial &numerator() const noexcept
    {
        return m_num;
    }
    const ParamPolynomial &denominator() const noexcept
    {
        return m_den;
    }

    bool is_zero() const noexcept
    {
        return m_num.is_zero();
    }
    bool is_one() const noexcept
    {
        return m_num.is_one() && m_den.is_one();
    }
    bool is_rational() const noexcept
    {
        return m_num.is_constant() && m_den.is_constant();
    }
    rational to_rational() const
    {
        return m_num.constant_value() / m_den.constant_value();
    }

    // Sign of the leading numerator coefficient.
    int sign() const
    {
        return m_num.is_zero() ? 0 : sgn(m_num.leading_coefficient());
    }

    friend bool operator==(const FieldElement &, const FieldElement &) = default;

    FieldElement operator-() const
    {
        FieldElement r(*this);
        r.m_num = -r.m_num;
        return r;
    }

    friend FieldElement operator+(const FieldElement &a, const FieldElement &b)
    {
        if (a.m_den == b.m_den) {
            return make(a.m_num + b.m_num, a.m_den);
        }
        return make(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
    }

    friend FieldElement operator-(const FieldElement &a, const FieldElement &b)
    {
        if (a.m_den == b.m_den) {
            return make(a.m_num - b.m_num, a.m_den);
        }
        return make(a.m_num * b.m_den - b.m_num * a.m_den, a.m_den * b.m_den);
    }

    friend FieldElement operator*(const FieldElement &a, const FieldElement &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        return make(a.m_num * b.m_num, a.m_den * b.m_den);
    }

    FieldElement inverse() const
    {
        if (is_zero()) {
            throw domain_error("division by zero in coefficient field");
        }
        return make(m_den, m_num);
    }

    friend FieldElement operator/(const FieldElement &a, const FieldElement &b)
    {
        return a * b.inverse();
    }

    FieldElement &operator+=(const FieldElement &o)
    {
        return *this = *this + o;
    }
    FieldElement &operator-=(const FieldElement &o)
    {
        return *this = *this - o;
    }
    FieldElement &operator*=(const FieldElement &o)
    {
        return *this = *this * o;
    }

    std::string to_string(const std::vector<std::string> &param_names) const
    {
        if (m_den.is_one()) {
            return m_num.to_string(param_names);
        }
        return "(" + m_num.to_string(param_names) + ")/(" + m_den.to_string(param_names) + ")";
    }

    friend std::ostream &operator<<(std::ostream &os, const FieldElement &c)
    {
        return os << c.to_string({});
    }

private:
    static FieldElement make(ParamPolynomial num, ParamPolynomial den)
    {
        FieldElement r;
        r.m_num = std::move(num);
        r.m_den = std::move(den);
        r.normalize();
        return r;
    }

    void normalize()
    {
        if (m_num.is_zero()) {
            m_den = ParamPolynomial(rational(1));
            return;
        }
        if (m_den.is_constant()) {
            if (!m_den.is_one()) {
                m_num = m_num.scaled(1 / m_den.constant_value());
                m_den = ParamPolynomial(rational(1));
            }
            return;
        }
        ParamPolynomial g = ParamPolynomial::gcd(m_num, m_den);
        if (!g.is_one()) {
            m_num = *ParamPolynomial::divide_exact(m_num, g);
            m_den = *ParamPolynomial::divide_exact(m_den, g);
        }
        const rational lc = m_den.leading_coefficient();
        if (lc != 1) {
            m_num = m_num.scaled(1 / lc);
            m_den = m_den.scaled(1 / lc);
        }
    }

    ParamPolynomial m_num;
    ParamPolynomial m_den;
};

} // namespace dgb

#endif
