#ifndef DGB_MONOMIAL_HPP
#define DGB_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <dgb/error.hpp>
#include <dgb/ordering.hpp>
#include <dgb/shift.hpp>

namespace dgb
{

/// The shifted variable x_i(sigma).
struct Variable {
    std::uint32_t symbol = 0;
    Shift shift;

    friend bool operator==(const Variable &, const Variable &) = default;
    friend std::strong_ordering operator<=>(const Variable &, const Variable &) = default;
};

struct Factor {
    Variable var;
    std::uint32_t exp = 1;

    friend bool operator==(const Factor &, const Factor &) = default;
    friend std::strong_ordering operator<=>(const Factor &, const Factor &) = default;
};

inline std::strong_ordering compare_variables(const OrderingSpec &o, const Variable &a, const Variable &b)
{
    if (auto c = o.compare_shift(a.shift, b.shift); c != 0) {
        return c;
    }
    return o.compare_symbols(a.symbol, b.symbol);
}

/// Product of shifted variables. Factors are stored with positive exponents in
/// strictly decreasing variable order (so variables of one shift form a
/// contiguous block, largest shift first). The built-in comparison operators
/// are structural; use compare_monomials for the monomial ordering.
class Monomial
{
public:
    Monomial() = default;

    static Monomial variable(const Variable &v, std::uint32_t exp = 1)
    {
        Monomial m;
        if (exp > 0) {
            m.m_factors.push_back({v, exp});
        }
        return m;
    }

    // Sorts and merges arbitrary factors; zero exponents are dropped.
    static Monomial from_factors(const OrderingSpec &o, std::vector<Factor> factors)
    {
        std::sort(factors.begin(), factors.end(),
                  [&](const Factor &a, const Factor &b) { return compare_variables(o, a.var, b.var) > 0; });
        Monomial m;
        for (auto &f : factors) {
            if (f.exp == 0) {
                continue;
            }
            if (!m.m_factors.empty() && m.m_factors.back().var == f.var) {
                m.m_factors.back().exp = detail::checked_add(m.m_factors.back().exp, f.exp);
            } else {
                m.m_factors.push_back(std::move(f));
            }
        }
        return m;
    }

    const std::vector<Factor> &factors() const noexcept
    {
        return m_factors;
    }

    bool is_one() const noexcept
    {
        return m_factors.empty();
    }

    // Largest variable; precondition !is_one().
    const Variable &largest_variable() const noexcept
    {
        return m_factors.front().var;
    }

    std::uint64_t total_degree() const noexcept
    {
        std::uint64_t d = 0;
        for (const auto &f : m_factors) {
            d += f.exp;
        }
        return d;
    }

    std::uint32_t exponent_of(const Variable &v) const noexcept
    {
        for (const auto &f : m_factors) {
            if (f.var == v) {
                return f.exp;
            }
        }
        return 0;
    }

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend std::strong_ordering operator<=>(const Monomial &, const Monomial &) = default;

private:
    friend class MonomialBuilder;
    std::vector<Factor> m_factors;
};

// Appends factors already known to be in decreasing order.
class MonomialBuilder
{
public:
    void push(const Factor &f)
    {
        m_mono.m_factors.push_back(f);
    }
    void reserve(std::size_t n)
    {
        m_mono.m_factors.reserve(n);
    }
    Monomial take()
    {
        return std::move(m_mono);
    }

private:
    Monomial m_mono;
};

inline OrderValue ord(const Monomial &m) noexcept
{
    OrderValue r = OrderValue::neg_inf();
    for (const auto &f : m.factors()) {
        r = max(r, OrderValue(f.var.shift.degree()));
    }
    return r;
}

namespace detail
{

inline std::strong_ordering compare_blocks(const OrderingSpec &o, const std::vector<Factor> &a, std::size_t a0,
                                           std::size_t a1, const std::vector<Factor> &b, std::size_t b0,
                                           std::size_t b1)
{
    const OrderKind kind = o.symbol_kind();
    if (kind != OrderKind::lex) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t k = a0; k < a1; ++k) {
            da += a[k].exp;
        }
        for (std::size_t k = b0; k < b1; ++k) {
            db += b[k].exp;
        }
        if (da != db) {
            return da <=> db;
        }
    }
    if (kind == OrderKind::degrevlex) {
        std::size_t i = a1, j = b1;
        while (i > a0 && j > b0) {
            const auto pa = o.symbol_position(a[i - 1].var.symbol);
            const auto pb = o.symbol_position(b[j - 1].var.symbol);
            if (pa == pb) {
                if (a[i - 1].exp != b[j - 1].exp) {
                    return b[j - 1].exp <=> a[i - 1].exp;
                }
                --i;
                --j;
            } else {
                // The side carrying the smaller symbol loses.
                return pa > pb ? std::strong_ordering::less : std::strong_ordering::greater;
            }
        }
        return std::strong_ordering::equal;
    }
    std::size_t i = a0, j = b0;
    while (i < a1 && j < b1) {
        const auto pa = o.symbol_position(a[i].var.symbol);
        const auto pb = o.symbol_position(b[j].var.symbol);
        if (pa == pb) {
            if (a[i].exp != b[j].exp) {
                return a[i].exp <=> b[j].exp;
            }
            ++i;
            ++j;
        } else {
            return pa < pb ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    if (i < a1) {
        return std::strong_ordering::greater;
    }
    if (j < b1) {
        return std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

inline std::size_t block_end(const std::vector<Factor> &f, std::size_t start)
{
    std::size_t e = start + 1;
    while (e < f.size() && f[e].var.shift == f[start].var.shift) {
        ++e;
    }
    return e;
}

} // namespace detail

/// Block ordering: compare the blocks of both monomials from the largest
/// shift downwards; a missing block counts as the monomial 1.
inline std::strong_ordering compare_monomials(const OrderingSpec &o, const Monomial &m, const Monomial &n)
{
    const auto &a = m.factors();
    const auto &b = n.factors();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (auto c = o.compare_shift(a[i].var.shift, b[j].var.shift); c != 0) {
            return c;
        }
        const std::size_t ie = detail::block_end(a, i);
        const std::size_t je = detail::block_end(b, j);
        if (auto c = detail::compare_blocks(o, a, i, ie, b, j, je); c != 0) {
            return c;
        }
        i = ie;
        j = je;
    }
    if (i < a.size()) {
        return std::strong_ordering::greater;
    }
    if (j < b.size()) {
        return std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

namespace detail
{

// Merge of two factor lists; combine(ea, eb) gives the exponent to keep
// (0 drops the variable), with 0 standing for an absent side.
template <typename Combine>
Monomial merge_monomials(const OrderingSpec &o, const Monomial &m, const Monomial &n, Combine combine)
{
    const auto &a = m.factors();
    const auto &b = n.factors();
    MonomialBuilder out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto emit = [&](const Variable &v, std::uint32_t e) {
        if (e > 0) {
            out.push({v, e});
        }
    };
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            emit(a[i].var, combine(a[i].exp, 0u));
            ++i;
        } else if (i == a.size()) {
            emit(b[j].var, combine(0u, b[j].exp));
            ++j;
        } else {
            auto c = compare_variables(o, a[i].var, b[j].var);
            if (c > 0) {
                emit(a[i].var, combine(a[i].exp, 0u));
                ++i;
            } else if (c < 0) {
                emit(b[j].var, combine(0u, b[j].exp));
                ++j;
            } else {
                emit(a[i].var, combine(a[i].exp, b[j].exp));
                ++i;
                ++j;
            }
        }
    }
    return out.take();
}

} // namespace detail

inline Monomial mul(const OrderingSpec &o, const Monomial &m, const Monomial &n)
{
    return detail::merge_monomials(o, m, n, [](std::uint32_t a, std::uint32_t b) { return detail::checked_add(a, b); });
}

inline Monomial monomial_lcm(const OrderingSpec &o, const Monomial &m, const Monomial &n)
{
    return detail::merge_monomials(o, m, n, [](std::uint32_t a, std::uint32_t b) { return std::max(a, b); });
}

inline Monomial monomial_gcd(const OrderingSpec &o, const Monomial &m, const Monomial &n)
{
    return detail::merge_monomials(o, m, n, [](std::uint32_t a, std::uint32_t b) { return std::min(a, b); });
}

// m | n
inline bool divides(const OrderingSpec &o, const Monomial &m, const Monomial &n)
{
    const auto &a = m.factors();
    const auto &b = n.factors();
    if (a.size() > b.size()) {
        return false;
    }
    std::size_t j = 0;
    for (const auto &f : a) {
        while (true) {
            if (j == b.size()) {
                return false;
            }
            auto c = compare_variables(o, f.var, b[j].var);
            if (c > 0) {
                return false;
            }
            if (c == 0) {
                break;
            }
            ++j;
        }
        if (f.exp > b[j].exp) {
            return false;
        }
        ++j;
    }
    return true;
}

// n / m; throws dgb::domain_error unless m | n.
inline Monomial div(const OrderingSpec &o, const Monomial &n, const Monomial &m)
{
    if (!divides(o, m, n)) {
        throw domain_error("monomial division by a non-divisor");
    }
    return detail::merge_monomials(o, n, m, [](std::uint32_t a, std::uint32_t b) { return a - b; });
}

// True when m and n share no variable.
inline bool coprime(const OrderingSpec &o, const Monomial &m, const Monomial &n)
{
    const auto &a = m.factors();
    const auto &b = n.factors();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = compare_variables(o, a[i].var, b[j].var);
        if (c == 0) {
            return false;
        }
        if (c > 0) {
            ++i;
        } else {
            ++j;
        }
    }
    return true;
}

/// s * m: every factor x_i(t)^e becomes x_i(st)^e. The shift ordering is
/// multiplicative, so the factor order is preserved.
inline Monomial shift_monomial(const Shift &s, const Monomial &m)
{
    MonomialBuilder out;
    out.reserve(m.factors().size());
    for (const auto &f : m.factors()) {
        out.push({{f.var.symbol, mul(s, f.var.shift)}, f.exp});
    }
    return out.take();
}

} // namespace dgb

#endif
