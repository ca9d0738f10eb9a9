#ifndef DGB_SHIFT_HPP
#define DGB_SHIFT_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <dgb/error.hpp>

namespace dgb
{

// Upper bound on the number of shift generators a ring may declare.
inline constexpr std::size_t max_shift_rank = 8;

/// Element of the free commutative monoid generated by s1..sr, stored as its
/// exponent tuple (the additive picture N^r). The identity is the zero tuple.
///
/// Exponents are 32-bit; every operation that could exceed that range throws
/// std::overflow_error instead of wrapping.
class Shift
{
public:
    using exponent_type = std::uint32_t;

    Shift() = default;

    explicit Shift(std::size_t rank) : m_rank(check_rank(rank)) {}

    Shift(std::initializer_list<exponent_type> exps) : Shift(std::span<const exponent_type>(exps.begin(), exps.size()))
    {
    }

    explicit Shift(std::span<const exponent_type> exps) : m_rank(check_rank(exps.size()))
    {
        std::copy(exps.begin(), exps.end(), m_exps.begin());
    }

    static Shift identity(std::size_t rank)
    {
        return Shift(rank);
    }

    // sigma_j^power, j zero-based.
    static Shift generator(std::size_t rank, std::size_t j, exponent_type power = 1)
    {
        Shift s(rank);
        if (j >= rank) {
            throw structural_error("shift generator index " + std::to_string(j + 1) + " exceeds rank "
                                   + std::to_string(rank));
        }
        s.m_exps[j] = power;
        return s;
    }

    std::size_t rank() const noexcept
    {
        return m_rank;
    }

    exponent_type operator[](std::size_t i) const noexcept
    {
        return m_exps[i];
    }

    void set(std::size_t i, exponent_type e)
    {
        if (i >= m_rank) {
            throw structural_error("shift index out of range");
        }
        m_exps[i] = e;
    }

    std::span<const exponent_type> exponents() const noexcept
    {
        return {m_exps.data(), m_rank};
    }

    bool is_identity() const noexcept
    {
        return std::all_of(m_exps.begin(), m_exps.begin() + m_rank, [](auto e) { return e == 0u; });
    }

    // Total degree, sum of exponents.
    std::uint64_t degree() const noexcept
    {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < m_rank; ++i) {
            d += m_exps[i];
        }
        return d;
    }

    // Structural (tuple-lexicographic) comparison; used for canonical keys, not
    // as a monoid ordering. See ordering.hpp for the latter.
    friend bool operator==(const Shift &a, const Shift &b) noexcept
    {
        return a.m_rank == b.m_rank && std::equal(a.m_exps.begin(), a.m_exps.begin() + a.m_rank, b.m_exps.begin());
    }
    friend std::strong_ordering operator<=>(const Shift &a, const Shift &b) noexcept
    {
        if (auto c = a.m_rank <=> b.m_rank; c != 0) {
            return c;
        }
        for (std::size_t i = 0; i < a.m_rank; ++i) {
            if (auto c = a.m_exps[i] <=> b.m_exps[i]; c != 0) {
                return c;
            }
        }
        return std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const Shift &s)
    {
        os << '(';
        for (std::size_t i = 0; i < s.m_rank; ++i) {
            os << (i ? "," : "") << s.m_exps[i];
        }
        return os << ')';
    }

private:
    static std::size_t check_rank(std::size_t rank)
    {
        if (rank > max_shift_rank) {
            throw structural_error("shift rank " + std::to_string(rank) + " exceeds the supported maximum of "
                                   + std::to_string(max_shift_rank));
        }
        return rank;
    }

    std::array<exponent_type, max_shift_rank> m_exps{};
    std::size_t m_rank = 0;
};

namespace detail
{

inline void require_same_rank(const Shift &s, const Shift &t)
{
    if (s.rank() != t.rank()) {
        throw structural_error("shift rank mismatch: " + std::to_string(s.rank()) + " vs " + std::to_string(t.rank()));
    }
}

inline Shift::exponent_type checked_add(Shift::exponent_type a, Shift::exponent_type b)
{
    if (a > std::numeric_limits<Shift::exponent_type>::max() - b) {
        throw std::overflow_error("shift exponent overflow");
    }
    return a + b;
}

} // namespace detail

// Monoid product: componentwise sum.
inline Shift mul(const Shift &s, const Shift &t)
{
    detail::require_same_rank(s, t);
    Shift r(s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i) {
        r.set(i, detail::checked_add(s[i], t[i]));
    }
    return r;
}

inline Shift gcd(const Shift &s, const Shift &t)
{
    detail::require_same_rank(s, t);
    Shift r(s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i) {
        r.set(i, std::min(s[i], t[i]));
    }
    return r;
}

inline Shift lcm(const Shift &s, const Shift &t)
{
    detail::require_same_rank(s, t);
    Shift r(s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i) {
        r.set(i, std::max(s[i], t[i]));
    }
    return r;
}

// s | t, i.e. componentwise s <= t.
inline bool divides(const Shift &s, const Shift &t)
{
    detail::require_same_rank(s, t);
    for (std::size_t i = 0; i < s.rank(); ++i) {
        if (s[i] > t[i]) {
            return false;
        }
    }
    return true;
}

// t / s. Throws dgb::domain_error unless s | t.
inline Shift div(const Shift &t, const Shift &s)
{
    if (!divides(s, t)) {
        throw domain_error("shift division by a non-divisor");
    }
    Shift r(t.rank());
    for (std::size_t i = 0; i < t.rank(); ++i) {
        r.set(i, t[i] - s[i]);
    }
    return r;
}

inline std::uint64_t deg(const Shift &s) noexcept
{
    return s.degree();
}

/// All shifts of the given rank with degree <= max_degree, ordered by degree
/// and, within one degree, by reverse-lex on the exponent tuple (the tuple
/// whose last differing entry is smaller comes first). A negative bound stands
/// for -infinity and yields the empty set.
inline std::vector<Shift> enumerate_up_to_degree(std::size_t rank, std::int64_t max_degree)
{
    std::vector<Shift> out;
    if (max_degree < 0) {
        return out;
    }
    if (rank == 0) {
        out.emplace_back(0);
        return out;
    }
    const auto bound = static_cast<Shift::exponent_type>(max_degree);
    for (Shift::exponent_type d = 0; d <= bound; ++d) {
        // Compositions of d into rank parts, generated in reverse-lex order:
        // the last coordinate varies slowest.
        std::vector<Shift::exponent_type> cur(rank, 0);
        auto rec = [&](auto &self, std::size_t pos, Shift::exponent_type remaining) -> void {
            if (pos == 0) {
                cur[0] = remaining;
                out.emplace_back(std::span<const Shift::exponent_type>(cur));
                return;
            }
            for (Shift::exponent_type v = 0; v <= remaining; ++v) {
                cur[pos] = v;
                self(self, pos - 1, remaining - v);
            }
            cur[pos] = 0;
        };
        rec(rec, rank - 1, d);
    }
    return out;
}

/// Value of the order function: a natural number or -infinity.
class OrderValue
{
public:
    constexpr OrderValue() = default;
    constexpr explicit OrderValue(std::uint64_t v) : m_value(static_cast<std::int64_t>(v)) {}

    static constexpr OrderValue neg_inf()
    {
        return OrderValue();
    }

    constexpr bool is_neg_inf() const noexcept
    {
        return m_value == neg_inf_repr;
    }

    // Precondition: !is_neg_inf().
    constexpr std::uint64_t value() const noexcept
    {
        return static_cast<std::uint64_t>(m_value);
    }

    // deg(s) + ord, with deg + (-inf) = -inf.
    constexpr OrderValue plus(std::uint64_t d) const noexcept
    {
        return is_neg_inf() ? *this : OrderValue(value() + d);
    }

    friend constexpr OrderValue max(OrderValue a, OrderValue b) noexcept
    {
        return a.m_value < b.m_value ? b : a;
    }

    friend constexpr auto operator<=>(OrderValue, OrderValue) = default;

    // Comparison against a plain bound; -inf is below everything.
    constexpr bool at_most(std::int64_t bound) const noexcept
    {
        return is_neg_inf() || m_value <= bound;
    }

    std::string to_string() const
    {
        return is_neg_inf() ? std::string("-inf") : std::to_string(m_value);
    }

    friend std::ostream &operator<<(std::ostream &os, OrderValue v)
    {
        return os << v.to_string();
    }

private:
    static constexpr std::int64_t neg_inf_repr = std::numeric_limits<std::int64_t>::min();
    std::int64_t m_value = neg_inf_repr;
};

} // namespace dgb

#endif
