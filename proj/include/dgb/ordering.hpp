#ifndef DGB_ORDERING_HPP
#define DGB_ORDERING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include <dgb/error.hpp>
#include <dgb/shift.hpp>

namespace dgb
{

enum class OrderKind { lex, deglex, degrevlex };

inline std::string_view to_string(OrderKind k) noexcept
{
    switch (k) {
        case OrderKind::lex:
            return "lex";
        case OrderKind::deglex:
            return "deglex";
        case OrderKind::degrevlex:
            return "degrevlex";
    }
    return "?";
}

inline OrderKind order_kind_from_string(std::string_view s)
{
    if (s == "lex") {
        return OrderKind::lex;
    }
    if (s == "deglex") {
        return OrderKind::deglex;
    }
    if (s == "degrevlex") {
        return OrderKind::degrevlex;
    }
    throw structural_error("unknown order kind '" + std::string(s) + "'");
}

/// Block monomial ordering: an ordering on the shifts chooses which block of
/// variables is larger, an ordering on the symbols compares monomials inside
/// one block.
///
/// Priorities list generator (resp. symbol) indices from the largest to the
/// smallest, e.g. {0,1,2} for s1>s2>s3.
class OrderingSpec
{
public:
    OrderingSpec() = default;

    OrderingSpec(OrderKind shift_kind, std::vector<std::size_t> shift_priority, OrderKind symbol_kind,
                 std::vector<std::size_t> symbol_priority)
        : m_shift_kind(shift_kind), m_shift_priority(std::move(shift_priority)), m_symbol_kind(symbol_kind),
          m_symbol_priority(std::move(symbol_priority))
    {
        m_shift_pos = inverse(m_shift_priority, "shift");
        m_symbol_pos = inverse(m_symbol_priority, "symbol");
        if (m_shift_priority.empty()) {
            throw structural_error("ordering needs at least one shift generator");
        }
        if (m_symbol_priority.empty()) {
            throw structural_error("ordering needs at least one symbol");
        }
    }

    // Priorities in declaration order.
    static OrderingSpec standard(std::size_t rank, std::size_t nsymbols, OrderKind shift_kind = OrderKind::degrevlex,
                                 OrderKind symbol_kind = OrderKind::lex)
    {
        std::vector<std::size_t> sp(rank), yp(nsymbols);
        std::iota(sp.begin(), sp.end(), std::size_t{0});
        std::iota(yp.begin(), yp.end(), std::size_t{0});
        return OrderingSpec(shift_kind, std::move(sp), symbol_kind, std::move(yp));
    }

    OrderKind shift_kind() const noexcept
    {
        return m_shift_kind;
    }
    OrderKind symbol_kind() const noexcept
    {
        return m_symbol_kind;
    }
    const std::vector<std::size_t> &shift_priority() const noexcept
    {
        return m_shift_priority;
    }
    const std::vector<std::size_t> &symbol_priority() const noexcept
    {
        return m_symbol_priority;
    }
    std::size_t shift_rank() const noexcept
    {
        return m_shift_priority.size();
    }
    std::size_t num_symbols() const noexcept
    {
        return m_symbol_priority.size();
    }

    // Position of symbol i in the priority list; 0 is the largest symbol.
    std::size_t symbol_position(std::size_t i) const noexcept
    {
        return m_symbol_pos[i];
    }

    std::strong_ordering compare_shift(const Shift &s, const Shift &t) const
    {
        detail::require_same_rank(s, t);
        if (s.rank() != m_shift_priority.size()) {
            throw structural_error("shift rank does not match the ordering");
        }
        if (m_shift_kind != OrderKind::lex) {
            if (auto c = s.degree() <=> t.degree(); c != 0) {
                return c;
            }
        }
        if (m_shift_kind == OrderKind::degrevlex) {
            for (std::size_t k = m_shift_priority.size(); k-- > 0;) {
                const std::size_t j = m_shift_priority[k];
                if (s[j] != t[j]) {
                    return t[j] <=> s[j];
                }
            }
            return std::strong_ordering::equal;
        }
        for (std::size_t j : m_shift_priority) {
            if (s[j] != t[j]) {
                return s[j] <=> t[j];
            }
        }
        return std::strong_ordering::equal;
    }

    // Symbol i against symbol j as single variables in one block.
    std::strong_ordering compare_symbols(std::size_t i, std::size_t j) const noexcept
    {
        return m_symbol_pos[j] <=> m_symbol_pos[i];
    }

    /// The shift ordering is compatible with deg. For one generator every
    /// kind is, since lex on N is the degree order.
    bool is_ord_compatible() const noexcept
    {
        return m_shift_kind != OrderKind::lex || m_shift_priority.size() == 1;
    }

    friend bool operator==(const OrderingSpec &, const OrderingSpec &) = default;

    // block(shifts=degrevlex[s1>s2>s3], symbols=lex[u>v>p])
    std::string to_string(const std::vector<std::string> &symbol_names) const
    {
        std::string out = "block(shifts=" + std::string(dgb::to_string(m_shift_kind)) + "[";
        for (std::size_t k = 0; k < m_shift_priority.size(); ++k) {
            out += (k ? ">s" : "s") + std::to_string(m_shift_priority[k] + 1);
        }
        out += "], symbols=" + std::string(dgb::to_string(m_symbol_kind)) + "[";
        for (std::size_t k = 0; k < m_symbol_priority.size(); ++k) {
            if (k) {
                out += '>';
            }
            const std::size_t i = m_symbol_priority[k];
            out += i < symbol_names.size() ? symbol_names[i] : "x" + std::to_string(i);
        }
        return out + "])";
    }

private:
    static std::vector<std::size_t> inverse(const std::vector<std::size_t> &perm, const char *what)
    {
        std::vector<std::size_t> pos(perm.size(), perm.size());
        for (std::size_t k = 0; k < perm.size(); ++k) {
            if (perm[k] >= perm.size() || pos[perm[k]] != perm.size()) {
                throw structural_error(std::string(what) + " priority is not a permutation");
            }
            pos[perm[k]] = k;
        }
        return pos;
    }

    OrderKind m_shift_kind = OrderKind::degrevlex;
    std::vector<std::size_t> m_shift_priority;
    OrderKind m_symbol_kind = OrderKind::lex;
    std::vector<std::size_t> m_symbol_priority;
    std::vector<std::size_t> m_shift_pos;
    std::vector<std::size_t> m_symbol_pos;
};

} // namespace dgb

#endif
