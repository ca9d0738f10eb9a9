#ifndef DGB_RING_HPP
#define DGB_RING_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <dgb/error.hpp>
#include <dgb/ordering.hpp>
#include <dgb/shift.hpp>

namespace dgb
{

struct RingSignature {
    std::size_t shift_rank = 1;
    std::vector<std::string> symbols;
    std::vector<std::string> parameters;

    friend bool operator==(const RingSignature &, const RingSignature &) = default;
};

namespace detail
{

inline bool is_identifier(const std::string &s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

} // namespace detail

/// A difference polynomial ring K[X(Sigma)] with its monomial ordering.
/// Polynomials hold a shared pointer to their ring; operations on polynomials
/// from different rings are rejected.
class Ring
{
public:
    Ring(RingSignature sig, OrderingSpec order) : m_sig(std::move(sig)), m_order(std::move(order))
    {
        if (m_sig.shift_rank < 1 || m_sig.shift_rank > max_shift_rank) {
            throw structural_error("shift rank must be between 1 and " + std::to_string(max_shift_rank));
        }
        if (m_sig.symbols.empty()) {
            throw structural_error("a ring needs at least one symbol");
        }
        std::set<std::string> seen;
        for (const auto *list : {&m_sig.symbols, &m_sig.parameters}) {
            for (const auto &name : *list) {
                if (!detail::is_identifier(name)) {
                    throw structural_error("invalid name '" + name + "'");
                }
                if (!seen.insert(name).second) {
                    throw structural_error("duplicate name '" + name + "'");
                }
            }
        }
        if (m_order.shift_rank() != m_sig.shift_rank || m_order.num_symbols() != m_sig.symbols.size()) {
            throw structural_error("ordering does not match the ring signature");
        }
    }

    static std::shared_ptr<const Ring> make(RingSignature sig, OrderingSpec order)
    {
        return std::make_shared<const Ring>(std::move(sig), std::move(order));
    }

    // Default ordering: degrevlex on shifts, lex on symbols, declaration order.
    static std::shared_ptr<const Ring> make(RingSignature sig)
    {
        auto order = OrderingSpec::standard(sig.shift_rank, sig.symbols.size());
        return make(std::move(sig), std::move(order));
    }

    const RingSignature &signature() const noexcept
    {
        return m_sig;
    }
    const OrderingSpec &order() const noexcept
    {
        return m_order;
    }
    std::size_t rank() const noexcept
    {
        return m_sig.shift_rank;
    }
    std::size_t num_symbols() const noexcept
    {
        return m_sig.symbols.size();
    }

    std::optional<std::size_t> symbol_index(const std::string &name) const
    {
        auto it = std::find(m_sig.symbols.begin(), m_sig.symbols.end(), name);
        if (it == m_sig.symbols.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - m_sig.symbols.begin());
    }

    std::optional<std::size_t> parameter_index(const std::string &name) const
    {
        auto it = std::find(m_sig.parameters.begin(), m_sig.parameters.end(), name);
        if (it == m_sig.parameters.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - m_sig.parameters.begin());
    }

    friend bool operator==(const Ring &a, const Ring &b)
    {
        return a.m_sig == b.m_sig && a.m_order == b.m_order;
    }

private:
    RingSignature m_sig;
    OrderingSpec m_order;
};

using RingPtr = std::shared_ptr<const Ring>;

} // namespace dgb

#endif
