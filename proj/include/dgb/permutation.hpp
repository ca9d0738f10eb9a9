#ifndef DGB_PERMUTATION_HPP
#define DGB_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <dgb/error.hpp>
#include <dgb/ring.hpp>

namespace dgb
{

/// A permutation of {1..d} in disjoint cycle notation. Cycles are kept in
/// increasing order of their smallest point and rotated to start there;
/// points up to the largest one mentioned that appear in no cycle are fixed
/// points (cycles of length 1).
///
/// Cycle i with points (c_0 c_1 ... c_{l-1}) induces the symbol x_i and the
/// identification c_k <-> x_i(sigma^k), so the permutation acts as sigma.
class PermutationAction
{
public:
    explicit PermutationAction(std::vector<std::vector<std::size_t>> cycles)
    {
        std::set<std::size_t> seen;
        std::size_t d = 0;
        for (auto &c : cycles) {
            if (c.empty()) {
                continue;
            }
            for (std::size_t p : c) {
                if (p == 0) {
                    throw structural_error("permutation points are 1-based");
                }
                if (!seen.insert(p).second) {
                    throw structural_error("point " + std::to_string(p) + " appears in more than one cycle");
                }
                d = std::max(d, p);
            }
            std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
            m_cycles.push_back(std::move(c));
        }
        if (d == 0) {
            throw structural_error("permutation has no points");
        }
        for (std::size_t p = 1; p <= d; ++p) {
            if (!seen.count(p)) {
                m_cycles.push_back({p});
            }
        }
        std::sort(m_cycles.begin(), m_cycles.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
        m_degree = d;
    }

    // "(1 2 3)(4 5)"; points separated by blanks or commas.
    static PermutationAction parse(std::string_view text)
    {
        std::vector<std::vector<std::size_t>> cycles;
        std::size_t i = 0;
        auto skip = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
            }
        };
        skip();
        while (i < text.size()) {
            if (text[i] != '(') {
                throw parse_error("expected '(' in permutation", 1, i + 1);
            }
            ++i;
            std::vector<std::size_t> cycle;
            while (true) {
                skip();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i >= text.size()) {
                    throw parse_error("unclosed cycle in permutation", 1, i + 1);
                }
                if (text[i] == ')') {
                    ++i;
                    break;
                }
                if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                    throw parse_error("expected a point in permutation", 1, i + 1);
                }
                std::size_t v = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    v = v * 10 + static_cast<std::size_t>(text[i] - '0');
                    ++i;
                }
                cycle.push_back(v);
            }
            cycles.push_back(std::move(cycle));
            skip();
        }
        try {
            return PermutationAction(std::move(cycles));
        } catch (const structural_error &e) {
            throw parse_error(e.what(), 1, 1);
        }
    }

    std::size_t degree() const noexcept
    {
        return m_degree;
    }
    const std::vector<std::vector<std::size_t>> &cycles() const noexcept
    {
        return m_cycles;
    }
    std::size_t num_cycles() const noexcept
    {
        return m_cycles.size();
    }

    std::vector<std::size_t> cycle_lengths() const
    {
        std::vector<std::size_t> out;
        for (const auto &c : m_cycles) {
            out.push_back(c.size());
        }
        return out;
    }

    std::size_t apply(std::size_t point) const
    {
        for (const auto &c : m_cycles) {
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (c[k] == point) {
                    return c[(k + 1) % c.size()];
                }
            }
        }
        throw structural_error("point outside the permutation");
    }

    // x for a single cycle, x1..xn otherwise.
    std::vector<std::string> default_symbol_names() const
    {
        if (m_cycles.size() == 1) {
            return {"x"};
        }
        std::vector<std::string> out;
        for (std::size_t i = 0; i < m_cycles.size(); ++i) {
            out.push_back("x" + std::to_string(i + 1));
        }
        return out;
    }

    std::string to_string() const
    {
        std::string out;
        for (const auto &c : m_cycles) {
            out += '(';
            for (std::size_t k = 0; k < c.size(); ++k) {
                out += (k ? " " : "") + std::to_string(c[k]);
            }
            out += ')';
        }
        return out;
    }

private:
    std::vector<std::vector<std::size_t>> m_cycles;
    std::size_t m_degree = 0;
};

} // namespace dgb

#endif
