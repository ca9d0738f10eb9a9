#ifndef DGB_TESTS_SUPPORT_HPP
#define DGB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <dgb/dgb.hpp>

#include "oracle/classical_buchberger.hpp"

namespace dgb
{

// gtest printers
inline void PrintTo(const Polynomial &f, std::ostream *os)
{
    *os << to_string(f);
}

inline void PrintTo(const Monomial &m, std::ostream *os)
{
    *os << "monomial[" << m.factors().size() << " factors]";
}

} // namespace dgb

namespace dgbtest
{

using namespace dgb;

inline std::string slurp(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string data_path(const std::string &name)
{
    return std::string(DGB_TEST_DATA_DIR) + "/" + name;
}

inline std::string problem_path(const std::string &name)
{
    return std::string(DGB_PROBLEMS_DIR) + "/" + name;
}

inline oracle::Kind oracle_kind(OrderKind k)
{
    switch (k) {
        case OrderKind::lex:
            return oracle::Kind::lex;
        case OrderKind::deglex:
            return oracle::Kind::deglex;
        case OrderKind::degrevlex:
            return oracle::Kind::degrevlex;
    }
    return oracle::Kind::lex;
}

/// Finite polynomial ring over the variables x_i(s), deg s <= D, with the
/// block ordering of ring rebuilt inside the oracle.
class Bridge
{
public:
    Bridge(RingPtr ring, std::uint32_t D) : m_ring(std::move(ring))
    {
        const auto &o = m_ring->order();
        m_order.num_symbols = m_ring->num_symbols();
        m_order.shift_kind = oracle_kind(o.shift_kind());
        m_order.shift_prio = o.shift_priority();
        m_order.symbol_kind = oracle_kind(o.symbol_kind());
        m_order.symbol_prio = o.symbol_priority();
        for (const auto &s : oracle::shifts_up_to(m_ring->rank(), D)) {
            for (std::size_t i = 0; i < m_ring->num_symbols(); ++i) {
                m_order.vars.push_back({i, s});
            }
        }
        for (std::size_t k = 0; k < m_order.vars.size(); ++k) {
            m_index[key(m_order.vars[k].symbol, m_order.vars[k].shift)] = k;
        }
        m_oring = std::make_unique<oracle::Ring>(m_order.vars.size(), m_order);
    }

    const oracle::Ring &ring() const
    {
        return *m_oring;
    }
    const oracle::BlockOrder &order() const
    {
        return m_order;
    }
    std::size_t nvars() const
    {
        return m_order.vars.size();
    }

    bool contains(const Monomial &m) const
    {
        for (const auto &f : m.factors()) {
            if (!m_index.count(key(f.var))) {
                return false;
            }
        }
        return true;
    }

    bool contains(const Polynomial &f) const
    {
        for (const auto &t : f.terms()) {
            if (!contains(t.mono)) {
                return false;
            }
        }
        return true;
    }

    oracle::Exp exp(const Monomial &m) const
    {
        oracle::Exp e(nvars());
        for (const auto &f : m.factors()) {
            e[m_index.at(key(f.var))] += f.exp;
        }
        return e;
    }

    oracle::Poly poly(const Polynomial &f) const
    {
        std::vector<oracle::Term> terms;
        for (const auto &t : f.terms()) {
            if (!t.coef.is_rational()) {
                throw std::runtime_error("oracle handles rational coefficients only");
            }
            terms.emplace_back(exp(t.mono), t.coef.to_rational());
        }
        return m_oring->make(std::move(terms));
    }

    Monomial monomial(const oracle::Exp &e) const
    {
        std::vector<Factor> fs;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k]) {
                const auto &v = m_order.vars[k];
                Shift s(v.shift.size());
                for (std::size_t j = 0; j < v.shift.size(); ++j) {
                    s.set(j, v.shift[j]);
                }
                fs.push_back({Variable{static_cast<std::uint32_t>(v.symbol), s}, e[k]});
            }
        }
        return Monomial::from_factors(m_ring->order(), std::move(fs));
    }

    Polynomial polynomial(const oracle::Poly &p) const
    {
        std::vector<Term> terms;
        for (const auto &[e, c] : p.terms) {
            terms.push_back({FieldElement(c), monomial(e)});
        }
        return Polynomial(m_ring, std::move(terms));
    }

private:
    static std::vector<std::uint32_t> key(std::size_t symbol, const oracle::Exp &s)
    {
        std::vector<std::uint32_t> k{static_cast<std::uint32_t>(symbol)};
        k.insert(k.end(), s.begin(), s.end());
        return k;
    }
    static std::vector<std::uint32_t> key(const Variable &v)
    {
        std::vector<std::uint32_t> k{v.symbol};
        for (std::size_t j = 0; j < v.shift.rank(); ++j) {
            k.push_back(v.shift[j]);
        }
        return k;
    }

    RingPtr m_ring;
    oracle::BlockOrder m_order;
    std::map<std::vector<std::uint32_t>, std::size_t> m_index;
    std::unique_ptr<oracle::Ring> m_oring;
};

/// Random objects for property tests; every draw goes through one engine so
/// a seed fixes a whole run.
class Random
{
public:
    explicit Random(std::uint64_t seed) : m_eng(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
    {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(m_eng);
    }
    bool coin()
    {
        return uniform(0, 1) == 1;
    }

    OrderKind kind(bool degree_compatible = false)
    {
        if (degree_compatible) {
            return coin() ? OrderKind::deglex : OrderKind::degrevlex;
        }
        return static_cast<OrderKind>(uniform(0, 2));
    }

    std::vector<std::size_t> permutation(std::size_t n)
    {
        std::vector<std::size_t> p(n);
        for (std::size_t k = 0; k < n; ++k) {
            p[k] = k;
        }
        std::shuffle(p.begin(), p.end(), m_eng);
        return p;
    }

    RingPtr ring(std::size_t rank, std::size_t nsymbols, bool ord_compatible = false)
    {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < nsymbols; ++i) {
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        }
        OrderingSpec spec(kind(ord_compatible), permutation(rank), kind(), permutation(nsymbols));
        return Ring::make(RingSignature{rank, names, {}}, spec);
    }

    Shift shift(std::size_t rank, std::uint64_t max_degree)
    {
        Shift s(rank);
        std::uint64_t left = uniform(0, max_degree);
        for (std::size_t j = 0; j < rank && left > 0; ++j) {
            const std::uint64_t e = j + 1 == rank ? left : uniform(0, left);
            s.set(j, static_cast<Shift::exponent_type>(e));
            left -= e;
        }
        // Spread the degree over random coordinates.
        Shift t(rank);
        auto p = permutation(rank);
        for (std::size_t j = 0; j < rank; ++j) {
            t.set(p[j], s[j]);
        }
        return t;
    }

    Monomial monomial(const RingPtr &ring, std::uint64_t max_shift_degree, std::size_t max_factors,
                      std::uint32_t max_exp)
    {
        std::vector<Factor> fs;
        const std::size_t nf = uniform(0, max_factors);
        for (std::size_t k = 0; k < nf; ++k) {
            Variable v{static_cast<std::uint32_t>(uniform(0, ring->num_symbols() - 1)),
                       shift(ring->rank(), max_shift_degree)};
            fs.push_back({v, static_cast<std::uint32_t>(uniform(1, max_exp))});
        }
        return Monomial::from_factors(ring->order(), std::move(fs));
    }

    // Monomial of order exactly o.
    Monomial monomial_of_order(const RingPtr &ring, std::uint64_t o, std::size_t max_extra, std::uint32_t max_exp)
    {
        std::vector<Factor> fs;
        Shift top(ring->rank());
        std::uint64_t left = o;
        while (left > 0) {
            const std::size_t j = uniform(0, ring->rank() - 1);
            top.set(j, top[j] + 1);
            --left;
        }
        fs.push_back({Variable{static_cast<std::uint32_t>(uniform(0, ring->num_symbols() - 1)), top},
                      static_cast<std::uint32_t>(uniform(1, max_exp))});
        const std::size_t extra = uniform(0, max_extra);
        for (std::size_t k = 0; k < extra; ++k) {
            Variable v{static_cast<std::uint32_t>(uniform(0, ring->num_symbols() - 1)), shift(ring->rank(), o)};
            fs.push_back({v, static_cast<std::uint32_t>(uniform(1, max_exp))});
        }
        return Monomial::from_factors(ring->order(), std::move(fs));
    }

    FieldElement rational(std::int64_t bound = 5)
    {
        std::int64_t num = 0;
        while (num == 0) {
            num = static_cast<std::int64_t>(uniform(0, 2 * bound)) - bound;
        }
        const auto den = static_cast<long>(uniform(1, 3));
        return FieldElement(mpq_class(num, den));
    }

    Polynomial polynomial(const RingPtr &ring, std::size_t max_terms, std::uint64_t max_shift_degree,
                          std::size_t max_factors, std::uint32_t max_exp)
    {
        std::vector<Term> terms;
        const std::size_t nt = uniform(1, max_terms);
        for (std::size_t k = 0; k < nt; ++k) {
            terms.push_back({rational(), monomial(ring, max_shift_degree, max_factors, max_exp)});
        }
        return Polynomial(ring, std::move(terms));
    }

    Polynomial ord_homogeneous(const RingPtr &ring, std::uint64_t o, std::size_t max_terms, std::size_t max_extra,
                               std::uint32_t max_exp)
    {
        std::vector<Term> terms;
        const std::size_t nt = uniform(1, max_terms);
        for (std::size_t k = 0; k < nt; ++k) {
            terms.push_back({rational(), monomial_of_order(ring, o, max_extra, max_exp)});
        }
        return Polynomial(ring, std::move(terms));
    }

    std::mt19937_64 &engine()
    {
        return m_eng;
    }

private:
    std::mt19937_64 m_eng;
};

} // namespace dgbtest

#endif
