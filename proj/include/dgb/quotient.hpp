#ifndef DGB_QUOTIENT_HPP
#define DGB_QUOTIENT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <dgb/completion.hpp>
#include <dgb/error.hpp>
#include <dgb/field.hpp>
#include <dgb/polynomial.hpp>
#include <dgb/reduction.hpp>

namespace dgb
{

/// f_ij = sum_k coeffs[k] x_i(s_j^k), k = 0..degree, coeffs[degree] = 1.
struct LinearRelation {
    std::size_t symbol = 0;
    std::size_t shift_index = 0;
    std::vector<FieldElement> coeffs;

    std::size_t degree() const noexcept
    {
        return coeffs.empty() ? 0 : coeffs.size() - 1;
    }

    Polynomial to_polynomial(const RingPtr &ring) const
    {
        std::vector<Term> terms;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            Variable v{static_cast<std::uint32_t>(symbol),
                       Shift::generator(ring->rank(), shift_index, static_cast<Shift::exponent_type>(k))};
            terms.push_back({coeffs[k], Monomial::variable(v)});
        }
        return Polynomial(ring, std::move(terms));
    }
};

/// Dense square matrix over the coefficient field.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = FieldElement(1);
        }
        return m;
    }

    std::size_t rows() const noexcept
    {
        return m_rows;
    }
    std::size_t cols() const noexcept
    {
        return m_cols;
    }
    FieldElement &operator()(std::size_t i, std::size_t j)
    {
        return m_data[i * m_cols + j];
    }
    const FieldElement &operator()(std::size_t i, std::size_t j) const
    {
        return m_data[i * m_cols + j];
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.m_cols != b.m_rows) {
            throw structural_error("matrix dimension mismatch");
        }
        Matrix c(a.m_rows, b.m_cols);
        for (std::size_t i = 0; i < a.m_rows; ++i) {
            for (std::size_t k = 0; k < a.m_cols; ++k) {
                if (a(i, k).is_zero()) {
                    continue;
                }
                for (std::size_t j = 0; j < b.m_cols; ++j) {
                    c(i, j) += a(i, k) * b(k, j);
                }
            }
        }
        return c;
    }

    Matrix power(std::uint64_t e) const
    {
        Matrix r = identity(m_rows), b = *this;
        while (e > 0) {
            if (e & 1u) {
                r = r * b;
            }
            e >>= 1;
            if (e > 0) {
                b = b * b;
            }
        }
        return r;
    }

    friend Matrix kronecker(const Matrix &a, const Matrix &b)
    {
        Matrix c(a.m_rows * b.m_rows, a.m_cols * b.m_cols);
        for (std::size_t i = 0; i < a.m_rows; ++i) {
            for (std::size_t j = 0; j < a.m_cols; ++j) {
                if (a(i, j).is_zero()) {
                    continue;
                }
                for (std::size_t k = 0; k < b.m_rows; ++k) {
                    for (std::size_t l = 0; l < b.m_cols; ++l) {
                        c(i * b.m_rows + k, j * b.m_cols + l) = a(i, j) * b(k, l);
                    }
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<FieldElement> m_data;
};

/// Quotient P/J by a full family of linear relations, one per (symbol,
/// generator). Normal variables of symbol i are x_i(s_1^k_1...s_r^k_r) with
/// k_j < d_ij, indexed in Kronecker order (k_1 slowest); symbols follow each
/// other in declaration order.
class QuotientPresentation
{
public:
    static QuotientPresentation from_relations(RingPtr ring, std::vector<LinearRelation> relations)
    {
        const std::size_t n = ring->num_symbols(), r = ring->rank();
        QuotientPresentation q;
        q.m_ring = std::move(ring);
        std::vector<std::vector<std::optional<LinearRelation>>> table(n, std::vector<std::optional<LinearRelation>>(r));
        for (auto &rel : relations) {
            if (rel.symbol >= n || rel.shift_index >= r) {
                throw structural_error("relation index out of range");
            }
            if (rel.coeffs.empty() || !rel.coeffs.back().is_one()) {
                throw structural_error("relation must be monic in its top shift");
            }
            auto &slot = table[rel.symbol][rel.shift_index];
            if (slot) {
                throw structural_error("duplicate relation for symbol " + std::to_string(rel.symbol + 1)
                                       + " and generator s" + std::to_string(rel.shift_index + 1));
            }
            slot = std::move(rel);
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<LinearRelation> row;
            for (std::size_t j = 0; j < r; ++j) {
                if (!table[i][j]) {
                    throw structural_error("missing relation for symbol " + std::to_string(i + 1) + " and generator s"
                                           + std::to_string(j + 1));
                }
                row.push_back(std::move(*table[i][j]));
            }
            q.m_rel.push_back(std::move(row));
        }
        q.build_index();
        return q;
    }

    /// Reads relations from polynomials of the form sum_k c_k x_i(s_j^k),
    /// monic in the top term. A relation whose top term is x_i at the
    /// identity shift annihilates x_i and serves every generator.
    static QuotientPresentation from_polynomials(const std::vector<Polynomial> &polys)
    {
        if (polys.empty()) {
            throw structural_error("no relations given");
        }
        const RingPtr ring = polys.front().ring();
        const std::size_t r = ring->rank();
        std::vector<LinearRelation> explicit_rel;
        std::set<std::size_t> annihilated;
        for (const auto &f : polys) {
            if (f.is_zero()) {
                throw structural_error("zero relation");
            }
            const Polynomial g = f.monic();
            const Monomial &top = g.lm();
            if (top.factors().size() != 1 || top.factors()[0].exp != 1) {
                throw structural_error("relation is not linear in a single variable on top");
            }
            const Variable &tv = top.factors()[0].var;
            std::optional<std::size_t> dir;
            for (std::size_t j = 0; j < r; ++j) {
                if (tv.shift[j] != 0) {
                    if (dir) {
                        throw structural_error("relation top shift is not a pure generator power");
                    }
                    dir = j;
                }
            }
            if (!dir) {
                if (g.size() != 1) {
                    throw structural_error("relation top shift is not a pure generator power");
                }
                annihilated.insert(tv.symbol);
                continue;
            }
            LinearRelation rel;
            rel.symbol = tv.symbol;
            rel.shift_index = *dir;
            rel.coeffs.assign(tv.shift[*dir] + 1, FieldElement());
            for (const auto &t : g.terms()) {
                if (t.mono.factors().size() != 1 || t.mono.factors()[0].exp != 1) {
                    throw structural_error("relation is not linear");
                }
                const Variable &v = t.mono.factors()[0].var;
                if (v.symbol != tv.symbol) {
                    throw structural_error("relation mixes symbols");
                }
                for (std::size_t j = 0; j < r; ++j) {
                    if (j != *dir && v.shift[j] != 0) {
                        throw structural_error("relation mixes generators");
                    }
                }
                rel.coeffs[v.shift[*dir]] = t.coef;
            }
            explicit_rel.push_back(std::move(rel));
        }
        std::vector<LinearRelation> all;
        std::set<std::pair<std::size_t, std::size_t>> covered;
        for (auto &rel : explicit_rel) {
            covered.insert({rel.symbol, rel.shift_index});
            all.push_back(std::move(rel));
        }
        for (std::size_t i : annihilated) {
            for (std::size_t j = 0; j < r; ++j) {
                if (!covered.count({i, j})) {
                    all.push_back({i, j, {FieldElement(1)}});
                }
            }
        }
        return from_relations(ring, std::move(all));
    }

    const RingPtr &ring() const noexcept
    {
        return m_ring;
    }
    const LinearRelation &relation(std::size_t i, std::size_t j) const
    {
        return m_rel.at(i).at(j);
    }
    std::size_t degree(std::size_t i, std::size_t j) const
    {
        return m_rel.at(i).at(j).degree();
    }

    std::vector<Polynomial> relation_polynomials() const
    {
        std::vector<Polynomial> out;
        for (const auto &row : m_rel) {
            for (const auto &rel : row) {
                out.push_back(rel.to_polynomial(m_ring));
            }
        }
        return out;
    }

    const std::vector<Variable> &normal_variables() const noexcept
    {
        return m_normal;
    }

    std::size_t num_normal_variables() const noexcept
    {
        return m_normal.size();
    }

    std::optional<std::size_t> index_of(const Variable &v) const
    {
        auto it = m_index.find(v);
        if (it == m_index.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    // Companion matrix of sum_k c_k s^k: ones below the diagonal, last column -c.
    Matrix companion(std::size_t i, std::size_t j) const
    {
        const auto &rel = relation(i, j);
        const std::size_t d = rel.degree();
        Matrix a(d, d);
        for (std::size_t k = 0; k + 1 < d; ++k) {
            a(k + 1, k) = FieldElement(1);
        }
        for (std::size_t k = 0; k < d; ++k) {
            a(k, d - 1) = -rel.coeffs[k];
        }
        return a;
    }

    /// Coordinates of NF(v) over the normal variables, by reduction modulo
    /// Sigma.J.
    std::vector<FieldElement> normal_form_by_reduction(const Variable &v) const
    {
        std::vector<FieldElement> out(m_normal.size());
        Polynomial nf = normal_form(Polynomial::variable(m_ring, v), relation_polynomials());
        for (const auto &t : nf.terms()) {
            if (t.mono.factors().size() != 1 || t.mono.factors()[0].exp != 1) {
                throw domain_error("normal form is not linear");
            }
            auto k = index_of(t.mono.factors()[0].var);
            if (!k) {
                throw domain_error("normal form leaves the normal variables");
            }
            out[*k] = t.coef;
        }
        return out;
    }

    /// Coordinates of NF(x_i(s^k)) as (A_i1^k_1 (x) ... (x) A_ir^k_r) e_1.
    std::vector<FieldElement> normal_form_by_companion(const Variable &v) const
    {
        std::vector<FieldElement> out(m_normal.size());
        const std::size_t i = v.symbol;
        Matrix m = Matrix::identity(1);
        for (std::size_t j = 0; j < m_ring->rank(); ++j) {
            m = kronecker(m, companion(i, j).power(v.shift[j]));
        }
        for (std::size_t row = 0; row < m.rows(); ++row) {
            out[m_offset[i] + row] = m(row, 0);
        }
        return out;
    }

    // Polynomial with the given coordinates.
    Polynomial from_coordinates(const std::vector<FieldElement> &c) const
    {
        std::vector<Term> terms;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (!c[k].is_zero()) {
                terms.push_back({c[k], Monomial::variable(m_normal[k])});
            }
        }
        return Polynomial(m_ring, std::move(terms));
    }

private:
    void build_index()
    {
        const std::size_t n = m_ring->num_symbols(), r = m_ring->rank();
        m_normal.clear();
        m_offset.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            m_offset[i] = m_normal.size();
            std::vector<std::size_t> dims(r);
            std::size_t total = 1;
            for (std::size_t j = 0; j < r; ++j) {
                dims[j] = degree(i, j);
                total *= dims[j];
            }
            for (std::size_t idx = 0; idx < total; ++idx) {
                Shift s(r);
                std::size_t rest = idx;
                for (std::size_t j = r; j-- > 0;) {
                    s.set(j, static_cast<Shift::exponent_type>(rest % dims[j]));
                    rest /= dims[j];
                }
                Variable v{static_cast<std::uint32_t>(i), s};
                m_index[v] = m_normal.size();
                m_normal.push_back(v);
            }
        }
    }

    RingPtr m_ring;
    std::vector<std::vector<LinearRelation>> m_rel;
    std::vector<Variable> m_normal;
    std::vector<std::size_t> m_offset;
    std::map<Variable, std::size_t> m_index;
};

/// Outcome of the finiteness test on a set of leading monomials.
struct NormalVariables {
    bool finite = false;
    std::vector<Variable> variables;
    // (symbol, generator) pairs without a pure power among the monomials.
    std::vector<std::pair<std::size_t, std::size_t>> missing;
};

/// Variables outside the monomial Sigma-ideal generated by lms. Finite
/// exactly when every x_i(s_j^d) lies in that ideal for some d.
inline NormalVariables normal_variables(const RingPtr &ring, const std::vector<Monomial> &lms)
{
    const std::size_t n = ring->num_symbols(), r = ring->rank();
    std::vector<Polynomial> as_polys;
    for (const auto &m : lms) {
        as_polys.push_back(Polynomial::monomial(ring, m));
    }
    NormalVariables out;
    if (as_polys.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                out.missing.emplace_back(i, j);
            }
        }
        return out;
    }
    auto table = check_finite_membership(as_polys);
    if (!table) {
        // Recompute which pairs are uncovered.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                bool hit = false;
                for (const auto &m : lms) {
                    if (m.is_one()) {
                        hit = true;
                        break;
                    }
                    if (m.factors().size() != 1 || m.factors()[0].exp != 1 || m.factors()[0].var.symbol != i) {
                        continue;
                    }
                    const Shift &s = m.factors()[0].var.shift;
                    bool pure = true;
                    for (std::size_t l = 0; l < r; ++l) {
                        if (l != j && s[l] != 0) {
                            pure = false;
                        }
                    }
                    hit = hit || pure;
                }
                if (!hit) {
                    out.missing.emplace_back(i, j);
                }
            }
        }
        return out;
    }
    out.finite = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t total = 1;
        for (std::size_t j = 0; j < r; ++j) {
            total *= (*table)[i][j];
        }
        for (std::size_t idx = 0; idx < total; ++idx) {
            Shift s(r);
            std::size_t rest = idx;
            for (std::size_t j = r; j-- > 0;) {
                s.set(j, static_cast<Shift::exponent_type>(rest % (*table)[i][j]));
                rest /= (*table)[i][j];
            }
            Variable v{static_cast<std::uint32_t>(i), s};
            if (!find_divisor(Monomial::variable(v), as_polys).has_value()) {
                out.variables.push_back(v);
            }
        }
    }
    return out;
}

inline bool is_noetherian_quotient(const RingPtr &ring, const std::vector<Monomial> &lms)
{
    return normal_variables(ring, lms).finite;
}

inline bool is_noetherian_quotient(const QuotientPresentation &)
{
    return true;
}

// The relation family is a Groebner Sigma-basis; checked with the finite
// criterion.
inline bool relations_are_groebner(const QuotientPresentation &q)
{
    return verify_sigma_gbasis(q.relation_polynomials()).ok;
}

} // namespace dgb

#endif
