#ifndef DGB_IO_HPP
#define DGB_IO_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include <dgb/error.hpp>
#include <dgb/field.hpp>
#include <dgb/ordering.hpp>
#include <dgb/permutation.hpp>
#include <dgb/polynomial.hpp>
#include <dgb/ring.hpp>

namespace dgb
{

// ---------------------------------------------------------------- printing

inline std::string to_string(const Ring &ring, const Variable &v)
{
    std::ostringstream os;
    os << ring.signature().symbols.at(v.symbol) << v.shift;
    return os.str();
}

inline std::string to_string(const Ring &ring, const Monomial &m)
{
    if (m.is_one()) {
        return "1";
    }
    std::string out;
    for (const auto &f : m.factors()) {
        if (!out.empty()) {
            out += '*';
        }
        out += to_string(ring, f.var);
        if (f.exp != 1) {
            out += '^' + std::to_string(f.exp);
        }
    }
    return out;
}

namespace detail
{

// Writes one term with its sign; first says whether a leading '+' is omitted.
inline void print_term(std::string &out, const Ring &ring, const FieldElement &c, const Monomial &m, bool first)
{
    const auto &params = ring.signature().parameters;
    const bool negative = c.sign() < 0;
    const FieldElement a = negative ? -c : c;
    if (negative) {
        out += '-';
    } else if (!first) {
        out += '+';
    }
    std::string coef;
    if (a.is_rational()) {
        const rational q = a.to_rational();
        if (q != 1 || m.is_one()) {
            coef = q.get_str();
        }
    } else if (a.denominator().is_one() && a.numerator().terms().size() == 1) {
        coef = a.numerator().to_string(params);
    } else if (a.denominator().is_one()) {
        coef = "(" + a.numerator().to_string(params) + ")";
    } else {
        coef = "(" + a.numerator().to_string(params) + ")/(" + a.denominator().to_string(params) + ")";
    }
    out += coef;
    if (!m.is_one()) {
        if (!coef.empty()) {
            out += '*';
        }
        out += to_string(ring, m);
    }
}

} // namespace detail

/// Terms in decreasing order without blanks, e.g. "x(1)^2-1/2*x(0)".
inline std::string to_string(const Polynomial &f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &t : f.terms()) {
        detail::print_term(out, *f.ring(), t.coef, t.mono, first);
        first = false;
    }
    return out;
}

inline std::string to_string(const Ring &ring, const FieldElement &c)
{
    std::string out;
    detail::print_term(out, ring, c, Monomial(), true);
    return out;
}

// ----------------------------------------------------------------- parsing

/// Contents of a .dgb file.
struct ProblemFile {
    RingPtr ring;
    std::vector<Polynomial> ideal;
    std::optional<PermutationAction> permutation;
    std::vector<Polynomial> symmetric_generators;
};

namespace detail
{

enum class Tok { ident, integer, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer
{
public:
    explicit Lexer(std::string_view text) : m_text(text) {}

    Token next()
    {
        skip_blank();
        Token t;
        t.line = m_line;
        t.column = m_col;
        if (m_pos >= m_text.size()) {
            return t;
        }
        const char c = m_text[m_pos];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::ident;
            while (m_pos < m_text.size()
                   && (std::isalnum(static_cast<unsigned char>(m_text[m_pos])) || m_text[m_pos] == '_')) {
                t.text += advance();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::integer;
            while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
                t.text += advance();
            }
        } else if (std::string_view("{}()[];:,+-*/^>=").find(c) != std::string_view::npos) {
            t.kind = Tok::punct;
            t.text = advance();
        } else {
            throw parse_error(std::string("unexpected character '") + c + "'", m_line, m_col);
        }
        return t;
    }

    // Raw text up to (not including) the next ';'.
    std::string raw_until_semicolon()
    {
        std::string out;
        while (m_pos < m_text.size() && m_text[m_pos] != ';') {
            out += advance();
        }
        return out;
    }

    std::size_t line() const noexcept
    {
        return m_line;
    }
    std::size_t column() const noexcept
    {
        return m_col;
    }

private:
    char advance()
    {
        const char c = m_text[m_pos++];
        if (c == '\n') {
            ++m_line;
            m_col = 1;
        } else {
            ++m_col;
        }
        return c;
    }

    void skip_blank()
    {
        while (m_pos < m_text.size()) {
            const char c = m_text[m_pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '#' || (c == '/' && m_pos + 1 < m_text.size() && m_text[m_pos + 1] == '/')) {
                while (m_pos < m_text.size() && m_text[m_pos] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
    std::size_t m_line = 1;
    std::size_t m_col = 1;
};

class Parser
{
public:
    explicit Parser(std::string_view text) : m_lex(text)
    {
        m_cur = m_lex.next();
    }

    ProblemFile problem(RingPtr default_ring)
    {
        ProblemFile out;
        out.ring = std::move(default_ring);
        bool have_ring_block = false, have_ideal = false, have_symmetric = false;
        while (m_cur.kind != Tok::end) {
            const Token head = expect_ident();
            if (head.text == "ring") {
                if (have_ring_block) {
                    fail("duplicate declaration of 'ring'", head);
                }
                if (have_ideal || have_symmetric) {
                    fail("the ring block must come first", head);
                }
                have_ring_block = true;
                out.ring = ring_block();
            } else if (head.text == "ideal") {
                if (have_ideal) {
                    fail("duplicate declaration of 'ideal'", head);
                }
                have_ideal = true;
                if (!out.ring) {
                    fail("ideal declared before any ring", head);
                }
                out.ideal = polynomial_list(out.ring);
            } else if (head.text == "symmetric") {
                if (have_symmetric) {
                    fail("duplicate declaration of 'symmetric'", head);
                }
                have_symmetric = true;
                symmetric_block(out, have_ring_block);
            } else {
                fail("unknown block '" + head.text + "'", head);
            }
        }
        if (!out.ring) {
            throw parse_error("no ring declared", m_cur.line, m_cur.column);
        }
        return out;
    }

    Polynomial standalone_polynomial(const RingPtr &ring)
    {
        Polynomial p = expr(ring);
        if (m_cur.kind != Tok::end) {
            fail("unexpected '" + m_cur.text + "' after polynomial", m_cur);
        }
        return p;
    }

private:
    [[noreturn]] static void fail(const std::string &msg, const Token &at)
    {
        throw parse_error(msg, at.line, at.column);
    }

    bool is_punct(char c) const
    {
        return m_cur.kind == Tok::punct && m_cur.text[0] == c;
    }

    Token take()
    {
        Token t = std::move(m_cur);
        m_cur = m_lex.next();
        return t;
    }

    void expect(char c)
    {
        if (!is_punct(c)) {
            fail(std::string("expected '") + c + "'" + found(), m_cur);
        }
        take();
    }

    std::string found() const
    {
        if (m_cur.kind == Tok::end) {
            return " but reached the end of input";
        }
        return " but found '" + m_cur.text + "'";
    }

    Token expect_ident()
    {
        if (m_cur.kind != Tok::ident) {
            fail("expected a name" + found(), m_cur);
        }
        return take();
    }

    Token expect_integer()
    {
        if (m_cur.kind != Tok::integer) {
            fail("expected an integer" + found(), m_cur);
        }
        return take();
    }

    static std::uint64_t small_integer(const Token &t, std::uint64_t limit)
    {
        if (t.text.size() > 18 || std::stoull(t.text) > limit) {
            fail("integer " + t.text + " is out of range", t);
        }
        return std::stoull(t.text);
    }

    // ---- ring block

    struct OrderDecl {
        OrderKind shift_kind;
        std::vector<Token> shift_names;
        OrderKind symbol_kind;
        std::vector<Token> symbol_names;
        Token at;
    };

    RingPtr ring_block()
    {
        expect('{');
        std::optional<std::size_t> shifts;
        std::optional<std::vector<std::string>> symbols;
        std::optional<std::vector<std::string>> parameters;
        std::optional<OrderDecl> order;
        Token block_start = m_cur;
        while (!is_punct('}')) {
            const Token key = expect_ident();
            expect(':');
            if (key.text == "shifts") {
                if (shifts) {
                    fail("duplicate declaration of 'shifts'", key);
                }
                const Token n = expect_integer();
                shifts = small_integer(n, max_shift_rank);
                if (*shifts == 0) {
                    fail("a ring needs at least one shift generator", n);
                }
            } else if (key.text == "symbols" || key.text == "parameters") {
                auto &slot = key.text == "symbols" ? symbols : parameters;
                if (slot) {
                    fail("duplicate declaration of '" + key.text + "'", key);
                }
                slot = name_list(key.text == "symbols");
            } else if (key.text == "order") {
                if (order) {
                    fail("duplicate declaration of 'order'", key);
                }
                order = order_decl();
            } else {
                fail("unknown ring entry '" + key.text + "'", key);
            }
            expect(';');
        }
        take();
        if (!shifts) {
            fail("ring block lacks 'shifts'", block_start);
        }
        if (!symbols) {
            fail("ring block lacks 'symbols'", block_start);
        }
        RingSignature sig{*shifts, *symbols, parameters.value_or(std::vector<std::string>{})};
        std::set<std::string> all(sig.symbols.begin(), sig.symbols.end());
        for (const auto &p : sig.parameters) {
            if (!all.insert(p).second) {
                fail("duplicate declaration of '" + p + "'", block_start);
            }
        }
        OrderingSpec spec = order ? resolve_order(*order, sig) : OrderingSpec::standard(sig.shift_rank, sig.symbols.size());
        return Ring::make(std::move(sig), std::move(spec));
    }

    std::vector<std::string> name_list(bool nonempty)
    {
        std::vector<std::string> out;
        std::set<std::string> seen;
        if (is_punct(';') && !nonempty) {
            return out;
        }
        while (true) {
            const Token t = expect_ident();
            if (!seen.insert(t.text).second) {
                fail("duplicate declaration of '" + t.text + "'", t);
            }
            out.push_back(t.text);
            if (!is_punct(',')) {
                break;
            }
            take();
        }
        return out;
    }

    OrderDecl order_decl()
    {
        OrderDecl d;
        d.at = m_cur;
        const Token b = expect_ident();
        if (b.text != "block") {
            fail("expected 'block(...)' ordering", b);
        }
        expect('(');
        auto part = [&](const char *name, OrderKind &kind, std::vector<Token> &names) {
            const Token k = expect_ident();
            if (k.text != name) {
                fail(std::string("expected '") + name + "='", k);
            }
            expect('=');
            const Token kt = expect_ident();
            try {
                kind = order_kind_from_string(kt.text);
            } catch (const structural_error &e) {
                fail(e.what(), kt);
            }
            expect('[');
            names.push_back(expect_ident());
            while (is_punct('>')) {
                take();
                names.push_back(expect_ident());
            }
            expect(']');
        };
        part("shifts", d.shift_kind, d.shift_names);
        expect(',');
        part("symbols", d.symbol_kind, d.symbol_names);
        expect(')');
        return d;
    }

    static OrderingSpec resolve_order(const OrderDecl &d, const RingSignature &sig)
    {
        std::vector<std::size_t> sp, yp;
        std::set<std::size_t> seen;
        for (const auto &t : d.shift_names) {
            auto j = shift_generator_index(t.text, sig.shift_rank);
            if (!j) {
                fail("unknown shift generator '" + t.text + "'", t);
            }
            if (!seen.insert(*j).second) {
                fail("shift generator '" + t.text + "' listed twice", t);
            }
            sp.push_back(*j);
        }
        if (sp.size() != sig.shift_rank) {
            fail("ordering must list every shift generator exactly once", d.at);
        }
        seen.clear();
        for (const auto &t : d.symbol_names) {
            auto it = std::find(sig.symbols.begin(), sig.symbols.end(), t.text);
            if (it == sig.symbols.end()) {
                fail("unknown symbol '" + t.text + "'", t);
            }
            const auto i = static_cast<std::size_t>(it - sig.symbols.begin());
            if (!seen.insert(i).second) {
                fail("symbol '" + t.text + "' listed twice", t);
            }
            yp.push_back(i);
        }
        if (yp.size() != sig.symbols.size()) {
            fail("ordering must list every symbol exactly once", d.at);
        }
        return OrderingSpec(d.shift_kind, std::move(sp), d.symbol_kind, std::move(yp));
    }

    // "s1".."sr"; plain "s" when r = 1.
    static std::optional<std::size_t> shift_generator_index(const std::string &name, std::size_t rank)
    {
        if (name == "s" && rank == 1) {
            return 0;
        }
        if (name.size() < 2 || name[0] != 's') {
            return std::nullopt;
        }
        for (std::size_t k = 1; k < name.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(name[k]))) {
                return std::nullopt;
            }
        }
        if (name.size() > 4) {
            return std::nullopt;
        }
        const std::size_t j = std::stoul(name.substr(1));
        if (j < 1 || j > rank) {
            return std::nullopt;
        }
        return j - 1;
    }

    // ---- ideal / symmetric blocks

    std::vector<Polynomial> polynomial_list(const RingPtr &ring)
    {
        expect('{');
        std::vector<Polynomial> out;
        while (!is_punct('}')) {
            out.push_back(expr(ring));
            if (!is_punct('}')) {
                expect(';');
            }
        }
        take();
        return out;
    }

    void symmetric_block(ProblemFile &out, bool have_ring_block)
    {
        expect('{');
        bool have_gens = false;
        while (!is_punct('}')) {
            const Token key = expect_ident();
            if (key.text == "perm") {
                if (out.permutation) {
                    fail("duplicate declaration of 'perm'", key);
                }
                if (!is_punct(':')) {
                    fail("expected ':'" + found(), m_cur);
                }
                // The permutation has its own syntax; read it raw.
                const std::size_t line = m_lex.line(), col = m_lex.column();
                std::string raw = m_lex.raw_until_semicolon();
                try {
                    out.permutation = PermutationAction::parse(raw);
                } catch (const parse_error &e) {
                    throw parse_error(std::string("invalid permutation: ") + e.what(), line, col);
                }
                m_cur = m_lex.next();
                expect(';');
                induce_ring(out, have_ring_block, key);
            } else if (key.text == "generators") {
                if (have_gens) {
                    fail("duplicate declaration of 'generators'", key);
                }
                if (!out.permutation) {
                    fail("'perm' must precede 'generators'", key);
                }
                have_gens = true;
                out.symmetric_generators = polynomial_list(out.ring);
            } else {
                fail("unknown symmetric entry '" + key.text + "'", key);
            }
        }
        take();
    }

    static void induce_ring(ProblemFile &out, bool have_ring_block, const Token &at)
    {
        const auto &perm = *out.permutation;
        if (have_ring_block) {
            if (out.ring->rank() != 1 || out.ring->num_symbols() != perm.num_cycles()) {
                fail("ring must have one shift generator and one symbol per cycle", at);
            }
            return;
        }
        RingSignature sig{1, perm.default_symbol_names(), {}};
        auto spec = OrderingSpec::standard(1, sig.symbols.size(), OrderKind::lex, OrderKind::lex);
        out.ring = Ring::make(std::move(sig), std::move(spec));
    }

    // ---- expressions

    Polynomial expr(const RingPtr &ring)
    {
        Polynomial acc = term(ring);
        while (is_punct('+') || is_punct('-')) {
            const bool minus = take().text == "-";
            Polynomial rhs = term(ring);
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term(const RingPtr &ring)
    {
        Polynomial acc = factor(ring);
        while (is_punct('*') || is_punct('/')) {
            const Token op = take();
            const Token at = m_cur;
            Polynomial rhs = factor(ring);
            if (op.text == "*") {
                acc = acc * rhs;
            } else {
                if (!rhs.is_constant()) {
                    fail("division by a non-constant expression", at);
                }
                if (rhs.is_zero()) {
                    fail("division by zero", at);
                }
                acc = acc.scaled(rhs.lc().inverse());
            }
        }
        return acc;
    }

    Polynomial factor(const RingPtr &ring)
    {
        if (is_punct('-')) {
            take();
            return -factor(ring);
        }
        if (is_punct('+')) {
            take();
            return factor(ring);
        }
        Polynomial base = primary(ring);
        if (is_punct('^')) {
            take();
            const Token e = expect_integer();
            base = power(base, small_integer(e, std::numeric_limits<std::uint32_t>::max()));
        }
        return base;
    }

    static Polynomial power(const Polynomial &base, std::uint64_t e)
    {
        Polynomial result = Polynomial::constant(base.ring(), FieldElement(1));
        Polynomial b = base;
        while (e > 0) {
            if (e & 1u) {
                result = result * b;
            }
            e >>= 1;
            if (e > 0) {
                b = b * b;
            }
        }
        return result;
    }

    Polynomial primary(const RingPtr &ring)
    {
        if (m_cur.kind == Tok::integer) {
            const Token t = take();
            return Polynomial::constant(ring, FieldElement(rational(mpz_class(t.text))));
        }
        if (is_punct('(')) {
            take();
            Polynomial p = expr(ring);
            expect(')');
            return p;
        }
        if (m_cur.kind != Tok::ident) {
            fail("expected a term" + found(), m_cur);
        }
        const Token name = take();
        if (auto i = ring->symbol_index(name.text)) {
            if (!is_punct('(')) {
                fail("symbol '" + name.text + "' needs a shift, e.g. " + name.text + "(0)", name);
            }
            take();
            Shift s = shift_spec(*ring);
            expect(')');
            return Polynomial::variable(ring, Variable{static_cast<std::uint32_t>(*i), s});
        }
        if (auto p = ring->parameter_index(name.text)) {
            return Polynomial::constant(
                ring, FieldElement(ParamPolynomial::parameter(static_cast<std::uint32_t>(*p))));
        }
        fail("unknown symbol '" + name.text + "'", name);
    }

    // Inside x(...): a tuple a1,...,ar or a product s1^a*s2^b.
    Shift shift_spec(const Ring &ring)
    {
        const std::size_t r = ring.rank();
        Shift s(r);
        if (m_cur.kind == Tok::ident) {
            while (true) {
                const Token g = expect_ident();
                auto j = shift_generator_index(g.text, r);
                if (!j) {
                    fail("unknown shift generator '" + g.text + "'", g);
                }
                std::uint64_t e = 1;
                if (is_punct('^')) {
                    take();
                    e = small_integer(expect_integer(), std::numeric_limits<std::uint32_t>::max());
                }
                s.set(*j, detail::checked_add(s[*j], static_cast<std::uint32_t>(e)));
                if (!is_punct('*')) {
                    break;
                }
                take();
            }
            return s;
        }
        std::vector<Shift::exponent_type> entries;
        const Token start = m_cur;
        while (true) {
            if (is_punct('-')) {
                fail("negative shift entry", m_cur);
            }
            const Token v = expect_integer();
            entries.push_back(static_cast<Shift::exponent_type>(
                small_integer(v, std::numeric_limits<Shift::exponent_type>::max())));
            if (!is_punct(',')) {
                break;
            }
            take();
        }
        if (entries.size() != r) {
            fail("arity mismatch: shift has " + std::to_string(entries.size()) + " entries but the ring has rank "
                     + std::to_string(r),
                 start);
        }
        return Shift(std::span<const Shift::exponent_type>(entries));
    }

    Lexer m_lex;
    Token m_cur;
};

} // namespace detail

/// Parses a problem file. default_ring is used when the file has no ring
/// block (and no symmetric block inducing one).
inline ProblemFile parse_problem(std::string_view text, RingPtr default_ring = nullptr)
{
    detail::Parser p(text);
    return p.problem(std::move(default_ring));
}

inline Polynomial parse_polynomial(const RingPtr &ring, std::string_view text)
{
    detail::Parser p(text);
    return p.standalone_polynomial(ring);
}

inline Variable parse_variable(const RingPtr &ring, std::string_view text)
{
    Polynomial p = parse_polynomial(ring, text);
    if (p.size() != 1 || !p.lc().is_one() || p.lm().factors().size() != 1 || p.lm().factors()[0].exp != 1) {
        throw parse_error("expected a single variable such as x(1,0)", 1, 1);
    }
    return p.lm().factors()[0].var;
}

} // namespace dgb

#endif
