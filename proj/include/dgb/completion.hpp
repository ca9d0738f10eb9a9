#ifndef DGB_COMPLETION_HPP
#define DGB_COMPLETION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <dgb/error.hpp>
#include <dgb/monomial.hpp>
#include <dgb/polynomial.hpp>
#include <dgb/reduction.hpp>

namespace dgb
{

/// The pair (left_shift . G[left_index], right_shift . G[right_index]).
struct CriticalPair {
    std::size_t left_index = 0;
    std::size_t right_index = 0;
    Shift left_shift;
    Shift right_shift;
    Monomial overlap_lcm;
    OrderValue ord_bound;
};

/// Pairs surviving the Sigma-criterion and the product criterion: for each
/// variable x_i(a) of lm f and x_i(b) of lm g with the same symbol, with
/// d = gcd(a,b), the shifts (b/d, a/d). Duplicates are removed; for f == g
/// (same_element) the identity pair is dropped but both orientations of the
/// others are kept.
inline std::vector<CriticalPair> critical_pairs(const Polynomial &f, const Polynomial &g, bool same_element = false,
                                                std::size_t left_index = 0, std::size_t right_index = 1,
                                                std::size_t *matches = nullptr)
{
    if (f.is_zero() || g.is_zero()) {
        throw domain_error("critical pairs of the zero polynomial");
    }
    if (!same_ring(f, g)) {
        throw structural_error("polynomials belong to different rings");
    }
    const auto &o = f.order();
    std::vector<CriticalPair> out;
    std::set<std::pair<Shift, Shift>> seen;
    for (const auto &a : f.lm().factors()) {
        for (const auto &b : g.lm().factors()) {
            if (a.var.symbol != b.var.symbol) {
                continue;
            }
            if (matches) {
                ++*matches;
            }
            const Shift d = gcd(a.var.shift, b.var.shift);
            Shift s = div(b.var.shift, d);
            Shift t = div(a.var.shift, d);
            if (same_element && s == t) {
                continue;
            }
            if (!seen.insert({s, t}).second) {
                continue;
            }
            Monomial l = monomial_lcm(o, shift_monomial(s, f.lm()), shift_monomial(t, g.lm()));
            OrderValue ob = ord(l);
            out.push_back({left_index, right_index, std::move(s), std::move(t), std::move(l), ob});
        }
    }
    return out;
}

enum class CompletionMode { plain, truncated, adaptive };

enum class BasisStatus { complete, complete_up_to_order, budget_exhausted };

inline std::string to_string(BasisStatus s)
{
    switch (s) {
        case BasisStatus::complete:
            return "complete";
        case BasisStatus::complete_up_to_order:
            return "complete_up_to_order";
        case BasisStatus::budget_exhausted:
            return "budget_exhausted";
    }
    return "?";
}

inline std::string to_string(CompletionMode m)
{
    switch (m) {
        case CompletionMode::plain:
            return "plain";
        case CompletionMode::truncated:
            return "truncated";
        case CompletionMode::adaptive:
            return "adaptive";
    }
    return "?";
}

struct CompletionOptions {
    CompletionMode mode = CompletionMode::plain;
    std::int64_t truncation_order = 0;
    bool use_chain_criterion = true;
    // Fully reduce the generators against each other before pairing.
    bool autoreduce_input = true;
    // S-polynomial reductions allowed before giving up.
    std::uint64_t max_pair_budget = 100000;
    // Largest shift-degree bound the adaptive mode may reach.
    std::uint64_t max_order_cap = 24;
};

struct PairStats {
    std::uint64_t generated = 0;
    std::uint64_t product_criterion = 0;
    std::uint64_t sigma_criterion = 0;
    std::uint64_t chain_criterion = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t new_elements = 0;
    std::uint64_t pairs_beyond_bound = 0;
    std::uint64_t reductions = 0;
    std::uint64_t sweeps = 0;
};

struct SigmaBasis {
    RingPtr ring;
    std::vector<Polynomial> elements;
    BasisStatus status = BasisStatus::complete;
    // Truncation order, or the final shift-degree bound of the adaptive mode.
    std::optional<std::int64_t> order_bound;
    PairStats stats;
    std::vector<std::string> notes;
};

namespace detail
{

// Canonical identity of a pair class: (i, j, s, t) with i < j, or i == j and
// s < t structurally.
using PairKey = std::tuple<std::size_t, std::size_t, Shift, Shift>;

inline PairKey canonical_key(std::size_t i, const Shift &s, std::size_t j, const Shift &t)
{
    if (i < j || (i == j && s < t)) {
        return {i, j, s, t};
    }
    return {j, i, t, s};
}

class CompletionEngine
{
public:
    CompletionEngine(RingPtr ring, const CompletionOptions &opts, ReductionScope scope)
        : m_ring(std::move(ring)), m_opts(opts), m_scope(scope), m_queue(QueueLess{&m_ring->order()})
    {
    }

    const std::vector<Polynomial> &basis() const noexcept
    {
        return m_basis;
    }
    PairStats &stats() noexcept
    {
        return m_stats;
    }
    const ReductionScope &scope() const noexcept
    {
        return m_scope;
    }

    void add_element(Polynomial h)
    {
        const std::size_t n = m_basis.size();
        m_basis.push_back(h.monic());
        m_ords.push_back(ord_poly(m_basis.back()));
        for (std::size_t k = 0; k <= n; ++k) {
            generate_pairs(k, n);
        }
    }

    // Widens the shift-degree bound and queues deferred pairs that now fit.
    void set_shift_bound(std::uint64_t bound)
    {
        m_scope.max_shift_degree = bound;
        for (auto it = m_deferred.begin(); it != m_deferred.end();) {
            if (admissible(it->second)) {
                m_queue.insert(it->second);
                m_pending.insert(it->first);
                it = m_deferred.erase(it);
            } else {
                ++it;
            }
        }
    }

    // Processes pairs until none are left (true) or the budget runs out.
    bool run()
    {
        while (!m_queue.empty()) {
            if (m_processed >= m_opts.max_pair_budget) {
                return false;
            }
            Entry e = *m_queue.begin();
            m_queue.erase(m_queue.begin());
            const PairKey key = canonical_key(e.cp.left_index, e.cp.left_shift, e.cp.right_index, e.cp.right_shift);
            m_pending.erase(key);
            if (m_opts.use_chain_criterion && chain_removable(e.cp)) {
                ++m_stats.chain_criterion;
                continue;
            }
            ++m_processed;
            ++m_stats.reductions;
            const Polynomial &f = m_basis[e.cp.left_index];
            const Polynomial &g = m_basis[e.cp.right_index];
            Polynomial s = shifted_spoly(e.cp.left_shift, f, e.cp.right_shift, g);
            Polynomial h = reduce(s, m_basis, m_scope);
            if (h.is_zero()) {
                ++m_stats.zero_reductions;
            } else {
                ++m_stats.new_elements;
                add_element(std::move(h));
                if (m_basis.back().is_constant()) {
                    m_queue.clear();
                    m_pending.clear();
                    m_deferred.clear();
                    return true;
                }
            }
        }
        return true;
    }

    bool has_deferred() const noexcept
    {
        return !m_deferred.empty();
    }

private:
    struct Entry {
        CriticalPair cp;
        std::uint64_t age = 0;
    };

    struct QueueLess {
        const OrderingSpec *order;
        bool operator()(const Entry &a, const Entry &b) const
        {
            if (a.cp.ord_bound != b.cp.ord_bound) {
                return a.cp.ord_bound < b.cp.ord_bound;
            }
            if (auto c = compare_monomials(*order, a.cp.overlap_lcm, b.cp.overlap_lcm); c != 0) {
                return c < 0;
            }
            return a.age < b.age;
        }
    };

    bool admissible(const Entry &e) const
    {
        const auto &cp = e.cp;
        return shifted_in_scope(cp.left_index, cp.left_shift) && shifted_in_scope(cp.right_index, cp.right_shift);
    }

    bool shifted_in_scope(std::size_t k, const Shift &s) const
    {
        if (m_scope.max_shift_degree && s.degree() > *m_scope.max_shift_degree) {
            return false;
        }
        if (m_scope.max_order && !m_ords[k].plus(s.degree()).at_most(*m_scope.max_order)) {
            return false;
        }
        return true;
    }

    void generate_pairs(std::size_t k, std::size_t n)
    {
        const Polynomial &f = m_basis[k];
        const Polynomial &g = m_basis[n];
        if (f.lm().is_one() || g.lm().is_one()) {
            return;
        }
        std::size_t matches = 0;
        auto cps = critical_pairs(f, g, k == n, k, n, &matches);
        m_stats.generated += matches;
        if (matches == 0) {
            ++m_stats.product_criterion;
            return;
        }
        std::size_t fresh = 0;
        for (auto &cp : cps) {
            const PairKey key = canonical_key(cp.left_index, cp.left_shift, cp.right_index, cp.right_shift);
            if (m_known.count(key)) {
                continue;
            }
            m_known.insert(key);
            ++fresh;
            Entry e{std::move(cp), m_age++};
            if (admissible(e)) {
                m_pending.insert(key);
                m_queue.insert(std::move(e));
            } else {
                ++m_stats.pairs_beyond_bound;
                m_deferred.emplace(key, std::move(e));
            }
        }
        m_stats.sigma_criterion += matches - fresh;
    }

    // Status of the pair (s.G[a], t.G[b]) for the chain criterion.
    bool is_open(std::size_t a, const Shift &s, std::size_t b, const Shift &t) const
    {
        const auto &o = m_ring->order();
        const Monomial la = shift_monomial(s, m_basis[a].lm());
        const Monomial lb = shift_monomial(t, m_basis[b].lm());
        if (coprime(o, la, lb)) {
            return false;
        }
        const Shift d = gcd(s, t);
        const PairKey key = canonical_key(a, div(s, d), b, div(t, d));
        return m_pending.count(key) > 0 || m_deferred.count(key) > 0;
    }

    // Buchberger's chain criterion over the shifted elements of the basis.
    bool chain_removable(const CriticalPair &cp) const
    {
        const auto &o = m_ring->order();
        const Monomial &L = cp.overlap_lcm;
        for (std::size_t k = 0; k < m_basis.size(); ++k) {
            const Monomial &lk = m_basis[k].lm();
            if (lk.is_one()) {
                continue;
            }
            const Variable &anchor = lk.largest_variable();
            std::set<Shift> tried;
            for (const auto &f : L.factors()) {
                if (f.var.symbol != anchor.symbol || !divides(anchor.shift, f.var.shift)) {
                    continue;
                }
                Shift nu = div(f.var.shift, anchor.shift);
                if (!tried.insert(nu).second || !shifted_in_scope(k, nu)) {
                    continue;
                }
                if ((k == cp.left_index && nu == cp.left_shift) || (k == cp.right_index && nu == cp.right_shift)) {
                    continue;
                }
                if (!divides(o, shift_monomial(nu, lk), L)) {
                    continue;
                }
                if (is_open(cp.left_index, cp.left_shift, k, nu) || is_open(k, nu, cp.right_index, cp.right_shift)) {
                    continue;
                }
                return true;
            }
        }
        return false;
    }

    RingPtr m_ring;
    CompletionOptions m_opts;
    ReductionScope m_scope;
    std::vector<Polynomial> m_basis;
    std::vector<OrderValue> m_ords;
    std::set<Entry, QueueLess> m_queue;
    std::set<PairKey> m_pending;
    std::set<PairKey> m_known;
    std::map<PairKey, Entry> m_deferred;
    PairStats m_stats;
    std::uint64_t m_age = 0;
    std::uint64_t m_processed = 0;
};

inline OrderValue max_lm_order(const std::vector<Polynomial> &G)
{
    OrderValue d = OrderValue::neg_inf();
    for (const auto &g : G) {
        d = max(d, ord(g.lm()));
    }
    return d;
}

inline RingPtr common_ring(const std::vector<Polynomial> &H)
{
    if (H.empty()) {
        return nullptr;
    }
    for (const auto &h : H) {
        if (!same_ring(h, H.front())) {
            throw structural_error("generators belong to different rings");
        }
    }
    return H.front().ring();
}

} // namespace detail

/// Repeatedly replaces each element by its full reduction modulo Sigma.(the
/// others) until nothing changes; zeros are dropped, results are monic.
/// Returns the number of replacements.
inline std::size_t autoreduce(std::vector<Polynomial> &G, const ReductionScope &scope = {})
{
    std::size_t changes = 0;
    std::vector<Polynomial> cur;
    for (const auto &g : G) {
        if (!g.is_zero()) {
            cur.push_back(g.monic());
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            std::vector<Polynomial> others;
            for (std::size_t m = 0; m < cur.size(); ++m) {
                if (m != k) {
                    others.push_back(cur[m]);
                }
            }
            Polynomial r = reduce_full(cur[k], others, scope);
            if (r == cur[k]) {
                continue;
            }
            ++changes;
            changed = true;
            if (r.is_zero()) {
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(k));
            } else {
                cur[k] = std::move(r);
            }
            break;
        }
    }
    G = std::move(cur);
    return changes;
}

/// Drops every element whose leading monomial is divisible by a shifted
/// leading monomial of another element; among equal leading monomials the
/// earliest element stays.
inline std::vector<Polynomial> minimalize(const std::vector<Polynomial> &G, const ReductionScope &scope = {})
{
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < G.size(); ++k) {
        bool redundant = false;
        for (std::size_t m = 0; m < G.size() && !redundant; ++m) {
            if (m == k) {
                continue;
            }
            if (G[m].lm() == G[k].lm()) {
                redundant = m < k;
                continue;
            }
            redundant = find_divisor(G[k].lm(), {G[m]}, scope).has_value();
        }
        if (!redundant) {
            out.push_back(G[k]);
        }
    }
    return out;
}

/// Tail-reduces each element against Sigma.(the others) and makes it monic.
inline std::vector<Polynomial> interreduce(const std::vector<Polynomial> &G, const ReductionScope &scope = {})
{
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < G.size(); ++k) {
        std::vector<Polynomial> others;
        for (std::size_t m = 0; m < G.size(); ++m) {
            if (m != k) {
                others.push_back(G[m]);
            }
        }
        const Polynomial &g = G[k];
        Polynomial tail = Polynomial::from_sorted(g.ring(), {g.terms().begin() + 1, g.terms().end()});
        Polynomial r = Polynomial::monomial(g.ring(), g.lm(), g.lc())
                       + normal_form(tail, others, scope);
        out.push_back(r.monic());
    }
    return out;
}

struct VerifyReport {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::optional<CriticalPair> failing_pair;
    std::optional<Polynomial> remainder;
    std::string note;
};

/// Checks every Sigma-criterion S-polynomial of G for reduction to zero by
/// Sigma_{2d}.G, d the largest order of a leading monomial.
inline VerifyReport verify_sigma_gbasis(const std::vector<Polynomial> &G_in)
{
    VerifyReport rep;
    std::vector<Polynomial> G;
    for (const auto &g : G_in) {
        if (!g.is_zero()) {
            G.push_back(g);
        }
    }
    if (G.empty()) {
        return rep;
    }
    detail::common_ring(G);
    if (!G.front().order().is_ord_compatible()) {
        rep.ok = false;
        rep.note = "ordering is not compatible with the order function; the finite criterion does not apply";
        return rep;
    }
    if (std::any_of(G.begin(), G.end(), [](const Polynomial &g) { return g.lm().is_one(); })) {
        rep.note = "basis contains a constant";
        return rep;
    }
    const OrderValue d = detail::max_lm_order(G);
    ReductionScope scope;
    scope.max_shift_degree = 2 * d.value();
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i; j < G.size(); ++j) {
            for (const auto &cp : critical_pairs(G[i], G[j], i == j, i, j)) {
                if (i == j && !(cp.left_shift < cp.right_shift)) {
                    continue;
                }
                ++rep.pairs_checked;
                Polynomial s = shifted_spoly(cp.left_shift, G[i], cp.right_shift, G[j]);
                Polynomial h = reduce(s, G, scope);
                if (!h.is_zero()) {
                    rep.ok = false;
                    rep.failing_pair = cp;
                    rep.remainder = reduce_full(h, G, scope);
                    if (rep.remainder->is_zero()) {
                        rep.remainder = h.monic();
                    }
                    return rep;
                }
            }
        }
    }
    return rep;
}

/// Minimal d_ij such that x_i(s_j^{d_ij}) lies in the monomial ideal
/// generated by lm(Sigma.G); std::nullopt unless every (i,j) is covered.
inline std::optional<std::vector<std::vector<std::uint64_t>>> check_finite_membership(const std::vector<Polynomial> &G)
{
    if (G.empty()) {
        return std::nullopt;
    }
    const RingPtr ring = detail::common_ring(G);
    const std::size_t n = ring->num_symbols(), r = ring->rank();
    std::vector<std::vector<std::optional<std::uint64_t>>> table(n, std::vector<std::optional<std::uint64_t>>(r));
    auto offer = [&](std::size_t i, std::size_t j, std::uint64_t d) {
        if (!table[i][j] || d < *table[i][j]) {
            table[i][j] = d;
        }
    };
    for (const auto &g : G) {
        if (g.is_zero()) {
            continue;
        }
        const Monomial &m = g.lm();
        if (m.is_one()) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < r; ++j) {
                    offer(i, j, 0);
                }
            }
            continue;
        }
        if (m.factors().size() != 1 || m.factors()[0].exp != 1) {
            continue;
        }
        const Variable &v = m.factors()[0].var;
        std::size_t nonzero = 0, which = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (v.shift[j] != 0) {
                ++nonzero;
                which = j;
            }
        }
        if (nonzero == 0) {
            for (std::size_t j = 0; j < r; ++j) {
                offer(v.symbol, j, 0);
            }
        } else if (nonzero == 1) {
            offer(v.symbol, which, v.shift[which]);
        }
    }
    std::vector<std::vector<std::uint64_t>> out(n, std::vector<std::uint64_t>(r));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (!table[i][j]) {
                return std::nullopt;
            }
            out[i][j] = *table[i][j];
        }
    }
    return out;
}

namespace detail
{

inline SigmaBasis trivial_result(RingPtr ring, std::vector<Polynomial> G, const PairStats &stats)
{
    SigmaBasis out;
    out.ring = std::move(ring);
    out.stats = stats;
    for (const auto &g : G) {
        if (g.lm().is_one()) {
            out.elements = {Polynomial::constant(g.ring(), FieldElement(1))};
            out.notes.push_back("the ideal is the whole ring");
            return out;
        }
    }
    out.elements = std::move(G);
    return out;
}

} // namespace detail

/// Buchberger completion for Sigma-ideals in the mode chosen by opts.
inline SigmaBasis sigma_gbasis(const std::vector<Polynomial> &H, const CompletionOptions &opts = {})
{
    const RingPtr ring = detail::common_ring(H);
    if (!ring) {
        SigmaBasis empty;
        if (opts.mode == CompletionMode::truncated) {
            empty.status = BasisStatus::complete_up_to_order;
            empty.order_bound = opts.truncation_order;
        }
        return empty;
    }
    std::vector<Polynomial> G;
    for (const auto &h : H) {
        if (!h.is_zero()) {
            G.push_back(h.monic());
        }
    }

    ReductionScope scope;
    PairStats pre;
    if (opts.mode == CompletionMode::truncated) {
        if (opts.truncation_order < 0) {
            throw domain_error("truncation order must be non-negative");
        }
        scope.max_order = opts.truncation_order;
        std::erase_if(G, [&](const Polynomial &g) { return !ord_poly(g).at_most(opts.truncation_order); });
    } else if (opts.mode == CompletionMode::adaptive) {
        if (!ring->order().is_ord_compatible()) {
            throw domain_error("adaptive completion needs an ordering compatible with the order function");
        }
        if (!G.empty()) {
            const OrderValue d = detail::max_lm_order(G);
            scope.max_shift_degree = d.is_neg_inf() ? 0 : 2 * d.value();
        }
    }
    if (opts.autoreduce_input) {
        pre.reductions += autoreduce(G, scope);
    }

    auto finish = [&](SigmaBasis out) {
        out.ring = ring;
        if (opts.mode == CompletionMode::truncated && out.status != BasisStatus::budget_exhausted) {
            out.status = BasisStatus::complete_up_to_order;
        }
        if (opts.mode == CompletionMode::truncated) {
            out.order_bound = opts.truncation_order;
        }
        return out;
    };

    if (G.empty() || std::any_of(G.begin(), G.end(), [](const Polynomial &g) { return g.lm().is_one(); })) {
        return finish(detail::trivial_result(ring, G, pre));
    }

    detail::CompletionEngine engine(ring, opts, scope);
    engine.stats() = pre;
    for (auto &g : G) {
        engine.add_element(g);
    }

    SigmaBasis out;
    if (opts.mode != CompletionMode::adaptive) {
        engine.stats().sweeps = 1;
        const bool closed = engine.run();
        out.elements = engine.basis();
        out.stats = engine.stats();
        out.status = closed ? BasisStatus::complete : BasisStatus::budget_exhausted;
        if (!closed) {
            out.notes.push_back("pair budget of " + std::to_string(opts.max_pair_budget) + " exhausted");
        }
        if (closed && opts.mode == CompletionMode::truncated && engine.has_deferred()) {
            out.notes.push_back("pairs beyond the truncation order were skipped");
        }
        if (out.elements.size() == 1 && out.elements[0].lm().is_one()) {
            return finish(detail::trivial_result(ring, out.elements, out.stats));
        }
        return finish(out);
    }

    // Adaptive: raise the shift bound to 2d until d stops growing, then
    // certify with the finite criterion.
    std::uint64_t bound = *scope.max_shift_degree;
    while (true) {
        if (bound > opts.max_order_cap) {
            out.status = BasisStatus::budget_exhausted;
            out.notes.push_back("shift-degree bound " + std::to_string(bound) + " exceeds the cap "
                                + std::to_string(opts.max_order_cap));
            break;
        }
        engine.set_shift_bound(bound);
        ++engine.stats().sweeps;
        if (!engine.run()) {
            out.status = BasisStatus::budget_exhausted;
            out.notes.push_back("pair budget of " + std::to_string(opts.max_pair_budget) + " exhausted");
            break;
        }
        const auto &B = engine.basis();
        if (B.back().lm().is_one()) {
            return finish(detail::trivial_result(ring, B, engine.stats()));
        }
        const OrderValue d = detail::max_lm_order(B);
        if (2 * d.value() > bound) {
            bound = 2 * d.value();
            continue;
        }
        VerifyReport rep = verify_sigma_gbasis(B);
        if (rep.ok) {
            out.status = BasisStatus::complete;
            break;
        }
        // Not expected after a closed sweep; keep completing with the witness.
        out.notes.push_back("verification produced a new element; continuing");
        engine.add_element(*rep.remainder);
    }
    out.elements = engine.basis();
    out.stats = engine.stats();
    out.order_bound = static_cast<std::int64_t>(bound);
    return finish(out);
}

inline SigmaBasis sigma_gbasis_truncated(const std::vector<Polynomial> &H, std::int64_t d,
                                         CompletionOptions opts = {})
{
    opts.mode = CompletionMode::truncated;
    opts.truncation_order = d;
    return sigma_gbasis(H, opts);
}

inline SigmaBasis sigma_gbasis_adaptive(const std::vector<Polynomial> &H, CompletionOptions opts = {})
{
    opts.mode = CompletionMode::adaptive;
    return sigma_gbasis(H, opts);
}

} // namespace dgb

#endif
