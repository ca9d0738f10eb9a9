#ifndef DGB_REPORT_HPP
#define DGB_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <dgb/completion.hpp>
#include <dgb/io.hpp>

namespace dgb
{

using json = nlohmann::ordered_json;

/// Settings echoed into a run report.
struct RunConfig {
    std::string command;
    std::string input;
    CompletionOptions options;
    bool minimal = false;
    bool interreduce = false;
};

inline json to_json(const PairStats &s)
{
    return json{{"generated", s.generated},
                {"product_criterion", s.product_criterion},
                {"sigma_criterion", s.sigma_criterion},
                {"chain_criterion", s.chain_criterion},
                {"zero_reductions", s.zero_reductions},
                {"new_elements", s.new_elements},
                {"pairs_beyond_bound", s.pairs_beyond_bound},
                {"reductions", s.reductions},
                {"sweeps", s.sweeps}};
}

inline json basis_json(const std::vector<Polynomial> &G)
{
    json out = json::array();
    for (const auto &g : G) {
        out.push_back(to_string(g));
    }
    return out;
}

inline json leading_monomials_json(const std::vector<Polynomial> &G)
{
    json out = json::array();
    for (const auto &g : G) {
        out.push_back(g.is_zero() ? std::string("0") : to_string(*g.ring(), g.lm()));
    }
    return out;
}

inline json membership_json(const std::vector<Polynomial> &G)
{
    auto table = check_finite_membership(G);
    if (!table) {
        return nullptr;
    }
    return json(*table);
}

inline json to_json(const RunConfig &c)
{
    json out{{"command", c.command},
             {"input", c.input},
             {"mode", to_string(c.options.mode)},
             {"chain_criterion", c.options.use_chain_criterion},
             {"pair_budget", c.options.max_pair_budget},
             {"order_cap", c.options.max_order_cap},
             {"minimal", c.minimal},
             {"interreduce", c.interreduce}};
    if (c.options.mode == CompletionMode::truncated) {
        out["truncation_order"] = c.options.truncation_order;
    }
    return out;
}

inline json run_report(const SigmaBasis &B, const RunConfig &config, double seconds)
{
    json out;
    out["status"] = to_string(B.status);
    out["order_bound"] = B.order_bound ? json(*B.order_bound) : json(nullptr);
    if (B.ring) {
        out["ordering"] = B.ring->order().to_string(B.ring->signature().symbols);
    }
    out["basis"] = basis_json(B.elements);
    out["leading_monomials"] = leading_monomials_json(B.elements);
    out["stats"] = to_json(B.stats);
    out["membership"] = membership_json(B.elements);
    out["notes"] = B.notes;
    out["wall_clock_seconds"] = seconds;
    out["config"] = to_json(config);
    return out;
}

inline json verify_report_json(const VerifyReport &rep, const std::vector<Polynomial> &G)
{
    json out{{"ok", rep.ok}, {"pairs_checked", rep.pairs_checked}};
    if (rep.failing_pair) {
        const auto &cp = *rep.failing_pair;
        auto shift_text = [](const Shift &s) {
            std::ostringstream os;
            os << s;
            return os.str();
        };
        out["failing_pair"] = json{{"left", cp.left_index},
                                   {"left_shift", shift_text(cp.left_shift)},
                                   {"right", cp.right_index},
                                   {"right_shift", shift_text(cp.right_shift)},
                                   {"overlap", to_string(*G.front().ring(), cp.overlap_lcm)}};
    }
    if (rep.remainder) {
        out["remainder"] = to_string(*rep.remainder);
    }
    if (!rep.note.empty()) {
        out["note"] = rep.note;
    }
    return out;
}

/// Plain-text rendering of a run report.
inline std::string text_report(const SigmaBasis &B, bool with_stats, double seconds)
{
    std::ostringstream os;
    os << "status: " << to_string(B.status);
    if (B.order_bound) {
        os << " (order bound " << *B.order_bound << ")";
    }
    os << "\n";
    os << "elements: " << B.elements.size() << "\n";
    for (const auto &g : B.elements) {
        os << "  " << to_string(g) << "\n";
    }
    for (const auto &n : B.notes) {
        os << "note: " << n << "\n";
    }
    if (with_stats) {
        const auto &s = B.stats;
        os << "pairs generated: " << s.generated << "\n"
           << "killed by product criterion: " << s.product_criterion << "\n"
           << "killed by sigma criterion: " << s.sigma_criterion << "\n"
           << "killed by chain criterion: " << s.chain_criterion << "\n"
           << "reduced to zero: " << s.zero_reductions << "\n"
           << "new elements: " << s.new_elements << "\n"
           << "reductions: " << s.reductions << "\n"
           << "sweeps: " << s.sweeps << "\n";
        auto table = check_finite_membership(B.elements);
        os << "finite membership: ";
        if (table) {
            for (const auto &row : *table) {
                os << "[";
                for (std::size_t j = 0; j < row.size(); ++j) {
                    os << (j ? "," : "") << row[j];
                }
                os << "]";
            }
            os << "\n";
        } else {
            os << "none\n";
        }
        os << "wall clock: " << seconds << " s\n";
    }
    return os.str();
}

} // namespace dgb

#endif
