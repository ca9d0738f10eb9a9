#ifndef DGB_CLI_HPP
#define DGB_CLI_HPP

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dgb/completion.hpp>
#include <dgb/error.hpp>
#include <dgb/io.hpp>
#include <dgb/permutation.hpp>
#include <dgb/quotient.hpp>
#include <dgb/reduction.hpp>
#include <dgb/report.hpp>
#include <dgb/symmetric.hpp>

namespace dgb::cli
{

enum ExitCode : int { ok = 0, usage = 1, not_certified = 2 };

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::uint64_t default_pair_budget()
{
    if (const char *env = std::getenv("DGB_PAIR_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw std::runtime_error(std::string("DGB_PAIR_BUDGET is not a number: ") + env);
        }
    }
    return CompletionOptions{}.max_pair_budget;
}

struct ComputeArgs {
    std::string input;
    std::optional<std::int64_t> truncate;
    bool adaptive = false, no_chain = false, minimal = false, interreduce = false, stats = false, json = false;
    std::optional<std::uint64_t> pair_budget, order_cap;
};

struct VerifyArgs {
    std::string input;
    bool json = false;
};

struct ReduceArgs {
    std::string input, poly;
    bool full = false, certificate = false;
};

struct SymmetricArgs {
    std::string perm, gens;
    bool classical = false, minimal = false, json = false;
};

struct NormalFormArgs {
    std::string input;
    std::vector<std::string> vars;
};

inline int compute(const ComputeArgs &a, std::ostream &out)
{
    const auto t0 = std::chrono::steady_clock::now();
    ProblemFile pf = parse_problem(read_file(a.input));
    RunConfig cfg;
    cfg.command = "compute";
    cfg.input = a.input;
    cfg.minimal = a.minimal;
    cfg.interreduce = a.interreduce;
    CompletionOptions &o = cfg.options;
    o.use_chain_criterion = !a.no_chain;
    o.max_pair_budget = a.pair_budget ? *a.pair_budget : default_pair_budget();
    if (a.order_cap) {
        o.max_order_cap = *a.order_cap;
    }
    if (a.truncate) {
        o.mode = CompletionMode::truncated;
        o.truncation_order = *a.truncate;
    } else if (a.adaptive) {
        o.mode = CompletionMode::adaptive;
    }
    SigmaBasis B = sigma_gbasis(pf.ideal, o);
    if (B.status != BasisStatus::budget_exhausted) {
        const ReductionScope scope =
            o.mode == CompletionMode::truncated ? ReductionScope{std::nullopt, o.truncation_order} : ReductionScope{};
        if (a.minimal || a.interreduce) {
            B.elements = minimalize(B.elements, scope);
        }
        if (a.interreduce) {
            B.elements = interreduce(B.elements, scope);
        }
    }
    const double secs = seconds_since(t0);
    if (a.json) {
        out << run_report(B, cfg, secs).dump(2) << "\n";
    } else {
        out << text_report(B, a.stats, secs);
    }
    return B.status == BasisStatus::budget_exhausted ? not_certified : ok;
}

inline int verify(const VerifyArgs &a, std::ostream &out)
{
    ProblemFile pf = parse_problem(read_file(a.input));
    VerifyReport rep = verify_sigma_gbasis(pf.ideal);
    if (a.json) {
        out << verify_report_json(rep, pf.ideal).dump(2) << "\n";
    } else {
        out << (rep.ok ? "verified" : "not a Groebner Sigma-basis") << " (" << rep.pairs_checked << " pairs checked)\n";
        if (rep.failing_pair) {
            const auto &cp = *rep.failing_pair;
            out << "failing pair: " << cp.left_shift << ".g" << cp.left_index + 1 << ", " << cp.right_shift << ".g"
                << cp.right_index + 1 << " at " << to_string(*pf.ring, cp.overlap_lcm) << "\n";
        }
        if (rep.remainder) {
            out << "remainder: " << to_string(*rep.remainder) << "\n";
        }
        if (!rep.note.empty()) {
            out << "note: " << rep.note << "\n";
        }
    }
    return rep.ok ? ok : not_certified;
}

inline int reduce_cmd(const ReduceArgs &a, std::ostream &out)
{
    ProblemFile pf = parse_problem(read_file(a.input));
    Polynomial f = parse_polynomial(pf.ring, a.poly);
    Certificate cert;
    Polynomial h = a.full ? reduce_full(f, pf.ideal, {}, &cert) : reduce(f, pf.ideal, {}, &cert);
    out << to_string(h) << "\n";
    if (a.certificate) {
        for (const auto &st : cert.steps) {
            out << "  " << to_string(*pf.ring, st.coef) << " * " << to_string(*pf.ring, st.cofactor) << " * "
                << st.shift << ".g" << st.basis_index + 1 << "\n";
        }
        out << "replay matches input: " << (replay(cert, pf.ideal) == f ? "yes" : "no") << "\n";
    }
    return ok;
}

inline int symmetric_cmd(const SymmetricArgs &a, std::ostream &out)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<PermutationAction> gamma;
    if (!a.perm.empty()) {
        gamma = PermutationAction::parse(a.perm);
    }
    const std::string text = read_file(a.gens);
    ProblemFile pf = parse_problem(text, gamma ? symmetric_ring(*gamma) : nullptr);
    if (pf.permutation) {
        if (gamma && gamma->cycles() != pf.permutation->cycles()) {
            throw structural_error("--perm disagrees with the permutation in " + a.gens);
        }
        gamma = pf.permutation;
    }
    if (!gamma) {
        throw structural_error("no permutation given");
    }
    std::vector<Polynomial> gens = pf.permutation ? pf.symmetric_generators : pf.ideal;
    SymmetricIdeal L = symmetric_setup(*gamma, gens);
    SigmaBasis B;
    if (a.minimal) {
        SigmaBasis full = sigma_gbasis(L.all());
        B = full;
        B.elements.clear();
        for (auto &g : minimalize(full.elements)) {
            bool is_relation = false;
            for (const auto &f : L.relations) {
                is_relation = is_relation || g.lm() == f.lm();
            }
            if (!is_relation) {
                B.elements.push_back(g);
            }
        }
    } else {
        B = groebner_gamma_basis(L);
    }
    std::vector<Polynomial> classical;
    if (a.classical && B.status == BasisStatus::complete) {
        classical = expand_classical_basis(B.elements, *gamma, a.minimal);
    }
    const double secs = seconds_since(t0);
    if (a.json) {
        RunConfig cfg;
        cfg.command = "symmetric";
        cfg.input = a.gens;
        cfg.minimal = a.minimal;
        cfg.interreduce = !a.minimal;
        json rep = run_report(B, cfg, secs);
        rep["config"]["perm"] = gamma->to_string();
        if (a.classical) {
            rep["classical_basis"] = basis_json(classical);
        }
        out << rep.dump(2) << "\n";
    } else {
        out << "permutation: " << gamma->to_string() << "\n";
        out << text_report(B, false, secs);
        if (a.classical) {
            out << "classical basis: " << classical.size() << "\n";
            for (const auto &g : classical) {
                out << "  " << to_string(g) << "\n";
            }
        }
    }
    return B.status == BasisStatus::complete ? ok : not_certified;
}

inline int normal_form_cmd(const NormalFormArgs &a, std::ostream &out)
{
    ProblemFile pf = parse_problem(read_file(a.input));
    auto q = QuotientPresentation::from_polynomials(pf.ideal);
    out << "normal variables: " << q.num_normal_variables() << "\n";
    bool agree = true;
    for (const auto &text : a.vars) {
        Variable v = parse_variable(pf.ring, text);
        Polynomial by_reduction = q.from_coordinates(q.normal_form_by_reduction(v));
        Polynomial by_companion = q.from_coordinates(q.normal_form_by_companion(v));
        out << "NF(" << to_string(*pf.ring, v) << ") = " << to_string(by_reduction) << "\n";
        if (!(by_reduction == by_companion)) {
            agree = false;
            out << "  companion route gives " << to_string(by_companion) << "\n";
        }
    }
    return agree ? ok : not_certified;
}

/// Entry point of the dgb command.
inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    CLI::App app{"Groebner Sigma-bases of difference polynomial ideals", "dgb"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto *c = app.add_subcommand("compute", "complete a generating set to a Groebner Sigma-basis");
    c->add_option("--input", ca.input, "problem file")->required();
    auto *trunc = c->add_option("--truncate", ca.truncate, "truncate at order D");
    c->add_flag("--adaptive", ca.adaptive, "grow the shift bound until the basis certifies")->excludes(trunc);
    c->add_flag("--no-chain", ca.no_chain, "disable the chain criterion");
    c->add_flag("--minimal", ca.minimal, "drop redundant elements");
    c->add_flag("--interreduce", ca.interreduce, "minimalize and tail-reduce");
    c->add_option("--pair-budget", ca.pair_budget, "maximum S-polynomial reductions (env DGB_PAIR_BUDGET)");
    c->add_option("--order-cap", ca.order_cap, "largest shift bound of the adaptive mode");
    c->add_flag("--stats", ca.stats, "print pair statistics");
    c->add_flag("--json", ca.json, "machine-readable report");

    VerifyArgs va;
    auto *v = app.add_subcommand("verify", "check the ideal block with the finite Sigma-criterion");
    v->add_option("--input", va.input, "problem file")->required();
    v->add_flag("--json", va.json, "machine-readable report");

    ReduceArgs ra;
    auto *r = app.add_subcommand("reduce", "reduce a polynomial modulo the ideal block");
    r->add_option("--input", ra.input, "problem file")->required();
    r->add_option("--poly", ra.poly, "polynomial to reduce")->required();
    r->add_flag("--full", ra.full, "reduce every term and make monic");
    r->add_flag("--certificate", ra.certificate, "print the reduction steps");

    SymmetricArgs sa;
    auto *s = app.add_subcommand("symmetric", "Groebner basis of an ideal invariant under a cyclic permutation");
    s->add_option("--perm", sa.perm, "permutation in cycle notation, e.g. \"(1 2 3)(4 5)\"");
    s->add_option("--gens", sa.gens, "generator file")->required();
    s->add_flag("--classical", sa.classical, "also print the usual Groebner basis");
    s->add_flag("--minimal", sa.minimal, "skip interreduction");
    s->add_flag("--json", sa.json, "machine-readable report");

    NormalFormArgs na;
    auto *n = app.add_subcommand("normal-form", "normal forms modulo a full family of linear relations");
    n->add_option("--input", na.input, "file whose ideal block holds the relations")->required();
    n->add_option("--var", na.vars, "variable to normalize (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    try {
        if (*c) {
            return compute(ca, out);
        }
        if (*v) {
            return verify(va, out);
        }
        if (*r) {
            return reduce_cmd(ra, out);
        }
        if (*s) {
            return symmetric_cmd(sa, out);
        }
        if (*n) {
            return normal_form_cmd(na, out);
        }
    } catch (const parse_error &e) {
        err << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

} // namespace dgb::cli

#endif
