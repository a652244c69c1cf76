// Command-line front end: wires the parser, theory tables, elimination
// engine, built-in models, and oracles to subcommands with stable output.

#include "qrc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qrc/errors.hpp"
#include "qrc/formula.hpp"
#include "qrc/fuzz.hpp"
#include "qrc/models.hpp"
#include "qrc/normalize.hpp"
#include "qrc/oracles.hpp"
#include "qrc/parser.hpp"
#include "qrc/printer.hpp"
#include "qrc/qe.hpp"
#include "qrc/theory.hpp"
#include "qrc/upoly.hpp"
#include "qe_detail.hpp"

namespace qrc {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string format = "text";
    std::string branch = "guarded";
    int degree = 2;
    long max_atoms = 20000;
    long samples = 500;
    std::uint64_t seed = 1;
    int precision = 24;
};

// One self-contained structured record per result.
void emit_record(std::ostream& out, const std::string& input, const json& branch,
                 const json& result, const json& stats) {
    const json rec{{"input", input}, {"branch", branch}, {"result", result}, {"stats", stats}};
    out << rec.dump() << "\n";
}

bool structured(const RunConfig& rc) { return rc.format == "structured"; }

Branch branch_of(const std::string& name) {
    return name == "acvf" ? Branch::ACVF : Branch::RCVF;
}

Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("not a rational number: '" + s + "'");
    }
}

json free_var_list(const FormulaPtr& f) {
    json a = json::array();
    for (const auto& v : free_vars(f)) a.push_back(v);
    return a;
}

int run_parse(const RunConfig& rc, const std::string& input, std::ostream& out) {
    const FormulaPtr n = normalize(parse_formula(input));
    const std::string rendered = render(n);
    if (structured(rc)) {
        emit_record(out, input, nullptr, rendered,
                    {{"atoms", qe_detail::atom_count(n)}, {"free_vars", free_var_list(n)}});
    } else {
        out << rendered << "\n";
    }
    return 0;
}

int run_qe(const RunConfig& rc, const std::string& input, std::ostream& out) {
    const FormulaPtr f = parse_formula(input);
    EliminationConfig cfg;
    cfg.max_degree = rc.degree;
    cfg.max_atoms = rc.max_atoms;
    if (rc.branch == "guarded") {
        const GuardedResult r = eliminate_guarded(f, cfg);
        const FormulaPtr g = guarded_formula(r);
        if (structured(rc)) {
            emit_record(out, input, "guarded", render(g),
                        {{"acvf_part", render(r.acvf_part)},
                         {"rcvf_part", render(r.rcvf_part)},
                         {"atoms", qe_detail::atom_count(g)}});
        } else {
            out << render(g) << "\n";
        }
        return 0;
    }
    const FormulaPtr g = eliminate(f, branch_of(rc.branch), cfg);
    if (structured(rc)) {
        emit_record(out, input, rc.branch, render(g), {{"atoms", qe_detail::atom_count(g)}});
    } else {
        out << render(g) << "\n";
    }
    return 0;
}

int run_decide(const RunConfig& rc, const std::string& input, int chr, int res_chr,
               std::ostream& out, std::ostream& err) {
    const FormulaPtr s = parse_formula(input);
    EliminationConfig cfg;
    cfg.max_degree = rc.degree;
    cfg.max_atoms = rc.max_atoms;
    std::optional<bool> verdict;
    if (rc.branch == "guarded") {
        // characteristic flags describe the valued branch; the ordered branch
        // is always characteristic (0, 0)
        const bool va = decide_sentence(s, CompletionConfig{Branch::ACVF, chr, res_chr}, cfg);
        const bool vr = decide_sentence(s, CompletionConfig{Branch::RCVF, 0, 0}, cfg);
        if (va != vr) {
            err << "cannot decide: branch-dependent (acvf=" << (va ? "true" : "false")
                << ", rcvf=" << (vr ? "true" : "false") << ")\n";
            return 3;
        }
        verdict = va;
    } else {
        const CompletionConfig cc{branch_of(rc.branch), chr, res_chr};
        verdict = decide_sentence(s, cc, cfg);
    }
    if (structured(rc)) {
        emit_record(out, input, rc.branch, *verdict,
                    {{"characteristic", chr}, {"residue_characteristic", res_chr}});
    } else {
        out << (*verdict ? "true" : "false") << "\n";
    }
    return 0;
}

int run_axioms(const RunConfig& rc, const std::string& theory, int odd_bound,
               std::ostream& out) {
    const std::vector<NamedAxiom> axs = theory == "qo" ? sigma_qo() : sigma_qrc(odd_bound);
    for (const auto& a : axs) {
        if (structured(rc)) {
            emit_record(out, a.name, nullptr, render(a.formula), json::object());
        } else {
            out << a.name << ": " << render(a.formula) << "\n";
        }
    }
    return 0;
}

int run_check_axioms(const RunConfig& rc, const std::string& model, std::ostream& out) {
    // The sampled conformance harness covers the base quasi-order theory;
    // the closure axioms need witness constructors and are exercised by the
    // model test suite instead.
    const std::vector<NamedAxiom> axs = sigma_qo();
    std::vector<ModelDescriptor> models;
    if (model == "mr" || model == "both") models.push_back(ModelDescriptor::mr());
    if (model == "ma" || model == "both") models.push_back(ModelDescriptor::ma(rc.precision));
    long violations = 0;
    for (const auto& m : models) {
        const char* name = m.tag == ModelDescriptor::Tag::MR ? "mr" : "ma";
        const ConformanceReport rep = check_axioms_sampled(m, axs, rc.samples, rc.seed);
        violations += rep.total_violations();
        if (structured(rc)) {
            for (const auto& a : rep.axioms) {
                emit_record(out, a.name, name, a.violations == 0 ? "pass" : "fail",
                            {{"instances", a.instances},
                             {"violations", a.violations},
                             {"skipped_indeterminate", a.skipped_indeterminate},
                             {"witness_missing", a.witness_missing},
                             {"counterexample", a.first_counterexample}});
            }
        } else {
            out << "model " << name << ": "
                << (rep.total_violations() == 0 ? "PASS" : "FAIL") << " ("
                << rep.axioms.size() << " checks, " << rc.samples << " samples each, "
                << rep.total_violations() << " violations)\n";
            for (const auto& a : rep.axioms) {
                if (a.violations > 0) {
                    out << "  " << a.name << ": " << a.violations
                        << " violations, first: " << a.first_counterexample << "\n";
                }
            }
        }
    }
    return violations == 0 ? 0 : 1;
}

int run_fuzz(const RunConfig& rc, const std::string& fragment, long cases,
             std::ostream& out) {
    FuzzReport r;
    const char* branch = "rcvf";
    if (fragment == "a") {
        r = fuzz_fragment_a(cases, rc.seed);
    } else if (fragment == "b") {
        r = fuzz_fragment_b(cases, rc.seed);
        branch = "acvf";
    } else {
        r = fuzz_fragment_c(cases, rc.seed);
        branch = "acvf";
    }
    if (structured(rc)) {
        emit_record(out, "fragment " + fragment, branch,
                    r.mismatched == 0 ? "agree" : "mismatch",
                    {{"cases", r.cases},
                     {"agreed", r.agreed},
                     {"mismatched", r.mismatched},
                     {"skipped", r.skipped},
                     {"first_mismatch", r.first_mismatch}});
    } else {
        out << r.agreed << "/" << r.cases << " agree";
        if (r.skipped > 0) out << ", " << r.skipped << " skipped";
        if (r.mismatched > 0) out << ", " << r.mismatched << " mismatches";
        out << "\n";
        if (r.mismatched > 0) out << "first mismatch: " << r.first_mismatch << "\n";
    }
    return r.mismatched == 0 ? 0 : 1;
}

// A one-variable polynomial over the rationals, as a UPoly.
UPoly<Rational> upoly_of(const std::string& input) {
    const Polynomial p = term_to_poly(parse_term_string(input));
    std::string var;
    for (const auto& v : p.vars()) {
        if (p.degree(v) > 0) {
            if (!var.empty() && v != var) {
                throw Error("expected a univariate polynomial, got variables '" + var +
                            "' and '" + v + "'");
            }
            var = v;
        }
    }
    if (var.empty()) return UPoly<Rational>::constant(p.constant_value());
    std::vector<Rational> cs;
    for (const auto& c : p.coeffs_in(var)) cs.push_back(c.constant_value());
    return UPoly<Rational>(cs);
}

int run_oracle_sturm(const RunConfig& rc, const std::string& input, const std::string& lo,
                     const std::string& hi, std::ostream& out) {
    const UPoly<Rational> f = upoly_of(input);
    std::optional<Rational> a, b;
    if (!lo.empty()) a = parse_rational(lo);
    if (!hi.empty()) b = parse_rational(hi);
    const long count = sturm_tarski(f, UPoly<Rational>::constant(Rational(1)), a, b);
    if (structured(rc)) {
        emit_record(out, input, nullptr, count,
                    {{"lo", lo.empty() ? json(nullptr) : json(lo)},
                     {"hi", hi.empty() ? json(nullptr) : json(hi)}});
    } else {
        out << count << "\n";
    }
    return 0;
}

int run_oracle_polygon(const RunConfig& rc, const std::string& input, std::ostream& out) {
    const Polynomial p = term_to_poly(parse_term_string(input));
    for (const auto& v : p.vars()) {
        if (p.degree(v) > 0 && v != "x" && v != "t") {
            throw Error("polygon input must be a polynomial in x with coefficients in t; "
                        "got variable '" + v + "'");
        }
    }
    std::vector<LaurentElem> coeffs;
    for (const auto& c : p.coeffs_in("x")) {
        LaurentElem acc;  // exact zero; coefficient of t^k contributes c_k * t^k
        const auto tcs = c.coeffs_in("t");
        for (std::size_t k = 0; k < tcs.size(); ++k) {
            if (tcs[k].is_zero()) continue;
            acc = acc + LaurentElem::make(static_cast<long>(k), {tcs[k].constant_value()},
                                          LaurentElem::kExact);
        }
        coeffs.push_back(acc);
    }
    const NewtonPolygon np = newton_polygon(coeffs);
    if (structured(rc)) {
        json segs = json::array();
        for (const auto& s : np.segments) {
            segs.push_back({{"slope", s.slope.get_str()}, {"length", s.length}});
        }
        emit_record(out, input, nullptr, segs, {{"zero_roots", np.zero_root_multiplicity}});
    } else {
        out << "zero_roots=" << np.zero_root_multiplicity << " segments=[";
        for (std::size_t i = 0; i < np.segments.size(); ++i) {
            if (i > 0) out << " ";
            out << "(" << np.segments[i].slope.get_str() << "," << np.segments[i].length
                << ")";
        }
        out << "]\n";
    }
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantifier elimination and decision toolkit for quasi-real closed "
                 "fields with a compatible valuation"};
    app.require_subcommand(1);

    RunConfig rc;
    std::string input, lo, hi;
    std::string theory = "qrc", model = "both", fragment = "a";
    int odd_bound = 5;
    int chr = 0, res_chr = 0;
    long cases = 500;

    const auto add_common = [&rc](CLI::App* cmd) {
        cmd->add_option("--format", rc.format, "Output format")
            ->check(CLI::IsMember({"text", "structured"}))
            ->capture_default_str();
        cmd->add_option("--seed", rc.seed, "Random seed (QRC_SEED overrides)")
            ->capture_default_str();
    };
    const auto add_branch = [&rc](CLI::App* cmd) {
        cmd->add_option("--branch", rc.branch, "Branch of the dichotomy")
            ->check(CLI::IsMember({"rcvf", "acvf", "guarded"}))
            ->capture_default_str();
    };
    const auto add_engine = [&rc](CLI::App* cmd) {
        cmd->add_option("--degree", rc.degree, "Per-variable degree bound")
            ->capture_default_str();
        cmd->add_option("--max-atoms", rc.max_atoms, "Intermediate formula budget")
            ->capture_default_str();
    };

    CLI::App* c_parse = app.add_subcommand("parse", "Parse and normalize a formula");
    c_parse->add_option("formula", input, "Formula to parse")->required();
    add_common(c_parse);

    CLI::App* c_qe = app.add_subcommand("qe", "Eliminate quantifiers");
    c_qe->add_option("formula", input, "Formula to eliminate")->required();
    add_common(c_qe);
    add_branch(c_qe);
    add_engine(c_qe);

    CLI::App* c_decide = app.add_subcommand("decide", "Decide a sentence");
    c_decide->add_option("sentence", input, "Sentence to decide")->required();
    add_common(c_decide);
    add_branch(c_decide);
    add_engine(c_decide);
    c_decide->add_option("--char", chr, "Field characteristic (acvf)")->capture_default_str();
    c_decide->add_option("--res-char", res_chr, "Residue characteristic (acvf)")
        ->capture_default_str();

    CLI::App* c_axioms = app.add_subcommand("axioms", "Print an axiom set");
    add_common(c_axioms);
    c_axioms->add_option("--theory", theory, "Axiom set")
        ->check(CLI::IsMember({"qo", "qrc"}))
        ->capture_default_str();
    c_axioms->add_option("--odd-bound", odd_bound, "Largest odd closure degree")
        ->capture_default_str();

    CLI::App* c_check = app.add_subcommand("check-axioms", "Sample axioms in built-in models");
    add_common(c_check);
    c_check->add_option("--model", model, "Model to sample")
        ->check(CLI::IsMember({"mr", "ma", "both"}))
        ->capture_default_str();
    c_check->add_option("--n", rc.samples, "Samples per axiom")->capture_default_str();
    c_check->add_option("--precision", rc.precision, "Series precision")
        ->capture_default_str();

    CLI::App* c_fuzz = app.add_subcommand("fuzz", "Differential elimination fuzzing");
    add_common(c_fuzz);
    c_fuzz->add_option("--fragment", fragment, "Elimination fragment")
        ->check(CLI::IsMember({"a", "b", "c"}))
        ->capture_default_str();
    c_fuzz->add_option("--cases", cases, "Number of cases")->capture_default_str();

    CLI::App* c_oracle = app.add_subcommand("oracle", "Run a computational oracle");
    CLI::App* c_sturm = c_oracle->add_subcommand("sturm", "Count real roots in (lo, hi]");
    c_sturm->add_option("poly", input, "Univariate polynomial over the rationals")
        ->required();
    c_sturm->add_option("lo", lo, "Lower endpoint (open); omit for unbounded");
    c_sturm->add_option("hi", hi, "Upper endpoint (closed); omit for unbounded");
    add_common(c_sturm);
    CLI::App* c_poly = c_oracle->add_subcommand("polygon", "Newton polygon of a series polynomial");
    c_poly->add_option("poly", input, "Polynomial in x with coefficients in t")->required();
    add_common(c_poly);
    c_oracle->require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (const char* env = std::getenv("QRC_SEED")) {
        try {
            rc.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "QRC_SEED is not a number: '" << env << "'\n";
            return 2;
        }
    }

    try {
        if (c_parse->parsed()) return run_parse(rc, input, out);
        if (c_qe->parsed()) return run_qe(rc, input, out);
        if (c_decide->parsed()) return run_decide(rc, input, chr, res_chr, out, err);
        if (c_axioms->parsed()) return run_axioms(rc, theory, odd_bound, out);
        if (c_check->parsed()) return run_check_axioms(rc, model, out);
        if (c_fuzz->parsed()) return run_fuzz(rc, fragment, cases, out);
        if (c_sturm->parsed()) return run_oracle_sturm(rc, input, lo, hi, out);
        if (c_poly->parsed()) return run_oracle_polygon(rc, input, out);
    } catch (const SyntaxError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UnsupportedFragment& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionExhausted& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const TableMiss& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const InvalidConfig& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const NotASentence& e) {
        err << "not a sentence: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace qrc
