/*
   Copyright 2026 The quasifs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "quasifs/cli.hpp"

#include <algorithm>
#include <functional>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "quasifs/builders.hpp"
#include "quasifs/bundle.hpp"
#include "quasifs/errors.hpp"
#include "quasifs/indicator.hpp"
#include "quasifs/validate.hpp"

namespace quasifs {

namespace {

struct Options {
    std::string bundle;
    std::string format = "table";
    std::string level = "strict";
    bool strict = false;
    std::string t = "pl";
    std::string module;
    // gen
    std::string group_file;
    std::string cocycle_file;
    std::size_t cyclic = 0;
    std::size_t cls = 0;
    std::string out_file;
};

struct Io {
    std::ostream& out;
    std::ostream& err;
    bool json;
};

// Plain-text table with left-aligned, space-padded columns.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], r[c].size());
        }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + "\n";
    }
    return out;
}

// "c*x" terms joined with + and -, parenthesizing compound coefficients.
class TermWriter {
public:
    void add(const FieldElement& c, const std::string& body) {
        if (c.is_zero()) return;
        std::string s = c.to_string();
        bool neg = s.front() == '-';
        bool simple = s.find_first_of("+-", 1) == std::string::npos;
        std::string coeff;
        if (!(c.is_one() || c == -c.field()->one())) {
            if (simple) coeff = (neg ? s.substr(1) : s) + "*";
            else neg = false, coeff = "(" + s + ")*";
        }
        if (out_.empty()) out_ = neg ? "-" : "";
        else out_ += neg ? " - " : " + ";
        out_ += coeff + body;
    }
    std::string str() const { return out_.empty() ? "0" : out_; }

private:
    std::string out_;
};

std::string element_string(const QuasiHopfAlgebra& h, const Vector& v) {
    TermWriter w;
    for (std::size_t i = 0; i < v.size(); ++i) w.add(v[i], h.basis_name(i));
    return w.str();
}

std::string tensor_string(const QuasiHopfAlgebra& h, const Tensor& t) {
    TermWriter w;
    for (std::size_t flat : t.nonzeros()) {
        std::string term;
        for (std::size_t i : t.multi_index(flat)) term += (term.empty() ? "" : "(x)") + h.basis_name(i);
        w.add(t[flat], term);
    }
    return w.str();
}

std::string witness_string(const std::vector<std::size_t>& w) {
    std::string s;
    for (auto i : w) s += (s.empty() ? "" : ",") + std::to_string(i);
    return s.empty() ? "" : "(" + s + ")";
}

Json witness_json(const std::vector<std::size_t>& w) {
    Json a = Json::array();
    for (auto i : w) a.push_back(i);
    return a;
}

void emit(const Io& io, const Json& j, const std::string& table) {
    if (io.json) io.out << format_json(j);
    else io.out << table;
}

Json validation_json(const ValidationReport& r, ValidationLevel level) {
    Json j;
    j["level"] = to_string(level);
    j["ok"] = r.ok();
    Json axioms = Json::array();
    for (const auto& a : r.results) {
        Json x;
        x["name"] = a.name;
        x["level"] = to_string(a.level);
        x["passed"] = a.passed;
        if (!a.passed) {
            x["witness"] = witness_json(a.witness);
            x["detail"] = a.detail;
        }
        axioms.push_back(std::move(x));
    }
    j["axioms"] = std::move(axioms);
    return j;
}

std::string validation_table(const ValidationReport& r, ValidationLevel level) {
    std::vector<std::vector<std::string>> rows{{"axiom", "level", "result", "witness", "detail"}};
    std::size_t passed = 0;
    for (const auto& a : r.results) {
        passed += a.passed;
        rows.push_back({a.name, to_string(a.level), a.passed ? "ok" : "FAIL", witness_string(a.witness),
                        a.passed ? "" : a.detail});
    }
    std::string out = render_table(rows);
    out += "validation (" + std::string(to_string(level)) + "): " + std::to_string(passed) + "/" +
           std::to_string(r.results.size()) + " axioms hold\n";
    return out;
}

ValidationLevel parse_level(const std::string& s) { return s == "core" ? ValidationLevel::core : ValidationLevel::strict; }

// Runs the axiom gate for computational commands. Returns nonzero on failure.
int gate(const Bundle& b, ValidationLevel level, const Io& io, Json& report) {
    if (level == ValidationLevel::core)
        io.err << "warning: strict axioms (associativity, unit, quasi-coassociativity, pentagon) not checked\n";
    ValidationReport r = validate(*b.algebra, level);
    report["validation"] = {{"level", to_string(level)}, {"ok", r.ok()}};
    if (r.ok()) return exit_ok;
    for (const auto& a : r.results)
        if (!a.passed)
            io.err << "axiom failed: " << a.name << " " << witness_string(a.witness) << " " << a.detail << "\n";
    report["validation"]["failed"] = r.failed();
    if (io.json) io.out << format_json(report);
    return exit_axiom;
}

TChoice parse_t(const std::string& s) { return s == "pr" ? TChoice::pr : TChoice::pl; }

std::string mu_string(const std::optional<int>& mu) { return mu ? std::to_string(*mu) : "-"; }

const char* kind_of(int mu) { return mu == 0 ? "non-self-dual" : mu > 0 ? "orthogonal" : "symplectic"; }

int cmd_validate(const Options& o, const Io& io) {
    Bundle b = load_bundle(o.bundle);
    ValidationLevel level = o.strict ? ValidationLevel::strict : ValidationLevel::core;
    ValidationReport r = validate(*b.algebra, level);
    Json j;
    j["command"] = "validate";
    j["bundle"] = o.bundle;
    j["validation"] = validation_json(r, level);
    emit(io, j, validation_table(r, level));
    for (const auto& a : r.results)
        if (!a.passed) io.err << "axiom failed: " << a.name << "\n";
    return r.ok() ? exit_ok : exit_axiom;
}

int cmd_integral(const Options& o, const Io& io) {
    Bundle b = load_bundle(o.bundle);
    Json j{{"command", "integral"}, {"bundle", o.bundle}};
    if (int rc = gate(b, parse_level(o.level), io, j)) return rc;
    Integral in = normalized_integral(*b.algebra);
    j["basis"] = b.data.basis_names;
    j["lambda"] = vector_to_json(in.lambda);
    emit(io, j, "Lambda = " + element_string(*b.algebra, in.lambda) + "\n");
    return exit_ok;
}

int cmd_elements(const Options& o, const Io& io) {
    Bundle b = load_bundle(o.bundle);
    Json j{{"command", "elements"}, {"bundle", o.bundle}};
    if (int rc = gate(b, parse_level(o.level), io, j)) return rc;
    const auto& h = *b.algebra;
    Integral in = normalized_integral(h);
    HausserNillElements hn = hausser_nill(h);
    Vector nu_pl = nu_element(h, in, hn, TChoice::pl);
    Vector nu_pr = nu_element(h, in, hn, TChoice::pr);
    j["basis"] = b.data.basis_names;
    j["q_R"] = tensor_to_json(hn.q_r);
    j["p_R"] = tensor_to_json(hn.p_r);
    j["q_L"] = tensor_to_json(hn.q_l);
    j["p_L"] = tensor_to_json(hn.p_l);
    j["nu_H"] = {{"pl", vector_to_json(nu_pl)}, {"pr", vector_to_json(nu_pr)}};
    std::string t;
    t += "q_R = " + tensor_string(h, hn.q_r) + "\n";
    t += "p_R = " + tensor_string(h, hn.p_r) + "\n";
    t += "q_L = " + tensor_string(h, hn.q_l) + "\n";
    t += "p_L = " + tensor_string(h, hn.p_l) + "\n";
    t += "nu_H (t = p_L) = " + element_string(h, nu_pl) + "\n";
    t += "nu_H (t = p_R) = " + element_string(h, nu_pr) + "\n";
    emit(io, j, t);
    return exit_ok;
}

int cmd_pivotal(const Options& o, const Io& io) {
    Bundle b = load_bundle(o.bundle);
    Json j{{"command", "pivotal"}, {"bundle", o.bundle}};
    if (int rc = gate(b, parse_level(o.level), io, j)) return rc;
    const auto& h = *b.algebra;
    AlgebraAnalysis a = analyze(b.algebra);
    j["basis"] = b.data.basis_names;
    j["g"] = vector_to_json(a.pivotal.g);
    j["g_inv"] = vector_to_json(a.pivotal.g_inv);
    j["method"] = to_string(a.pivotal.method);
    std::string t = "g = " + element_string(h, a.pivotal.g) + "\n";
    t += "g^-1 = " + element_string(h, a.pivotal.g_inv) + "\n";
    t += std::string("method = ") + to_string(a.pivotal.method) + "\n";
    Vector g_inv_sb = h.multiply(a.pivotal.g_inv, h.antipode(h.beta()));
    bool all = true;
    Json identity;
    for (TChoice tc : {TChoice::pl, TChoice::pr}) {
        bool holds = g_inv_sb == pivotal_rhs(h, a.integral, select(a.hn, tc));
        all = all && holds;
        identity[to_string(tc)] = holds;
        t += std::string("g^-1 S(beta) = S(L1 t1) L2 t2, t = ") + (tc == TChoice::pl ? "p_L" : "p_R") + ": " +
             (holds ? "holds" : "FAILS") + "\n";
    }
    j["pivotal_identity"] = std::move(identity);
    emit(io, j, t);
    return all ? exit_ok : exit_inconsistent;
}

Json report_json(const IndicatorReport& r) {
    Json x;
    x["module"] = r.module;
    x["dimension"] = r.dim;
    x["absolutely_simple"] = r.absolutely_simple;
    x["nu_PL"] = r.nu_pl.to_string();
    x["nu_PR"] = r.nu_pr.to_string();
    x["trace_E"] = r.trace_e.to_string();
    x["mu"] = r.mu ? Json(*r.mu) : Json(nullptr);
    x["self_dual"] = r.self_dual;
    x["agree"] = r.agree;
    x["status"] = r.status;
    return x;
}

int cmd_indicators(const Options& o, const Io& io) {
    Bundle b = load_bundle(o.bundle);
    Json j{{"command", "indicators"}, {"bundle", o.bundle}, {"t", o.t}};
    if (int rc = gate(b, parse_level(o.level), io, j)) return rc;
    AlgebraAnalysis a = analyze(b.algebra);
    TChoice t = parse_t(o.t);
    std::vector<std::vector<std::string>> rows{{"module", "dim", "nu", "self_dual", "mu", "status"}};
    Json list = Json::array();
    for (const auto& m : b.modules) {
        IndicatorReport r = indicator_report(a, m);
        const FieldElement& nu = t == TChoice::pl ? r.nu_pl : r.nu_pr;
        rows.push_back({r.module, std::to_string(r.dim), nu.to_string(), r.self_dual ? "yes" : "no", mu_string(r.mu),
                        r.status});
        Json x = report_json(r);
        x["nu"] = nu.to_string();
        list.push_back(std::move(x));
    }
    j["modules"] = std::move(list);
    emit(io, j, render_table(rows));
    return exit_ok;
}

int cmd_classify(const Options& o, const Io& io) {
    Bundle b = load_bundle(o.bundle);
    const HModule* m = b.find_module(o.module);
    if (!m) {
        io.err << "error: no module named '" << o.module << "'\n";
        return exit_usage;
    }
    Json j{{"command", "classify"}, {"bundle", o.bundle}, {"module", o.module}};
    if (int rc = gate(b, parse_level(o.level), io, j)) return rc;
    ModuleReport mr = check_module(*m);
    if (!mr.is_module) {
        io.err << "error: " << m->name() << " is not a module: " << mr.detail << "\n";
        return exit_axiom;
    }
    AlgebraAnalysis a = analyze(b.algebra);
    if (!mr.absolutely_simple) {
        std::string status = "not absolutely simple (End dimension " + std::to_string(mr.end_dim) +
                             "), classification suppressed";
        j["mu"] = nullptr;
        j["status"] = status;
        emit(io, j, m->name() + ": " + status + "\n");
        return exit_ok;
    }
    OracleResult r = oracle_classify(*m, a.pivotal);
    j["mu"] = r.mu;
    j["type"] = kind_of(r.mu);
    std::string t = m->name() + ": mu = " + std::to_string(r.mu) + " (" + kind_of(r.mu) + ")\n";
    if (r.certificate) {
        const Matrix& f = r.certificate->form;
        Json rows = Json::array();
        for (std::size_t i = 0; i < f.rows(); ++i) rows.push_back(vector_to_json(f.row(i)));
        j["form"] = std::move(rows);
        t += "invariant form sigma(v, w) = v^T M w with M =\n";
        std::vector<std::vector<std::string>> cells;
        for (std::size_t i = 0; i < f.rows(); ++i) {
            std::vector<std::string> row;
            for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(f(i, c).to_string());
            cells.push_back(std::move(row));
        }
        std::istringstream lines(render_table(cells));
        for (std::string line; std::getline(lines, line);) t += "  " + line + "\n";
    }
    emit(io, j, t);
    return exit_ok;
}

int cmd_crosscheck(const Options& o, const Io& io) {
    Bundle b = load_bundle(o.bundle);
    Json j{{"command", "crosscheck"}, {"bundle", o.bundle}};
    if (int rc = gate(b, ValidationLevel::strict, io, j)) return rc;
    const auto& h = *b.algebra;
    AlgebraAnalysis a = analyze(b.algebra);
    std::vector<std::string> problems;
    Vector g_inv_sb = h.multiply(a.pivotal.g_inv, h.antipode(h.beta()));
    for (TChoice tc : {TChoice::pl, TChoice::pr})
        if (!(g_inv_sb == pivotal_rhs(h, a.integral, select(a.hn, tc))))
            problems.push_back(std::string("element form of the pivotal identity fails for t = ") + to_string(tc));

    std::vector<std::vector<std::string>> rows{{"module", "dim", "nu_PL", "nu_PR", "trace_E", "mu", "verdict"}};
    Json list = Json::array();
    for (const auto& m : b.modules) {
        IndicatorReport r = indicator_report(a, m);
        std::vector<std::string> mine;
        for (TChoice tc : {TChoice::pl, TChoice::pr}) {
            PivotalSides s = pivotal_tensor_sides(m, a.pivotal, a.integral, select(a.hn, tc));
            if (s.lhs != s.rhs) mine.push_back(std::string("tensor form of the pivotal identity fails, t = ") + to_string(tc));
        }
        if (r.absolutely_simple) {
            FieldElement tr = categorical_trace(m, pivotal_map(m, a.pivotal));
            if (!(tr == h.field()->from_rational(Rational(long(m.dim())))))
                mine.push_back("categorical trace of the pivotal map is " + tr.to_string());
            if (!r.agree) mine.push_back("nu_PL, nu_PR, trace_E and mu disagree");
            for (const auto& f : hom_space(dual_module(m), m)) {
                Matrix once = t_map(m, m, f, a.pivotal);
                if (!(t_map(m, m, once, a.pivotal) == f)) mine.push_back("T is not an involution on Hom(*V, V)");
            }
        }
        if (invariant_subspace(m, InvariantMethod::kernel) != invariant_subspace(m, InvariantMethod::projector))
            mine.push_back("invariants by kernel and by Lambda-image differ");
        std::string verdict = mine.empty() ? (r.absolutely_simple ? "agree" : "skipped (not absolutely simple)")
                                           : "INCONSISTENT";
        rows.push_back({r.module, std::to_string(r.dim), r.nu_pl.to_string(), r.nu_pr.to_string(),
                        r.trace_e.to_string(), mu_string(r.mu), verdict});
        Json x = report_json(r);
        x["problems"] = mine;
        list.push_back(std::move(x));
        for (auto& p : mine) problems.push_back(m.name() + ": " + p);
    }
    j["g"] = vector_to_json(a.pivotal.g);
    j["modules"] = std::move(list);
    j["ok"] = problems.empty();
    j["problems"] = problems;
    std::string t = render_table(rows);
    for (const auto& p : problems) t += "inconsistency: " + p + "\n";
    t += problems.empty() ? "crosscheck passed\n" : "crosscheck FAILED\n";
    emit(io, j, t);
    return problems.empty() ? exit_ok : exit_inconsistent;
}

int finish_gen(const Bundle& b, const Options& o, const Io& io) {
    ValidationReport r = validate(*b.algebra, ValidationLevel::strict);
    if (!r.ok()) {
        for (const auto& f : r.failed()) io.err << "axiom failed: " << f << "\n";
        return exit_axiom;
    }
    std::string text = emit_bundle(b);
    if (o.out_file.empty()) {
        io.out << text;
    } else {
        std::ofstream f(o.out_file, std::ios::binary);
        if (!f) {
            io.err << "error: cannot write " << o.out_file << "\n";
            return exit_usage;
        }
        f << text;
    }
    return exit_ok;
}

int cmd_gen_group_algebra(const Options& o, const Io& io) {
    GroupFile g = load_group_file(o.group_file);
    AlgebraPtr h = build_group_algebra(g.table, g.conductor);
    std::vector<HModule> mods;
    for (auto& [name, mats] : g.irreps) mods.emplace_back(name, h, mats);
    std::string label = g.name.empty() ? "group of order " + std::to_string(g.table.order()) : g.name;
    return finish_gen(make_bundle(h, std::move(mods), GroupInfo{"group-algebra", g.table},
                                  "generated: group algebra of " + label),
                      o, io);
}

int cmd_gen_twisted_dual(const Options& o, const Io& io) {
    std::optional<CocycleTable> omega;
    std::string label;
    if (o.cyclic > 0) {
        if (!o.group_file.empty() || !o.cocycle_file.empty()) {
            io.err << "error: --cyclic excludes --group and --cocycle\n";
            return exit_usage;
        }
        if (o.cls >= o.cyclic) {
            io.err << "error: --class must lie in [0, " << o.cyclic << ")\n";
            return exit_usage;
        }
        omega = cyclic_cocycle(o.cyclic, o.cls);
        label = "Z/" + std::to_string(o.cyclic) + ", cocycle class " + std::to_string(o.cls);
    } else {
        if (o.group_file.empty() || o.cocycle_file.empty()) {
            io.err << "error: give --cyclic M [--class Q], or both --group and --cocycle\n";
            return exit_usage;
        }
        GroupFile g = load_group_file(o.group_file);
        omega = load_cocycle_file(o.cocycle_file, g.table);
        label = (g.name.empty() ? "group of order " + std::to_string(g.table.order()) : g.name) + ", cocycle from " +
                std::filesystem::path(o.cocycle_file).filename().string();
    }
    AlgebraPtr h = build_twisted_dual(*omega);
    return finish_gen(make_bundle(h, dual_group_simples(h, omega->group()), GroupInfo{"twisted-dual", omega->group()},
                                  "generated: twisted dual of " + label),
                      o, io);
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DimensionError*>(&e) ||
        dynamic_cast<const InvalidGroup*>(&e) || dynamic_cast<const InvalidCocycle*>(&e))
        return exit_usage;
    if (dynamic_cast<const NoIntegral*>(&e) || dynamic_cast<const AmbiguousIntegral*>(&e) ||
        dynamic_cast<const NotNormalizable*>(&e) || dynamic_cast<const NoUniqueSolution*>(&e))
        return exit_integral;
    if (dynamic_cast<const CompletionFailed*>(&e) || dynamic_cast<const Singular*>(&e)) return exit_axiom;
    return exit_inconsistent;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Frobenius-Schur indicators for quasi-Hopf algebras", "quasifs"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&, const Io&)> action;

    auto bundle_cmd = [&](const std::string& name, const std::string& help, auto fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("bundle", o.bundle, "bundle file")->required()->check(CLI::ExistingFile);
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    auto add_level = [&](CLI::App* sub) {
        sub->add_option("--level", o.level, "axiom gate run before computing (strict or core)")
            ->check(CLI::IsMember({"core", "strict"}));
    };

    CLI::App* v = bundle_cmd("validate", "check the axioms", cmd_validate);
    v->add_flag("--strict", o.strict, "also check associativity, unit, quasi-coassociativity and the pentagon");
    add_level(bundle_cmd("integral", "normalized integral", cmd_integral));
    add_level(bundle_cmd("elements", "Hausser-Nill elements and nu_H", cmd_elements));
    add_level(bundle_cmd("pivotal", "pivotal element g", cmd_pivotal));
    CLI::App* ind = bundle_cmd("indicators", "indicator of every module", cmd_indicators);
    add_level(ind);
    ind->add_option("--t", o.t, "choice of t")->check(CLI::IsMember({"pl", "pr"}));
    CLI::App* cls = bundle_cmd("classify", "classify one module by invariant forms", cmd_classify);
    add_level(cls);
    cls->add_option("--module", o.module, "module name")->required();
    bundle_cmd("crosscheck", "compare indicators, traces and the form oracle", cmd_crosscheck);

    CLI::App* gen = app.add_subcommand("gen", "generate a bundle");
    gen->require_subcommand(1);
    CLI::App* ga = gen->add_subcommand("group-algebra", "group algebra with its irreducible representations");
    ga->add_option("--group", o.group_file, "group file")->required()->check(CLI::ExistingFile);
    ga->add_option("--out", o.out_file, "output path (default: standard output)");
    ga->callback([&] { action = cmd_gen_group_algebra; });
    CLI::App* td = gen->add_subcommand("twisted-dual", "twisted dual group algebra with its simple modules");
    td->add_option("--cyclic", o.cyclic, "use Z/M")->check(CLI::Range(std::size_t(1), std::size_t(64)));
    td->add_option("--class", o.cls, "cocycle class Q in [0, M)");
    td->add_option("--group", o.group_file, "group file")->check(CLI::ExistingFile);
    td->add_option("--cocycle", o.cocycle_file, "cocycle file")->check(CLI::ExistingFile);
    td->add_option("--out", o.out_file, "output path (default: standard output)");
    td->callback([&] { action = cmd_gen_twisted_dual; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? exit_ok : exit_usage;
    }
    if (!action) return exit_usage;
    Io io{out, err, o.format == "json"};
    try {
        return action(o, io);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

} // namespace quasifs
