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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "quasifs/builders.hpp"
#include "quasifs/errors.hpp"
#include "quasifs/group.hpp"
#include "quasifs/indicator.hpp"
#include "quasifs/validate.hpp"
#include "support.hpp"

using namespace quasifs;
using namespace quasifs::test;

namespace {

// Collects the first few failure messages of one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (ok) return;
        ++failures_;
        if (notes_.size() < 5) notes_.push_back(what);
    }
    bool ok() const { return failures_ == 0 && count_ > 0; }
    std::size_t count() const { return count_; }
    std::string summary() const {
        std::string s = std::to_string(count_ - failures_) + "/" + std::to_string(count_) + " checks";
        for (const auto& n : notes_) s += "\n    " + n;
        return s;
    }

private:
    std::size_t count_ = 0, failures_ = 0;
    std::vector<std::string> notes_;
};

nlohmann::json read_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    return nlohmann::json::parse(in);
}

FieldElement integer(const FieldPtr& f, long n) { return f->from_rational(Rational(n)); }

std::string str(const FieldElement& x) { return x.to_string(); }

struct Exec {
    int code;
    std::string out;
};

Exec execute(const std::string& args) {
    std::string cmd = std::string(QUASIFS_CLI) + " " + args + " 2>&1";
    Exec r{-1, {}};
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Corpus bundles with their analysis, computed once.
struct Loaded {
    std::string name;
    Bundle bundle;
    AlgebraAnalysis analysis;
};

std::vector<Loaded> load_corpus() {
    std::vector<Loaded> out;
    for (const auto& name : corpus_names()) {
        Bundle b = load(name);
        AlgebraAnalysis a = analyze(b.algebra);
        out.push_back({name, std::move(b), std::move(a)});
    }
    return out;
}

Check grand_agreement(double& seconds) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    for (const auto& name : corpus_names()) {
        Bundle b = load(name);
        AlgebraAnalysis a = analyze(b.algebra);
        auto f = b.algebra->field();
        for (const auto& v : b.modules) {
            std::string tag = name + "/" + v.name();
            IndicatorReport r = indicator_report(a, v);
            if (!r.absolutely_simple) continue;
            EMapResult e = e_map(v, v, a.integral, a.hn, a.pivotal, TChoice::pl);
            OracleResult o = oracle_classify(v, a.pivotal);
            FieldElement mu = integer(f, o.mu);
            c.expect(r.nu_pl == r.nu_pr, tag + ": nu(pl) " + str(r.nu_pl) + " != nu(pr) " + str(r.nu_pr));
            c.expect(r.nu_pl == *e.trace, tag + ": nu " + str(r.nu_pl) + " != tr E " + str(*e.trace));
            c.expect(r.nu_pl == mu, tag + ": nu " + str(r.nu_pl) + " != oracle " + std::to_string(o.mu));
            c.expect(o.mu >= -1 && o.mu <= 1, tag + ": oracle value out of range");
        }
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < 60.0, "wall time " + std::to_string(seconds) + " s");
    return c;
}

Check classical_regression(const std::vector<Loaded>& corpus) {
    Check c;
    nlohmann::json golden = read_json(data_dir() / "golden" / "classical_indicators.json");
    std::map<std::string, std::vector<std::string>> values;
    for (const auto& name : group_algebra_names()) {
        GroupFile gf = load_group_file(data_dir() / "groups" / (name + ".group.json"));
        const Loaded* l = nullptr;
        for (const auto& x : corpus)
            if (x.name == name) l = &x;
        auto f = l->bundle.algebra->field();
        for (const auto& [irrep, mats] : gf.irreps) {
            std::string tag = name + "/" + irrep;
            std::vector<FieldElement> chi;
            for (const auto& m : mats) chi.push_back(trace(m));
            FieldElement classical = classical_group_indicator(gf.table, chi);
            FieldElement frozen = el(f, golden[name][irrep].get<std::string>());
            const HModule* v = l->bundle.find_module(irrep);
            c.expect(v != nullptr, tag + ": module missing");
            if (!v) continue;
            IndicatorReport r = indicator_report(l->analysis, *v);
            c.expect(classical == frozen, tag + ": classical " + str(classical) + " != golden " + str(frozen));
            c.expect(r.nu_pl == classical, tag + ": nu " + str(r.nu_pl) + " != classical " + str(classical));
            c.expect(r.nu_pr == classical, tag + ": nu(pr) " + str(r.nu_pr) + " != classical " + str(classical));
            values[name].push_back(str(r.nu_pl));
        }
    }
    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    c.expect(sorted(values["q8"]) == sorted({"1", "1", "1", "1", "-1"}), "Q8 multiset");
    c.expect(values["z4"] == std::vector<std::string>{"1", "0", "1", "0"}, "Z/4 indicators");
    return c;
}

Check pivotal_suite(const std::vector<Loaded>& corpus) {
    Check c;
    for (const auto& l : corpus) {
        const QuasiHopfAlgebra& h = *l.bundle.algebra;
        const AlgebraAnalysis& a = l.analysis;
        for (TChoice t : {TChoice::pl, TChoice::pr}) {
            std::string tag = l.name + " t=" + to_string(t);
            const Tensor& tt = select(a.hn, t);
            Vector lhs = h.multiply(a.pivotal.g_inv, h.antipode(h.beta()));
            c.expect(lhs == pivotal_rhs(h, a.integral, tt), tag + ": element identity");
            for (const auto& v : l.bundle.modules) {
                PivotalSides s = pivotal_tensor_sides(v, a.pivotal, a.integral, tt);
                c.expect(s.lhs == s.rhs, tag + "/" + v.name() + ": tensor identity");
            }
        }
    }
    return c;
}

Check pivotal_normalization(const std::vector<Loaded>& corpus) {
    Check c;
    for (const auto& l : corpus) {
        auto f = l.bundle.algebra->field();
        for (const auto& v : l.bundle.modules) {
            FieldElement tr = categorical_trace(v, pivotal_map(v, l.analysis.pivotal));
            c.expect(tr == integer(f, long(v.dim())), l.name + "/" + v.name() + ": catr = " + str(tr));
        }
    }
    return c;
}

// Pentagon on k^{Z/4} with one associator entry rescaled by zeta, compared
// with the cocycle identity of the correspondingly edited table.
void pentagon_matches_cocycle(Check& c) {
    int broken = 0;
    for (std::size_t q = 0; q < 4; ++q) {
        for (std::size_t x = 1; x < 4; ++x) {
            QuasiHopfData d = build_twisted_dual(cyclic_cocycle(4, q))->data();
            CocycleTable w = cyclic_cocycle(4, q);
            std::array<std::size_t, 3> at{x, 3, x};
            w.set_exponent(at[0], at[1], at[2], w.exponent(at[0], at[1], at[2]) + 1);
            FieldElement z = d.field->zeta_power(1);
            d.phi.at(at) = d.phi.at(at) * z;
            d.phi_inv->at(at) = d.phi_inv->at(at) * z.inverse();
            ValidationReport r = validate(QuasiHopfAlgebra(d), ValidationLevel::strict);
            bool pentagon = r.find("pentagon")->passed;
            if (!pentagon) ++broken;
            c.expect(pentagon == validate_cocycle(w).cocycle,
                     "q=" + std::to_string(q) + " x=" + std::to_string(x) + ": pentagon and cocycle identity differ");
        }
        QuasiHopfAlgebra valid(build_twisted_dual(cyclic_cocycle(4, q))->data());
        c.expect(validate(valid, ValidationLevel::strict).find("pentagon")->passed, "valid cocycle fails pentagon");
    }
    c.expect(broken > 0, "no edited associator broke the pentagon");
}

Check structural(const std::vector<Loaded>& corpus) {
    Check c;
    // builder outputs
    for (const auto& name : group_algebra_names()) {
        GroupFile gf = load_group_file(data_dir() / "groups" / (name + ".group.json"));
        AlgebraPtr h = build_group_algebra(gf.table, gf.conductor);
        c.expect(validate(*h, ValidationLevel::strict).ok(), name + ": strict validation");
    }
    for (auto [m, q] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 0}, {2, 1}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}) {
        AlgebraPtr h = build_twisted_dual(cyclic_cocycle(m, q));
        c.expect(validate(*h, ValidationLevel::strict).ok(),
                 "twisted dual m=" + std::to_string(m) + " q=" + std::to_string(q) + ": strict validation");
    }
    pentagon_matches_cocycle(c);

    for (const auto& l : corpus) {
        const QuasiHopfAlgebra& h = *l.bundle.algebra;
        const AlgebraAnalysis& a = l.analysis;
        auto f = h.field();
        c.expect(validate(h, ValidationLevel::strict).ok(), l.name + ": corpus strict validation");

        // closed forms of the integral
        const GroupTable& g = l.bundle.group->table;
        Vector expected = h.zero();
        if (l.bundle.group->kind == "group-algebra") {
            for (std::size_t x = 0; x < g.order(); ++x) expected[x] = f->from_rational(Rational(1, long(g.order())));
        } else {
            expected = h.basis(g.identity());
        }
        c.expect(a.integral.lambda == expected, l.name + ": integral closed form");
        c.expect(h.counit(a.integral.lambda).is_one(), l.name + ": eps(Lambda) = 1");
        for (std::size_t i = 0; i < h.dim(); ++i) {
            Vector scaled = a.integral.lambda;
            for (auto& x : scaled) x = x * h.counit(h.basis(i));
            c.expect(h.multiply(h.basis(i), a.integral.lambda) == scaled, l.name + ": h Lambda != eps(h) Lambda");
        }

        for (const auto& v : l.bundle.modules) {
            std::string tag = l.name + "/" + v.name();
            c.expect(invariant_subspace(v, InvariantMethod::kernel) == invariant_subspace(v, InvariantMethod::projector),
                     tag + ": invariants differ");
            for (const auto& w : l.bundle.modules) {
                std::string pair = tag + "," + w.name();
                HModule vw = tensor_module(v, w);
                auto kern = invariant_subspace(vw, InvariantMethod::kernel);
                c.expect(kern == invariant_subspace(vw, InvariantMethod::projector), pair + ": invariants differ");
                for (const auto& xi : kern) {
                    Matrix fa = adjunction_a(v, w, a.hn, xi);
                    c.expect(adjunction_a_inv(v, w, fa) == xi, pair + ": A^-1 A != id");
                }
                HModule dv = dual_module(v);
                for (const auto& phi : hom_space(dv, w)) {
                    c.expect(adjunction_a(v, w, a.hn, adjunction_a_inv(v, w, phi)) == phi, pair + ": A A^-1 != id");
                    Matrix tf = t_map(v, w, phi, a.pivotal);
                    c.expect(t_map(w, v, tf, a.pivotal) == phi, pair + ": T T != id");
                }
            }
        }
    }
    return c;
}

Check twisted_trace() {
    Check c;
    Random rnd(20260);
    for (unsigned n : {1u, 3u, 4u, 5u, 8u}) {
        auto f = field(n);
        for (std::size_t d = 1; d <= 4; ++d) {
            for (int trial = 0; trial < 6; ++trial) {
                Matrix f1 = rnd.matrix(f, d, d), f2 = rnd.matrix(f, d, d);
                Matrix f3 = rnd.matrix(f, d, d), f4 = rnd.matrix(f, d, d);
                FieldElement lhs = trace(kron(f1, f2) * flip_matrix(f, d, d) * kron(f3, f4));
                FieldElement rhs = trace(f3 * f1 * f4 * f2);
                c.expect(lhs == rhs, "N=" + std::to_string(n) + " d=" + std::to_string(d));
            }
        }
    }
    c.expect(c.count() >= 100, "fewer than 100 cases");
    return c;
}

Check negative_path() {
    Check c;
    nlohmann::json expected = read_json(data_dir() / "broken" / "expected.json");
    for (const auto& [file, axiom] : expected.items()) {
        Exec r = execute("validate --strict " + (data_dir() / "broken" / file).string());
        c.expect(r.code == 1, file + ": exit " + std::to_string(r.code));
        c.expect(r.out.find("axiom failed: " + axiom.get<std::string>()) != std::string::npos,
                 file + ": does not name " + axiom.get<std::string>());
    }
    for (const auto& name : corpus_names()) {
        for (const char* cmd : {"crosscheck", "indicators", "indicators --t pr", "pivotal"}) {
            Exec r = execute(std::string(cmd) + " " + corpus(name).string());
            c.expect(r.code == 0, name + " " + cmd + ": exit " + std::to_string(r.code));
            c.expect(r.code != 4, name + " " + cmd + ": OracleInconsistent");
        }
    }
    return c;
}

} // namespace

int main() {
    int failed = 0;
    auto report = [&](int n, const std::string& title, const std::function<Check()>& body) {
        std::string line;
        bool ok = false;
        try {
            Check c = body();
            ok = c.ok();
            line = c.summary();
        } catch (const std::exception& e) {
            line = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << " (" << title << "): " << line << std::endl;
        if (!ok) ++failed;
    };

    std::vector<Loaded> corpus;
    try {
        corpus = load_corpus();
    } catch (const std::exception& e) {
        std::cout << "FAIL loading corpus: " << e.what() << std::endl;
        return 1;
    }
    double seconds = 0;
    report(1, "grand agreement", [&] {
        Check c = grand_agreement(seconds);
        std::cout << "  corpus time " << seconds << " s" << std::endl;
        return c;
    });
    report(2, "classical regression", [&] { return classical_regression(corpus); });
    report(3, "pivotal identities", [&] { return pivotal_suite(corpus); });
    report(4, "pivotal normalization", [&] { return pivotal_normalization(corpus); });
    report(5, "structural suite", [&] { return structural(corpus); });
    report(6, "twisted trace identity", [&] { return twisted_trace(); });
    report(7, "negative path", [&] { return negative_path(); });
    return failed == 0 ? 0 : 1;
}
