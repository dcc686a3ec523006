// Copyright 2026 The UnionStab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance run: one PASS/FAIL line per criterion, exit 1 if
// any fails.

#include <CLI11.hpp>

#include <bit>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "support/properties.hpp"
#include "unionstab/sim.hpp"

using namespace unionstab;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string &what) {
        if (!ok) pass = false;
        notes.push_back((ok ? "" : "NOT ") + what);
    }
    void info(const std::string &what) { notes.push_back(what); }
};

std::string data_dir;

std::ifstream open_data(const std::string &name) {
    std::ifstream in(data_dir + "/" + name);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + data_dir + "/" + name);
    return in;
}

UnionStabilizerCode five_six_two() {
    auto in = open_data("five_six_two.union");
    return read_union_code(in);
}

Outcome reproduction() {
    Outcome o;
    auto u = five_six_two();
    o.check(u.K() == 6 && u.k() == 0, "dimension 6");
    std::vector<PauliVector> printed;
    for (auto s : {"XXXXX", "XXZIZ", "XZIZX", "YIYZZ", "YZZYI"}) printed.push_back(PauliVector::parse(s));
    o.check(row_spaces_equal(u.base().stabilizer_matrix(), symplectic_matrix(printed, 5)), "base spans the printed generators");
    std::size_t worst = 5;
    for (std::uint64_t i = 0; i < u.K(); ++i) {
        for (std::uint64_t j = i + 1; j < u.K(); ++j) worst = std::min(worst, coset_distance(u, i, j));
    }
    o.check(worst >= 2, "pairwise coset distances >= 2 (min " + std::to_string(worst) + ")");
    std::size_t td = true_distance(u);
    o.check(td == 2, "true distance " + std::to_string(td));
    auto kl = kl_verify(code_basis(u), 2, 1e-8);
    std::ostringstream s;
    s << "KL on " << kl.errors_checked << " weight-1 errors, worst deviation " << kl.worst_deviation;
    o.check(kl.ok && kl.errors_checked == 15, s.str());
    return o;
}

Outcome search() {
    Outcome o;
    auto in = open_data("five_zero_three.stab");
    auto base = read_stabilizer_code(in);
    auto g2 = build_search_graph(base, 2);
    o.check(g2.vertex_count() == 32, std::to_string(g2.vertex_count()) + " vertices");
    auto c2 = max_clique(g2, CliqueMode::Exact);
    o.check(c2.size() >= 6 && is_clique(g2, c2.vertices), "d=2 clique size " + std::to_string(c2.size()));
    auto u = union_from_clique(base, g2, c2);
    o.check(union_distance_bound(u).d.value_or(0) >= 2, "induced code " + union_distance_bound(u).to_string());
    auto g3 = build_search_graph(base, 3);
    auto c3 = max_clique(g3, CliqueMode::Exact);
    o.check(c3.size() == 2 && c3.optimal, "d=3 exact maximum clique " + std::to_string(c3.size()));
    return o;
}

Outcome encoder() {
    Outcome o;
    auto u = five_six_two();
    auto q1 = synth_q1(u.base());
    o.check(q1_check(u.base(), q1), "Q1 maps the stabilizer to (0|I) (" + std::to_string(q1.size()) + " gates)");
    auto labels = canonicalize_translations(u, q1);
    std::set<std::string> got, want{"00000", "01010", "11011", "01111", "11100", "10010"};
    for (const auto &l : labels) got.insert(l.to_string());
    o.check(got == want && labels.size() == 6, "labels {00000,01010,11011,01111,11100,10010}");
    auto qc = synth_qc(labels, 8, 7, true);
    o.check(qc.size() <= 7, "Qc " + std::to_string(qc.size()) + " gates (" + std::to_string(qc.count(GateType::CCX)) +
                                 " CCX), labels onto |bin3> in some order");
    auto rep = full_encoder_check(u, q1, qc, 1e-8);
    std::string order;
    for (auto v : rep.order) order += std::to_string(v);
    std::ostringstream s;
    s << "encoder maps state i to |00>|bin3(pi(i))>, pi=" << order << ", deviation " << rep.worst_deviation;
    o.check(rep.ok, s.str());
    auto cin = open_data("five_six_two_qc.circuit");
    auto drawn = read_circuit(cin);
    o.check(full_encoder_check(u, q1, drawn).ok, "drawn 7-gate circuit also verifies");
    auto fixed = synth_qc(labels, 8, 7, false);
    o.info("fixed order i -> |bin3(i)> needs " + std::to_string(fixed.size()) + " gates");
    return o;
}

Outcome nordstrom_robinson_check() {
    Outcome o;
    auto nr = nordstrom_robinson();
    std::set<std::string> words;
    for (const auto &t : nr.translations) {
        for (const auto &w : enumerate_words(nr.base.generator)) words.insert((t ^ w).to_string());
    }
    o.check(words.size() == 256, std::to_string(words.size()) + " words");
    o.check(nr.translations.size() == 8 && row_spaces_equal(nr.base.generator, reed_muller(1, 4).generator),
            std::to_string(nr.translations.size()) + " cosets of RM(1,4)");
    std::size_t d = min_distance(nr, DistanceStrategy::Brute);
    o.check(d == 6, "brute-force distance " + std::to_string(d));
    o.check(nesting_check(reed_muller(1, 4), nr).nested && nesting_check(nr, reed_muller(2, 4)).nested,
            "RM(1,4) < NR < RM(2,4)");
    return o;
}

Outcome m6_certificates() {
    Outcome o;
    auto ring = gr4_build(5);
    auto kerdock = kerdock_z4(ring);
    auto kw = lee_swe(kerdock);
    o.check(kw.total() == 4096 && kw.min_nonzero_lee_weight() == 28,
            "Kerdock " + std::to_string(kw.total()) + " words, min Lee " + std::to_string(kw.min_nonzero_lee_weight()));
    auto pw = swe_macwilliams(kw, kw.total());
    o.check(pw.min_nonzero_lee_weight() == 6, "MacWilliams: Preparata-like distance " + std::to_string(pw.min_nonzero_lee_weight()));
    auto gd = goethals_dual_z4(ring);
    auto gdw = lee_swe(gd);
    auto gw = swe_macwilliams(gdw, gdw.total());
    o.check(gdw.total() == 131072 && gw.min_nonzero_lee_weight() == 8,
            "Goethals dual " + std::to_string(gdw.total()) + " words, MacWilliams: Goethals distance " +
                std::to_string(gw.min_nonzero_lee_weight()));

    // Coset structure of the Gray images.
    std::size_t kp = phi_kernel(z4_dual(kerdock)).rows();
    std::size_t kg = phi_kernel(goethals_z4(ring)).rows();
    o.check(kp == 42 && kg == 42, "Gray-image kernels of dimension 42 (found " + std::to_string(kp) + " and " +
                                      std::to_string(kg) + ", so not unions of RM(3,6) cosets)");

    // The classical codes used by the family construction.
    auto rm36 = reed_muller(3, 6);
    for (auto [name, c, want_t, want_d] : {std::tuple{"Preparata", preparata_classical(6), 1024u, 6u},
                                           std::tuple{"Goethals", goethals_classical(6), 32u, 8u}}) {
        std::set<std::string> ts;
        for (const auto &t : c.translations) ts.insert(t.to_string());
        RrefResult base = rref(c.base.generator);
        std::size_t kernel_extra = 0;
        for (const auto &t : c.translations) {
            bool stable = true;
            for (const auto &u : c.translations) {
                if (!ts.count(reduce_modulo(base, t ^ u).to_string())) {
                    stable = false;
                    break;
                }
            }
            kernel_extra += stable;
        }
        std::size_t kernel_dim = c.base.k() + static_cast<std::size_t>(std::countr_zero(kernel_extra));
        std::size_t d = min_distance(c, DistanceStrategy::Enumerator);
        bool base_is_rm = row_spaces_equal(c.base.generator, rm36.generator);
        o.info(std::string("classical ") + name + ": " + std::to_string(c.translations.size()) + " cosets of " +
               (base_is_rm ? "RM(3,6)" : "a code other than RM(3,6)") + ", kernel dimension " + std::to_string(kernel_dim) +
               ", d=" + std::to_string(d) + " [enumerator]" +
               (c.translations.size() == want_t && d == want_d && base_is_rm ? "" : " (unexpected)"));
    }
    return o;
}

Outcome family_row() {
    Outcome o;
    auto g = family_build(FamilyKind::Goethals, 6);
    auto p = family_build(FamilyKind::Preparata, 6);
    o.check(g.params.to_string() == "((64, 2^30, 8 [enumerator]))" && g.params.d_is_bound, g.params.to_string() + " (bound)");
    o.check(p.params.to_string() == "((64, 2^40, 6 [enumerator]))" && p.params.d_is_bound, p.params.to_string() + " (bound)");
    o.check(family_log2_dimension(FamilyKind::Goethals, 6) == 30 && family_log2_dimension(FamilyKind::Preparata, 6) == 40,
            "log2 dimensions 30 and 40");
    auto c = reed_muller(3, 6), cp = reed_muller(4, 6);
    auto e = enlarge_css(c, cp, default_fixed_point_free_map(cp.k() - c.k()));
    auto params = stabilizer_params(e.code);
    o.check(params.to_string() == "[[64,35,6 [paper-bound]]]", params.to_string());
    o.check(e.weights_checked && e.min_translation_weight >= 4,
            "translation weights over all 2^15-1 nonzero v, min " + std::to_string(e.min_translation_weight));
    return o;
}

Outcome properties() {
    Outcome o;
    auto line = [&](const checks::Tally &t, const std::string &what) {
        o.check(t.violations == 0, what + ": " + std::to_string(t.samples) + " samples, " + std::to_string(t.violations) + " violations");
    };
    line(checks::commutation(2, 0, 1), "commutation n=2 exhaustive");
    line(checks::commutation(4, 10000, 2), "commutation n=4");
    line(checks::weight_identity(100000, 3), "weight identity");
    line(checks::gray_isometry(10000, 4), "Gray isometry");
    line(checks::gray_addition(10000, 5), "Gray addition");
    auto mw = checks::macwilliams(3);
    o.check(mw.involution && mw.matches_dual, "MacWilliams involution at m'=3");
    checks::Tally part;
    for (const auto &c : checks::small_codes()) {
        auto t = checks::partition(c);
        part.samples += t.samples;
        part.violations += t.violations;
    }
    line(part, "syndrome partition n<=5");
    return o;
}

Outcome negative_controls() {
    Outcome o;
    std::ifstream in(data_dir + "/full_space_2.union");
    auto full = read_union_code(in);
    o.check(!kl_verify(code_basis(full), 2).ok, "((2,4,1)) fails KL at d=2");
    auto u = five_six_two();
    auto q1 = synth_q1(u.base());
    auto cin = open_data("five_six_two_qc.circuit");
    auto qc = read_circuit(cin);
    qc.gates.pop_back();
    o.check(!full_encoder_check(u, q1, qc).ok, "corrupted Qc fails the encoder check");
    o.check(!nesting_check(reed_muller(2, 4), reed_muller(1, 4)).nested, "RM(2,4) not inside RM(1,4)");
    return o;
}

Outcome symbolic_rows() {
    Outcome o;
    for (std::size_t m : {8u, 10u}) {
        std::size_t n = std::size_t{1} << m;
        std::size_t g = family_log2_dimension(FamilyKind::Goethals, m), p = family_log2_dimension(FamilyKind::Preparata, m);
        o.check(g == n - 6 * m + 2 && p == n - 4 * m,
                "m=" + std::to_string(m) + ": ((" + std::to_string(n) + ", 2^" + std::to_string(g) + ", 8)) and ((" +
                    std::to_string(n) + ", 2^" + std::to_string(p) + ", 6))");
    }
    return o;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"acceptance criteria"};
    data_dir = "data";
    app.add_option("--data", data_dir, "directory with the shipped code files");
    CLI11_PARSE(app, argc, argv);

    struct Criterion {
        std::string name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all = {
        {"1 ((5,6,2)) reproduction", reproduction},
        {"2 search reproduction", search},
        {"3 encoder synthesis", encoder},
        {"4 Nordstrom-Robinson", nordstrom_robinson_check},
        {"5 m=6 classical certificates", m6_certificates},
        {"6 family table row m=6", family_row},
        {"7 property suites", properties},
        {"8 negative controls", negative_controls},
        {"- symbolic rows m=8,10", symbolic_rows},
    };
    bool ok = true;
    for (const auto &c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.notes.push_back(std::string("error: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && o.pass;
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.name << "  (" << std::fixed;
        line.precision(2);
        line << secs << " s)";
        std::cout << line.str() << '\n';
        for (const auto &n : o.notes) std::cout << "      " << n << '\n';
        std::cout.flush();
    }
    return ok ? 0 : 1;
}
