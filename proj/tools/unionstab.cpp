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

// unionstab: construct, search, synthesize and verify union stabilizer codes.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "unionstab/sim.hpp"

using namespace unionstab;

namespace {

struct RunConfig {
    std::string command;
    std::vector<std::string> args;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::uint64_t budget = std::uint64_t{1} << 24;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string format = "text";
    std::string output;
    std::size_t sim_qubits = 10;
};

// Headline plus ordered key/value lines; rendered as text or csv.
struct Report {
    std::string headline;
    std::vector<std::pair<std::string, std::string>> fields;
    bool failed = false;

    void add(std::string k, std::string v) { fields.emplace_back(std::move(k), std::move(v)); }
    void add(std::string k, std::size_t v) { add(std::move(k), std::to_string(v)); }
    void add_bool(std::string k, bool v) { add(std::move(k), std::string(v ? "yes" : "no")); }
};

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const RunConfig &cfg, const Report &r) {
    std::ostringstream args;
    for (const auto &a : cfg.args) args << ' ' << a;
    if (cfg.format == "csv") {
        std::cout << "key,value\n";
        std::cout << "command," << csv_escape(cfg.command + args.str()) << '\n';
        std::cout << "cap," << cfg.cap << "\nbudget," << cfg.budget << "\nseed," << cfg.seed << "\nworkers," << cfg.workers
                  << '\n';
        std::cout << "result," << csv_escape(r.headline) << '\n';
        for (const auto &[k, v] : r.fields) std::cout << csv_escape(k) << ',' << csv_escape(v) << '\n';
        std::cout << "status," << (r.failed ? "FAIL" : "OK") << '\n';
        return;
    }
    std::cout << "# unionstab " << cfg.command << args.str() << " | cap=" << cfg.cap << " budget=" << cfg.budget
              << " seed=" << cfg.seed << " workers=" << cfg.workers << '\n';
    std::cout << r.headline << '\n';
    for (const auto &[k, v] : r.fields) std::cout << "  " << k << ": " << v << '\n';
    if (r.failed) std::cout << "FAIL\n";
}

template <class Writer>
void write_output(const RunConfig &cfg, Writer &&w) {
    if (cfg.output.empty()) return;
    std::ofstream out(cfg.output);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + cfg.output);
    w(out);
}

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    return in;
}

std::string linear_string(const LinearCode &c, std::size_t d, Provenance p) {
    return "[" + std::to_string(c.n) + "," + std::to_string(c.k()) + "," + std::to_string(d) + " [" +
           std::string(provenance_name(p)) + "]]";
}

std::string coset_size_string(const CosetCode &c) {
    if (auto l = c.log2_size()) return "2^" + std::to_string(*l);
    return std::to_string(c.translations.size()) + "*2^" + std::to_string(c.base.k());
}

std::string coset_string(const CosetCode &c, std::size_t d, Provenance p) {
    return "(" + std::to_string(c.length()) + ", " + coset_size_string(c) + ", " + std::to_string(d) + " [" +
           std::string(provenance_name(p)) + "])";
}

LinearCode read_linear(const std::string &path) {
    auto in = open_input(path);
    return LinearCode::from_generator(read_matrix(in));
}

CosetCode read_coset(const std::string &path) {
    auto in = open_input(path);
    return read_coset_code(in);
}

// A union-code file, or a stabilizer file read as a single coset.
UnionStabilizerCode read_code_file(const std::string &path) {
    auto in = open_input(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::istringstream probe(text);
    read_stabilizer_code(probe);
    std::string line;
    std::istringstream again(text);
    if (next_content_line(probe, line)) return read_union_code(again);
    return union_code(read_stabilizer_code(again), {});
}

std::string join_sizes(const std::vector<std::size_t> &v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

// ---------------------------------------------------------------------------

int parse_int(const std::string &s, const char *what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception &) {
        throw Error(ErrorKind::BadParams, std::string(what) + " must be an integer, got '" + s + "'");
    }
}

void need_args(const std::vector<std::string> &a, std::size_t n, const char *usage) {
    if (a.size() != n) throw Error(ErrorKind::BadParams, std::string("usage: construct ") + usage);
}

Report cmd_construct(const RunConfig &cfg, const std::string &kind, const std::vector<std::string> &a,
                     const std::string &route_name) {
    Report r;
    FamilyRoute route = route_name == "z4" ? FamilyRoute::Z4 : FamilyRoute::Classical;
    if (kind == "rm") {
        need_args(a, 2, "rm r m");
        auto c = reed_muller(parse_int(a[0], "r"), parse_int(a[1], "m"));
        r.headline = linear_string(c, *c.known_distance, c.distance_provenance);
        write_output(cfg, [&](std::ostream &o) { write_matrix(o, c.generator); });
    } else if (kind == "nr" || kind == "preparata" || kind == "goethals") {
        CosetCode c;
        if (kind == "nr") {
            need_args(a, 0, "nr");
            c = nordstrom_robinson();
        } else {
            need_args(a, 1, "preparata|goethals m");
            int m = parse_int(a[0], "m");
            c = family_classical_code(kind == "preparata" ? FamilyKind::Preparata : FamilyKind::Goethals, m, route);
        }
        bool small = c.base.k() < 40 && (std::uint64_t{c.translations.size()} << c.base.k()) <= (std::uint64_t{1} << 16);
        auto strategy = small ? DistanceStrategy::Brute : DistanceStrategy::Enumerator;
        std::size_t d = min_distance(c, strategy, cfg.cap, cfg.workers);
        r.headline = coset_string(c, d, provenance_of(strategy));
        r.add("cosets", c.translations.size());
        r.add("base dimension", c.base.k());
        if (c.claimed_distance && d != *c.claimed_distance) r.failed = true;
        write_output(cfg, [&](std::ostream &o) { write_coset_code(o, c); });
    } else if (kind == "css") {
        need_args(a, 2, "css C1.mat C2.mat");
        auto code = css(read_linear(a[0]), read_linear(a[1]));
        r.headline = stabilizer_params(code, cfg.cap).to_string();
        write_output(cfg, [&](std::ostream &o) { write_stabilizer_code(o, code); });
    } else if (kind == "enlarge") {
        need_args(a, 2, "enlarge r m   (RM(r,m) inside RM(r+1,m))");
        int rr = parse_int(a[0], "r"), m = parse_int(a[1], "m");
        auto c = reed_muller(rr, m), cp = reed_muller(rr + 1, m);
        auto e = enlarge_css(c, cp, default_fixed_point_free_map(cp.k() - c.k()));
        r.headline = stabilizer_params(e.code, cfg.cap).to_string();
        r.add("translation weights checked", std::string(e.weights_checked ? "all nonzero v" : "no"));
        r.add("min translation weight", e.min_translation_weight);
        r.add("d'", e.d_prime);
        if (!e.weights_checked || e.min_translation_weight < e.d_prime) r.failed = true;
        write_output(cfg, [&](std::ostream &o) { write_stabilizer_code(o, e.code); });
    } else if (kind == "css-union") {
        need_args(a, 2, "css-union U1.coset U2.coset");
        auto u = css_like_union(read_coset(a[0]), read_coset(a[1]), DistanceStrategy::Enumerator, cfg.cap);
        r.headline = u.params.to_string();
        r.add_bool("distance is a lower bound", u.params.d_is_bound);
        write_output(cfg, [&](std::ostream &o) { write_union_code(o, u); });
    } else if (kind == "family") {
        need_args(a, 2, "family goethals|preparata m");
        FamilyKind fk = parse_family_kind(a[0]);
        int m = parse_int(a[1], "m");
        if (m % 2 != 0) throw Error(ErrorKind::BadParams, "m must be even, got " + std::to_string(m));
        auto u = family_build(fk, m, route);
        r.headline = u.params.to_string();
        r.add("log2 dimension", family_log2_dimension(fk, static_cast<std::size_t>(m)));
        r.add_bool("distance is a lower bound", u.params.d_is_bound);
        write_output(cfg, [&](std::ostream &o) { write_union_code(o, u); });
    } else {
        throw Error(ErrorKind::BadParams, "unknown construction '" + kind + "'");
    }
    return r;
}

Report cmd_search(const RunConfig &cfg, const std::string &path, std::size_t d, const std::string &mode, bool strict) {
    auto in = open_input(path);
    auto base = read_stabilizer_code(in);
    auto g = build_search_graph(base, d, cfg.cap, strict);
    CliqueMode cm = mode == "greedy" ? CliqueMode::Greedy : CliqueMode::Exact;
    auto clique = max_clique(g, cm, cfg.seed, cfg.budget);
    auto u = union_from_clique(base, g, clique);
    auto p = union_distance_bound(u, cfg.cap);
    Report r;
    r.headline = p.to_string();
    r.add("vertices", g.vertex_count());
    r.add("edges", g.edge_count());
    r.add("purity", g.purity);
    r.add("clique size", clique.size());
    r.add_bool("optimal", clique.optimal);
    r.add("search nodes", static_cast<std::size_t>(clique.nodes));
    std::string labels;
    for (auto v : clique.vertices) labels += (labels.empty() ? "" : " ") + g.label(v);
    r.add("clique labels", labels);
    write_output(cfg, [&](std::ostream &o) { write_union_code(o, u); });
    return r;
}

void kl_fields(Report &r, const KlReport &kl, std::size_t d) {
    r.add("kl distance", d);
    r.add("kl errors checked", kl.errors_checked);
    r.add_bool("kl ok", kl.ok);
    std::ostringstream dev;
    dev << kl.worst_deviation;
    r.add("kl worst deviation", dev.str());
    if (!kl.ok) {
        std::string first;
        for (std::size_t i = 0; i < kl.violations.size() && i < 5; ++i) first += (i ? " " : "") + kl.violations[i];
        r.add("kl violations", std::to_string(kl.violations.size()) + " (" + first + (kl.violations.size() > 5 ? " ..." : "") + ")");
        r.failed = true;
    }
}

Report cmd_synth(const RunConfig &cfg, const std::string &path, std::size_t claim, std::size_t max_gates, bool fixed,
                 const std::string &q1_out, const std::string &qc_out) {
    auto u = read_code_file(path);
    const auto &base = u.base();
    std::size_t r_bits = base.stab.size();
    auto q1 = synth_q1(base);
    if (!q1_check(base, q1)) throw Error(ErrorKind::ConstructionMismatch, "Q1 failed its tableau check");
    auto labels = canonicalize_translations(u, q1);
    Circuit qc;
    if (u.K() > 1) {
        qc = synth_qc(labels, max_gates, 7, !fixed);
    }
    Report r;
    r.add("q1 gates", q1.size());
    r.add("qc gates", qc.size());
    r.add("qc toffoli gates", qc.count(GateType::CCX));
    std::string ls;
    for (const auto &l : labels) ls += (ls.empty() ? "" : " ") + l.to_string();
    r.add("labels", ls);
    if (u.n() <= cfg.sim_qubits) {
        auto enc = full_encoder_check(u, q1, qc);
        r.add_bool("encoder ok", enc.ok);
        r.add("encoder order", join_sizes(enc.order));
        if (!enc.ok) r.failed = true;
        std::size_t d = claim ? claim : union_distance_bound(u, cfg.cap).d.value_or(1);
        kl_fields(r, kl_verify(code_basis(u, cfg.sim_qubits), d), d);
    } else {
        r.add("simulation", "skipped (n > " + std::to_string(cfg.sim_qubits) + ")");
    }
    r.headline = "Q1 " + std::to_string(q1.size()) + " gates, Qc " + std::to_string(qc.size()) + " gates";
    if (!q1_out.empty()) {
        std::ofstream o(q1_out);
        write_circuit(o, q1);
    }
    if (!qc_out.empty()) {
        std::ofstream o(qc_out);
        write_circuit(o, qc);
    }
    return r;
}

Report cmd_verify(const RunConfig &cfg, const std::string &path, const std::string &level, std::size_t claim) {
    auto u = read_code_file(path);
    Report r;
    r.add("n", u.n());
    r.add("k", u.k());
    r.add("translations", std::to_string(u.K()));
    r.add("dimension", u.params.dimension_string());
    // coset distinctness is enforced when the file is read
    r.add_bool("cosets distinct", true);
    CodeParams p = u.is_product() ? u.params : union_distance_bound(u, cfg.cap);
    p.n = u.n();
    p.k = u.k();
    p.translations = u.K();
    r.headline = p.to_string();
    r.add("distance", p.d ? std::to_string(*p.d) + (p.d_is_bound ? " (lower bound)" : " (exact)") : "?");
    if (p.purity) r.add("purity", *p.purity);
    if (level == "full") {
        if (u.is_product()) throw Error(ErrorKind::StrategyInfeasible, "full verification needs an explicit small code");
        std::size_t td = u.K() > 1 ? true_distance(u, cfg.cap) : *p.d;
        r.add("true distance", td);
        r.headline = p.to_string();
        std::size_t d = claim ? claim : td;
        if (claim && td < claim) r.failed = true;
        if (u.n() <= cfg.sim_qubits) kl_fields(r, kl_verify(code_basis(u, cfg.sim_qubits), d), d);
    } else if (claim && p.d && *p.d < claim) {
        r.failed = true;
    }
    return r;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Union stabilizer codes: construction, search, encoder synthesis and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.set_config("--config", "", "file of 'key = value' lines mirroring the flags");
    app.add_option("--cap", cfg.cap, "enumeration cap (words or Paulis)")->capture_default_str();
    app.add_option("--budget", cfg.budget, "clique search node budget")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized search")->capture_default_str();
    app.add_option("--workers", cfg.workers, "worker threads for enumeration")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();
    app.add_option("--sim-qubits", cfg.sim_qubits, "largest n for dense simulation")->check(CLI::Range(1, 12))->capture_default_str();
    app.add_option("-o,--output", cfg.output, "write the code to this file");

    auto *construct = app.add_subcommand("construct", "build a code: rm, nr, preparata, goethals, css, enlarge, css-union, family");
    std::string kind, route = "classical";
    std::vector<std::string> cargs;
    construct->add_option("kind", kind)->required()->check(
        CLI::IsMember({"rm", "nr", "preparata", "goethals", "css", "enlarge", "css-union", "family"}));
    construct->add_option("args", cargs, "construction parameters");
    construct->add_option("--route", route, "binary route for preparata/goethals")->check(CLI::IsMember({"classical", "z4"}));

    auto *search = app.add_subcommand("search", "clique search on the coset graph of a stabilizer code");
    std::string search_file, mode = "exact";
    std::size_t search_d = 2;
    bool strict = false;
    search->add_option("file", search_file)->required();
    search->add_option("-d,--distance", search_d, "target distance")->check(CLI::PositiveNumber);
    search->add_option("--mode", mode)->check(CLI::IsMember({"exact", "greedy"}));
    search->add_flag("--require-purity", strict, "reject bases impure below d");

    auto *synth = app.add_subcommand("synth", "inverse encoder synthesis and verification");
    std::string synth_file, q1_out, qc_out;
    std::size_t claim = 0, max_gates = 8;
    bool fixed = false;
    synth->add_option("file", synth_file)->required();
    synth->add_option("-d,--distance", claim, "distance to verify (default: certified bound)");
    synth->add_option("--max-gates", max_gates)->capture_default_str();
    synth->add_flag("--fixed-order", fixed, "map label i to |bin(i)> exactly rather than to some bijection");
    synth->add_option("--q1-out", q1_out);
    synth->add_option("--qc-out", qc_out);

    auto *verify = app.add_subcommand("verify", "check a code file");
    std::string verify_file, level = "structural";
    std::size_t vclaim = 0;
    verify->add_option("file", verify_file)->required();
    verify->add_option("--level", level)->check(CLI::IsMember({"structural", "full"}));
    verify->add_option("-d,--distance", vclaim, "claimed distance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        Report r;
        if (*construct) {
            cfg.command = "construct";
            cfg.args = {kind};
            cfg.args.insert(cfg.args.end(), cargs.begin(), cargs.end());
            r = cmd_construct(cfg, kind, cargs, route);
        } else if (*search) {
            cfg.command = "search";
            cfg.args = {search_file, "d=" + std::to_string(search_d), mode};
            r = cmd_search(cfg, search_file, search_d, mode, strict);
        } else if (*synth) {
            cfg.command = "synth";
            cfg.args = {synth_file};
            if (claim) cfg.args.push_back("d=" + std::to_string(claim));
            r = cmd_synth(cfg, synth_file, claim, max_gates, fixed, q1_out, qc_out);
        } else {
            cfg.command = "verify";
            cfg.args = {verify_file, "level=" + level};
            if (vclaim) cfg.args.push_back("d=" + std::to_string(vclaim));
            r = cmd_verify(cfg, verify_file, level, vclaim);
        }
        emit(cfg, r);
        return r.failed ? 1 : 0;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
