// ckpoly: command-line front end for the composihedra library.
//
//   count      vertex and facet counting, sequence identities
//   enumerate  binary painted trees or their domain classes
//   realize    vertex coordinates for the ck / k / j families
//   verify     the full consistency ladder for one n
//   export     write a realization or face poset to a file
//
// Exit code 0 means every check run by the subcommand passed.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "composihedra/composihedra.hpp"

using namespace ck;
using Clock = std::chrono::steady_clock;

namespace {

WeightVector parse_weights(const std::string& csv, int n) {
    if (csv.empty()) return unit_weights(n);
    WeightVector w;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string field =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (field.empty()) throw CLI::ValidationError("--weights", "empty weight field");
        try {
            w.push_back(int_from_string(field));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weights", "bad integer '" + field + "'");
        }
        if (w.back() < 1) throw CLI::ValidationError("--weights", "weights must be >= 1");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(w.size()) != n)
        throw CLI::ValidationError("--weights", "expected " + std::to_string(n) + " weights");
    return w;
}

Rat parse_q(const std::string& s) {
    try {
        return rat_from_string(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--q", "expected an exact rational like 1/2");
    }
}

std::string weights_string(const WeightVector& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += to_string(w[i]);
    }
    return s;
}

void emit(const RunReport& report, bool as_json) {
    if (as_json) {
        std::cout << to_json(report).dump(2) << "\n";
        return;
    }
    std::cout << report.command << " n=" << report.n;
    if (!report.weights.empty()) std::cout << " weights=" << weights_string(report.weights);
    if (report.q) std::cout << " q=" << to_string(*report.q);
    std::cout << "\n";
    for (const auto& [k, v] : report.counts) std::cout << "  " << k << ": " << v << "\n";
    for (const auto& c : report.checks)
        std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
                  << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    std::cout << (report.all_pass() ? "ok" : "FAILED") << " in " << report.elapsed_ms << " ms\n";
}

VRep realize_family(const std::string& family, int n, const WeightVector& w,
                    const std::optional<Rat>& q) {
    if (family == "ck") {
        if (q && *q != 0)
            throw CLI::ValidationError("--q", "family ck is realized at q = 0");
        return composihedron_vrep(n, w);
    }
    if (family == "k") return associahedron_vrep(n);
    if (family == "j") {
        if (!q) throw CLI::ValidationError("--q", "family j needs an explicit q in (0,1)");
        return multiplihedron_vrep(n, *q);
    }
    throw CLI::ValidationError("--family", "must be one of ck, k, j");
}

RunReport run_verify(int n, const WeightVector& w) {
    RunReport report;
    report.command = "verify";
    report.n = n;
    report.weights = w;
    auto t0 = Clock::now();
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        report.checks.push_back({name, pass, detail});
    };

    auto binaries = enumerate_binary_painted(n);
    std::set<PaintedTree> classes;
    for (const auto& t : binaries) classes.insert(canonicalize_domain(t));
    report.counts.emplace_back("binary_trees", std::to_string(binaries.size()));
    report.counts.emplace_back("vertex_classes", std::to_string(classes.size()));
    add("vertex_count", Int(classes.size()) == vertex_count(n),
        to_string(Int(classes.size())) + " classes");

    auto v = composihedron_vrep(n, w);
    if (n >= 2) {
        auto h = composihedron_hrep(n, w);
        report.counts.emplace_back("facets", std::to_string(h.facets.size()));
        add("facet_count", Int(h.facets.size()) == facet_breakdown(n).total);
        auto hv = enumerate_vertices(h);
        add("hull_vertices_match",
            std::set<Point>(hv.points.begin(), hv.points.end()) ==
                std::set<Point>(v.points.begin(), v.points.end()),
            std::to_string(hv.points.size()) + " hull vertices");

        // bounding lemmas: tight exactly on class refinements
        std::map<PaintedTree, std::vector<const PaintedTree*>> members;
        auto all = enumerate_painted(n);
        for (const auto& u : all) members[canonicalize_domain(u)].push_back(&u);
        bool lemmas = true;
        for (const auto& t : binaries) {
            Point p = painted_point(t, Rat(0), w);
            const auto& reps = members.at(canonicalize_domain(t));
            for (const auto& f : h.facets) {
                bool cref = false;
                for (const auto* u : reps)
                    if (refines(*u, f.tree)) {
                        cref = true;
                        break;
                    }
                lemmas = lemmas && satisfies(f.plane, p) && tight(f.plane, p) == cref;
            }
        }
        add("bounding_lemmas", lemmas);

        auto geo = face_lattice_geometric(h, hv);
        auto comb = face_poset_composihedron(n);
        add("lattice_isomorphic", poset_isomorphic(geo, with_bottom(comb)).has_value(),
            std::to_string(geo.size()) + " faces with bottom");

        bool products = true;
        for (const auto& f : facet_trees(n))
            products =
                products && poset_isomorphic(facet_subposet(n, f), facet_product_model(n, f))
                                .has_value();
        add("facet_products", products);

        auto qmap = quotient_to_composihedron(n);
        std::set<int> hit(qmap.image.begin(), qmap.image.end());
        bool order_ok = true;
        for (int i = 0; i < qmap.source.size() && order_ok; ++i)
            for (int j = 0; j < qmap.source.size() && order_ok; ++j)
                if (qmap.source.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    order_ok = qmap.target.leq[static_cast<std::size_t>(
                        qmap.image[static_cast<std::size_t>(i)])][static_cast<std::size_t>(
                        qmap.image[static_cast<std::size_t>(j)])];
        add("quotient_map", static_cast<int>(hit.size()) == qmap.target.size() && order_ok,
            std::to_string(qmap.source.size()) + " -> " + std::to_string(qmap.target.size()) +
                " faces");
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact realizations and verification for the composihedra family"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable reports on stdout");

    int n = 0;
    std::string weights_csv, q_str, family = "ck", format = "human", out_path, what = "vrep";
    bool classes = false;

    auto* count = app.add_subcommand("count", "vertex/facet counts and identities");
    count->add_option("--n", n, "number of leaves")->required()->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "binary painted trees");
    enumerate->add_option("--n", n, "number of leaves")->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--classes", classes, "list domain classes instead of trees");

    auto* realize = app.add_subcommand("realize", "vertex coordinates for a family");
    realize->add_option("--family", family, "ck, k or j")->default_val("ck");
    realize->add_option("--n", n, "number of leaves")->required()->check(CLI::PositiveNumber);
    realize->add_option("--q", q_str, "exact rational parameter, e.g. 1/2");
    realize->add_option("--weights", weights_csv, "comma-separated positive integer weights");
    realize->add_option("--format", format, "human, polymake or json")->default_val("human");

    auto* verify = app.add_subcommand("verify", "run the consistency ladder");
    verify->add_option("--n", n, "number of leaves")->required()->check(CLI::PositiveNumber);
    verify->add_option("--weights", weights_csv, "comma-separated positive integer weights");

    auto* exp = app.add_subcommand("export", "write a realization or poset to a file");
    exp->add_option("--what", what, "vrep, hrep or poset")->default_val("vrep");
    exp->add_option("--family", family, "ck, k or j")->default_val("ck");
    exp->add_option("--n", n, "number of leaves")->required()->check(CLI::PositiveNumber);
    exp->add_option("--q", q_str, "exact rational parameter");
    exp->add_option("--weights", weights_csv, "comma-separated positive integer weights");
    exp->add_option("--format", format, "polymake or json")->required();
    exp->add_option("--out", out_path, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) {
            RunReport report;
            report.command = "count";
            report.n = n;
            auto t0 = Clock::now();
            auto a = vertex_series(n);
            std::string seq;
            for (int i = 1; i <= n; ++i) {
                if (i > 1) seq += ' ';
                seq += to_string(a[static_cast<std::size_t>(i)]);
            }
            report.counts.emplace_back("a_n", to_string(a[static_cast<std::size_t>(n)]));
            report.counts.emplace_back("sequence", seq);
            if (n >= 2) {
                auto fb = facet_breakdown(n);
                report.counts.emplace_back("facets", to_string(fb.total));
                report.counts.emplace_back("upper_facets", to_string(fb.upper_count));
                report.counts.emplace_back("lower_facets", to_string(fb.lower_count));
            }
            report.checks.push_back({"recursion_equals_closed_form", vertex_count(n) == a[static_cast<std::size_t>(n)], ""});
            bool ident = true;
            for (int i = 1; i <= n; ++i) {
                auto [lhs, rhs] = facet_identity(i);
                ident = ident && lhs == rhs;
            }
            report.checks.push_back({"facet_identity", ident, "n <= " + std::to_string(n)});
            report.elapsed_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
            emit(report, as_json);
            return report.all_pass() ? 0 : 1;
        }

        if (enumerate->parsed()) {
            if (classes) {
                std::set<PaintedTree> set;
                for (const auto& t : enumerate_binary_painted(n))
                    set.insert(canonicalize_domain(t));
                std::vector<PaintedTree> sorted(set.begin(), set.end());
                canonical_sort(sorted);
                for (const auto& t : sorted) std::cout << to_string(t) << "\n";
            } else {
                for (const auto& t : enumerate_binary_painted(n))
                    std::cout << to_string(t) << "\n";
            }
            return 0;
        }

        if (realize->parsed() || exp->parsed()) {
            WeightVector w = parse_weights(weights_csv, n);
            std::optional<Rat> q;
            if (!q_str.empty()) q = parse_q(q_str);
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (exp->parsed()) {
                file.open(out_path);
                if (!file) throw std::runtime_error("cannot open " + out_path);
                os = &file;
            }
            if (what == "hrep" && exp->parsed()) {
                if (format != "json") throw CLI::ValidationError("--format", "hrep exports as json");
                *os << to_json(composihedron_hrep(n, w)).dump(2) << "\n";
                return 0;
            }
            if (what == "poset" && exp->parsed()) {
                if (format != "json") throw CLI::ValidationError("--format", "poset exports as json");
                *os << to_json(face_poset_composihedron(n)).dump(2) << "\n";
                return 0;
            }
            VRep v = realize_family(family, n, w, q);
            if (format == "polymake") {
                *os << export_polymake(v);
            } else if (format == "json") {
                *os << to_json(v).dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < v.points.size(); ++i) {
                    std::string row;
                    for (const auto& c : v.points[i]) {
                        if (!row.empty()) row += ' ';
                        row += to_string(c);
                    }
                    *os << "(" << row << ")";
                    if (i < v.tags.size()) *os << "  " << to_string(v.tags[i]);
                    *os << "\n";
                }
            }
            return 0;
        }

        if (verify->parsed()) {
            WeightVector w = parse_weights(weights_csv, n);
            RunReport report = run_verify(n, w);
            emit(report, as_json);
            return report.all_pass() ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
