#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <set>

#include "composihedra/counting.hpp"
#include "composihedra/trees.hpp"
#include "oracles.hpp"

using namespace ck;

namespace {
std::set<PaintedTree> as_set(const std::vector<PaintedTree>& v) {
    return {v.begin(), v.end()};
}
}  // namespace

TEST_CASE("binary painted tree enumeration matches known counts") {
    CHECK(enumerate_binary_painted(1).size() == 1);
    CHECK(enumerate_binary_painted(3).size() == 6);
    CHECK(enumerate_binary_painted(4).size() == 21);
    CHECK(enumerate_binary_painted(5).size() == 80);
    CHECK_THROWS_AS(enumerate_binary_painted(0), std::invalid_argument);
}

TEST_CASE("binary painted trees agree with the cut oracle") {
    for (int n = 1; n <= 6; ++n) {
        auto lib = enumerate_binary_painted(n);
        CHECK(as_set(lib) == oracle::binary_painted_by_cuts(n));
        CHECK(std::is_sorted(lib.begin(), lib.end(), [](const auto& a, const auto& b) {
            return to_string(a) < to_string(b);
        }));
        for (const auto& t : lib) {
            CHECK(valid_painted_tree(t));
            CHECK(is_binary(t));
            CHECK(leaf_count(t) == n);
        }
    }
    for (int n = 7; n <= 8; ++n)
        CHECK(enumerate_binary_painted(n).size() == oracle::count_binary_painted_by_cuts(n));
}

TEST_CASE("general painted tree enumeration") {
    CHECK(enumerate_painted(1).size() == 1);
    CHECK(enumerate_painted(2).size() == 3);
    CHECK(enumerate_painted(3).size() == 13);
    CHECK_THROWS_AS(enumerate_painted(0), std::invalid_argument);
    for (int n = 1; n <= 4; ++n) {
        auto lib = enumerate_painted(n);
        CHECK(as_set(lib) == oracle::painted_by_filter(n));
        for (const auto& t : lib) CHECK(valid_painted_tree(t));
    }
}

TEST_CASE("serialization round-trips") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : enumerate_painted(n)) CHECK(parse_painted_tree(to_string(t)) == t);
    for (const auto& s : enumerate_shapes(5)) CHECK(parse_tree_shape(to_string(s)) == s);
}

TEST_CASE("contraction basics") {
    auto trees = enumerate_binary_painted(4);
    for (const auto& t : trees) {
        CHECK(contract(t, {}) == t);
        auto all = contract(t, internal_edges(t));
        REQUIRE(all.has_value());
        CHECK(*all == painted_corolla(4));
    }
    // f(a)f(b): collapsing one painted stem leaves a node mixing painted and
    // unpainted children, so the single contraction is rejected while the
    // simultaneous one reaches the corolla.
    PaintedTree fafb = upper_tree({1, 1});
    auto stems = internal_edges(fafb);
    REQUIRE(stems.size() == 2);
    CHECK_FALSE(contract(fafb, {stems[0]}).has_value());
    CHECK_FALSE(contract(fafb, {stems[1]}).has_value());
    CHECK(contract(fafb, stems) == painted_corolla(2));
    CHECK_THROWS_AS(contract(fafb, {99}), std::invalid_argument);
}

TEST_CASE("refinement matches exhaustive contraction and is a partial order") {
    for (int n = 2; n <= 4; ++n) {
        auto trees = enumerate_painted(n);
        std::size_t m = trees.size();
        std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                leq[i][j] = refines(trees[i], trees[j]);
                CHECK(leq[i][j] == oracle::refines_by_subsets(trees[i], trees[j]));
            }
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(leq[i][i]);
            for (std::size_t j = 0; j < m; ++j) {
                if (i != j) CHECK_FALSE((leq[i][j] && leq[j][i]));
                for (std::size_t k = 0; leq[i][j] && k < m; ++k)
                    if (leq[j][k]) CHECK(leq[i][k]);
            }
        }
    }
    PaintedTree corolla = painted_corolla(3);
    for (const auto& t : enumerate_binary_painted(3)) {
        CHECK(refines(t, t));
        CHECK(refines(t, corolla));
        CHECK_FALSE(refines(corolla, t));
    }
    CHECK_THROWS_AS(refines(painted_corolla(2), painted_corolla(3)), std::invalid_argument);
}

TEST_CASE("domain canonicalization") {
    // the two 3-leaf binary trees landing on the origin share one canonical form
    PaintedTree left = parse_painted_tree("(-(-(-*-*)-*))");
    PaintedTree right = parse_painted_tree("(-(-*-(-*-*)))");
    CHECK(canonicalize_domain(left) == canonicalize_domain(right));
    CHECK(canonicalize_domain(left) == parse_painted_tree("(-(-*-*-*))"));
    CHECK(domain_equivalent(left, right));

    for (int n = 1; n <= 5; ++n)
        for (const auto& t : enumerate_painted(n)) {
            PaintedTree c = canonicalize_domain(t);
            CHECK(valid_painted_tree(c));
            CHECK(canonicalize_domain(c) == c);
            CHECK(refines(t, c));  // canonicalization is itself a contraction
        }
}

TEST_CASE("canonical forms generate exactly the single-collapse equivalence") {
    // union-find over single collapses of edges joining two unpainted
    // branching nodes; components must coincide with canonical-form fibers
    for (int n = 2; n <= 5; ++n) {
        auto trees = enumerate_painted(n);
        std::map<PaintedTree, int> index;
        for (std::size_t i = 0; i < trees.size(); ++i) index[trees[i]] = static_cast<int>(i);
        std::vector<int> parent(trees.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](auto&& self, int x) -> int {
            return parent[x] == x ? x : parent[x] = self(self, parent[x]);
        };
        auto unite = [&](int a, int b) { parent[find(find, a)] = find(find, b); };
        for (std::size_t i = 0; i < trees.size(); ++i) {
            const auto& t = trees[i];
            // locate edges whose both endpoints are unpainted branching nodes
            int counter = 0;
            std::vector<int> collapse;
            auto walk = [&](auto&& self, const PaintedTree& node) -> void {
                ++counter;
                for (const auto& c : node.children) {
                    int child_id = counter;
                    if (!node.painted && !c.painted && !c.is_leaf()) collapse.push_back(child_id);
                    self(self, c);
                }
            };
            walk(walk, t);
            for (int e : collapse) {
                auto r = contract(t, {e});
                REQUIRE(r.has_value());
                unite(static_cast<int>(i), index.at(*r));
            }
        }
        for (std::size_t i = 0; i < trees.size(); ++i)
            for (std::size_t j = 0; j < trees.size(); ++j) {
                bool same_comp = find(find, static_cast<int>(i)) == find(find, static_cast<int>(j));
                bool same_canon = canonicalize_domain(trees[i]) == canonicalize_domain(trees[j]);
                CHECK(same_comp == same_canon);
            }
    }
}

TEST_CASE("weighted tree bijection") {
    // a fully painted binary tree has all weights 1
    PaintedTree full = parse_painted_tree("(=(=(-*)=(-*))=(-*))");
    WeightedTree w = weighted_form(full);
    CHECK(w.weights == std::vector<int>{1, 1, 1});
    CHECK(w.shape == parse_tree_shape("((**)*)"));

    // six leaves grafted as blocks of 3, 1, 2 onto a binary skeleton
    WeightedTree w312{parse_tree_shape("(*(**))"), {3, 1, 2}};
    PaintedTree rep = from_weighted(w312);
    CHECK(leaf_count(rep) == 6);
    CHECK(weighted_form(rep) == w312);
    // any binary representative of that class gives the same weighted form
    PaintedTree binrep = parse_painted_tree("(=(-(-(-*-*)-*))=(=(-*)=(-(-*-*))))");
    REQUIRE(is_binary(binrep));
    CHECK(canonicalize_domain(binrep) == rep);
    CHECK(weighted_form(binrep) == w312);

    // distinct weighted forms over the binary 4-leaf trees = vertex count 15
    std::set<std::pair<std::string, std::vector<int>>> images;
    for (const auto& t : enumerate_binary_painted(4))
        images.emplace(to_string(weighted_form(t).shape), weighted_form(t).weights);
    CHECK(images.size() == 15);

    CHECK_THROWS_AS(weighted_form(painted_corolla(3)), std::invalid_argument);

    // round trip over all weighted trees of total weight <= 6
    for (int total = 1; total <= 6; ++total)
        for (int t = 1; t <= total; ++t)
            for (const auto& shape : enumerate_shapes_binary(t))
                for (const auto& comp : compositions(total, 1)) {
                    if (static_cast<int>(comp.size()) != t) continue;
                    WeightedTree wt{shape, comp};
                    CHECK(weighted_form(from_weighted(wt)) == wt);
                    CHECK(total_weight(wt) == total);
                }
}

TEST_CASE("grafting") {
    TreeShape unit;  // single leaf
    PaintedTree crown = parse_painted_tree("(=(-*)=(-*))");
    CHECK(graft(unit, {crown}) == crown);

    TreeShape pair = parse_tree_shape("(**)");
    CHECK(graft(pair, {painted_corolla(1), painted_corolla(1)}) == upper_tree({1, 1}));
    CHECK(graft(pair, {painted_corolla(1), painted_corolla(2)}) == upper_tree({1, 2}));
    CHECK_THROWS_AS(graft(pair, {painted_corolla(1)}), std::invalid_argument);

    // module associativity: composing the bases then grafting equals grafting
    // pre-grafted crowns, on all instances with up to 5 total leaves
    for (int t = 1; t <= 3; ++t)
        for (const auto& base : enumerate_shapes_binary(t))
            for (const auto& comp : compositions(5, 1)) {
                if (static_cast<int>(comp.size()) != t) continue;
                std::vector<TreeShape> plugs;
                std::vector<std::vector<PaintedTree>> crowns;
                bool ok = true;
                for (int part : comp) {
                    auto shapes = enumerate_shapes_binary(part);
                    plugs.push_back(shapes.front());
                    std::vector<PaintedTree> cs;
                    for (int leaf = 0; leaf < part; ++leaf) cs.push_back(painted_corolla(leaf + 1));
                    crowns.push_back(cs);
                    if (cs.empty()) ok = false;
                }
                if (!ok) continue;
                std::vector<PaintedTree> flat;
                std::vector<PaintedTree> grafted;
                for (std::size_t i = 0; i < plugs.size(); ++i) {
                    for (const auto& c : crowns[i]) flat.push_back(c);
                    grafted.push_back(graft(plugs[i], crowns[i]));
                }
                CHECK(graft(compose_shapes(base, plugs), flat) == graft(base, grafted));
            }
}

TEST_CASE("distinct canonical classes count the vertices") {
    for (int n = 1; n <= 8; ++n) {
        std::set<PaintedTree> classes;
        for (const auto& t : enumerate_binary_painted(n)) classes.insert(canonicalize_domain(t));
        CHECK(Int(classes.size()) == vertex_count(n));
    }
}
