#include <doctest.h>

#include <random>
#include <set>

#include "cogdim/construction.hpp"
#include "cogdim/exact_solver.hpp"
#include "test_util.hpp"

using namespace cogdim;
using namespace cogdim::testing;

namespace {

void check_verified(const Graph& g, const Representation& rep, size_t factors) {
    auto vr = verify_representation(g, rep);
    if (!vr.accepted) {
        CAPTURE(verify_clause_name(vr.failed));
        CAPTURE(vr.factor_index);
    }
    CHECK(vr.accepted);
    CHECK(rep.factors.size() == factors);
}

// Random connected interval model and the graph it induces.
struct IntervalInstance {
    Graph graph;
    BoxRepresentation boxes;
};

IntervalInstance random_interval_instance(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> endpoint(0, 2 * n);
    IntervalInstance inst;
    inst.boxes.k = 1;
    std::vector<std::pair<int, int>> iv(n);
    for (int v = 0; v < n; ++v) {
        int a = endpoint(rng), b = endpoint(rng);
        if (a > b) std::swap(a, b);
        iv[v] = {a, b};
        inst.boxes.intervals.push_back({{Rational::make(a), Rational::make(b)}});
    }
    inst.graph = Graph(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::max(iv[u].first, iv[v].first) <= std::min(iv[u].second, iv[v].second))
                inst.graph.add_edge(u, v);
    return inst;
}

// Path decomposition of an interval model: sweep the left endpoints, bag =
// intervals active at that point.
PathDecomposition interval_path_decomposition(const IntervalInstance& inst) {
    PathDecomposition dec;
    int n = inst.graph.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.boxes.intervals[a][0].first < inst.boxes.intervals[b][0].first;
    });
    for (int v : order) {
        std::vector<int> bag;
        const Rational& point = inst.boxes.intervals[v][0].first;
        for (int u = 0; u < n; ++u)
            if (inst.boxes.intervals[u][0].first <= point && point <= inst.boxes.intervals[u][0].second)
                bag.push_back(u);
        dec.bags.push_back(std::move(bag));
    }
    return dec;
}

// Random partial 2-tree with the tree decomposition that built it.
struct Partial2Tree {
    Graph graph;
    TreeDecomposition dec;
};

Partial2Tree random_partial_2tree(int n, std::mt19937& rng) {
    REQUIRE(n >= 2);
    Partial2Tree out;
    Graph full(n);
    full.add_edge(0, 1);
    out.dec.bags.push_back({0, 1});
    std::vector<std::pair<int, int>> edges{{0, 1}};
    std::vector<int> edge_bag{0};  // bag index where the edge's endpoints co-live
    for (int v = 2; v < n; ++v) {
        std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
        size_t e = pick(rng);
        auto [a, b] = edges[e];
        full.add_edge(v, a);
        full.add_edge(v, b);
        out.dec.bags.push_back({a, b, v});
        int bag = static_cast<int>(out.dec.bags.size()) - 1;
        out.dec.skeleton_edges.emplace_back(edge_bag[e], bag);
        edges.emplace_back(a, v);
        edge_bag.push_back(bag);
        edges.emplace_back(b, v);
        edge_bag.push_back(bag);
    }
    // drop random edges: still a partial 2-tree, decomposition stays valid
    out.graph = Graph(n);
    std::bernoulli_distribution keep(0.7);
    for (auto [u, v] : full.edges())
        if (keep(rng)) out.graph.add_edge(u, v);
    return out;
}

}  // namespace

TEST_CASE("alpha") {
    CHECK(alpha(1) == 1);
    CHECK(alpha(4) == 3);
    CHECK(alpha(7) == 7);
    for (int k = 1; k <= 20; ++k) {
        CHECK((alpha(k) == k || alpha(k) == k - 1));
        CHECK(alpha(k) % 2 == 1);
    }
    CHECK_THROWS_AS(alpha(0), Error);
}

TEST_CASE("matching schedule") {
    auto two = matching_schedule(2);
    REQUIRE(two.rounds.size() == 1);
    CHECK(two.rounds[0] == std::vector<std::pair<int, int>>{{0, 1}});

    auto three = matching_schedule(3);
    REQUIRE(three.rounds.size() == 3);
    for (const auto& round : three.rounds) CHECK(round.size() == 1);

    auto four = matching_schedule(4);
    REQUIRE(four.rounds.size() == 3);
    for (const auto& round : four.rounds) CHECK(round.size() == 2);

    for (int k = 1; k <= 9; ++k) {
        auto sched = matching_schedule(k);
        CHECK(static_cast<int>(sched.rounds.size()) == alpha(k));
        std::set<std::pair<int, int>> seen;
        for (const auto& round : sched.rounds) {
            std::set<int> touched;
            for (auto [a, b] : round) {
                CHECK(a < b);
                CHECK(touched.insert(a).second);
                CHECK(touched.insert(b).second);
                CHECK(seen.insert({a, b}).second);
            }
        }
        CHECK(static_cast<int>(seen.size()) == k * (k - 1) / 2);
    }
}

TEST_CASE("forest construction on named inputs") {
    SUBCASE("P4 rooted at an endpoint gives the worked factors") {
        Representation rep = forest_two_cographs(path_graph(4), {0});
        REQUIRE(rep.factors.size() == 2);
        Graph odd = path_graph(4);
        odd.add_edge(1, 3);
        Graph even = path_graph(4);
        even.add_edge(0, 2);
        even.add_edge(0, 3);
        CHECK(rep.factors[0] == odd);
        CHECK(rep.factors[1] == even);
        check_verified(path_graph(4), rep, 2);
    }
    SUBCASE("K1") {
        Representation rep = forest_two_cographs(complete_graph(1));
        CHECK(rep.factors[0] == complete_graph(1));
        CHECK(rep.factors[1] == complete_graph(1));
        check_verified(complete_graph(1), rep, 2);
    }
    SUBCASE("star rooted at the center: odd factor K4, even factor the star") {
        Representation rep = forest_two_cographs(star_graph(3), {0});
        CHECK(rep.factors[0] == complete_graph(4));
        CHECK(rep.factors[1] == star_graph(3));
        check_verified(star_graph(3), rep, 2);
    }
    SUBCASE("cycle input is rejected with its cycle") {
        CHECK_THROWS_AS(forest_two_cographs(cycle_graph(5)), WitnessError);
        try {
            forest_two_cographs(cycle_graph(5));
        } catch (const WitnessError& e) {
            CHECK(e.witness().size() >= 3);
        }
    }
}

TEST_CASE("path construction") {
    SUBCASE("P4 factors are threshold") {
        Representation rep = path_two_thresholds(path_graph(4));
        CHECK(rep.family == RepFamily::Threshold);
        check_verified(path_graph(4), rep, 2);
    }
    SUBCASE("K1 and P2") {
        check_verified(complete_graph(1), path_two_thresholds(complete_graph(1)), 2);
        Representation p2 = path_two_thresholds(path_graph(2));
        CHECK(p2.factors[0] == complete_graph(2));
        CHECK(p2.factors[1] == complete_graph(2));
        check_verified(path_graph(2), p2, 2);
    }
    SUBCASE("a path plus isolated vertices is fine") {
        Graph g = disjoint_union(path_graph(4), Graph(2));
        check_verified(g, path_two_thresholds(g), 2);
    }
    SUBCASE("two edge-containing components are rejected") {
        Graph g = disjoint_union(path_graph(2), path_graph(2));
        CHECK_THROWS_AS(path_two_thresholds(g), Error);
    }
    SUBCASE("non-paths are rejected") {
        CHECK_THROWS_AS(path_two_thresholds(star_graph(3)), Error);
        CHECK_THROWS_AS(path_two_thresholds(cycle_graph(4)), Error);
    }
}

TEST_CASE("cycle representations match Table 1 factor counts and verify") {
    for (int n = 3; n <= 12; ++n) {
        size_t cog = n <= 4 ? 1 : (n <= 6 ? 2 : 3);
        size_t th = n <= 3 ? 1 : (n == 4 ? 2 : 3);
        check_verified(cycle_graph(n), cycle_representation(n, RepFamily::Cograph), cog);
        check_verified(cycle_graph(n), cycle_representation(n, RepFamily::Threshold), th);
    }
    SUBCASE("the C4 threshold factors are the figure's") {
        Representation rep = cycle_representation(4, RepFamily::Threshold);
        Graph f1 = cycle_graph(4);
        f1.add_edge(0, 2);
        Graph f2 = cycle_graph(4);
        f2.add_edge(1, 3);
        CHECK(rep.factors[0] == f1);
        CHECK(rep.factors[1] == f2);
    }
    SUBCASE("the C5 cograph factors are the figure's") {
        Representation rep = cycle_representation(5, RepFamily::Cograph);
        Graph a = cycle_graph(5);
        a.add_edge(0, 3);
        a.add_edge(1, 4);
        Graph b = cycle_graph(5);
        b.add_edge(0, 2);
        b.add_edge(1, 3);
        CHECK(rep.factors[0] == a);
        CHECK(rep.factors[1] == b);
    }
    CHECK_THROWS_AS(cycle_representation(2, RepFamily::Cograph), Error);
}

TEST_CASE("cycle_order") {
    CHECK(cycle_order(cycle_graph(5)) == std::vector<int>{0, 1, 2, 3, 4});
    Graph scrambled(4);
    scrambled.add_edge(0, 2);
    scrambled.add_edge(2, 1);
    scrambled.add_edge(1, 3);
    scrambled.add_edge(3, 0);
    CHECK(cycle_order(scrambled) == std::vector<int>{0, 2, 1, 3});
    CHECK_THROWS_AS(cycle_order(path_graph(4)), Error);
}

TEST_CASE("treewidth construction on named inputs") {
    SUBCASE("K3 with one bag: four complete factors") {
        TreeDecomposition dec{{{0, 1, 2}}, {}};
        Representation rep = treewidth_construction(complete_graph(3), dec);
        REQUIRE(rep.factors.size() == 4);
        for (const Graph& f : rep.factors) CHECK(f == complete_graph(3));
        check_verified(complete_graph(3), rep, 4);
    }
    SUBCASE("P3") {
        TreeDecomposition dec{{{0, 1}, {1, 2}}, {{0, 1}}};
        Representation rep = treewidth_construction(path_graph(3), dec);
        check_verified(path_graph(3), rep, 3);
    }
    SUBCASE("C4 with a width-2 decomposition") {
        TreeDecomposition dec{{{0, 1, 3}, {1, 2, 3}}, {{0, 1}}};
        Representation rep = treewidth_construction(cycle_graph(4), dec);
        check_verified(cycle_graph(4), rep, 4);
    }
    SUBCASE("the comparability factor is a supergraph of the input") {
        std::mt19937 rng(71);
        for (int i = 0; i < 15; ++i) {
            Graph g = random_graph(9, 0.3, rng);
            Representation rep = treewidth_construction(g, heuristic_tree_decomposition(g));
            CHECK(is_subgraph_of(g, rep.factors[0]));
        }
    }
    SUBCASE("any root bag works") {
        std::mt19937 rng(73);
        for (int i = 0; i < 12; ++i) {
            Graph g = random_graph(8, 0.35, rng);
            TreeDecomposition dec = heuristic_tree_decomposition(g);
            int root = static_cast<int>(rng() % dec.bags.size());
            Representation rep = treewidth_construction(g, dec, root);
            check_verified(g, rep, static_cast<size_t>(dec.width()) + 2);
        }
    }
    SUBCASE("invalid decomposition is rejected") {
        TreeDecomposition dec{{{0, 1}}, {}};
        CHECK_THROWS_AS(treewidth_construction(path_graph(3), dec), Error);
    }
}

TEST_CASE("pathwidth construction on named inputs") {
    SUBCASE("P4: two threshold factors") {
        PathDecomposition dec{{{0, 1}, {1, 2}, {2, 3}}};
        Representation rep = pathwidth_construction(path_graph(4), dec);
        CHECK(rep.family == RepFamily::Threshold);
        check_verified(path_graph(4), rep, 2);
    }
    SUBCASE("the spider tree with a width-2 witness: three threshold factors") {
        PathDecomposition dec{{{0, 1, 2}, {2, 3}, {3, 4, 5}, {3, 5, 6}, {3, 7, 8}, {8, 9}}};
        REQUIRE(validate_path_decomposition(fig1_tree(), dec).accepted);
        REQUIRE(dec.width() == 2);
        Representation rep = pathwidth_construction(fig1_tree(), dec);
        check_verified(fig1_tree(), rep, 3);
    }
    SUBCASE("K3 in one bag: three complete factors") {
        PathDecomposition dec{{{0, 1, 2}}};
        Representation rep = pathwidth_construction(complete_graph(3), dec);
        REQUIRE(rep.factors.size() == 3);
        for (const Graph& f : rep.factors) CHECK(f == complete_graph(3));
    }
}

TEST_CASE("box-chromatic construction on named inputs") {
    auto unit = [](long long lo, long long hi) {
        return std::make_pair(Rational::make(lo), Rational::make(hi));
    };
    SUBCASE("P3 with its interval model") {
        BoxRepresentation boxes{1, {{unit(0, 1)}, {unit(1, 2)}, {unit(2, 3)}}};
        Coloring coloring{ColorMode::Proper, {0, 1, 0}};
        Representation rep = box_chromatic_construction(path_graph(3), boxes, coloring);
        check_verified(path_graph(3), rep, 2);
        for (const Graph& f : rep.factors) {
            CHECK(is_split(f).member);
            CHECK(is_cograph(f).member);
        }
    }
    SUBCASE("2K2 with its interval model") {
        Graph g = disjoint_union(complete_graph(2), complete_graph(2));
        BoxRepresentation boxes{1, {{unit(0, 1)}, {unit(0, 1)}, {unit(2, 3)}, {unit(2, 3)}}};
        Coloring coloring{ColorMode::Proper, {0, 1, 0, 1}};
        check_verified(g, box_chromatic_construction(g, boxes, coloring), 2);
    }
    SUBCASE("K2: both factors complete") {
        BoxRepresentation boxes{1, {{unit(0, 1)}, {unit(1, 2)}}};
        Coloring coloring{ColorMode::Proper, {0, 1}};
        Representation rep = box_chromatic_construction(complete_graph(2), boxes, coloring);
        REQUIRE(rep.factors.size() == 2);
        CHECK(rep.factors[0] == complete_graph(2));
        CHECK(rep.factors[1] == complete_graph(2));
    }
    SUBCASE("invalid witness is rejected") {
        BoxRepresentation boxes{1, {{unit(0, 1)}, {unit(2, 3)}, {unit(4, 5)}}};
        CHECK_THROWS_AS(
            box_chromatic_construction(path_graph(3), boxes, Coloring{ColorMode::Proper, {0, 1, 0}}),
            Error);
    }
}

TEST_CASE("partition composition on named inputs") {
    SUBCASE("two parts: the pair's own representation survives") {
        Graph g = path_graph(4);
        std::vector<std::vector<int>> parts{{0, 2}, {1, 3}};
        std::map<std::pair<int, int>, Representation> pair_reps;
        pair_reps[{0, 1}] = forest_two_cographs(g);
        std::vector<Representation> single_reps{
            Representation{RepFamily::Cograph, 2, {Graph(2)}},
            Representation{RepFamily::Cograph, 2, {Graph(2)}}};
        Representation rep = partition_composition(g, parts, pair_reps, single_reps, 2);
        check_verified(g, rep, 2);
    }
    SUBCASE("three singleton parts of K3") {
        Graph g = complete_graph(3);
        std::vector<std::vector<int>> parts{{0}, {1}, {2}};
        std::map<std::pair<int, int>, Representation> pair_reps;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                pair_reps[{i, j}] = Representation{RepFamily::Cograph, 2, {complete_graph(2)}};
        std::vector<Representation> single_reps(3, Representation{RepFamily::Cograph, 1, {complete_graph(1)}});
        Representation rep = partition_composition(g, parts, pair_reps, single_reps, 1);
        REQUIRE(rep.factors.size() == 3);
        for (const Graph& f : rep.factors) CHECK(f == complete_graph(3));
        check_verified(g, rep, 3);
    }
    SUBCASE("invalid piece is rejected") {
        Graph g = path_graph(4);
        std::vector<std::vector<int>> parts{{0, 2}, {1, 3}};
        std::map<std::pair<int, int>, Representation> pair_reps;
        pair_reps[{0, 1}] = Representation{RepFamily::Cograph, 4, {complete_graph(4)}};  // wrong intersection
        std::vector<Representation> single_reps{
            Representation{RepFamily::Cograph, 2, {Graph(2)}},
            Representation{RepFamily::Cograph, 2, {Graph(2)}}};
        CHECK_THROWS_AS(partition_composition(g, parts, pair_reps, single_reps, 1), Error);
    }
}

TEST_CASE("star coloring construction") {
    SUBCASE("P4 with three colors") {
        Representation rep = star_coloring_construction(path_graph(4), Coloring{ColorMode::Star, {0, 1, 2, 0}});
        check_verified(path_graph(4), rep, 3);
    }
    SUBCASE("K2") {
        Representation rep = star_coloring_construction(complete_graph(2), Coloring{ColorMode::Star, {0, 1}});
        REQUIRE(rep.factors.size() == 1);
        CHECK(rep.factors[0] == complete_graph(2));
    }
    SUBCASE("C4 with three colors") {
        Representation rep = star_coloring_construction(cycle_graph(4), Coloring{ColorMode::Star, {0, 1, 0, 2}});
        check_verified(cycle_graph(4), rep, 3);
    }
    SUBCASE("invalid coloring is rejected") {
        CHECK_THROWS_AS(star_coloring_construction(path_graph(4), Coloring{ColorMode::Star, {0, 1, 0, 1}}),
                        Error);
    }
}

TEST_CASE("star composition across a C6 partition") {
    Graph g = cycle_graph(6);
    Coloring coloring;
    for (int k = 1; k <= 6; ++k) {
        auto res = exact_coloring(g, ColorMode::Star, k);
        if (res.status == ExactColoringResult::Status::Sat) {
            coloring = res.coloring;
            break;
        }
    }
    Representation rep = star_coloring_construction(g, coloring);
    check_verified(g, rep, static_cast<size_t>(alpha(coloring.used_color_count())));
}

TEST_CASE("acyclic coloring construction") {
    SUBCASE("C4 with three colors: six factors") {
        Representation rep =
            acyclic_coloring_construction(cycle_graph(4), Coloring{ColorMode::Acyclic, {0, 1, 0, 2}});
        check_verified(cycle_graph(4), rep, 6);
    }
    SUBCASE("a 2-colored tree: two factors") {
        Graph t = star_graph(4);
        Coloring coloring{ColorMode::Acyclic, {0, 1, 1, 1, 1}};
        Representation rep = acyclic_coloring_construction(t, coloring);
        check_verified(t, rep, 2);
    }
    SUBCASE("K1: degenerate two factors") {
        Representation rep = acyclic_coloring_construction(complete_graph(1), Coloring{ColorMode::Acyclic, {0}});
        REQUIRE(rep.factors.size() == 2);
        CHECK(rep.factors[0] == complete_graph(1));
        CHECK(rep.factors[1] == complete_graph(1));
    }
}

TEST_CASE("randomized construction closure") {
    std::mt19937 rng(72);
    SUBCASE("200 random trees and some thinned forests") {
        for (int i = 0; i < 200; ++i) {
            Graph t = random_tree(2 + static_cast<int>(rng() % 49), rng);
            if (!verify_representation(t, forest_two_cographs(t)).accepted) {
                CAPTURE(i);
                REQUIRE(false);
            }
        }
        for (int i = 0; i < 40; ++i) {
            Graph f = random_forest(2 + i % 30, 0.8, rng);
            check_verified(f, forest_two_cographs(f), 2);
        }
    }
    SUBCASE("paths") {
        for (int n = 1; n <= 25; ++n) {
            Representation rep = path_two_thresholds(path_graph(n));
            CHECK(rep.family == RepFamily::Threshold);
            check_verified(path_graph(n), rep, 2);
        }
    }
    SUBCASE("partial 2-trees with their defining decompositions") {
        for (int i = 0; i < 25; ++i) {
            Partial2Tree inst = random_partial_2tree(4 + i % 10, rng);
            REQUIRE(validate_tree_decomposition(inst.graph, inst.dec).accepted);
            Representation rep = treewidth_construction(inst.graph, inst.dec);
            check_verified(inst.graph, rep, static_cast<size_t>(inst.dec.width()) + 2);
        }
    }
    SUBCASE("interval instances: pathwidth and box-chromatic routes") {
        for (int i = 0; i < 25; ++i) {
            IntervalInstance inst = random_interval_instance(4 + i % 8, rng);
            PathDecomposition dec = interval_path_decomposition(inst);
            REQUIRE(validate_path_decomposition(inst.graph, dec).accepted);
            check_verified(inst.graph, pathwidth_construction(inst.graph, dec),
                           static_cast<size_t>(dec.width()) + 1);

            Coloring coloring = greedy_proper_coloring(inst.graph);
            Representation rep = box_chromatic_construction(inst.graph, inst.boxes, coloring);
            check_verified(inst.graph, rep, static_cast<size_t>(coloring.used_color_count()));
        }
    }
    SUBCASE("exact star and acyclic colorings on small random graphs") {
        for (int i = 0; i < 12; ++i) {
            Graph g = random_graph(5 + i % 5, 0.4, rng);
            for (ColorMode mode : {ColorMode::Star, ColorMode::Acyclic}) {
                Coloring coloring;
                for (int k = 1; k <= g.vertex_count(); ++k) {
                    auto res = exact_coloring(g, mode, k);
                    if (res.status == ExactColoringResult::Status::Sat) {
                        coloring = res.coloring;
                        break;
                    }
                }
                int chi = coloring.used_color_count();
                if (mode == ColorMode::Star)
                    check_verified(g, star_coloring_construction(g, coloring),
                                   static_cast<size_t>(alpha(chi)));
                else
                    check_verified(g, acyclic_coloring_construction(g, coloring),
                                   static_cast<size_t>(2 * alpha(chi)));
            }
        }
    }
}

TEST_CASE("dimension sum bound across intersections") {
    // dim(G) <= sum of factor dims whenever G is the intersection of the factors
    std::vector<std::pair<Graph, Representation>> corpus;
    corpus.emplace_back(cycle_graph(5), cycle_representation(5, RepFamily::Cograph));
    corpus.emplace_back(cycle_graph(6), cycle_representation(6, RepFamily::Cograph));
    corpus.emplace_back(cycle_graph(4), cycle_representation(4, RepFamily::Threshold));
    corpus.emplace_back(path_graph(4), path_two_thresholds(path_graph(4)));
    for (const auto& [g, rep] : corpus) {
        auto family = rep.family;
        auto dim_of = [&](const Graph& h) {
            auto res = exact_dimension(h, family, 3);
            REQUIRE(res.status == DimensionResult::Status::Found);
            return res.dimension;
        };
        int total = 0;
        for (const Graph& f : rep.factors) total += dim_of(f);
        CHECK(dim_of(g) <= total);
    }
}
