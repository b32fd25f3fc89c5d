#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "rainbow/generators.hpp"
#include "rainbow/lruc.hpp"
#include "support.hpp"

using namespace rainbow;
using support::LabelEdges;

TEST_SUITE("generators") {

TEST_CASE("family graphs have the expected shapes") {
    Graph p4 = make_graph(FamilyTag::of(Family::Path, 4));
    CHECK(p4.edge_count() == 3);
    CHECK(p4.diameter() == 3);

    Graph w5 = make_graph(FamilyTag::of(Family::Wheel, 5));
    CHECK(w5.vertex_count() == 5);
    CHECK(w5.edge_count() == 8); // 4 spokes + rim C_4
    CHECK(w5.degree(*w5.find_vertex("1")) == 4);

    Graph k23 = make_graph(FamilyTag::bipartite(2, 3));
    CHECK(k23.edge_count() == 6);
    CHECK(k23.diameter() == 2);
}

TEST_CASE("edge counts match the family formulas") {
    for (int n = 3; n <= 9; ++n) {
        CHECK(make_graph(FamilyTag::of(Family::Path, n)).edge_count() == n - 1);
        CHECK(make_graph(FamilyTag::of(Family::Star, n)).edge_count() == n - 1);
        CHECK(make_graph(FamilyTag::of(Family::Cycle, n)).edge_count() == n);
        if (n >= 4) CHECK(make_graph(FamilyTag::of(Family::Wheel, n)).edge_count() == 2 * (n - 1));
        CHECK(make_graph(FamilyTag::of(Family::Complete, n)).edge_count() == n * (n - 1) / 2);
    }
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            CHECK(make_graph(FamilyTag::bipartite(p, q)).edge_count() == p * q);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_graph(FamilyTag::of(Family::Path, 1)), Error);
    CHECK_THROWS_AS(make_graph(FamilyTag::of(Family::Cycle, 2)), Error);
    CHECK_THROWS_AS(make_graph(FamilyTag::of(Family::Wheel, 3)), Error);
    CHECK_THROWS_AS(make_graph(FamilyTag::of(Family::Star, 2)), Error);
    CHECK_THROWS_AS(make_graph(FamilyTag::bipartite(0, 3)), Error);
    CHECK_THROWS_AS(make_graph(FamilyTag::of(Family::Tree, 5)), Error); // no canonical tree
    CHECK_THROWS_AS(make_random_tree(1, 0), Error);
}

TEST_CASE("random trees are connected, acyclic, and reproducible") {
    CHECK(make_random_tree(2, 99).edge_count() == 1);
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        Graph t = make_random_tree(7, seed);
        CHECK(t.vertex_count() == 7);
        CHECK(t.edge_count() == 6); // m = n-1 and connected => acyclic
        CHECK(t.is_connected());
    }
    Graph a = make_random_tree(9, 5);
    Graph b = make_random_tree(9, 5);
    CHECK(a.edges() == b.edges());

    bool any_difference = false;
    for (std::uint32_t seed = 1; seed < 10 && !any_difference; ++seed)
        any_difference = make_random_tree(9, 0).edges() != make_random_tree(9, seed).edges();
    CHECK(any_difference);
}

TEST_CASE("adversarial orders match the stated sequences") {
    CHECK(order_adversarial(FamilyTag::of(Family::Cycle, 4)).edges ==
          LabelEdges{{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});

    CHECK(order_adversarial(FamilyTag::of(Family::Wheel, 5)).edges ==
          LabelEdges{{"1", "2"}, {"1", "3"}, {"1", "4"}, {"1", "5"},
                     {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "2"}});

    CHECK(order_adversarial(FamilyTag::of(Family::Complete, 4)).edges ==
          LabelEdges{{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "3"}, {"1", "4"}, {"2", "4"}});

    CHECK_THROWS_AS(order_adversarial(FamilyTag::bipartite(2, 2)), Error);
}

TEST_CASE("the complete adversarial order starts with the path order") {
    for (int n = 3; n <= 7; ++n) {
        auto complete = order_adversarial(FamilyTag::of(Family::Complete, n)).edges;
        auto path = order_adversarial(FamilyTag::of(Family::Path, n)).edges;
        complete.resize(n - 1);
        CHECK(complete == path);
    }
}

TEST_CASE("adversarial tree order is a depth-first discovery of the seeded tree") {
    const std::uint32_t seed = 3;
    EdgeStream stream = order_adversarial(FamilyTag::of(Family::Tree, 8), seed);
    Graph expected = make_random_tree(8, seed);
    CHECK(stream.size() == expected.edge_count());
    CHECK(stream.edges.front().first == "1"); // discovery starts at the root

    Graph replay = stream.build_graph(); // validates connected prefixes
    CHECK(replay.edge_count() == expected.edge_count());
    for (const Edge& e : replay.edges()) {
        auto u = expected.find_vertex(replay.label(e.u));
        auto v = expected.find_vertex(replay.label(e.v));
        REQUIRE(u);
        REQUIRE(v);
        CHECK(expected.has_edge(Edge(*u, *v)));
    }
}

TEST_CASE("natural complete order is lexicographic") {
    CHECK(order_natural(FamilyTag::of(Family::Complete, 4)).edges ==
          LabelEdges{{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
}

TEST_CASE("every generated stream keeps connected prefixes") {
    std::vector<EdgeStream> streams;
    for (int n : {4, 6, 8}) {
        streams.push_back(order_adversarial(FamilyTag::of(Family::Cycle, n)));
        streams.push_back(order_adversarial(FamilyTag::of(Family::Wheel, n)));
        streams.push_back(order_adversarial(FamilyTag::of(Family::Complete, n)));
        streams.push_back(order_adversarial(FamilyTag::of(Family::Tree, n), 7));
        streams.push_back(order_natural(FamilyTag::bipartite(2, n / 2)));
        streams.push_back(make_stream(FamilyTag::of(Family::Wheel, n), OrderStrategy::Random, n));
    }
    for (std::uint32_t seed = 0; seed < 20; ++seed)
        streams.push_back(order_random_connected(support::make_random_connected(7, 3, seed), seed));

    for (const EdgeStream& s : streams) {
        Graph prefix;
        for (const auto& [u, v] : s.edges) {
            if (prefix.edge_count() > 0)
                CHECK((prefix.find_vertex(u).has_value() || prefix.find_vertex(v).has_value()));
            prefix.add_edge(u, v);
        }
        CHECK(prefix.is_connected());
    }
}

TEST_CASE("random orders are reproducible and cover multiple orders across seeds") {
    Graph tri = support::graph_of({{"1", "2"}, {"2", "3"}, {"1", "3"}});
    CHECK(order_random_connected(tri, 4).edges == order_random_connected(tri, 4).edges);

    std::set<LabelEdges> seen;
    for (std::uint32_t seed = 0; seed < 100; ++seed)
        seen.insert(order_random_connected(tri, seed).edges);
    CHECK(seen.size() >= 3);

    Graph single = support::graph_of({{"a", "b"}});
    CHECK(order_random_connected(single, 0).edges == LabelEdges{{"a", "b"}});

    CHECK_THROWS_AS(order_random_connected(support::graph_of({{"1", "2"}, {"3", "4"}}), 0), Error);
}

TEST_CASE("stream_from_text parses edge lists and reports line numbers") {
    std::istringstream ok("# header\n1 2\n2 3\n\n3 4 # trailing comment\n");
    EdgeStream s = stream_from_text(ok, "<test>");
    CHECK(s.edges == LabelEdges{{"1", "2"}, {"2", "3"}, {"3", "4"}});

    auto expect_error = [](const std::string& text, Errc code, int line) {
        std::istringstream in(text);
        try {
            stream_from_text(in, "<test>");
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == code);
            CHECK(e.line() == line);
        }
    };
    expect_error("1 2\n3 4\n", Errc::DisconnectedPrefix, 2);
    expect_error("1 1\n", Errc::SelfLoop, 1);
    expect_error("1\n", Errc::ParseError, 1);
    expect_error("1 2 3\n", Errc::ParseError, 1);
    expect_error("1 2\n2 1\n", Errc::DuplicateEdge, 2);
}

TEST_CASE("stream_from_file reads files and rejects missing ones") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "rainbow_gen_test_edges.txt";
    {
        std::ofstream out(path);
        out << "a b\nb c\n";
    }
    EdgeStream s = stream_from_file(path.string());
    CHECK(s.edges == LabelEdges{{"a", "b"}, {"b", "c"}});
    CHECK(s.provenance.source == path.string());
    fs::remove(path);

    CHECK_THROWS_AS(stream_from_file("/nonexistent/rainbow.txt"), Error);
}

TEST_CASE("write_edge_list output replays to the same stream") {
    EdgeStream s = make_stream(FamilyTag::of(Family::Wheel, 6), OrderStrategy::Random, 9);
    std::ostringstream text;
    write_edge_list(text, s);
    std::istringstream in(text.str());
    CHECK(stream_from_text(in, "<roundtrip>").edges == s.edges);
}

TEST_CASE("random streams replay into the online colorer without errors") {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        EdgeStream s = make_stream(FamilyTag::of(Family::Complete, 5), OrderStrategy::Random, seed);
        LrucColorer colorer;
        for (const auto& [u, v] : s.edges) colorer.observe_edge(u, v);
        CHECK(colorer.finish().colors_used == 4);
    }
}

} // TEST_SUITE
