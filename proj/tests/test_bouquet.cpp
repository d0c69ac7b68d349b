#include <doctest.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "petrial/bouquet.hpp"
#include "petrial/enumerate.hpp"
#include "petrial/errors.hpp"
#include "petrial/gf2.hpp"
#include "petrial/graph.hpp"

using namespace petrial;

TEST_CASE("chord diagram lines parse labels, twists and comments") {
    Bouquet b = parse_bouquet_line("1 2 1 2 | 2");
    CHECK(b.edge_labels() == 2);
    CHECK(b.slots() == 4);
    CHECK(b.word() == std::vector<std::size_t>{0, 1, 0, 1});
    CHECK(b.label_name(0) == "1");
    CHECK(b.label_id("2") == 1);
    CHECK_FALSE(b.twisted().test(0));
    CHECK(b.twisted().test(1));
    CHECK(b.slots_of(1) == std::pair<std::size_t, std::size_t>{1, 3});

    auto all = parse_bouquet_file("# two diagrams\n1 1\n\na b a b | a b\n");
    REQUIRE(all.size() == 2);
    CHECK(all[0].edge_labels() == 1);
    CHECK(all[1].twisted().test(0));
    CHECK(all[1].twisted().test(1));

    CHECK(Bouquet().edge_labels() == 0); // the bare disc is the default bouquet
    CHECK_THROWS_AS(parse_bouquet_line(""), ParseError); // but not a valid line
    CHECK(parse_bouquet_file("# only comments\n\n").empty());
}

TEST_CASE("chord diagram parse errors name the offending token and line") {
    CHECK_THROWS_AS(parse_bouquet_line("1 2 1"), ParseError);       // odd length
    CHECK_THROWS_AS(parse_bouquet_line("1 1 1 1"), ParseError);     // label four times
    CHECK_THROWS_AS(parse_bouquet_line("1 2 1 3"), ParseError);     // labels once
    CHECK_THROWS_AS(parse_bouquet_line("1 1 | 2"), ParseError);     // unknown twist
    CHECK_THROWS_AS(parse_bouquet_line("1 1 | 1 1"), ParseError);   // twist repeated
    CHECK_THROWS_AS(parse_bouquet_line("| 1"), ParseError);         // twist without word

    try {
        parse_bouquet_file("1 1\n2 2 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("boundary tracing matches the pinned examples") {
    CHECK(Bouquet().trace_boundaries() == 1);
    CHECK(parse_bouquet_line("1 1").trace_boundaries() == 2);
    CHECK(parse_bouquet_line("1 1 | 1").trace_boundaries() == 1);
    CHECK(parse_bouquet_line("1 2 1 2").trace_boundaries() == 1);
    CHECK(parse_bouquet_line("1 2 1 2 | 1 2").trace_boundaries() == 2);
    CHECK(parse_bouquet_line("1 2 1 2 | 1").trace_boundaries() == 1);
    CHECK(parse_bouquet_line("1 1 2 2").trace_boundaries() == 3);
    CHECK(parse_bouquet_line("1 2 2 1").trace_boundaries() == 3);
}

TEST_CASE("ribbon statistics derive from the trace") {
    BouquetStats s = parse_bouquet_line("1 2 1 2").stats();
    CHECK(s.vertices == 1);
    CHECK(s.edges == 2);
    CHECK(s.boundaries == 1);
    CHECK(s.euler_characteristic == 0);
    CHECK(s.euler_genus == 2);

    s = parse_bouquet_line("1 1 | 1").stats();
    CHECK(s.boundaries == 1);
    CHECK(s.euler_characteristic == 1);
    CHECK(s.euler_genus == 1);

    s = Bouquet().stats();
    CHECK(s.edges == 0);
    CHECK(s.boundaries == 1);
    CHECK(s.euler_genus == 0);
}

TEST_CASE("partial Petrial toggles twists as a symmetric difference") {
    Bouquet b = parse_bouquet_line("1 2 1 2 | 2");
    Bouquet t = b.partial_petrial({"2"});
    CHECK(t.twisted().none()); // twisting 2 again untwists it
    CHECK(t.partial_petrial({"1", "2"}).twisted().count() == 2);
    CHECK_THROWS_AS(b.partial_petrial({"3"}), InvalidInputError);
    CHECK(b.partial_petrial(std::vector<std::string>{}) == b);
    CHECK(b.partial_petrial(BitVec{}) == b);
}

TEST_CASE("boundary walks cover every split point exactly once") {
    // the bare disc's boundary crosses no split point, so nothing is listed
    CHECK(Bouquet().boundary_walks().empty());

    for (const char* line : {"1 1", "1 2 1 2", "1 1 2 2 | 2", "1 2 3 1 2 3",
                             "1 2 1 3 2 3 | 1 3"}) {
        Bouquet b = parse_bouquet_line(line);
        auto walks = b.boundary_walks();
        CHECK(walks.size() == b.trace_boundaries());
        std::set<std::size_t> seen;
        std::size_t last_start = 0;
        bool first = true;
        for (const auto& w : walks) {
            REQUIRE(!w.empty());
            for (std::size_t p : w) {
                CHECK(p < 2 * b.slots());
                CHECK(seen.insert(p).second); // no point visited twice
                CHECK(p >= w.front());        // each walk starts at its minimum
            }
            if (!first) CHECK(w.front() > last_start); // walks ordered by start
            last_start = w.front();
            first = false;
        }
        CHECK(seen.size() == 2 * b.slots());
    }
}

TEST_CASE("interlacement is slot alternation") {
    Bouquet b = parse_bouquet_line("1 2 1 2");
    CHECK(b.interlaced(0, 1));
    CHECK_FALSE(parse_bouquet_line("1 1 2 2").interlaced(0, 1));
    CHECK_FALSE(parse_bouquet_line("1 2 2 1").interlaced(0, 1));
    CHECK_THROWS_AS(b.interlaced(0, 0), InvalidInputError);
    CHECK_THROWS_AS(b.interlaced(0, 5), InvalidInputError);
}

TEST_CASE("intersection graphs of the classic words") {
    CHECK(parse_bouquet_line("1 2 1 3 2 3").intersection_graph() == SimpleGraph::path(3));
    CHECK(parse_bouquet_line("1 2 3 1 2 3").intersection_graph() == SimpleGraph::complete(3));
    CHECK(parse_bouquet_line("1 1 2 2").intersection_graph() == SimpleGraph(2));
    // twists do not show up in the intersection graph
    CHECK(parse_bouquet_line("1 2 1 2 | 1").intersection_graph() ==
          parse_bouquet_line("1 2 1 2").intersection_graph());
}

TEST_CASE("path bouquets realize paths of every size") {
    CHECK_THROWS_AS(Bouquet::path_bouquet(0), InvalidInputError);
    for (std::size_t n = 1; n <= 8; ++n) {
        Bouquet b = Bouquet::path_bouquet(n);
        CHECK(b.edge_labels() == n);
        CHECK(b.twisted().none());
        CHECK(b.intersection_graph() == SimpleGraph::path(n));
    }
}

TEST_CASE("retracing with a replacement twist set matches rebuilding the bouquet") {
    Bouquet b = parse_bouquet_line("1 2 1 3 2 3 | 2");
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        BitVec twist;
        for (std::size_t i = 0; i < 3; ++i)
            if (mask & (std::uint64_t{1} << i)) twist.set(i);
        Bouquet rebuilt = Bouquet::from_ids(b.word(), 3, twist);
        CHECK(b.trace_boundaries(twist) == rebuilt.trace_boundaries());
    }
}

TEST_CASE("from_ids validates words and twists") {
    CHECK_THROWS_AS(Bouquet::from_ids({0, 0, 1}, 2), InvalidInputError);
    CHECK_THROWS_AS(Bouquet::from_ids({0, 0, 2, 2}, 2), InvalidInputError);
    BitVec out_of_range;
    out_of_range.set(5);
    CHECK_THROWS_AS(Bouquet::from_ids({0, 0}, 1, out_of_range), InvalidInputError);
}

TEST_CASE("boundary count equals marked interlacement corank plus one on all small diagrams") {
    // independent corank: interlacement matrix built here from slot alternation
    for (std::size_t n = 0; n <= 4; ++n) {
        std::uint64_t diagrams = 0;
        for_each_matching(n, [&](const std::vector<std::size_t>& word) {
            ++diagrams;
            Bouquet base = Bouquet::from_ids(word, n);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                GF2Matrix m(n);
                for (std::size_t a = 0; a < n; ++a) {
                    m.set(a, a, (mask >> a) & 1);
                    for (std::size_t b = a + 1; b < n; ++b)
                        if (base.interlaced(a, b)) {
                            m.set(a, b, true);
                            m.set(b, a, true);
                        }
                }
                BitVec twist;
                for (std::size_t a = 0; a < n; ++a)
                    if ((mask >> a) & 1) twist.set(a);
                CHECK(base.trace_boundaries(twist) == m.corank() + 1);
            }
        });
        CHECK(diagrams == double_factorial_odd(n));
    }
}

TEST_CASE("boundary counts stay within the disc-to-sphere range") {
    for_each_matching(4, [&](const std::vector<std::size_t>& word) {
        Bouquet b = Bouquet::from_ids(word, 4);
        std::size_t f = b.trace_boundaries();
        CHECK(f >= 1);
        CHECK(f <= 5);
    });
}
