#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "petrial/bouquet.hpp"
#include "petrial/enumerate.hpp"
#include "petrial/errors.hpp"
#include "petrial/poly.hpp"

using namespace petrial;

namespace {

SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n) {
    SimpleGraph g(n);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if (rng() & 1) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("closed form for paths matches the pinned values") {
    CHECK(path_closed_form(1).text() == "1 + z");
    CHECK(path_closed_form(2).text() == "z + 3*z^2");
    CHECK(path_closed_form(3).text() == "3*z^2 + 5*z^3");
    CHECK(path_closed_form(4).text() == "5*z^3 + 11*z^4");
    CHECK_THROWS_AS(path_closed_form(0), InvalidInputError);

    PetrialPolynomial p10 = path_closed_form(10);
    CHECK(p10.coefficient(9) == 341);
    CHECK(p10.coefficient(10) == 683);
    CHECK(p10.coefficient_sum() == 1024);
}

TEST_CASE("closed form, tracing and corank agree on paths") {
    for (std::size_t n = 1; n <= 8; ++n) {
        PetrialPolynomial closed = path_closed_form(n);
        CHECK(closed == poly_by_tracing(Bouquet::path_bouquet(n)));
        CHECK(closed == poly_by_corank(SimpleGraph::path(n)));
        CHECK(closed.is_binomial());
    }
}

TEST_CASE("triangle polynomial is pinned, by both evaluators") {
    PetrialPolynomial k3 = poly_by_corank(SimpleGraph::complete(3));
    CHECK(k3.text() == "z + 4*z^2 + 3*z^3");
    CHECK(k3 == poly_by_tracing(parse_bouquet_line("1 2 3 1 2 3")));
    CHECK_FALSE(k3.is_binomial());
    CHECK(k3.is_interpolating());
    CHECK(k3.degree() == 3);
    CHECK(k3.min_degree() == 1);
}

TEST_CASE("empty inputs give the unit polynomial") {
    CHECK(poly_by_tracing(Bouquet()).text() == "1");
    CHECK(poly_by_corank(SimpleGraph(0)).text() == "1");
    // two isolated vertices: rank ranges over the four diagonal masks
    CHECK(poly_by_corank(SimpleGraph(2)).text() == "1 + 2*z + z^2");
}

TEST_CASE("tracing is invariant under pre-twisting") {
    // the subset sum runs over twist toggles, so a twisted start permutes
    // the same terms
    for (std::size_t n = 0; n <= 3; ++n) {
        for_each_matching(n, [&](const std::vector<std::size_t>& word) {
            PetrialPolynomial base = poly_by_tracing(Bouquet::from_ids(word, n));
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                BitVec twist;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (std::uint64_t{1} << i)) twist.set(i);
                CHECK(base == poly_by_tracing(Bouquet::from_ids(word, n, twist)));
            }
        });
    }
}

TEST_CASE("tracing and corank agree on every diagram with up to 4 chords") {
    for (std::size_t n = 0; n <= 4; ++n)
        for_each_matching(n, [&](const std::vector<std::size_t>& word) {
            Bouquet b = Bouquet::from_ids(word, n);
            CHECK(poly_by_tracing(b) == poly_by_corank(b.intersection_graph()));
        });
}

TEST_CASE("coefficients always sum to 2^n") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = rng() % 9;
        SimpleGraph g = random_graph(rng, n);
        CHECK(poly_by_corank(g).coefficient_sum() == Coeff(1) << n);
    }
}

TEST_CASE("polynomial container semantics") {
    PetrialPolynomial p(3);
    CHECK(p.is_zero());
    CHECK(p.text() == "0");
    CHECK(p.coefficient(2) == 0);
    CHECK_THROWS_AS(p.degree(), InvalidInputError);
    CHECK_THROWS_AS(p.min_degree(), InvalidInputError);
    CHECK_THROWS_AS(p.is_interpolating(), InvalidInputError);
    CHECK_FALSE(p.is_binomial()); // predicate, not an error

    p.add(2, 3);
    p.add(2);
    p.add(0, 1);
    CHECK(p.coefficient(2) == 4);
    CHECK(p.term_count() == 2);
    CHECK(p.text() == "1 + 4*z^2");
    CHECK_FALSE(p.is_interpolating()); // degree 1 missing
    CHECK(p.is_binomial());

    PetrialPolynomial q(3);
    q.add(0, 1);
    q.add(2, 4);
    CHECK(p == q);
    CHECK(p != PetrialPolynomial(2));

    // adding zero stores nothing
    PetrialPolynomial z(1);
    z.add(1, 0);
    CHECK(z.is_zero());
}

TEST_CASE("interpolating means no gaps between lowest and highest term") {
    PetrialPolynomial p(4);
    p.add(1, 1);
    p.add(2, 1);
    p.add(3, 1);
    CHECK(p.is_interpolating());
    PetrialPolynomial gap(4);
    gap.add(1, 1);
    gap.add(3, 1);
    CHECK_FALSE(gap.is_interpolating());
    PetrialPolynomial single(4);
    single.add(2, 5);
    CHECK(single.is_interpolating());
}

TEST_CASE("text rendering follows the pinned grammar") {
    PetrialPolynomial p(5);
    p.add(0, 2);
    p.add(1, 1);
    p.add(4, 7);
    CHECK(p.text() == "2 + z + 7*z^4"); // bare constant, coefficient 1 dropped
    PetrialPolynomial q(2);
    q.add(1, 3);
    CHECK(q.text() == "3*z");
    PetrialPolynomial r(2);
    r.add(2, 1);
    CHECK(r.text() == "z^2");
}

TEST_CASE("json rendering keeps degrees ascending with string coefficients") {
    CHECK(path_closed_form(3).to_json().dump() == R"({"2":"3","3":"5","n":3})");
    CHECK(PetrialPolynomial(2).to_json().dump() == R"({"n":2})");

    // a 70-vertex coefficient no 64-bit integer can hold survives rendering
    PetrialPolynomial big(70);
    big.add(1, Coeff(1) << 70);
    CHECK(big.to_json()["1"] == "1180591620717411303424");
}

TEST_CASE("subset enumeration guard") {
    CHECK_THROWS_AS(poly_by_corank(SimpleGraph::path(4), EvalOptions{3, 0}),
                    ResourceLimitError);
    CHECK_THROWS_AS(poly_by_tracing(Bouquet::path_bouquet(4), EvalOptions{3, 0}),
                    ResourceLimitError);
    // the hard cap refuses even an explicit override past 62
    CHECK_THROWS_AS(poly_by_corank(SimpleGraph(63), EvalOptions{100, 0}),
                    ResourceLimitError);
    CHECK_NOTHROW(poly_by_corank(SimpleGraph::path(4), EvalOptions{4, 0}));
}

TEST_CASE("worker count never changes the result") {
    std::mt19937_64 rng(29);
    for (std::size_t n : {5, 9, 10}) {
        SimpleGraph g = random_graph(rng, n);
        PetrialPolynomial sequential = poly_by_corank(g, EvalOptions{20, 1});
        for (unsigned workers : {2u, 3u, 7u})
            CHECK(sequential == poly_by_corank(g, EvalOptions{20, workers}));
        Bouquet b = Bouquet::path_bouquet(n);
        CHECK(poly_by_tracing(b, EvalOptions{20, 1}) ==
              poly_by_tracing(b, EvalOptions{20, 5}));
    }
}

TEST_CASE("corank evaluator accepts graphs with gaps in the id space") {
    SimpleGraph g(5);
    g.add_edge(0, 2);
    g.add_edge(2, 4);
    BitVec keep;
    keep.set(0);
    keep.set(2);
    keep.set(4);
    CHECK(poly_by_corank(g.induced(keep)) == path_closed_form(3));
}
