#include "petrial/harness.hpp"

#include <bit>
#include <unordered_map>
#include <vector>

#include "petrial/bouquet.hpp"
#include "petrial/errors.hpp"
#include "petrial/gf2.hpp"
#include "petrial/poly.hpp"
#include "petrial/witness.hpp"

namespace petrial {

SweepResult CircleSweepResult::total() const {
    SweepResult t;
    t.merge(generation);
    t.merge(equivalence);
    t.merge(binomial_iff_path);
    t.merge(degree_interpolating);
    t.merge(complete_spread);
    t.merge(conservation);
    return t;
}

SweepResult GraftSweepResult::total() const {
    SweepResult t;
    t.merge(witnesses);
    t.merge(corank_preservation);
    return t;
}

namespace {

std::string diagram_text(const Bouquet& b) {
    std::string s = "[";
    for (std::size_t p = 0; p < b.slots(); ++p) {
        if (p) s += ' ';
        s += b.label_name(b.word()[p]);
    }
    return s + "]";
}

std::string set_text(const BitVec& set) {
    std::string s = "{";
    bool first = true;
    set.for_each([&](std::size_t v) {
        if (!first) s += ',';
        s += std::to_string(v);
        first = false;
    });
    return s + "}";
}

// Interlacement adjacency packed one 64-bit word per chord (n <= 62).
std::vector<std::uint64_t> packed_rows(const SimpleGraph& g, std::size_t n) {
    std::vector<std::uint64_t> rows(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
    return rows;
}

} // namespace

SweepResult sweep_paths(std::size_t max_n, const Shard& shard) {
    SweepResult r;
    const EvalOptions opt{max_n, 1};
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (!shard.contains(n - 1)) continue;
        const PetrialPolynomial closed = path_closed_form(n);
        const PetrialPolynomial by_corank = poly_by_corank(SimpleGraph::path(n), opt);
        const PetrialPolynomial by_tracing = poly_by_tracing(Bouquet::path_bouquet(n), opt);
        std::string what;
        if (by_corank != closed)
            what = "corank evaluator gives " + by_corank.text() + ", closed form " + closed.text();
        else if (by_tracing != closed)
            what = "tracing evaluator gives " + by_tracing.text() + ", closed form " + closed.text();
        else if (closed.coefficient_sum() != Coeff(1) << n)
            what = "coefficients do not sum to 2^n";
        r.check(what.empty(),
                [&] { return "path n=" + std::to_string(n) + ": " + what; });
    }
    return r;
}

SweepResult sweep_boundary_lemma(std::size_t max_n, const Shard& shard) {
    SweepResult r;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::uint64_t index = 0;
        std::uint64_t visited = 0;
        for_each_matching(n, [&](const std::vector<std::size_t>& word) {
            if (!shard.contains(index++)) return;
            ++visited;
            const Bouquet b = Bouquet::from_ids(word, n);
            const std::vector<std::uint64_t> rows = packed_rows(b.intersection_graph(), n);
            std::vector<std::uint64_t> scratch(n);
            BitVec twist(n + 1);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                twist.clear();
                for (std::uint64_t m = mask; m; m &= m - 1)
                    twist.set(static_cast<std::size_t>(std::countr_zero(m)));
                const std::size_t f = b.trace_boundaries(twist);
                for (std::size_t i = 0; i < n; ++i)
                    scratch[i] = rows[i] | (mask & (std::uint64_t{1} << i));
                const std::size_t corank = n - gf2::rank_small(scratch);
                r.check(f == corank + 1, [&] {
                    return "diagram " + diagram_text(b) + " twist " + set_text(twist) +
                           ": " + std::to_string(f) + " boundaries vs corank " +
                           std::to_string(corank);
                });
            }
        });
        const std::uint64_t all = double_factorial_odd(n);
        if (index != all)
            r.fail("matching generator produced " + std::to_string(index) + " diagrams with " +
                   std::to_string(n) + " chords, expected " + std::to_string(all));
        if (visited != shard.expected(all))
            r.fail("shard visited " + std::to_string(visited) + " diagrams with " +
                   std::to_string(n) + " chords, expected " + std::to_string(shard.expected(all)));
    }
    return r;
}

CircleSweepResult sweep_circle(std::size_t max_n, std::size_t equiv_max_n, const Shard& shard) {
    CircleSweepResult res;
    const EvalOptions opt{max_n < equiv_max_n ? equiv_max_n : max_n, 1};
    struct Cached {
        PetrialPolynomial poly;
        bool connected = false;
        bool path = false;
        bool complete = false;
    };
    // Two diagrams often interlace identically; key on the labeled adjacency
    // mask so each distinct graph is evaluated once. Fits while n <= 11.
    std::unordered_map<std::uint64_t, Cached> cache;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::uint64_t index = 0;
        std::uint64_t visited = 0;
        for_each_matching(n, [&](const std::vector<std::size_t>& word) {
            if (!shard.contains(index++)) return;
            ++visited;
            ++res.diagrams;
            const Bouquet b = Bouquet::from_ids(word, n);
            const SimpleGraph g = b.intersection_graph();

            Cached local;
            const Cached* c = nullptr;
            if (n <= 11) {
                std::uint64_t mask = 0;
                std::size_t bit = 0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j, ++bit)
                        if (g.adjacent(i, j)) mask |= std::uint64_t{1} << bit;
                const std::uint64_t key = (std::uint64_t{n} << 55) | mask;
                auto [it, fresh] = cache.try_emplace(key);
                if (fresh) {
                    it->second.poly = poly_by_corank(g, opt);
                    it->second.connected = g.connected();
                    it->second.path = g.is_path();
                    it->second.complete = g.edge_count() == n * (n - 1) / 2;
                }
                c = &it->second;
            } else {
                local.poly = poly_by_corank(g, opt);
                local.connected = g.connected();
                local.path = g.is_path();
                local.complete = g.edge_count() == n * (n - 1) / 2;
                c = &local;
            }

            res.conservation.check(c->poly.coefficient_sum() == Coeff(1) << n, [&] {
                return "diagram " + diagram_text(b) + ": coefficients of " + c->poly.text() +
                       " do not sum to 2^" + std::to_string(n);
            });
            if (n <= equiv_max_n) {
                const PetrialPolynomial traced = poly_by_tracing(b, opt);
                res.equivalence.check(traced == c->poly, [&] {
                    return "diagram " + diagram_text(b) + ": tracing gives " + traced.text() +
                           ", corank gives " + c->poly.text();
                });
            }
            if (c->connected) {
                res.binomial_iff_path.check(c->poly.is_binomial() == c->path, [&] {
                    return "diagram " + diagram_text(b) + ": " + c->poly.text() +
                           (c->path ? " is not binomial for a path"
                                    : " is binomial for a non-path");
                });
                res.degree_interpolating.check(
                    c->poly.degree() == n && c->poly.is_interpolating(), [&] {
                        return "diagram " + diagram_text(b) + ": " + c->poly.text() +
                               " misses degree n or interpolation";
                    });
                bool spread = true;
                for (std::size_t d = 1; d <= n && spread; ++d)
                    if (c->poly.coefficient(d) == 0) spread = false;
                res.complete_spread.check(spread == c->complete, [&] {
                    return "diagram " + diagram_text(b) + ": " + c->poly.text() +
                           (c->complete ? " misses a degree in 1..n for a complete graph"
                                        : " covers 1..n for a non-complete graph");
                });
            }
        });
        const std::uint64_t all = double_factorial_odd(n);
        if (index != all)
            res.generation.fail("matching generator produced " + std::to_string(index) +
                                " diagrams with " + std::to_string(n) + " chords, expected " +
                                std::to_string(all));
        if (visited != shard.expected(all))
            res.generation.fail("shard visited " + std::to_string(visited) +
                                " diagrams with " + std::to_string(n) + " chords, expected " +
                                std::to_string(shard.expected(all)));
    }
    return res;
}

GraftSweepResult sweep_grafts(std::size_t witness_max_n, std::uint64_t corank_trials,
                              std::uint64_t seed, const Shard& shard) {
    GraftSweepResult res;
    for (std::size_t n = 1; n <= witness_max_n; ++n) {
        std::uint64_t index = 0;
        std::uint64_t visited = 0;
        for_each_labeled_graph(n, [&](const SimpleGraph& g, std::uint64_t mask) {
            if (!shard.contains(index++)) return;
            ++visited;
            ++res.witnesses.instances;
            std::string what;
            try {
                if (g.is_path()) {
                    const CheckReport rep = check_witness(path_witness(g));
                    if (!rep.ok) what = rep.failure;
                } else if (n >= 2) {
                    const CheckReport rep = check_witness(nonpath_witness(g));
                    if (!rep.ok)
                        what = rep.failure;
                    else if (rep.corank < 2)
                        what = "corank " + std::to_string(rep.corank) + ", expected >= 2";
                }
            } catch (const std::exception& e) {
                what = std::string("exception: ") + e.what();
            }
            if (!what.empty())
                res.witnesses.fail("graph n=" + std::to_string(n) + " mask=" +
                                   std::to_string(mask) + ": " + what);
        });
        const std::uint64_t all = std::uint64_t{1} << (n * (n - 1) / 2);
        if (index != all)
            res.witnesses.fail("graph generator produced " + std::to_string(index) +
                               " graphs on " + std::to_string(n) + " vertices, expected " +
                               std::to_string(all));
        if (visited != shard.expected(all))
            res.witnesses.fail("shard visited " + std::to_string(visited) + " graphs on " +
                               std::to_string(n) + " vertices, expected " +
                               std::to_string(shard.expected(all)));
    }

    for (std::uint64_t t = 0; t < corank_trials; ++t) {
        if (!shard.contains(t)) continue;
        std::uint64_t state = seed + t;
        const std::size_t n = 1 + static_cast<std::size_t>(splitmix64(state) % 12);
        SimpleGraph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (splitmix64(state) & 1) g.add_edge(i, j);
        BitVec marks(n);
        for (std::size_t v = 0; v < n; ++v)
            if (splitmix64(state) & 1) marks.set(v);
        const Vertex v = static_cast<Vertex>(splitmix64(state) % n);
        marks.set(v);
        const Graft before(g, marks);
        const std::size_t c0 = before.adjacency().corank();
        const std::size_t c1 = before.lc_delete(v).adjacency().corank();
        res.corank_preservation.check(c0 == c1, [&] {
            return "trial " + std::to_string(t) + " (n=" + std::to_string(n) + ", marks " +
                   set_text(marks) + ", delete " + std::to_string(v) + "): corank " +
                   std::to_string(c0) + " -> " + std::to_string(c1);
        });
    }
    return res;
}

} // namespace petrial
