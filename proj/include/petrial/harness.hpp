#ifndef PETRIAL_HARNESS_HPP
#define PETRIAL_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "petrial/enumerate.hpp"
#include "petrial/graph.hpp"

namespace petrial {

// Tally of one property swept over many instances. `fail` records a failure
// that is not tied to a counted instance (e.g. a generator count mismatch);
// `check` counts an instance and records the lazily built description on
// failure. Only the first failure description is kept.
struct SweepResult {
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        ++failures;
        if (first_failure.empty()) first_failure = what;
    }

    template <typename Describe>
    void check(bool ok, Describe&& describe) {
        ++instances;
        if (!ok) fail(describe());
    }

    void merge(const SweepResult& o) {
        instances += o.instances;
        failures += o.failures;
        if (first_failure.empty()) first_failure = o.first_failure;
    }
};

// Closed-form agreement for paths: for each n = 1..max_n (one instance per
// n), poly_by_corank(path graph), poly_by_tracing(path bouquet) and
// path_closed_form(n) must coincide and their coefficients sum to 2^n.
SweepResult sweep_paths(std::size_t max_n, const Shard& shard = {});

// Boundary-count lemma: over every chord diagram with 0..max_n chords and
// every twist subset, the boundary trace must equal corank + 1 of the marked
// interlacement matrix. One instance per (diagram, twist subset) pair;
// generator counts are asserted against (2n-1)!! per n.
SweepResult sweep_boundary_lemma(std::size_t max_n, const Shard& shard = {});

// One pass over all untwisted chord diagrams with 0..max_n chords. Each
// distinct intersection graph's polynomial is computed once (cached by
// labeled adjacency mask) and checked per diagram:
//   equivalence          tracing == corank polynomial (diagrams with
//                        n <= equiv_max_n chords; tracing every subset of a
//                        big diagram is the slow part, and the small slice
//                        already exercises every distinct small graph)
//   binomial_iff_path    connected graphs: binomial polynomial <=> path
//   degree_interpolating connected graphs: degree == n and no gaps
//   complete_spread      connected graphs: nonzero at all of 1..n <=> complete
//   conservation         coefficients sum to 2^n
//   generation           failure-only: diagram counts vs (2n-1)!! per n
struct CircleSweepResult {
    std::uint64_t diagrams = 0;
    SweepResult generation;
    SweepResult equivalence;
    SweepResult binomial_iff_path;
    SweepResult degree_interpolating;
    SweepResult complete_spread;
    SweepResult conservation;

    SweepResult total() const;
};

CircleSweepResult sweep_circle(std::size_t max_n, std::size_t equiv_max_n,
                               const Shard& shard = {});

// Grafts half one: over ALL labeled simple graphs on 1..witness_max_n
// vertices, paths get a path witness and everything else on >= 2 vertices a
// nonpath witness; each certificate must pass check_witness, nonpath ones
// with corank >= 2. Graph counts are asserted against 2^(n(n-1)/2) per n.
// Grafts half two: `corank_trials` random grafts (1..12 vertices, random
// edges, random marks, a guaranteed-marked vertex v), derived from
// splitmix64 on (seed + trial); corank must survive lc_delete at v.
struct GraftSweepResult {
    SweepResult witnesses;
    SweepResult corank_preservation;

    SweepResult total() const;
};

inline constexpr std::uint64_t kCorankTrialSeed = 0x5EEDBA5Eull;

GraftSweepResult sweep_grafts(std::size_t witness_max_n, std::uint64_t corank_trials,
                              std::uint64_t seed = kCorankTrialSeed,
                              const Shard& shard = {});

} // namespace petrial

#endif
