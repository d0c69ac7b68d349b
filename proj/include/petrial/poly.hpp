#ifndef PETRIAL_POLY_HPP
#define PETRIAL_POLY_HPP

#include <cstddef>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "petrial/bouquet.hpp"
#include "petrial/graph.hpp"

namespace petrial {

using Coeff = boost::multiprecision::cpp_int;

// Sparse polynomial with positive big-integer coefficients: the generating
// function of subset counts by Euler genus. `n` records the generating
// edge/vertex count, so the coefficients sum to 2^n.
class PetrialPolynomial {
public:
    PetrialPolynomial() = default;
    explicit PetrialPolynomial(std::size_t n) : n_(n) {}

    std::size_t n() const { return n_; }
    std::size_t term_count() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }

    // Adds `count` subsets of the given genus. Zero is a no-op; negative
    // counts are rejected so stored coefficients stay positive.
    void add(std::size_t degree, const Coeff& count = 1);

    // Coefficient at `degree`, 0 when the term is absent.
    Coeff coefficient(std::size_t degree) const;
    Coeff coefficient_sum() const;

    std::size_t degree() const;     // max stored degree; zero polynomial is refused
    std::size_t min_degree() const; // min stored degree; zero polynomial is refused

    // Exactly two degrees carry non-zero coefficients.
    bool is_binomial() const { return coeffs_.size() == 2; }

    // Every degree between min_degree and degree is present.
    bool is_interpolating() const;

    const std::map<std::size_t, Coeff>& coeffs() const { return coeffs_; }

    // Ascending degree, e.g. "3*z^2 + 5*z^3"; constant term bare, unit
    // coefficients dropped, degree 1 written "z". Zero polynomial is "0".
    std::string text() const;

    // {"<degree>": "<coefficient>", ..., "n": n}, degrees ascending.
    nlohmann::ordered_json to_json() const;

    bool operator==(const PetrialPolynomial& o) const {
        return n_ == o.n_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const PetrialPolynomial& o) const { return !(*this == o); }

private:
    std::map<std::size_t, Coeff> coeffs_;
    std::size_t n_ = 0;
};

struct EvalOptions {
    // Inputs with more labels/vertices than this are refused rather than
    // silently starting a 2^n enumeration.
    std::size_t max_n = 20;
    // 0 picks a worker count automatically. The result is identical for any
    // value: workers sum disjoint mask ranges and addition commutes.
    unsigned workers = 0;
};

// Sum of z^{euler_genus(partial_petrial(b, A))} over all label subsets A,
// each genus measured by boundary tracing.
PetrialPolynomial poly_by_tracing(const Bouquet& b, const EvalOptions& opt = {});

// Sum of z^{rank of adjacency(g) with diagonal 1s at D} over all subsets D
// of the active vertices (rank = n - corank of the marked matrix). For an
// intersection graph of a bouquet this equals poly_by_tracing of the bouquet;
// it is defined for every simple graph.
PetrialPolynomial poly_by_corank(const SimpleGraph& g, const EvalOptions& opt = {});

// The path-graph polynomial in closed form:
//   ((2^n-1)/3) z^{n-1} + ((2^{n+1}+1)/3) z^n   for even n,
//   ((2^n+1)/3) z^{n-1} + ((2^{n+1}-1)/3) z^n   for odd n.
// n = 0 is refused; the divisions are checked exact.
PetrialPolynomial path_closed_form(std::size_t n);

} // namespace petrial

#endif
