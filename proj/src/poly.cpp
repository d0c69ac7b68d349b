#include "petrial/poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "petrial/errors.hpp"
#include "petrial/gf2.hpp"

namespace petrial {

void PetrialPolynomial::add(std::size_t degree, const Coeff& count) {
    if (count == 0) return;
    if (count < 0)
        throw InvalidInputError("coefficients are subset counts and cannot go negative");
    coeffs_[degree] += count;
}

Coeff PetrialPolynomial::coefficient(std::size_t degree) const {
    const auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Coeff(0) : it->second;
}

Coeff PetrialPolynomial::coefficient_sum() const {
    Coeff s = 0;
    for (const auto& [d, c] : coeffs_) s += c;
    return s;
}

std::size_t PetrialPolynomial::degree() const {
    if (coeffs_.empty()) throw InvalidInputError("zero polynomial has no degree");
    return coeffs_.rbegin()->first;
}

std::size_t PetrialPolynomial::min_degree() const {
    if (coeffs_.empty()) throw InvalidInputError("zero polynomial has no minimum degree");
    return coeffs_.begin()->first;
}

bool PetrialPolynomial::is_interpolating() const {
    return coeffs_.size() == degree() - min_degree() + 1;
}

std::string PetrialPolynomial::text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += c.str();
            continue;
        }
        if (c != 1) out += c.str() + "*";
        out += d == 1 ? "z" : "z^" + std::to_string(d);
    }
    return out;
}

nlohmann::ordered_json PetrialPolynomial::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [d, c] : coeffs_) j[std::to_string(d)] = c.str();
    j["n"] = n_;
    return j;
}

namespace {

// Subset masks are iterated as one 64-bit counter, so even with the guard
// raised the enumeration cannot cross this.
constexpr std::size_t kMaskLimit = 62;

void check_guard(const char* what, std::size_t n, std::size_t max_n) {
    const std::size_t limit = std::min(max_n, kMaskLimit);
    if (n > limit)
        throw ResourceLimitError(std::string(what) + " over " + std::to_string(n) +
                                 " labels would enumerate 2^" + std::to_string(n) +
                                 " subsets, past the guard of " + std::to_string(limit));
}

unsigned pick_workers(unsigned requested, std::uint64_t subsets) {
    if (requested != 0) return requested;
    if (subsets < (std::uint64_t{1} << 15)) return 1;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Splits [0, 2^n) into contiguous ranges, hands each to `per_range` with a
// per-worker genus histogram (genus <= n always), and sums the histograms.
// Per-range counts fit uint64 because n <= kMaskLimit < 64.
template <typename PerRange>
std::vector<Coeff> sweep_masks(std::size_t n, unsigned workers, PerRange per_range) {
    const std::uint64_t total = std::uint64_t{1} << n;
    unsigned k = pick_workers(workers, total);
    if (k > total) k = static_cast<unsigned>(total);
    std::vector<std::vector<std::uint64_t>> partial(k, std::vector<std::uint64_t>(n + 1, 0));
    auto run = [&](unsigned w) {
        const std::uint64_t base = total / k;
        const std::uint64_t extra = total % k;
        const std::uint64_t lo = base * w + std::min<std::uint64_t>(w, extra);
        const std::uint64_t hi = lo + base + (w < extra ? 1 : 0);
        per_range(lo, hi, partial[w]);
    };
    if (k == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(k);
        for (unsigned w = 0; w < k; ++w) threads.emplace_back(run, w);
        for (std::thread& t : threads) t.join();
    }
    std::vector<Coeff> merged(n + 1, Coeff(0));
    for (const std::vector<std::uint64_t>& counts : partial)
        for (std::size_t d = 0; d <= n; ++d) merged[d] += counts[d];
    return merged;
}

PetrialPolynomial from_dense(std::size_t n, const std::vector<Coeff>& counts) {
    PetrialPolynomial p(n);
    for (std::size_t d = 0; d < counts.size(); ++d) p.add(d, counts[d]);
    return p;
}

} // namespace

PetrialPolynomial poly_by_tracing(const Bouquet& b, const EvalOptions& opt) {
    const std::size_t n = b.edge_labels();
    check_guard("twist enumeration", n, opt.max_n);
    auto counts = sweep_masks(n, opt.workers,
                              [&b, n](std::uint64_t lo, std::uint64_t hi,
                                      std::vector<std::uint64_t>& out) {
                                  BitVec eff(n + 1);
                                  for (std::uint64_t mask = lo; mask < hi; ++mask) {
                                      eff.clear();
                                      for (std::uint64_t m = mask; m; m &= m - 1)
                                          eff.set(static_cast<std::size_t>(std::countr_zero(m)));
                                      eff ^= b.twisted();
                                      const std::size_t f = b.trace_boundaries(eff);
                                      if (f > n + 1)
                                          throw InternalInvariantError(
                                              "boundary trace exceeded the Euler bound");
                                      out[1 + n - f] += 1; // genus: chi = 1 - n + f
                                  }
                              });
    return from_dense(n, counts);
}

PetrialPolynomial poly_by_corank(const SimpleGraph& g, const EvalOptions& opt) {
    const std::size_t n = g.vertex_count();
    check_guard("corank sum", n, opt.max_n);
    const std::vector<Vertex> ids = g.vertex_ids();
    std::vector<std::uint64_t> base(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.adjacent(ids[i], ids[j])) {
                base[i] |= std::uint64_t{1} << j;
                base[j] |= std::uint64_t{1} << i;
            }
    auto counts = sweep_masks(n, opt.workers,
                              [&base, n](std::uint64_t lo, std::uint64_t hi,
                                         std::vector<std::uint64_t>& out) {
                                  std::vector<std::uint64_t> scratch(n);
                                  for (std::uint64_t mask = lo; mask < hi; ++mask) {
                                      for (std::size_t i = 0; i < n; ++i)
                                          scratch[i] = base[i] | (mask & (std::uint64_t{1} << i));
                                      out[gf2::rank_small(scratch)] += 1;
                                  }
                              });
    return from_dense(n, counts);
}

PetrialPolynomial path_closed_form(std::size_t n) {
    if (n == 0) throw InvalidInputError("path closed form needs at least one vertex");
    const Coeff pow_n = Coeff(1) << n;
    Coeff low, high;
    if (n % 2 == 0) {
        low = pow_n - 1;
        high = 2 * pow_n + 1;
    } else {
        low = pow_n + 1;
        high = 2 * pow_n - 1;
    }
    if (low % 3 != 0 || high % 3 != 0)
        throw InternalInvariantError("path closed form: division by 3 is not exact");
    PetrialPolynomial p(n);
    p.add(n - 1, low / 3);
    p.add(n, high / 3);
    return p;
}

} // namespace petrial
