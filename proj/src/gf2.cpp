#include "petrial/gf2.hpp"

#include <algorithm>
#include <utility>

namespace petrial {

GF2Matrix::GF2Matrix(std::size_t n) : n_(n), wpr_((n + 63) / 64), bits_(n * wpr_, 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool GF2Matrix::get(std::size_t row, std::size_t col) const {
    return (bits_[row * wpr_ + col / 64] >> (col % 64)) & 1u;
}

void GF2Matrix::set(std::size_t row, std::size_t col, bool value) {
    std::uint64_t& w = bits_[row * wpr_ + col / 64];
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    if (value)
        w |= mask;
    else
        w &= ~mask;
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

namespace gf2 {

std::size_t rank_small(std::span<std::uint64_t> rows) {
    const std::size_t n = rows.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        std::size_t pivot = r;
        while (pivot < n && !(rows[pivot] & bit)) ++pivot;
        if (pivot == n) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < n; ++i)
            if (rows[i] & bit) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

} // namespace gf2

std::size_t GF2Matrix::rank() const {
    if (n_ == 0) return 0;

    if (wpr_ == 1) {
        std::uint64_t scratch[64];
        for (std::size_t i = 0; i < n_; ++i) scratch[i] = bits_[i];
        return gf2::rank_small({scratch, n_});
    }

    // Chunked fallback for n > 64: same elimination over multi-word rows.
    std::vector<std::uint64_t> work(bits_);
    auto row = [&](std::size_t i) { return work.data() + i * wpr_; };
    std::size_t r = 0;
    for (std::size_t c = 0; c < n_ && r < n_; ++c) {
        const std::size_t cw = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = r;
        while (pivot < n_ && !(row(pivot)[cw] & bit)) ++pivot;
        if (pivot == n_) continue;
        if (pivot != r)
            for (std::size_t k = 0; k < wpr_; ++k) std::swap(row(r)[k], row(pivot)[k]);
        for (std::size_t i = r + 1; i < n_; ++i)
            if (row(i)[cw] & bit)
                for (std::size_t k = cw; k < wpr_; ++k) row(i)[k] ^= row(r)[k];
        ++r;
    }
    return r;
}

} // namespace petrial
