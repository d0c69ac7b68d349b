#ifndef PETRIAL_GF2_HPP
#define PETRIAL_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace petrial {

// Square 0/1 matrix with rows packed into 64-bit words. Rank runs a
// deterministic Gaussian elimination: pivots are chosen in column order,
// rows scanned top-down. n = 0 is a legal (empty) matrix of rank 0.
class GF2Matrix {
public:
    GF2Matrix() = default;
    explicit GF2Matrix(std::size_t n);

    static GF2Matrix identity(std::size_t n);

    std::size_t dim() const { return n_; }

    bool get(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, bool value);

    std::size_t rank() const;
    std::size_t corank() const { return n_ - rank(); }

    GF2Matrix transposed() const;

    bool operator==(const GF2Matrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const GF2Matrix& o) const { return !(*this == o); }

    std::size_t words_per_row() const { return wpr_; }
    std::span<const std::uint64_t> row_words(std::size_t row) const {
        return {bits_.data() + row * wpr_, wpr_};
    }

private:
    std::size_t n_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

namespace gf2 {

// Rank of an n x n matrix (n <= 64) whose row i is rows[i]; clobbers rows.
// Shared by GF2Matrix::rank and the subset-enumeration hot loops.
std::size_t rank_small(std::span<std::uint64_t> rows);

} // namespace gf2

} // namespace petrial

#endif
