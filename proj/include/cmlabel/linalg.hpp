#pragma once

#include <cstdint>
#include <vector>

#include "cmlabel/field.hpp"

namespace cmlabel {

/// Dense integer matrix, row-major. Used for boundary and strand matrices,
/// which are small (a few hundred entries) and have entries in {-1, 0, 1}.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Rank over GF(2) by bit-packed Gaussian elimination.
std::size_t rank_gf2(const IntMatrix& m);
/// Rank over GF(p) by elimination mod p.
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);
/// Rank over Q by fraction-free (Bareiss) elimination on arbitrary-precision integers.
std::size_t rank_rational(const IntMatrix& m);

std::size_t rank(const IntMatrix& m, const Field& field);

/// Row of a GF(2) matrix packed into 64-bit words.
using Gf2Row = std::vector<std::uint64_t>;

/// Rank of a list of packed rows; the rows are consumed.
std::size_t rank_gf2_rows(std::vector<Gf2Row>& rows);

}  // namespace cmlabel
