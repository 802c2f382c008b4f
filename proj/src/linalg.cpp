#include "cmlabel/linalg.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmlabel/errors.hpp"

namespace cmlabel {

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InvalidInput("matrix product: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::int64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

std::size_t rank_gf2_rows(std::vector<Gf2Row>& rows) {
    if (rows.empty()) return 0;
    const std::size_t words = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t w = 0; w < words && rank < rows.size(); ++w) {
        for (int bit = 0; bit < 64 && rank < rows.size(); ++bit) {
            const std::uint64_t mask = std::uint64_t{1} << bit;
            std::size_t pivot = rank;
            while (pivot < rows.size() && !(rows[pivot][w] & mask)) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t r = rank + 1; r < rows.size(); ++r) {
                if (rows[r][w] & mask)
                    for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
            }
            ++rank;
        }
    }
    return rank;
}

std::size_t rank_gf2(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<Gf2Row> rows(m.rows(), Gf2Row(words, 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) & 1) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
    return rank_gf2_rows(rows);
}

namespace {

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t inverse_mod_p(std::int64_t a, std::int64_t p) {
    // Fermat: a^(p-2) mod p.
    std::int64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t prime) {
    const auto p = static_cast<std::int64_t>(prime);
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = mod_p(m(r, c), p);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[rank], a[pivot]);
        const std::int64_t inv = inverse_mod_p(a[rank][c], p);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (a[r][c] == 0) continue;
            const std::int64_t factor = a[r][c] * inv % p;
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] = mod_p(a[r][k] - factor * a[rank][k], p);
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
    using boost::multiprecision::cpp_int;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);

    // Bareiss: after step k every entry below the pivot row is a (k+1)-minor,
    // so the division by the previous pivot is exact.
    cpp_int previous = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k)
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / previous;
            a[r][c] = 0;
        }
        previous = a[rank][c];
        ++rank;
    }
    return rank;
}

std::size_t rank(const IntMatrix& m, const Field& field) {
    switch (field.kind) {
        case Field::Kind::gf2: return rank_gf2(m);
        case Field::Kind::gfp: return rank_mod_p(m, field.characteristic);
        case Field::Kind::rational: return rank_rational(m);
    }
    return 0;
}

}  // namespace cmlabel
