#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace tropdisc {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Dense integer matrix, row-major. All operations are exact.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
    static IntMatrix from_rows(std::vector<IntVector> rows);
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    IntVector row(int r) const;
    IntVector col(int c) const;
    IntMatrix transpose() const;
    // Horizontal concatenation; row counts must agree.
    IntMatrix hcat(const IntMatrix& right) const;
    IntMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    bool operator==(const IntMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    IntVector data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
    explicit RatMatrix(const IntMatrix& m);
    static RatMatrix from_rows(std::vector<RatVector> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    RatVector row(int r) const;

    bool operator==(const RatMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    RatVector data_;
};

// Determinant of a square matrix by fraction-free (Bareiss) elimination.
// The 0x0 determinant is 1.
Int det(const IntMatrix& m);

// Adjugate (transposed cofactor matrix); adj(m) * m = det(m) * I.
// The adjugate of a 1x1 matrix is [[1]].
IntMatrix adjugate(const IntMatrix& m);

// Rank by fraction-free elimination; works for any shape.
int rank(const IntMatrix& m);
int rank(const RatMatrix& m);

// v divided by the gcd of its entries; sign of each entry is preserved.
// Throws std::invalid_argument on the zero vector.
IntVector primitive(const IntVector& v);

// gcd of all k x k minors; 0 when every such minor vanishes.
// Throws std::invalid_argument unless 1 <= k <= min(rows, cols).
Int minor_gcd(const IntMatrix& m, int k);

Int dot(const IntVector& a, const IntVector& b);
Rat dot(const RatVector& a, const RatVector& b);
Rat dot(const RatVector& a, const IntVector& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

// Clears denominators and divides out content: the unique primitive integer
// vector with the same direction. Throws std::invalid_argument on zero.
IntVector primitive_of_rational(const RatVector& v);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);
std::string to_string(const IntVector& v);

}  // namespace tropdisc
