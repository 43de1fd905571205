#include "tropdisc/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tropdisc {

namespace {

// Bareiss quotients are exact by Sylvester's identity; a nonzero remainder
// would mean the elimination state is corrupt, so fail loudly.
Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("exact_div: inexact division in fraction-free elimination");
    return q;
}

void swap_rows(IntMatrix& a, int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
}

// Advances idx to the next k-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<int>& idx, int n) {
    int k = int(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

IntMatrix IntMatrix::from_rows(std::vector<IntVector> rows) {
    IntMatrix m;
    m.rows_ = int(rows.size());
    m.cols_ = rows.empty() ? 0 : int(rows[0].size());
    m.data_.reserve(std::size_t(m.rows_) * m.cols_);
    for (auto& r : rows) {
        if (int(r.size()) != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
        for (auto& x : r) m.data_.push_back(std::move(x));
    }
    return m;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntVector IntMatrix::row(int r) const {
    IntVector v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

IntVector IntMatrix::col(int c) const {
    IntVector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::hcat(const IntMatrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("hcat: row counts differ");
    IntMatrix m(rows_, cols_ + right.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    IntMatrix m(int(row_idx.size()), int(col_idx.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = at(row_idx[i], col_idx[j]);
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols() != int(v.size())) throw std::invalid_argument("matrix-vector product: shape mismatch");
    IntVector r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMatrix RatMatrix::from_rows(std::vector<RatVector> rows) {
    RatMatrix m;
    m.rows_ = int(rows.size());
    m.cols_ = rows.empty() ? 0 : int(rows[0].size());
    m.data_.reserve(std::size_t(m.rows_) * m.cols_);
    for (auto& r : rows) {
        if (int(r.size()) != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
        for (auto& x : r) m.data_.push_back(std::move(x));
    }
    return m;
}

RatVector RatMatrix::row(int r) const {
    RatVector v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix must be square");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int p = k;
        while (p < n && a.at(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            swap_rows(a, p, k);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: matrix must be square");
    int n = m.rows();
    IntMatrix adj(n, n);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = 0; i < n; ++i) {
        std::vector<int> ri;
        for (int r : all)
            if (r != i) ri.push_back(r);
        for (int j = 0; j < n; ++j) {
            std::vector<int> cj;
            for (int c : all)
                if (c != j) cj.push_back(c);
            Int cof = det(m.submatrix(ri, cj));
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

int rank(const IntMatrix& m) {
    IntMatrix a = m;
    int r = 0;
    Int prev = 1;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = r;
        while (p < a.rows() && a.at(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        swap_rows(a, p, r);
        for (int i = r + 1; i < a.rows(); ++i) {
            for (int j = c + 1; j < a.cols(); ++j)
                a.at(i, j) = exact_div(a.at(i, j) * a.at(r, c) - a.at(i, c) * a.at(r, j), prev);
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        ++r;
    }
    return r;
}

int rank(const RatMatrix& m) {
    // Scaling a row by a nonzero rational does not change the rank.
    IntMatrix a(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        Int scale = 1;
        for (int j = 0; j < m.cols(); ++j) scale = lcm(scale, denominator(m.at(i, j)));
        for (int j = 0; j < m.cols(); ++j)
            a.at(i, j) = numerator(m.at(i, j)) * (scale / denominator(m.at(i, j)));
    }
    return rank(a);
}

IntVector primitive(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g == 0) throw std::invalid_argument("primitive: zero vector");
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

Int minor_gcd(const IntMatrix& m, int k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("minor_gcd: order out of range");
    Int g = 0;
    std::vector<int> rows(k), cols(k);
    for (int i = 0; i < k; ++i) rows[i] = i;
    do {
        for (int i = 0; i < k; ++i) cols[i] = i;
        do {
            g = gcd(g, det(m.submatrix(rows, cols)));
            if (g == 1) return g;
        } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
    return abs(g);
}

Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

IntVector primitive_of_rational(const RatVector& v) {
    Int scale = 1;
    for (const Rat& x : v) scale = lcm(scale, denominator(x));
    IntVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = numerator(v[i]) * (scale / denominator(v[i]));
    return primitive(w);
}

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) { return x.str(); }

std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    s += ")";
    return s;
}

}  // namespace tropdisc
