#include "epikit/intmat.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

#include "epikit/arith.hpp"

namespace epikit {

namespace {

std::int64_t add_c(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer matrix overflow");
    return r;
}

std::int64_t mul_c(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer matrix overflow");
    return r;
}

// Elementary operations that keep U, V and V^{-1} in step with D.
struct SmithWork {
    IntMatrix D, U, V, Vinv;

    void swap_rows(int i, int j) {
        for (int c = 0; c < D.cols(); ++c) std::swap(D(i, c), D(j, c));
        for (int c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, j));
        for (int r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
        for (int c = 0; c < Vinv.cols(); ++c) std::swap(Vinv(i, c), Vinv(j, c));
    }
    // row i += k * row j
    void add_row(int i, int j, std::int64_t k) {
        if (k == 0) return;
        for (int c = 0; c < D.cols(); ++c) D(i, c) = add_c(D(i, c), mul_c(k, D(j, c)));
        for (int c = 0; c < U.cols(); ++c) U(i, c) = add_c(U(i, c), mul_c(k, U(j, c)));
    }
    // col i += k * col j
    void add_col(int i, int j, std::int64_t k) {
        if (k == 0) return;
        for (int r = 0; r < D.rows(); ++r) D(r, i) = add_c(D(r, i), mul_c(k, D(r, j)));
        for (int r = 0; r < V.rows(); ++r) V(r, i) = add_c(V(r, i), mul_c(k, V(r, j)));
        for (int c = 0; c < Vinv.cols(); ++c) Vinv(j, c) = add_c(Vinv(j, c), -mul_c(k, Vinv(i, c)));
    }
    void negate_row(int i) {
        for (int c = 0; c < D.cols(); ++c) D(i, c) = -D(i, c);
        for (int c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
    }
};

}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw DomainError("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(int rows, const std::vector<std::vector<std::int64_t>>& cols) {
    IntMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        for (int i = 0; i < rows; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            std::int64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) = add_c(r(i, j), mul_c(a, o(k, j)));
        }
    }
    return r;
}

std::vector<std::int64_t> IntMatrix::operator*(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DomainError("matrix-vector dimension mismatch");
    std::vector<std::int64_t> r(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) r[static_cast<std::size_t>(i)] = add_c(r[static_cast<std::size_t>(i)], mul_c((*this)(i, k), v[static_cast<std::size_t>(k)]));
    }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = add_c(a_[i], o.a_[i]);
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = add_c(a_[i], -o.a_[i]);
    return r;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
}

std::vector<std::int64_t> IntMatrix::column(int j) const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw DomainError("hcat row mismatch");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
}

IntMatrix IntMatrix::vcat(const IntMatrix& o) const {
    if (cols_ != o.cols_) throw DomainError("vcat column mismatch");
    IntMatrix r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    }
    for (int i = 0; i < o.rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
    }
    return r;
}

IntMatrix IntMatrix::block(int r0, int c0, int nr, int nc) const {
    IntMatrix r(nr, nc);
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    }
    return r;
}

std::int64_t IntMatrix::det() const {
    if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination in 128-bit arithmetic.
    std::vector<__int128> m(a_.begin(), a_.end());
    auto at = [&](int i, int j) -> __int128& { return m[static_cast<std::size_t>(i * n + j)]; };
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i) {
                if (at(i, k) != 0) {
                    piv = i;
                    break;
                }
            }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        }
        prev = at(k, k);
    }
    __int128 d = at(n - 1, n - 1) * sign;
    if (d > INT64_MAX || d < INT64_MIN) throw DomainError("determinant overflow");
    return static_cast<std::int64_t>(d);
}

IntMatrix IntMatrix::inverse_unimodular() const {
    SmithForm s = smith_form(*this);
    if (rows_ != cols_ || s.rank != rows_) throw DomainError("matrix is not invertible over the integers");
    for (auto d : s.diag) {
        if (d != 1) throw DomainError("matrix is not invertible over the integers");
    }
    // U M V = I  =>  M^{-1} = V U
    return s.V * s.U;
}

IntMatrix IntMatrix::pow(std::int64_t e) const {
    if (e < 0) return inverse_unimodular().pow(-e);
    IntMatrix r = identity(rows_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

SmithForm smith_form(const IntMatrix& m) {
    int r = m.rows(), c = m.cols();
    SmithWork w{m, IntMatrix::identity(r), IntMatrix::identity(c), IntMatrix::identity(c)};
    int t = 0;
    for (; t < std::min(r, c); ++t) {
        while (true) {
            // pivot: least nonzero absolute value in the trailing block
            int pi = -1, pj = -1;
            std::int64_t best = 0;
            for (int i = t; i < r; ++i) {
                for (int j = t; j < c; ++j) {
                    std::int64_t v = std::llabs(w.D(i, j));
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0) goto done;
            if (pi != t) w.swap_rows(pi, t);
            if (pj != t) w.swap_cols(pj, t);
            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                std::int64_t qt = w.D(i, t) / w.D(t, t);
                w.add_row(i, t, -qt);
                if (w.D(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                std::int64_t qt = w.D(t, j) / w.D(t, t);
                w.add_col(j, t, -qt);
                if (w.D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the trailing block
            int bad = -1;
            for (int i = t + 1; i < r && bad < 0; ++i) {
                for (int j = t + 1; j < c; ++j) {
                    if (w.D(i, j) % w.D(t, t) != 0) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad < 0) break;
            w.add_row(t, bad, 1);
        }
        if (w.D(t, t) < 0) w.negate_row(t);
    }
done:
    SmithForm out{w.U, w.D, w.V, w.Vinv, {}, 0};
    for (int i = 0; i < std::min(r, c); ++i) {
        out.diag.push_back(w.D(i, i));
        if (w.D(i, i) != 0) ++out.rank;
    }
    return out;
}

std::vector<std::int64_t> smith_invariants(const IntMatrix& m) { return smith_form(m).diag; }

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithForm s = smith_form(m);
    // M V = U^{-1} D, so the columns of V beyond the rank span the kernel.
    std::vector<std::vector<std::int64_t>> cols;
    for (int j = s.rank; j < m.cols(); ++j) cols.push_back(s.V.column(j));
    return IntMatrix::from_columns(m.cols(), cols);
}

}  // namespace epikit
