#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace epikit {

// Dense integer matrix, row-major, with overflow-checked arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static IntMatrix identity(int n);
    static IntMatrix from_columns(int rows, const std::vector<std::vector<std::int64_t>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    std::vector<std::int64_t> operator*(const std::vector<std::int64_t>& v) const;
    bool operator==(const IntMatrix& o) const = default;
    bool operator<(const IntMatrix& o) const;

    IntMatrix transpose() const;
    std::vector<std::int64_t> column(int j) const;
    // Horizontal concatenation [this | o].
    IntMatrix hcat(const IntMatrix& o) const;
    IntMatrix vcat(const IntMatrix& o) const;
    IntMatrix block(int r0, int c0, int nr, int nc) const;

    std::int64_t det() const;
    // Inverse of a unimodular matrix; throws otherwise.
    IntMatrix inverse_unimodular() const;
    IntMatrix pow(std::int64_t e) const;
    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> a_;
};

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
    IntMatrix U, D, V, Vinv;
    std::vector<std::int64_t> diag;  // length min(rows, cols)
    int rank = 0;
};

SmithForm smith_form(const IntMatrix& m);
std::vector<std::int64_t> smith_invariants(const IntMatrix& m);

// Columns form a basis of the saturated lattice {x in Z^n : M x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

}  // namespace epikit
