#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace gramq {

// All algebra in this library is exact. Matrix entries are arbitrary-precision
// integers; rationals appear only inside elimination routines.
using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

/// Dense integer matrix, row-major, 0-based subscripts.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    IntMat transposed() const;
    IntMat operator*(const IntMat& rhs) const;
    IntMat operator+(const IntMat& rhs) const;
    IntMat operator-(const IntMat& rhs) const;
    bool operator==(const IntMat& rhs) const;
    bool operator!=(const IntMat& rhs) const { return !(*this == rhs); }
    bool operator<(const IntMat& rhs) const;  // lexicographic, for ordered containers

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;
    bool is_upper_triangular() const;
    bool is_symmetric() const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);

    std::vector<Int> col(int j) const;
    std::vector<Int> row(int i) const;

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Int det() const;

    /// Exact rank over the rationals.
    int rank() const;

    /// Inverse of a matrix with det = +-1; the inverse is again integral.
    IntMat inverse_unimodular() const;

    /// Sum of |entries|; used as a search potential.
    Int abs_sum() const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& x);

/// Characteristic polynomial det(lambda*Id - a) of a square integer matrix,
/// coefficients in ascending degree (last entry is the leading 1).
/// Faddeev-LeVerrier recursion; every division is exact over the integers.
std::vector<Int> char_poly(const IntMat& a);

/// Exact positive-semidefiniteness test for a symmetric integer matrix,
/// by rational symmetric elimination with pivot skipping.
bool is_positive_semidefinite(const IntMat& sym);

/// Multiply two polynomials with ascending-degree coefficient vectors.
std::vector<Int> poly_mul(const std::vector<Int>& p, const std::vector<Int>& q);

} // namespace gramq
