#include "gramq/matrix.hpp"

#include <sstream>
#include <utility>

#include "gramq/errors.hpp"

namespace gramq {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DimensionError("from_rows: ragged row lengths");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product: inner dimensions differ");
    IntMat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

IntMat IntMat::operator+(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum: shapes differ");
    IntMat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

IntMat IntMat::operator-(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference: shapes differ");
    IntMat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

bool IntMat::operator==(const IntMat& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool IntMat::operator<(const IntMat& rhs) const {
    if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
    if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
    for (size_t i = 0; i < data_.size(); ++i) {
        const int c = cmp(data_[i], rhs.data_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool IntMat::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

bool IntMat::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMat::is_upper_triangular() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < i && j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
    return true;
}

bool IntMat::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

void IntMat::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMat::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

std::vector<Int> IntMat::col(int j) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Int> IntMat::row(int i) const {
    std::vector<Int> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Int IntMat::det() const {
    if (!is_square()) throw DimensionError("det: matrix not square");
    const int n = rows_;
    if (n == 0) return 1;
    IntMat a = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                // Bareiss: division by the previous pivot is exact.
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

namespace {

// Row echelon over the rationals; returns pivot count, optionally accumulating
// the same row operations on an augmented identity (for inversion).
int rational_echelon(std::vector<std::vector<Rat>>& a, std::vector<std::vector<Rat>>* aug) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows > 0 ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        if (aug) std::swap((*aug)[r], (*aug)[p]);
        const Rat pivot = a[r][c];
        for (int j = 0; j < cols; ++j) a[r][j] /= pivot;
        if (aug)
            for (auto& v : (*aug)[r]) v /= pivot;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (aug)
                for (int j = 0; j < static_cast<int>((*aug)[i].size()); ++j)
                    (*aug)[i][j] -= f * (*aug)[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

int IntMat::rank() const {
    std::vector<std::vector<Rat>> a(rows_, std::vector<Rat>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) a[i][j] = Rat((*this)(i, j));
    return rational_echelon(a, nullptr);
}

IntMat IntMat::inverse_unimodular() const {
    if (!is_square()) throw DimensionError("inverse: matrix not square");
    const Int d = det();
    if (d != 1 && d != -1)
        throw InvalidInputError("inverse_unimodular: determinant is not +-1");
    const int n = rows_;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat((*this)(i, j));
        inv[i][i] = 1;
    }
    rational_echelon(a, &inv);
    IntMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = inv[i][j];
            v.canonicalize();
            if (v.get_den() != 1)
                throw InternalConsistencyError("inverse_unimodular: non-integral inverse");
            out(i, j) = v.get_num();
        }
    return out;
}

Int IntMat::abs_sum() const {
    Int s = 0;
    for (const Int& v : data_) s += abs(v);
    return s;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << (*this)(i, j).get_str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& x) {
    if (a.cols() != static_cast<int>(x.size())) throw DimensionError("mat_vec: dimension mismatch");
    std::vector<Int> y(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

std::vector<Int> char_poly(const IntMat& a) {
    if (!a.is_square()) throw DimensionError("char_poly: matrix not square");
    const int n = a.rows();
    // c[k] holds the coefficient of lambda^(n-k); c[0] = 1.
    std::vector<Int> c(n + 1);
    c[0] = 1;
    IntMat m = IntMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            for (int i = 0; i < n; ++i) m(i, i) += c[k - 1];
            m = a * m;
        } else {
            m = a;
        }
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += m(i, i);
        // tr(M_k) is divisible by k; the quotient is -c_k.
        Int q;
        mpz_divexact(q.get_mpz_t(), tr.get_mpz_t(), Int(k).get_mpz_t());
        c[k] = -q;
    }
    std::vector<Int> ascending(n + 1);
    for (int k = 0; k <= n; ++k) ascending[n - k] = c[k];
    return ascending;
}

bool is_positive_semidefinite(const IntMat& sym) {
    if (!sym.is_symmetric()) throw InvalidInputError("is_positive_semidefinite: matrix not symmetric");
    const int n = sym.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(sym(i, j));
    std::vector<bool> done(n, false);
    for (;;) {
        int p = -1;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (a[i][i] < 0) return false;
            if (a[i][i] > 0 && p < 0) p = i;
        }
        if (p < 0) {
            // Remaining diagonal is all zero; PSD forces the rest to vanish.
            for (int i = 0; i < n; ++i) {
                if (done[i]) continue;
                for (int j = 0; j < n; ++j)
                    if (!done[j] && a[i][j] != 0) return false;
            }
            return true;
        }
        const Rat pivot = a[p][p];
        for (int i = 0; i < n; ++i) {
            if (done[i] || i == p || a[i][p] == 0) continue;
            const Rat f = a[i][p] / pivot;
            for (int j = 0; j < n; ++j)
                if (!done[j]) a[i][j] -= f * a[p][j];
        }
        done[p] = true;
    }
}

std::vector<Int> poly_mul(const std::vector<Int>& p, const std::vector<Int>& q) {
    if (p.empty() || q.empty()) return {};
    std::vector<Int> out(p.size() + q.size() - 1);
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    }
    return out;
}

} // namespace gramq
