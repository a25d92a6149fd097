#include "gramq/unit_form.hpp"

#include <algorithm>
#include <numeric>

#include "gramq/errors.hpp"

namespace gramq {

UnitForm::UnitForm(IntMat tri_gram) : tri_(std::move(tri_gram)) {
    if (!tri_.is_square() || tri_.rows() < 1)
        throw InvalidInputError("UnitForm: triangular Gram matrix must be square, n >= 1");
    if (!tri_.is_upper_triangular())
        throw InvalidInputError("UnitForm: Gram matrix must be upper triangular");
    for (int i = 0; i < tri_.rows(); ++i)
        if (tri_(i, i) != 1) throw InvalidInputError("UnitForm: diagonal must be all ones");
}

UnitForm UnitForm::from_rows(const std::vector<std::vector<Int>>& rows) {
    return UnitForm(IntMat::from_rows(rows));
}

Int UnitForm::coeff(int i, int j) const {
    if (i < 1 || i > n() || j < 1 || j > n()) throw IndexError("coeff: index out of range");
    if (i <= j) return tri_(i - 1, j - 1);
    return tri_(j - 1, i - 1);
}

Int UnitForm::evaluate(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != n())
        throw DimensionError("evaluate: vector length differs from number of variables");
    Int acc = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i; j < n(); ++j) {
            const Int& g = tri_(i, j);
            if (g != 0) acc += g * x[i] * x[j];
        }
    return acc;
}

Int UnitForm::bilinear(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (static_cast<int>(x.size()) != n() || static_cast<int>(y.size()) != n())
        throw DimensionError("bilinear: vector length differs from number of variables");
    // x^T G y with G = tri + tri^T, without forming G.
    Int acc = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) {
            const Int& g = i <= j ? tri_(i, j) : tri_(j, i);
            if (g != 0) acc += g * x[i] * y[j];
        }
    return acc;
}

std::pair<int, int> UnitForm::rank_corank() const {
    const int r = symmetric_gram().rank();
    return {r, n() - r};
}

bool UnitForm::is_non_negative() const { return is_positive_semidefinite(symmetric_gram()); }

bool UnitForm::is_positive() const {
    return is_non_negative() && rank_corank().second == 0;
}

bool UnitForm::is_connected() const {
    const int m = n();
    std::vector<int> comp(m, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < m; ++w) {
            if (comp[w] >= 0 || w == v) continue;
            if (coeff(v + 1, w + 1) != 0) {
                comp[w] = 0;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool verify_congruence(const UnitForm& qp, const UnitForm& q, CongruenceCertificate& cert) {
    cert.verified = false;
    if (qp.n() != q.n()) throw DimensionError("verify_congruence: forms have different sizes");
    if (cert.matrix_b.rows() != q.n() || cert.matrix_b.cols() != q.n())
        throw DimensionError("verify_congruence: certificate size differs from forms");
    const Int d = cert.matrix_b.det();
    if (d != 1 && d != -1) return false;
    const IntMat& b = cert.matrix_b;
    const IntMat bt = b.transposed();
    bool ok = false;
    if (cert.kind == CongruenceKind::Strong) {
        ok = bt * q.tri_gram() * b == qp.tri_gram();
    } else {
        ok = bt * q.symmetric_gram() * b == qp.symmetric_gram();
    }
    cert.verified = ok;
    return ok;
}

UnitForm direct_sum(const UnitForm& q1, const UnitForm& q2) {
    const int n1 = q1.n(), n2 = q2.n();
    IntMat tri(n1 + n2, n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = i; j < n1; ++j) tri(i, j) = q1.tri_gram()(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = i; j < n2; ++j) tri(n1 + i, n1 + j) = q2.tri_gram()(i, j);
    return UnitForm(std::move(tri));
}

Decomposition decompose_disconnected(const UnitForm& q) {
    const int n = q.n();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        // Components are discovered in order of their minimal index.
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (comp[w] >= 0 || w == v) continue;
                if (q.coeff(v + 1, w + 1) != 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }

    // rho sends original index i to its position in the component-blocked
    // order; within a component the original order is preserved.
    std::vector<std::vector<int>> members(ncomp);
    for (int i = 0; i < n; ++i) members[comp[i]].push_back(i);

    Decomposition out;
    out.perm.assign(n, 0);
    int pos = 0;
    for (const auto& block : members)
        for (int i : block) out.perm[i] = ++pos;

    // P = [e_{rho^{-1}(1)} | ... | e_{rho^{-1}(n)}]; column k is e_i with rho(i) = k.
    out.perm_matrix = IntMat(n, n);
    for (int i = 0; i < n; ++i) out.perm_matrix(i, out.perm[i] - 1) = 1;

    const IntMat blocked = out.perm_matrix.transposed() * q.tri_gram() * out.perm_matrix;
    for (const auto& block : members) {
        const int k = static_cast<int>(block.size());
        const int base = out.perm[block[0]] - 1;
        IntMat tri(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) tri(i, j) = blocked(base + i, base + j);
        out.parts.emplace_back(std::move(tri));
    }
    return out;
}

Bigraph::Bigraph(IntMat tri_adj) : adj_(std::move(tri_adj)) {
    if (!adj_.is_square() || adj_.rows() < 1)
        throw InvalidInputError("Bigraph: adjacency matrix must be square, n >= 1");
    if (!adj_.is_upper_triangular())
        throw InvalidInputError("Bigraph: adjacency matrix must be upper triangular");
    for (int i = 0; i < adj_.rows(); ++i)
        if (adj_(i, i) != 0) throw InvalidInputError("Bigraph: loops are not allowed");
}

UnitForm Bigraph::unit_form() const {
    return UnitForm(IntMat::identity(adj_.rows()) - adj_);
}

Bigraph Bigraph::from_unit_form(const UnitForm& q) {
    return Bigraph(IntMat::identity(q.n()) - q.tri_gram());
}

} // namespace gramq
