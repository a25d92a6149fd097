#pragma once

#include <utility>
#include <vector>

#include "gramq/matrix.hpp"

namespace gramq {

/// Integral unit form in n variables, stored as its upper triangular Gram
/// matrix (unit diagonal, zeros below the diagonal). Immutable after
/// construction; all operations are pure.
class UnitForm {
public:
    /// Validates shape, triangularity and the unit diagonal.
    explicit UnitForm(IntMat tri_gram);

    static UnitForm from_rows(const std::vector<std::vector<Int>>& rows);

    int n() const { return tri_.rows(); }
    const IntMat& tri_gram() const { return tri_; }
    IntMat symmetric_gram() const { return tri_ + tri_.transposed(); }

    /// Coupling coefficient q_ij with the symmetric convention q_ji = q_ij.
    /// Indices are 1-based.
    Int coeff(int i, int j) const;

    Int evaluate(const std::vector<Int>& x) const;
    Int bilinear(const std::vector<Int>& x, const std::vector<Int>& y) const;

    std::pair<int, int> rank_corank() const;
    bool is_non_negative() const;
    bool is_positive() const;
    bool is_connected() const;

    bool operator==(const UnitForm& rhs) const { return tri_ == rhs.tri_; }
    bool operator!=(const UnitForm& rhs) const { return tri_ != rhs.tri_; }
    bool operator<(const UnitForm& rhs) const { return tri_ < rhs.tri_; }

private:
    IntMat tri_;
};

/// Loop-less bigraph on totally ordered vertices: strictly upper triangular
/// signed adjacency matrix, entry d_ij the signed edge multiplicity.
class Bigraph {
public:
    explicit Bigraph(IntMat tri_adj);

    int n_vertices() const { return adj_.rows(); }
    const IntMat& tri_adj() const { return adj_; }

    /// Gram convention: tri_gram = Id - tri_adj.
    UnitForm unit_form() const;
    static Bigraph from_unit_form(const UnitForm& q);

    bool operator==(const Bigraph& rhs) const { return adj_ == rhs.adj_; }

private:
    IntMat adj_;
};

enum class CongruenceKind { Weak, Strong };

/// Integer matrix B with |det B| = 1 claimed to realize a Gram congruence:
/// strong means tri_gram(q') = B^T tri_gram(q) B, weak the same with the
/// symmetric Gram matrices.
struct CongruenceCertificate {
    IntMat matrix_b;
    CongruenceKind kind = CongruenceKind::Strong;
    bool verified = false;
};

/// Exact check of the defining congruence equation plus |det B| = 1.
/// Updates cert.verified with the outcome.
bool verify_congruence(const UnitForm& qp, const UnitForm& q, CongruenceCertificate& cert);

UnitForm direct_sum(const UnitForm& q1, const UnitForm& q2);

struct Decomposition {
    std::vector<int> perm;        ///< rho, 1-based: original index -> new position
    std::vector<UnitForm> parts;  ///< connected components, smallest original index first
    IntMat perm_matrix;           ///< P with P^T tri_gram(q) P block diagonal
};

/// Splits q into connected components; the permutation matrix is itself a
/// strong congruence certificate from q to the direct sum of the parts.
Decomposition decompose_disconnected(const UnitForm& q);

} // namespace gramq
