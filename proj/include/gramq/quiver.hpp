#pragma once

#include <optional>
#include <vector>

#include "gramq/matrix.hpp"
#include "gramq/unit_form.hpp"

namespace gramq {

struct Arrow {
    int source = 0;  ///< 1-based vertex index
    int target = 0;  ///< 1-based vertex index
    bool operator==(const Arrow&) const = default;
};

/// Loop-less quiver with totally ordered vertices 1..m and arrows identified
/// by their 1-based position in the arrow list.
class Quiver {
public:
    Quiver(int n_vertices, std::vector<Arrow> arrows);

    int n_vertices() const { return n_vertices_; }
    int n_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int i) const;  ///< i is 1-based

    int source(int i) const { return arrow(i).source; }
    int target(int i) const { return arrow(i).target; }

    /// sigma_Q(v, i): +1 if v is the source of arrow i, -1 if target, 0 otherwise.
    int incidence_sign(int v, int i) const;
    bool incident(int v, int i) const { return incidence_sign(v, i) != 0; }
    /// The endpoint of arrow i other than v. Requires v incident to i.
    int other_end(int i, int v) const;
    bool parallel(int i, int j) const;
    bool adjacent(int i, int j) const;
    /// The common vertex of adjacent non-parallel arrows i and j.
    int common_vertex(int i, int j) const;
    int degree(int v) const;

    bool operator==(const Quiver&) const = default;
    bool operator<(const Quiver& rhs) const;

private:
    int n_vertices_ = 0;
    std::vector<Arrow> arrows_;
};

/// Walk in a quiver: start vertex plus (arrow, direction) steps, direction
/// +1 for source-to-target traversal.
struct Walk {
    int start = 0;
    std::vector<std::pair<int, int>> steps;  ///< (1-based arrow index, +-1)
};

/// Validates the chaining of w in Q and returns the end vertex.
int walk_end(const Quiver& q, const Walk& w);

/// Vertex-arrow incidence matrix: column i is e_sou(i) - e_tar(i).
IntMat incidence_matrix(const Quiver& q);

/// The unit form q_Q with symmetric Gram matrix I(Q)^T I(Q).
UnitForm unit_form_of(const Quiver& q);

/// Incidence bigraph Inc(Q) on the arrows of Q; satisfies
/// tri_gram(q_Q) = Id - tri_adj.
Bigraph incidence_bigraph(const Quiver& q);

/// Sum of signed incidence columns along the walk; telescopes to
/// e_start - e_end.
std::vector<Int> walk_vector(const Quiver& q, const Walk& w);

struct StructuralPredicates {
    bool connected = false;
    bool tree = false;
    bool one_tree = false;
};

StructuralPredicates structural_predicates(const Quiver& q);

/// |Q_1| - |Q_0| + 1 for a connected quiver; equals the corank of q_Q.
int corank_of_quiver(const Quiver& q);

/// Linear quiver v_1 -> ... -> v_{n+1} followed by c arrows from v_{n+1}
/// back to v_1; its incidence bigraph is the canonical c-extension of the
/// Dynkin type A_n unit form.
Quiver canonical_extension_quiver(int n, int c);

/// Vertex set {center} if every arrow contains `center`; used by star and
/// 1-star detection. Returns all valid centers (more than one only for
/// quivers on two vertices).
std::vector<int> star_centers(const Quiver& q);

} // namespace gramq
