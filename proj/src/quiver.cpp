#include "gramq/quiver.hpp"

#include <algorithm>

#include "gramq/errors.hpp"

namespace gramq {

Quiver::Quiver(int n_vertices, std::vector<Arrow> arrows)
    : n_vertices_(n_vertices), arrows_(std::move(arrows)) {
    if (n_vertices_ < 1) throw InvalidInputError("Quiver: at least one vertex required");
    for (const Arrow& a : arrows_) {
        if (a.source < 1 || a.source > n_vertices_ || a.target < 1 || a.target > n_vertices_)
            throw IndexError("Quiver: arrow endpoint out of range");
        if (a.source == a.target) throw InvalidInputError("Quiver: loops are not allowed");
    }
}

const Arrow& Quiver::arrow(int i) const {
    if (i < 1 || i > n_arrows()) throw IndexError("Quiver: arrow index out of range");
    return arrows_[i - 1];
}

int Quiver::incidence_sign(int v, int i) const {
    const Arrow& a = arrow(i);
    if (v == a.source) return 1;
    if (v == a.target) return -1;
    return 0;
}

int Quiver::other_end(int i, int v) const {
    const Arrow& a = arrow(i);
    if (v == a.source) return a.target;
    if (v == a.target) return a.source;
    throw InvalidInputError("other_end: vertex not incident to arrow");
}

bool Quiver::parallel(int i, int j) const {
    const Arrow &a = arrow(i), &b = arrow(j);
    return (a.source == b.source && a.target == b.target) ||
           (a.source == b.target && a.target == b.source);
}

bool Quiver::adjacent(int i, int j) const {
    const Arrow &a = arrow(i), &b = arrow(j);
    return a.source == b.source || a.source == b.target || a.target == b.source ||
           a.target == b.target;
}

int Quiver::common_vertex(int i, int j) const {
    if (parallel(i, j)) throw InvalidInputError("common_vertex: arrows are parallel");
    const Arrow &a = arrow(i), &b = arrow(j);
    if (a.source == b.source || a.source == b.target) return a.source;
    if (a.target == b.source || a.target == b.target) return a.target;
    throw InvalidInputError("common_vertex: arrows are not adjacent");
}

int Quiver::degree(int v) const {
    int d = 0;
    for (int i = 1; i <= n_arrows(); ++i)
        if (incident(v, i)) ++d;
    return d;
}

bool Quiver::operator<(const Quiver& rhs) const {
    if (n_vertices_ != rhs.n_vertices_) return n_vertices_ < rhs.n_vertices_;
    if (arrows_.size() != rhs.arrows_.size()) return arrows_.size() < rhs.arrows_.size();
    for (size_t k = 0; k < arrows_.size(); ++k) {
        if (arrows_[k].source != rhs.arrows_[k].source) return arrows_[k].source < rhs.arrows_[k].source;
        if (arrows_[k].target != rhs.arrows_[k].target) return arrows_[k].target < rhs.arrows_[k].target;
    }
    return false;
}

int walk_end(const Quiver& q, const Walk& w) {
    if (w.start < 1 || w.start > q.n_vertices())
        throw InvalidWalkError("walk: start vertex out of range");
    int cur = w.start;
    for (const auto& [i, dir] : w.steps) {
        if (dir != 1 && dir != -1) throw InvalidWalkError("walk: direction must be +-1");
        const Arrow& a = q.arrow(i);
        if (dir == 1) {
            if (a.source != cur) throw InvalidWalkError("walk: broken chaining");
            cur = a.target;
        } else {
            if (a.target != cur) throw InvalidWalkError("walk: broken chaining");
            cur = a.source;
        }
    }
    return cur;
}

IntMat incidence_matrix(const Quiver& q) {
    IntMat m(q.n_vertices(), q.n_arrows());
    for (int i = 1; i <= q.n_arrows(); ++i) {
        m(q.source(i) - 1, i - 1) = 1;
        m(q.target(i) - 1, i - 1) = -1;
    }
    return m;
}

UnitForm unit_form_of(const Quiver& q) {
    const IntMat inc = incidence_matrix(q);
    const IntMat g = inc.transposed() * inc;
    const int n = q.n_arrows();
    IntMat tri(n, n);
    for (int i = 0; i < n; ++i) {
        tri(i, i) = 1;
        for (int j = i + 1; j < n; ++j) tri(i, j) = g(i, j);
    }
    return UnitForm(std::move(tri));
}

Bigraph incidence_bigraph(const Quiver& q) {
    const int n = q.n_arrows();
    IntMat adj(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (!q.adjacent(i, j)) continue;
            if (q.parallel(i, j)) {
                // Two edges between arrow-vertices i and j, equal signs.
                const int v = q.arrow(i).source;
                const int s = -q.incidence_sign(v, i) * q.incidence_sign(v, j);
                adj(i - 1, j - 1) = 2 * s;
            } else {
                const int v = q.common_vertex(i, j);
                adj(i - 1, j - 1) = -q.incidence_sign(v, i) * q.incidence_sign(v, j);
            }
        }
    }
    return Bigraph(std::move(adj));
}

std::vector<Int> walk_vector(const Quiver& q, const Walk& w) {
    const int end = walk_end(q, w);
    std::vector<Int> v(q.n_vertices());
    for (const auto& [i, dir] : w.steps) {
        v[q.source(i) - 1] += dir;
        v[q.target(i) - 1] -= dir;
    }
    // Telescoping identity from the definition of the incidence columns.
    std::vector<Int> expect(q.n_vertices());
    expect[w.start - 1] += 1;
    expect[end - 1] -= 1;
    if (v != expect) throw InternalConsistencyError("walk_vector: telescoping identity failed");
    return v;
}

StructuralPredicates structural_predicates(const Quiver& q) {
    const int m = q.n_vertices();
    std::vector<int> seen(m, 0);
    std::vector<int> stack{1};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int i = 1; i <= q.n_arrows(); ++i) {
            if (!q.incident(v, i)) continue;
            const int w = q.other_end(i, v);
            if (!seen[w - 1]) {
                seen[w - 1] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    StructuralPredicates p;
    p.connected = count == m;
    p.tree = p.connected && q.n_arrows() == m - 1;
    p.one_tree = p.connected && q.n_arrows() == m;
    return p;
}

int corank_of_quiver(const Quiver& q) {
    if (!structural_predicates(q).connected)
        throw NotConnectedError("corank_of_quiver: quiver is not connected");
    return q.n_arrows() - q.n_vertices() + 1;
}

Quiver canonical_extension_quiver(int n, int c) {
    if (n < 1 || c < 0) throw InvalidInputError("canonical_extension_quiver: need n >= 1, c >= 0");
    std::vector<Arrow> arrows;
    arrows.reserve(n + c);
    for (int i = 1; i <= n; ++i) arrows.push_back({i, i + 1});
    for (int k = 0; k < c; ++k) arrows.push_back({n + 1, 1});
    return Quiver(n + 1, std::move(arrows));
}

std::vector<int> star_centers(const Quiver& q) {
    std::vector<int> centers;
    for (int v = 1; v <= q.n_vertices(); ++v) {
        bool all = true;
        for (int i = 1; i <= q.n_arrows() && all; ++i) all = q.incident(v, i);
        if (all) centers.push_back(v);
    }
    return centers;
}

} // namespace gramq
