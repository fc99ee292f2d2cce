#pragma once

#include <compare>
#include <map>
#include <vector>

#include "cellres/monomial.hpp"
#include "cellres/weighting.hpp"

namespace cellres {

/// A cell (A, B) of the bipartite cell complex: A a nonempty sorted subset of
/// [m], B of [n].  Dimension |A|+|B|-2, homological degree |A|+|B|-1; the
/// vertex ({i},{j}) has dimension 0.
struct Face {
    std::vector<int> a;
    std::vector<int> b;

    int dimension() const { return static_cast<int>(a.size() + b.size()) - 2; }
    int degree() const { return static_cast<int>(a.size() + b.size()) - 1; }

    auto operator<=>(const Face&) const = default;
};

/// All faces of homological degree d (|A|+|B| = d+1) in V_{m,n}, in the
/// canonical order: lexicographic on (A, B) under the sorted-subset order.
std::vector<Face> enumerate_faces(int m, int n, int degree);

/// One signed codimension-1 face in the boundary of a face, together with
/// which vertex index was removed from which side.
struct BoundaryTerm {
    Face face;
    int sign;  // +1 or -1
    Side removed_side;
    int removed_index;
};

/// Signed boundary of a face.  Removing the i-th smallest element of A
/// carries sign (-1)^{i-1}; removing the j-th smallest element of B carries
/// sign (-1)^{|A|+j-1}.  Removals that would empty a side are omitted, so a
/// vertex has empty boundary (its incidence with the empty cell is handled by
/// the chain-complex builder, with sign +1).
std::vector<BoundaryTerm> boundary(const Face& face);

/// lcm of the labels of the face's vertices.
Monomial label_of(const Face& face, const VertexLabeling& labeling);

/// A downward-closed set of faces of V_{m,n} with the induced monomial
/// labels.  Immutable; restriction produces a new value.
class LabeledComplex {
public:
    /// All of V_{m,n} for the given labeling.
    static LabeledComplex full(VertexLabeling labeling);

    const VertexLabeling& labeling() const { return labeling_; }
    Ambient ambient() const { return labeling_.ambient(); }

    /// faces_by_degree()[d] lists the degree-d faces in canonical order;
    /// index 0 is unused (the empty cell is implicit).
    const std::vector<std::vector<Face>>& faces_by_degree() const { return faces_; }
    int top_degree() const { return static_cast<int>(faces_.size()) - 1; }
    bool is_empty() const;
    std::size_t face_count() const;
    bool contains(const Face& face) const;

    const Monomial& face_label(const Face& face) const;

    /// Subcomplex of the faces whose label divides f.  For these complexes
    /// this is the subcomplex induced by the vertices whose label divides f.
    LabeledComplex restricted(const Monomial& f) const;

private:
    VertexLabeling labeling_;
    std::vector<std::vector<Face>> faces_;
    std::map<Face, Monomial> labels_;

    void index_faces();
};

/// The full simplex on the given labels: faces are all nonempty subsets of
/// [s], subset S of size k having homological degree k.
struct SimplexComplex {
    std::vector<Monomial> labels;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    /// All degree-d faces (subsets of size d), lexicographic order.
    std::vector<std::vector<int>> faces(int degree) const;
    std::size_t face_count() const;
};

/// Validates and wraps the label list (throws on an empty list).
SimplexComplex simplex(std::vector<Monomial> labels);

/// Signed boundary of a nonempty subset: removing the k-th smallest element
/// (1-based) carries sign (-1)^k; the removal emptying the subset is omitted.
std::vector<std::pair<std::vector<int>, int>> subset_boundary(const std::vector<int>& subset);

Monomial subset_label(const std::vector<int>& subset, const std::vector<Monomial>& labels);

/// All nonempty subsets of {1..k}, sorted lexicographically.
std::vector<std::vector<int>> nonempty_subsets(int k);

}  // namespace cellres
