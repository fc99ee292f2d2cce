#include "cellres/cell_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cellres {

std::vector<std::vector<int>> nonempty_subsets(int k) {
    std::vector<std::vector<int>> out;
    out.reserve((1u << k) - 1);
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> s;
        for (int v = 1; v <= k; ++v)
            if (mask & (1u << (v - 1))) s.push_back(v);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> enumerate_faces(int m, int n, int degree) {
    if (degree < 1) throw std::invalid_argument("enumerate_faces: degree must be >= 1");
    std::vector<Face> out;
    for (const auto& a : nonempty_subsets(m)) {
        int t = degree + 1 - static_cast<int>(a.size());
        if (t < 1 || t > n) continue;
        for (const auto& b : nonempty_subsets(n))
            if (static_cast<int>(b.size()) == t) out.push_back(Face{a, b});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BoundaryTerm> boundary(const Face& face) {
    std::vector<BoundaryTerm> out;
    const int s = static_cast<int>(face.a.size());
    const int t = static_cast<int>(face.b.size());
    if (s >= 2) {
        for (int i = 0; i < s; ++i) {
            Face f = face;
            f.a.erase(f.a.begin() + i);
            out.push_back({std::move(f), (i % 2 == 0) ? 1 : -1, Side::X, face.a[i]});
        }
    }
    if (t >= 2) {
        for (int j = 0; j < t; ++j) {
            Face f = face;
            f.b.erase(f.b.begin() + j);
            out.push_back({std::move(f), ((s + j) % 2 == 0) ? 1 : -1, Side::Y, face.b[j]});
        }
    }
    return out;
}

Monomial label_of(const Face& face, const VertexLabeling& labeling) {
    Monomial acc = labeling.label(face.a.front(), face.b.front());
    for (int i : face.a)
        for (int j : face.b) acc = lcm(acc, labeling.label(i, j));
    return acc;
}

LabeledComplex LabeledComplex::full(VertexLabeling labeling) {
    LabeledComplex c;
    c.labeling_ = std::move(labeling);
    const int top = c.labeling_.m + c.labeling_.n - 1;
    c.faces_.resize(top + 1);
    for (int d = 1; d <= top; ++d)
        c.faces_[d] = enumerate_faces(c.labeling_.m, c.labeling_.n, d);
    c.index_faces();
    return c;
}

void LabeledComplex::index_faces() {
    labels_.clear();
    for (const auto& bucket : faces_)
        for (const Face& f : bucket) labels_.emplace(f, label_of(f, labeling_));
}

bool LabeledComplex::is_empty() const { return labels_.empty(); }

std::size_t LabeledComplex::face_count() const { return labels_.size(); }

bool LabeledComplex::contains(const Face& face) const { return labels_.count(face) != 0; }

const Monomial& LabeledComplex::face_label(const Face& face) const {
    auto it = labels_.find(face);
    if (it == labels_.end()) throw std::invalid_argument("face not in complex");
    return it->second;
}

LabeledComplex LabeledComplex::restricted(const Monomial& f) const {
    if (!(f.ambient() == ambient())) throw std::invalid_argument("ambient mismatch");
    LabeledComplex out;
    out.labeling_ = labeling_;
    out.faces_.resize(faces_.size());
    for (std::size_t d = 1; d < faces_.size(); ++d)
        for (const Face& face : faces_[d])
            if (divides(labels_.at(face), f)) out.faces_[d].push_back(face);
    while (!out.faces_.empty() && out.faces_.back().empty()) out.faces_.pop_back();
    out.index_faces();
    return out;
}

SimplexComplex simplex(std::vector<Monomial> labels) {
    if (labels.empty()) throw std::invalid_argument("simplex: need at least one label");
    return SimplexComplex{std::move(labels)};
}

std::vector<std::vector<int>> SimplexComplex::faces(int degree) const {
    std::vector<std::vector<int>> out;
    for (auto& s : nonempty_subsets(vertex_count()))
        if (static_cast<int>(s.size()) == degree) out.push_back(std::move(s));
    return out;
}

std::size_t SimplexComplex::face_count() const {
    return (std::size_t{1} << vertex_count()) - 1;
}

std::vector<std::pair<std::vector<int>, int>> subset_boundary(const std::vector<int>& subset) {
    std::vector<std::pair<std::vector<int>, int>> out;
    if (subset.size() < 2) return out;
    for (std::size_t k = 0; k < subset.size(); ++k) {
        std::vector<int> s = subset;
        s.erase(s.begin() + k);
        out.emplace_back(std::move(s), (k % 2 == 0) ? -1 : 1);
    }
    return out;
}

Monomial subset_label(const std::vector<int>& subset, const std::vector<Monomial>& labels) {
    Monomial acc = labels.at(subset.front() - 1);
    for (int v : subset) acc = lcm(acc, labels.at(v - 1));
    return acc;
}

}  // namespace cellres
