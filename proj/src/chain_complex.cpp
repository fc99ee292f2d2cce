#include "cellres/chain_complex.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace cellres {

MonomialMatrix MonomialMatrix::negated() const {
    MonomialMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("MonomialMatrix product: inner dimensions differ");
    MonomialMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const MonomialSum& e = a.at(r, k);
            if (e.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                if (b.at(k, c).is_zero()) continue;
                out.at(r, c) += e * b.at(k, c);
            }
        }
    return out;
}

std::vector<std::size_t> FreeChainComplex::ranks() const {
    std::vector<std::size_t> out;
    out.reserve(basis.size());
    for (const auto& bucket : basis) out.push_back(bucket.size());
    return out;
}

std::size_t FreeChainComplex::rank(int degree) const {
    if (degree < 0 || degree > top_degree()) return 0;
    return basis[degree].size();
}

int FreeChainComplex::find_basis(int degree, const BasisTag& tag) const {
    if (degree < 0 || degree > top_degree()) return -1;
    const auto& bucket = basis[degree];
    for (std::size_t k = 0; k < bucket.size(); ++k)
        if (bucket[k].tag == tag) return static_cast<int>(k);
    return -1;
}

FreeChainComplex build_cellular(const LabeledComplex& complex) {
    FreeChainComplex out;
    out.amb = complex.ambient();
    const int top = complex.top_degree();
    out.basis.resize(top >= 0 ? top + 1 : 1);
    out.diff.resize(out.basis.size());

    out.basis[0] = {BasisElement{BasisTag{TagKind::Unit, {}, {}}, Monomial::one(out.amb)}};
    std::vector<std::map<Face, int>> index(out.basis.size());
    for (int d = 1; d <= top; ++d) {
        for (const Face& f : complex.faces_by_degree()[d]) {
            index[d].emplace(f, static_cast<int>(out.basis[d].size()));
            out.basis[d].push_back(
                BasisElement{BasisTag{TagKind::Cell, f, {}}, complex.face_label(f)});
        }
    }

    for (int d = 1; d <= top; ++d) {
        MonomialMatrix mat(out.basis[d - 1].size(), out.basis[d].size());
        for (std::size_t c = 0; c < out.basis[d].size(); ++c) {
            const Face& face = out.basis[d][c].tag.face;
            const Monomial& lab = out.basis[d][c].label;
            if (d == 1) {
                mat.at(0, c) = MonomialSum(lab, 1);  // incidence with the empty cell is +1
                continue;
            }
            for (const BoundaryTerm& term : boundary(face)) {
                auto it = index[d - 1].find(term.face);
                if (it == index[d - 1].end())
                    throw std::logic_error("build_cellular: face set not downward closed");
                Monomial coeff = quotient(lab, complex.face_label(term.face));
                mat.at(it->second, c) += MonomialSum(coeff, term.sign);
            }
        }
        out.diff[d] = std::move(mat);
    }
    return out;
}

FreeChainComplex build_taylor(const std::vector<Monomial>& labels) {
    if (labels.empty()) throw std::invalid_argument("build_taylor: need at least one label");
    SimplexComplex simp = simplex(labels);
    FreeChainComplex out;
    out.amb = labels.front().ambient();
    const int top = simp.vertex_count();
    out.basis.resize(top + 1);
    out.diff.resize(out.basis.size());

    out.basis[0] = {BasisElement{BasisTag{TagKind::Unit, {}, {}}, Monomial::one(out.amb)}};
    std::vector<std::map<std::vector<int>, int>> index(out.basis.size());
    for (int d = 1; d <= top; ++d) {
        for (const auto& s : simp.faces(d)) {
            index[d].emplace(s, static_cast<int>(out.basis[d].size()));
            out.basis[d].push_back(
                BasisElement{BasisTag{TagKind::Subset, {}, s}, subset_label(s, labels)});
        }
    }

    for (int d = 1; d <= top; ++d) {
        MonomialMatrix mat(out.basis[d - 1].size(), out.basis[d].size());
        for (std::size_t c = 0; c < out.basis[d].size(); ++c) {
            const auto& subset = out.basis[d][c].tag.subset;
            const Monomial& lab = out.basis[d][c].label;
            if (d == 1) {
                mat.at(0, c) = MonomialSum(lab, 1);
                continue;
            }
            for (const auto& [sub, sign] : subset_boundary(subset)) {
                Monomial coeff = quotient(lab, subset_label(sub, labels));
                mat.at(index[d - 1].at(sub), c) += MonomialSum(coeff, sign);
            }
        }
        out.diff[d] = std::move(mat);
    }
    return out;
}

FreeChainComplex truncate_shift(const FreeChainComplex& f) {
    if (f.top_degree() < 1)
        throw std::invalid_argument("truncate_shift: complex must have degree >= 1");
    FreeChainComplex out;
    out.amb = f.amb;
    out.basis.assign(f.basis.begin() + 1, f.basis.end());
    out.diff.resize(out.basis.size());
    for (int d = 1; d <= out.top_degree(); ++d) out.diff[d] = f.diff[d + 1];
    return out;
}

FreeChainComplex twist(const FreeChainComplex& f, const Monomial& t) {
    FreeChainComplex out = f;
    for (auto& bucket : out.basis)
        for (auto& el : bucket) el.label = el.label.times(t);
    return out;
}

ComposeCheck compose_is_zero(const FreeChainComplex& f) {
    for (int d = 2; d <= f.top_degree(); ++d) {
        MonomialMatrix prod = f.diff[d - 1] * f.diff[d];
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c)
                if (!prod.at(r, c).is_zero()) return {false, d, r, c, prod.at(r, c)};
    }
    return {};
}

MinimalityCheck is_minimal(const FreeChainComplex& f) {
    for (int d = 2; d <= f.top_degree(); ++d)
        for (std::size_t r = 0; r < f.diff[d].rows(); ++r)
            for (std::size_t c = 0; c < f.diff[d].cols(); ++c)
                if (f.diff[d].at(r, c).is_unit()) return {false, d, r, c};
    return {};
}

bool is_multigraded(const FreeChainComplex& f, std::string* failure) {
    for (int d = 1; d <= f.top_degree(); ++d)
        for (std::size_t c = 0; c < f.diff[d].cols(); ++c)
            for (std::size_t r = 0; r < f.diff[d].rows(); ++r) {
                const MonomialSum& e = f.diff[d].at(r, c);
                if (e.is_zero()) continue;
                for (const auto& [mono, coeff] : e.terms()) {
                    if (mono.times(f.basis[d - 1][r].label) != f.basis[d][c].label) {
                        if (failure) {
                            std::ostringstream os;
                            os << "inhomogeneous entry at degree " << d << " (" << r << "," << c
                               << ")";
                            *failure = os.str();
                        }
                        return false;
                    }
                }
            }
    return true;
}

ChainMapCheck verify_chain_map(const ChainMap& phi) {
    const int top = std::min(phi.source.top_degree(), phi.target.top_degree());
    for (int d = 1; d <= top; ++d) {
        MonomialMatrix lhs = phi.target.diff[d] * phi.maps[d];
        MonomialMatrix rhs = phi.maps[d - 1] * phi.source.diff[d];
        for (std::size_t r = 0; r < lhs.rows(); ++r)
            for (std::size_t c = 0; c < lhs.cols(); ++c) {
                MonomialSum residual = lhs.at(r, c);
                residual -= rhs.at(r, c);
                if (!residual.is_zero()) return {false, d, r, c, residual};
            }
    }
    return {};
}

MonomialMatrix identity_matrix(Ambient amb, std::size_t size) {
    MonomialMatrix out(size, size);
    for (std::size_t k = 0; k < size; ++k) out.at(k, k) = MonomialSum(Monomial::one(amb), 1);
    return out;
}

}  // namespace cellres
