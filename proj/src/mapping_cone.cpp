#include "cellres/mapping_cone.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cellres {

namespace {

MonomialSum widen_sum(const MonomialSum& s) {
    MonomialSum out;
    for (const auto& [m, c] : s.terms()) out.add_term(m.widened_by_leading_x(), c);
    return out;
}

FreeChainComplex retag(FreeChainComplex f, TagKind from, TagKind to) {
    for (auto& bucket : f.basis)
        for (auto& el : bucket)
            if (el.tag.kind == from) el.tag.kind = to;
    return f;
}

/// Degreewise direct sum, left block first.
FreeChainComplex direct_sum(const FreeChainComplex& a, const FreeChainComplex& b) {
    FreeChainComplex out;
    out.amb = a.amb;
    const int top = std::max(a.top_degree(), b.top_degree());
    out.basis.resize(top + 1);
    out.diff.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        if (d <= a.top_degree())
            out.basis[d].insert(out.basis[d].end(), a.basis[d].begin(), a.basis[d].end());
        if (d <= b.top_degree())
            out.basis[d].insert(out.basis[d].end(), b.basis[d].begin(), b.basis[d].end());
    }
    for (int d = 1; d <= top; ++d) {
        MonomialMatrix mat(out.basis[d - 1].size(), out.basis[d].size());
        const std::size_t row_off = d - 1 <= a.top_degree() ? a.rank(d - 1) : 0;
        const std::size_t col_off = d <= a.top_degree() ? a.rank(d) : 0;
        if (d <= a.top_degree())
            for (std::size_t r = 0; r < a.diff[d].rows(); ++r)
                for (std::size_t c = 0; c < a.diff[d].cols(); ++c)
                    mat.at(r, c) = a.diff[d].at(r, c);
        if (d <= b.top_degree())
            for (std::size_t r = 0; r < b.diff[d].rows(); ++r)
                for (std::size_t c = 0; c < b.diff[d].cols(); ++c)
                    mat.at(row_off + r, col_off + c) = b.diff[d].at(r, c);
        out.diff[d] = std::move(mat);
    }
    return out;
}

Face shift_x_up(const Face& f) {
    Face out = f;
    for (int& v : out.a) ++v;
    return out;
}

}  // namespace

FreeChainComplex widen_by_leading_x(const FreeChainComplex& f) {
    FreeChainComplex out;
    out.amb = Ambient{f.amb.m + 1, f.amb.n};
    out.basis = f.basis;
    for (auto& bucket : out.basis)
        for (auto& el : bucket) el.label = el.label.widened_by_leading_x();
    out.diff.resize(f.diff.size());
    for (int d = 1; d <= f.top_degree(); ++d) {
        MonomialMatrix mat(f.diff[d].rows(), f.diff[d].cols());
        for (std::size_t r = 0; r < mat.rows(); ++r)
            for (std::size_t c = 0; c < mat.cols(); ++c)
                mat.at(r, c) = widen_sum(f.diff[d].at(r, c));
        out.diff[d] = std::move(mat);
    }
    return out;
}

ChainMap build_phi(const EdgeWeighting& w) {
    if (w.m < 2)
        throw std::invalid_argument("build_phi: need at least one X vertex beyond the first");
    const std::int64_t alpha = min_weight(w);
    for (int j = 1; j <= w.n; ++j)
        if (w.weight(1, j) != alpha)
            throw std::invalid_argument(
                "build_phi: first X row must be constant and equal to the minimum weight");

    const Ambient big{w.m, w.n};
    const EdgeWeighting mu = delete_vertex(w, Side::X, 1);
    const VertexLabeling mu_labels = edge_weight_labels(mu);

    FreeChainComplex fmu_bar = truncate_shift(
        widen_by_leading_x(build_cellular(LabeledComplex::full(mu_labels))));

    std::vector<Monomial> taylor_labels;
    taylor_labels.reserve(w.n);
    for (int b = 1; b <= w.n; ++b)
        taylor_labels.push_back(Monomial::x(big, 1, alpha).times(Monomial::y(big, b, alpha)));
    FreeChainComplex taylor_bar = truncate_shift(build_taylor(taylor_labels));

    const Monomial tw = Monomial::x(big, 1, alpha);
    ChainMap phi;
    phi.target = direct_sum(retag(fmu_bar, TagKind::Cell, TagKind::ConeCell),
                            retag(taylor_bar, TagKind::Subset, TagKind::ConeTaylor));
    phi.source = twist(retag(std::move(fmu_bar), TagKind::Cell, TagKind::ConeShift), tw);

    phi.maps.resize(phi.source.basis.size());
    for (int d = 0; d <= phi.source.top_degree(); ++d) {
        MonomialMatrix mat(phi.target.rank(d), phi.source.rank(d));
        for (std::size_t c = 0; c < phi.source.rank(d); ++c) {
            const Face& face = phi.source.basis[d][c].tag.face;
            int r1 = phi.target.find_basis(d, BasisTag{TagKind::ConeCell, face, {}});
            if (r1 < 0) throw std::logic_error("build_phi: missing cellular target element");
            mat.at(r1, c) = MonomialSum(tw, 1);
            if (face.a.size() == 1) {
                BasisTag taylor_tag{TagKind::ConeTaylor, {}, face.b};
                int r2 = phi.target.find_basis(d, taylor_tag);
                if (r2 < 0) throw std::logic_error("build_phi: missing Taylor target element");
                // X_1^alpha * label([a,B]) / label([B]); exact since every
                // weight is >= alpha.
                Monomial coeff = quotient(tw.times(label_of(face, mu_labels).widened_by_leading_x()),
                                          phi.target.basis[d][r2].label);
                mat.at(r2, c) = MonomialSum(coeff, -1);
            }
        }
        phi.maps[d] = std::move(mat);
    }
    return phi;
}

FreeChainComplex mapping_cone(const ChainMap& phi) {
    const FreeChainComplex& u = phi.target;
    const FreeChainComplex& w = phi.source;
    FreeChainComplex out;
    out.amb = u.amb;
    const int top = std::max(u.top_degree(), w.top_degree() + 1);
    if (u.basis.empty() && w.basis.empty()) return out;  // cone of the empty map
    out.basis.resize(top + 1);
    out.diff.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        if (d <= u.top_degree())
            out.basis[d].insert(out.basis[d].end(), u.basis[d].begin(), u.basis[d].end());
        if (d - 1 >= 0 && d - 1 <= w.top_degree())
            out.basis[d].insert(out.basis[d].end(), w.basis[d - 1].begin(), w.basis[d - 1].end());
    }
    for (int d = 1; d <= top; ++d) {
        MonomialMatrix mat(out.basis[d - 1].size(), out.basis[d].size());
        const std::size_t u_rows = d - 1 <= u.top_degree() ? u.rank(d - 1) : 0;
        const std::size_t u_cols = d <= u.top_degree() ? u.rank(d) : 0;
        if (d <= u.top_degree())
            for (std::size_t r = 0; r < u.diff[d].rows(); ++r)
                for (std::size_t c = 0; c < u.diff[d].cols(); ++c)
                    mat.at(r, c) = u.diff[d].at(r, c);
        if (d - 1 <= w.top_degree()) {
            const MonomialMatrix& block = phi.maps[d - 1];
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c)
                    mat.at(r, c + u_cols) = block.at(r, c);
        }
        if (d - 1 >= 1 && d - 1 <= w.top_degree()) {
            const MonomialMatrix& block = w.diff[d - 1];
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c)
                    mat.at(r + u_rows, c + u_cols) = -block.at(r, c);
        }
        out.diff[d] = std::move(mat);
    }
    return out;
}

namespace {

BasisTag cone_to_cell_tag(const BasisTag& tag) {
    switch (tag.kind) {
        case TagKind::ConeCell:
            return BasisTag{TagKind::Cell, shift_x_up(tag.face), {}};
        case TagKind::ConeTaylor:
            return BasisTag{TagKind::Cell, Face{{1}, tag.subset}, {}};
        case TagKind::ConeShift: {
            Face f = shift_x_up(tag.face);
            f.a.insert(f.a.begin(), 1);
            return BasisTag{TagKind::Cell, std::move(f), {}};
        }
        default:
            throw std::invalid_argument("phi_psi_isomorphism: unexpected basis tag kind");
    }
}

}  // namespace

ConeIsoCheck phi_psi_isomorphism(const FreeChainComplex& cone, const FreeChainComplex& fbar) {
    if (cone.top_degree() != fbar.top_degree())
        throw std::invalid_argument("phi_psi_isomorphism: degree ranges differ");
    ConeIsoCheck out;
    out.forward.source = cone;
    out.forward.target = fbar;
    out.backward.source = fbar;
    out.backward.target = cone;
    out.forward.maps.resize(cone.basis.size());
    out.backward.maps.resize(cone.basis.size());
    const Monomial unit = Monomial::one(cone.amb);

    for (int d = 0; d <= cone.top_degree(); ++d) {
        if (cone.rank(d) != fbar.rank(d))
            throw std::invalid_argument("phi_psi_isomorphism: rank mismatch");
        MonomialMatrix fwd(fbar.rank(d), cone.rank(d));
        MonomialMatrix bwd(cone.rank(d), fbar.rank(d));
        std::vector<bool> hit(fbar.rank(d), false);
        for (std::size_t c = 0; c < cone.rank(d); ++c) {
            int r = fbar.find_basis(d, cone_to_cell_tag(cone.basis[d][c].tag));
            if (r < 0)
                throw std::invalid_argument("phi_psi_isomorphism: basis mismatch");
            if (hit[r]) throw std::invalid_argument("phi_psi_isomorphism: bijection collision");
            hit[r] = true;
            fwd.at(r, c) = MonomialSum(unit, 1);
            bwd.at(c, r) = MonomialSum(unit, 1);
            if (cone.basis[d][c].label != fbar.basis[d][r].label) {
                std::ostringstream os;
                os << "label mismatch at degree " << d << ", column " << c;
                out.failure = os.str();
            }
        }
        out.forward.maps[d] = std::move(fwd);
        out.backward.maps[d] = std::move(bwd);
    }
    if (!out.failure.empty()) return out;

    for (int d = 0; d <= cone.top_degree(); ++d) {
        if (!(out.forward.maps[d] * out.backward.maps[d] == identity_matrix(cone.amb, fbar.rank(d))) ||
            !(out.backward.maps[d] * out.forward.maps[d] == identity_matrix(cone.amb, cone.rank(d)))) {
            out.failure = "compositions are not the identity";
            return out;
        }
    }
    if (ChainMapCheck chk = verify_chain_map(out.forward); !chk.ok) {
        std::ostringstream os;
        os << "forward map fails to commute at degree " << chk.degree << " (" << chk.row << ","
           << chk.col << ")";
        out.failure = os.str();
        return out;
    }
    if (ChainMapCheck chk = verify_chain_map(out.backward); !chk.ok) {
        std::ostringstream os;
        os << "backward map fails to commute at degree " << chk.degree;
        out.failure = os.str();
        return out;
    }
    out.verified = true;
    return out;
}

}  // namespace cellres
