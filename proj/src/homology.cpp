#include "cellres/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cellres {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// Smallest nonzero entry (by absolute value) of the trailing submatrix.
bool find_pivot(const IntegerMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    BigInt best;
    for (std::size_t r = t; r < a.rows(); ++r)
        for (std::size_t c = t; c < a.cols(); ++c) {
            const BigInt& v = a.at(r, c);
            if (v == 0) continue;
            BigInt av = abs_big(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pr = r;
                pc = c;
            }
        }
    return found;
}

void swap_rows(IntegerMatrix& a, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(r1, c), a.at(r2, c));
}

void swap_cols(IntegerMatrix& a, std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, c1), a.at(r, c2));
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntegerMatrix a) {
    std::vector<BigInt> invariants;
    const std::size_t bound = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < bound; ++t) {
        std::size_t pr = t, pc = t;
        if (!find_pivot(a, t, pr, pc)) break;
        swap_rows(a, t, pr);
        swap_cols(a, t, pc);

        for (;;) {
            bool clean = true;
            for (std::size_t r = t + 1; r < a.rows(); ++r) {
                if (a.at(r, t) == 0) continue;
                BigInt q = a.at(r, t) / a.at(t, t);
                if (q != 0)
                    for (std::size_t c = t; c < a.cols(); ++c) a.at(r, c) -= q * a.at(t, c);
                if (a.at(r, t) != 0) {
                    // Remainder became the new, smaller pivot.
                    swap_rows(a, t, r);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < a.cols(); ++c) {
                if (a.at(t, c) == 0) continue;
                BigInt q = a.at(t, c) / a.at(t, t);
                if (q != 0)
                    for (std::size_t r = t; r < a.rows(); ++r) a.at(r, c) -= q * a.at(r, t);
                if (a.at(t, c) != 0) {
                    swap_cols(a, t, c);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Enforce the divisibility chain: fold any non-multiple into the
            // pivot's row and restart the reduction.
            bool divides_all = true;
            for (std::size_t r = t + 1; r < a.rows() && divides_all; ++r)
                for (std::size_t c = t + 1; c < a.cols() && divides_all; ++c)
                    if (a.at(r, c) % a.at(t, t) != 0) {
                        for (std::size_t cc = t; cc < a.cols(); ++cc)
                            a.at(t, cc) += a.at(r, cc);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (a.at(t, t) < 0) a.at(t, t) = -a.at(t, t);
        invariants.push_back(a.at(t, t));
    }
    return invariants;
}

std::size_t field_rank(const std::vector<BigInt>& invariants, int characteristic) {
    if (characteristic == 0) return invariants.size();
    std::size_t rank = 0;
    for (const BigInt& d : invariants)
        if (d % characteristic != 0) ++rank;
    return rank;
}

bool HomologyProfile::all_zero() const {
    for (long b : betti)
        if (b != 0) return false;
    return true;
}

HomologyProfile homology(const SignComplex& complex, int characteristic) {
    if (characteristic < 0) throw std::invalid_argument("characteristic must be 0 or a prime");
    HomologyProfile out;
    out.characteristic = characteristic;
    const int top = complex.top_degree();
    std::vector<std::vector<BigInt>> inv(top + 2);
    for (int d = 1; d <= top; ++d) inv[d] = smith_normal_form(complex.diff[d]);

    out.betti.resize(top + 1, 0);
    for (int d = 0; d <= top; ++d) {
        std::size_t rd = d >= 1 ? field_rank(inv[d], characteristic) : 0;
        std::size_t rup = d + 1 <= top ? field_rank(inv[d + 1], characteristic) : 0;
        out.betti[d] = static_cast<long>(complex.dims[d]) - static_cast<long>(rd) -
                       static_cast<long>(rup);
        if (d + 1 <= top) {
            std::vector<BigInt> tors;
            for (const BigInt& v : inv[d + 1])
                if (v > 1) tors.push_back(v);
            if (!tors.empty()) out.torsion.emplace_back(d, std::move(tors));
        }
    }
    return out;
}

SignComplex augmented_sign_complex(const LabeledComplex& complex) {
    if (complex.is_empty())
        throw std::invalid_argument("augmented_sign_complex: empty complex");
    SignComplex out;
    const int top = complex.top_degree();
    out.dims.resize(top + 1, 0);
    out.diff.resize(top + 1);
    out.dims[0] = 1;
    std::vector<std::map<Face, int>> index(top + 1);
    for (int d = 1; d <= top; ++d) {
        const auto& faces = complex.faces_by_degree()[d];
        out.dims[d] = faces.size();
        for (std::size_t k = 0; k < faces.size(); ++k) index[d].emplace(faces[k], k);
    }
    for (int d = 1; d <= top; ++d) {
        IntegerMatrix mat(out.dims[d - 1], out.dims[d]);
        const auto& faces = complex.faces_by_degree()[d];
        for (std::size_t c = 0; c < faces.size(); ++c) {
            if (d == 1) {
                mat.at(0, c) = 1;
                continue;
            }
            for (const BoundaryTerm& term : boundary(faces[c]))
                mat.at(index[d - 1].at(term.face), c) = term.sign;
        }
        out.diff[d] = std::move(mat);
    }
    return out;
}

HomologyProfile reduced_homology(const LabeledComplex& complex, int characteristic) {
    return homology(augmented_sign_complex(complex), characteristic);
}

bool is_acyclic(const LabeledComplex& complex, int characteristic) {
    return reduced_homology(complex, characteristic).all_zero();
}

SignComplex strand(const FreeChainComplex& f, const Monomial& multidegree) {
    SignComplex out;
    const int top = f.top_degree();
    std::vector<std::vector<int>> keep(top + 1);
    for (int d = 0; d <= top; ++d)
        for (std::size_t k = 0; k < f.rank(d); ++k)
            if (divides(f.basis[d][k].label, multidegree))
                keep[d].push_back(static_cast<int>(k));
    int eff_top = top;
    while (eff_top > 0 && keep[eff_top].empty()) --eff_top;
    out.dims.resize(eff_top + 1);
    out.diff.resize(eff_top + 1);
    for (int d = 0; d <= eff_top; ++d) out.dims[d] = keep[d].size();
    for (int d = 1; d <= eff_top; ++d) {
        IntegerMatrix mat(out.dims[d - 1], out.dims[d]);
        for (std::size_t c = 0; c < keep[d].size(); ++c)
            for (std::size_t r = 0; r < keep[d - 1].size(); ++r) {
                const MonomialSum& e = f.diff[d].at(keep[d - 1][r], keep[d][c]);
                if (e.is_zero()) continue;
                auto [mono, coeff] = e.single_term();
                mat.at(r, c) = coeff;
            }
        out.diff[d] = std::move(mat);
    }
    return out;
}

}  // namespace cellres
