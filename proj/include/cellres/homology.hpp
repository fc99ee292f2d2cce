#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <utility>
#include <vector>

#include "cellres/cell_complex.hpp"
#include "cellres/chain_complex.hpp"

namespace cellres {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix over arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> entries_;
};

/// The nonzero diagonal of the Smith normal form: positive invariant factors
/// d_1 | d_2 | ... (so rank over Q is their count, rank over GF(p) is the
/// count of those not divisible by p, and the factors > 1 are the torsion).
std::vector<BigInt> smith_normal_form(IntegerMatrix a);

/// Rank of an integer matrix over the field of the given characteristic
/// (0 for the rationals, a prime p for GF(p)), read off the invariant factors.
std::size_t field_rank(const std::vector<BigInt>& invariants, int characteristic);

/// A chain complex of free Z-modules given by integer matrices; diff[d] maps
/// degree d to degree d-1 (diff[0] unused).
struct SignComplex {
    std::vector<std::size_t> dims;
    std::vector<IntegerMatrix> diff;

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
};

/// Homology ranks over the chosen coefficient field plus the integer torsion
/// invariants found along the way (reported whatever the characteristic).
///
/// betti[d] is dim_k H_d of the given complex.  For the augmented complexes
/// built from cell complexes, chain degree d corresponds to reduced homology
/// in dimension d-1, so betti[0] is the reduced rank "below" the vertices
/// (zero exactly when the complex is nonempty).
struct HomologyProfile {
    int characteristic = 0;
    std::vector<long> betti;
    std::vector<std::pair<int, std::vector<BigInt>>> torsion;  // (degree, invariants > 1)

    bool all_zero() const;
};

HomologyProfile homology(const SignComplex& complex, int characteristic);

/// The augmented incidence-sign complex of a labeled complex: degree 0 is the
/// empty cell, degree d the degree-d faces, entries the boundary signs (the
/// empty-cell incidence of every vertex is +1).
SignComplex augmented_sign_complex(const LabeledComplex& complex);

/// Reduced homology of a nonempty labeled complex over the given
/// characteristic; throws std::invalid_argument on the empty complex (the
/// empty-or-acyclic branch belongs to the caller).
HomologyProfile reduced_homology(const LabeledComplex& complex, int characteristic);

bool is_acyclic(const LabeledComplex& complex, int characteristic);

/// The multigraded strand of a built complex at f: degree-d slots are the
/// basis elements whose label divides f, and each surviving entry specializes
/// to its sign.  Independent of the cell-complex restriction path; the two
/// must agree degree-for-degree (the strand's degree d matches the restricted
/// complex's reduced dimension d-1).
SignComplex strand(const FreeChainComplex& f, const Monomial& multidegree);

}  // namespace cellres
