#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cellres/cell_complex.hpp"
#include "cellres/monomial.hpp"

namespace cellres {

/// What a basis element of a free chain complex stands for.  Unit is the
/// single degree-0 generator (the empty cell); Cell/Subset come from cellular
/// and simplex builders; the Cone* kinds record component of origin inside a
/// mapping cone (cellular block and Taylor block of the target, shifted copy
/// of the source).
enum class TagKind { Unit, Cell, Subset, ConeCell, ConeTaylor, ConeShift };

struct BasisTag {
    TagKind kind = TagKind::Unit;
    Face face;                // Cell / ConeCell / ConeShift
    std::vector<int> subset;  // Subset / ConeTaylor

    auto operator<=>(const BasisTag&) const = default;
};

struct BasisElement {
    BasisTag tag;
    Monomial label;  // the multidegree of the generator
};

/// Dense matrix of MonomialSum entries.  Entries of built complexes are
/// single signed monomials; sums only arise in verification products.
class MonomialMatrix {
public:
    MonomialMatrix() = default;
    MonomialMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const MonomialSum& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    MonomialSum& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    MonomialMatrix negated() const;
    bool operator==(const MonomialMatrix&) const = default;

    /// Matrix product; inner dimensions must agree.
    friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<MonomialSum> entries_;
};

/// A bounded complex of finite-rank free modules with a declared basis per
/// degree.  diff[d] maps degree d to degree d-1 (so diff[0] is an empty
/// placeholder); basis[0] is the single Unit generator for complexes built
/// from labeled cell complexes.
struct FreeChainComplex {
    Ambient amb;
    std::vector<std::vector<BasisElement>> basis;
    std::vector<MonomialMatrix> diff;

    int top_degree() const { return static_cast<int>(basis.size()) - 1; }
    std::vector<std::size_t> ranks() const;
    std::size_t rank(int degree) const;
    /// Index of the basis element carrying this tag, -1 if absent.
    int find_basis(int degree, const BasisTag& tag) const;
};

/// The cellular chain complex of a labeled complex: degree-d basis indexed by
/// the degree-d faces plus the degree-0 empty-cell generator; the entry for a
/// codimension-1 incidence is the signed label quotient, and the degree-1 row
/// is the vertex labels.
FreeChainComplex build_cellular(const LabeledComplex& complex);

/// The full-simplex complex on the given labels (same rule on the simplex).
FreeChainComplex build_taylor(const std::vector<Monomial>& labels);

/// Drops degree 0 and shifts every degree down by one; matrices carry over
/// unchanged.  The result's degree-0 module is generator-indexed and the
/// complex is a candidate resolution of the ideal itself.
FreeChainComplex truncate_shift(const FreeChainComplex& f);

/// Multigraded twist: multiplies every basis label by the twist monomial;
/// matrices unchanged.
FreeChainComplex twist(const FreeChainComplex& f, const Monomial& t);

struct ComposeCheck {
    bool ok = true;
    int degree = 0;  // the d with diff[d-1] * diff[d] != 0
    std::size_t row = 0, col = 0;
    MonomialSum residual;
};

/// Exact verification that consecutive differentials compose to zero.
ComposeCheck compose_is_zero(const FreeChainComplex& f);

struct MinimalityCheck {
    bool minimal = true;
    int degree = 0;
    std::size_t row = 0, col = 0;
};

/// No unit entries in degrees >= 2 (degree-1 entries are the generators).
MinimalityCheck is_minimal(const FreeChainComplex& f);

/// Every nonzero entry e in column c, row r of every differential satisfies
/// e.monomial * label(row r) == label(col c) up to sign.  Holds for all
/// complexes built here; exercised as a property test.
bool is_multigraded(const FreeChainComplex& f, std::string* failure = nullptr);

/// A degree-0 chain map; maps[d] is target-rank(d) x source-rank(d).
struct ChainMap {
    FreeChainComplex source;
    FreeChainComplex target;
    std::vector<MonomialMatrix> maps;
};

struct ChainMapCheck {
    bool ok = true;
    int degree = 0;
    std::size_t row = 0, col = 0;
    MonomialSum residual;
};

/// Exact verification of target.diff * map == map * source.diff per degree.
ChainMapCheck verify_chain_map(const ChainMap& phi);

MonomialMatrix identity_matrix(Ambient amb, std::size_t size);

}  // namespace cellres
