#pragma once

#include <string>

#include "cellres/chain_complex.hpp"
#include "cellres/monomial.hpp"

namespace cellres {

/// "X1^2*Y1^2" with exponent 1 elided; "1" for the unit monomial.
std::string render_monomial(const Monomial& m);

/// "-X2^3*Y1", "X1", "0", with an explicit coefficient when it is not +-1.
std::string render_sum(const MonomialSum& s);

/// "[12,13]" when every index is a single digit, "[{1,12},{2}]" otherwise.
std::string render_face(const Face& f);

std::string render_subset(const std::vector<int>& subset);

std::string render_tag(const BasisTag& tag);

/// Rows of space-separated rendered entries, one row per line.
std::string matrix_text(const MonomialMatrix& m);

}  // namespace cellres
