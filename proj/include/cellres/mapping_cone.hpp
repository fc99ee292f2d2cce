#pragma once

#include <string>

#include "cellres/chain_complex.hpp"
#include "cellres/weighting.hpp"

namespace cellres {

/// Re-embeds a complex over k[X_1..X_m, Y*] into k[X_1..X_{m+1}, Y*]: labels
/// and matrix entries are widened by a leading X variable; basis tags keep
/// their original indices.
FreeChainComplex widen_by_leading_x(const FreeChainComplex& f);

/// The chain map that grows the truncated resolution by one X vertex.
///
/// Input: a weighting on K_{m,n} with m >= 2 whose FIRST row is constant and
/// equal to the global minimum weight alpha (the distinguished vertex).
/// Writing mu for the weighting with that row deleted, the map is
///
///   phi : (truncated F^mu, twisted by X_1^alpha)  -->  truncated F^mu (+) truncated Taylor
///
/// where the Taylor block is built on the labels X_1^alpha Y_b^alpha.  On a
/// basis face [A,B] the first component is multiplication by X_1^alpha and
/// the second is zero when |A| >= 2, and minus the label quotient
/// X_1^alpha * label([a,B]) / label([B]) times [B] when A = {a}.
/// Source tags carry kind ConeShift, target tags ConeCell / ConeTaylor.
ChainMap build_phi(const EdgeWeighting& w);

/// Cone(phi)_i = target_i (+) source_{i-1} with the block differential
/// (d_target, phi; 0, -d_source).  Basis per degree: target block first
/// (ConeCell then ConeTaylor), then the shifted source block (ConeShift).
FreeChainComplex mapping_cone(const ChainMap& phi);

struct ConeIsoCheck {
    ChainMap forward;   // cone -> fbar, a unit-entry basis bijection
    ChainMap backward;  // its inverse
    bool verified = false;
    std::string failure;
};

/// Builds the basis bijections between Cone(phi) and the truncated complex of
/// the full weighting (ConeCell [A,B] <-> [A+1,B]; ConeTaylor [B] <-> [{1},B];
/// ConeShift [A,B] <-> [{1} union A+1, B]) and verifies that they are inverse
/// chain isomorphisms.  Throws on structural basis mismatch; returns
/// verified=false when the bijection exists but fails a check.
ConeIsoCheck phi_psi_isomorphism(const FreeChainComplex& cone, const FreeChainComplex& fbar);

}  // namespace cellres
