#pragma once

#include "qha/quasi_hopf.hpp"

namespace qha::corpus {

/// k as the trivial quasi-Hopf algebra (dim 1).
HopfPtr trivial(Field f);

/// Group algebra k[Z/2], basis {1, g}; Hopf (Φ = 1⊗1⊗1, S = id, α = β = 1).
HopfPtr kz2(Field f);

/// Group algebra k[Z/4], basis {1, g, g², g³}; Hopf with S(g) = g³.
HopfPtr kz4(Field f);

/// Sweedler's 4-dimensional Hopf algebra: basis {1, g, x, gx},
/// g² = 1, x² = 0, xg = -gx, Δ(g) = g⊗g, Δ(x) = 1⊗x + x⊗g.
HopfPtr sweedler(Field f);

/// H(2): k[Z/2] with Φ = 1⊗1⊗1 − 2 p⊗p⊗p for p = (1−g)/2, S = id,
/// α = g, β = 1. A genuinely non-coassociative quasi-Hopf algebra.
HopfPtr h2(Field f);

/// All five corpus algebras with their file-stem names.
std::vector<std::pair<std::string, HopfPtr>> all(Field f);

} // namespace qha::corpus
