#pragma once

#include <random>

#include "molscope/mols.hpp"

namespace molscope {

using Rng = std::mt19937_64;

Permutation random_permutation(int n, Rng& rng);
Isotopism random_isotopism(int n, Rng& rng);

/// Approximately uniform latin square via the Jacobson-Matthews Markov
/// chain, started from the cyclic square.
LatinSquare random_latin_square(int n, Rng& rng, int steps = 0);

/// Random paratope: shuffle the array columns, relabel symbols in each
/// column, and read the result back as a list.
MolsList random_paratope(const MolsList& mols, Rng& rng);

/// Random isotope: the same row, column and symbol maps (one symbol map per
/// square) applied to every square; the list order is kept.
MolsList random_isotope(const MolsList& mols, Rng& rng);

}  // namespace molscope
