#pragma once

#include <span>

#include "molscope/exact.hpp"
#include "molscope/mols.hpp"

namespace molscope {

// Counts of one isotopism-closed class of k-MOLS of order n: reduced sets,
// reduced lists, all lists and all sets.
struct CountQuad {
  ExactInt rs, rl, al, as;
  bool operator==(const CountQuad&) const = default;
};

enum class CountKind { RS, RL, AL, AS };

/// (k-1)! n!^k (n-1)! RS = n!^k (n-1)! RL = AL = k! AS.
/// Throws OutOfRange unless 1 <= k < n, NonIntegral if a count would not
/// be a whole number.
CountQuad switch_counts(int n, int k, CountKind known, const ExactInt& value);

/// Reduced sets paratopic to one of the given pairwise non-paratopic
/// k-MOLS: n! n (k+2)(k+1) k sum 1/|par(M)|. Throws NonIntegral.
ExactInt reduced_sets_from_reps(int n, int k, std::span<const ExactInt> par_orders);

/// Number of pairs (A, B) with A a fixed species representative and B a
/// mate with natural first row that are paratopic to the pair P:
/// (1/|par(P)|) sum over the four aspects of |par(aspect)|.
/// Throws SizeMismatch unless P holds two squares.
ExactRational aspect_multiplicity(const MolsList& pair);

/// Latin squares in the species of a square with |par| = par: 6 n!^3 / par.
ExactInt species_size(int n, const ExactInt& par);
ExactInt species_size(const LatinSquare& square);

struct SpeciesStat {
  ExactInt theta;
  ExactInt par;
};

struct RandomLsStats {
  ExactRational p_mate;   // probability a uniform random square has a mate
  ExactRational e_theta;  // expected number of mates with natural first row
};

/// Weights each species by its size. `species` must list every species of
/// order n once.
RandomLsStats random_ls_stats(int n, std::span<const SpeciesStat> species);

}  // namespace molscope
