#include "molscope/counting.hpp"

#include "molscope/canonical.hpp"

namespace molscope {

namespace {

ExactInt exact_div(const ExactInt& num, const ExactInt& den, const char* what) {
  if (num % den != 0) {
    throw Error(ErrorKind::NonIntegral, std::string(what) + ": " + num.str() + " / " + den.str());
  }
  return num / den;
}

ExactInt power(const ExactInt& base, int e) {
  ExactInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_range(int n, int k) {
  if (k < 1 || k >= n) throw Error(ErrorKind::OutOfRange, "need 1 <= k < n");
}

}  // namespace

CountQuad switch_counts(int n, int k, CountKind known, const ExactInt& value) {
  check_range(n, k);
  const ExactInt rl_factor = power(factorial(n), k) * factorial(n - 1);
  const ExactInt rs_factor = factorial(k - 1) * rl_factor;
  const ExactInt as_factor = factorial(k);
  ExactInt al;
  switch (known) {
    case CountKind::RS: al = value * rs_factor; break;
    case CountKind::RL: al = value * rl_factor; break;
    case CountKind::AL: al = value; break;
    case CountKind::AS: al = value * as_factor; break;
  }
  return {exact_div(al, rs_factor, "RS"), exact_div(al, rl_factor, "RL"), al,
          exact_div(al, as_factor, "AS")};
}

ExactInt reduced_sets_from_reps(int n, int k, std::span<const ExactInt> par_orders) {
  check_range(n, k);
  ExactRational sum = 0;
  for (const ExactInt& p : par_orders) {
    if (p <= 0) throw Error(ErrorKind::OutOfRange, "group orders must be positive");
    sum += ExactRational(ExactInt(1), p);
  }
  const ExactRational total = sum * factorial(n) * n * (k + 2) * (k + 1) * k;
  if (denominator(total) != 1) throw Error(ErrorKind::NonIntegral, "reduced sets: " + to_string(total));
  return numerator(total);
}

ExactRational aspect_multiplicity(const MolsList& pair) {
  if (pair.size() != 2) throw Error(ErrorKind::SizeMismatch, "need a pair of MOLS");
  ExactInt sum = 0;
  for (const LatinSquare& a : aspects(pair)) sum += par_order(MolsList(a));
  return ExactRational(sum, par_order(pair));
}

ExactInt species_size(int n, const ExactInt& par) {
  return exact_div(6 * power(factorial(n), 3), par, "species size");
}

ExactInt species_size(const LatinSquare& square) {
  return species_size(square.order(), par_order(MolsList(square)));
}

RandomLsStats random_ls_stats(int n, std::span<const SpeciesStat> species) {
  ExactInt total = 0, with_mate = 0, mates = 0;
  for (const SpeciesStat& s : species) {
    const ExactInt size = species_size(n, s.par);
    total += size;
    if (s.theta > 0) with_mate += size;
    mates += s.theta * size;
  }
  if (total == 0) throw Error(ErrorKind::OutOfRange, "no species given");
  return {ExactRational(with_mate, total), ExactRational(mates, total)};
}

}  // namespace molscope
