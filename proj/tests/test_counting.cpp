#include <doctest.h>

#include <map>

#include "molscope/canonical.hpp"
#include "molscope/census.hpp"
#include "molscope/counting.hpp"
#include "oracles.hpp"

using namespace molscope;

namespace {

MolsList affine_complete(int p) {
  std::vector<LatinSquare> sq;
  for (int x = 1; x < p; ++x) {
    std::vector<int> cells;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) cells.push_back((x * i + j) % p);
    sq.push_back(validate(p, cells));
  }
  return MolsList(sq);
}

// Pairs (A, B) with A a catalogue representative and B a mate of A whose
// first row is in order, grouped by the species of the pair.
void check_lemma(int n) {
  const SpeciesCatalogue cat = generate_species_reps(n);
  std::map<CanonicalCertificate, std::pair<MolsList, long>> classes;
  std::uint64_t total = 0, theta_sum = 0;
  for (const auto& e : cat.entries) {
    theta_sum += e.theta;
    for (const auto& b : oracle::mates(e.rep)) {
      const MolsList pair({e.rep, b});
      auto& slot = classes[certificate(pair, EquivalenceMode::SpeciesMols)];
      if (slot.second == 0) slot.first = pair;
      ++slot.second;
      ++total;
    }
  }
  CHECK(total == theta_sum);
  ExactRational sum = 0;
  for (const auto& [cert, entry] : classes) {
    const ExactRational m = aspect_multiplicity(entry.first);
    CHECK(m == entry.second);
    sum += m;
    const ExactRational scaled = m * ExactRational(par_order(entry.first));
    CHECK(boost::multiprecision::denominator(scaled) == 1);
  }
  CHECK(sum == ExactRational(theta_sum));
}

}  // namespace

TEST_CASE("switching between count kinds") {
  const CountQuad q = switch_counts(7, 2, CountKind::RL, 342480);
  CHECK(q.al == ExactInt("6263668776960000"));
  CHECK(q.rs == 342480);
  CHECK(switch_counts(7, 2, CountKind::AL, q.al) == q);
  CHECK(switch_counts(7, 2, CountKind::AS, q.as) == q);
  // k = 3: RL = 2 RS.
  CHECK(switch_counts(5, 3, CountKind::RS, 6).rl == 12);
  CHECK_THROWS_AS(switch_counts(7, 2, CountKind::AL, 7), Error);
  CHECK_THROWS_AS(switch_counts(5, 5, CountKind::RS, 1), Error);
  CHECK_THROWS_AS(switch_counts(5, 0, CountKind::RS, 1), Error);
}

TEST_CASE("reduced sets from species representatives") {
  const MolsList m5 = affine_complete(5), m7 = affine_complete(7);
  const ExactInt p5 = par_order(m5), p7 = par_order(m7);
  CHECK(reduced_sets_from_reps(5, 4, std::vector<ExactInt>{p5}) == 6);
  CHECK(reduced_sets_from_reps(7, 6, std::vector<ExactInt>{p7}) == 120);
  CHECK_THROWS_AS(reduced_sets_from_reps(5, 4, std::vector<ExactInt>{7}), Error);
}

TEST_CASE("species sizes") {
  CHECK(species_size(elementary_abelian_square(2, 2)) == 144);
  CHECK(species_size(cyclic_square(1)) == 1);
  CHECK(species_size(4, 576) == 144);
  // Species sizes of order 6 add up to all latin squares of order 6.
  const SpeciesCatalogue cat = generate_species_reps(6);
  ExactInt total = 0;
  for (const auto& e : cat.entries) total += species_size(e.rep);
  CHECK(total == ExactInt(oracle::reduced_count(6)) * factorial(6) * factorial(5));
}

TEST_CASE("random latin square statistics") {
  for (int n : {5, 6}) {
    const SpeciesCatalogue cat = generate_species_reps(n);
    std::vector<SpeciesStat> stats;
    for (const auto& e : cat.entries) stats.push_back({ExactInt(e.theta), e.par});
    const RandomLsStats r = random_ls_stats(n, stats);
    CHECK(to_string(r.p_mate) == (n == 5 ? "3/28" : "0"));
    CHECK(to_string(r.e_theta) == (n == 5 ? "9/28" : "0"));
  }
}

TEST_CASE("aspect multiplicity") {
  const auto pair = [](int x, int y) {
    const MolsList all = affine_complete(5);
    return MolsList({all[x - 1], all[y - 1]});
  };
  CHECK_THROWS_AS(aspect_multiplicity(affine_complete(5)), Error);
  CHECK(aspect_multiplicity(pair(1, 2)) > 0);
}

TEST_CASE("aspect multiplicity counts mates exhaustively at order 5") { check_lemma(5); }

TEST_CASE("aspect multiplicity counts mates exhaustively at order 4") { check_lemma(4); }
