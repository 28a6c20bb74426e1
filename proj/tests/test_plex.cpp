#include <doctest.h>

#include "molscope/exact_cover.hpp"
#include "molscope/plex.hpp"
#include "molscope/random.hpp"
#include "oracles.hpp"

using namespace molscope;

namespace {

std::set<std::vector<int>> as_sets(const PlexCatalogue& cat) {
  std::set<std::vector<int>> out;
  for (int i = 0; i < cat.size(); ++i) {
    std::vector<int> cells;
    cat[i].cells.for_each([&](int c) { cells.push_back(c); });
    out.insert(cells);
  }
  return out;
}

PlexCatalogue transversal_catalogue(const LatinSquare& sq) {
  return enumerate_plexes(build_profile(MolsList(sq)), 1);
}

}  // namespace

TEST_CASE("small mate counts") {
  CHECK(theta(cyclic_square(3)) == 1);
  CHECK(theta(elementary_abelian_square(2, 2)) == 2);
  CHECK(theta(cyclic_square(5)) == 3);
  CHECK(theta(cyclic_square(4)) == 0);
  CHECK(theta(cyclic_square(6)) == 0);
  CHECK(transversal_catalogue(cyclic_square(4)).empty());
}

TEST_CASE("transversals and mates match brute force") {
  Rng rng(5);
  for (int n = 3; n <= 7; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const LatinSquare sq = random_latin_square(n, rng);
      const PlexCatalogue cat = transversal_catalogue(sq);
      CHECK(as_sets(cat) == oracle::transversals(MolsList(sq)));
      CHECK(count_partitions(cat) == oracle::mates(sq).size());
    }
}

TEST_CASE("plexes are valid and p-partitions are counted") {
  Rng rng(9);
  const LatinSquare sq = random_latin_square(6, rng);
  const MolsList one(sq);
  for (int p : {1, 2, 3}) {
    const PlexCatalogue cat = enumerate_plexes(build_profile(one), p);
    for (int i = 0; i < cat.size(); ++i) {
      CHECK(cat[i].cells.size() == 6 * p);
      CHECK(is_plex(one, cat[i].cells, p));
    }
    // Compare against an exact cover of the cells by the catalogue.
    std::vector<std::vector<int>> parts;
    for (int i = 0; i < cat.size(); ++i) {
      std::vector<int> cells;
      cat[i].cells.for_each([&](int c) { cells.push_back(c); });
      parts.push_back(cells);
    }
    CHECK(count_partitions(cat) == exact_cover::solve_count(exact_cover::partition_instance(parts, 6)));
  }
  // The whole square is the only 6-plex.
  CHECK(enumerate_plexes(build_profile(one), 6).size() == 1);
  CHECK(count_partitions(enumerate_plexes(build_profile(one), 4)) == 0);
  CHECK_THROWS_AS(enumerate_plexes(build_profile(one), 7), Error);
}

TEST_CASE("for_each_partition yields disjoint covers in order") {
  const PlexCatalogue cat = transversal_catalogue(cyclic_square(7));
  std::uint64_t seen = 0;
  for_each_partition(cat, [&](std::span<const int> parts) {
    CellSet all;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
      CHECK(all.disjoint(cat[parts[static_cast<std::size_t>(i)]].cells));
      CHECK(cat[parts[static_cast<std::size_t>(i)]].cells.contains(7, 0, i));
      all |= cat[parts[static_cast<std::size_t>(i)]].cells;
    }
    CHECK(all == full_cell_set(7));
    ++seen;
    return true;
  });
  CHECK(seen == count_partitions(cat));
  int calls = 0;
  for_each_partition(cat, [&](std::span<const int>) { return ++calls < 3; });
  CHECK(calls == 3);
}

TEST_CASE("skip table") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + trial % 4;
    const PlexCatalogue cat = transversal_catalogue(random_latin_square(n, rng));
    for (int i = 0; i < cat.size(); ++i)
      for (int r = 0; r < n; ++r) {
        int j = i + 1;
        while (j < cat.size() && cat[j].cells.row_mask(n, r) == cat[i].cells.row_mask(n, r)) ++j;
        REQUIRE(cat.skip(i, r) == j);
      }
  }
}

TEST_CASE("profile width and catalogue cap") {
  CHECK(build_profile(read_mols(oracle::fixture("order10_AB.txt"))).width_bits() == 30);
  try {
    enumerate_plexes(build_profile(MolsList(cyclic_square(7))), 1, 100);
    FAIL("expected CatalogueOverflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CatalogueOverflow);
  }
}

TEST_CASE("max disjoint and alpha") {
  // Z_5 splits into 5 disjoint transversals; a square without a mate cannot.
  CHECK(max_disjoint(transversal_catalogue(cyclic_square(5))) == 5);
  CHECK(alpha(cyclic_square(5)) >= 1);
  CHECK_THROWS_AS(alpha(cyclic_square(6)), Error);
}
