#include <doctest.h>

#include <atomic>
#include <set>

#include "golden.hpp"
#include "molscope/census.hpp"
#include "molscope/counting.hpp"
#include "molscope/random.hpp"
#include "oracles.hpp"

using namespace molscope;

namespace {

const golden::CountRow* find_row(std::span<const golden::CountRow> rows, int n, int k) {
  for (const auto& r : rows)
    if (r.n == n && r.k == k) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("parallel_for visits every index and rethrows") {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(100, 4, [&](int i) { ++hits[static_cast<std::size_t>(i)]; });
  for (const auto& h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, 3, [](int i) {
    if (i == 7) throw Error(ErrorKind::OutOfRange, "seven");
  }),
                  Error);
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("reduced square enumeration") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t count = 0;
    LatinSquare prev;
    for_each_reduced_square(n, [&](const LatinSquare& sq) {
      CHECK(is_reduced(sq));
      if (count) CHECK(prev < sq);
      prev = sq;
      ++count;
      return true;
    });
    CHECK(count == oracle::reduced_count(n));
  }
}

TEST_CASE("cycle structure key is a paratopism invariant") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const LatinSquare sq = random_latin_square(7, rng);
    const auto key = cycle_structure_key(sq);
    for (int i = 0; i < 10; ++i) CHECK(cycle_structure_key(random_paratope(MolsList(sq), rng)[0]) == key);
  }
}

TEST_CASE("species catalogues for small orders") {
  const int species[] = {0, 1, 1, 1, 2, 2, 12};
  for (int n = 1; n <= 6; ++n) {
    const SpeciesCatalogue cat = generate_species_reps(n);
    CHECK(static_cast<int>(cat.entries.size()) == species[n]);
    CHECK(cat.reduced_squares == oracle::reduced_count(n));
    for (const auto& e : cat.entries) {
      CHECK(is_reduced(e.rep));
      CHECK(e.certificate == certificate(MolsList(e.rep), EquivalenceMode::SpeciesLS));
      CHECK(e.theta == theta(e.rep));
    }
  }
  CHECK_THROWS_AS(generate_species_reps(9), Error);
  CHECK_THROWS_AS(generate_species_reps(0), Error);
}

TEST_CASE("catalogue from supplied squares, with checkpoints") {
  Rng rng(12);
  std::vector<LatinSquare> squares;
  for (int i = 0; i < 200; ++i) squares.push_back(random_latin_square(6, rng));
  const auto dir = std::filesystem::temp_directory_path() / "molscope_census_test";
  std::filesystem::remove_all(dir);
  CensusOptions opt;
  opt.checkpoint_dir = dir;
  const SpeciesCatalogue a = catalogue_from_squares(squares, opt);
  const SpeciesCatalogue b = catalogue_from_squares(squares, opt);  // resumes from the journal
  const SpeciesCatalogue full = generate_species_reps(6);
  CHECK(a.entries.size() == b.entries.size());
  CHECK(a.entries.size() <= full.entries.size());
  for (const auto& e : a.entries) CHECK(full.find(e.certificate) != nullptr);
  // A different input must not reuse the old journal.
  squares.resize(5);
  const SpeciesCatalogue c = catalogue_from_squares(squares, opt);
  CHECK(c.entries.size() <= 5);
  std::filesystem::remove_all(dir);
}

TEST_CASE("catalogue text round trip") {
  const SpeciesCatalogue cat = generate_species_reps(5);
  const SpeciesCatalogue back = parse_catalogue(format_catalogue(cat));
  REQUIRE(back.entries.size() == cat.entries.size());
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    CHECK(back.entries[i].certificate == cat.entries[i].certificate);
    CHECK(back.entries[i].rep == cat.entries[i].rep);
    CHECK(back.entries[i].theta == cat.entries[i].theta);
    CHECK(back.entries[i].par == cat.entries[i].par);
  }
  CHECK(parse_squares(format_catalogue(cat)).size() == cat.entries.size());
}

TEST_CASE("MOLS census rows up to order 6") {
  for (int n = 2; n <= 6; ++n) {
    const SpeciesCatalogue cat = generate_species_reps(n);
    const MolsCensus census = build_mols_census(cat, n - 1);
    struct Variant {
      bool maximal, lists;
      std::span<const golden::CountRow> expected;
    };
    const Variant variants[] = {{true, false, golden::kMaxSets},
                                {false, false, golden::kAllSets},
                                {true, true, golden::kMaxLists},
                                {false, true, golden::kAllLists}};
    for (const auto& v : variants) {
      std::set<int> ks;
      for (const auto& [k, species] : census.by_k) {
        const auto reps = v.maximal ? census.maximal(k) : species;
        if (reps.empty()) continue;
        ks.insert(k);
        const CensusRow row = classify_counts(n, k, reps, v.maximal, v.lists);
        const golden::CountRow* g = find_row(v.expected, n, k);
        REQUIRE_MESSAGE(g, "n=" << n << " k=" << k);
        CHECK(row.equality == ExactInt(g->equality));
        CHECK(row.isotopism == g->isotopism);
        CHECK(row.trisotopism == g->trisotopism);
        CHECK(row.paratopism == g->paratopism);
        const ExactInt rs = v.lists ? row.equality / factorial(k - 1) : row.equality;
        CHECK_NOTHROW(switch_counts(n, k, CountKind::RS, rs));
      }
      for (const auto& g : v.expected)
        if (g.n == n) CHECK(ks.contains(g.k));
    }
  }
}

TEST_CASE("sets of 2-MOLS up to isotopism match lists up to trisotopism") {
  const SpeciesCatalogue cat = generate_species_reps(5);
  const MolsCensus census = build_mols_census(cat, 2);
  const auto& reps = census.by_k.at(2);
  CHECK(classify_counts(5, 2, reps, false, false).isotopism == classify_counts(5, 2, reps, false, true).trisotopism);
}

TEST_CASE("census over a truncated k range uses the maximality test") {
  const SpeciesCatalogue cat = generate_species_reps(5);
  const MolsCensus census = build_mols_census(cat, 2);
  CHECK(census.k_max == 2);
  CHECK(census.by_k.at(2).size() == 1);
  CHECK(census.maximal(2).empty());
  CHECK(census.maximal(1).size() == 1);
}

TEST_CASE("tables for order 5") {
  const SpeciesCatalogue cat = generate_species_reps(5);
  const MolsCensus census = build_mols_census(cat, 4);
  const auto top = census.maximal(4);
  REQUIRE(top.size() == 1);
  const auto ct = common_transversal_table(top);
  CHECK(ct.size() == 1);
  CHECK(species_involvement_table(top) == std::map<int, int>{{1, 1}});
  const auto planar = planar_certificates(census);
  CHECK(planarity_type(top[0].rep, planar) == PlanarityType::P);
  CHECK(planarity_type(census.by_k.at(2)[0].rep, planar) == PlanarityType::P);
  CHECK(planarity_profile(top[0].rep, planar) == "P");
  CHECK_THROWS_AS(planar_certificates(build_mols_census(cat, 2)), Error);

  const MateStats stats = mate_stats(cat);
  CHECK(to_string(stats.species_with_mate) == "1/2");
  CHECK(to_string(stats.p_mate) == "3/28");
  CHECK(to_string(stats.e_theta) == "9/28");
  CHECK(log2_theta_table(cat) == std::map<int, int>{{1, 1}});
}
