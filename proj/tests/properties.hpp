#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "molscope/canonical.hpp"
#include "molscope/exact_cover.hpp"
#include "molscope/io.hpp"
#include "molscope/plex.hpp"
#include "molscope/random.hpp"
#include "oracles.hpp"

namespace props {

using namespace molscope;

struct Outcome {
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (!failures++) first_failure = what;
  }
  bool ok() const { return failures == 0 && cases > 0; }
};

// Transversal sets and 1-partition counts from the plex search and from
// dancing links, on `per_order` random squares of each order 5..8.
inline Outcome oracle_equivalence(int per_order, unsigned seed) {
  Outcome out;
  Rng rng(seed);
  for (int n = 5; n <= 8; ++n)
    for (int i = 0; i < per_order; ++i) {
      const LatinSquare sq = random_latin_square(n, rng);
      const MolsList one(sq);
      const PlexCatalogue cat = enumerate_plexes(build_profile(one), 1);
      std::set<std::vector<int>> plex;
      for (int j = 0; j < cat.size(); ++j) {
        std::vector<int> cells;
        cat[j].cells.for_each([&](int c) { cells.push_back(c); });
        plex.insert(cells);
      }
      const auto dlx = exact_cover::solve_all(exact_cover::transversal_instance(one));
      const std::set<std::vector<int>> dlx_set(dlx.begin(), dlx.end());
      const std::uint64_t theta_dlx = exact_cover::solve_count(exact_cover::partition_instance(dlx, n));
      ++out.cases;
      if (plex != dlx_set || dlx.size() != dlx_set.size() || count_partitions(cat) != theta_dlx)
        out.fail("order " + std::to_string(n) + " square:\n" + format_square(sq));
    }
  return out;
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "rigid_8226.txt", "theta4.txt",    "beta.txt",      "busy.txt",     "ea_9.txt",      "order10_A.txt",
      "order10_B.txt",  "order10_C.txt", "order10_AB.txt", "mols_4_5.txt", "cyclic_7.txt"};
  return names;
}

inline MolsList load_fixture(const std::string& name) {
  const auto squares = read_squares(oracle::fixture(name));
  return squares.size() == 1 ? MolsList(squares[0]) : MolsList(squares);
}

// Species certificates of random paratopes, and list-isotopism certificates
// of random isotopes, agree with those of the fixture itself.
inline Outcome certificate_invariance(int trials, unsigned seed) {
  Outcome out;
  Rng rng(seed);
  for (const auto& name : fixture_names()) {
    const MolsList m = load_fixture(name);
    const EquivalenceMode species = m.size() == 1 ? EquivalenceMode::SpeciesLS : EquivalenceMode::SpeciesMols;
    const auto base = certificate(m, species);
    const auto base_iso = certificate(m, EquivalenceMode::IsotopismList);
    for (int i = 0; i < trials; ++i) {
      ++out.cases;
      if (certificate(random_paratope(m, rng), species) != base) out.fail(name + ": paratope changed the certificate");
      if (i % 10 == 0 && certificate(random_isotope(m, rng), EquivalenceMode::IsotopismList) != base_iso)
        out.fail(name + ": isotope changed the list certificate");
    }
  }
  return out;
}

// Equal certificates under a finer notion imply equal certificates under
// every coarser one, over a pool of lists with many coincidences.
inline Outcome mode_refinement(unsigned seed) {
  Outcome out;
  Rng rng(seed);
  std::vector<MolsList> pool;
  const MolsList complete = load_fixture("mols_4_5.txt");
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (x != y) pool.push_back(MolsList({complete[x], complete[y]}));
  const int base = static_cast<int>(pool.size());
  for (int i = 0; i < 40; ++i) {
    const MolsList& m = pool[static_cast<std::size_t>(i % base)];
    pool.push_back(i % 2 ? random_isotope(m, rng) : random_paratope(m, rng));
  }
  for (int i = 0; i < 3; ++i) {
    // Order-7 pairs from mates of random squares with a mate.
    for (;;) {
      const LatinSquare sq = random_latin_square(7, rng);
      const PlexCatalogue cat = enumerate_plexes(build_profile(MolsList(sq)), 1);
      std::vector<int> cells(49);
      bool found = false;
      for_each_partition(cat, [&](std::span<const int> parts) {
        for (int s = 0; s < 7; ++s)
          cat[parts[static_cast<std::size_t>(s)]].cells.for_each([&](int c) { cells[static_cast<std::size_t>(c)] = s; });
        found = true;
        return false;
      });
      if (!found) continue;
      const MolsList pair({sq, validate(7, cells)});
      pool.push_back(pair);
      pool.push_back(random_isotope(pair, rng));
      pool.push_back(MolsList({pair[1], pair[0]}));
      break;
    }
  }
  using M = EquivalenceMode;
  const std::pair<M, M> chain[] = {{M::IsotopismList, M::TrisotopismList}, {M::TrisotopismList, M::SpeciesMols},
                                   {M::IsotopismSet, M::TrisotopismSet},   {M::TrisotopismSet, M::SpeciesMols},
                                   {M::IsotopismList, M::IsotopismSet},    {M::TrisotopismList, M::TrisotopismSet}};
  std::vector<std::vector<CanonicalCertificate>> certs;
  for (const auto& m : pool) {
    std::vector<CanonicalCertificate> c;
    for (M mode : {M::IsotopismList, M::IsotopismSet, M::TrisotopismList, M::TrisotopismSet, M::SpeciesMols})
      c.push_back(certificate(m, mode));
    certs.push_back(c);
  }
  const auto slot = [](M mode) {
    switch (mode) {
      case M::IsotopismList: return 0;
      case M::IsotopismSet: return 1;
      case M::TrisotopismList: return 2;
      case M::TrisotopismSet: return 3;
      default: return 4;
    }
  };
  long coincidences = 0;
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b)
      for (const auto& [fine, coarse] : chain) {
        if (certs[a][slot(fine)] != certs[b][slot(fine)]) continue;
        ++coincidences;
        ++out.cases;
        if (certs[a][slot(coarse)] != certs[b][slot(coarse)])
          out.fail(std::string(to_string(fine)) + " equal but " + to_string(coarse) + " differs");
      }
  if (coincidences == 0) out.fail("no equal certificates in the pool");
  return out;
}

// skip(i, r) against a linear scan, on catalogues of 1- and 2-plexes.
inline Outcome skip_tables(int catalogues, unsigned seed) {
  Outcome out;
  Rng rng(seed);
  for (int t = 0; t < catalogues; ++t) {
    const int n = 5 + t % 4;
    const int p = t % 3 == 2 ? 2 : 1;
    const PlexCatalogue cat = enumerate_plexes(build_profile(MolsList(random_latin_square(n, rng))), p);
    ++out.cases;
    for (int i = 0; i < cat.size(); ++i)
      for (int r = 0; r < n; ++r) {
        int j = i + 1;
        while (j < cat.size() && cat[j].cells.row_mask(n, r) == cat[i].cells.row_mask(n, r)) ++j;
        if (cat.skip(i, r) != j) out.fail("skip(" + std::to_string(i) + "," + std::to_string(r) + ") on order " +
                                          std::to_string(n));
      }
  }
  return out;
}

inline std::string describe(const Outcome& o) {
  std::ostringstream s;
  s << o.cases << " cases, " << o.failures << " failures";
  if (o.failures) s << "; first: " << o.first_failure;
  return s.str();
}

}  // namespace props
