// One PASS / FAIL / SKIP line per acceptance criterion; failed sub-checks
// are listed underneath. Exit status is 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "golden.hpp"
#include "molscope/census.hpp"
#include "molscope/counting.hpp"
#include "molscope/io.hpp"
#include "molscope/plex.hpp"
#include "properties.hpp"

using namespace molscope;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> failed;
  int checks = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failed.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": expected " << want << ", got " << got;
    check(got == want, s.str());
  }
};

struct Order {
  SpeciesCatalogue catalogue;
  MolsCensus census;
};

std::map<int, Order>& orders() {
  static std::map<int, Order> cache;
  return cache;
}

const Order& order(int n) {
  auto& cache = orders();
  if (!cache.contains(n)) {
    Order o;
    o.catalogue = generate_species_reps(n);
    o.census = build_mols_census(o.catalogue, n - 1);
    cache.emplace(n, std::move(o));
  }
  return cache.at(n);
}

long transversal_count(const LatinSquare& sq) { return enumerate_plexes(build_profile(MolsList(sq)), 1).size(); }

LatinSquare fixture_square(const std::string& name) { return read_squares(oracle::fixture(name)).at(0); }

struct Variant {
  const char* name;
  bool maximal, lists;
  std::span<const golden::CountRow> expected;
};

const Variant kVariants[] = {{"maxMOLS sets", true, false, golden::kMaxSets},
                             {"MOLS sets", false, false, golden::kAllSets},
                             {"maxMOLS lists", true, true, golden::kMaxLists},
                             {"MOLS lists", false, true, golden::kAllLists}};

// Every count row of one census, in each of the four variants.
std::vector<std::pair<const Variant*, CensusRow>> census_rows(const Order& o) {
  std::vector<std::pair<const Variant*, CensusRow>> rows;
  for (const auto& v : kVariants)
    for (const auto& [k, species] : o.census.by_k) {
      const auto reps = v.maximal ? o.census.maximal(k) : species;
      if (!reps.empty()) rows.push_back({&v, classify_counts(o.census.n, k, reps, v.maximal, v.lists)});
    }
  return rows;
}

std::map<int, std::vector<std::pair<const Variant*, CensusRow>>>& row_cache() {
  static std::map<int, std::vector<std::pair<const Variant*, CensusRow>>> cache;
  return cache;
}

const std::vector<std::pair<const Variant*, CensusRow>>& rows_for(int n) {
  auto& cache = row_cache();
  if (!cache.contains(n)) cache.emplace(n, census_rows(order(n)));
  return cache.at(n);
}

const CensusRow* find_row(int n, const char* variant, int k) {
  for (const auto& [v, r] : rows_for(n))
    if (std::string(v->name) == variant && r.k == k) return &r;
  return nullptr;
}

std::string row_text(const CensusRow& r) {
  std::ostringstream s;
  s << r.equality << "/" << r.isotopism << "/" << r.trisotopism << "/" << r.paratopism;
  return s.str();
}

std::string golden_text(const golden::CountRow& g) {
  std::ostringstream s;
  s << g.equality << "/" << g.isotopism << "/" << g.trisotopism << "/" << g.paratopism;
  return s.str();
}

void criterion1(Criterion& c) {
  c.expect_eq(theta(cyclic_square(3)), 1u, "theta(Z3)");
  c.expect_eq(theta(elementary_abelian_square(2, 2)), 2u, "theta(EA4)");
  c.expect_eq(theta(cyclic_square(5)), 3u, "theta(Z5)");
  const auto& six = order(6).catalogue;
  c.expect_eq(six.entries.size(), 12u, "order-6 species");
  for (const auto& e : six.entries) c.expect_eq(e.theta, 0u, "theta of order-6 species " + e.certificate.hex().substr(0, 12));
  const LatinSquare z7 = cyclic_square(7), steiner = steiner_square_7();
  c.expect_eq(transversal_count(z7), 133, "transversals(Z7)");
  c.expect_eq(theta(z7), 63u, "theta(Z7)");
  c.expect_eq(transversal_count(steiner), 63, "transversals(Steiner 7)");
  c.expect_eq(theta(steiner), 8u, "theta(Steiner 7)");
  const auto& seven = order(7).catalogue.entries;
  const bool third = std::any_of(seven.begin(), seven.end(),
                                 [](const SpeciesEntry& e) { return e.transversals == 25 && e.theta == 3; });
  c.check(third, "an order-7 species with 25 transversals and 3 mates");
}

void criterion2(Criterion& c) {
  c.expect_eq(theta(elementary_abelian_square(3, 2)), 12445836u, "theta(EA9)");
  c.expect_eq(theta(cyclic_square(9)), 2049219u, "theta(Z9)");
  const LatinSquare rigid = fixture_square("rigid_8226.txt");
  c.expect_eq(theta(rigid), 8226u, "rigid theta");
  c.expect_eq(transversal_count(rigid), 371, "rigid transversals");
  c.expect_eq(count_subsquares(rigid, 3), 6, "rigid order-3 subsquares");
  c.expect_eq(par_order(MolsList(rigid)), ExactInt(1), "rigid par");
  const LatinSquare beta = fixture_square("beta.txt");
  c.expect_eq(theta(beta), 141208u, "beta theta");
  c.expect_eq(transversal_count(beta), 819, "beta transversals");
  c.expect_eq(alpha(beta), 4, "beta alpha");
  c.expect_eq(count_subsquares(beta, 3), 18, "beta order-3 subsquares");
  const LatinSquare four = fixture_square("theta4.txt");
  c.expect_eq(theta(four), 4u, "theta4 theta");
  c.expect_eq(transversal_count(four), 242, "theta4 transversals");
  c.expect_eq(count_subsquares(four, 3), 3, "theta4 order-3 subsquares");
  c.expect_eq(par_order(MolsList(four)), ExactInt(4), "theta4 par");
  const LatinSquare busy = fixture_square("busy.txt");
  c.expect_eq(transversal_count(busy), 755, "busy transversals");
  c.expect_eq(theta(busy), 121330u, "busy theta");
  c.expect_eq(par_order(MolsList(busy)), ExactInt(2), "busy par");
}

void compare_census(Criterion& c, int n, int kmax) {
  for (const auto& v : kVariants) {
    std::set<int> seen;
    for (const auto& [var, row] : rows_for(n)) {
      if (var != &v || row.k > kmax) continue;
      seen.insert(row.k);
      const golden::CountRow* g = nullptr;
      for (const auto& e : v.expected)
        if (e.n == n && e.k == row.k) g = &e;
      const std::string where = std::string(v.name) + " (" + std::to_string(n) + "," + std::to_string(row.k) + ")";
      if (!g) {
        c.check(false, where + ": unexpected row " + row_text(row));
        continue;
      }
      c.expect_eq(row_text(row), golden_text(*g), where);
    }
    for (const auto& e : v.expected)
      if (e.n == n && e.k <= kmax && !seen.contains(e.k))
        c.check(false, std::string(v.name) + " (" + std::to_string(n) + "," + std::to_string(e.k) + ") missing");
  }
}

void criterion3(Criterion& c) {
  for (int n = 2; n <= 7; ++n) compare_census(c, n, n - 1);
  const auto& seven = order(7);
  c.expect_eq(seven.catalogue.entries.size(), 147u, "species of order 7");
  c.expect_eq(seven.census.maximal(1).size(), 141u, "bachelor species of order 7");
  c.expect_eq(seven.census.by_k.at(2).size(), 7u, "species of MOLS(2,7)");
  c.expect_eq(seven.census.maximal(2).size(), 5u, "species of maxMOLS(2,7)");
  c.expect_eq(seven.census.by_k.at(6).size(), 1u, "species of MOLS(6,7)");
  const CensusRow* lists73 = find_row(7, "MOLS lists", 3);
  c.check(lists73 && row_text(*lists73) == "2400/20/10/1", "list census row (7,3) = 2400/20/10/1");
}

void criterion4(Criterion& c) {
  const CountQuad q = switch_counts(7, 2, CountKind::RL, 342480);
  c.expect_eq(q.al, ExactInt("6263668776960000"), "AL(2,7) from RL(2,7)");
  for (int n = 2; n <= 7; ++n) {
    const auto& census = order(n).census;
    for (const auto& [k, species] : census.by_k)
      for (bool maximal : {false, true}) {
        const auto reps = maximal ? census.maximal(k) : species;
        if (reps.empty()) continue;
        std::vector<ExactInt> par;
        for (const auto& s : reps) par.push_back(s.par);
        const CensusRow* row = find_row(n, maximal ? "maxMOLS sets" : "MOLS sets", k);
        c.check(row && reduced_sets_from_reps(n, k, par) == row->equality,
                "reduced sets from species reps at (" + std::to_string(n) + "," + std::to_string(k) + ")" +
                    (maximal ? " maximal" : ""));
      }
    // Sets of 2-MOLS up to isotopism and lists up to trisotopism.
    const CensusRow* sets = find_row(n, "MOLS sets", 2);
    const CensusRow* lists = find_row(n, "MOLS lists", 2);
    if (sets && lists)
      c.expect_eq(sets->isotopism, lists->trisotopism, "isotopism sets vs trisotopism lists, n=" + std::to_string(n));
  }
  for (int n = 3; n <= 7; ++n) {
    const MateStats s = mate_stats(order(n).catalogue);
    for (const auto& g : golden::kMateStats) {
      if (g.n != n) continue;
      c.expect_eq(to_string(s.p_mate), std::string(g.p_mate), "probability of a mate, n=" + std::to_string(n));
      c.expect_eq(to_string(s.e_theta), std::string(g.e_theta), "expected mates, n=" + std::to_string(n));
    }
  }
}

void criterion5(Criterion& c) {
  const LatinSquare a = fixture_square("order10_A.txt"), b = fixture_square("order10_B.txt"),
                    cc = fixture_square("order10_C.txt");
  c.check(are_orthogonal(a, b), "A is orthogonal to B");
  c.check(are_orthogonal(a, cc), "A is orthogonal to C");
  c.expect_eq(count_distinct_pairs(b, cc), 91, "distinct pairs in the B/C overlay");
  std::map<std::pair<int, int>, int> pairs;
  for (int r = 0; r < 10; ++r)
    for (int col = 0; col < 10; ++col) ++pairs[{b(r, col), cc(r, col)}];
  bool confined = true;
  for (const auto& [p, count] : pairs)
    if (count > 1 && p.second < 7) confined = false;
  c.check(confined, "duplicated B/C pairs only involve symbols 7, 8, 9 of C");
  c.expect_eq(common_transversals(MolsList({a, b})).size(), 7u, "|common_transversals(A,B)|");
  const Permutation phi({0, 2, 3, 1, 5, 6, 4, 8, 9, 7});
  for (const auto& [name, sq] : {std::pair{"A", a}, std::pair{"B", b}, std::pair{"C", cc}})
    c.check(is_automorphism(sq, phi), std::string(name) + " admits (0)(123)(456)(789)");
}

void criterion6(Criterion& c) {
  const auto table = common_transversal_table(order(7).census.maximal(2));
  const std::map<std::pair<int, int>, int> want = {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{4, 2}, 2}};
  std::ostringstream got;
  for (const auto& [key, count] : table) got << " " << key.first << ":(" << key.second << ")x" << count;
  c.check(table == want, "maxMOLS(2,7) by (common, max disjoint): expected 0:(0)x1 1:(1)x1 2:(1)x1 4:(2)x2, got" +
                             got.str());
}

void report_property(Criterion& c, const std::string& name, const props::Outcome& o) {
  c.check(o.ok(), name + ": " + props::describe(o));
}

void criterion7(Criterion& c) {
  const auto oracle = props::oracle_equivalence(2500, 7001);
  report_property(c, "plex search vs dancing links", oracle);
  c.check(oracle.cases >= 10000, "at least 10000 random squares");
  report_property(c, "certificate invariance", props::certificate_invariance(1000, 7002));
  report_property(c, "mode refinement", props::mode_refinement(7003));
  report_property(c, "skip tables", props::skip_tables(200, 7004));

  const MolsList all = props::load_fixture("mols_4_5.txt");
  const auto pair = [&](int x, int y) { return MolsList({all[x - 1], all[y - 1]}); };
  const auto iso = EquivalenceMode::IsotopismList;
  c.check(certificate(pair(1, 4), iso) == certificate(pair(4, 1), iso), "(L1,L4) isotopic to (L4,L1) as lists");
  c.check(certificate(pair(1, 2), iso) != certificate(pair(2, 1), iso), "(L1,L2) not isotopic to (L2,L1) as lists");

  for (int n = 2; n <= 7; ++n)
    for (const auto& [v, row] : rows_for(n)) {
      const ExactInt rs = v->lists ? row.equality / factorial(row.k - 1) : row.equality;
      bool integral = !v->lists || rs * factorial(row.k - 1) == row.equality;
      try {
        switch_counts(n, row.k, CountKind::RS, rs);
      } catch (const Error&) {
        integral = false;
      }
      c.check(integral, std::string("count quad integral for ") + v->name + " (" + std::to_string(n) + "," +
                            std::to_string(row.k) + ")");
    }
}

// Returns false when the run was skipped.
bool criterion8(Criterion& c) {
  const char* reps = std::getenv("MOLSCOPE_N8_REPS");
  if (!reps || !*reps) return false;
  CensusOptions opt;
  if (const char* dir = std::getenv("MOLSCOPE_N8_CHECKPOINT")) opt.checkpoint_dir = dir;
  opt.log = [](const std::string& s) { std::cerr << s << '\n'; };
  Order o;
  o.catalogue = catalogue_from_squares(read_squares(reps), opt);
  o.census = build_mols_census(o.catalogue, 7, opt);
  c.expect_eq(o.catalogue.entries.size(), 283657u, "species of order 8");
  orders().emplace(8, std::move(o));
  compare_census(c, 8, 7);
  const auto& census = order(8).census;
  c.expect_eq(census.maximal(2).size(), 2127u, "species of maxMOLS(2,8)");
  c.expect_eq(census.maximal(3).size(), 38u, "species of maxMOLS(3,8)");
  c.expect_eq(census.maximal(7).size(), 1u, "species of maxMOLS(7,8)");
  std::map<int, int> by_disjoint;
  for (const auto& [key, count] : common_transversal_table(census.maximal(2))) by_disjoint[key.second] += count;
  c.check(by_disjoint == std::map<int, int>{{0, 1980}, {1, 34}, {2, 79}, {4, 34}},
          "maxMOLS(2,8) by max disjoint common transversals = 1980/34/79/34");
  c.check(common_transversal_table(census.maximal(3)) == std::map<std::pair<int, int>, int>{{{0, 0}, 38}},
          "no maxMOLS(3,8) has a common transversal");
  return true;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<bool(Criterion&)> run;
  };
  const auto always = [](void (*f)(Criterion&)) {
    return [f](Criterion& c) {
      f(c);
      return true;
    };
  };
  const Entry entries[] = {
      {1, "mate counts of small squares", always(criterion1)},
      {2, "order-9 squares", always(criterion2)},
      {3, "census tables for n <= 7", always(criterion3)},
      {4, "counting identities", always(criterion4)},
      {5, "order-10 squares", always(criterion5)},
      {6, "common transversals of maxMOLS(2,7)", always(criterion6)},
      {7, "property suites", always(criterion7)},
      {8, "order-8 census (set MOLSCOPE_N8_REPS to run)", criterion8},
  };
  int failures = 0;
  for (const auto& e : entries) {
    Criterion c{e.id, e.title, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    bool ran = true;
    try {
      ran = e.run(c);
    } catch (const std::exception& ex) {
      c.failed.push_back(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* verdict = !ran ? "SKIP" : c.failed.empty() ? "PASS" : "FAIL";
    std::cout << verdict << "  criterion " << c.id << ": " << c.title;
    if (ran) std::cout << " (" << c.checks << " checks, " << std::fixed << std::setprecision(1) << secs << " s)";
    std::cout << '\n';
    for (const auto& f : c.failed) std::cout << "        " << f << '\n';
    std::cout.flush();
    failures += !c.failed.empty();
  }
  return failures ? 1 : 0;
}
