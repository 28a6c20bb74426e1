#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "golden.hpp"
#include "molscope/canonical.hpp"
#include "molscope/census.hpp"
#include "molscope/counting.hpp"
#include "molscope/exact_cover.hpp"
#include "molscope/io.hpp"
#include "molscope/plex.hpp"
#include "molscope/random.hpp"

namespace fs = std::filesystem;
using namespace molscope;

namespace {

int threads_from(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("MOLSCOPE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<int> cell_indices(const CellSet& cells) {
  std::vector<int> out;
  cells.for_each([&](int idx) { out.push_back(idx); });
  return out;
}

// ---- analyze / mates / plexes / partitions ---------------------------------

int cmd_analyze(const std::string& path) {
  for (const LatinSquare& sq : read_squares(path)) {
    const MolsList one(sq);
    const PlexCatalogue cat = enumerate_plexes(build_profile(one), 1);
    const ExactInt par = par_order(one);
    std::cout << "n=" << sq.order() << " transversals=" << cat.size() << " theta=" << count_partitions(cat);
    if (cat.empty())
      std::cout << " alpha=-";
    else
      std::cout << " alpha=" << alpha(cat, autoparatopism_cell_generators(one));
    std::cout << " intercalates=" << count_intercalates(sq);
    if (sq.order() >= 6) std::cout << " subsquares3=" << count_subsquares(sq, 3);
    std::cout << " par=" << par << " atp=" << atp_order(one) << " rigid=" << yes_no(par == 1) << '\n';
  }
  return 0;
}

int cmd_mates(const std::string& path, long limit, bool emit) {
  const LatinSquare sq = read_squares(path).at(0);
  const PlexCatalogue cat = enumerate_plexes(build_profile(MolsList(sq)), 1);
  if (!emit) {
    std::cout << "theta=" << count_partitions(cat) << '\n';
    return 0;
  }
  const int n = sq.order();
  long emitted = 0;
  for_each_partition(cat, [&](std::span<const int> parts) {
    std::vector<int> cells(static_cast<std::size_t>(n * n));
    for (int t = 0; t < n; ++t)
      for (int idx : cell_indices(cat[parts[static_cast<std::size_t>(t)]].cells))
        cells[static_cast<std::size_t>(idx)] = t;
    const LatinSquare mate = validate(n, cells);
    if (!are_orthogonal(sq, mate)) throw Error(ErrorKind::NotOrthogonal, "emitted mate is not orthogonal");
    std::cout << "# mate " << ++emitted << '\n' << format_square(mate) << '\n';
    return limit <= 0 || emitted < limit;
  });
  std::cout << "# emitted " << emitted << '\n';
  return 0;
}

std::string format_cells(const CellSet& cells, int n) {
  std::string out;
  for (int idx : cell_indices(cells)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(idx / n) + "," + std::to_string(idx % n);
  }
  return out;
}

int cmd_plexes(const std::string& path, int p, bool emit) {
  const MolsList mols = read_mols(path);
  const PlexCatalogue cat = enumerate_plexes(build_profile(mols), p);
  std::cout << "plexes=" << cat.size() << '\n';
  if (emit)
    for (int i = 0; i < cat.size(); ++i) std::cout << format_cells(cat[i].cells, mols.order()) << '\n';
  return 0;
}

int cmd_partitions(const std::string& path, int p) {
  const MolsList mols = read_mols(path);
  const PlexCatalogue cat = enumerate_plexes(build_profile(mols), p);
  std::cout << "partitions=" << count_partitions(cat) << '\n';
  if (p == 1) {
    std::cout << "max_disjoint=" << max_disjoint(cat) << '\n';
    if (!cat.empty()) std::cout << "alpha=" << alpha(cat) << '\n';
  }
  return 0;
}

// ---- extend / maximal ------------------------------------------------------

int cmd_extend(const std::string& path) {
  const auto ext = extend(read_mols(path));
  if (ext.empty()) {
    std::cout << "MAXIMAL\n";
    return 0;
  }
  for (std::size_t i = 0; i < ext.size(); ++i) std::cout << "# extension " << i + 1 << '\n' << format_mols(ext[i]) << '\n';
  std::cout << "# extensions " << ext.size() << '\n';
  return 0;
}

int cmd_maximal(const std::string& path) {
  const auto ext = extend(read_mols(path));
  if (ext.empty())
    std::cout << "MAXIMAL\n";
  else
    std::cout << "NOT MAXIMAL (" << ext.size() << " extensions)\n";
  return 0;
}

// ---- census ----------------------------------------------------------------

struct Checker {
  int failures = 0;
  void check(bool ok, const std::string& what) {
    std::cout << (ok ? "ok       " : "MISMATCH ") << what << '\n';
    failures += !ok;
  }
};

std::string row_text(const CensusRow& r) {
  std::ostringstream out;
  out << r.n << '\t' << r.k << '\t' << r.equality << '\t' << r.isotopism << '\t' << r.trisotopism << '\t'
      << r.paratopism;
  return out.str();
}

std::string golden_text(const golden::CountRow& g) {
  std::ostringstream out;
  out << g.n << '\t' << g.k << '\t' << g.equality << '\t' << g.isotopism << '\t' << g.trisotopism << '\t'
      << g.paratopism;
  return out.str();
}

void compare_rows(Checker& chk, const std::string& table, int n, int kmax, const std::vector<CensusRow>& rows,
                  std::span<const golden::CountRow> expected) {
  std::set<std::string> got, want;
  for (const auto& r : rows) got.insert(row_text(r));
  for (const auto& g : expected)
    if (g.n == n && g.k <= kmax) want.insert(golden_text(g));
  for (const auto& w : want) chk.check(got.contains(w), table + " row " + w);
  for (const auto& g : got)
    if (!want.contains(g)) chk.check(false, table + " unexpected row " + g);
}

int cmd_census(int n, int kmax, bool extended, const std::string& reps_path, const std::string& out_dir, int threads,
               bool quiet) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "census needs n >= 2");
  if (n >= 8 && !extended) throw Error(ErrorKind::OutOfRange, "n >= 8 runs for hours or days; pass --extended");
  if (n >= 8 && reps_path.empty())
    throw Error(ErrorKind::OutOfRange, "n >= 8 needs --reps with one latin square per species");
  if (kmax <= 0) kmax = n - 1;

  CensusOptions opt;
  opt.threads = threads_from(threads);
  if (!quiet) opt.log = [](const std::string& s) { std::cerr << s << '\n'; };
  const fs::path order_dir = fs::path(out_dir) / ("n" + std::to_string(n));
  const fs::path tables = fs::path(out_dir) / "tables";
  const std::string suffix = "_n" + std::to_string(n) + ".tsv";
  opt.checkpoint_dir = order_dir / "checkpoint";

  SpeciesCatalogue cat;
  if (!reps_path.empty()) {
    const auto squares = read_squares(reps_path);
    cat = catalogue_from_squares(squares, opt);
    if (cat.n != n) throw Error(ErrorKind::SizeMismatch, "reps file is not of order " + std::to_string(n));
  } else {
    cat = generate_species_reps(n, opt);
  }
  write_text(order_dir / "species.txt", format_catalogue(cat));

  const MolsCensus census = build_mols_census(cat, kmax, opt);
  for (const auto& [k, species] : census.by_k)
    if (k >= 2) write_text(order_dir / ("mols_k" + std::to_string(k) + ".txt"), format_mols_species(species));

  Checker chk;
  const bool golden = n <= 8;
  const std::string header = "n\tk\tequality\tisotopism\ttrisotopism\tparatopism\n";
  struct Variant {
    const char* name;
    bool maximal, lists;
    std::span<const golden::CountRow> expected;
  };
  const Variant variants[] = {{"max_sets", true, false, golden::kMaxSets},
                              {"all_sets", false, false, golden::kAllSets},
                              {"max_lists", true, true, golden::kMaxLists},
                              {"all_lists", false, true, golden::kAllLists}};
  for (const auto& v : variants) {
    std::vector<CensusRow> rows;
    for (const auto& [k, species] : census.by_k) {
      const auto reps = v.maximal ? census.maximal(k) : species;
      if (reps.empty()) continue;
      rows.push_back(classify_counts(n, k, reps, v.maximal, v.lists, opt.threads));
      // Every count must switch to whole numbers of the other kinds.
      const ExactInt rs = v.lists ? rows.back().equality / factorial(k - 1) : rows.back().equality;
      bool integral = true;
      try {
        switch_counts(n, k, CountKind::RS, rs);
      } catch (const Error&) {
        integral = false;
      }
      if (!integral) chk.check(false, std::string(v.name) + " counts not integral at k=" + std::to_string(k));
    }
    std::string text = header;
    for (const auto& r : rows) text += row_text(r) + '\n';
    write_text(tables / (v.name + suffix), text);
    if (golden) compare_rows(chk, v.name, n, census.k_max, rows, v.expected);
  }

  // Common transversals and species involvement of maximal sets.
  std::string common = "k\tcommon\tmax_disjoint\tspecies\n";
  std::string involvement = "k\tls_species\tspecies\n";
  std::string planarity = "k\tprofile\tspecies\n";
  std::vector<CanonicalCertificate> planar;
  const bool with_planarity = n <= 8 && census.k_max == n - 1;
  if (with_planarity) planar = planar_certificates(census);
  for (const auto& [k, species] : census.by_k) {
    if (k < 2) continue;
    const auto reps = census.maximal(k);
    if (reps.empty()) continue;
    const auto ct = common_transversal_table(reps, opt.threads);
    for (const auto& [key, count] : ct)
      common += std::to_string(k) + '\t' + std::to_string(key.first) + '\t' + std::to_string(key.second) + '\t' +
                std::to_string(count) + '\n';
    const auto inv = species_involvement_table(reps, opt.threads);
    for (const auto& [ls, count] : inv)
      involvement += std::to_string(k) + '\t' + std::to_string(ls) + '\t' + std::to_string(count) + '\n';
    if (golden) {
      bool listed = false;
      for (const auto& g : golden::kCommonTransversals) {
        if (g.n != n || g.k != k) continue;
        listed = true;
        auto it = ct.find({g.common, g.disjoint});
        chk.check(it != ct.end() && it->second == g.species,
                  "common transversals k=" + std::to_string(k) + " (" + std::to_string(g.common) + "," +
                      std::to_string(g.disjoint) + ") = " + std::to_string(g.species));
      }
      if (listed) {
        int total = 0, want = 0;
        for (const auto& [key, count] : ct) total += count;
        for (const auto& g : golden::kCommonTransversals)
          if (g.n == n && g.k == k) want += g.species;
        chk.check(total == want, "common transversals k=" + std::to_string(k) + " total " + std::to_string(want));
      }
      std::map<int, int> want_inv;
      for (const auto& g : golden::kInvolvement)
        if (g.n == n && g.k == k) want_inv[g.ls_species] = g.species;
      if (!want_inv.empty()) chk.check(want_inv == inv, "species involvement k=" + std::to_string(k));
    }
    if (with_planarity) {
      std::map<std::string, int> profiles;
      for (const auto& s : reps) ++profiles[planarity_profile(s.rep, planar)];
      for (const auto& [profile, count] : profiles) {
        planarity += std::to_string(k) + '\t' + profile + '\t' + std::to_string(count) + '\n';
        if (golden) chk.check(profile != "PN", "no PN planarity profile at k=" + std::to_string(k));
      }
    }
  }
  write_text(tables / ("common_transversals" + suffix), common);
  write_text(tables / ("species_involvement" + suffix), involvement);
  if (with_planarity) write_text(tables / ("planarity" + suffix), planarity);

  const auto log2 = log2_theta_table(cat);
  std::string log2_text = "r\tspecies\n";
  for (const auto& [r, count] : log2) log2_text += std::to_string(r) + '\t' + std::to_string(count) + '\n';
  write_text(tables / ("log2_theta" + suffix), log2_text);
  std::map<int, int> want_log2;
  for (const auto& g : golden::kLog2Theta)
    if (g.n == n) want_log2[g.r] = g.species;
  if (golden && !want_log2.empty()) chk.check(want_log2 == log2, "log2 theta histogram");

  const MateStats stats = mate_stats(cat);
  write_text(tables / ("random_ls" + suffix), "n\tspecies_with_mate\tp_mate\te_theta\n" + std::to_string(n) + '\t' +
                                                  to_string(stats.species_with_mate) + '\t' + to_string(stats.p_mate) +
                                                  '\t' + to_string(stats.e_theta) + '\n');
  for (const auto& g : golden::kMateStats) {
    if (g.n != n || !golden) continue;
    chk.check(to_string(stats.species_with_mate) == g.species_with_mate,
              std::string("proportion of species with a mate ") + g.species_with_mate);
    chk.check(to_string(stats.p_mate) == g.p_mate, std::string("probability of a mate ") + g.p_mate);
    chk.check(to_string(stats.e_theta) == g.e_theta, std::string("expected mates ") + g.e_theta);
  }

  std::cout << "census n=" << n << ": " << cat.entries.size() << " species, results in " << out_dir << '\n';
  if (chk.failures) std::cout << chk.failures << " mismatches\n";
  return chk.failures ? 1 : 0;
}

// ---- count -----------------------------------------------------------------

void print_quad(const CountQuad& q) {
  std::cout << "RS=" << q.rs << " RL=" << q.rl << " AL=" << q.al << " AS=" << q.as << '\n';
}

int cmd_count(const std::string& theorem, bool stats, int n, int k, const std::map<std::string, std::string>& known,
              const std::vector<std::string>& files, const std::string& census_dir, int threads) {
  if (stats) {
    const fs::path species = fs::path(census_dir) / ("n" + std::to_string(n)) / "species.txt";
    SpeciesCatalogue cat;
    if (fs::exists(species)) {
      cat = parse_catalogue(read_text(species));
    } else {
      CensusOptions opt;
      opt.threads = threads_from(threads);
      cat = generate_species_reps(n, opt);
    }
    const MateStats s = mate_stats(cat);
    std::cout << to_string(s.p_mate) << ' ' << to_string(s.e_theta) << '\n'
              << "species_with_mate=" << to_string(s.species_with_mate) << '\n';
    return 0;
  }
  if (theorem == "switch") {
    if (known.size() != 1) throw Error(ErrorKind::OutOfRange, "give exactly one of --rs, --rl, --al, --as");
    const auto& [kind, value] = *known.begin();
    const CountKind ck = kind == "rs" ? CountKind::RS : kind == "rl" ? CountKind::RL : kind == "al" ? CountKind::AL : CountKind::AS;
    print_quad(switch_counts(n, k, ck, ExactInt(value)));
    return 0;
  }
  if (theorem == "reps") {
    // Each file holds one species representative of k-MOLS.
    std::vector<ExactInt> pars;
    int order = 0, size = 0;
    for (const auto& f : files) {
      const MolsList m = read_mols(f);
      if (pars.empty()) order = m.order(), size = m.size();
      if (m.order() != order || m.size() != size) throw Error(ErrorKind::SizeMismatch, f + ": order or k differs");
      pars.push_back(par_order(m));
    }
    if (pars.empty()) throw Error(ErrorKind::OutOfRange, "no representative files given");
    print_quad(switch_counts(order, size, CountKind::RS, reduced_sets_from_reps(order, size, pars)));
    return 0;
  }
  if (theorem == "aspects") {
    if (files.size() != 1) throw Error(ErrorKind::OutOfRange, "give one file holding a pair of MOLS");
    const ExactRational m = aspect_multiplicity(read_mols(files[0]));
    std::cout << "multiplicity=" << to_string(m) << '\n';
    return 0;
  }
  throw Error(ErrorKind::OutOfRange, "unknown theorem '" + theorem + "'");
}

// ---- verify-order10 --------------------------------------------------------

constexpr const char* kOrder10[3] = {
    "0897564231 9146273805 7425138690 8653921047 6218409573 4932750168 5371086924 3509842716 1760395482 2084617359",
    "0789123456 9061832547 7204391865 8530217694 6953074218 4176508932 5428960371 3617485029 1842659703 2395746180",
    "0789123456 6428951370 4953276018 5176438902 3290715684 1037682549 2801349765 9542860137 7365094821 8614507293",
};

LatinSquare order10(int i) {
  std::string text = kOrder10[i];
  for (char& ch : text)
    if (ch == ' ') ch = '\n';
  return parse_squares(text).at(0);
}

int cmd_verify_order10() {
  const LatinSquare a = order10(0), b = order10(1), c = order10(2);
  Checker chk;
  chk.check(are_orthogonal(a, b), "A is orthogonal to B");
  chk.check(are_orthogonal(a, c), "A is orthogonal to C");
  chk.check(count_distinct_pairs(b, c) == 91, "B and C overlay in 91 distinct pairs");
  // Cells whose (B, C) pair occurs more than once.
  std::map<std::pair<int, int>, int> seen;
  for (int r = 0; r < 10; ++r)
    for (int col = 0; col < 10; ++col) ++seen[{b(r, col), c(r, col)}];
  bool confined = true;
  for (const auto& [pair, count] : seen)
    if (count > 1 && pair.second < 7) confined = false;
  chk.check(confined, "duplicated pairs only involve symbols 7, 8, 9 of C");
  const auto common = common_transversals(MolsList({a, b}));
  chk.check(common.size() == 7, "A and B have 7 common transversals (found " + std::to_string(common.size()) + ")");
  // The cells of each symbol of C below 7 pair with distinct symbols of B.
  int classes = 0;
  for (int sym = 0; sym < 7; ++sym) {
    CellSet cells;
    for (int r = 0; r < 10; ++r)
      for (int col = 0; col < 10; ++col)
        if (c(r, col) == sym) cells |= CellSet::single(10, r, col);
    classes += std::any_of(common.begin(), common.end(), [&](const CommonTransversal& t) { return t.cells == cells; });
  }
  chk.check(classes == 7, "symbols 0-6 of C mark common transversals of A and B");
  const Permutation phi({0, 2, 3, 1, 5, 6, 4, 8, 9, 7});
  chk.check(is_automorphism(a, phi) && is_automorphism(b, phi) && is_automorphism(c, phi),
            "A, B and C admit the automorphism (0)(123)(456)(789)");
  chk.check(extend(MolsList({a, b})).empty() && extend(MolsList({a, c})).empty(), "(A,B) and (A,C) extend to no triple");
  return chk.failures ? 1 : 0;
}

// ---- bench-oracle ----------------------------------------------------------

int cmd_bench_oracle(int n, int count, unsigned seed) {
  Rng rng(seed);
  double plex_s = 0, dlx_s = 0;
  int mismatches = 0;
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < count; ++i) {
    const LatinSquare sq = random_latin_square(n, rng);
    const MolsList one(sq);
    auto t0 = clock::now();
    const PlexCatalogue cat = enumerate_plexes(build_profile(one), 1);
    const std::uint64_t theta_plex = count_partitions(cat);
    auto t1 = clock::now();
    auto trans = exact_cover::solve_all(exact_cover::transversal_instance(one));
    const std::uint64_t theta_dlx = exact_cover::solve_count(exact_cover::partition_instance(trans, n));
    auto t2 = clock::now();
    plex_s += std::chrono::duration<double>(t1 - t0).count();
    dlx_s += std::chrono::duration<double>(t2 - t1).count();
    std::set<std::vector<int>> a(trans.begin(), trans.end()), b;
    for (int j = 0; j < cat.size(); ++j) {
      std::vector<int> cells = cell_indices(cat[j].cells);
      b.insert(cells);
    }
    if (a != b || theta_plex != theta_dlx) {
      ++mismatches;
      std::cout << "MISMATCH on square " << i << ":\n" << format_square(sq);
    }
  }
  std::cout << "squares=" << count << " n=" << n << " mismatches=" << mismatches << '\n'
            << "plex_search_s=" << plex_s << " dancing_links_s=" << dlx_s << '\n';
  return mismatches ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"molscope: latin squares, MOLS, transversals and mates"};
  app.require_subcommand(1);

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "Per-square statistics");
  analyze->add_option("file", file, "Square file")->required();

  long limit = 0;
  bool emit = false;
  auto* mates = app.add_subcommand("mates", "Count or list mates with natural first row");
  mates->add_option("file", file, "Square file")->required();
  mates->add_flag("--emit", emit, "Print the mates");
  mates->add_option("--limit", limit, "Stop after this many mates (with --emit)");

  int p = 1;
  auto* plexes = app.add_subcommand("plexes", "Count or list the common p-plexes of a MOLS file");
  plexes->add_option("file", file, "MOLS file")->required();
  plexes->add_option("-p", p, "Plex multiplicity");
  plexes->add_flag("--emit", emit, "Print each plex as r,c cells");

  auto* partitions = app.add_subcommand("partitions", "Count p-partitions of a MOLS file");
  partitions->add_option("file", file, "MOLS file")->required();
  partitions->add_option("-p", p, "Plex multiplicity");

  auto* ext = app.add_subcommand("extend", "All ways to add one square to a MOLS file");
  ext->add_option("file", file, "MOLS file")->required();
  auto* maximal = app.add_subcommand("maximal", "Is a MOLS file maximal?");
  maximal->add_option("file", file, "MOLS file")->required();

  int n = 0, k = 0, kmax = 0, threads = 0;
  bool extended = false, quiet = false;
  std::string out_dir = "census", reps;
  auto* census = app.add_subcommand("census", "Species and MOLS census with class counts");
  census->add_option("-n", n, "Order")->required();
  census->add_option("--kmax", kmax, "Largest number of squares (default n-1)");
  census->add_flag("--extended", extended, "Allow the long n >= 8 runs");
  census->add_option("--reps", reps, "Square file with one latin square per species");
  census->add_option("--out", out_dir, "Results directory");
  census->add_option("--threads", threads, "Worker threads (default MOLSCOPE_THREADS, else all cores)");
  census->add_flag("--quiet", quiet, "No progress on stderr");

  std::string theorem, census_dir = "census";
  bool stats = false;
  std::string rs, rl, al, as;
  std::vector<std::string> files;
  auto* count = app.add_subcommand("count", "Counting identities");
  count->add_option("--theorem", theorem, "switch | reps | aspects");
  count->add_flag("--stats", stats, "Mate statistics of random latin squares of order n");
  count->add_option("-n", n, "Order");
  count->add_option("-k", k, "Number of squares");
  count->add_option("--rs", rs, "Reduced sets");
  count->add_option("--rl", rl, "Reduced lists");
  count->add_option("--al", al, "All lists");
  count->add_option("--as", as, "All sets");
  count->add_option("files", files, "Representative files (reps) or a pair file (aspects)");
  count->add_option("--census", census_dir, "Census directory holding n<n>/species.txt");
  count->add_option("--threads", threads, "Worker threads");

  app.add_subcommand("verify-order10", "Check the order-10 squares A, B, C");

  int bench_count = 100;
  unsigned seed = 1;
  auto* bench = app.add_subcommand("bench-oracle", "Compare plex search against dancing links on random squares");
  bench->add_option("-n", n, "Order")->required();
  bench->add_option("--count", bench_count, "Number of random squares");
  bench->add_option("--seed", seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(file);
    if (*mates) return cmd_mates(file, limit, emit);
    if (*plexes) return cmd_plexes(file, p, emit);
    if (*partitions) return cmd_partitions(file, p);
    if (*ext) return cmd_extend(file);
    if (*maximal) return cmd_maximal(file);
    if (*census) return cmd_census(n, kmax, extended, reps, out_dir, threads, quiet);
    if (*count) {
      std::map<std::string, std::string> known;
      if (!rs.empty()) known["rs"] = rs;
      if (!rl.empty()) known["rl"] = rl;
      if (!al.empty()) known["al"] = al;
      if (!as.empty()) known["as"] = as;
      return cmd_count(theorem, stats, n, k, known, files, census_dir, threads);
    }
    if (app.got_subcommand("verify-order10")) return cmd_verify_order10();
    if (*bench) return cmd_bench_oracle(n, bench_count, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
