#include "molscope/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "molscope/counting.hpp"
#include "molscope/io.hpp"
#include "molscope/plex.hpp"

namespace molscope {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::min(resolve_threads(threads), std::max(count, 1));
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (int i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

// Cell-by-cell filling of a reduced square: column 0 is forced, every other
// cell tries the free symbols in increasing order.
class Filler {
 public:
  explicit Filler(int n)
      : n_(n), cells_(static_cast<std::size_t>(n * n)), row_used_(static_cast<std::size_t>(n)),
        col_used_(static_cast<std::size_t>(n)) {
    for (int c = 0; c < n; ++c) place(0, c, c);
  }

  void place(int r, int c, int s) {
    cells_[static_cast<std::size_t>(r * n_ + c)] = static_cast<Symbol>(s);
    row_used_[static_cast<std::size_t>(r)] |= 1u << s;
    col_used_[static_cast<std::size_t>(c)] |= 1u << s;
  }
  void unplace(int r, int c, int s) {
    row_used_[static_cast<std::size_t>(r)] &= ~(1u << s);
    col_used_[static_cast<std::size_t>(c)] &= ~(1u << s);
  }

  // Fills cells [pos, end); calls leaf() at end. Returns false when aborted.
  template <class Leaf>
  bool fill(int pos, int end, Leaf& leaf) {
    if (pos == end) return leaf(cells_);
    const int r = pos / n_, c = pos % n_;
    if (c == 0) {
      if (col_used_[0] >> r & 1) return true;
      place(r, 0, r);
      const bool go = fill(pos + 1, end, leaf);
      unplace(r, 0, r);
      return go;
    }
    const unsigned full = (1u << n_) - 1;
    unsigned avail = full & ~(row_used_[static_cast<std::size_t>(r)] | col_used_[static_cast<std::size_t>(c)]);
    while (avail) {
      const int s = std::countr_zero(avail);
      avail &= avail - 1;
      place(r, c, s);
      const bool go = fill(pos + 1, end, leaf);
      unplace(r, c, s);
      if (!go) return false;
    }
    return true;
  }

  int order() const { return n_; }
  const std::vector<Symbol>& cells() const { return cells_; }

 private:
  int n_;
  std::vector<Symbol> cells_;
  std::vector<unsigned> row_used_, col_used_;
};

// All admissible second rows of a reduced square (n >= 2).
std::vector<std::vector<Symbol>> second_rows(int n) {
  std::vector<std::vector<Symbol>> out;
  Filler f(n);
  auto leaf = [&](const std::vector<Symbol>& cells) {
    out.emplace_back(cells.begin() + n, cells.begin() + 2 * n);
    return true;
  };
  f.fill(n, 2 * n, leaf);
  return out;
}

template <class Leaf>
bool fill_from_second_row(int n, const std::vector<Symbol>& row1, Leaf& leaf) {
  Filler f(n);
  for (int c = 0; c < n; ++c) f.place(1, c, row1[static_cast<std::size_t>(c)]);
  return f.fill(2 * n, n * n, leaf);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Multiset hash of the cycle types of lines[j] o lines[i]^-1 over i < j.
std::uint64_t role_hash(int n, const Symbol* lines) {
  Symbol inv[kMaxOrder * kMaxOrder];
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < n; ++x) inv[i * n + lines[i * n + x]] = static_cast<Symbol>(x);
  std::uint64_t h = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Symbol perm[kMaxOrder];
      for (int x = 0; x < n; ++x) perm[x] = lines[j * n + inv[i * n + x]];
      unsigned seen = 0;
      std::uint64_t type = 0;
      for (int x = 0; x < n; ++x) {
        if (seen >> x & 1) continue;
        int len = 0;
        for (int y = x; !(seen >> y & 1); y = perm[y]) {
          seen |= 1u << y;
          ++len;
        }
        type += std::uint64_t{1} << (5 * (len - 1));
      }
      h += mix64(type);
    }
  }
  return h;
}

std::uint64_t cycle_key(int n, const Symbol* cells) {
  Symbol cols[kMaxOrder * kMaxOrder], syms[kMaxOrder * kMaxOrder];
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Symbol s = cells[r * n + c];
      cols[c * n + r] = s;
      syms[s * n + r] = static_cast<Symbol>(c);
    }
  std::uint64_t h[3] = {role_hash(n, cells), role_hash(n, cols), role_hash(n, syms)};
  std::sort(h, h + 3);
  return mix64(h[0] ^ mix64(h[1] ^ mix64(h[2])));
}

std::string compact(const MolsList& mols) {
  std::string out;
  for (const auto& sq : mols.squares())
    for (Symbol s : sq.cells()) out.push_back(static_cast<char>('0' + s));
  return out;
}

MolsList from_compact(int n, const std::string& text) {
  const std::size_t cells = static_cast<std::size_t>(n * n);
  if (text.empty() || text.size() % cells != 0) throw Error(ErrorKind::Parse, "bad journal entry");
  std::vector<LatinSquare> squares;
  for (std::size_t at = 0; at < text.size(); at += cells) {
    std::vector<int> v;
    for (std::size_t i = 0; i < cells; ++i) v.push_back(text[at + i] - '0');
    squares.push_back(validate(n, v));
  }
  return MolsList::unchecked(std::move(squares));
}

void say(const CensusOptions& options, const std::string& msg) {
  if (options.log) options.log(msg);
}

// Runs fn over [0, count) in chunks. With a checkpoint directory, each
// finished chunk is appended to <name>.journal and the number of finished
// items is written to <name>.checkpoint, so a rerun picks up from there.
// The fingerprint identifies the inputs; a mismatch starts over.
std::vector<std::string> journaled(const CensusOptions& options, const std::string& name, int count,
                                   std::uint64_t fingerprint, const std::function<std::string(int)>& fn) {
  std::vector<std::string> out(static_cast<std::size_t>(count));
  int done = 0;
  std::filesystem::path journal, mark;
  if (options.checkpoint_dir) {
    std::filesystem::create_directories(*options.checkpoint_dir);
    journal = *options.checkpoint_dir / (name + ".journal");
    mark = *options.checkpoint_dir / (name + ".checkpoint");
    int recorded_count = -1;
    std::uint64_t recorded_print = 0;
    if (std::ifstream in(mark);
        in >> done >> recorded_count >> recorded_print && recorded_count == count && recorded_print == fingerprint) {
      std::ifstream jin(journal);
      for (std::string line; std::getline(jin, line);) {
        const auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        const int idx = std::stoi(line.substr(0, tab));
        if (idx >= 0 && idx < done) out[static_cast<std::size_t>(idx)] = line.substr(tab + 1);
      }
      say(options, name + ": resuming at " + std::to_string(done) + "/" + std::to_string(count));
    } else {
      done = 0;
      std::ofstream(journal, std::ios::trunc);
    }
  }
  const int threads = resolve_threads(options.threads);
  const int chunk = std::max(64, threads * 16);
  for (int begin = done; begin < count; begin += chunk) {
    const int end = std::min(count, begin + chunk);
    parallel_for(end - begin, threads, [&](int i) { out[static_cast<std::size_t>(begin + i)] = fn(begin + i); });
    if (options.checkpoint_dir) {
      std::ofstream j(journal, std::ios::app);
      for (int i = begin; i < end; ++i) j << i << '\t' << out[static_cast<std::size_t>(i)] << '\n';
      j.close();
      const auto tmp = mark.string() + ".tmp";
      std::ofstream(tmp) << end << ' ' << count << ' ' << fingerprint << '\n';
      std::filesystem::rename(tmp, mark);
    }
    if (count > chunk) say(options, name + ": " + std::to_string(end) + "/" + std::to_string(count));
  }
  return out;
}

ExactInt reduced_in_species(int n, const ExactInt& par) {
  const ExactInt num = 6 * n * factorial(n);
  if (num % par != 0) throw Error(ErrorKind::NonIntegral, "6 n n! / par");
  return num / par;
}

void fill_stats(SpeciesEntry& e) {
  const MolsList one(e.rep);
  e.atp = atp_order(one);
  e.theta = theta(e.rep);
  e.transversals = enumerate_plexes(build_profile(one), 1).size();
  e.intercalates = count_intercalates(e.rep);
}

void finish(SpeciesCatalogue& cat) {
  std::sort(cat.entries.begin(), cat.entries.end(),
            [](const SpeciesEntry& a, const SpeciesEntry& b) { return a.certificate < b.certificate; });
  cat.reduced_squares = 0;
  for (const auto& e : cat.entries) cat.reduced_squares += e.reduced_count;
}

}  // namespace

void for_each_reduced_square(int n, const std::function<bool(const LatinSquare&)>& visit) {
  if (n < 1 || n > kMaxOrder) throw Error(ErrorKind::OutOfRange, "order " + std::to_string(n));
  Filler f(n);
  auto leaf = [&](const std::vector<Symbol>& cells) { return visit(LatinSquare::unchecked(n, cells)); };
  f.fill(n, n * n, leaf);
}

std::uint64_t cycle_structure_key(const LatinSquare& square) {
  return cycle_key(square.order(), square.cells().data());
}

const SpeciesEntry* SpeciesCatalogue::find(const CanonicalCertificate& cert) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), cert,
                             [](const SpeciesEntry& e, const CanonicalCertificate& c) { return e.certificate < c; });
  return it != entries.end() && it->certificate == cert ? &*it : nullptr;
}

SpeciesCatalogue generate_species_reps(int n, const CensusOptions& options) {
  if (n < 1 || n > 8) throw Error(ErrorKind::OutOfRange, "species generation needs 1 <= n <= 8");
  SpeciesCatalogue cat;
  cat.n = n;

  // Pass 1: square count per key bucket.
  struct Bucket {
    std::uint64_t squares = 0;
    ExactInt covered;
  };
  std::unordered_map<std::uint64_t, Bucket> buckets;
  std::uint64_t total = 0;
  if (n <= 2) {
    for_each_reduced_square(n, [&](const LatinSquare& sq) {
      ++buckets[cycle_structure_key(sq)].squares;
      ++total;
      return true;
    });
  } else {
    const auto rows = second_rows(n);
    std::mutex merge;
    parallel_for(static_cast<int>(rows.size()), options.threads, [&](int i) {
      std::unordered_map<std::uint64_t, std::uint64_t> local;
      std::uint64_t count = 0;
      auto leaf = [&](const std::vector<Symbol>& cells) {
        ++local[cycle_key(n, cells.data())];
        ++count;
        return true;
      };
      fill_from_second_row(n, rows[static_cast<std::size_t>(i)], leaf);
      std::lock_guard lock(merge);
      for (const auto& [k, v] : local) buckets[k].squares += v;
      total += count;
    });
  }
  say(options, "n=" + std::to_string(n) + ": " + std::to_string(total) + " reduced squares, " +
                   std::to_string(buckets.size()) + " invariant buckets");

  // Pass 2: in lexicographic order, certify squares of buckets whose
  // squares are not all accounted for by species found so far.
  std::map<CanonicalCertificate, std::size_t> seen;
  std::size_t open = buckets.size();
  std::uint64_t certified = 0;
  for_each_reduced_square(n, [&](const LatinSquare& sq) {
    Bucket& b = buckets[cycle_structure_key(sq)];
    if (b.covered == b.squares) return true;
    ++certified;
    const MolsList one(sq);
    CanonicalCertificate cert = certificate(one, EquivalenceMode::SpeciesLS);
    if (seen.contains(cert)) return true;
    SpeciesEntry e;
    e.certificate = cert;
    e.rep = sq;
    e.par = par_order(one);
    e.reduced_count = reduced_in_species(n, e.par);
    b.covered += e.reduced_count;
    if (b.covered > b.squares) throw Error(ErrorKind::OutOfRange, "invariant bucket overfilled");
    if (b.covered == b.squares) --open;
    seen.emplace(std::move(cert), cat.entries.size());
    cat.entries.push_back(std::move(e));
    return open > 0;
  });
  if (open != 0) throw Error(ErrorKind::OutOfRange, "invariant buckets left uncovered");
  say(options, "n=" + std::to_string(n) + ": " + std::to_string(cat.entries.size()) + " species after " +
                   std::to_string(certified) + " certificates");

  parallel_for(static_cast<int>(cat.entries.size()), options.threads,
               [&](int i) { fill_stats(cat.entries[static_cast<std::size_t>(i)]); });
  finish(cat);
  if (cat.reduced_squares != total) throw Error(ErrorKind::OutOfRange, "species sizes do not add up");
  return cat;
}

SpeciesCatalogue catalogue_from_squares(std::span<const LatinSquare> squares, const CensusOptions& options) {
  SpeciesCatalogue cat;
  if (squares.empty()) return cat;
  const int n = squares.front().order();
  cat.n = n;
  for (const auto& sq : squares)
    if (sq.order() != n) throw Error(ErrorKind::SizeMismatch, "squares of different orders");

  std::uint64_t print = 0;
  for (const auto& sq : squares) print = mix64(print ^ std::hash<std::string>()(compact(MolsList::unchecked({sq}))));
  const auto lines = journaled(options, "catalogue_n" + std::to_string(n), static_cast<int>(squares.size()), print, [&](int i) {
    const LatinSquare rep = reduce(squares[static_cast<std::size_t>(i)]).first;
    const MolsList one(rep);
    std::ostringstream line;
    line << certificate(one, EquivalenceMode::SpeciesLS).hex() << ' ' << par_order(one) << ' '
         << compact(one);
    return line.str();
  });

  std::map<CanonicalCertificate, SpeciesEntry> merged;
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::string hex, par, cells;
    in >> hex >> par >> cells;
    SpeciesEntry e;
    e.certificate = CanonicalCertificate::from_hex(hex);
    e.par = ExactInt(par);
    e.rep = from_compact(n, cells)[0];
    auto [it, fresh] = merged.try_emplace(e.certificate, e);
    if (!fresh && e.rep < it->second.rep) it->second.rep = e.rep;
  }
  for (auto& [cert, e] : merged) {
    e.reduced_count = reduced_in_species(n, e.par);
    cat.entries.push_back(std::move(e));
  }
  parallel_for(static_cast<int>(cat.entries.size()), options.threads,
               [&](int i) { fill_stats(cat.entries[static_cast<std::size_t>(i)]); });
  finish(cat);
  return cat;
}

std::vector<MolsSpecies> MolsCensus::maximal(int k) const {
  std::vector<MolsSpecies> out;
  auto it = by_k.find(k);
  if (it == by_k.end()) return out;
  for (const auto& s : it->second)
    if (s.maximal) out.push_back(s);
  return out;
}

MolsCensus build_mols_census(const SpeciesCatalogue& catalogue, int k_max, const CensusOptions& options) {
  const int n = catalogue.n;
  MolsCensus census;
  census.n = n;
  census.k_max = std::min(k_max, n - 1);
  if (census.k_max < 1) return census;

  auto& level1 = census.by_k[1];
  for (const auto& e : catalogue.entries) level1.push_back({e.certificate, MolsList(e.rep), e.par, e.theta == 0});

  for (int k = 1; k < census.k_max; ++k) {
    auto& parents = census.by_k[k];
    if (parents.empty()) break;
    const std::string name = "extend_n" + std::to_string(n) + "_k" + std::to_string(k);
    std::uint64_t print = 0;
    for (const auto& m : parents) print = mix64(print ^ std::hash<std::string>()(m.certificate.bytes()));
    const auto lines = journaled(options, name, static_cast<int>(parents.size()), print, [&](int i) {
      std::map<CanonicalCertificate, MolsList> local;
      for (auto& child : extend(parents[static_cast<std::size_t>(i)].rep)) {
        auto cert = certificate(child, EquivalenceMode::SpeciesMols);
        auto [it, fresh] = local.try_emplace(std::move(cert), child);
        if (!fresh && child < it->second) it->second = std::move(child);
      }
      std::string line = local.empty() ? "max" : "ext";
      for (const auto& [cert, m] : local) line += ' ' + cert.hex() + ':' + compact(m);
      return line;
    });

    std::map<CanonicalCertificate, MolsList> children;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      std::istringstream in(lines[i]);
      std::string tag;
      in >> tag;
      parents[i].maximal = tag == "max";
      for (std::string item; in >> item;) {
        const auto colon = item.find(':');
        auto cert = CanonicalCertificate::from_hex(item.substr(0, colon));
        MolsList m = from_compact(n, item.substr(colon + 1));
        auto [it, fresh] = children.try_emplace(std::move(cert), m);
        if (!fresh && m < it->second) it->second = std::move(m);
      }
    }
    auto& next = census.by_k[k + 1];
    for (auto& [cert, m] : children) next.push_back({cert, std::move(m), 0, false});
    parallel_for(static_cast<int>(next.size()), options.threads, [&](int i) {
      auto& s = next[static_cast<std::size_t>(i)];
      s.par = par_order(s.rep);
    });
    say(options, "n=" + std::to_string(n) + " k=" + std::to_string(k + 1) + ": " + std::to_string(next.size()) +
                     " species");
    if (next.empty()) census.by_k.erase(k + 1);
  }
  // The top level is maximal exactly when it is a complete set.
  if (census.k_max == n - 1) {
    auto it = census.by_k.find(n - 1);
    if (it != census.by_k.end())
      for (auto& s : it->second) s.maximal = true;
  } else {
    auto it = census.by_k.find(census.k_max);
    if (it != census.by_k.end())
      parallel_for(static_cast<int>(it->second.size()), options.threads, [&](int i) {
        auto& s = it->second[static_cast<std::size_t>(i)];
        s.maximal = is_maximal(s.rep);
      });
  }
  return census;
}

namespace {

// Rank of a permutation of 0..w-1 in lexicographic order.
int perm_rank(const std::vector<int>& p) {
  const int w = static_cast<int>(p.size());
  int rank = 0;
  for (int i = 0; i < w; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < w; ++j) smaller += p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)];
    rank = rank * (w - i) + smaller;
  }
  return rank;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int size) : parent(static_cast<std::size_t>(size)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

std::vector<int> swap_gen(int w, int a, int b) {
  std::vector<int> g(static_cast<std::size_t>(w));
  std::iota(g.begin(), g.end(), 0);
  std::swap(g[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(b)]);
  return g;
}

// Moves on column positions that the notion ignores.
std::vector<std::vector<int>> notion_generators(int w, EquivalenceMode mode) {
  std::vector<std::vector<int>> gens;
  const bool tris = mode == EquivalenceMode::TrisotopismList || mode == EquivalenceMode::TrisotopismSet;
  const bool sets = mode == EquivalenceMode::IsotopismSet || mode == EquivalenceMode::TrisotopismSet;
  if (tris) gens.push_back(swap_gen(w, 0, 1));
  if (sets)
    for (int i = 2; i + 1 < w; ++i) gens.push_back(swap_gen(w, i, i + 1));
  return gens;
}

// Column orderings of the species, one per class of the notion.
std::vector<std::vector<int>> class_orderings(int w, const std::vector<std::vector<int>>& aut,
                                              const std::vector<std::vector<int>>& moves) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(w));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Dsu dsu(static_cast<int>(perms.size()));
  std::vector<int> q(static_cast<std::size_t>(w));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const auto& s = perms[i];
    for (const auto& g : aut) {
      for (int j = 0; j < w; ++j) q[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])];
      dsu.unite(static_cast<int>(i), perm_rank(q));
    }
    for (const auto& h : moves) {
      for (int j = 0; j < w; ++j) q[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(h[static_cast<std::size_t>(j)])];
      dsu.unite(static_cast<int>(i), perm_rank(q));
    }
  }
  std::vector<std::vector<int>> reps;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (dsu.find(static_cast<int>(i)) == static_cast<int>(i)) reps.push_back(perms[i]);
  return reps;
}

long count_classes(const OrthogonalArray& oa, const std::vector<std::vector<int>>& aut, EquivalenceMode mode) {
  const int w = oa.width();
  const auto moves = notion_generators(w, mode);
  const auto reps = class_orderings(w, aut, moves);
  std::set<CanonicalCertificate> certs;
  for (const auto& r : reps) {
    const OrthogonalArray image = oa.with_columns(r);
    const CanonicalCertificate c = certificate(image, mode);
    // Every orbit edge must join equivalent orderings.
    for (const auto* gens : {&aut, &moves}) {
      for (const auto& g : *gens) {
        std::vector<int> q(static_cast<std::size_t>(w));
        for (int j = 0; j < w; ++j)
          q[static_cast<std::size_t>(j)] = gens == &aut ? g[static_cast<std::size_t>(r[static_cast<std::size_t>(j)])]
                                                        : r[static_cast<std::size_t>(g[static_cast<std::size_t>(j)])];
        if (certificate(oa.with_columns(q), mode) != c)
          throw Error(ErrorKind::OutOfRange, "column orbit joins inequivalent orderings");
      }
    }
    certs.insert(c);
  }
  if (certs.size() != reps.size()) throw Error(ErrorKind::OutOfRange, "column orbits are not separated by certificates");
  return static_cast<long>(reps.size());
}

}  // namespace

CensusRow classify_counts(int n, int k, std::span<const MolsSpecies> reps, bool maximal_only, bool lists,
                          int threads) {
  CensusRow row;
  row.n = n;
  row.k = k;
  row.maximal_only = maximal_only;
  row.lists = lists;
  row.paratopism = static_cast<long>(reps.size());
  const EquivalenceMode iso = lists ? EquivalenceMode::IsotopismList : EquivalenceMode::IsotopismSet;
  const EquivalenceMode tri = lists ? EquivalenceMode::TrisotopismList : EquivalenceMode::TrisotopismSet;
  std::vector<long> iso_counts(reps.size()), tri_counts(reps.size());
  parallel_for(static_cast<int>(reps.size()), threads, [&](int i) {
    const auto& m = reps[static_cast<std::size_t>(i)].rep;
    const OrthogonalArray oa = to_oa(m);
    const auto aut = autoparatopism_column_generators(m);
    iso_counts[static_cast<std::size_t>(i)] = count_classes(oa, aut, iso);
    tri_counts[static_cast<std::size_t>(i)] = count_classes(oa, aut, tri);
  });
  row.isotopism = std::accumulate(iso_counts.begin(), iso_counts.end(), 0L);
  row.trisotopism = std::accumulate(tri_counts.begin(), tri_counts.end(), 0L);
  std::vector<ExactInt> pars;
  for (const auto& r : reps) pars.push_back(r.par);
  row.equality = reps.empty() ? ExactInt(0) : reduced_sets_from_reps(n, k, pars);
  if (lists) row.equality *= factorial(k - 1);
  return row;
}

std::map<std::pair<int, int>, int> common_transversal_table(std::span<const MolsSpecies> reps, int threads) {
  std::vector<std::pair<int, int>> cells(reps.size());
  parallel_for(static_cast<int>(reps.size()), threads, [&](int i) {
    const auto& m = reps[static_cast<std::size_t>(i)].rep;
    const int common = static_cast<int>(common_transversals(m).size());
    cells[static_cast<std::size_t>(i)] = {common, common ? max_disjoint_common_transversals(m) : 0};
  });
  std::map<std::pair<int, int>, int> out;
  for (const auto& c : cells) ++out[c];
  return out;
}

std::map<int, int> species_involvement_table(std::span<const MolsSpecies> reps, int threads) {
  std::vector<int> counts(reps.size());
  parallel_for(static_cast<int>(reps.size()), threads, [&](int i) {
    std::set<CanonicalCertificate> species;
    for (const auto& a : aspects(reps[static_cast<std::size_t>(i)].rep))
      species.insert(certificate(MolsList(a), EquivalenceMode::SpeciesLS));
    counts[static_cast<std::size_t>(i)] = static_cast<int>(species.size());
  });
  std::map<int, int> out;
  for (int c : counts) ++out[c];
  return out;
}

const char* to_string(PlanarityType type) {
  switch (type) {
    case PlanarityType::P: return "P";
    case PlanarityType::N: return "N";
    case PlanarityType::M: return "M";
  }
  return "?";
}

std::vector<CanonicalCertificate> planar_certificates(const MolsCensus& census) {
  if (census.k_max < census.n - 1)
    throw Error(ErrorKind::OutOfRange, "planar species need the census up to complete sets");
  std::set<CanonicalCertificate> out;
  auto it = census.by_k.find(census.n - 1);
  if (it != census.by_k.end())
    for (const auto& s : it->second)
      for (const auto& a : aspects(s.rep)) out.insert(certificate(MolsList(a), EquivalenceMode::SpeciesLS));
  return {out.begin(), out.end()};
}

namespace {

bool is_planar(const LatinSquare& sq, std::span<const CanonicalCertificate> planar) {
  return std::binary_search(planar.begin(), planar.end(), certificate(MolsList(sq), EquivalenceMode::SpeciesLS));
}

PlanarityType type_of(int planar, int total) {
  return planar == total ? PlanarityType::P : planar == 0 ? PlanarityType::N : PlanarityType::M;
}

void check_planarity_order(const MolsList& mols) {
  if (mols.order() >= 9)
    throw Error(ErrorKind::UnsupportedOrder, "planar species are only known here for n <= 8");
}

}  // namespace

PlanarityType planarity_type(const MolsList& mols, std::span<const CanonicalCertificate> planar) {
  check_planarity_order(mols);
  int hits = 0;
  const auto as = aspects(mols);
  for (const auto& a : as) hits += is_planar(a, planar);
  return type_of(hits, static_cast<int>(as.size()));
}

std::string planarity_profile(const MolsList& mols, std::span<const CanonicalCertificate> planar) {
  check_planarity_order(mols);
  const OrthogonalArray oa = to_oa(mols);
  const int w = oa.width();
  // Aspect species depend only on the column triple.
  std::map<std::array<int, 3>, bool> triple;
  for (int a = 0; a < w; ++a)
    for (int b = a + 1; b < w; ++b)
      for (int c = b + 1; c < w; ++c) triple[{a, b, c}] = is_planar(aspect(oa, a, b, c), planar);
  bool seen[3] = {false, false, false};
  for (int i = 0; i < w; ++i) {
    for (int j = i + 1; j < w; ++j) {
      int hits = 0, total = 0;
      for (int l = 0; l < w; ++l) {
        if (l == i || l == j) continue;
        std::array<int, 3> t{i, j, l};
        std::sort(t.begin(), t.end());
        hits += triple[t];
        ++total;
      }
      seen[static_cast<int>(type_of(hits, total))] = true;
    }
  }
  std::string out;
  for (auto t : {PlanarityType::P, PlanarityType::N, PlanarityType::M})
    if (seen[static_cast<int>(t)]) out += to_string(t);
  return out;
}

std::map<int, int> log2_theta_table(const SpeciesCatalogue& catalogue) {
  std::map<int, int> out;
  for (const auto& e : catalogue.entries)
    if (e.theta > 0) ++out[std::bit_width(e.theta) - 1];
  return out;
}

MateStats mate_stats(const SpeciesCatalogue& catalogue) {
  std::vector<SpeciesStat> stats;
  long with_mate = 0;
  for (const auto& e : catalogue.entries) {
    stats.push_back({ExactInt(e.theta), e.par});
    with_mate += e.theta > 0;
  }
  MateStats out;
  const RandomLsStats r = random_ls_stats(catalogue.n, stats);
  out.p_mate = r.p_mate;
  out.e_theta = r.e_theta;
  out.species_with_mate = catalogue.entries.empty()
                              ? ExactRational(0)
                              : ExactRational(with_mate, static_cast<long>(catalogue.entries.size()));
  return out;
}

std::string format_catalogue(const SpeciesCatalogue& catalogue) {
  std::ostringstream out;
  for (const auto& e : catalogue.entries) {
    out << "# " << e.certificate.hex() << '\n'
        << "# par " << e.par << " atp " << e.atp << " theta " << e.theta << " transversals " << e.transversals
        << " intercalates " << e.intercalates << " reduced " << e.reduced_count << '\n'
        << format_square(e.rep) << '\n';
  }
  return out.str();
}

std::string format_mols_species(std::span<const MolsSpecies> species) {
  std::ostringstream out;
  for (const auto& s : species) {
    out << "# " << s.certificate.hex() << '\n'
        << "# par " << s.par << (s.maximal ? " maximal" : "") << '\n'
        << format_mols(s.rep) << '\n';
  }
  return out.str();
}

SpeciesCatalogue parse_catalogue(std::string_view text) {
  SpeciesCatalogue cat;
  std::istringstream in{std::string(text)};
  std::string body;
  int line_no = 0;
  auto flush = [&] {
    if (body.empty()) return;
    auto squares = parse_squares(body);
    if (squares.size() != 1 || cat.entries.empty() || cat.entries.back().rep.order() != 0)
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected one square per entry", line_no);
    cat.entries.back().rep = squares[0];
    body.clear();
  };
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.rfind("# par ", 0) == 0) {
      if (cat.entries.empty()) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": stray stats", line_no);
      std::istringstream f(line.substr(2));
      std::string key, value;
      auto& e = cat.entries.back();
      while (f >> key >> value) {
        if (key == "par") e.par = ExactInt(value);
        else if (key == "atp") e.atp = ExactInt(value);
        else if (key == "theta") e.theta = std::stoull(value);
        else if (key == "transversals") e.transversals = std::stol(value);
        else if (key == "intercalates") e.intercalates = std::stol(value);
        else if (key == "reduced") e.reduced_count = ExactInt(value);
      }
    } else if (line.rfind("# ", 0) == 0) {
      flush();
      SpeciesEntry e;
      e.certificate = CanonicalCertificate::from_hex(line.substr(2));
      cat.entries.push_back(std::move(e));
    } else {
      body += line;
      body += '\n';
    }
  }
  flush();
  for (const auto& e : cat.entries)
    if (e.rep.order() == 0) throw Error(ErrorKind::Parse, "entry without a square");
  if (!cat.entries.empty()) cat.n = cat.entries.front().rep.order();
  finish(cat);
  return cat;
}

}  // namespace molscope
