#include "molscope/plex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

namespace molscope {

Profile build_profile(const MolsList& mols) {
  Profile prof;
  prof.n_ = mols.order();
  prof.k_ = mols.size();
  if (prof.width_bits() > 128) {
    throw Error(ErrorKind::WidthExceeded,
                std::to_string(prof.width_bits()) + " bits needed, 128 available");
  }
  const int n = prof.n_;
  prof.words_.resize(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Word128 w = Word128{1} << c;
      for (int i = 1; i <= prof.k_; ++i) w |= Word128{1} << (i * n + mols[i - 1](r, c));
      prof.words_[static_cast<std::size_t>(r * n + c)] = w;
    }
  }
  return prof;
}

namespace {

class PlexEnumerator {
 public:
  PlexEnumerator(const Profile& prof, int p, std::size_t cap, std::vector<CellSet>& out)
      : prof_(prof), n_(prof.order()), p_(p), cap_(cap), out_(out), occ_(static_cast<std::size_t>(p), 0) {}

  void run() { row(0, CellSet{}); }

 private:
  void emit(CellSet cells) {
    if (out_.size() >= cap_) {
      throw Error(ErrorKind::CatalogueOverflow,
                  "more than " + std::to_string(cap_) + " plexes");
    }
    out_.push_back(cells);
  }

  void row(int r, CellSet cells) {
    if (r == n_) {
      emit(cells);
      return;
    }
    if (p_ == 1) {
      const Word128 used = occ_[0];
      for (int c = 0; c < n_; ++c) {
        const Word128 w = prof_(r, c);
        if (w & used) continue;
        occ_[0] = used | w;
        row(r + 1, cells | CellSet::single(n_, r, c));
      }
      occ_[0] = used;
      return;
    }
    choose(r, 0, p_, cells);
  }

  // Picks `left` more cells of row r from columns >= from, in lex order.
  void choose(int r, int from, int left, CellSet cells) {
    if (left == 0) {
      row(r + 1, cells);
      return;
    }
    for (int c = from; c <= n_ - left; ++c) {
      const Word128 w = prof_(r, c);
      if (w & occ_[static_cast<std::size_t>(p_ - 1)]) continue;
      const std::vector<Word128> saved = occ_;
      for (int j = p_ - 1; j >= 1; --j) {
        occ_[static_cast<std::size_t>(j)] |= occ_[static_cast<std::size_t>(j - 1)] & w;
      }
      occ_[0] |= w;
      choose(r, c + 1, left - 1, cells | CellSet::single(n_, r, c));
      occ_ = saved;
    }
  }

  const Profile& prof_;
  int n_;
  int p_;
  std::size_t cap_;
  std::vector<CellSet>& out_;
  std::vector<Word128> occ_;  // occ_[j]: features already used more than j times
};

}  // namespace

PlexCatalogue enumerate_plexes(const Profile& profile, int p, std::size_t cap) {
  const int n = profile.order();
  if (p < 1 || p > n) {
    throw Error(ErrorKind::OutOfRange, "plex multiplicity " + std::to_string(p));
  }
  PlexCatalogue cat;
  cat.n_ = n;
  cat.p_ = p;
  PlexEnumerator(profile, p, cap, cat.cells_).run();

  const std::size_t count = cat.cells_.size();
  cat.skip_.assign(count * static_cast<std::size_t>(n), static_cast<std::int32_t>(count));
  for (std::size_t i = count; i-- > 1;) {
    for (int r = 0; r < n; ++r) {
      const std::size_t at = (i - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(r);
      cat.skip_[at] = cat.cells_[i - 1].row_mask(n, r) != cat.cells_[i].row_mask(n, r)
                          ? static_cast<std::int32_t>(i)
                          : cat.skip_[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(r)];
    }
  }

  cat.lead_.assign(static_cast<std::size_t>(n + 1), static_cast<std::int32_t>(count));
  for (std::size_t i = count; i-- > 0;) {
    const int lead = std::countr_zero(cat.cells_[i].row_mask(n, 0));
    for (int c = 0; c <= lead; ++c) cat.lead_[static_cast<std::size_t>(c)] = static_cast<std::int32_t>(i);
  }
  return cat;
}

namespace {

class PartitionSearch {
 public:
  explicit PartitionSearch(const PlexCatalogue& cat)
      : cat_(cat), n_(cat.order()), cells_(cat.cells()), full_(full_cell_set(cat.order())) {}

  std::uint64_t count(Word128 used, int left) const {
    const int lead = std::countr_zero(~CellSet(used).row_mask(n_, 0));
    const int end = cat_.lead_begin(lead + 1);
    std::uint64_t total = 0;
    for (int i = cat_.lead_begin(lead); i < end;) {
      const Word128 clash = cells_[static_cast<std::size_t>(i)].bits() & used;
      if (clash) {
        i = cat_.skip(i, lowest_bit128(clash) / n_);
        continue;
      }
      // With two parts left the complement of this plex is the final part.
      total += left == 2 ? 1 : count(used | cells_[static_cast<std::size_t>(i)].bits(), left - 1);
      ++i;
    }
    return total;
  }

  bool visit(Word128 used, int left, std::vector<int>& chosen,
             const std::function<bool(std::span<const int>)>& f) const {
    const int lead = std::countr_zero(~CellSet(used).row_mask(n_, 0));
    const int end = cat_.lead_begin(lead + 1);
    for (int i = cat_.lead_begin(lead); i < end;) {
      const Word128 clash = cells_[static_cast<std::size_t>(i)].bits() & used;
      if (clash) {
        i = cat_.skip(i, lowest_bit128(clash) / n_);
        continue;
      }
      const Word128 next = used | cells_[static_cast<std::size_t>(i)].bits();
      chosen.push_back(i);
      bool keep_going = true;
      if (left == 1) {
        keep_going = next == full_.bits() ? f(chosen) : true;
      } else {
        keep_going = visit(next, left - 1, chosen, f);
      }
      chosen.pop_back();
      if (!keep_going) return false;
      ++i;
    }
    return true;
  }

 private:
  const PlexCatalogue& cat_;
  int n_;
  std::span<const CellSet> cells_;
  CellSet full_;
};

// Counts with one bitset of pairwise-disjoint plexes per plex: the
// candidates at each depth are the AND of the rows of the chosen parts, so
// the last free part is a popcount over one lead group.
class BitsetPartitionCount {
 public:
  explicit BitsetPartitionCount(const PlexCatalogue& cat)
      : cat_(cat), n_(cat.order()), words_((static_cast<std::size_t>(cat.size()) + 63) / 64) {
    const auto cells = cat.cells();
    const std::size_t t = cells.size();
    rows_.assign(t * words_, 0);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j)
        if (!(cells[i].bits() & cells[j].bits())) {
          rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
          rows_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
        }
  }

  std::uint64_t count(int parts) const {
    std::vector<std::uint64_t> all(words_, ~std::uint64_t{0});
    return search(all, 0, parts);
  }

 private:
  std::uint64_t search(const std::vector<std::uint64_t>& cand, Word128 used, int left) const {
    const int lead = std::countr_zero(~CellSet(used).row_mask(n_, 0));
    const std::size_t begin = static_cast<std::size_t>(cat_.lead_begin(lead));
    const std::size_t end = static_cast<std::size_t>(cat_.lead_begin(lead + 1));
    if (begin >= end) return 0;
    std::uint64_t total = 0;
    if (left == 2) {
      // The complement of the chosen part is the final part.
      for (std::size_t w = begin / 64; w <= (end - 1) / 64; ++w) total += std::popcount(masked(cand[w], w, begin, end));
      return total;
    }
    std::vector<std::uint64_t> next(words_);
    for (std::size_t w = begin / 64; w <= (end - 1) / 64; ++w) {
      for (std::uint64_t bits = masked(cand[w], w, begin, end); bits; bits &= bits - 1) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        const std::uint64_t* row = &rows_[i * words_];
        bool any = false;
        for (std::size_t x = end / 64; x < words_; ++x) {
          next[x] = cand[x] & row[x];
          any |= next[x] != 0;
        }
        if (any) total += search(next, used | cat_.cells()[i].bits(), left - 1);
      }
    }
    return total;
  }

  static std::uint64_t masked(std::uint64_t word, std::size_t w, std::size_t begin, std::size_t end) {
    const std::size_t lo = w * 64, hi = lo + 64;
    if (begin > lo) word &= ~std::uint64_t{0} << (begin - lo);
    if (end < hi) word &= (std::uint64_t{1} << (end - lo)) - 1;
    return word;
  }

  const PlexCatalogue& cat_;
  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

constexpr int kBitsetCountLimit = 1 << 14;

}  // namespace

std::uint64_t count_partitions(const PlexCatalogue& catalogue) {
  const int n = catalogue.order();
  const int p = catalogue.multiplicity();
  if (n == 0 || n % p != 0 || catalogue.empty()) return 0;
  const int parts = n / p;
  if (parts == 1) return 1;
  if (catalogue.size() <= kBitsetCountLimit) return BitsetPartitionCount(catalogue).count(parts);
  return PartitionSearch(catalogue).count(0, parts);
}

void for_each_partition(const PlexCatalogue& catalogue,
                        const std::function<bool(std::span<const int>)>& visit) {
  const int n = catalogue.order();
  const int p = catalogue.multiplicity();
  if (n == 0 || n % p != 0 || catalogue.empty()) return;
  std::vector<int> chosen;
  PartitionSearch(catalogue).visit(0, n / p, chosen, visit);
}

std::uint64_t theta(const LatinSquare& square) {
  return count_partitions(enumerate_plexes(build_profile(MolsList(square)), 1));
}

namespace {

class DisjointSearch {
 public:
  explicit DisjointSearch(const PlexCatalogue& cat) : cat_(cat), n_(cat.order()) {}

  int run() {
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(int from_col, Word128 used, int depth) {
    best_ = std::max(best_, depth);
    if (best_ == n_ || depth + (n_ - from_col) <= best_) return;
    for (int c = from_col; c < n_; ++c) {
      const int end = cat_.lead_begin(c + 1);
      for (int i = cat_.lead_begin(c); i < end;) {
        const Word128 clash = cat_.cells()[static_cast<std::size_t>(i)].bits() & used;
        if (clash) {
          i = cat_.skip(i, lowest_bit128(clash) / n_);
          continue;
        }
        search(c + 1, used | cat_.cells()[static_cast<std::size_t>(i)].bits(), depth + 1);
        if (best_ == n_ || depth + (n_ - c) <= best_) return;
        ++i;
      }
    }
  }

  const PlexCatalogue& cat_;
  int n_;
  int best_ = 0;
};

// Fixed-width bitset over catalogue indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

class AlphaSearch {
 public:
  AlphaSearch(const PlexCatalogue& cat, std::span<const CellPermutation> symmetries)
      : cat_(cat), m_(static_cast<std::size_t>(cat.size())) {
    const auto cells = cat.cells();
    disjoint_.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      IndexSet s(m_);
      for (std::size_t j = 0; j < m_; ++j) {
        if (cells[i].disjoint(cells[j])) s.set(j);
      }
      disjoint_.push_back(std::move(s));
    }
    orbit_rep_.resize(m_);
    std::iota(orbit_rep_.begin(), orbit_rep_.end(), 0);
    if (!symmetries.empty()) build_orbits(symmetries);
  }

  bool exists_maximal_family(int size) {
    target_ = size;
    for (std::size_t first = 0; first < m_; ++first) {
      if (orbit_rep_[first] != first) continue;
      if (extend(disjoint_[first], 1, symmetric_ ? 0 : first + 1, orbit_rep_[first])) return true;
    }
    return false;
  }

 private:
  // Families are built as {first} plus members with increasing index, each
  // of whose orbit representative is no smaller than first's.
  bool extend(const IndexSet& open, int depth, std::size_t from, std::size_t min_rep) {
    if (depth == target_) return open.empty();
    if (open.empty()) return false;
    const auto& words = open.words();
    for (std::size_t w = from / 64; w < words.size(); ++w) {
      std::uint64_t bits = words[w];
      if (w == from / 64) bits &= ~std::uint64_t{0} << (from % 64);
      for (; bits; bits &= bits - 1) {
        const std::size_t t = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (orbit_rep_[t] < min_rep) continue;
        IndexSet next = open;
        auto& nw = next.words();
        const auto& dw = disjoint_[t].words();
        for (std::size_t x = 0; x < nw.size(); ++x) nw[x] &= dw[x];
        if (extend(next, depth + 1, t + 1, min_rep)) return true;
      }
    }
    return false;
  }

  void build_orbits(std::span<const CellPermutation> symmetries) {
    const int n = cat_.order();
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
    auto hash = [](Word128 w) {
      return static_cast<std::uint64_t>(w) * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(w >> 64);
    };
    const auto cells = cat_.cells();
    for (std::size_t i = 0; i < m_; ++i) by_hash[hash(cells[i].bits())].push_back(i);
    auto index_of = [&](CellSet s) -> std::size_t {
      for (std::size_t i : by_hash[hash(s.bits())])
        if (cells[i] == s) return i;
      throw Error(ErrorKind::OutOfRange, "symmetry does not preserve the plex catalogue");
    };
    std::vector<std::size_t> parent(m_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : symmetries) {
      if (static_cast<int>(g.size()) != n * n) {
        throw Error(ErrorKind::SizeMismatch, "cell permutation has wrong degree");
      }
      for (std::size_t i = 0; i < m_; ++i) {
        Word128 image = 0;
        cells[i].for_each([&](int cell) { image |= Word128{1} << g[static_cast<std::size_t>(cell)]; });
        const std::size_t a = find(i), b = find(index_of(CellSet(image)));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t i = 0; i < m_; ++i) orbit_rep_[i] = find(i);
    symmetric_ = true;
  }

  const PlexCatalogue& cat_;
  std::size_t m_;
  std::vector<IndexSet> disjoint_;
  std::vector<std::size_t> orbit_rep_;
  bool symmetric_ = false;
  int target_ = 0;
};

}  // namespace

int max_disjoint(const PlexCatalogue& catalogue) {
  if (catalogue.empty()) return 0;
  return DisjointSearch(catalogue).run();
}

int alpha(const PlexCatalogue& catalogue, std::span<const CellPermutation> symmetries) {
  if (catalogue.empty()) throw Error(ErrorKind::NoTransversals, "alpha needs at least one transversal");
  AlphaSearch search(catalogue, symmetries);
  for (int size = 1; size <= catalogue.order(); ++size) {
    if (search.exists_maximal_family(size)) return size;
  }
  return catalogue.order();
}

int alpha(const LatinSquare& square) {
  return alpha(enumerate_plexes(build_profile(MolsList(square)), 1));
}

bool is_plex(const MolsList& mols, CellSet cells, int p) {
  const int n = mols.order();
  const int k = mols.size();
  std::vector<int> count(static_cast<std::size_t>((k + 2) * n), 0);
  cells.for_each([&](int idx) {
    const int r = idx / n, c = idx % n;
    ++count[static_cast<std::size_t>(r)];
    ++count[static_cast<std::size_t>(n + c)];
    for (int i = 0; i < k; ++i) ++count[static_cast<std::size_t>((2 + i) * n + mols[i](r, c))];
  });
  return std::all_of(count.begin(), count.end(), [p](int x) { return x == p; });
}

}  // namespace molscope
