#include "molscope/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "molscope/errors.hpp"

namespace molscope {

ColoredGraph::ColoredGraph(int num_vertices)
    : adj_(static_cast<std::size_t>(num_vertices)), colors_(static_cast<std::size_t>(num_vertices), 0) {}

void ColoredGraph::add_edge(int u, int v) {
  if (u == v || adjacent(u, v)) return;
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
  ++num_edges_;
}

bool ColoredGraph::adjacent(int u, int v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::find(a.begin(), a.end(), v) != a.end();
}

const char* to_string(EquivalenceMode mode) {
  switch (mode) {
    case EquivalenceMode::SpeciesMols: return "species";
    case EquivalenceMode::IsotopismList: return "isotopism-list";
    case EquivalenceMode::IsotopismSet: return "isotopism-set";
    case EquivalenceMode::TrisotopismList: return "trisotopism-list";
    case EquivalenceMode::TrisotopismSet: return "trisotopism-set";
    case EquivalenceMode::SpeciesLS: return "species-ls";
  }
  return "?";
}

namespace {

constexpr int kSymbolColor = 1000;
constexpr int kRowColor = 1001;

int column_color(EquivalenceMode mode, int col) {
  switch (mode) {
    case EquivalenceMode::SpeciesMols:
    case EquivalenceMode::SpeciesLS: return 0;
    case EquivalenceMode::IsotopismList: return col;
    case EquivalenceMode::IsotopismSet: return std::min(col, 2);
    case EquivalenceMode::TrisotopismList: return std::max(col - 1, 0);
    case EquivalenceMode::TrisotopismSet: return col < 2 ? 0 : 2;
  }
  return 0;
}

}  // namespace

ColoredGraph encode_graph(const OrthogonalArray& oa, EquivalenceMode mode) {
  const OaGraphLayout lay{oa.order(), oa.width()};
  ColoredGraph g(lay.num_vertices());
  for (int col = 0; col < lay.width; ++col) {
    g.set_color(lay.column_vertex(col), column_color(mode, col));
    for (int s = 0; s < lay.n; ++s) {
      g.set_color(lay.symbol_vertex(col, s), kSymbolColor);
      g.add_edge(lay.column_vertex(col), lay.symbol_vertex(col, s));
    }
  }
  for (int row = 0; row < oa.num_rows(); ++row) {
    g.set_color(lay.row_vertex(row), kRowColor);
    for (int col = 0; col < lay.width; ++col) g.add_edge(lay.row_vertex(row), lay.symbol_vertex(col, oa(row, col)));
  }
  return g;
}

std::string CanonicalCertificate::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char b : bytes_) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

CanonicalCertificate CanonicalCertificate::from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2) throw Error(ErrorKind::Parse, "odd-length certificate");
  std::string bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorKind::Parse, "bad hex digit in certificate");
    bytes.push_back(static_cast<char>(hi * 16 + lo));
  }
  return CanonicalCertificate(std::move(bytes));
}

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 29);
}

// Ordered partition of the vertices. Cells are contiguous runs of `elems`;
// a cell is named by its first position.
struct Partition {
  std::vector<int> elems;
  std::vector<int> pos;
  std::vector<int> cell_of;   // position -> start of its cell
  std::vector<int> cell_end;  // start -> one past the end
  int num_cells = 0;

  int size() const { return static_cast<int>(elems.size()); }
  bool discrete() const { return num_cells == size(); }
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

using Bitmap = std::vector<std::uint64_t>;
using Trace = std::vector<std::uint64_t>;

class Canonizer {
 public:
  explicit Canonizer(const ColoredGraph& g);
  CanonicalForm run(bool want_certificate, bool want_group = true);

 private:
  std::size_t idx(int i) const { return static_cast<std::size_t>(i); }

  int refine(Partition& p, std::vector<int> splitters, Trace& trace, const Trace* ref = nullptr,
             bool exact = false);
  int individualize(Partition& p, int v) const;
  int target_cell(const Partition& p);
  Bitmap leaf_bitmap(const Partition& p) const;
  std::vector<int> leaf_map(const std::vector<int>& from, const Partition& to) const;

  void first_path();
  void stabilizer_chain();
  std::optional<std::vector<int>> find_automorphism(const Partition& p, int depth);
  UnionFind orbits_fixing(const std::vector<int>& prefix) const;
  int canonical_search(const Partition& p, int depth, bool equal);
  void take_best(const Partition& p, Bitmap bm);

  int v_;
  std::vector<int> start_, adj_;  // CSR adjacency
  std::vector<int> colors_;

  // refinement scratch
  std::vector<int> count_;
  std::vector<char> in_queue_;
  std::vector<int> touched_, touched_cells_, queue_, scratch_, frags_;

  // leftmost path; fp_trace_[i] is the trace of the refinement at depth i
  std::vector<Partition> fp_nodes_;
  std::vector<int> fp_vertex_;
  std::vector<Trace> fp_trace_;
  Bitmap fp_bitmap_;
  int fp_depth_ = 0;

  std::vector<std::vector<int>> gens_;
  ExactInt order_ = 1;

  // canonical search state; traces_[i] belongs to depth i+1
  std::vector<int> path_;
  std::vector<Trace> traces_;
  bool have_best_ = false;
  long best_version_ = 0;
  std::vector<int> best_path_;
  std::vector<Trace> best_traces_;
  Bitmap best_bitmap_;
  std::vector<int> best_elems_;
};

Canonizer::Canonizer(const ColoredGraph& g) : v_(g.num_vertices()) {
  start_.assign(idx(v_ + 1), 0);
  for (int v = 0; v < v_; ++v) start_[idx(v + 1)] = start_[idx(v)] + static_cast<int>(g.neighbors(v).size());
  adj_.reserve(idx(start_.back()));
  for (int v = 0; v < v_; ++v)
    for (int u : g.neighbors(v)) adj_.push_back(u);
  colors_.assign(g.colors().begin(), g.colors().end());
  count_.assign(idx(v_), 0);
  in_queue_.assign(idx(v_), 0);
}

// Equitable refinement driven by a queue of splitter cells. The trace gets
// one hash per splitter; it depends only on the cell structure and
// neighbour counts, so it is invariant under relabelling. Given a reference
// trace, returns its comparison with the new trace (-1, 0, 1), stopping
// early once the trace is known to be larger, or to differ at all when
// `exact` is set.
int Canonizer::refine(Partition& p, std::vector<int> splitters, Trace& trace, const Trace* ref,
                      bool exact) {
  int cmp = 0;
  bool aborted = false;
  auto record = [&](std::uint64_t x) {
    trace.push_back(x);
    if (!ref || cmp != 0) return;
    const std::size_t j = trace.size() - 1;
    if (j >= ref->size() || x > (*ref)[j]) {
      aborted = true;
    } else if (x < (*ref)[j]) {
      cmp = -1;
      aborted = exact;
    }
  };
  std::uint64_t h = 0x1234567;
  queue_ = std::move(splitters);
  for (int s : queue_) in_queue_[idx(s)] = 1;
  std::size_t head = 0;
  while (head < queue_.size() && !p.discrete() && !aborted) {
    const int s = queue_[head++];
    in_queue_[idx(s)] = 0;
    const int se = p.cell_end[idx(s)];
    h = mix(h, static_cast<std::uint64_t>(s));
    for (int q = s; q < se; ++q) {
      const int v = p.elems[idx(q)];
      for (int e = start_[idx(v)]; e < start_[idx(v + 1)]; ++e) {
        const int u = adj_[idx(e)];
        if (count_[idx(u)]++ == 0) touched_.push_back(u);
      }
    }
    // Group the touched vertices by cell, ascending count within a cell.
    std::sort(touched_.begin(), touched_.end(), [&](int x, int y) {
      const int cx = p.cell_of[idx(p.pos[idx(x)])], cy = p.cell_of[idx(p.pos[idx(y)])];
      return cx != cy ? cx < cy : count_[idx(x)] < count_[idx(y)];
    });
    for (std::size_t a = 0; a < touched_.size();) {
      const int c = p.cell_of[idx(p.pos[idx(touched_[a])])];
      std::size_t b = a + 1;
      while (b < touched_.size() && p.cell_of[idx(p.pos[idx(touched_[b])])] == c) ++b;
      const int ce = p.cell_end[idx(c)];
      const int lo = count_[idx(touched_[a])], hi = count_[idx(touched_[b - 1])];
      if (static_cast<int>(b - a) == ce - c && lo == hi) {
        h = mix(h, static_cast<std::uint64_t>(c) << 20 | static_cast<std::uint64_t>(lo));
        a = b;
        continue;
      }
      // Untouched members (count 0) first, then the touched ones.
      scratch_.clear();
      for (int q = c; q < ce; ++q)
        if (count_[idx(p.elems[idx(q)])] == 0) scratch_.push_back(p.elems[idx(q)]);
      scratch_.insert(scratch_.end(), touched_.begin() + static_cast<std::ptrdiff_t>(a),
                      touched_.begin() + static_cast<std::ptrdiff_t>(b));
      for (int q = c; q < ce; ++q) {
        p.elems[idx(q)] = scratch_[idx(q - c)];
        p.pos[idx(p.elems[idx(q)])] = q;
      }
      const bool was_queued = in_queue_[idx(c)] != 0;
      int largest = -1, largest_size = 0;
      frags_.clear();
      for (int q = c; q < ce;) {
        const int cnt = count_[idx(p.elems[idx(q)])];
        int r = q + 1;
        while (r < ce && count_[idx(p.elems[idx(r)])] == cnt) ++r;
        frags_.push_back(q);
        p.cell_end[idx(q)] = r;
        for (int t = q; t < r; ++t) p.cell_of[idx(t)] = q;
        h = mix(h, static_cast<std::uint64_t>(q) << 40 | static_cast<std::uint64_t>(cnt) << 20 |
                       static_cast<std::uint64_t>(r - q));
        if (r - q > largest_size) {
          largest_size = r - q;
          largest = q;
        }
        q = r;
      }
      p.num_cells += static_cast<int>(frags_.size()) - 1;
      for (int f : frags_) {
        if (in_queue_[idx(f)]) continue;
        if (!was_queued && f == largest) continue;
        in_queue_[idx(f)] = 1;
        queue_.push_back(f);
      }
      a = b;
    }
    for (int u : touched_) count_[idx(u)] = 0;
    touched_.clear();
    record(h);
  }
  for (std::size_t i = head; i < queue_.size(); ++i) in_queue_[idx(queue_[i])] = 0;
  queue_.clear();
  if (aborted) return cmp != 0 ? cmp : 1;
  record(mix(h, static_cast<std::uint64_t>(p.num_cells)));
  if (aborted) return cmp != 0 ? cmp : 1;
  if (cmp == 0 && ref && trace.size() < ref->size()) cmp = -1;
  return cmp;
}

int Canonizer::individualize(Partition& p, int v) const {
  const int q = p.pos[idx(v)];
  const int s = p.cell_of[idx(q)];
  const int e = p.cell_end[idx(s)];
  const int w = p.elems[idx(s)];
  std::swap(p.elems[idx(s)], p.elems[idx(q)]);
  p.pos[idx(v)] = s;
  p.pos[idx(w)] = q;
  p.cell_end[idx(s)] = s + 1;
  p.cell_end[idx(s + 1)] = e;
  for (int t = s + 1; t < e; ++t) p.cell_of[idx(t)] = s + 1;
  ++p.num_cells;
  return s;
}

// The non-singleton cell joined non-trivially to the most cells (first one
// on ties). Individualizing there makes refinement cascade much further than
// picking the smallest cell.
int Canonizer::target_cell(const Partition& p) {
  int best = -1, best_score = -1;
  for (int s = 0; s < v_; s = p.cell_end[idx(s)]) {
    if (p.cell_end[idx(s)] - s <= 1) continue;
    const int v = p.elems[idx(s)];
    for (int e = start_[idx(v)]; e < start_[idx(v + 1)]; ++e) {
      const int c = p.cell_of[idx(p.pos[idx(adj_[idx(e)])])];
      if (count_[idx(c)]++ == 0) touched_cells_.push_back(c);
    }
    int score = 0;
    for (int c : touched_cells_) {
      score += count_[idx(c)] < p.cell_end[idx(c)] - c;
      count_[idx(c)] = 0;
    }
    touched_cells_.clear();
    if (score > best_score) {
      best_score = score;
      best = s;
    }
  }
  return best;
}

Bitmap Canonizer::leaf_bitmap(const Partition& p) const {
  const std::size_t bits = idx(v_) * idx(v_ - 1) / 2;
  Bitmap bm((bits + 63) / 64, 0);
  for (int v = 0; v < v_; ++v) {
    const int i = p.pos[idx(v)];
    for (int e = start_[idx(v)]; e < start_[idx(v + 1)]; ++e) {
      const int j = p.pos[idx(adj_[idx(e)])];
      if (i >= j) continue;
      const std::size_t bit = idx(i) * idx(2 * v_ - i - 1) / 2 + idx(j - i - 1);
      bm[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }
  return bm;
}

// The automorphism sending the leaf with element order `from` to `to`.
std::vector<int> Canonizer::leaf_map(const std::vector<int>& from, const Partition& to) const {
  std::vector<int> gamma(idx(v_));
  for (int q = 0; q < v_; ++q) gamma[idx(from[idx(q)])] = to.elems[idx(q)];
  return gamma;
}

void Canonizer::first_path() {
  Partition root;
  root.elems.resize(idx(v_));
  std::iota(root.elems.begin(), root.elems.end(), 0);
  std::stable_sort(root.elems.begin(), root.elems.end(),
                   [&](int a, int b) { return colors_[idx(a)] < colors_[idx(b)]; });
  root.pos.resize(idx(v_));
  root.cell_of.resize(idx(v_));
  root.cell_end.assign(idx(v_), 0);
  std::vector<int> starts;
  for (int q = 0; q < v_;) {
    int r = q + 1;
    while (r < v_ && colors_[idx(root.elems[idx(r)])] == colors_[idx(root.elems[idx(q)])]) ++r;
    starts.push_back(q);
    root.cell_end[idx(q)] = r;
    for (int t = q; t < r; ++t) root.cell_of[idx(t)] = q;
    q = r;
  }
  for (int q = 0; q < v_; ++q) root.pos[idx(root.elems[idx(q)])] = q;
  root.num_cells = static_cast<int>(starts.size());
  fp_trace_.emplace_back();
  refine(root, starts, fp_trace_.back());
  fp_nodes_.push_back(std::move(root));
  while (!fp_nodes_.back().discrete()) {
    Partition child = fp_nodes_.back();
    const int v = child.elems[idx(target_cell(child))];
    const int s = individualize(child, v);
    fp_vertex_.push_back(v);
    fp_trace_.emplace_back();
    refine(child, {s}, fp_trace_.back());
    fp_nodes_.push_back(std::move(child));
  }
  fp_depth_ = static_cast<int>(fp_vertex_.size());
  fp_bitmap_ = leaf_bitmap(fp_nodes_.back());
}

// Search below `p` (at `depth`) for a leaf matching the leftmost leaf,
// following only children whose trace matches the leftmost path.
std::optional<std::vector<int>> Canonizer::find_automorphism(const Partition& p, int depth) {
  if (p.discrete()) {
    if (depth != fp_depth_ || leaf_bitmap(p) != fp_bitmap_) return std::nullopt;
    return leaf_map(fp_nodes_.back().elems, p);
  }
  if (depth >= fp_depth_) return std::nullopt;
  const int t = target_cell(p);
  const std::vector<int> cell(p.elems.begin() + t, p.elems.begin() + p.cell_end[idx(t)]);
  Trace trace;
  for (int u : cell) {
    Partition child = p;
    const int s = individualize(child, u);
    trace.clear();
    if (refine(child, {s}, trace, &fp_trace_[idx(depth + 1)], true) != 0) continue;
    if (auto gamma = find_automorphism(child, depth + 1)) return gamma;
  }
  return std::nullopt;
}

UnionFind Canonizer::orbits_fixing(const std::vector<int>& prefix) const {
  UnionFind uf(v_);
  for (const auto& g : gens_) {
    bool fixes = true;
    for (int x : prefix) fixes = fixes && g[idx(x)] == x;
    if (!fixes) continue;
    for (int x = 0; x < v_; ++x) uf.unite(x, g[idx(x)]);
  }
  return uf;
}

// For each level of the leftmost path, from the bottom up, find which
// vertices of the target cell the stabiliser of the path prefix can reach.
// The group order is the product of these orbit lengths.
void Canonizer::stabilizer_chain() {
  Trace trace;
  for (int i = fp_depth_ - 1; i >= 0; --i) {
    const Partition& node = fp_nodes_[idx(i)];
    const int vi = fp_vertex_[idx(i)];
    const int t = node.cell_of[idx(node.pos[idx(vi)])];
    const std::vector<int> prefix(fp_vertex_.begin(), fp_vertex_.begin() + i);
    std::vector<int> failed;
    UnionFind uf = orbits_fixing(prefix);
    for (int q = t; q < node.cell_end[idx(t)]; ++q) {
      const int w = node.elems[idx(q)];
      if (uf.find(w) == uf.find(vi)) continue;
      bool skip = false;
      for (int f : failed) skip = skip || uf.find(f) == uf.find(w);
      if (skip) continue;
      Partition child = node;
      const int s = individualize(child, w);
      trace.clear();
      std::optional<std::vector<int>> gamma;
      if (refine(child, {s}, trace, &fp_trace_[idx(i + 1)], true) == 0) gamma = find_automorphism(child, i + 1);
      if (gamma) {
        for (int x = 0; x < v_; ++x) uf.unite(x, (*gamma)[idx(x)]);
        gens_.push_back(std::move(*gamma));
      } else {
        failed.push_back(w);
      }
    }
    int orbit = 0;
    for (int q = t; q < node.cell_end[idx(t)]; ++q) orbit += uf.find(node.elems[idx(q)]) == uf.find(vi);
    order_ *= orbit;
  }
}

void Canonizer::take_best(const Partition& p, Bitmap bm) {
  have_best_ = true;
  ++best_version_;
  best_path_ = path_;
  best_traces_ = traces_;
  best_bitmap_ = std::move(bm);
  best_elems_ = p.elems;
}

// Depth-first search for the least leaf, ordered by the traces along the
// path and then by the adjacency bitmap. `equal` says the traces so far
// match the best leaf's. Returns the depth to backjump to after finding an
// automorphism, or -1.
int Canonizer::canonical_search(const Partition& p, int depth, bool equal) {
  if (p.discrete()) {
    Bitmap bm = leaf_bitmap(p);
    if (!have_best_ || !equal || best_traces_.size() > traces_.size() || bm < best_bitmap_) {
      take_best(p, std::move(bm));
      return -1;
    }
    if (bm != best_bitmap_) return -1;
    gens_.push_back(leaf_map(best_elems_, p));
    int d = 0;
    while (path_[idx(d)] == best_path_[idx(d)]) ++d;
    return d;
  }
  const int t = target_cell(p);
  const std::vector<int> cell(p.elems.begin() + t, p.elems.begin() + p.cell_end[idx(t)]);
  std::vector<int> explored;
  std::size_t gens_seen = gens_.size();
  UnionFind uf = orbits_fixing(path_);
  for (int u : cell) {
    if (gens_.size() != gens_seen) {
      uf = orbits_fixing(path_);
      gens_seen = gens_.size();
    }
    bool skip = false;
    for (int x : explored) skip = skip || uf.find(x) == uf.find(u);
    if (skip) continue;
    explored.push_back(u);
    Partition child = p;
    const int s = individualize(child, u);
    Trace trace;
    bool child_equal = true;
    if (have_best_ && equal) {
      if (best_traces_.size() <= idx(depth)) continue;
      const int cmp = refine(child, {s}, trace, &best_traces_[idx(depth)]);
      if (cmp > 0) continue;
      child_equal = cmp == 0;
    } else {
      refine(child, {s}, trace);
      child_equal = !have_best_;
    }
    path_.push_back(u);
    traces_.push_back(std::move(trace));
    const long version = best_version_;
    const int jump = canonical_search(child, depth + 1, child_equal);
    path_.pop_back();
    traces_.pop_back();
    if (best_version_ != version) equal = true;
    if (jump >= 0 && jump < depth) return jump;
  }
  return -1;
}

CanonicalForm Canonizer::run(bool want_certificate, bool want_group) {
  first_path();
  if (want_group) stabilizer_chain();
  CanonicalForm out;
  out.group_order = order_;
  if (want_certificate) {
    canonical_search(fp_nodes_.front(), 0, true);
    std::vector<std::pair<int, int>> hist;
    for (int q = 0; q < v_; ++q) {
      const int c = colors_[idx(best_elems_[idx(q)])];
      if (hist.empty() || hist.back().first != c) hist.push_back({c, 0});
      ++hist.back().second;
    }
    std::string bytes;
    auto put32 = [&](std::uint32_t x) {
      for (int b = 0; b < 4; ++b) bytes.push_back(static_cast<char>((x >> (8 * b)) & 255));
    };
    put32(static_cast<std::uint32_t>(v_));
    put32(static_cast<std::uint32_t>(hist.size()));
    for (auto [c, k] : hist) {
      put32(static_cast<std::uint32_t>(c));
      put32(static_cast<std::uint32_t>(k));
    }
    for (std::uint64_t w : best_bitmap_)
      for (int b = 0; b < 8; ++b) bytes.push_back(static_cast<char>((w >> (8 * b)) & 255));
    out.certificate = CanonicalCertificate(std::move(bytes));
    out.labeling.assign(idx(v_), 0);
    for (int q = 0; q < v_; ++q) out.labeling[idx(best_elems_[idx(q)])] = q;
  }
  out.generators = std::move(gens_);
  return out;
}

EquivalenceMode species_mode(const MolsList& mols) {
  return mols.size() == 1 ? EquivalenceMode::SpeciesLS : EquivalenceMode::SpeciesMols;
}

}  // namespace

CanonicalForm canonical_form(const ColoredGraph& graph) { return Canonizer(graph).run(true); }

CanonicalCertificate canonical_certificate(const ColoredGraph& graph) {
  return Canonizer(graph).run(true, false).certificate;
}

ExactInt automorphism_order(const ColoredGraph& graph) { return Canonizer(graph).run(false).group_order; }

CanonicalCertificate certificate(const OrthogonalArray& oa, EquivalenceMode mode) {
  return canonical_certificate(encode_graph(oa, mode));
}

CanonicalCertificate certificate(const MolsList& mols, EquivalenceMode mode) {
  return certificate(to_oa(mols), mode);
}

ExactInt par_order(const MolsList& mols) {
  return automorphism_order(encode_graph(to_oa(mols), species_mode(mols)));
}

ExactInt atp_order(const MolsList& mols) {
  return automorphism_order(encode_graph(to_oa(mols), EquivalenceMode::IsotopismList));
}

std::vector<CellPermutation> autoparatopism_cell_generators(const MolsList& mols) {
  const OaGraphLayout lay{mols.order(), mols.size() + 2};
  const CanonicalForm form = Canonizer(encode_graph(to_oa(mols), species_mode(mols))).run(false);
  std::vector<CellPermutation> out;
  const int cells = lay.n * lay.n;
  for (const auto& g : form.generators) {
    CellPermutation p(static_cast<std::size_t>(cells));
    for (int r = 0; r < cells; ++r)
      p[static_cast<std::size_t>(r)] = g[static_cast<std::size_t>(lay.row_vertex(r))] - lay.row_vertex(0);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<int>> autoparatopism_column_generators(const MolsList& mols) {
  const OaGraphLayout lay{mols.order(), mols.size() + 2};
  const CanonicalForm form = Canonizer(encode_graph(to_oa(mols), species_mode(mols))).run(false);
  std::vector<std::vector<int>> out;
  for (const auto& g : form.generators)
    out.emplace_back(g.begin(), g.begin() + lay.width);
  return out;
}

}  // namespace molscope
