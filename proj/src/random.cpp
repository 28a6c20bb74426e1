#include "molscope/random.hpp"

#include <algorithm>
#include <numeric>

namespace molscope {

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

Isotopism random_isotopism(int n, Rng& rng) {
  return {random_permutation(n, rng), random_permutation(n, rng), random_permutation(n, rng)};
}

namespace {

// Incidence cube of a (possibly improper) latin square: m[x][y][z] in
// {-1, 0, 1}, at most one -1 entry.
class Cube {
 public:
  explicit Cube(int n) : n_(n), m_(static_cast<std::size_t>(n * n * n), 0) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) at(x, y, (x + y) % n) = 1;
  }
  signed char& at(int x, int y, int z) { return m_[static_cast<std::size_t>((x * n_ + y) * n_ + z)]; }

  void step(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    int x, y, z;
    if (improper_) {
      x = ix_, y = iy_, z = iz_;
    } else {
      do {
        x = pick(rng), y = pick(rng), z = pick(rng);
      } while (at(x, y, z) != 0);
    }
    const int x1 = choose([&](int t) { return at(t, y, z); }, rng);
    const int y1 = choose([&](int t) { return at(x, t, z); }, rng);
    const int z1 = choose([&](int t) { return at(x, y, t); }, rng);
    ++at(x, y, z);
    ++at(x, y1, z1);
    ++at(x1, y, z1);
    ++at(x1, y1, z);
    --at(x1, y, z);
    --at(x, y1, z);
    --at(x, y, z1);
    --at(x1, y1, z1);
    improper_ = at(x1, y1, z1) < 0;
    if (improper_) ix_ = x1, iy_ = y1, iz_ = z1;
  }

  bool proper() const { return !improper_; }

  LatinSquare square() {
    std::vector<Symbol> cells(static_cast<std::size_t>(n_ * n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z)
          if (at(x, y, z) == 1) cells[static_cast<std::size_t>(x * n_ + y)] = static_cast<Symbol>(z);
    return LatinSquare::unchecked(n_, std::move(cells));
  }

 private:
  // A uniformly chosen t with f(t) == 1 (one or two candidates).
  template <class F>
  int choose(F f, Rng& rng) {
    int found[2], k = 0;
    for (int t = 0; t < n_ && k < 2; ++t)
      if (f(t) == 1) found[k++] = t;
    if (k == 1) return found[0];
    return found[std::uniform_int_distribution<int>(0, 1)(rng)];
  }

  int n_;
  std::vector<signed char> m_;
  bool improper_ = false;
  int ix_ = 0, iy_ = 0, iz_ = 0;
};

}  // namespace

LatinSquare random_latin_square(int n, Rng& rng, int steps) {
  if (n < 1 || n > kMaxOrder) throw Error(ErrorKind::BadShape, "order must be in 1..10");
  if (n == 1) return cyclic_square(1);
  Cube cube(n);
  if (steps <= 0) steps = n * n * n;
  for (int i = 0; i < steps || !cube.proper(); ++i) cube.step(rng);
  return cube.square();
}

MolsList random_paratope(const MolsList& mols, Rng& rng) {
  const OrthogonalArray oa = to_oa(mols);
  const int n = oa.order(), w = oa.width();
  const Permutation cols = random_permutation(w, rng);
  std::vector<Permutation> syms;
  for (int j = 0; j < w; ++j) syms.push_back(random_permutation(n, rng));
  std::vector<Symbol> entries(oa.entries().size());
  for (int row = 0; row < oa.num_rows(); ++row)
    for (int j = 0; j < w; ++j)
      entries[static_cast<std::size_t>(row * w + j)] =
          static_cast<Symbol>(syms[static_cast<std::size_t>(j)](oa(row, cols(j))));
  return from_oa(OrthogonalArray::unchecked(n, w, std::move(entries)), {0, 1});
}

MolsList random_isotope(const MolsList& mols, Rng& rng) {
  const int n = mols.order();
  const Permutation rows = random_permutation(n, rng), cols = random_permutation(n, rng);
  std::vector<LatinSquare> out;
  for (const LatinSquare& sq : mols.squares())
    out.push_back(apply_isotopism(sq, {rows, cols, random_permutation(n, rng)}));
  return MolsList::unchecked(std::move(out));
}

}  // namespace molscope
