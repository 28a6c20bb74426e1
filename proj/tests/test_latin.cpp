#include <doctest.h>

#include "molscope/latin_square.hpp"
#include "molscope/random.hpp"
#include "oracles.hpp"

using namespace molscope;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("validate rejects malformed grids") {
  CHECK(kind_of([] { validate({{0, 1}, {1}}); }) == ErrorKind::BadShape);
  CHECK(kind_of([] { validate({{0, 2}, {2, 0}}); }) == ErrorKind::BadSymbol);
  CHECK(kind_of([] { validate({{0, 0}, {1, 1}}); }) == ErrorKind::DuplicateInRow);
  CHECK(kind_of([] { validate({{0, 1}, {0, 1}}); }) == ErrorKind::DuplicateInColumn);
  CHECK(kind_of([] { validate(std::vector<std::vector<int>>(11, std::vector<int>(11))); }) == ErrorKind::BadShape);
  try {
    validate({{0, 1, 2}, {1, 2, 0}, {1, 0, 2}});
  } catch (const Error& e) {
    CHECK(e.index() == 0);  // column 0 holds 1 twice
  }
}

TEST_CASE("reduce returns a reduced isotope and the isotopism reaching it") {
  Rng rng(7);
  for (int n = 1; n <= 9; ++n) {
    const LatinSquare sq = random_latin_square(n, rng);
    const auto [red, iso] = reduce(sq);
    CHECK(is_reduced(red));
    CHECK(apply_isotopism(sq, iso) == red);
  }
}

TEST_CASE("isotopism composition applies the right factor first") {
  Rng rng(3);
  const LatinSquare sq = random_latin_square(6, rng);
  const Isotopism a = random_isotopism(6, rng), b = random_isotopism(6, rng);
  CHECK(apply_isotopism(sq, a * b) == apply_isotopism(apply_isotopism(sq, b), a));
  CHECK(apply_isotopism(apply_isotopism(sq, a), a.inverse()) == sq);
}

TEST_CASE("subsquare counts") {
  CHECK(count_intercalates(cyclic_square(4)) == 4);
  CHECK(count_intercalates(elementary_abelian_square(2, 2)) == 12);
  CHECK(count_intercalates(cyclic_square(5)) == 0);
  CHECK(count_subsquares(cyclic_square(6), 3) == 4);
  CHECK(count_subsquares(cyclic_square(6), 2) == 9);
  // Rows {a, a+3} x columns {b, b+3} of Z6 in every position.
  CHECK(count_subsquares(elementary_abelian_square(3, 2), 3) == 36);
}

TEST_CASE("orthogonality") {
  const LatinSquare a = cyclic_square(5);
  std::vector<int> cells;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) cells.push_back((2 * i + j) % 5);
  const LatinSquare b = validate(5, cells);
  CHECK(are_orthogonal(a, b));
  CHECK(count_distinct_pairs(a, b) == 25);
  CHECK_FALSE(are_orthogonal(a, transpose(a)));
  CHECK(count_distinct_pairs(a, a) == 5);
}

TEST_CASE("automorphisms of standard squares") {
  // x -> 2x is an automorphism of Z_7.
  CHECK(is_automorphism(cyclic_square(7), Permutation({0, 2, 4, 6, 1, 3, 5})));
  CHECK_FALSE(is_automorphism(cyclic_square(7), Permutation({1, 2, 3, 4, 5, 6, 0})));
  const LatinSquare s = steiner_square_7();
  for (int i = 0; i < 7; ++i) CHECK(s(i, i) == i);
  CHECK(transpose(s) == s);
}
