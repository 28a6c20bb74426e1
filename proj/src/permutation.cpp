#include "molscope/permutation.hpp"

#include <numeric>

#include "molscope/errors.hpp"

namespace molscope {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::BadSymbol: return "BadSymbol";
    case ErrorKind::DuplicateInRow: return "DuplicateInRow";
    case ErrorKind::DuplicateInColumn: return "DuplicateInColumn";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::InvalidColumns: return "InvalidColumns";
    case ErrorKind::WidthExceeded: return "WidthExceeded";
    case ErrorKind::CatalogueOverflow: return "CatalogueOverflow";
    case ErrorKind::NoTransversals: return "NoTransversals";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

bool is_permutation(std::span<const int> image) {
  std::vector<char> seen(image.size(), 0);
  for (int v : image) {
    if (v < 0 || static_cast<std::size_t>(v) >= image.size() || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  if (!is_permutation(image_)) {
    throw Error(ErrorKind::OutOfRange, "image table is not a bijection");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  }
  Permutation result;
  result.image_ = std::move(inv);
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::SizeMismatch, "composing permutations of different degree");
  }
  std::vector<int> image(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) image[static_cast<std::size_t>(i)] = a(b(i));
  Permutation result;
  result.image_ = std::move(image);
  return result;
}

}  // namespace molscope
