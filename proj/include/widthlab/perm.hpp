#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace widthlab {

/// A permutation of the four vertex labels of a tetrahedron.
class Perm4 {
 public:
  constexpr Perm4() : image_{0, 1, 2, 3} {}

  /// Builds the map i -> images[i]; returns nullopt unless it is a bijection
  /// of {0,1,2,3}.
  static std::optional<Perm4> from_images(const std::array<int, 4>& images);

  constexpr int operator[](int i) const { return image_[i]; }

  Perm4 inverse() const;

  /// Composition (a * b)(i) = a[b[i]].
  friend Perm4 operator*(const Perm4& a, const Perm4& b);

  /// +1 for even permutations, -1 for odd ones.
  int sign() const;

  bool is_identity() const { return *this == Perm4(); }

  /// The four images as a string, e.g. "1032".
  std::string str() const;

  /// All 24 permutations in lexicographic order of their image strings.
  static const std::array<Perm4, 24>& all();

  friend constexpr auto operator<=>(const Perm4&, const Perm4&) = default;

 private:
  std::array<std::uint8_t, 4> image_;
};

}  // namespace widthlab
