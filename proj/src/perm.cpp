#include "widthlab/perm.hpp"

#include <algorithm>

#include "widthlab/error.hpp"

namespace widthlab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::NonInvolutiveGluing: return "NonInvolutiveGluing";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateFaceAssignment: return "DuplicateFaceAssignment";
    case Errc::Disconnected: return "Disconnected";
    case Errc::InvalidTriangulation: return "InvalidTriangulation";
    case Errc::MoreThanOneSelfGluedPair: return "MoreThanOneSelfGluedPair";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::InvalidHost: return "InvalidHost";
    case Errc::InvalidDecomposition: return "InvalidDecomposition";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::HostDoesNotMatchGraph: return "HostDoesNotMatchGraph";
    case Errc::NotSorted: return "NotSorted";
    case Errc::MissingWidths: return "MissingWidths";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

std::optional<Perm4> Perm4::from_images(const std::array<int, 4>& images) {
  std::array<bool, 4> seen{};
  for (int x : images) {
    if (x < 0 || x > 3 || seen[x]) return std::nullopt;
    seen[x] = true;
  }
  Perm4 p;
  for (int i = 0; i < 4; ++i) p.image_[i] = static_cast<std::uint8_t>(images[i]);
  return p;
}

Perm4 Perm4::inverse() const {
  Perm4 p;
  for (int i = 0; i < 4; ++i) p.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

Perm4 operator*(const Perm4& a, const Perm4& b) {
  Perm4 p;
  for (int i = 0; i < 4; ++i) p.image_[i] = a.image_[b.image_[i]];
  return p;
}

int Perm4::sign() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (image_[i] > image_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::string Perm4::str() const {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + image_[i]);
  return s;
}

const std::array<Perm4, 24>& Perm4::all() {
  static const std::array<Perm4, 24> perms = [] {
    std::array<Perm4, 24> out;
    std::array<int, 4> images{0, 1, 2, 3};
    int k = 0;
    do {
      out[k++] = *from_images(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }();
  return perms;
}

}  // namespace widthlab
