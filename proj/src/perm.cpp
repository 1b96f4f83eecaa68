#include "tpk/perm.hpp"

#include "tpk/error.hpp"

namespace tpk {

Color color_from_int(int value) {
  if (value < 1 || value > 3)
    throw InvalidInput("color must be 1, 2 or 3, got " + std::to_string(value));
  return static_cast<Color>(value);
}

PermS3::PermS3(std::array<int, 3> images) {
  std::array<bool, 3> seen{};
  for (std::size_t i = 0; i < 3; ++i) {
    int v = images[i];
    if (v < 1 || v > 3 || seen[v - 1])
      throw InvalidInput("not a permutation of {1,2,3}");
    seen[v - 1] = true;
    image_[i] = static_cast<std::uint8_t>(v);
  }
}

PermS3 PermS3::transposition(int a, int b) {
  if (a == b || a < 1 || a > 3 || b < 1 || b > 3)
    throw InvalidInput("transposition needs two distinct letters in {1,2,3}");
  std::array<int, 3> img{1, 2, 3};
  img[a - 1] = b;
  img[b - 1] = a;
  return PermS3(img);
}

int PermS3::operator()(int letter) const {
  if (letter < 1 || letter > 3)
    throw InvalidInput("letter out of range");
  return image_[letter - 1];
}

PermS3 PermS3::inverse() const noexcept {
  PermS3 out;
  for (int i = 0; i < 3; ++i)
    out.image_[image_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return out;
}

int PermS3::fixed_point_count() const noexcept {
  int n = 0;
  for (int i = 0; i < 3; ++i)
    n += image_[i] == i + 1;
  return n;
}

bool PermS3::is_transposition() const noexcept { return fixed_point_count() == 1; }

Color PermS3::as_color() const {
  if (!is_transposition())
    throw InvalidInput("permutation " + to_string() + " is not a reflection");
  for (int i = 0; i < 3; ++i)
    if (image_[i] == i + 1)
      return static_cast<Color>(i + 1);
  throw InvalidInput("unreachable");
}

std::string PermS3::to_string() const {
  // Cycle notation, identity printed as "()".
  std::string out;
  std::array<bool, 3> done{};
  for (int i = 0; i < 3; ++i) {
    if (done[i] || image_[i] == i + 1)
      continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first)
        out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = image_[j] - 1;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermS3 compose(const PermS3& p, const PermS3& q) noexcept {
  std::array<int, 3> img{};
  for (int i = 1; i <= 3; ++i)
    img[i - 1] = p(q(i));
  return PermS3(img);
}

PermS3 as_transposition(Color c) noexcept {
  switch (c) {
  case Color::One:
    return PermS3::transposition(2, 3);
  case Color::Two:
    return PermS3::transposition(1, 3);
  case Color::Three:
    break;
  }
  return PermS3::transposition(1, 2);
}

Color conjugate(Color a, Color b) noexcept {
  const PermS3 ta = as_transposition(a);
  return compose(compose(ta, as_transposition(b)), ta).as_color();
}

std::ostream& operator<<(std::ostream& os, Color c) { return os << to_int(c); }

std::ostream& operator<<(std::ostream& os, const PermS3& p) { return os << p.to_string(); }

} // namespace tpk
