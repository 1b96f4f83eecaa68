#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

namespace tpk {

/// One of the three Fox colors. Color i stands for the reflection of the
/// dihedral group of order 6 that fixes letter i.
enum class Color : std::uint8_t { One = 1, Two = 2, Three = 3 };

inline constexpr std::array<Color, 3> kAllColors{Color::One, Color::Two, Color::Three};

constexpr int to_int(Color c) noexcept { return static_cast<int>(c); }

/// Throws InvalidInput unless 1 <= value <= 3.
Color color_from_int(int value);

/// A bijection of {1,2,3}.
class PermS3 {
public:
  /// Identity.
  constexpr PermS3() noexcept : image_{1, 2, 3} {}

  /// images[i] is the image of letter i+1. Throws InvalidInput if the
  /// images do not form a bijection.
  explicit PermS3(std::array<int, 3> images);

  static constexpr PermS3 identity() noexcept { return PermS3{}; }

  /// Transposition swapping letters a and b (a != b).
  static PermS3 transposition(int a, int b);

  int operator()(int letter) const;

  PermS3 inverse() const noexcept;
  bool is_transposition() const noexcept;
  int fixed_point_count() const noexcept;

  /// The color whose transposition this is. Precondition: is_transposition().
  Color as_color() const;

  std::string to_string() const;

  friend bool operator==(const PermS3&, const PermS3&) = default;
  friend auto operator<=>(const PermS3&, const PermS3&) = default;

private:
  std::array<std::uint8_t, 3> image_;
};

/// "Apply q, then p."
PermS3 compose(const PermS3& p, const PermS3& q) noexcept;

/// Color i maps to the transposition fixing i.
PermS3 as_transposition(Color c) noexcept;

/// a.b.a in the dihedral group, read back as a color.
Color conjugate(Color a, Color b) noexcept;

std::ostream& operator<<(std::ostream& os, Color c);
std::ostream& operator<<(std::ostream& os, const PermS3& p);

} // namespace tpk
