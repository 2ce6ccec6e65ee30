#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace svtab {

/// Steps of a bicolored Motzkin path. Declaration order is the enumeration
/// order U < D < u < d.
enum class Step : std::uint8_t { U, D, u, d };

char step_char(Step s);

/// A word over {U, D, u, d} whose running height never goes negative.
class ColoredPath {
 public:
  ColoredPath() = default;
  explicit ColoredPath(std::vector<Step> steps);

  /// Parses the step word itself, e.g. "UuDUUDD".
  static ColoredPath parse(std::string_view word);

  const std::vector<Step>& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  Step operator[](int i) const { return steps_[i]; }
  int final_height() const;
  int count(Step s) const;
  std::string to_string() const;

  friend bool operator==(const ColoredPath&, const ColoredPath&) = default;
  friend auto operator<=>(const ColoredPath&, const ColoredPath&) = default;

 private:
  std::vector<Step> steps_;
};

enum class PathFamily : std::uint8_t { motz, motzE, motzT, motzET, ballotlike };

std::string_view family_name(PathFamily f);
PathFamily parse_family(std::string_view name);

/// Bit set of PathFamily tags.
struct FamilyTags {
  std::uint8_t bits = 0;

  bool has(PathFamily f) const { return bits & (1u << static_cast<int>(f)); }
  void set(PathFamily f) { bits |= static_cast<std::uint8_t>(1u << static_cast<int>(f)); }
  std::string to_string() const;
  friend bool operator==(const FamilyTags&, const FamilyTags&) = default;
};

/// Restriction (1): no u step taken at height zero.
bool no_umber_on_axis(const ColoredPath& p);
/// Restriction (2): no d step before the first D (a path without D may not
/// contain d at all).
bool no_denim_before_first_down(const ColoredPath& p);

/// motz* tags require final height 0; ballotlike only needs both restrictions.
FamilyTags path_family(const ColoredPath& p);
bool in_family(const ColoredPath& p, PathFamily f);

}  // namespace svtab
