#pragma once

#include <adnil/staircase.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace adnil {

enum class Step : std::uint8_t { Up, Down };

/// Sequence of (1,1) and (1,-1) steps from (0,0) back to the axis, never
/// going below it.
class DyckPath {
 public:
  DyckPath() = default;
  /// Throws std::invalid_argument if the steps do not form a Dyck path.
  explicit DyckPath(std::vector<Step> steps);

  /// Accepts 'U'/'D' (either case) or the digits '3'/'4'.
  static DyckPath parse(std::string_view text);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  int semilength() const { return static_cast<int>(steps_.size() / 2); }
  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

int height(const DyckPath& p);
/// Geometric area under the path, in units where UD has area 1.
long long twice_area(const DyckPath& p);

struct PathStats {
  int height = 0;
  long long twice_area = 0;
};
PathStats stats(const DyckPath& p);

/// Border of the diagram read from top right to bottom left, reversed, with
/// down steps becoming U and left steps D.
DyckPath rotation_path(const StaircasePartition& p);

/// Image of p under the height-preserving bijection: height = class + 1.
DyckPath height_bijection(const StaircasePartition& p);

struct BijectionStage {
  std::string word;  // rectangle border over {l, d}, top right to bottom left
  DyckPath path;     // path after inserting this rectangle
};

/// The starting path followed by one stage per rectangle, in processing
/// order (top rectangle first). The first entry has an empty word.
std::vector<BijectionStage> height_bijection_stages(const StaircasePartition& p);

/// Throws std::invalid_argument if the path length is not 2n+2.
StaircasePartition height_bijection_inverse(const DyckPath& d, int n);

/// All Dyck paths of the given semilength, lexicographic with U before D.
std::vector<DyckPath> enumerate_dyck_paths(int semilength);

}  // namespace adnil
