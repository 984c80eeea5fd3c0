#pragma once

#include "tensegrity/geom.hpp"
#include "tensegrity/surgery.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tensegrity {

/// Malformed input file; the message carries the location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"d": 2, "vertices": [["0","0"], ...], "edges": [[1,2], ...],
///  "stress": [{"edge": [1,2], "tension": "6"}, ...]}
/// Coordinates and tensions are integer or "p/q" strings. A graph-only file
/// replaces "vertices" by "n".
struct FrameworkFile {
  int d = 0;
  Graph graph;
  std::optional<Configuration> config;
  std::optional<Stress> stress;

  /// Throws InputError when the file carries no coordinates.
  Framework framework() const;
  bool operator==(const FrameworkFile&) const;
};

/// {"base_count": 6,
///  "auxiliaries": [{"name": "q1", "lines": [1,2,4,5]}, ...],
///  "conditions": [{"type": "eq", "indices": [i,j]},
///                 {"type": "collinear", "indices": [i,j,k]},
///                 {"type": "intersect", "indices": [i,j,j',k,k']}]}
using ConditionFile = ConditionSystem;

/// {"points": [["x","y"], ...]} affine, or three entries for homogeneous.
using PointsFile = std::vector<ProjPoint>;

/// {"type": "I", "direction": "forward", "v1": 1, ..., "p": 5, "q": 6}
/// {"type": "II", ... "r": 7, "s": 8}
/// {"type": "general", "h": [1,2,3,4], "e1": [1,2], "e2": [3,4]}
struct SurgerySpec {
  std::variant<GeneralSurgery, SurgeryI, SurgeryII> op;
  Direction direction = Direction::Forward;
};

FrameworkFile parse_framework(const std::string& text);
std::string serialize_framework(const FrameworkFile& f);

ConditionFile parse_condition(const std::string& text);
std::string serialize_condition(const ConditionFile& c);

PointsFile parse_points(const std::string& text);

SurgerySpec parse_surgery_spec(const std::string& text);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace tensegrity
