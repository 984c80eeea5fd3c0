#pragma once

#include "tensegrity/exact_math.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tensegrity {

/// Homogeneous point (x : y : z) of the real projective plane; z = 0 are the
/// points at infinity. Stored canonically with the last nonzero coordinate
/// equal to 1, so == is projective equality.
class ProjPoint {
 public:
  /// Throws std::invalid_argument for (0 : 0 : 0).
  ProjPoint(Rational x, Rational y, Rational z);
  static ProjPoint affine(Rational x, Rational y) { return {std::move(x), std::move(y), 1}; }

  const std::array<Rational, 3>& coords() const { return c_; }
  bool at_infinity() const { return sgn(c_[2]) == 0; }
  /// Affine coordinates; throws std::domain_error at infinity.
  std::pair<Rational, Rational> to_affine() const;

  bool operator==(const ProjPoint&) const = default;

 private:
  std::array<Rational, 3> c_;
};

/// Line a x + b y + c z = 0, canonical like ProjPoint.
class ProjLine {
 public:
  ProjLine(Rational a, Rational b, Rational c);
  const std::array<Rational, 3>& coeffs() const { return c_; }
  bool contains(const ProjPoint& p) const;
  bool operator==(const ProjLine&) const = default;

 private:
  std::array<Rational, 3> c_;
};

std::array<Rational, 3> cross(const std::array<Rational, 3>& u, const std::array<Rational, 3>& v);

/// Throws std::invalid_argument("line undefined") when a == b.
ProjLine line_through(const ProjPoint& a, const ProjPoint& b);

struct WholeLine {};
/// Intersection point of two lines, or WholeLine when they coincide.
std::variant<ProjPoint, WholeLine> meet(const ProjLine& l1, const ProjLine& l2);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

/// Value of the intersection symbol [pj, pj'; pk, pk'].
struct SymbolPoint {
  ProjPoint point;
};
struct SymbolCommonLine {
  ProjLine line;
};
struct SymbolUndefined {
  std::string reason;
};
using SymbolValue = std::variant<SymbolPoint, SymbolCommonLine, SymbolUndefined>;

SymbolValue intersection_symbol(const ProjPoint& pj, const ProjPoint& pj2, const ProjPoint& pk, const ProjPoint& pk2);

/// Elementary conditions; indices are 1-based into base points followed by
/// auxiliary points.
struct Coincide {
  int i, j;
  bool operator==(const Coincide&) const = default;
};
struct Collinear {
  int i, j, k;
  bool operator==(const Collinear&) const = default;
};
struct IntersectionCondition {
  int i;
  std::array<int, 4> lines;  // j, j', k, k'
  bool operator==(const IntersectionCondition&) const = default;
};
using ElementaryCondition = std::variant<Coincide, Collinear, IntersectionCondition>;

struct AuxiliaryPoint {
  std::string name;
  std::array<int, 4> lines;  // q = [j, j'; k, k']
  bool operator==(const AuxiliaryPoint&) const = default;
};

/// A conditional system: base points, auxiliaries defined by intersection
/// symbols over earlier points, and elementary conditions on all of them.
struct ConditionSystem {
  int base_count = 0;
  std::vector<AuxiliaryPoint> auxiliaries;
  std::vector<ElementaryCondition> conditions;

  int point_count() const { return base_count + static_cast<int>(auxiliaries.size()); }
  /// Number of auxiliary points.
  int conditional_number() const { return static_cast<int>(auxiliaries.size()); }
  /// Throws std::invalid_argument on out-of-range or forward references.
  void validate() const;
  bool operator==(const ConditionSystem&) const = default;
};

/// q1=[p1,p2;p4,p5], q2=[p2,p3;p5,p6], q3=[p3,p4;p1,p6], q1 q2 q3 collinear.
ConditionSystem pascal_system();
/// q1=[p_a,p_b;p_c,p_d], q1 p_e p_f collinear (default: lines 12, 34, 56).
ConditionSystem concurrency_system(std::array<int, 6> v = {1, 2, 3, 4, 5, 6}, int base_count = 6);
ConditionSystem collinear_system(std::array<int, 3> v, int base_count);

struct EvaluationResult {
  bool satisfied = false;
  /// Resolved auxiliaries in order; nullopt where the auxiliary is only known
  /// to lie on a common line or is undefined.
  std::vector<std::optional<ProjPoint>> auxiliaries;
  std::vector<std::string> trace;
};

/// Resolves auxiliaries in order and checks every condition exactly.
///
/// Degenerate intersection symbols follow one policy:
///  - four collinear defining points: the auxiliary is "some point of the
///    common line"; a condition mentioning it holds iff such a point exists
///    (coincidence with a fixed point means membership; collinearity always
///    admits one), and an auxiliary or intersection condition that needs its
///    exact position is undefined;
///  - a coincident defining pair: undefined, so the system is unsatisfied.
EvaluationResult evaluate_system(const ConditionSystem& s, const std::vector<ProjPoint>& base);

/// det of the 6x6 matrix of monomials (x^2, xy, y^2, xz, yz, z^2).
Rational conic_det(const std::vector<ProjPoint>& six);

/// det of the 3x3 matrix whose columns are the lines through the point
/// pairs (1,2), (3,4), (5,6):
///   (y1 - y2, x2 - x1, x1 y2 - x2 y1)^T, ...
/// Zero iff the three lines share a point of the projective plane.
/// Throws std::invalid_argument if a defining pair coincides.
Rational concurrency_det(const std::vector<std::pair<Rational, Rational>>& six);

/// x_a y_b + x_b y_c + x_c y_a - x_a y_c - x_b y_a - x_c y_b for the affine
/// points a, b, c: the quadratic collinearity polynomial.
Rational collinearity_polynomial(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b,
                                 const std::pair<Rational, Rational>& c);

}  // namespace tensegrity
