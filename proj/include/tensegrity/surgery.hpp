#pragma once

#include "tensegrity/atoms.hpp"

#include <variant>
#include <vector>

namespace tensegrity {

/// Exchange of edges e1 and e2 inside a subgraph H whose fiber is
/// one-dimensional at the given configuration.
struct GeneralSurgery {
  std::vector<int> h_vertices;  // H is the subgraph of G induced on these
  Edge e1;
  Edge e2;
};

/// K4 on v1..v4; v1 is joined outside the K4 exactly to p and q, v2 to p,
/// v3 to q, and v4 arbitrarily. (p, v1, v2) and (q, v1, v3) are collinear.
/// G1 = G - {v2, v3}, G2 = G - {v1}.
struct SurgeryI {
  int v1, v2, v3, v4, p, q;
};

/// K4 on v1..v4 with outside edges exactly pv1, pv2, qv1, qv3, rv2, rv4, sv3,
/// sv4, and (p,v1,v2), (q,v1,v3), (r,v2,v4), (s,v3,v4) collinear.
/// G1 = G - {v1, v4}, G2 = G - {v2, v3}.
struct SurgeryII {
  int v1, v2, v3, v4, p, q, r, s;
};

enum class Direction { Forward, Backward };

/// General surgery: w is a self-stress of G - e1 (keys are G's edges minus
/// e1). Returns the self-stress of G - e2 obtained by adding the multiple of
/// H's unique self-stress that cancels the tension on e2.
/// Throws PreconditionError naming the failed hypothesis.
Stress general_surgery(const Framework& g_full, const GeneralSurgery& spec, const Stress& w);

/// The subframework on the vertices kept by one side, with labels 1..k;
/// `labels[k-1]` is the label in G of new vertex k.
struct SideFramework {
  Framework framework;
  std::vector<int> labels;

  /// Restricts a stress keyed by G labels to this side, relabeled.
  Stress restrict(const Stress& w) const;
  /// Relabels a stress on this side back to G labels.
  Stress lift(const Stress& w) const;
};

struct SurgeryResult {
  SideFramework target;
  Stress stress;  // keyed by G labels, edges of the target side
};

/// Checks the graph pattern and geometric hypotheses; throws
/// PreconditionError naming the first violation.
void check_surgery(const Framework& g_full, const SurgeryI& spec);
void check_surgery(const Framework& g_full, const SurgeryII& spec);

/// Side 1 or 2 of the surgery as a framework.
SideFramework surgery_side(const Framework& g_full, const SurgeryI& spec, int side);
SideFramework surgery_side(const Framework& g_full, const SurgeryII& spec, int side);

/// Forward maps a self-stress of side 2 to side 1 for Surgery I, and side 1
/// to side 2 for Surgery II; Backward is the inverse. g_full positions every
/// vertex of G. The input stress is keyed by G labels and must be a
/// self-stress of the source side; the output is checked to be a self-stress
/// of the target side.
SurgeryResult surgery_I(const Framework& g_full, const SurgeryI& spec, Direction dir, const Stress& w);
SurgeryResult surgery_II(const Framework& g_full, const SurgeryII& spec, Direction dir, const Stress& w);

/// Replaces edges x-a and x-b (a, x, b collinear, tensions balanced at x)
/// by edge a-b. Exposed for tests.
void merge_collinear(Stress& w, const Configuration& c, int x, int a, int b);
/// Inverse of merge_collinear: moves the tension of a-b onto a-x and x-b.
void split_edge(Stress& w, const Configuration& c, int a, int b, int x);

}  // namespace tensegrity
