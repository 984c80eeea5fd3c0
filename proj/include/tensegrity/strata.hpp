#pragma once

#include "tensegrity/stress.hpp"

#include <set>
#include <string>
#include <vector>

namespace tensegrity {

/// A sign pattern M together with the dimension of the cone of self-stresses
/// whose strut-cable matrix is exactly M.
struct StratumSymbol {
  SignMatrix signs;
  std::size_t dim = 0;

  auto operator<=>(const StratumSymbol&) const = default;
};

/// The set of stratum symbols realized at one framework. Iteration order is
/// canonical: sign vector in edge order (lexicographic, -1 < 0 < +1), then
/// dimension.
struct Fingerprint {
  int n = 0;
  std::vector<Edge> edge_order;
  std::set<StratumSymbol> symbols;

  bool contains(const SignMatrix& m, std::size_t dim) const { return symbols.contains({m, dim}); }
  bool operator==(const Fingerprint& other) const { return n == other.n && edge_order == other.edge_order && symbols == other.symbols; }
};

/// Enumerates every sign vector realized on the arrangement {w_e = 0}
/// restricted to the fiber, certifying each cell by exact LP. Edges whose
/// tension functional is identically zero always carry sign 0; edges with
/// proportional functionals share one hyperplane.
Fingerprint enumerate_cells(const SelfStressSpace& space);
Fingerprint fingerprint(const Framework& f);

/// Equality of fingerprints, which characterizes sign-preserving equivalence
/// of the two self-stress spaces. Throws std::invalid_argument if the graphs
/// differ.
bool fiber_equivalent(const Framework& f1, const Framework& f2);

/// dim W(G,P) >= k. Throws std::invalid_argument for k < 1.
bool gk_stratum_member(const Framework& f, std::size_t k);

/// Some self-stress is nonzero on every edge (and the graph has an edge).
bool visible(const Framework& f);
bool visible(const Fingerprint& fp);

/// One line per symbol: "<signs in edge order> dim=<i>", signs as +,0,-.
std::string format_fingerprint(const Fingerprint& fp);

}  // namespace tensegrity
