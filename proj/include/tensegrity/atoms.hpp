#pragma once

#include "tensegrity/stress.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tensegrity {

/// Raised when a geometric or combinatorial hypothesis of an operation fails.
/// The message names the violated condition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The self-stress of K_{d+2} on d+2 points in general position, unique up to
/// scale, normalized so that edge {1,2} carries tension 1. Every tension is
/// nonzero. Throws PreconditionError("not in general position").
Stress atom_stress(const Configuration& c);

/// coefficient * stress, where stress is atom_stress() of the support points
/// relabeled to the support's vertex labels.
struct Atom {
  std::vector<int> support;  // ascending vertex labels, d + 2 of them
  Stress stress;             // keyed by edges between support labels
  Rational coefficient;

  Stress weighted() const { return stress.scaled(coefficient); }
};

/// Writes w (a self-stress of f on a general-position configuration) as a sum
/// of atoms by peeling vertices n, n-1, ..., d+3. At vertex p, every edge to a
/// non-reference vertex u with nonzero running tension is cancelled by the
/// atom on {p, u} plus the d lowest-labeled other vertices; the remaining
/// edges at p then vanish. The last d+2 vertices leave at most one atom.
/// Throws PreconditionError for non-general position or when w is not a
/// self-stress (the message carries the offending residual).
std::vector<Atom> decompose(const Framework& f, const Stress& w);

/// The K_{d+2} tensegrity an atom describes, on its support's points.
Tensegrity atom_tensegrity(const Atom& atom, const Configuration& c);

}  // namespace tensegrity
