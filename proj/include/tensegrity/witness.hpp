#pragma once

#include "tensegrity/geom.hpp"
#include "tensegrity/random.hpp"
#include "tensegrity/stress.hpp"

#include <functional>
#include <string>
#include <vector>

namespace tensegrity {

/// A planar geometric condition on labeled vertices together with a
/// constructor of rational configurations satisfying it.
struct WitnessCondition {
  std::string name;         // short tag, e.g. "conic"
  std::string description;  // e.g. "six points on a conic"
  ConditionSystem system;
  /// Returns n planar points satisfying the system (n >= system.base_count).
  std::function<std::vector<Vector>(int n, Lcg64& rng)> sample;
};

/// Vertices 1..6 on a common circle, parameterized by
/// ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)) then scaled and translated.
WitnessCondition conic_witness();
/// Lines v_a v_b, v_c v_d, v_e v_f through one common point.
WitnessCondition concurrency_witness(std::array<int, 6> v = {1, 2, 3, 4, 5, 6});
/// Vertices a, b, c on one line.
WitnessCondition collinear_witness(std::array<int, 3> v);

/// Default list tried when no graph-specific list is given: conic on 1..6,
/// concurrent lines 12/34/56, then every collinear triple of 1..n.
std::vector<WitnessCondition> default_witnesses(int n);

/// Random planar point with integer coordinates in [-range, range].
Vector random_point(Lcg64& rng, int d, long range);

/// dim W(G,P) at `samples` configurations built by the witness (each checked
/// against its condition system). Returns the minimum dimension, or nullopt
/// if a constructed configuration failed its own system.
std::optional<std::size_t> witness_dim(const Graph& g, const WitnessCondition& w, int samples, Lcg64& rng);

}  // namespace tensegrity
