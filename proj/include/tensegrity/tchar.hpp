#pragma once

#include "tensegrity/witness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tensegrity {

/// Random integer configuration of n points in R^d, coordinates uniform in
/// [-kSampleRange, kSampleRange].
Configuration random_configuration(int n, int d, Lcg64& rng);

/// Minimum of dim W(G,P) over `samples` random integer configurations drawn
/// from Lcg64(seed). Throws std::invalid_argument for samples < 1.
std::size_t generic_dim(const Graph& g, int d, int samples, std::uint64_t seed);

/// (n - d - 1)(n - d) / 2. Throws std::invalid_argument when n < d + 2.
long tau_complete(int n, int d);

struct TcReport {
  Graph graph;
  int d = 0;
  std::size_t generic_dim = 0;
  int samples_used = 0;
  bool positive = false;
  /// Set when the generic fiber is trivial and a witness condition forces a
  /// nonzero self-stress; tau is then exactly 0.
  std::optional<std::string> witness_name;
  std::optional<std::string> witness_description;
  std::optional<Configuration> witness_configuration;

  /// tau when determined: generic_dim if positive, 0 with a witness.
  std::optional<long> tau() const;
};

/// Positive verdict when the generic fiber is nontrivial. Otherwise tries the
/// witnesses in order (planar graphs only) and keeps the first one whose
/// constructed configurations all carry a nonzero self-stress.
TcReport tau_report(const Graph& g, int d, int samples, std::uint64_t seed, const std::vector<WitnessCondition>& witnesses);

struct EdgeDrop {
  Edge edge;
  long drop = 0;
};

/// generic_dim(g) - generic_dim(g - e) for each edge. Throws
/// std::invalid_argument unless generic_dim(g) >= 2.
std::vector<EdgeDrop> edge_deletion_check(const Graph& g, int d, int samples, std::uint64_t seed);

struct BoundCheck {
  /// max(0, |E| - (d n - d(d+1)/2)).
  long lower_bound = 0;
  /// k - 2n + 3 for planar graphs with n <= 7, kappa >= 2, lambda >= 3.
  std::optional<long> predicted;
};

BoundCheck bound_check(const Graph& g, int d);

}  // namespace tensegrity
