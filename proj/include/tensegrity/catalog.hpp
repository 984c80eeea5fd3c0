#pragma once

#include "tensegrity/strata.hpp"
#include "tensegrity/tchar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tensegrity {

enum class Provenance { PaperText, DerivedReconstruction };

std::string to_string(Provenance p);

/// Prism on two triangles joined by the rungs v1v2, v3v4, v5v6. `triangle`
/// holds the triangle through v1; the other triangle is the complement.
struct PrismLabeling {
  std::array<int, 3> triangle;

  std::array<int, 3> other() const;
  Graph graph() const;
  std::string describe() const;  // "{1,4,5}/{2,3,6}"
};

/// The labeling shipped in the catalog, chosen by the labeling search.
PrismLabeling pinned_prism_labeling();
/// All four labelings with v1 in the first triangle, in the order searched;
/// the first is {1,3,5}/{2,4,6}.
std::vector<PrismLabeling> prism_labelings();

struct CatalogEntry {
  std::string name;
  std::string description;
  Graph graph;
  int d = 2;
  Provenance provenance = Provenance::PaperText;
  std::optional<std::size_t> expected_generic_dim;
  int generic_samples = 3;
  /// Conditions each claimed to force dim W >= 1.
  std::vector<WitnessCondition> conditions;
  /// Witnesses whose configurations must also be visible (25 of 30).
  std::vector<std::string> visible_conditions;
  /// Edges claimed to carry zero tension in every self-stress.
  std::vector<Edge> zero_tension_edges;
  /// A concrete framework and stress when the entry is a worked example.
  std::optional<Framework> framework;
  std::optional<Stress> stress;
  std::optional<SignMatrix> expected_signs;
};

std::vector<CatalogEntry> catalog_list();
std::optional<CatalogEntry> catalog_lookup(const std::string& name);

struct ClaimResult {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct WitnessTally {
  int samples = 0;
  int satisfying = 0;  // configurations that satisfy the condition system
  int positive = 0;    // dim W >= 1
  int visible = 0;
  std::size_t min_dim = 0;
  std::size_t max_dim = 0;
  std::vector<int> invisible_samples;  // 1-based sample indices
};

/// Builds `samples` configurations from w and tallies their fibers.
WitnessTally tally_witness(const Graph& g, const WitnessCondition& w, int samples, Lcg64& rng);

struct VerifyReport {
  std::string entry;
  Provenance provenance = Provenance::PaperText;
  std::vector<ClaimResult> claims;
  /// Labeling search trace for the prism: one line per labeling tried.
  std::vector<std::string> labeling_search;
  std::optional<std::string> passing_labeling;

  bool pass() const;
  /// Derived entries that fail are flagged rather than blamed on the source.
  std::string status() const;
};

inline constexpr int kWitnessSamples = 30;
inline constexpr int kVisibleRequired = 25;

VerifyReport verify(const CatalogEntry& entry, std::uint64_t seed, int samples = 3);

/// Generic dimension and witness claims of the prism under one labeling.
bool prism_labeling_passes(const PrismLabeling& l, std::uint64_t seed, int samples, std::string& detail);

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct Prop22Row {
  std::string name;
  int n = 0;
  std::size_t k = 0;
  Connectivity conn;
  std::optional<std::string> skipped;
  long expected = 0;  // max(0, k - 2n + 3)
  std::size_t generic = 0;
  bool pass = false;
};

/// Checks generic_dim = k - 2n + 3 (or 0 when that is not positive) for
/// planar graphs with n <= 7, kappa >= 2 and lambda >= 3; other graphs are
/// skipped with a reason.
std::vector<Prop22Row> prop22_scan(const std::vector<NamedGraph>& graphs, std::uint64_t seed, int samples = 3);

/// Two copies of K4 on 1..4 and 5..8 joined by the edge {4,5}.
Graph two_block_k4();
/// Points (0,0), (1,0), (2,2), (0,1) with K4.
Framework example_k4_framework();
/// Tensions 6, -3, 6, 2, -4, 2 on edges 12, 13, 14, 23, 24, 34.
Stress example_k4_stress();

}  // namespace tensegrity
