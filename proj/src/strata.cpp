#include "tensegrity/strata.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace tensegrity {

namespace {

// Edges grouped by the hyperplane their tension functional defines in
// coefficient space. sign(w_e) = orientation * sign(group functional).
struct HyperplaneGroups {
  std::vector<Vector> functionals;
  std::vector<int> group_of;     // -1 for identically zero functionals
  std::vector<int> orientation;  // +1 or -1
};

HyperplaneGroups group_hyperplanes(const std::vector<Vector>& basis, std::size_t edges) {
  const std::size_t k = basis.size();
  HyperplaneGroups out;
  out.group_of.assign(edges, -1);
  out.orientation.assign(edges, 1);
  std::map<Vector, int> index;
  for (std::size_t e = 0; e < edges; ++e) {
    Vector f(k);
    for (std::size_t j = 0; j < k; ++j) f[j] = basis[j][e];
    std::size_t lead = 0;
    while (lead < k && sgn(f[lead]) == 0) ++lead;
    if (lead == k) continue;
    const Rational scale = f[lead];
    out.orientation[e] = sgn(scale);
    for (auto& x : f) x /= scale;
    auto [it, inserted] = index.emplace(f, static_cast<int>(out.functionals.size()));
    if (inserted) out.functionals.push_back(f);
    out.group_of[e] = it->second;
  }
  return out;
}

CellSpec cell_for(const std::vector<Vector>& functionals, const std::vector<int>& signs, std::size_t k) {
  CellSpec spec;
  spec.ambient_dim = k;
  for (std::size_t g = 0; g < signs.size(); ++g) {
    if (signs[g] == 0) spec.equalities.push_back(functionals[g]);
    else if (signs[g] > 0) spec.positives.push_back(functionals[g]);
    else spec.negatives.push_back(functionals[g]);
  }
  return spec;
}

}  // namespace

Fingerprint enumerate_cells(const SelfStressSpace& space) {
  Fingerprint fp;
  fp.n = space.framework.n();
  fp.edge_order = space.edge_order;
  const std::size_t k = space.dim();
  const std::size_t m = space.edge_order.size();

  const auto groups = group_hyperplanes(space.basis_vectors(), m);
  const std::size_t h = groups.functionals.size();

  // Grow realized sign vectors one hyperplane at a time.
  std::vector<std::pair<std::vector<int>, std::size_t>> cells{{{}, k}};
  for (std::size_t g = 0; g < h; ++g) {
    std::vector<std::pair<std::vector<int>, std::size_t>> next;
    for (const auto& [prefix, prefix_dim] : cells) {
      for (int s : {-1, 0, 1}) {
        std::vector<int> signs = prefix;
        signs.push_back(s);
        const CellResult r = cell_feasible_dim(cell_for(groups.functionals, signs, k));
        if (r.feasible) next.emplace_back(std::move(signs), *r.dim);
      }
    }
    cells = std::move(next);
  }

  for (const auto& [signs, dim] : cells) {
    std::map<Edge, int> entries;
    for (std::size_t e = 0; e < m; ++e) {
      const int g = groups.group_of[e];
      entries.emplace(space.edge_order[e], g < 0 ? 0 : groups.orientation[e] * signs[g]);
    }
    fp.symbols.insert({SignMatrix(fp.n, std::move(entries)), dim});
  }
  return fp;
}

Fingerprint fingerprint(const Framework& f) { return enumerate_cells(self_stress_space(f)); }

bool fiber_equivalent(const Framework& f1, const Framework& f2) {
  if (f1.graph != f2.graph) throw std::invalid_argument("frameworks have different graphs");
  return fingerprint(f1) == fingerprint(f2);
}

bool gk_stratum_member(const Framework& f, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return self_stress_dim(f) >= k;
}

bool visible(const Fingerprint& fp) {
  if (fp.edge_order.empty()) return false;
  for (const auto& sym : fp.symbols) {
    bool all_nonzero = true;
    for (const auto& e : fp.edge_order)
      if (sym.signs.at(e.a, e.b) == 0) {
        all_nonzero = false;
        break;
      }
    if (all_nonzero) return true;
  }
  return false;
}

bool visible(const Framework& f) {
  if (f.graph.edge_count() == 0 || self_stress_dim(f) == 0) return false;
  return visible(fingerprint(f));
}

std::string format_fingerprint(const Fingerprint& fp) {
  std::ostringstream os;
  for (const auto& sym : fp.symbols) {
    for (int s : sym.signs.to_vector(fp.edge_order)) os << (s > 0 ? '+' : s < 0 ? '-' : '0');
    os << " dim=" << sym.dim << '\n';
  }
  return os.str();
}

}  // namespace tensegrity
