#include "tensegrity/atoms.hpp"

#include <algorithm>
#include <optional>

namespace tensegrity {

namespace {

std::vector<Vector> points_of(const Configuration& c, const std::vector<int>& labels) {
  std::vector<Vector> pts;
  for (int v : labels) pts.push_back(c.at(v));
  return pts;
}

// Atom stress on the given labels, keyed by global edges.
Stress atom_on(const Configuration& c, const std::vector<int>& labels) {
  const Stress local = atom_stress(Configuration(c.d, points_of(c, labels)));
  Stress global;
  for (const auto& [e, t] : local.tensions()) global.set(Edge(labels[e.a - 1], labels[e.b - 1]), t);
  return global;
}

std::string describe_residual(const std::vector<Vector>& residual) {
  for (std::size_t v = 0; v < residual.size(); ++v) {
    if (is_zero(residual[v])) continue;
    std::string s = "not a self-stress: residual at v" + std::to_string(v + 1) + " is (";
    for (std::size_t k = 0; k < residual[v].size(); ++k) s += (k ? "," : "") + to_string(residual[v][k]);
    return s + ")";
  }
  return {};
}

// Lexicographically ordered k-subsets of `pool`; returns the first one for
// which accept() holds.
template <typename Accept>
std::optional<std::vector<int>> first_subset(const std::vector<int>& pool, int k, Accept accept) {
  const int n = static_cast<int>(pool.size());
  if (k > n) return std::nullopt;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> pick;
    for (int i : idx) pick.push_back(pool[i]);
    if (accept(pick)) return pick;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Stress atom_stress(const Configuration& c) {
  if (c.size() != c.d + 2) throw PreconditionError("an atom needs exactly d+2 points");
  if (!general_position(c)) throw PreconditionError("not in general position");
  const Framework f(Graph::complete(c.size()), c);
  const SelfStressSpace space = self_stress_space(f);
  if (space.dim() != 1) throw PreconditionError("not in general position");
  const Stress& s = space.basis.front();
  const Rational first = s.get(Edge(1, 2));
  if (sgn(first) == 0) throw PreconditionError("not in general position");
  return s.scaled(1 / first);
}

std::vector<Atom> decompose(const Framework& f, const Stress& w) {
  if (!general_position(f.config)) throw PreconditionError("not in general position");
  if (auto msg = describe_residual(verify_self_stress(f, w)); !msg.empty()) throw PreconditionError(msg);

  const int n = f.n();
  const int d = f.d();
  Stress running;
  for (const auto& [e, t] : w.tensions())
    if (sgn(t) != 0) running.set(e, t);

  std::vector<Atom> atoms;
  for (int p = n; p >= d + 3; --p) {
    // Reference vertices are the d lowest labels other than p and u; the
    // next subset in lexicographic order is tried if that atom degenerates.
    for (int u = d + 1; u < p; ++u) {
      const Rational t = running.get(Edge(p, u));
      if (sgn(t) == 0) continue;
      std::vector<int> pool;
      for (int v = 1; v < p; ++v)
        if (v != u) pool.push_back(v);
      auto with_pu = [&](std::vector<int> s) {
        s.push_back(p);
        s.push_back(u);
        std::sort(s.begin(), s.end());
        return s;
      };
      auto chosen = first_subset(pool, d, [&](const std::vector<int>& r) {
        return general_position(Configuration(d, points_of(f.config, with_pu(r))));
      });
      if (!chosen) throw PreconditionError("no general-position atom through v" + std::to_string(p) + "v" + std::to_string(u));
      std::vector<int> support = with_pu(*chosen);
      Stress a = atom_on(f.config, support);
      const Rational coefficient = t / a.get(Edge(p, u));
      running += a.scaled(-coefficient);
      atoms.push_back({std::move(support), std::move(a), coefficient});
    }
    for (int v = 1; v < p; ++v)
      if (sgn(running.get(Edge(p, v))) != 0)
        throw PreconditionError("tension at v" + std::to_string(p) + " did not vanish after peeling");
  }

  const int base = std::min(n, d + 2);
  std::vector<int> rest;
  for (int v = 1; v <= base; ++v) rest.push_back(v);
  bool residue = false;
  for (const auto& [e, t] : running.tensions())
    if (sgn(t) != 0) residue = true;
  if (residue) {
    if (base < d + 2) throw PreconditionError("nonzero self-stress on fewer than d+2 general-position points");
    const Stress a = atom_on(f.config, rest);
    const Rational coefficient = running.get(Edge(1, 2)) / a.get(Edge(1, 2));
    if (!running.same_values(a.scaled(coefficient))) throw PreconditionError("base residue is not an atom multiple");
    atoms.push_back({rest, a, coefficient});
  }
  return atoms;
}

Tensegrity atom_tensegrity(const Atom& atom, const Configuration& c) {
  std::vector<int> local(c.size() + 1, 0);
  for (std::size_t k = 0; k < atom.support.size(); ++k) local[atom.support[k]] = static_cast<int>(k) + 1;
  Stress s;
  for (const auto& [e, t] : atom.stress.tensions()) s.set(Edge(local[e.a], local[e.b]), t * atom.coefficient);
  Framework f(Graph::complete(static_cast<int>(atom.support.size())), Configuration(c.d, points_of(c, atom.support)));
  return {std::move(f), std::move(s)};
}

}  // namespace tensegrity
