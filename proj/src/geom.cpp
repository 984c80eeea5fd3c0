#include "tensegrity/geom.hpp"

#include <stdexcept>
#include <string>

namespace tensegrity {

namespace {

void canonicalize(std::array<Rational, 3>& c) {
  int last = 2;
  while (last >= 0 && sgn(c[last]) == 0) --last;
  if (last < 0) throw std::invalid_argument("homogeneous triple is zero");
  const Rational scale = c[last];
  for (auto& x : c) x /= scale;
}

std::string join_indices(std::initializer_list<int> idx) {
  std::string s;
  for (int i : idx) {
    if (!s.empty()) s += ",";
    s += std::to_string(i);
  }
  return s;
}

}  // namespace

ProjPoint::ProjPoint(Rational x, Rational y, Rational z) : c_{std::move(x), std::move(y), std::move(z)} {
  canonicalize(c_);
}

std::pair<Rational, Rational> ProjPoint::to_affine() const {
  if (at_infinity()) throw std::domain_error("point at infinity has no affine coordinates");
  return {c_[0], c_[1]};
}

ProjLine::ProjLine(Rational a, Rational b, Rational c) : c_{std::move(a), std::move(b), std::move(c)} { canonicalize(c_); }

bool ProjLine::contains(const ProjPoint& p) const {
  const auto& x = p.coords();
  return sgn(c_[0] * x[0] + c_[1] * x[1] + c_[2] * x[2]) == 0;
}

std::array<Rational, 3> cross(const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

ProjLine line_through(const ProjPoint& a, const ProjPoint& b) {
  if (a == b) throw std::invalid_argument("line undefined");
  auto l = cross(a.coords(), b.coords());
  return {l[0], l[1], l[2]};
}

std::variant<ProjPoint, WholeLine> meet(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) return WholeLine{};
  auto p = cross(l1.coeffs(), l2.coeffs());
  return ProjPoint(p[0], p[1], p[2]);
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  Matrix m(3, 3);
  for (int k = 0; k < 3; ++k) {
    m(0, k) = a.coords()[k];
    m(1, k) = b.coords()[k];
    m(2, k) = c.coords()[k];
  }
  return sgn(det(m)) == 0;
}

SymbolValue intersection_symbol(const ProjPoint& pj, const ProjPoint& pj2, const ProjPoint& pk, const ProjPoint& pk2) {
  if (pj == pj2) return SymbolUndefined{"first defining pair coincides"};
  if (pk == pk2) return SymbolUndefined{"second defining pair coincides"};
  const ProjLine l1 = line_through(pj, pj2);
  const ProjLine l2 = line_through(pk, pk2);
  auto m = meet(l1, l2);
  if (std::holds_alternative<WholeLine>(m)) return SymbolCommonLine{l1};
  return SymbolPoint{std::get<ProjPoint>(m)};
}

void ConditionSystem::validate() const {
  if (base_count < 0) throw std::invalid_argument("negative base count");
  auto check = [](int idx, int limit, const std::string& what) {
    if (idx < 1 || idx > limit)
      throw std::invalid_argument(what + " refers to point " + std::to_string(idx) + " outside 1.." + std::to_string(limit));
  };
  for (std::size_t t = 0; t < auxiliaries.size(); ++t) {
    const auto& aux = auxiliaries[t];
    const int limit = base_count + static_cast<int>(t);
    for (int idx : aux.lines) check(idx, limit, "auxiliary " + aux.name);
    if (aux.lines[0] == aux.lines[1] || aux.lines[2] == aux.lines[3])
      throw std::invalid_argument("auxiliary " + aux.name + " has a repeated index in a defining pair");
  }
  const int total = point_count();
  for (const auto& c : conditions) {
    std::visit(
        [&](const auto& cond) {
          using T = std::decay_t<decltype(cond)>;
          if constexpr (std::is_same_v<T, Coincide>) {
            check(cond.i, total, "condition");
            check(cond.j, total, "condition");
          } else if constexpr (std::is_same_v<T, Collinear>) {
            check(cond.i, total, "condition");
            check(cond.j, total, "condition");
            check(cond.k, total, "condition");
          } else {
            check(cond.i, total, "condition");
            for (int idx : cond.lines) check(idx, total, "condition");
            if (cond.lines[0] == cond.lines[1] || cond.lines[2] == cond.lines[3])
              throw std::invalid_argument("intersection condition has a repeated index in a defining pair");
          }
        },
        c);
  }
}

ConditionSystem pascal_system() {
  ConditionSystem s;
  s.base_count = 6;
  s.auxiliaries = {{"q1", {1, 2, 4, 5}}, {"q2", {2, 3, 5, 6}}, {"q3", {3, 4, 1, 6}}};
  s.conditions = {Collinear{7, 8, 9}};
  return s;
}

ConditionSystem concurrency_system(std::array<int, 6> v, int base_count) {
  ConditionSystem s;
  s.base_count = base_count;
  s.auxiliaries = {{"q1", {v[0], v[1], v[2], v[3]}}};
  s.conditions = {Collinear{base_count + 1, v[4], v[5]}};
  return s;
}

ConditionSystem collinear_system(std::array<int, 3> v, int base_count) {
  ConditionSystem s;
  s.base_count = base_count;
  s.conditions = {Collinear{v[0], v[1], v[2]}};
  return s;
}

namespace {

struct OnLine {
  ProjLine line;
};
struct Unknown {};
using Slot = std::variant<ProjPoint, OnLine, Unknown>;

bool fixed(const Slot& s) { return std::holds_alternative<ProjPoint>(s); }

}  // namespace

EvaluationResult evaluate_system(const ConditionSystem& s, const std::vector<ProjPoint>& base) {
  s.validate();
  if (static_cast<int>(base.size()) != s.base_count)
    throw std::invalid_argument("expected " + std::to_string(s.base_count) + " base points, got " + std::to_string(base.size()));

  EvaluationResult out;
  std::vector<Slot> slots(base.begin(), base.end());
  bool ok = true;

  for (const auto& aux : s.auxiliaries) {
    const auto& [j, j2, k, k2] = aux.lines;
    const Slot* defs[4] = {&slots[j - 1], &slots[j2 - 1], &slots[k - 1], &slots[k2 - 1]};
    bool all_fixed = true;
    for (auto* d : defs) all_fixed = all_fixed && fixed(*d);
    if (!all_fixed) {
      out.trace.push_back(aux.name + ": undefined (defining point is not a resolved point)");
      out.auxiliaries.push_back(std::nullopt);
      slots.push_back(Unknown{});
      ok = false;
      continue;
    }
    SymbolValue v = intersection_symbol(std::get<ProjPoint>(*defs[0]), std::get<ProjPoint>(*defs[1]),
                                        std::get<ProjPoint>(*defs[2]), std::get<ProjPoint>(*defs[3]));
    if (auto* p = std::get_if<SymbolPoint>(&v)) {
      out.auxiliaries.push_back(p->point);
      slots.push_back(p->point);
    } else if (auto* l = std::get_if<SymbolCommonLine>(&v)) {
      out.trace.push_back(aux.name + ": defining points share one line; treated as a point of that line");
      out.auxiliaries.push_back(std::nullopt);
      slots.push_back(OnLine{l->line});
    } else {
      out.trace.push_back(aux.name + ": undefined (" + std::get<SymbolUndefined>(v).reason + ")");
      out.auxiliaries.push_back(std::nullopt);
      slots.push_back(Unknown{});
      ok = false;
    }
  }

  auto unknown = [&](std::initializer_list<int> idx) {
    for (int i : idx)
      if (std::holds_alternative<Unknown>(slots[i - 1])) return true;
    return false;
  };

  for (const auto& cond : s.conditions) {
    bool holds = false;
    std::string label;
    if (auto* c = std::get_if<Coincide>(&cond)) {
      label = "p" + std::to_string(c->i) + "=p" + std::to_string(c->j);
      const Slot& a = slots[c->i - 1];
      const Slot& b = slots[c->j - 1];
      if (unknown({c->i, c->j})) holds = false;
      else if (fixed(a) && fixed(b)) holds = std::get<ProjPoint>(a) == std::get<ProjPoint>(b);
      else if (fixed(a)) holds = std::get<OnLine>(b).line.contains(std::get<ProjPoint>(a));
      else if (fixed(b)) holds = std::get<OnLine>(a).line.contains(std::get<ProjPoint>(b));
      else holds = true;
    } else if (auto* c = std::get_if<Collinear>(&cond)) {
      label = "collinear(" + join_indices({c->i, c->j, c->k}) + ")";
      if (unknown({c->i, c->j, c->k})) holds = false;
      else if (fixed(slots[c->i - 1]) && fixed(slots[c->j - 1]) && fixed(slots[c->k - 1]))
        holds = collinear(std::get<ProjPoint>(slots[c->i - 1]), std::get<ProjPoint>(slots[c->j - 1]),
                          std::get<ProjPoint>(slots[c->k - 1]));
      else holds = true;  // a free point on a line can always be chosen on the other two's line
    } else {
      const auto& ic = std::get<IntersectionCondition>(cond);
      const auto& [j, j2, k, k2] = ic.lines;
      label = "p" + std::to_string(ic.i) + "=[" + join_indices({j, j2}) + ";" + join_indices({k, k2}) + "]";
      bool defs_fixed = fixed(slots[j - 1]) && fixed(slots[j2 - 1]) && fixed(slots[k - 1]) && fixed(slots[k2 - 1]);
      if (unknown({ic.i}) || !defs_fixed) {
        holds = false;
      } else {
        SymbolValue v = intersection_symbol(std::get<ProjPoint>(slots[j - 1]), std::get<ProjPoint>(slots[j2 - 1]),
                                            std::get<ProjPoint>(slots[k - 1]), std::get<ProjPoint>(slots[k2 - 1]));
        const Slot& target = slots[ic.i - 1];
        if (auto* p = std::get_if<SymbolPoint>(&v))
          holds = fixed(target) ? std::get<ProjPoint>(target) == p->point : std::get<OnLine>(target).line.contains(p->point);
        else if (auto* l = std::get_if<SymbolCommonLine>(&v))
          holds = fixed(target) ? l->line.contains(std::get<ProjPoint>(target)) : true;
        else
          holds = false;
      }
    }
    out.trace.push_back(label + (holds ? ": holds" : ": fails"));
    ok = ok && holds;
  }
  out.satisfied = ok;
  return out;
}

Rational conic_det(const std::vector<ProjPoint>& six) {
  if (six.size() != 6) throw std::invalid_argument("conic test needs six points");
  Matrix m(6, 6);
  for (std::size_t r = 0; r < 6; ++r) {
    const auto& [x, y, z] = six[r].coords();
    m(r, 0) = x * x;
    m(r, 1) = x * y;
    m(r, 2) = y * y;
    m(r, 3) = x * z;
    m(r, 4) = y * z;
    m(r, 5) = z * z;
  }
  return det(m);
}

Rational concurrency_det(const std::vector<std::pair<Rational, Rational>>& six) {
  if (six.size() != 6) throw std::invalid_argument("concurrency test needs six points");
  Matrix m(3, 3);
  for (int pair = 0; pair < 3; ++pair) {
    const auto& [x1, y1] = six[2 * pair];
    const auto& [x2, y2] = six[2 * pair + 1];
    if (x1 == x2 && y1 == y2)
      throw std::invalid_argument("points " + std::to_string(2 * pair + 1) + " and " + std::to_string(2 * pair + 2) +
                                  " coincide");
    m(0, pair) = y1 - y2;
    m(1, pair) = x2 - x1;
    m(2, pair) = x1 * y2 - x2 * y1;
  }
  return det(m);
}

Rational collinearity_polynomial(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b,
                                 const std::pair<Rational, Rational>& c) {
  const auto& [xa, ya] = a;
  const auto& [xb, yb] = b;
  const auto& [xc, yc] = c;
  return xa * yb + xb * yc + xc * ya - xa * yc - xb * ya - xc * yb;
}

}  // namespace tensegrity
