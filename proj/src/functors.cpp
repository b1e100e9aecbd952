#include "slidepol/functors.hpp"

#include <algorithm>
#include <set>

#include "slidepol/homalg.hpp"

namespace slidepol {

namespace {

void require_axis(const MonomialIdeal& ideal, std::size_t axis) {
  if (axis >= ideal.nvars())
    throw Error(Errc::invalid_argument, "axis " + std::to_string(axis + 1) + " out of range");
}

void require_plain(const MonomialIdeal& ideal) {
  if (ideal.ring().is_grid())
    throw Error(Errc::invalid_argument, "expected an ideal over a plain (non-grid) ring");
}

void require_grid(const MonomialIdeal& ideal) {
  if (!ideal.ring().is_grid())
    throw Error(Errc::invalid_argument, "expected an ideal over a grid ring");
}

}  // namespace

ExponentVector point_map(PointMap kind, const ExponentVector& a, std::size_t axis, int threshold) {
  if (axis >= a.size()) throw Error(Errc::invalid_argument, "axis out of range");
  ExponentVector r = a;
  int& v = r[axis];
  switch (kind) {
    case PointMap::sigma:
      if (v >= threshold) --v;
      break;
    case PointMap::tau:
      if (v >= threshold) ++v;
      break;
    case PointMap::lambda:
      if (v < threshold) ++v;
      break;
    case PointMap::rho:
      if (v <= threshold) --v;
      break;
  }
  return r;
}

MonomialIdeal slide_ideal(const MonomialIdeal& ideal, std::size_t axis, int threshold) {
  require_axis(ideal, axis);
  if (threshold < 1)
    throw Error(Errc::invalid_argument, "ideal-level slides need a threshold j >= 1");
  std::vector<ExponentVector> raw;
  raw.reserve(ideal.size());
  for (const auto& g : ideal.gens()) raw.push_back(point_map(PointMap::tau, g, axis, threshold));
  return MonomialIdeal(ideal.ring(), std::move(raw));
}

MonomialIdeal contract_ideal(const MonomialIdeal& ideal, std::size_t axis, int threshold) {
  require_axis(ideal, axis);
  if (threshold < 1)
    throw Error(Errc::invalid_argument, "contraction needs a threshold j >= 1");
  std::vector<ExponentVector> raw;
  raw.reserve(ideal.size());
  for (const auto& g : ideal.gens()) {
    if (g[axis] == threshold)
      throw Error(Errc::precondition, "generator " + to_string(g) + " has exponent " +
                                          std::to_string(threshold) + " on axis " +
                                          std::to_string(axis + 1));
    raw.push_back(point_map(PointMap::sigma, g, axis, threshold));
  }
  return MonomialIdeal(ideal.ring(), std::move(raw));
}

MonomialIdeal apply_script(MonomialIdeal ideal, const SlideScript& script) {
  for (const auto& op : script) {
    if (op.kind != SlideKind::left)
      throw Error(Errc::invalid_argument, "only left slides act on ideals");
    ideal = slide_ideal(ideal, op.axis, op.threshold);
  }
  return ideal;
}

Compression compress(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(Errc::zero_ideal, "cannot compress the zero ideal");
  MonomialIdeal current = ideal;
  SlideScript contractions;
  for (std::size_t axis = 0; axis < ideal.nvars(); ++axis) {
    std::set<int> exps;
    for (const auto& g : current.gens()) exps.insert(g[axis]);
    const int top = *exps.rbegin();
    for (int v = top - 1; v >= 1; --v) {
      if (exps.count(v)) continue;
      current = contract_ideal(current, axis, v);
      contractions.push_back({axis, v, SlideKind::left});
    }
  }
  std::reverse(contractions.begin(), contractions.end());
  return {std::move(current), std::move(contractions)};
}

bool has_consecutive_exponents(const MonomialIdeal& ideal) {
  for (std::size_t axis = 0; axis < ideal.nvars(); ++axis) {
    std::set<int> exps;
    for (const auto& g : ideal.gens()) exps.insert(g[axis]);
    if (exps.empty() || *exps.rbegin() == 0) continue;
    for (int v = 1; v <= *exps.rbegin(); ++v)
      if (!exps.count(v)) return false;
  }
  return true;
}

ExponentVector polarize_degree(const ExponentVector& b, const ExponentVector& a) {
  std::vector<int> bits;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 1; j <= a[i]; ++j) bits.push_back(j <= b[i] ? 1 : 0);
  return ExponentVector(std::move(bits));
}

ExponentVector copolarize_degree(const ExponentVector& b, const ExponentVector& a) {
  std::vector<int> bits;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 1; j <= a[i]; ++j) bits.push_back(j >= a[i] - b[i] + 1 ? 1 : 0);
  return ExponentVector(std::move(bits));
}

namespace {

MonomialIdeal polarize_with(const MonomialIdeal& ideal, const ExponentVector& a, bool reversed) {
  require_plain(ideal);
  require_determined(ideal, a);
  Ring target = Ring::grid(ideal.ring().names(), a.coords());
  std::vector<ExponentVector> raw;
  raw.reserve(ideal.size());
  for (const auto& g : ideal.gens())
    raw.push_back(reversed ? copolarize_degree(g, a) : polarize_degree(g, a));
  return MonomialIdeal(std::move(target), std::move(raw));
}

}  // namespace

MonomialIdeal polarize(const MonomialIdeal& ideal, const ExponentVector& a) {
  return polarize_with(ideal, a, false);
}

MonomialIdeal copolarize(const MonomialIdeal& ideal, const ExponentVector& a) {
  return polarize_with(ideal, a, true);
}

MonomialIdeal depolarize(const MonomialIdeal& grid_ideal) {
  require_grid(grid_ideal);
  if (!is_squarefree(grid_ideal))
    throw Error(Errc::invalid_argument, "depolarization expects a squarefree ideal");
  const Ring& ring = grid_ideal.ring();
  std::vector<ExponentVector> raw;
  for (const auto& g : grid_ideal.gens()) {
    ExponentVector b(ring.base_count());
    for (std::size_t k = 0; k < g.size(); ++k) b[ring.cell(k).base] += g[k];
    raw.push_back(std::move(b));
  }
  return MonomialIdeal(Ring::plain(ring.base_names()), std::move(raw));
}

MonomialIdeal reverse_slots(const MonomialIdeal& grid_ideal) {
  require_grid(grid_ideal);
  const Ring& ring = grid_ideal.ring();
  std::vector<ExponentVector> raw;
  for (const auto& g : grid_ideal.gens()) {
    ExponentVector r(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      const auto c = ring.cell(k);
      r[ring.cell_index(c.base, ring.slots()[c.base] + 1 - c.slot)] = g[k];
    }
    raw.push_back(std::move(r));
  }
  return MonomialIdeal(ring, std::move(raw));
}

MonomialIdeal inflate(const MonomialIdeal& ideal, std::size_t var) {
  if (var >= ideal.nvars()) throw Error(Errc::invalid_argument, "inflation variable out of range");
  if (!is_squarefree(ideal)) throw Error(Errc::invalid_argument, "inflation expects a squarefree ideal");
  const Ring& ring = ideal.ring();
  // Both layouts put the new variable at flat position var + 1.
  Ring target;
  if (ring.is_grid()) {
    auto slots = ring.slots();
    ++slots[ring.cell(var).base];
    target = Ring::grid(ring.base_names(), std::move(slots));
  } else {
    auto names = ring.names();
    names.insert(names.begin() + static_cast<std::ptrdiff_t>(var) + 1, ring.name(var) + "'");
    target = Ring::plain(std::move(names));
  }
  std::vector<ExponentVector> raw;
  for (const auto& g : ideal.gens()) {
    std::vector<int> c = g.coords();
    c.insert(c.begin() + static_cast<std::ptrdiff_t>(var) + 1, g[var]);
    raw.emplace_back(std::move(c));
  }
  return MonomialIdeal(std::move(target), std::move(raw));
}

bool is_generalized_polarization(const MonomialIdeal& ideal, const MonomialIdeal& grid_ideal,
                                 const ExponentVector& a, const Limits& limits) {
  require_grid(grid_ideal);
  if (grid_ideal.ring().slots() != a.coords() || ideal.nvars() != a.size())
    throw Error(Errc::invalid_argument, "grid shape does not match the determining vector");
  if (!is_squarefree(grid_ideal))
    throw Error(Errc::invalid_argument, "a generalized polarization must be squarefree");
  require_determined(ideal, a);
  if (depolarize(grid_ideal) != ideal) return false;
  const auto source = multigraded_betti({ModuleShape::ideal, ideal}, 0, limits).coarse();
  const auto target = multigraded_betti({ModuleShape::ideal, grid_ideal}, 0, limits).coarse();
  return source == target;
}

}  // namespace slidepol
