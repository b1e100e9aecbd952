#include "slidepol/bier.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "slidepol/duality.hpp"

namespace slidepol {

MonomialIdeal bier_murai_ideal(const MonomialIdeal& ideal, const ExponentVector& a,
                               const Limits& limits) {
  if (ideal.is_zero()) throw Error(Errc::zero_ideal, "Bier-Murai ideals need a nonzero ideal");
  require_determined(ideal, a);
  const ExponentVector slots = a + ones(a.size());
  const MonomialIdeal lower = polarize(ideal, slots);
  const MonomialIdeal upper = copolarize(alexander_dual(ideal, a, limits), slots);

  std::vector<ExponentVector> raw = lower.gens();
  raw.insert(raw.end(), upper.gens().begin(), upper.gens().end());
  const Ring& ring = lower.ring();
  for (std::size_t l = 0; l < a.size(); ++l) {
    ExponentVector axis(ring.size());
    for (int m = 1; m <= slots[l]; ++m) axis[ring.cell_index(l, m)] = 1;
    raw.push_back(std::move(axis));
  }
  return MonomialIdeal(ring, std::move(raw));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& squarefree_ideal, const Limits& limits) {
  if (!is_squarefree(squarefree_ideal))
    throw Error(Errc::invalid_argument, "Stanley-Reisner complexes need a squarefree ideal");
  const std::size_t n = squarefree_ideal.nvars();
  if (n > limits.vertices)
    throw Error(Errc::cap_exceeded, std::to_string(n) + " vertices exceed the cap of " +
                                        std::to_string(limits.vertices));
  using Face = SimplicialComplex::Face;
  std::vector<Face> gens;
  for (const auto& g : squarefree_ideal.gens()) {
    Face f = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (g[k]) f |= Face{1} << k;
    gens.push_back(f);
  }
  // blocked(v, chosen): adding v to chosen would complete a generator
  auto blocked = [&](std::size_t v, Face chosen) {
    const Face bit = Face{1} << v;
    for (Face g : gens)
      if ((g & bit) && ((g & ~bit) & ~chosen) == 0) return true;
    return false;
  };
  // v may stay outside only if some generator through v can still be completed
  auto may_exclude = [&](std::size_t v, Face excluded) {
    const Face bit = Face{1} << v;
    for (Face g : gens)
      if ((g & bit) && ((g & ~bit) & excluded) == 0) return true;
    return false;
  };

  std::vector<Face> facets;
  struct Frame {
    std::size_t v;
    Face chosen;
    Face excluded;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.v == n) {
      bool maximal = true;
      for (std::size_t v = 0; v < n && maximal; ++v)
        if (((f.excluded >> v) & 1) && !blocked(v, f.chosen)) maximal = false;
      if (maximal) facets.push_back(f.chosen);
      continue;
    }
    const Face bit = Face{1} << f.v;
    if (may_exclude(f.v, f.excluded)) stack.push_back({f.v + 1, f.chosen, f.excluded | bit});
    if (!blocked(f.v, f.chosen)) stack.push_back({f.v + 1, f.chosen | bit, f.excluded});
  }
  return SimplicialComplex::from_faces(n, std::move(facets));
}

SphereCertificate sphere_certificate(const SimplicialComplex& complex, int expected_dimension,
                                     const Limits& limits) {
  using Face = SimplicialComplex::Face;
  SphereCertificate cert;
  cert.vertex_count = complex.vertex_count();
  cert.expected_dimension = expected_dimension;
  if (complex.is_void()) return cert;
  cert.dimension = complex.dimension();

  const auto layers = complex.faces_by_dimension();
  for (std::size_t k = 0; k < layers.size(); ++k) {
    cert.f_vector.push_back(static_cast<long long>(layers[k].size()));
    cert.euler_reduced += (k % 2 == 0 ? -1 : 1) * static_cast<long long>(layers[k].size());
  }

  cert.pure = std::all_of(complex.facets().begin(), complex.facets().end(),
                          [&](Face f) { return std::popcount(f) == cert.dimension + 1; });

  std::map<Face, int> ridge_count;
  for (Face f : complex.facets())
    for (Face rest = f; rest; rest &= rest - 1) ++ridge_count[f & ~(rest & (~rest + 1))];
  cert.pseudomanifold = std::all_of(ridge_count.begin(), ridge_count.end(),
                                    [](const auto& kv) { return kv.second == 2; });

  cert.homology = reduced_homology(complex, 0, limits);
  std::vector<int> sphere(static_cast<std::size_t>(cert.dimension) + 2, 0);
  sphere.back() = 1;
  const long long sign = cert.dimension % 2 == 0 ? 1 : -1;
  cert.pass = cert.pure && cert.pseudomanifold && cert.homology == sphere &&
              cert.euler_reduced == sign && cert.dimension == expected_dimension;
  return cert;
}

Prop53Report verify_prop53(const MonomialIdeal& ideal, const ExponentVector& a, std::size_t axis,
                           int threshold, const Limits& limits) {
  require_determined(ideal, a);
  if (axis >= a.size()) throw Error(Errc::invalid_argument, "axis out of range");
  if (threshold < 1 || threshold > a[axis] + 1)
    throw Error(Errc::invalid_argument, "threshold must satisfy 1 <= j <= a_i + 1");

  Prop53Report report;
  const MonomialIdeal base = bier_murai_ideal(ideal, a, limits);
  report.slid_side = bier_murai_ideal(slide_ideal(ideal, axis, threshold),
                                      a + unit_vector(a.size(), axis), limits);
  report.inflated_side = inflate(base, base.ring().cell_index(axis, threshold));

  const Ring& from = base.ring();
  const Ring& to = report.inflated_side.ring();
  for (std::size_t k = 0; k < from.size(); ++k) {
    const GridCell c = from.cell(k);
    std::vector<std::string> image;
    if (c.base != axis || c.slot < threshold) {
      image.push_back(to.name(to.cell_index(c.base, c.slot)));
    } else if (c.slot == threshold) {
      image.push_back(to.name(to.cell_index(c.base, c.slot)));
      image.push_back(to.name(to.cell_index(c.base, c.slot + 1)));
    } else {
      image.push_back(to.name(to.cell_index(c.base, c.slot + 1)));
    }
    report.renaming.emplace_back(from.name(k), std::move(image));
  }
  report.success = report.slid_side == report.inflated_side;
  return report;
}

InflationRealization realize_by_inflation(const MonomialIdeal& ideal, const Limits& limits) {
  InflationRealization out;
  out.compression = compress(ideal);
  const MonomialIdeal& core = out.compression.core;
  out.core_a = join(lcm_join(core), ones(core.nvars()));
  ExponentVector a = out.core_a;
  MonomialIdeal current = bier_murai_ideal(core, a, limits);
  for (const auto& op : out.compression.script) {
    current = inflate(current, current.ring().cell_index(op.axis, op.threshold));
    a = a + unit_vector(a.size(), op.axis);
  }
  out.reconstructed = std::move(current);
  const ExponentVector target_a = join(lcm_join(ideal), ones(ideal.nvars()));
  out.target = bier_murai_ideal(ideal, target_a, limits);
  out.success = a == target_a && out.reconstructed == out.target;
  return out;
}

}  // namespace slidepol
