#include "slidepol/duality.hpp"

#include <algorithm>

#include "slidepol/functors.hpp"

namespace slidepol {

MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const ExponentVector& a,
                             const Limits& limits) {
  if (ideal.is_zero()) throw Error(Errc::zero_ideal, "the dual of the zero ideal is the unit ideal");
  require_determined(ideal, a);
  require_box(a, limits);
  std::vector<ExponentVector> raw;
  for_each_point(ExponentVector(a.size()), a, [&](const ExponentVector& b) {
    if (!contains(ideal, a - b)) raw.push_back(b);
  });
  return MonomialIdeal(ideal.ring(), std::move(raw));
}

DualSlideReport dual_slide_correspondence(const MonomialIdeal& ideal, const ExponentVector& a,
                                          std::size_t axis, int threshold, const Limits& limits) {
  require_determined(ideal, a);
  if (axis >= a.size()) throw Error(Errc::invalid_argument, "axis out of range");
  if (threshold < 1 || threshold > a[axis] + 1)
    throw Error(Errc::invalid_argument, "threshold must satisfy 1 <= j <= a_i + 1");

  DualSlideReport report;
  report.source_dual = alexander_dual(ideal, a, limits);
  const MonomialIdeal slid = slide_ideal(ideal, axis, threshold);
  report.target_dual = alexander_dual(slid, a + unit_vector(a.size(), axis), limits);

  const int image_threshold = a[axis] + 2 - threshold;
  std::vector<ExponentVector> image;
  for (const auto& b : report.source_dual.gens()) {
    auto t = point_map(PointMap::tau, b, axis, image_threshold);
    report.pairing.emplace_back(b, t);
    image.push_back(std::move(t));
  }
  std::sort(image.begin(), image.end());
  report.success = image == report.target_dual.gens();
  return report;
}

}  // namespace slidepol
