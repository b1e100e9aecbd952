#pragma once

#include <utility>
#include <vector>

#include "slidepol/core.hpp"

namespace slidepol {

/// Alexander dual I^{va} = (x^b | b <= a, x^{a-b} not in I), by enumerating
/// the box [0, a].
MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const ExponentVector& a,
                             const Limits& limits = {});

struct DualSlideReport {
  bool success = false;
  /// b -> tau_{(i, a_i+2-j)}(b) for each minimal generator b of I^{va}.
  std::vector<std::pair<ExponentVector, ExponentVector>> pairing;
  MonomialIdeal source_dual;  // I^{va}
  MonomialIdeal target_dual;  // (I^{<(i,j)})^{v(a+e_i)}
};

/// Checks that tau_{(i, a_i+2-j)} carries the minimal generators of I^{va}
/// exactly onto those of (I^{<(i,j)})^{v(a+e_i)}. Needs 1 <= j <= a_i + 1.
DualSlideReport dual_slide_correspondence(const MonomialIdeal& ideal, const ExponentVector& a,
                                          std::size_t axis, int threshold,
                                          const Limits& limits = {});

}  // namespace slidepol
