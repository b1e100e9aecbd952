#pragma once

// Sliding maps, ideal-level sliding, polarization and its inverse, and
// 1-vertex inflation.

#include <cstddef>
#include <vector>

#include "slidepol/core.hpp"

namespace slidepol {

/// The four order-preserving maps Z^n -> Z^n that move one axis by one step.
///   sigma: -1 where a_i >= j      tau: +1 where a_i >= j
///   lambda: +1 where a_i < j      rho: -1 where a_i <= j
enum class PointMap { sigma, tau, lambda, rho };

ExponentVector point_map(PointMap kind, const ExponentVector& a, std::size_t axis, int threshold);

enum class SlideKind { left, right };

struct SlideOp {
  std::size_t axis = 0;
  int threshold = 1;
  SlideKind kind = SlideKind::left;
  friend bool operator==(const SlideOp&, const SlideOp&) = default;
};

/// Slides applied left to right.
using SlideScript = std::vector<SlideOp>;

/// I^{<(i,j)}: apply tau_{(i,j)} to every generator. Requires j >= 1.
MonomialIdeal slide_ideal(const MonomialIdeal& ideal, std::size_t axis, int threshold);

/// Inverse of slide_ideal: lowers every axis-coordinate above j by one.
/// Throws Errc::precondition if some generator has axis-coordinate exactly j.
MonomialIdeal contract_ideal(const MonomialIdeal& ideal, std::size_t axis, int threshold);

MonomialIdeal apply_script(MonomialIdeal ideal, const SlideScript& script);

struct Compression {
  MonomialIdeal core;
  SlideScript script;  // apply_script(core, script) == original
};

/// Removes every gap in the per-axis exponent sets. Axes dividing no
/// generator are left alone.
Compression compress(const MonomialIdeal& ideal);

/// True iff each axis that divides some generator has exponent set
/// {0..b} or {1..b}.
bool has_consecutive_exponents(const MonomialIdeal& ideal);

/// Grid degrees of a single monomial b <= a: slots 1..b_i (polarize) or
/// slots a_i-b_i+1..a_i (copolarize) on each axis.
ExponentVector polarize_degree(const ExponentVector& b, const ExponentVector& a);
ExponentVector copolarize_degree(const ExponentVector& b, const ExponentVector& a);

/// pol_a(I) over the grid ring with slots(i) = a_i.
MonomialIdeal polarize(const MonomialIdeal& ideal, const ExponentVector& a);
/// pol^a(I), filling slots from the top.
MonomialIdeal copolarize(const MonomialIdeal& ideal, const ExponentVector& a);
/// Identifies every slot of an axis with the base variable (exponents add).
MonomialIdeal depolarize(const MonomialIdeal& grid_ideal);

/// Renames x_{i,j} <-> x_{i,slots(i)+1-j} on a grid ideal.
MonomialIdeal reverse_slots(const MonomialIdeal& grid_ideal);

/// 1-vertex inflation at variable `var` of a squarefree ideal.
///
/// Plain ring: a new variable named "<v>'" is inserted right after v.
/// Grid ring with var = x_{i,j}: axis i gains a slot; x_{i,j} becomes the
/// pair of slots j, j+1 and slots above j shift up by one.
MonomialIdeal inflate(const MonomialIdeal& ideal, std::size_t var);

/// J is a generalized polarization of I with respect to a: J squarefree over
/// the grid ring with slots a, depolarize(J) == I, and the Z-graded Betti
/// tables of I and J agree.
bool is_generalized_polarization(const MonomialIdeal& ideal, const MonomialIdeal& grid_ideal,
                                 const ExponentVector& a, const Limits& limits = {});

}  // namespace slidepol
