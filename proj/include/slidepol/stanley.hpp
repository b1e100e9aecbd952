#pragma once

// Stanley decompositions and exact Stanley depth for I and S/I.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "slidepol/homalg.hpp"

namespace slidepol {

/// The k[Z]-free space x^degree k[Z].
struct StanleySpace {
  ExponentVector degree;
  VarSet free;
  friend bool operator==(const StanleySpace&, const StanleySpace&) = default;
  friend auto operator<=>(const StanleySpace&, const StanleySpace&) = default;
};

struct StanleyDecomposition {
  ModuleDesc module;
  std::vector<StanleySpace> spaces;

  /// Smallest free set size. Throws on an empty decomposition.
  int sdepth() const;
};

/// Multidegrees c <= g (g = lcm of the ideal) where the module is nonzero.
struct CharPoset {
  ExponentVector g;
  std::vector<ExponentVector> points;  // sorted
};

CharPoset characteristic_poset(const ModuleDesc& module, const Limits& limits = {});
/// Same poset over the larger box [0, g]; g must dominate the lcm.
CharPoset characteristic_poset(const ModuleDesc& module, const ExponentVector& g, const Limits& limits = {});

struct ValidationResult {
  bool valid = false;
  /// First degree (lexicographic) where the cover count is wrong.
  std::optional<ExponentVector> witness;
  int expected = 0;
  int covered = 0;
};

/// Exact-cover check of every degree in a box that contains g + 1 and every
/// space degree + 1.
ValidationResult validate_decomposition(const StanleyDecomposition& d, const Limits& limits = {});

struct SdepthResult {
  int sdepth = 0;
  StanleyDecomposition witness;
};

/// Exact Stanley depth by searching interval partitions of the characteristic
/// poset. The witness decomposition attains the returned value.
SdepthResult sdepth_exact(const ModuleDesc& module, const Limits& limits = {});
/// The same search run on the poset over [0, g] for a g dominating the lcm.
SdepthResult sdepth_exact(const ModuleDesc& module, const ExponentVector& g, const Limits& limits = {});

/// Decomposition of M^{<(i,j)} built from one of M.
StanleyDecomposition push_decomposition(const StanleyDecomposition& d, std::size_t axis,
                                        int threshold, const Limits& limits = {});

/// Decomposition of M built from one of M^{<(i,j)}; M is recovered by
/// contracting the slid ideal.
StanleyDecomposition pull_decomposition(const StanleyDecomposition& d, std::size_t axis,
                                        int threshold, const Limits& limits = {});

}  // namespace slidepol
