#pragma once

// Bier-Murai spheres, Stanley-Reisner complexes and sphere certificates.

#include <string>
#include <vector>

#include "slidepol/functors.hpp"
#include "slidepol/homalg.hpp"

namespace slidepol {

/// BM_a(I) = pol_{a+1}(I) + pol^{a+1}(I^{va}) + (x_{l,1} ... x_{l,a_l+1} | l)
/// over the grid ring with slots a + 1.
MonomialIdeal bier_murai_ideal(const MonomialIdeal& ideal, const ExponentVector& a,
                               const Limits& limits = {});

/// The complex whose Stanley-Reisner ideal is J, on all variables of J's ring.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& squarefree_ideal,
                                          const Limits& limits = {});

struct SphereCertificate {
  std::size_t vertex_count = 0;
  int dimension = -1;
  int expected_dimension = -1;
  std::vector<long long> f_vector;  // f_{-1}, f_0, ...
  bool pure = false;
  bool pseudomanifold = false;
  long long euler_reduced = 0;
  std::vector<int> homology;
  bool pass = false;
};

/// Necessary conditions for K to be a sphere of the expected dimension.
SphereCertificate sphere_certificate(const SimplicialComplex& complex, int expected_dimension,
                                     const Limits& limits = {});

struct Prop53Report {
  bool success = false;
  MonomialIdeal slid_side;      // BM_{a+e_i}(I^{<(i,j)})
  MonomialIdeal inflated_side;  // Infl_{(i,j)}(BM_a(I))
  /// Each variable of BM_a(I) and the variables it becomes.
  std::vector<std::pair<std::string, std::vector<std::string>>> renaming;
};

/// Compares BM_{a+e_i}(I^{<(i,j)}) with the inflation of BM_a(I) at x_{i,j}.
/// Needs 1 <= j <= a_i + 1.
Prop53Report verify_prop53(const MonomialIdeal& ideal, const ExponentVector& a, std::size_t axis,
                           int threshold, const Limits& limits = {});

struct InflationRealization {
  bool success = false;
  Compression compression;
  ExponentVector core_a;
  MonomialIdeal reconstructed;  // inflations applied to BM of the core
  MonomialIdeal target;         // BM of the original ideal
};

/// Rebuilds BM_{g v 1}(I) from the Bier-Murai ideal of the compressed core by
/// one inflation per slide of the compression script.
InflationRealization realize_by_inflation(const MonomialIdeal& ideal, const Limits& limits = {});

}  // namespace slidepol
