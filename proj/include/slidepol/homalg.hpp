#pragma once

// Exact homological invariants of monomial ideals and their quotients.
//
// Betti numbers come from the upper Koszul simplicial complexes
//   K^b(I) = { squarefree t <= b : x^{b-t} in I },  beta_{l,b}(I) = dim H~_{l-1}(K^b(I)),
// evaluated on the lcm lattice of I. Every other invariant here is either read
// off the Betti table or found by exhaustive scans of a bounded box.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "slidepol/core.hpp"

namespace slidepol {

/// Finite simplicial complex on vertices 0..vertex_count-1 (at most 32),
/// stored by its facets as bitmasks. The void complex has no facets; the
/// irrelevant complex {emptyset} has the single facet 0.
class SimplicialComplex {
 public:
  using Face = std::uint32_t;

  SimplicialComplex() = default;
  static SimplicialComplex void_complex(std::size_t vertex_count);
  /// Keeps the inclusion-maximal members of `faces`.
  static SimplicialComplex from_faces(std::size_t vertex_count, std::vector<Face> faces);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool contains(Face face) const;
  /// -1 for {emptyset}; meaningless for the void complex.
  int dimension() const;
  /// All faces, grouped by dimension: result[d + 1] holds the d-faces.
  std::vector<std::vector<Face>> faces_by_dimension() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Face> facets_;  // sorted
};

/// Ranks of H~_{-1} .. H~_{dim K} over Q (characteristic 0) or GF(p).
/// Empty for the void complex.
std::vector<int> reduced_homology(const SimplicialComplex& complex, int characteristic = 0,
                                  const Limits& limits = {});

/// Same numbers computed straight from the face lattice, never via the nerve
/// of the facets. Exposed for cross-checking.
std::vector<int> reduced_homology_direct(const SimplicialComplex& complex, int characteristic = 0);

/// Rank of an integer matrix given as sparse rows of (column, value), over Q
/// or GF(p).
using SparseRow = std::vector<std::pair<std::size_t, long long>>;
std::size_t matrix_rank(std::vector<SparseRow> rows, int characteristic = 0);

enum class ModuleShape { ideal, quotient };

/// I itself (I nonzero) or S/I (I proper, possibly zero).
struct ModuleDesc {
  ModuleShape shape = ModuleShape::quotient;
  MonomialIdeal ideal;
};

void validate_module(const ModuleDesc& module);

class BettiTable {
 public:
  using Key = std::pair<int, ExponentVector>;

  BettiTable() = default;
  explicit BettiTable(std::map<Key, int> entries);

  const std::map<Key, int>& entries() const noexcept { return entries_; }
  int at(int l, const ExponentVector& degree) const;
  /// (l, total degree) -> rank
  std::map<std::pair<int, int>, int> coarse() const;
  /// l -> total rank
  std::map<int, int> totals() const;
  /// Largest l with a nonzero entry; -1 for the empty table.
  int max_index() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, int> entries_;
};

/// Joins of all nonempty generator subsets, sorted.
std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& ideal, const Limits& limits = {});

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const ExponentVector& degree);

BettiTable multigraded_betti(const ModuleDesc& module, int characteristic = 0,
                             const Limits& limits = {});

struct DepthDim {
  int depth = 0;
  int projdim = 0;
  int dim = 0;
  friend bool operator==(const DepthDim&, const DepthDim&) = default;
};

DepthDim depth_dim(const ModuleDesc& module, int characteristic = 0, const Limits& limits = {});

/// Krull dimension of S/I: the largest F such that no generator is supported
/// inside F.
int quotient_dimension(const MonomialIdeal& ideal, const Limits& limits = {});

/// Ass(S/I), each prime given by its variable set; sorted.
std::vector<VarSet> associated_primes(const MonomialIdeal& ideal, const Limits& limits = {});

struct StandardPair {
  ExponentVector base;
  VarSet free;
  friend bool operator==(const StandardPair&, const StandardPair&) = default;
  friend auto operator<=>(const StandardPair&, const StandardPair&) = default;
};

struct StandardPairs {
  std::vector<StandardPair> pairs;  // sorted
  int deg = 0;
  int adeg = 0;
  int dim = 0;
};

/// Standard pairs of S/I; adeg is their number, deg the number of pairs of
/// maximal dimension.
StandardPairs standard_pairs(const MonomialIdeal& ideal, const Limits& limits = {});

struct RingProperties {
  bool cohen_macaulay = false;
  bool gorenstein = false;
  bool seq_cm = false;
  friend bool operator==(const RingProperties&, const RingProperties&) = default;
};

/// CM, Gorenstein and sequentially CM flags of S/I. Sequential CM-ness is
/// decided on the squarefree side: polarize at lcm(I) v 1, take the squarefree
/// Alexander dual, and test it for componentwise linearity.
RingProperties ring_properties(const MonomialIdeal& ideal, int characteristic = 0,
                               const Limits& limits = {});

/// Squarefree I is componentwise linear iff every I_[d] (squarefree part of
/// degree d) has a d-linear resolution.
bool is_componentwise_linear(const MonomialIdeal& squarefree_ideal, int characteristic = 0,
                             const Limits& limits = {});

struct LinearQuotients {
  bool holds = false;
  std::vector<std::size_t> order;  // generator indices, valid when holds
};

LinearQuotients has_linear_quotients(const MonomialIdeal& ideal, const Limits& limits = {});

}  // namespace slidepol
