#pragma once

// Exact monomial and monomial-ideal arithmetic.
//
// Axes are 0-based throughout the C++ API. A MonomialIdeal always stores its
// minimal generators in ascending lexicographic order (first coordinate most
// significant), so two ideals over the same ring are equal iff their generator
// sequences are equal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "slidepol/error.hpp"

namespace slidepol {

/// A point of Z^n. Monomials use the nonnegative part.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n, int fill = 0) : coords_(n, fill) {}
  ExponentVector(std::initializer_list<int> init) : coords_(init) {}
  explicit ExponentVector(std::vector<int> coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  int operator[](std::size_t k) const { return coords_[k]; }
  int& operator[](std::size_t k) { return coords_[k]; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  const std::vector<int>& coords() const noexcept { return coords_; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> coords_;
};

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator-(const ExponentVector& a);

/// Componentwise a <= b.
bool preceq(const ExponentVector& a, const ExponentVector& b);
/// Componentwise maximum.
ExponentVector join(const ExponentVector& a, const ExponentVector& b);
/// Componentwise max(a, 0).
ExponentVector positive_part(const ExponentVector& a);
ExponentVector unit_vector(std::size_t n, std::size_t axis);
ExponentVector ones(std::size_t n);
int total_degree(const ExponentVector& a);
bool is_nonnegative(const ExponentVector& a);
bool is_zero(const ExponentVector& a);
bool is_squarefree(const ExponentVector& a);
std::string to_string(const ExponentVector& a);

/// Sorted list of 0-based variable indices.
using VarSet = std::vector<std::size_t>;

/// Position of one variable of a polarized (grid) ring: base axis, 1-based slot.
struct GridCell {
  std::size_t base;
  int slot;
  friend bool operator==(const GridCell&, const GridCell&) = default;
};

/// Variable names of a polynomial ring, optionally carrying grid structure.
///
/// A grid ring has variables x_{i,j}, 1 <= j <= slots(i), laid out base-major
/// and named "<base>[<slot>]".
class Ring {
 public:
  Ring() = default;
  static Ring plain(std::vector<std::string> names);
  /// Plain ring on n variables: x,y,z,w for n <= 4, else x1..xn.
  static Ring standard(std::size_t n);
  static Ring grid(std::vector<std::string> base_names, std::vector<int> slots);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t k) const { return names_.at(k); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool is_grid() const noexcept { return !slots_.empty(); }
  const std::vector<std::string>& base_names() const noexcept { return base_names_; }
  const std::vector<int>& slots() const noexcept { return slots_; }
  std::size_t base_count() const noexcept { return base_names_.size(); }
  /// Flat index of x_{base, slot}; slot is 1-based.
  std::size_t cell_index(std::size_t base, int slot) const;
  GridCell cell(std::size_t k) const;
  /// Offset of the first slot of a base axis.
  std::size_t base_offset(std::size_t base) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::string> base_names_;
  std::vector<int> slots_;
  std::vector<std::size_t> offsets_;
};

/// Resource caps for the exhaustive kernels.
struct Limits {
  std::uint64_t box = 1'000'000;       // points in any enumerated box
  std::uint64_t poset = 4096;          // characteristic poset size
  std::uint64_t lcm_lattice = 65536;   // distinct lcm-lattice elements
  std::size_t vertices = 24;           // simplicial complexes
  std::size_t linquot_gens = 12;       // linear-quotient ordering search
};

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes and canonically sorts raw. Throws Errc::unit_ideal if the
  /// zero exponent vector is present.
  MonomialIdeal(Ring ring, std::vector<ExponentVector> raw);
  static MonomialIdeal zero(Ring ring);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_.size(); }
  const std::vector<ExponentVector>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  Ring ring_;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal minimalize(const Ring& ring, std::vector<ExponentVector> raw);

/// True iff some generator divides x^c.
bool contains(const MonomialIdeal& ideal, const ExponentVector& c);

/// I : x^c. std::nullopt stands for the whole ring (x^c in I).
std::optional<MonomialIdeal> colon_monomial(const MonomialIdeal& ideal, const ExponentVector& c);

/// Coordinatewise maximum of the generators.
ExponentVector lcm_join(const MonomialIdeal& ideal);

/// Every minimal generator divides x^a; a must be >= 1 in each coordinate.
bool is_positively_determined(const MonomialIdeal& ideal, const ExponentVector& a);
/// Throws Errc::not_determined unless is_positively_determined(ideal, a).
void require_determined(const MonomialIdeal& ideal, const ExponentVector& a);

MonomialIdeal radical(const MonomialIdeal& ideal);
bool is_squarefree(const MonomialIdeal& ideal);

/// True iff every generator is a single variable (a monomial prime).
bool is_monomial_prime(const MonomialIdeal& ideal);

/// Number of lattice points in [0, upper]; saturates at UINT64_MAX.
std::uint64_t box_size(const ExponentVector& upper);
void require_box(const ExponentVector& upper, const Limits& limits);

/// Calls fn(point) for every point of [lower, upper] in lexicographic order.
template <class Fn>
void for_each_point(const ExponentVector& lower, const ExponentVector& upper, Fn&& fn) {
  const std::size_t n = lower.size();
  for (std::size_t k = 0; k < n; ++k)
    if (lower[k] > upper[k]) return;
  ExponentVector p = lower;
  while (true) {
    fn(static_cast<const ExponentVector&>(p));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (p[k] < upper[k]) {
        ++p[k];
        break;
      }
      p[k] = lower[k];
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace slidepol
