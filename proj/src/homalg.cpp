#include "slidepol/homalg.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "slidepol/duality.hpp"
#include "slidepol/functors.hpp"

namespace slidepol {

namespace {

using Face = SimplicialComplex::Face;

void require_bitmask_ring(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw Error(Errc::cap_exceeded, "ring has " + std::to_string(n) + " variables, cap is " +
                                        std::to_string(cap));
}

std::uint64_t support_mask(const ExponentVector& v) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] > 0) m |= std::uint64_t{1} << k;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Betti tables

void validate_module(const ModuleDesc& module) {
  if (module.shape == ModuleShape::ideal && module.ideal.is_zero())
    throw Error(Errc::zero_ideal, "the ideal module needs a nonzero ideal");
}

BettiTable::BettiTable(std::map<Key, int> entries) {
  for (auto& [k, v] : entries)
    if (v != 0) entries_.emplace(k, v);
}

int BettiTable::at(int l, const ExponentVector& degree) const {
  auto it = entries_.find({l, degree});
  return it == entries_.end() ? 0 : it->second;
}

std::map<std::pair<int, int>, int> BettiTable::coarse() const {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [k, v] : entries_) out[{k.first, total_degree(k.second)}] += v;
  return out;
}

std::map<int, int> BettiTable::totals() const {
  std::map<int, int> out;
  for (const auto& [k, v] : entries_) out[k.first] += v;
  return out;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [k, v] : entries_) m = std::max(m, k.first);
  return m;
}

std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& ideal, const Limits& limits) {
  std::set<ExponentVector> lattice;
  for (const auto& g : ideal.gens()) {
    std::vector<ExponentVector> fresh{g};
    for (const auto& l : lattice) fresh.push_back(join(l, g));
    for (auto& f : fresh) {
      lattice.insert(std::move(f));
      if (lattice.size() > limits.lcm_lattice)
        throw Error(Errc::cap_exceeded, "lcm lattice exceeds " + std::to_string(limits.lcm_lattice) +
                                            " elements");
    }
  }
  return {lattice.begin(), lattice.end()};
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const ExponentVector& degree) {
  const std::size_t n = ideal.nvars();
  if (degree.size() != n) throw Error(Errc::invalid_argument, "degree has the wrong length");
  std::vector<Face> facets;
  for (const auto& m : ideal.gens()) {
    if (!preceq(m, degree)) continue;
    Face f = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (m[k] < degree[k]) f |= Face{1} << k;
    facets.push_back(f);
  }
  return SimplicialComplex::from_faces(n, std::move(facets));
}

BettiTable multigraded_betti(const ModuleDesc& module, int characteristic, const Limits& limits) {
  validate_module(module);
  const MonomialIdeal& ideal = module.ideal;
  const std::size_t n = ideal.nvars();
  const int shift = module.shape == ModuleShape::quotient ? 1 : 0;
  std::map<BettiTable::Key, int> entries;
  if (shift) entries[{0, ExponentVector(n)}] = 1;
  if (ideal.is_zero()) return BettiTable(std::move(entries));
  require_bitmask_ring(n, 32);
  for (const auto& b : lcm_lattice(ideal, limits)) {
    const auto h = reduced_homology(upper_koszul_complex(ideal, b), characteristic, limits);
    for (std::size_t k = 0; k < h.size(); ++k)
      if (h[k] != 0) entries[{static_cast<int>(k) + shift, b}] = h[k];
  }
  return BettiTable(std::move(entries));
}

// ---------------------------------------------------------------------------
// Depth and dimension

int quotient_dimension(const MonomialIdeal& ideal, const Limits&) {
  const std::size_t n = ideal.nvars();
  if (ideal.is_zero()) return static_cast<int>(n);
  require_bitmask_ring(n, 64);
  std::vector<std::uint64_t> supports;
  const MonomialIdeal rad = radical(ideal);
  for (const auto& g : rad.gens()) supports.push_back(support_mask(g));

  // Largest vertex set containing no generator support (an independent set).
  int best = 0;
  struct Frame {
    std::size_t next;
    std::uint64_t chosen;
    int size;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    best = std::max(best, f.size);
    if (f.size + static_cast<int>(n - f.next) <= best) continue;
    if (f.next == n) continue;
    stack.push_back({f.next + 1, f.chosen, f.size});
    const std::uint64_t with = f.chosen | (std::uint64_t{1} << f.next);
    bool ok = true;
    for (std::uint64_t s : supports)
      if ((s & with) == s) {
        ok = false;
        break;
      }
    if (ok) stack.push_back({f.next + 1, with, f.size + 1});
  }
  return best;
}

DepthDim depth_dim(const ModuleDesc& module, int characteristic, const Limits& limits) {
  validate_module(module);
  const int n = static_cast<int>(module.ideal.nvars());
  const BettiTable table = multigraded_betti(module, characteristic, limits);
  DepthDim r;
  r.projdim = table.max_index();
  r.depth = n - r.projdim;
  r.dim = module.shape == ModuleShape::ideal ? n : quotient_dimension(module.ideal, limits);
  return r;
}

// ---------------------------------------------------------------------------
// Associated primes and standard pairs

std::vector<VarSet> associated_primes(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.is_zero()) throw Error(Errc::zero_ideal, "Ass(S/0) is not computed");
  const ExponentVector g = lcm_join(ideal);
  require_box(g, limits);
  std::set<VarSet> primes;
  for_each_point(ExponentVector(g.size()), g, [&](const ExponentVector& c) {
    auto colon = colon_monomial(ideal, c);
    if (!colon || !is_monomial_prime(*colon)) return;
    VarSet vars;
    for (const auto& m : colon->gens())
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] == 1) vars.push_back(k);
    std::sort(vars.begin(), vars.end());
    primes.insert(std::move(vars));
  });
  return {primes.begin(), primes.end()};
}

StandardPairs standard_pairs(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.is_zero()) throw Error(Errc::zero_ideal, "standard pairs of S/0 are not computed");
  const std::size_t n = ideal.nvars();
  require_bitmask_ring(n, 30);
  const ExponentVector g = lcm_join(ideal);
  require_box(g, limits);

  auto admissible = [&](const ExponentVector& b, std::uint64_t free) {
    for (const auto& m : ideal.gens()) {
      bool divides = true;
      for (std::size_t k = 0; k < n && divides; ++k)
        if (!((free >> k) & 1) && m[k] > b[k]) divides = false;
      if (divides) return false;
    }
    return true;
  };

  StandardPairs out;
  for (std::uint64_t free = 0; free < (std::uint64_t{1} << n); ++free) {
    // Bases live off the free set, strictly below g; larger bases are never maximal.
    ExponentVector upper(n);
    bool empty_range = false;
    for (std::size_t k = 0; k < n; ++k) {
      if ((free >> k) & 1) continue;
      upper[k] = g[k] - 1;
      if (upper[k] < 0) empty_range = true;
    }
    if (empty_range) continue;
    for_each_point(ExponentVector(n), upper, [&](const ExponentVector& b) {
      if (!admissible(b, free)) return;
      for (std::size_t k = 0; k < n; ++k) {
        if ((free >> k) & 1) continue;
        ExponentVector lower = b;
        lower[k] = 0;
        if (admissible(lower, free | (std::uint64_t{1} << k))) return;
      }
      VarSet vars;
      for (std::size_t k = 0; k < n; ++k)
        if ((free >> k) & 1) vars.push_back(k);
      out.pairs.push_back({b, std::move(vars)});
    });
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.adeg = static_cast<int>(out.pairs.size());
  for (const auto& p : out.pairs) out.dim = std::max(out.dim, static_cast<int>(p.free.size()));
  for (const auto& p : out.pairs)
    if (static_cast<int>(p.free.size()) == out.dim) ++out.deg;
  return out;
}

// ---------------------------------------------------------------------------
// Ring properties

bool is_componentwise_linear(const MonomialIdeal& squarefree_ideal, int characteristic,
                             const Limits& limits) {
  if (!is_squarefree(squarefree_ideal))
    throw Error(Errc::invalid_argument, "componentwise linearity is tested on squarefree ideals");
  if (squarefree_ideal.is_zero()) return true;
  const std::size_t n = squarefree_ideal.nvars();
  require_bitmask_ring(n, 30);
  if ((std::uint64_t{1} << n) > limits.box)
    throw Error(Errc::cap_exceeded, "2^" + std::to_string(n) + " squarefree degrees exceed the box cap");

  std::vector<std::pair<int, Face>> gens;
  std::set<int> degrees;
  for (const auto& m : squarefree_ideal.gens()) {
    gens.emplace_back(total_degree(m), static_cast<Face>(support_mask(m)));
    degrees.insert(total_degree(m));
  }

  // The squarefree part in degree d has a linear resolution iff for every
  // sigma the complex {tau <= sigma : sigma - tau divisible by a generator of
  // degree <= d} has no reduced homology below degree |sigma| - d - 1.
  for (int d : degrees) {
    for (Face sigma = 0; sigma < (Face{1} << n); ++sigma) {
      const int size = std::popcount(sigma);
      if (size < d + 2) continue;
      std::vector<Face> facets;
      for (const auto& [deg, m] : gens)
        if (deg <= d && (m & sigma) == m) facets.push_back(sigma & ~m);
      if (facets.empty()) continue;
      const auto h =
          reduced_homology(SimplicialComplex::from_faces(n, std::move(facets)), characteristic, limits);
      const int bound = size - d - 1;  // check H~_j for j < bound, i.e. index j + 1
      for (int j = -1; j < bound; ++j) {
        const std::size_t idx = static_cast<std::size_t>(j + 1);
        if (idx < h.size() && h[idx] != 0) return false;
      }
    }
  }
  return true;
}

RingProperties ring_properties(const MonomialIdeal& ideal, int characteristic, const Limits& limits) {
  if (ideal.is_zero()) throw Error(Errc::zero_ideal, "ring properties need a nonzero ideal");
  RingProperties r;
  const ModuleDesc quotient{ModuleShape::quotient, ideal};
  const BettiTable table = multigraded_betti(quotient, characteristic, limits);
  const int n = static_cast<int>(ideal.nvars());
  const int projdim = table.max_index();
  const int depth = n - projdim;
  const int dim = quotient_dimension(ideal, limits);
  r.cohen_macaulay = depth == dim;
  r.gorenstein = r.cohen_macaulay && table.totals().at(projdim) == 1;

  MonomialIdeal squarefree = ideal;
  if (!is_squarefree(ideal)) {
    const MonomialIdeal plain(Ring::standard(ideal.nvars()), ideal.gens());
    const ExponentVector a = join(lcm_join(plain), ones(plain.nvars()));
    squarefree = polarize(plain, a);
  }
  const MonomialIdeal dual =
      alexander_dual(squarefree, ones(squarefree.nvars()), limits);
  r.seq_cm = is_componentwise_linear(dual, characteristic, limits);
  return r;
}

// ---------------------------------------------------------------------------
// Linear quotients

LinearQuotients has_linear_quotients(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.is_zero()) throw Error(Errc::zero_ideal, "linear quotients need a nonzero ideal");
  const std::size_t r = ideal.size();
  if (r > limits.linquot_gens)
    throw Error(Errc::cap_exceeded, std::to_string(r) + " generators exceed the linear-quotient cap of " +
                                        std::to_string(limits.linquot_gens));
  const auto& gens = ideal.gens();
  const std::size_t n = ideal.nvars();

  // (gens in mask) : gens[k] is generated by variables
  auto prime_colon = [&](std::uint32_t mask, std::size_t k) {
    std::vector<ExponentVector> parts;
    for (std::size_t j = 0; j < r; ++j)
      if ((mask >> j) & 1) parts.push_back(positive_part(gens[j] - gens[k]));
    std::vector<bool> linear(n, false);
    for (const auto& p : parts)
      if (total_degree(p) == 1)
        for (std::size_t v = 0; v < n; ++v)
          if (p[v] == 1) linear[v] = true;
    for (const auto& p : parts) {
      bool hit = false;
      for (std::size_t v = 0; v < n && !hit; ++v)
        if (p[v] > 0 && linear[v]) hit = true;
      if (!hit) return false;
    }
    return true;
  };

  const std::uint32_t full = (std::uint32_t{1} << r) - 1;
  std::vector<int> last(std::size_t{full} + 1, -1);  // -1 unreachable; last generator otherwise
  last[0] = static_cast<int>(r);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (std::size_t k = 0; k < r; ++k) {
      if (!((mask >> k) & 1)) continue;
      const std::uint32_t rest = mask & ~(std::uint32_t{1} << k);
      if (last[rest] < 0) continue;
      if (rest == 0 || prime_colon(rest, k)) {
        last[mask] = static_cast<int>(k);
        break;
      }
    }
  }
  LinearQuotients out;
  if (last[full] < 0) return out;
  out.holds = true;
  for (std::uint32_t mask = full; mask; mask &= ~(std::uint32_t{1} << last[mask]))
    out.order.push_back(static_cast<std::size_t>(last[mask]));
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

}  // namespace slidepol
