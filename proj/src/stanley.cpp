#include "slidepol/stanley.hpp"

#include <algorithm>
#include <unordered_set>

#include "slidepol/functors.hpp"

namespace slidepol {

namespace {

bool in_support(const ModuleDesc& module, const ExponentVector& c) {
  const bool member = contains(module.ideal, c);
  return module.shape == ModuleShape::ideal ? member : !member;
}

ExponentVector determining_vector(const ModuleDesc& module) {
  if (module.ideal.is_zero()) return ExponentVector(module.ideal.nvars());
  return lcm_join(module.ideal);
}

bool covers(const StanleySpace& s, const ExponentVector& c, std::vector<bool>& mask) {
  std::fill(mask.begin(), mask.end(), false);
  for (std::size_t k : s.free) mask[k] = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] < s.degree[k]) return false;
    if (!mask[k] && c[k] != s.degree[k]) return false;
  }
  return true;
}

void require_decomposition_shape(const StanleyDecomposition& d) {
  validate_module(d.module);
  const std::size_t n = d.module.ideal.nvars();
  for (const auto& s : d.spaces) {
    if (s.degree.size() != n || !is_nonnegative(s.degree))
      throw Error(Errc::invalid_argument, "Stanley space degree " + to_string(s.degree) + " is invalid");
    for (std::size_t k : s.free)
      if (k >= n) throw Error(Errc::invalid_argument, "Stanley space free variable out of range");
  }
}

// Mixed-radix index of c in the box [0, g].
struct BoxIndex {
  ExponentVector g;
  std::vector<std::size_t> stride;

  explicit BoxIndex(ExponentVector upper) : g(std::move(upper)), stride(g.size()) {
    std::size_t s = 1;
    for (std::size_t k = g.size(); k-- > 0;) {
      stride[k] = s;
      s *= static_cast<std::size_t>(g[k] + 1);
    }
    total = s;
  }
  std::size_t operator()(const ExponentVector& c) const {
    std::size_t r = 0;
    for (std::size_t k = 0; k < c.size(); ++k) r += stride[k] * static_cast<std::size_t>(c[k]);
    return r;
  }
  std::size_t total = 1;
};

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : v) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

class PartitionSearch {
 public:
  PartitionSearch(const CharPoset& poset) : poset_(poset), index_(poset.g) {
    const std::size_t m = poset.points.size();
    // Linear extension: total degree, then lexicographic.
    order_.resize(m);
    for (std::size_t k = 0; k < m; ++k) order_[k] = k;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return total_degree(poset.points[a]) < total_degree(poset.points[b]);
    });
    position_.assign(index_.total, -1);
    for (std::size_t k = 0; k < m; ++k) position_[index_(poset.points[k])] = static_cast<long>(k);
    rho_.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
      int r = 0;
      for (std::size_t v = 0; v < poset.g.size(); ++v)
        if (poset.points[k][v] == poset.g[v]) ++r;
      rho_[k] = r;
    }
    above_.resize(m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (preceq(poset.points[a], poset.points[b])) above_[a].push_back(b);
    for (std::size_t a = 0; a < m; ++a)
      std::stable_sort(above_[a].begin(), above_[a].end(), [&](std::size_t x, std::size_t y) {
        return interval_size(a, x) < interval_size(a, y);
      });
  }

  int max_rho() const {
    int r = 0;
    for (int x : rho_) r = std::max(r, x);
    return r;
  }

  /// Interval partition with every top of rank >= k, as (bottom, top) pairs.
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> solve(int k) {
    k_ = k;
    failed_.clear();
    covered_.assign((poset_.points.size() + 63) / 64, 0);
    chosen_.clear();
    // Every point needs some admissible top above it.
    for (std::size_t p = 0; p < poset_.points.size(); ++p) {
      bool any = false;
      for (std::size_t c : above_[p])
        if (rho_[c] >= k) {
          any = true;
          break;
        }
      if (!any) return std::nullopt;
    }
    if (search(0)) return chosen_;
    return std::nullopt;
  }

 private:
  std::size_t interval_size(std::size_t b, std::size_t c) const {
    std::size_t s = 1;
    for (std::size_t v = 0; v < poset_.g.size(); ++v)
      s *= static_cast<std::size_t>(poset_.points[c][v] - poset_.points[b][v] + 1);
    return s;
  }

  bool is_covered(std::size_t k) const { return (covered_[k / 64] >> (k % 64)) & 1; }
  void flip(std::size_t k) { covered_[k / 64] ^= std::uint64_t{1} << (k % 64); }

  // Members of [b, c]; empty if one is missing from P or already covered.
  bool interval_members(std::size_t b, std::size_t c, std::vector<std::size_t>& out) const {
    out.clear();
    bool ok = true;
    for_each_point(poset_.points[b], poset_.points[c], [&](const ExponentVector& d) {
      if (!ok) return;
      const long pos = position_[index_(d)];
      if (pos < 0 || is_covered(static_cast<std::size_t>(pos))) {
        ok = false;
        return;
      }
      out.push_back(static_cast<std::size_t>(pos));
    });
    return ok;
  }

  bool search(std::size_t cursor) {
    while (cursor < order_.size() && is_covered(order_[cursor])) ++cursor;
    if (cursor == order_.size()) return true;
    if (failed_.count(covered_)) return false;
    const std::size_t p = order_[cursor];
    std::vector<std::size_t> members;
    for (std::size_t c : above_[p]) {
      if (rho_[c] < k_ || is_covered(c)) continue;
      if (!interval_members(p, c, members)) continue;
      for (std::size_t m : members) flip(m);
      chosen_.emplace_back(p, c);
      if (search(cursor + 1)) return true;
      chosen_.pop_back();
      for (std::size_t m : members) flip(m);
    }
    if (failed_.size() < kMemoCap) failed_.insert(covered_);
    return false;
  }

  static constexpr std::size_t kMemoCap = 1u << 20;

  const CharPoset& poset_;
  BoxIndex index_;
  std::vector<std::size_t> order_;
  std::vector<long> position_;
  std::vector<int> rho_;
  std::vector<std::vector<std::size_t>> above_;
  int k_ = 0;
  std::vector<std::uint64_t> covered_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
  std::unordered_set<std::vector<std::uint64_t>, VectorHash> failed_;
};

}  // namespace

int StanleyDecomposition::sdepth() const {
  if (spaces.empty()) throw Error(Errc::invalid_argument, "empty Stanley decomposition");
  std::size_t m = spaces.front().free.size();
  for (const auto& s : spaces) m = std::min(m, s.free.size());
  return static_cast<int>(m);
}

CharPoset characteristic_poset(const ModuleDesc& module, const Limits& limits) {
  validate_module(module);
  return characteristic_poset(module, determining_vector(module), limits);
}

CharPoset characteristic_poset(const ModuleDesc& module, const ExponentVector& g, const Limits& limits) {
  validate_module(module);
  if (g.size() != module.ideal.nvars() || !preceq(determining_vector(module), g))
    throw Error(Errc::invalid_argument, "box corner " + to_string(g) + " does not dominate the lcm");
  CharPoset poset;
  poset.g = g;
  require_box(poset.g, limits);
  for_each_point(ExponentVector(poset.g.size()), poset.g, [&](const ExponentVector& c) {
    if (in_support(module, c)) {
      poset.points.push_back(c);
      if (poset.points.size() > limits.poset)
        throw Error(Errc::cap_exceeded, "characteristic poset exceeds " + std::to_string(limits.poset) +
                                            " points");
    }
  });
  return poset;
}

ValidationResult validate_decomposition(const StanleyDecomposition& d, const Limits& limits) {
  require_decomposition_shape(d);
  const std::size_t n = d.module.ideal.nvars();
  ExponentVector upper = determining_vector(d.module);
  for (const auto& s : d.spaces) upper = join(upper, s.degree);
  upper = upper + ones(n);
  require_box(upper, limits);

  ValidationResult result;
  result.valid = true;
  std::vector<bool> mask(n);
  for_each_point(ExponentVector(n), upper, [&](const ExponentVector& c) {
    if (!result.valid) return;
    const int expected = in_support(d.module, c) ? 1 : 0;
    int count = 0;
    for (const auto& s : d.spaces)
      if (covers(s, c, mask)) ++count;
    if (count != expected) {
      result.valid = false;
      result.witness = c;
      result.expected = expected;
      result.covered = count;
    }
  });
  return result;
}

SdepthResult sdepth_exact(const ModuleDesc& module, const Limits& limits) {
  validate_module(module);
  return sdepth_exact(module, determining_vector(module), limits);
}

SdepthResult sdepth_exact(const ModuleDesc& module, const ExponentVector& g, const Limits& limits) {
  const CharPoset poset = characteristic_poset(module, g, limits);
  if (poset.points.empty()) throw Error(Errc::zero_ideal, "the module is zero");
  PartitionSearch search(poset);

  int lo = 0, hi = search.max_rho();
  auto best = search.solve(0);
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (auto found = search.solve(mid)) {
      lo = mid;
      best = std::move(found);
    } else {
      hi = mid - 1;
    }
  }

  SdepthResult result;
  result.sdepth = lo;
  result.witness.module = module;
  for (const auto& [bottom, top] : *best) {
    const ExponentVector& b = poset.points[bottom];
    const ExponentVector& c = poset.points[top];
    VarSet free;
    ExponentVector upper = b;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (c[v] == g[v])
        free.push_back(v);
      else
        upper[v] = c[v];
    }
    // The interval splits into one space per degree of its bounded directions.
    for_each_point(b, upper, [&](const ExponentVector& d) { result.witness.spaces.push_back({d, free}); });
  }
  std::sort(result.witness.spaces.begin(), result.witness.spaces.end());
  return result;
}

StanleyDecomposition push_decomposition(const StanleyDecomposition& d, std::size_t axis,
                                        int threshold, const Limits& limits) {
  const auto check = validate_decomposition(d, limits);
  if (!check.valid)
    throw Error(Errc::invalid_argument, "input decomposition is not valid at " + to_string(*check.witness));
  StanleyDecomposition out;
  out.module = {d.module.shape, slide_ideal(d.module.ideal, axis, threshold)};
  for (const auto& s : d.spaces) {
    const bool has_axis = std::find(s.free.begin(), s.free.end(), axis) != s.free.end();
    out.spaces.push_back({point_map(PointMap::tau, s.degree, axis, threshold), s.free});
    if (s.degree[axis] == threshold - 1 && !has_axis)
      out.spaces.push_back({s.degree + unit_vector(s.degree.size(), axis), s.free});
  }
  std::sort(out.spaces.begin(), out.spaces.end());
  return out;
}

StanleyDecomposition pull_decomposition(const StanleyDecomposition& d, std::size_t axis,
                                        int threshold, const Limits& limits) {
  const auto check = validate_decomposition(d, limits);
  if (!check.valid)
    throw Error(Errc::invalid_argument, "input decomposition is not valid at " + to_string(*check.witness));
  StanleyDecomposition out;
  out.module = {d.module.shape, contract_ideal(d.module.ideal, axis, threshold)};
  for (const auto& s : d.spaces) {
    const bool has_axis = std::find(s.free.begin(), s.free.end(), axis) != s.free.end();
    if (s.degree[axis] == threshold - 1) {
      if (has_axis) out.spaces.push_back(s);
      continue;
    }
    out.spaces.push_back({point_map(PointMap::sigma, s.degree, axis, threshold), s.free});
  }
  std::sort(out.spaces.begin(), out.spaces.end());
  return out;
}

}  // namespace slidepol
