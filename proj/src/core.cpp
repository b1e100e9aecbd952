#include "slidepol/core.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace slidepol {

namespace {

void require_same_size(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw Error(Errc::invalid_argument, "exponent vectors of different lengths");
}

bool valid_plain_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  std::size_t k = 1;
  while (k < name.size() && (std::isalnum(static_cast<unsigned char>(name[k])) || name[k] == '_')) ++k;
  while (k < name.size() && name[k] == '\'') ++k;
  return k == name.size();
}

}  // namespace

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  ExponentVector r = a;
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += b[k];
  return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  ExponentVector r = a;
  for (std::size_t k = 0; k < a.size(); ++k) r[k] -= b[k];
  return r;
}

ExponentVector operator-(const ExponentVector& a) {
  ExponentVector r = a;
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = -r[k];
  return r;
}

bool preceq(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  ExponentVector r = a;
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

ExponentVector positive_part(const ExponentVector& a) {
  ExponentVector r = a;
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], 0);
  return r;
}

ExponentVector unit_vector(std::size_t n, std::size_t axis) {
  ExponentVector e(n);
  e[axis] = 1;
  return e;
}

ExponentVector ones(std::size_t n) { return ExponentVector(n, 1); }

int total_degree(const ExponentVector& a) {
  int d = 0;
  for (int v : a) d += v;
  return d;
}

bool is_nonnegative(const ExponentVector& a) {
  return std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
}

bool is_zero(const ExponentVector& a) {
  return std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
}

bool is_squarefree(const ExponentVector& a) {
  return std::all_of(a.begin(), a.end(), [](int v) { return v == 0 || v == 1; });
}

std::string to_string(const ExponentVector& a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(a[k]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Ring

Ring Ring::plain(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& nm : names) {
    if (!valid_plain_name(nm))
      throw Error(Errc::invalid_argument, "invalid variable name '" + nm + "'");
    if (!seen.insert(nm).second)
      throw Error(Errc::invalid_argument, "duplicate variable name '" + nm + "'");
  }
  Ring r;
  r.names_ = std::move(names);
  return r;
}

Ring Ring::standard(std::size_t n) {
  std::vector<std::string> names;
  if (n <= 4) {
    static const char* small[] = {"x", "y", "z", "w"};
    for (std::size_t k = 0; k < n; ++k) names.emplace_back(small[k]);
  } else {
    for (std::size_t k = 0; k < n; ++k) names.push_back("x" + std::to_string(k + 1));
  }
  return plain(std::move(names));
}

Ring Ring::grid(std::vector<std::string> base_names, std::vector<int> slots) {
  if (base_names.size() != slots.size())
    throw Error(Errc::invalid_argument, "grid shape does not match base variable count");
  // validates names and distinctness
  (void)plain(base_names);
  Ring r;
  r.base_names_ = std::move(base_names);
  r.slots_ = std::move(slots);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < r.slots_.size(); ++i) {
    if (r.slots_[i] < 1) throw Error(Errc::invalid_argument, "grid slot counts must be positive");
    r.offsets_.push_back(offset);
    for (int j = 1; j <= r.slots_[i]; ++j)
      r.names_.push_back(r.base_names_[i] + "[" + std::to_string(j) + "]");
    offset += static_cast<std::size_t>(r.slots_[i]);
  }
  return r;
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Ring::cell_index(std::size_t base, int slot) const {
  if (!is_grid()) throw Error(Errc::invalid_argument, "ring has no grid structure");
  if (base >= slots_.size() || slot < 1 || slot > slots_[base])
    throw Error(Errc::invalid_argument, "grid cell out of range");
  return offsets_[base] + static_cast<std::size_t>(slot - 1);
}

GridCell Ring::cell(std::size_t k) const {
  if (!is_grid()) throw Error(Errc::invalid_argument, "ring has no grid structure");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), k);
  const std::size_t base = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {base, static_cast<int>(k - offsets_[base]) + 1};
}

std::size_t Ring::base_offset(std::size_t base) const {
  if (!is_grid()) throw Error(Errc::invalid_argument, "ring has no grid structure");
  return offsets_.at(base);
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal minimalize(const Ring& ring, std::vector<ExponentVector> raw) {
  return MonomialIdeal(ring, std::move(raw));
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<ExponentVector> raw) : ring_(std::move(ring)) {
  for (const auto& g : raw) {
    if (g.size() != ring_.size())
      throw Error(Errc::invalid_argument, "generator length does not match ring");
    if (!is_nonnegative(g))
      throw Error(Errc::invalid_argument, "negative exponent in generator " + to_string(g));
    if (slidepol::is_zero(g)) throw Error(Errc::unit_ideal, "generator 1 makes the ideal the whole ring");
  }
  std::sort(raw.begin(), raw.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (auto& g : raw) {
    bool divisible = false;
    for (const auto& h : gens_)
      if (preceq(h, g)) {
        divisible = true;
        break;
      }
    if (!divisible) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::zero(Ring ring) { return MonomialIdeal(std::move(ring), {}); }


bool contains(const MonomialIdeal& ideal, const ExponentVector& c) {
  for (const auto& g : ideal.gens())
    if (preceq(g, c)) return true;
  return false;
}

std::optional<MonomialIdeal> colon_monomial(const MonomialIdeal& ideal, const ExponentVector& c) {
  if (!is_nonnegative(c)) throw Error(Errc::invalid_argument, "colon by a non-monomial degree");
  if (contains(ideal, c)) return std::nullopt;
  std::vector<ExponentVector> raw;
  raw.reserve(ideal.size());
  for (const auto& g : ideal.gens()) raw.push_back(positive_part(g - c));
  return MonomialIdeal(ideal.ring(), std::move(raw));
}

ExponentVector lcm_join(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(Errc::zero_ideal, "lcm of the zero ideal is undefined");
  ExponentVector g(ideal.nvars());
  for (const auto& m : ideal.gens()) g = join(g, m);
  return g;
}

bool is_positively_determined(const MonomialIdeal& ideal, const ExponentVector& a) {
  if (a.size() != ideal.nvars())
    throw Error(Errc::invalid_argument, "determining vector length does not match ring");
  for (int v : a)
    if (v < 1) throw Error(Errc::invalid_argument, "determining vector must be >= 1 in every coordinate");
  for (const auto& g : ideal.gens())
    if (!preceq(g, a)) return false;
  return true;
}

void require_determined(const MonomialIdeal& ideal, const ExponentVector& a) {
  if (is_positively_determined(ideal, a)) return;
  for (const auto& g : ideal.gens())
    if (!preceq(g, a))
      throw Error(Errc::not_determined,
                  "generator " + to_string(g) + " does not divide x^" + to_string(a));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> raw;
  raw.reserve(ideal.size());
  for (const auto& g : ideal.gens()) {
    ExponentVector s = g;
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = s[k] > 0 ? 1 : 0;
    raw.push_back(std::move(s));
  }
  return MonomialIdeal(ideal.ring(), std::move(raw));
}

bool is_squarefree(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.gens())
    if (!is_squarefree(g)) return false;
  return true;
}

bool is_monomial_prime(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.gens())
    if (total_degree(g) != 1) return false;
  return true;
}

std::uint64_t box_size(const ExponentVector& upper) {
  std::uint64_t total = 1;
  for (int v : upper) {
    const std::uint64_t side = v < 0 ? 0 : static_cast<std::uint64_t>(v) + 1;
    if (side == 0) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / side)
      return std::numeric_limits<std::uint64_t>::max();
    total *= side;
  }
  return total;
}

void require_box(const ExponentVector& upper, const Limits& limits) {
  const auto size = box_size(upper);
  if (size > limits.box)
    throw Error(Errc::cap_exceeded, "box " + to_string(upper) + " has " + std::to_string(size) +
                                        " points, cap is " + std::to_string(limits.box));
}

}  // namespace slidepol
