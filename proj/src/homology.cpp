#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "slidepol/homalg.hpp"

namespace slidepol {

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::void_complex(std::size_t vertex_count) {
  if (vertex_count > 32) throw Error(Errc::cap_exceeded, "complexes are limited to 32 vertices");
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  return k;
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count, std::vector<Face> faces) {
  SimplicialComplex k = void_complex(vertex_count);
  const Face universe = vertex_count == 32 ? ~Face{0} : ((Face{1} << vertex_count) - 1);
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (Face f : faces) {
    if (f & ~universe) throw Error(Errc::invalid_argument, "face uses a vertex outside the complex");
    bool covered = false;
    for (Face g : k.facets_)
      if ((f & g) == f) {
        covered = true;
        break;
      }
    if (!covered) k.facets_.push_back(f);
  }
  std::sort(k.facets_.begin(), k.facets_.end());
  return k;
}

bool SimplicialComplex::contains(Face face) const {
  for (Face g : facets_)
    if ((face & g) == face) return true;
  return false;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (Face g : facets_) d = std::max(d, std::popcount(g) - 1);
  return d;
}

std::vector<std::vector<SimplicialComplex::Face>> SimplicialComplex::faces_by_dimension() const {
  std::vector<std::vector<Face>> out;
  if (is_void()) return out;
  out.resize(static_cast<std::size_t>(dimension()) + 2);
  std::unordered_set<Face> seen;
  for (Face g : facets_) {
    // enumerate all submasks of g, including 0
    Face s = g;
    while (true) {
      if (seen.insert(s).second) out[static_cast<std::size_t>(std::popcount(s))].push_back(s);
      if (s == 0) break;
      s = (s - 1) & g;
    }
  }
  for (auto& layer : out) std::sort(layer.begin(), layer.end());
  return out;
}

// ---------------------------------------------------------------------------
// Exact rank

namespace {

struct Overflow {};

template <class T>
using Row = std::vector<std::pair<std::size_t, T>>;

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long long gcd_of(long long a, long long b) { return std::gcd(a, b); }
mpz_class gcd_of(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

long long mul(long long a, long long b) { return checked_mul(a, b); }
long long sub(long long a, long long b) { return checked_sub(a, b); }
mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }

bool is_zero_value(long long v) { return v == 0; }
bool is_zero_value(const mpz_class& v) { return v == 0; }

// Divide out the content so entries stay small.
template <class T>
void make_primitive(Row<T>& row) {
  T g = 0;
  for (auto& [c, v] : row) {
    g = gcd_of(g, v);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& [c, v] : row) v /= g;
}

// row := (p0/g) * row - (r0/g) * pivot, eliminating the shared leading column.
template <class T>
Row<T> eliminate(const Row<T>& row, const Row<T>& pivot) {
  const T p0 = pivot.front().second;
  const T r0 = row.front().second;
  const T g = gcd_of(p0, r0);
  const T scale_row = p0 / g;
  const T scale_pivot = r0 / g;
  Row<T> out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 1, b = 1;
  while (a < row.size() || b < pivot.size()) {
    if (b >= pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.emplace_back(row[a].first, mul(scale_row, row[a].second));
      ++a;
    } else if (a >= row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, sub(T(0), mul(scale_pivot, pivot[b].second)));
      ++b;
    } else {
      T v = sub(mul(scale_row, row[a].second), mul(scale_pivot, pivot[b].second));
      if (!is_zero_value(v)) out.emplace_back(row[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

template <class T>
std::size_t rank_over_rationals(const std::vector<SparseRow>& input) {
  std::unordered_map<std::size_t, Row<T>> pivots;
  for (const auto& src : input) {
    Row<T> row;
    row.reserve(src.size());
    for (const auto& [c, v] : src)
      if (v != 0) row.emplace_back(c, T(static_cast<long>(v)));
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        make_primitive(row);
        const std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = eliminate(row, it->second);
      make_primitive(row);
    }
  }
  return pivots.size();
}

long long mod_inverse(long long a, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return t < 0 ? t + p : t;
}

std::size_t rank_mod_p(const std::vector<SparseRow>& input, long long p) {
  std::unordered_map<std::size_t, Row<long long>> pivots;
  for (const auto& src : input) {
    Row<long long> row;
    for (const auto& [c, v] : src) {
      const long long m = ((v % p) + p) % p;
      if (m != 0) row.emplace_back(c, m);
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const long long inv = mod_inverse(row.front().second, p);
        for (auto& [c, v] : row) v = v * inv % p;
        const std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const auto& pivot = it->second;  // leading entry 1
      const long long f = row.front().second;
      Row<long long> out;
      std::size_t a = 1, b = 1;
      while (a < row.size() || b < pivot.size()) {
        if (b >= pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
          out.push_back(row[a++]);
        } else if (a >= row.size() || pivot[b].first < row[a].first) {
          out.emplace_back(pivot[b].first, (p - f * pivot[b].second % p) % p);
          ++b;
        } else {
          const long long v = ((row[a].second - f * pivot[b].second) % p + p) % p;
          if (v != 0) out.emplace_back(row[a].first, v);
          ++a;
          ++b;
        }
      }
      row = std::move(out);
    }
  }
  return pivots.size();
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::size_t matrix_rank(std::vector<SparseRow> rows, int characteristic) {
  if (characteristic != 0) {
    if (!is_prime(characteristic))
      throw Error(Errc::invalid_argument, "field characteristic must be 0 or a prime");
    return rank_mod_p(rows, characteristic);
  }
  try {
    return rank_over_rationals<long long>(rows);
  } catch (const Overflow&) {
    return rank_over_rationals<mpz_class>(rows);
  }
}

// ---------------------------------------------------------------------------
// Reduced homology

namespace {

using Face = SimplicialComplex::Face;

// Homology from explicit face layers: layers[d + 1] = d-faces.
std::vector<int> homology_of_layers(const std::vector<std::vector<Face>>& layers, int characteristic) {
  const std::size_t top = layers.size();  // dimensions -1 .. top-2
  std::vector<std::size_t> ranks(top + 1, 0);  // ranks[d+1] = rank of boundary from d-faces
  for (std::size_t layer = 1; layer < top; ++layer) {
    std::unordered_map<Face, std::size_t> index;
    const auto& lower = layers[layer - 1];
    index.reserve(lower.size());
    for (std::size_t k = 0; k < lower.size(); ++k) index.emplace(lower[k], k);
    std::vector<SparseRow> rows;
    rows.reserve(layers[layer].size());
    for (Face f : layers[layer]) {
      SparseRow row;
      int position = 0;
      for (Face rest = f; rest; rest &= rest - 1) {
        const Face v = rest & (~rest + 1);
        row.emplace_back(index.at(f & ~v), (position % 2 == 0) ? 1 : -1);
        ++position;
      }
      rows.push_back(std::move(row));
    }
    ranks[layer] = matrix_rank(std::move(rows), characteristic);
  }
  std::vector<int> h(top, 0);
  for (std::size_t layer = 0; layer < top; ++layer) {
    const std::size_t boundary_out = ranks[layer];
    const std::size_t boundary_in = layer + 1 < top ? ranks[layer + 1] : 0;
    h[layer] = static_cast<int>(layers[layer].size() - boundary_out - boundary_in);
  }
  return h;
}

// Nerve of the facet cover: faces are facet subsets with a common vertex.
std::vector<std::vector<Face>> nerve_layers(const std::vector<Face>& facets) {
  std::vector<std::vector<Face>> layers(1, std::vector<Face>{0});
  const std::size_t m = facets.size();
  struct Frame {
    Face chosen;
    Face meet;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (std::size_t k = 0; k < m; ++k) stack.push_back({Face{1} << k, facets[k], k + 1});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const std::size_t size = static_cast<std::size_t>(std::popcount(f.chosen));
    if (layers.size() <= size) layers.resize(size + 1);
    layers[size].push_back(f.chosen);
    for (std::size_t k = f.next; k < m; ++k) {
      const Face meet = f.meet & facets[k];
      if (meet) stack.push_back({f.chosen | (Face{1} << k), meet, k + 1});
    }
  }
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());
  return layers;
}

}  // namespace

std::vector<int> reduced_homology_direct(const SimplicialComplex& complex, int characteristic) {
  if (complex.is_void()) return {};
  return homology_of_layers(complex.faces_by_dimension(), characteristic);
}

std::vector<int> reduced_homology(const SimplicialComplex& complex, int characteristic,
                                  const Limits& limits) {
  if (complex.is_void()) return {};
  Face used = 0;
  for (Face g : complex.facets()) used |= g;
  if (static_cast<std::size_t>(std::popcount(used)) > limits.vertices)
    throw Error(Errc::cap_exceeded, "complex has " + std::to_string(std::popcount(used)) +
                                        " vertices, cap is " + std::to_string(limits.vertices));
  const int dim = complex.dimension();
  std::vector<int> h(static_cast<std::size_t>(dim) + 2, 0);
  const auto& facets = complex.facets();
  if (dim == -1) {
    h[0] = 1;
    return h;
  }
  Face meet = ~Face{0};
  for (Face g : facets) meet &= g;
  if (meet) return h;  // a cone is acyclic

  // The nerve of the facets has the same homology; use whichever is smaller.
  double direct_estimate = 0;
  for (Face g : facets) direct_estimate += static_cast<double>(std::uint64_t{1} << std::popcount(g));
  const double nerve_estimate = facets.size() < 63 ? static_cast<double>(std::uint64_t{1} << facets.size()) : 1e300;
  if (facets.size() <= 32 && nerve_estimate < direct_estimate) {
    const auto nerve = homology_of_layers(nerve_layers(facets), characteristic);
    for (std::size_t k = 0; k < nerve.size() && k < h.size(); ++k) h[k] = nerve[k];
    return h;
  }
  return homology_of_layers(complex.faces_by_dimension(), characteristic);
}

}  // namespace slidepol
