#include "slidepol/harness.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "json.hpp"
#include "slidepol/bier.hpp"
#include "slidepol/duality.hpp"

namespace slidepol {

using Json = nlohmann::ordered_json;

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL))) {}

int TrialRng::uniform(int lo, int hi) {
  if (hi < lo) throw Error(Errc::invalid_argument, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

namespace {

RandomInstance draw_instance(const HarnessConfig& cfg, TrialRng& rng) {
  if (cfg.n < 1 || cfg.max_gens < 1 || cfg.max_exponent < 1)
    throw Error(Errc::invalid_argument, "harness sizes must be positive");
  while (true) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(cfg.n)));
    const int count = rng.uniform(1, static_cast<int>(cfg.max_gens));
    std::vector<ExponentVector> raw;
    bool unit = false;
    for (int g = 0; g < count; ++g) {
      ExponentVector e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = rng.uniform(0, cfg.max_exponent);
      if (is_zero(e)) unit = true;
      raw.push_back(std::move(e));
    }
    if (unit) continue;
    RandomInstance inst;
    inst.ideal = MonomialIdeal(Ring::standard(n), std::move(raw));
    inst.a = join(lcm_join(inst.ideal), ones(n));
    inst.axis = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
    inst.threshold = rng.uniform(1, inst.a[inst.axis] + 1);
    return inst;
  }
}

struct Outcome {
  std::vector<std::pair<std::string, std::string>> violations;
  std::vector<std::pair<std::string, std::string>> findings;

  void check(bool ok, const std::string& property, const std::string& detail = {}) {
    if (!ok) violations.emplace_back(property, detail);
  }
};

struct Context {
  const HarnessConfig& cfg;
  RandomInstance inst;
  TrialRng& rng;
  Outcome& out;
  IdealDocument* reported;  // the instance document recorded with violations
};

using Suite = std::function<void(Context&)>;

std::string ideal_text(const MonomialIdeal& ideal) { return "(" + render_ideal(ideal) + ")"; }

ModuleDesc quotient_of(const MonomialIdeal& ideal) { return {ModuleShape::quotient, ideal}; }

// a v 1 plus a random 0/1 slack per coordinate.
ExponentVector slack_vector(const RandomInstance& inst, TrialRng& rng) {
  ExponentVector a = inst.a;
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += rng.uniform(0, 1);
  return a;
}

// ---------------------------------------------------------------------------
// Fixtures

void suite_example55(Context& c) {
  const Ring r = Ring::standard(4);
  const MonomialIdeal ideal = parse_ideal(r, "x*y*z, x*w, y*w");
  const ExponentVector one = ones(4);
  const ExponentVector one_e1{2, 1, 1, 1};
  const MonomialIdeal dual = parse_ideal(r, "x*y, x*w, y*w, z*w");
  c.out.check(alexander_dual(ideal, one) == dual, "dual of I w.r.t. 1");

  const MonomialIdeal slid = slide_ideal(ideal, 0, 1);
  c.out.check(slid == parse_ideal(r, "x^2*y*z, x^2*w, y*w"), "I' = I slid at (1,1)", ideal_text(slid));
  c.out.check(alexander_dual(slid, one_e1) == dual, "dual of I' w.r.t. 1+e1");

  const MonomialIdeal bm = bier_murai_ideal(ideal, one, c.cfg.limits);
  const Ring g2 = Ring::grid(r.names(), {2, 2, 2, 2});
  c.out.check(bm == parse_ideal(g2,
                                "x[1]*y[1]*z[1], x[1]*w[1], y[1]*w[1], x[2]*y[2], x[2]*w[2], y[2]*w[2], "
                                "z[2]*w[2], x[1]*x[2], y[1]*y[2], z[1]*z[2], w[1]*w[2]"),
              "BM_1(I) generator list", ideal_text(bm));

  const Ring g3 = Ring::grid(r.names(), {3, 2, 2, 2});
  const MonomialIdeal bm_slid = bier_murai_ideal(slid, one_e1, c.cfg.limits);
  c.out.check(bm_slid == parse_ideal(g3,
                                     "x[1]*x[2]*y[1]*z[1], x[1]*x[2]*w[1], y[1]*w[1], x[3]*y[2], x[3]*w[2], "
                                     "y[2]*w[2], z[2]*w[2], x[1]*x[2]*x[3], y[1]*y[2], z[1]*z[2], w[1]*w[2]"),
              "BM_{1+e1}(I') generator list", ideal_text(bm_slid));
  const auto first = verify_prop53(ideal, one, 0, 1, c.cfg.limits);
  c.out.check(first.success, "BM_{1+e1}(I') equals Infl_(1,1)(BM_1(I))");

  c.out.check(alexander_dual(ideal, one_e1) == parse_ideal(r, "x^2*y, x^2*w, y*w, z*w"),
              "dual of I w.r.t. 1+e1");
  const MonomialIdeal bm_same = bier_murai_ideal(slide_ideal(ideal, 0, 2), one_e1, c.cfg.limits);
  c.out.check(bm_same == parse_ideal(g3,
                                     "x[1]*y[1]*z[1], x[1]*w[1], y[1]*w[1], x[2]*x[3]*y[2], x[2]*x[3]*w[2], "
                                     "y[2]*w[2], z[2]*w[2], x[1]*x[2]*x[3], y[1]*y[2], z[1]*z[2], w[1]*w[2]"),
              "BM_{1+e1}(Infl_(1,2)(I)) generator list", ideal_text(bm_same));
  const auto second = verify_prop53(ideal, one, 0, 2, c.cfg.limits);
  c.out.check(second.success, "BM_{1+e1}(I) equals Infl_(1,2)(BM_1(I))");

  c.out.check(reverse_slots(bm) == bier_murai_ideal(dual, one, c.cfg.limits),
              "slot reversal maps BM_1(I) to BM_1(dual)");
}

void suite_rem47(Context& c) {
  const Ring r = Ring::standard(3);
  const MonomialIdeal ideal = parse_ideal(r, "x^2*y, x^2*z, x*y*z, x*z^2, y^3, y^2*z, y*z^2");
  const ExponentVector a{2, 3, 3};
  const Ring grid = Ring::grid(r.names(), a.coords());
  const MonomialIdeal j = parse_ideal(grid,
                                      "x[1]*x[2]*y[3], x[1]*x[2]*z[3], x[1]*y[2]*z[3], x[1]*z[2]*z[3], "
                                      "y[1]*y[2]*y[3], y[1]*y[2]*z[3], y[1]*z[2]*z[3]");
  c.out.check(is_generalized_polarization(ideal, j, a, c.cfg.limits), "J is a generalized polarization");
  const MonomialIdeal standard = polarize(ideal, a);
  c.out.check(is_generalized_polarization(ideal, standard, a, c.cfg.limits),
              "standard polarization is a generalized polarization");
  c.out.check(standard != j, "standard polarization differs from J");
}

// ---------------------------------------------------------------------------
// Random suites

// beta_{l,b}(S/I) = beta_{l,tau(b)}(S/I'), depth, dim and Ass agree.
void suite_prop22(Context& c) {
  const auto& [ideal, a, axis, j] = c.inst;
  const MonomialIdeal slid = slide_ideal(ideal, axis, j);
  const auto t = multigraded_betti(quotient_of(ideal), c.cfg.characteristic, c.cfg.limits);
  const auto ts = multigraded_betti(quotient_of(slid), c.cfg.characteristic, c.cfg.limits);
  std::map<BettiTable::Key, int> moved;
  for (const auto& [key, rank] : t.entries())
    moved[{key.first, point_map(PointMap::tau, key.second, axis, j)}] = rank;
  c.out.check(BettiTable(moved) == ts, "multigraded Betti numbers move by tau");
  const auto d = depth_dim(quotient_of(ideal), c.cfg.characteristic, c.cfg.limits);
  const auto ds = depth_dim(quotient_of(slid), c.cfg.characteristic, c.cfg.limits);
  c.out.check(d.depth == ds.depth, "depth invariant",
              std::to_string(d.depth) + " vs " + std::to_string(ds.depth));
  c.out.check(d.dim == ds.dim, "dim invariant", std::to_string(d.dim) + " vs " + std::to_string(ds.dim));
  c.out.check(associated_primes(ideal, c.cfg.limits) == associated_primes(slid, c.cfg.limits),
              "Ass invariant");
}

// Iterated (i,1)-slides add b_i to every positive i-exponent; point-map
// identities tau = rho(j-1) + e_i and sigma = lambda - e_i.
void suite_rem21(Context& c) {
  const MonomialIdeal& ideal = c.inst.ideal;
  const std::size_t n = ideal.nvars();
  ExponentVector b(n);
  for (std::size_t k = 0; k < n; ++k) b[k] = c.rng.uniform(0, 2);
  MonomialIdeal iterated = ideal;
  for (std::size_t k = 0; k < n; ++k)
    for (int t = 0; t < b[k]; ++t) iterated = slide_ideal(iterated, k, 1);
  std::vector<ExponentVector> raw;
  for (auto g : ideal.gens()) {
    for (std::size_t k = 0; k < n; ++k)
      if (g[k] > 0) g[k] += b[k];
    raw.push_back(g);
  }
  c.out.check(iterated == MonomialIdeal(ideal.ring(), raw), "iterated (i,1) slides equal the b-shift",
              to_string(b));
  MonomialIdeal reversed = ideal;
  for (std::size_t k = n; k-- > 0;)
    for (int t = 0; t < b[k]; ++t) reversed = slide_ideal(reversed, k, 1);
  c.out.check(reversed == iterated, "axis order of (i,1) slides is irrelevant");

  for (const auto& g : ideal.gens()) {
    for (int j = -3; j <= 3; ++j) {
      const std::size_t i = c.inst.axis;
      const auto e = unit_vector(n, i);
      c.out.check(point_map(PointMap::tau, g, i, j) == point_map(PointMap::rho, g, i, j - 1) + e,
                  "tau = rho(j-1) + e_i");
      c.out.check(point_map(PointMap::sigma, g, i, j) == point_map(PointMap::lambda, g, i, j) - e,
                  "sigma = lambda - e_i");
      c.out.check(point_map(PointMap::sigma, point_map(PointMap::tau, g, i, j), i, j) == g,
                  "sigma after tau is the identity");
    }
  }
}

void suite_cor23(Context& c) {
  const auto& inst = c.inst;
  const MonomialIdeal slid = slide_ideal(inst.ideal, inst.axis, inst.threshold);
  const auto p = ring_properties(inst.ideal, c.cfg.characteristic, c.cfg.limits);
  const auto ps = ring_properties(slid, c.cfg.characteristic, c.cfg.limits);
  c.out.check(p.cohen_macaulay == ps.cohen_macaulay, "Cohen-Macaulay flag invariant");
  c.out.check(p.gorenstein == ps.gorenstein, "Gorenstein flag invariant");
}

void suite_cor26(Context& c) {
  const auto& inst = c.inst;
  const MonomialIdeal slid = slide_ideal(inst.ideal, inst.axis, inst.threshold);
  const auto p = ring_properties(inst.ideal, c.cfg.characteristic, c.cfg.limits);
  const auto ps = ring_properties(slid, c.cfg.characteristic, c.cfg.limits);
  c.out.check(p.seq_cm == ps.seq_cm, "sequentially Cohen-Macaulay flag invariant");
}

void check_sdepth_transfer(Context& c, ModuleShape shape) {
  const auto& inst = c.inst;
  const std::string tag = shape == ModuleShape::ideal ? " (ideal)" : " (quotient)";
  const ModuleDesc m{shape, inst.ideal};
  const ModuleDesc ms{shape, slide_ideal(inst.ideal, inst.axis, inst.threshold)};
  const auto s = sdepth_exact(m, c.cfg.limits);
  const auto ss = sdepth_exact(ms, c.cfg.limits);
  c.out.check(s.sdepth == ss.sdepth, "sdepth invariant" + tag,
              std::to_string(s.sdepth) + " vs " + std::to_string(ss.sdepth));
  c.out.check(validate_decomposition(s.witness, c.cfg.limits).valid && s.witness.sdepth() == s.sdepth,
              "sdepth witness valid" + tag);

  const auto pushed = push_decomposition(s.witness, inst.axis, inst.threshold, c.cfg.limits);
  c.out.check(validate_decomposition(pushed, c.cfg.limits).valid, "pushed decomposition valid" + tag);
  c.out.check(pushed.sdepth() == s.sdepth, "pushed decomposition keeps sdepth" + tag);
  const auto pulled = pull_decomposition(ss.witness, inst.axis, inst.threshold, c.cfg.limits);
  c.out.check(validate_decomposition(pulled, c.cfg.limits).valid, "pulled decomposition valid" + tag);
  c.out.check(pulled.sdepth() == ss.sdepth, "pulled decomposition keeps sdepth" + tag);

  ExponentVector wider = inst.ideal.is_zero() ? ExponentVector(inst.ideal.nvars()) : lcm_join(inst.ideal);
  for (std::size_t k = 0; k < wider.size(); ++k) wider[k] += c.rng.uniform(0, 1);
  const auto sw = sdepth_exact(m, wider, c.cfg.limits);
  c.out.check(sw.sdepth == s.sdepth, "sdepth stable under a larger box" + tag,
              std::to_string(s.sdepth) + " vs " + std::to_string(sw.sdepth) + " at " + to_string(wider));
  c.out.check(validate_decomposition(sw.witness, c.cfg.limits).valid, "larger-box witness valid" + tag);

  const auto dd = depth_dim(m, c.cfg.characteristic, c.cfg.limits);
  if (s.sdepth < dd.depth)
    c.out.findings.emplace_back("sdepth >= depth" + tag,
                                "sdepth " + std::to_string(s.sdepth) + " < depth " + std::to_string(dd.depth));
}

void suite_thm32(Context& c) {
  check_sdepth_transfer(c, ModuleShape::ideal);
  check_sdepth_transfer(c, ModuleShape::quotient);
}

void suite_cor33(Context& c) {
  const auto comp = compress(c.inst.ideal);
  c.out.check(apply_script(comp.core, comp.script) == c.inst.ideal, "script rebuilds the ideal");
  c.out.check(has_consecutive_exponents(comp.core), "core has consecutive exponents",
              ideal_text(comp.core));
}

void suite_lemma42(Context& c) {
  const MonomialIdeal& ideal = c.inst.ideal;
  const ExponentVector a = slack_vector(c.inst, c.rng);
  c.reported->a = a;
  const int shift = total_degree(a) - static_cast<int>(a.size());
  const MonomialIdeal pol = polarize(ideal, a);
  const auto& lim = c.cfg.limits;
  const int ch = c.cfg.characteristic;

  c.out.check(depolarize(pol) == ideal, "depolarize inverts polarize");
  c.out.check(depolarize(copolarize(ideal, a)) == ideal, "depolarize inverts copolarize");
  c.out.check(reverse_slots(pol) == copolarize(ideal, a), "copolarize is polarize with reversed slots");

  const auto t = multigraded_betti(quotient_of(ideal), ch, lim);
  const auto tp = multigraded_betti(quotient_of(pol), ch, lim);
  c.out.check(t.coarse() == tp.coarse(), "graded Betti numbers agree");
  const auto d = depth_dim(quotient_of(ideal), ch, lim);
  const auto dp = depth_dim(quotient_of(pol), ch, lim);
  c.out.check(dp.depth == d.depth + shift, "depth rises by |a| - n");
  c.out.check(dp.dim == d.dim + shift, "dim rises by |a| - n");
  const auto sp = standard_pairs(ideal, lim);
  const auto spp = standard_pairs(pol, lim);
  c.out.check(sp.deg == spp.deg, "deg invariant", std::to_string(sp.deg) + " vs " + std::to_string(spp.deg));
  c.out.check(sp.adeg == spp.adeg, "adeg invariant",
              std::to_string(sp.adeg) + " vs " + std::to_string(spp.adeg));
  c.out.check(sp.dim == d.dim, "standard-pair dimension equals dim");
  c.out.check(ring_properties(ideal, ch, lim).seq_cm == ring_properties(pol, ch, lim).seq_cm,
              "sequentially Cohen-Macaulay flag invariant under polarization");
}

void suite_lemma51(Context& c) {
  const MonomialIdeal sq = radical(c.inst.ideal);
  const std::size_t v = c.inst.axis;
  const std::size_t n = sq.nvars();
  const auto& lim = c.cfg.limits;
  const int ch = c.cfg.characteristic;
  const MonomialIdeal infl = inflate(sq, v);
  const MonomialIdeal via_functors = polarize(slide_ideal(sq, v, 1), ones(n) + unit_vector(n, v));
  c.out.check(infl.gens() == via_functors.gens(), "inflation equals pol_{1+e_i} after the (i,1) slide");

  const auto t = multigraded_betti(quotient_of(sq), ch, lim);
  const auto ti = multigraded_betti(quotient_of(infl), ch, lim);
  c.out.check(t.totals() == ti.totals(), "Betti numbers preserved by inflation");
  const auto d = depth_dim(quotient_of(sq), ch, lim);
  const auto di = depth_dim(quotient_of(infl), ch, lim);
  c.out.check(di.depth == d.depth + 1, "depth rises by one");
  c.out.check(di.dim == d.dim + 1, "dim rises by one");
  c.out.check(ring_properties(sq, ch, lim).seq_cm == ring_properties(infl, ch, lim).seq_cm,
              "sequentially Cohen-Macaulay flag preserved by inflation");
}

void suite_lemma52(Context& c) {
  const ExponentVector a = slack_vector(c.inst, c.rng);
  c.reported->a = a;
  const std::size_t i = c.inst.axis;
  const int j = c.rng.uniform(1, a[i] + 1);
  c.inst.threshold = j;
  const auto report = dual_slide_correspondence(c.inst.ideal, a, i, j, c.cfg.limits);
  c.out.check(report.success, "tau pairs the minimal generators of the duals",
              ideal_text(report.source_dual) + " -> " + ideal_text(report.target_dual));
  const MonomialIdeal dual = alexander_dual(c.inst.ideal, a, c.cfg.limits);
  c.out.check(alexander_dual(dual, a, c.cfg.limits) == c.inst.ideal, "duality is an involution");
}

void suite_prop53(Context& c) {
  const ExponentVector a = slack_vector(c.inst, c.rng);
  c.reported->a = a;
  const std::size_t i = c.inst.axis;
  const int j = c.rng.uniform(1, a[i] + 1);
  c.inst.threshold = j;
  const auto& lim = c.cfg.limits;
  c.out.check(verify_prop53(c.inst.ideal, a, i, j, lim).success, "BM of the slide is the inflated BM");
  c.out.check(realize_by_inflation(c.inst.ideal, lim).success, "BM rebuilt from the compressed core");

  const MonomialIdeal bm = bier_murai_ideal(c.inst.ideal, a, lim);
  const MonomialIdeal dual = alexander_dual(c.inst.ideal, a, lim);
  const MonomialIdeal bm_dual = bier_murai_ideal(dual, a, lim);
  c.out.check(reverse_slots(bm) == bm_dual, "slot reversal maps BM_a(I) to BM_a(dual)");
  const MonomialIdeal lhs = reverse_slots(inflate(bm, bm.ring().cell_index(i, j)));
  const MonomialIdeal rhs = inflate(bm_dual, bm_dual.ring().cell_index(i, a[i] + 2 - j));
  c.out.check(lhs == rhs, "inflation commutes with slot reversal");
}

void suite_spheres(Context& c) {
  const auto& inst = c.inst;
  const int vertices = total_degree(inst.a) + static_cast<int>(inst.a.size());
  if (static_cast<std::size_t>(vertices) > c.cfg.limits.vertices)
    throw Error(Errc::cap_exceeded, "Bier-Murai complex has too many vertices");
  const MonomialIdeal bm = bier_murai_ideal(inst.ideal, inst.a, c.cfg.limits);
  const auto complex = stanley_reisner_complex(bm, c.cfg.limits);
  const int expected = total_degree(inst.a) - 2;
  const auto cert = sphere_certificate(complex, expected, c.cfg.limits);
  c.out.check(cert.pass, "sphere certificate", to_json(cert));
  c.out.check(complex.vertex_count() == static_cast<std::size_t>(vertices), "vertex count is |a| + n");
}

const std::map<std::string, std::pair<Suite, bool>>& suites() {
  // name -> (body, fixture)
  static const std::map<std::string, std::pair<Suite, bool>> table = {
      {"example55", {suite_example55, true}}, {"rem47", {suite_rem47, true}},
      {"prop22", {suite_prop22, false}},      {"rem21", {suite_rem21, false}},
      {"cor23", {suite_cor23, false}},        {"cor26", {suite_cor26, false}},
      {"thm32", {suite_thm32, false}},        {"cor33", {suite_cor33, false}},
      {"lemma42", {suite_lemma42, false}},    {"lemma51", {suite_lemma51, false}},
      {"lemma52", {suite_lemma52, false}},    {"prop53", {suite_prop53, false}},
      {"spheres", {suite_spheres, false}},
  };
  return table;
}

struct TrialResult {
  bool skipped = false;
  std::vector<Violation> violations;
  std::vector<Violation> findings;
};

TrialResult run_trial(const HarnessConfig& cfg, const Suite& suite, bool fixture, std::uint64_t trial) {
  TrialResult result;
  TrialRng rng(cfg.seed, trial);
  Outcome out;
  IdealDocument doc;
  RandomInstance inst;
  if (!fixture) {
    inst = draw_instance(cfg, rng);
    doc.ideal = inst.ideal;
    doc.a = inst.a;
  }
  Context ctx{cfg, inst, rng, out, &doc};
  try {
    suite(ctx);
  } catch (const Error& e) {
    if (e.code() == Errc::cap_exceeded) {
      result.skipped = true;
      return result;
    }
    out.violations.emplace_back("unexpected error", e.what());
  }
  auto convert = [&](const auto& list, std::vector<Violation>& dest) {
    for (const auto& [property, detail] : list)
      dest.push_back({trial, property, detail, doc, ctx.inst.axis, ctx.inst.threshold});
  };
  convert(out.violations, result.violations);
  convert(out.findings, result.findings);
  return result;
}

Json violation_json(const Violation& v) {
  Json j;
  j["trial"] = v.trial;
  j["property"] = v.property;
  if (!v.detail.empty()) j["detail"] = v.detail;
  j["instance"] = Json::parse(render_document(v.instance));
  j["i"] = v.axis + 1;
  j["j"] = v.threshold;
  return j;
}

}  // namespace

RandomInstance random_instance(const HarnessConfig& cfg, std::uint64_t trial) {
  TrialRng rng(cfg.seed, trial);
  return draw_instance(cfg, rng);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, body] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

HarnessReport verify_suite(const HarnessConfig& cfg) {
  auto it = suites().find(cfg.suite);
  if (it == suites().end()) throw Error(Errc::invalid_argument, "unknown suite '" + cfg.suite + "'");
  const auto& [suite, fixture] = it->second;
  HarnessReport report;
  report.config = cfg;
  const std::uint64_t trials = fixture ? 1 : cfg.trials;
  report.config.trials = trials;

  std::vector<TrialResult> results(trials);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t t = next++; t < trials; t = next++) results[t] = run_trial(cfg, suite, fixture, t);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(trials)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (auto& r : results) {
    if (r.skipped) {
      ++report.skipped;
      continue;
    }
    ++report.completed;
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
    for (auto& f : r.findings) report.findings.push_back(std::move(f));
  }
  report.cap_fatal = trials > 0 && static_cast<double>(report.skipped) > cfg.max_skip_ratio * static_cast<double>(trials);
  return report;
}

std::string to_json(const HarnessReport& report) {
  const auto& cfg = report.config;
  Json config;
  config["suite"] = cfg.suite;
  config["trials"] = cfg.trials;
  config["seed"] = cfg.seed;
  config["n"] = cfg.n;
  config["max_exponent"] = cfg.max_exponent;
  config["max_gens"] = cfg.max_gens;
  config["characteristic"] = cfg.characteristic;
  config["max_skip_ratio"] = cfg.max_skip_ratio;
  config["caps"] = {{"box", cfg.limits.box},
                    {"poset", cfg.limits.poset},
                    {"lcm_lattice", cfg.limits.lcm_lattice},
                    {"vertices", cfg.limits.vertices},
                    {"linquot_gens", cfg.limits.linquot_gens}};
  Json j;
  j["version"] = kVersion;
  j["config"] = std::move(config);
  j["completed"] = report.completed;
  j["skipped"] = report.skipped;
  j["cap_fatal"] = report.cap_fatal;
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(violation_json(v));
  j["violations"] = std::move(violations);
  Json findings = Json::array();
  for (const auto& f : report.findings) findings.push_back(violation_json(f));
  j["findings"] = std::move(findings);
  return j.dump(2);
}

}  // namespace slidepol
