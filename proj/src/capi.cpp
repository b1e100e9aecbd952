#include "slidepol/slidepol.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "json.hpp"
#include "slidepol/bier.hpp"
#include "slidepol/duality.hpp"
#include "slidepol/harness.hpp"
#include "slidepol/io.hpp"

struct sp_ideal {
  slidepol::IdealDocument doc;
};

namespace {

using namespace slidepol;

thread_local std::string last_error;

sp_status status_of(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return SP_ERR_INVALID_ARGUMENT;
    case Errc::parse: return SP_ERR_PARSE;
    case Errc::unit_ideal: return SP_ERR_UNIT_IDEAL;
    case Errc::zero_ideal: return SP_ERR_ZERO_IDEAL;
    case Errc::not_determined: return SP_ERR_NOT_DETERMINED;
    case Errc::precondition: return SP_ERR_PRECONDITION;
    case Errc::cap_exceeded: return SP_ERR_CAP_EXCEEDED;
  }
  return SP_ERR_INTERNAL;
}

template <class Fn>
sp_status guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return SP_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SP_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(Errc::invalid_argument, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  require(out, "output pointer");
  *out = dup_string(s);
}

void emit(sp_ideal** out, MonomialIdeal ideal, std::optional<ExponentVector> a = std::nullopt) {
  require(out, "output pointer");
  *out = new sp_ideal{{std::move(ideal), std::move(a)}};
}

Limits limits_of(const sp_limits* l) {
  Limits out;
  if (!l) return out;
  out.box = l->box;
  out.poset = l->poset;
  out.lcm_lattice = l->lcm_lattice;
  out.vertices = l->vertices;
  out.linquot_gens = l->linquot_gens;
  return out;
}

const IdealDocument& doc_of(const sp_ideal* h) {
  require(h, "ideal handle");
  return h->doc;
}

ExponentVector a_of(const sp_ideal* h) {
  const auto& doc = doc_of(h);
  if (doc.a) return *doc.a;
  if (doc.ideal.is_zero()) throw Error(Errc::zero_ideal, "no determining vector for the zero ideal");
  return join(lcm_join(doc.ideal), ones(doc.ideal.nvars()));
}

std::size_t axis_of(const sp_ideal* h, std::size_t i) {
  if (i < 1 || i > doc_of(h).ideal.nvars())
    throw Error(Errc::invalid_argument, "axis " + std::to_string(i) + " out of range");
  return i - 1;
}

ModuleDesc module_of(const sp_ideal* h, sp_module_shape shape) {
  return {shape == SP_MODULE_IDEAL ? ModuleShape::ideal : ModuleShape::quotient, doc_of(h).ideal};
}

}  // namespace

extern "C" {

const char* sp_version(void) { return kVersion; }

const char* sp_last_error(void) { return last_error.c_str(); }

const char* sp_status_name(sp_status status) {
  switch (status) {
    case SP_OK: return "ok";
    case SP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SP_ERR_PARSE: return "parse error";
    case SP_ERR_UNIT_IDEAL: return "unit ideal";
    case SP_ERR_ZERO_IDEAL: return "zero ideal";
    case SP_ERR_NOT_DETERMINED: return "not determined";
    case SP_ERR_PRECONDITION: return "precondition violated";
    case SP_ERR_CAP_EXCEEDED: return "cap exceeded";
    case SP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sp_limits_default(sp_limits* out) {
  if (!out) return;
  const Limits d;
  out->box = d.box;
  out->poset = d.poset;
  out->lcm_lattice = d.lcm_lattice;
  out->vertices = static_cast<uint32_t>(d.vertices);
  out->linquot_gens = static_cast<uint32_t>(d.linquot_gens);
}

void sp_string_free(char* s) { std::free(s); }

sp_status sp_ideal_parse(const char* vars_csv, const char* gens, sp_ideal** out) {
  return guard([&] {
    require(vars_csv, "variable list");
    require(gens, "generator text");
    const Ring ring = parse_vars(vars_csv);
    emit(out, parse_ideal(ring, gens));
  });
}

sp_status sp_ideal_from_json(const char* json, sp_ideal** out) {
  return guard([&] {
    require(json, "JSON text");
    auto doc = parse_document(json);
    emit(out, std::move(doc.ideal), std::move(doc.a));
  });
}

sp_status sp_ideal_to_json(const sp_ideal* ideal, char** out) {
  return guard([&] { emit(out, render_document(doc_of(ideal))); });
}

sp_status sp_ideal_render(const sp_ideal* ideal, char** out) {
  return guard([&] { emit(out, render_ideal(doc_of(ideal).ideal)); });
}

sp_status sp_ideal_clone(const sp_ideal* ideal, sp_ideal** out) {
  return guard([&] { emit(out, doc_of(ideal).ideal, doc_of(ideal).a); });
}

void sp_ideal_free(sp_ideal* ideal) { delete ideal; }

sp_status sp_ideal_set_a(sp_ideal* ideal, const int* a, size_t len) {
  return guard([&] {
    require(ideal, "ideal handle");
    if (len == 0) {
      ideal->doc.a.reset();
      return;
    }
    require(a, "determining vector");
    if (len != ideal->doc.ideal.nvars())
      throw Error(Errc::invalid_argument, "determining vector has the wrong length");
    ExponentVector v(std::vector<int>(a, a + len));
    require_determined(ideal->doc.ideal, v);
    ideal->doc.a = std::move(v);
  });
}

size_t sp_ideal_nvars(const sp_ideal* ideal) { return ideal ? ideal->doc.ideal.nvars() : 0; }

size_t sp_ideal_ngens(const sp_ideal* ideal) { return ideal ? ideal->doc.ideal.size() : 0; }

int sp_ideal_exponent(const sp_ideal* ideal, size_t gen, size_t var) {
  if (!ideal || gen < 1 || gen > ideal->doc.ideal.size() || var < 1 || var > ideal->doc.ideal.nvars())
    return -1;
  return ideal->doc.ideal.gens()[gen - 1][var - 1];
}

int sp_ideal_equal(const sp_ideal* lhs, const sp_ideal* rhs) {
  if (!lhs || !rhs) return 0;
  return lhs->doc.ideal == rhs->doc.ideal ? 1 : 0;
}

sp_status sp_slide(const sp_ideal* ideal, size_t i, int j, sp_ideal** out) {
  return guard([&] { emit(out, slide_ideal(doc_of(ideal).ideal, axis_of(ideal, i), j)); });
}

sp_status sp_contract(const sp_ideal* ideal, size_t i, int j, sp_ideal** out) {
  return guard([&] { emit(out, contract_ideal(doc_of(ideal).ideal, axis_of(ideal, i), j)); });
}

sp_status sp_compress(const sp_ideal* ideal, sp_ideal** core, char** script_json) {
  return guard([&] {
    require(core, "output pointer");
    require(script_json, "output pointer");
    auto c = compress(doc_of(ideal).ideal);
    nlohmann::json script = nlohmann::json::array();
    for (const auto& op : c.script) script.push_back({{"i", op.axis + 1}, {"j", op.threshold}});
    char* text = dup_string(script.dump());
    *core = new sp_ideal{{std::move(c.core), std::nullopt}};
    *script_json = text;
  });
}

sp_status sp_polarize(const sp_ideal* ideal, int reversed, sp_ideal** out) {
  return guard([&] {
    const ExponentVector a = a_of(ideal);
    const auto& I = doc_of(ideal).ideal;
    emit(out, reversed ? copolarize(I, a) : polarize(I, a));
  });
}

sp_status sp_depolarize(const sp_ideal* ideal, sp_ideal** out) {
  return guard([&] { emit(out, depolarize(doc_of(ideal).ideal)); });
}

sp_status sp_inflate(const sp_ideal* ideal, const char* var, sp_ideal** out) {
  return guard([&] {
    require(var, "variable name");
    const auto& I = doc_of(ideal).ideal;
    auto idx = I.ring().index_of(var);
    if (!idx) throw Error(Errc::invalid_argument, std::string("unknown variable '") + var + "'");
    emit(out, inflate(I, *idx));
  });
}

sp_status sp_dual(const sp_ideal* ideal, const sp_limits* limits, sp_ideal** out) {
  return guard([&] {
    const ExponentVector a = a_of(ideal);
    emit(out, alexander_dual(doc_of(ideal).ideal, a, limits_of(limits)), a);
  });
}

sp_status sp_bier_murai(const sp_ideal* ideal, const sp_limits* limits, sp_ideal** out) {
  return guard([&] { emit(out, bier_murai_ideal(doc_of(ideal).ideal, a_of(ideal), limits_of(limits))); });
}

sp_status sp_betti_json(const sp_ideal* ideal, sp_module_shape shape, int characteristic,
                        const sp_limits* limits, char** out) {
  return guard([&] {
    emit(out, to_json(multigraded_betti(module_of(ideal, shape), characteristic, limits_of(limits))));
  });
}

sp_status sp_depth_json(const sp_ideal* ideal, sp_module_shape shape, int characteristic,
                        const sp_limits* limits, char** out) {
  return guard([&] { emit(out, to_json(depth_dim(module_of(ideal, shape), characteristic, limits_of(limits)))); });
}

sp_status sp_ass_json(const sp_ideal* ideal, const sp_limits* limits, char** out) {
  return guard([&] {
    const auto& I = doc_of(ideal).ideal;
    emit(out, to_json(I.ring(), associated_primes(I, limits_of(limits))));
  });
}

sp_status sp_pairs_json(const sp_ideal* ideal, const sp_limits* limits, char** out) {
  return guard([&] {
    const auto& I = doc_of(ideal).ideal;
    emit(out, to_json(I.ring(), standard_pairs(I, limits_of(limits))));
  });
}

sp_status sp_props_json(const sp_ideal* ideal, int characteristic, const sp_limits* limits, char** out) {
  return guard([&] { emit(out, to_json(ring_properties(doc_of(ideal).ideal, characteristic, limits_of(limits)))); });
}

sp_status sp_linquot_json(const sp_ideal* ideal, const sp_limits* limits, char** out) {
  return guard([&] {
    const auto& I = doc_of(ideal).ideal;
    emit(out, to_json(I, has_linear_quotients(I, limits_of(limits))));
  });
}

sp_status sp_sdepth_json(const sp_ideal* ideal, sp_module_shape shape, const sp_limits* limits, char** out) {
  return guard([&] { emit(out, to_json(sdepth_exact(module_of(ideal, shape), limits_of(limits)))); });
}

sp_status sp_validate_decomposition_json(const char* decomposition_json, const sp_limits* limits, char** out) {
  return guard([&] {
    require(decomposition_json, "decomposition JSON");
    emit(out, to_json(validate_decomposition(parse_decomposition(decomposition_json), limits_of(limits))));
  });
}

sp_status sp_certify_json(const sp_ideal* squarefree, int expected_dim, const sp_limits* limits, char** out,
                          int* pass) {
  return guard([&] {
    const Limits lim = limits_of(limits);
    const auto cert = sphere_certificate(stanley_reisner_complex(doc_of(squarefree).ideal, lim), expected_dim, lim);
    emit(out, to_json(cert));
    if (pass) *pass = cert.pass ? 1 : 0;
  });
}

sp_status sp_bm_certify_json(const sp_ideal* ideal, const sp_limits* limits, char** out, int* pass) {
  return guard([&] {
    const Limits lim = limits_of(limits);
    const ExponentVector a = a_of(ideal);
    const MonomialIdeal bm = bier_murai_ideal(doc_of(ideal).ideal, a, lim);
    const auto cert = sphere_certificate(stanley_reisner_complex(bm, lim), total_degree(a) - 2, lim);
    nlohmann::ordered_json j;
    j["bier_murai"] = nlohmann::ordered_json::parse(render_document({bm, std::nullopt}));
    j["certificate"] = nlohmann::ordered_json::parse(to_json(cert));
    emit(out, j.dump());
    if (pass) *pass = cert.pass ? 1 : 0;
  });
}

sp_status sp_prop53_json(const sp_ideal* ideal, size_t i, int j, const sp_limits* limits, char** out,
                         int* success) {
  return guard([&] {
    const auto report = verify_prop53(doc_of(ideal).ideal, a_of(ideal), axis_of(ideal, i), j, limits_of(limits));
    emit(out, to_json(report));
    if (success) *success = report.success ? 1 : 0;
  });
}

sp_status sp_suite_names(char** out) {
  return guard([&] { emit(out, nlohmann::json(suite_names()).dump()); });
}

sp_status sp_verify(const char* config_json, char** report_json, size_t* violations, int* cap_fatal) {
  return guard([&] {
    require(config_json, "configuration JSON");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::parse, std::string("malformed configuration: ") + e.what());
    }
    if (!j.is_object() || !j.contains("suite") || !j["suite"].is_string())
      throw Error(Errc::invalid_argument, "configuration needs a \"suite\" string");
    HarnessConfig cfg;
    try {
      cfg.suite = j["suite"].get<std::string>();
      cfg.trials = j.value("trials", cfg.trials);
      cfg.seed = j.value("seed", cfg.seed);
      cfg.n = j.value("n", cfg.n);
      cfg.max_exponent = j.value("max_exponent", cfg.max_exponent);
      cfg.max_gens = j.value("max_gens", cfg.max_gens);
      cfg.characteristic = j.value("characteristic", cfg.characteristic);
      cfg.workers = j.value("workers", cfg.workers);
      cfg.max_skip_ratio = j.value("max_skip_ratio", cfg.max_skip_ratio);
      if (j.contains("caps")) {
        const auto& c = j["caps"];
        cfg.limits.box = c.value("box", cfg.limits.box);
        cfg.limits.poset = c.value("poset", cfg.limits.poset);
        cfg.limits.lcm_lattice = c.value("lcm_lattice", cfg.limits.lcm_lattice);
        cfg.limits.vertices = c.value("vertices", cfg.limits.vertices);
        cfg.limits.linquot_gens = c.value("linquot_gens", cfg.limits.linquot_gens);
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::invalid_argument, std::string("bad configuration value: ") + e.what());
    }
    const auto report = verify_suite(cfg);
    emit(report_json, to_json(report));
    if (violations) *violations = report.violations.size();
    if (cap_fatal) *cap_fatal = report.cap_fatal ? 1 : 0;
  });
}

}  // extern "C"
