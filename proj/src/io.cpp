#include "slidepol/io.hpp"

#include <cctype>
#include <climits>

#include "json.hpp"

namespace slidepol {

using Json = nlohmann::ordered_json;

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  int line() const { return line_; }
  int col() const { return col_; }
  ParseError error(const std::string& what) const { return ParseError(what, line_, col_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

int read_posint(Scanner& sc) {
  if (sc.eof() || !std::isdigit(static_cast<unsigned char>(sc.peek())))
    throw sc.error("expected a positive integer");
  const int line = sc.line(), col = sc.col();
  long long v = 0;
  while (!sc.eof() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    v = v * 10 + (sc.peek() - '0');
    if (v > INT_MAX / 2) throw sc.error("integer too large");
    sc.advance();
  }
  if (v < 1) throw ParseError("exponent must be positive", line, col);
  return static_cast<int>(v);
}

std::size_t read_variable(Scanner& sc, const Ring& ring) {
  const int line = sc.line(), col = sc.col();
  if (sc.eof() || !is_name_start(sc.peek())) throw sc.error("expected a variable");
  std::string name;
  while (!sc.eof() && is_name_char(sc.peek())) {
    name += sc.peek();
    sc.advance();
  }
  while (!sc.eof() && sc.peek() == '\'') {
    name += '\'';
    sc.advance();
  }
  if (!sc.eof() && sc.peek() == '[') {
    name += '[';
    sc.advance();
    name += std::to_string(read_posint(sc));
    if (sc.eof() || sc.peek() != ']') throw sc.error("expected ']'");
    name += ']';
    sc.advance();
  }
  auto idx = ring.index_of(name);
  if (!idx) throw ParseError("unknown variable '" + name + "'", line, col);
  return *idx;
}

// One generator; `1` yields the zero vector.
ExponentVector read_generator(Scanner& sc, const Ring& ring) {
  ExponentVector e(ring.size());
  sc.skip_ws();
  if (!sc.eof() && sc.peek() == '1') {
    sc.advance();
    return e;
  }
  while (true) {
    sc.skip_ws();
    const std::size_t v = read_variable(sc, ring);
    sc.skip_ws();
    int power = 1;
    if (!sc.eof() && sc.peek() == '^') {
      sc.advance();
      sc.skip_ws();
      power = read_posint(sc);
      sc.skip_ws();
    }
    if (e[v] > INT_MAX / 2 - power) throw sc.error("exponent too large");
    e[v] += power;
    if (sc.eof() || sc.peek() != '*') break;
    sc.advance();
  }
  return e;
}

std::vector<ExponentVector> read_generators(Scanner& sc, const Ring& ring) {
  std::vector<ExponentVector> gens;
  sc.skip_ws();
  if (sc.eof()) return gens;
  while (true) {
    gens.push_back(read_generator(sc, ring));
    sc.skip_ws();
    if (sc.eof()) break;
    if (sc.peek() != ',') throw sc.error(std::string("unexpected character '") + sc.peek() + "'");
    sc.advance();
  }
  return gens;
}

std::vector<std::string> ring_base_names(const Ring& ring) {
  return ring.is_grid() ? ring.base_names() : ring.names();
}

Ring ring_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::parse, "ideal document must be a JSON object");
  if (!j.contains("vars") || !j["vars"].is_array())
    throw Error(Errc::parse, "ideal document needs a \"vars\" array");
  std::vector<std::string> names;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw Error(Errc::parse, "\"vars\" entries must be strings");
    names.push_back(v.get<std::string>());
  }
  if (j.contains("grid")) {
    if (!j["grid"].is_array()) throw Error(Errc::parse, "\"grid\" must be an array");
    std::vector<int> slots;
    for (const auto& s : j["grid"]) {
      if (!s.is_number_integer()) throw Error(Errc::parse, "\"grid\" entries must be integers");
      slots.push_back(s.get<int>());
    }
    return Ring::grid(std::move(names), std::move(slots));
  }
  return Ring::plain(std::move(names));
}

ExponentVector vector_from_json(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    throw Error(Errc::parse, std::string(what) + " must be an integer array of length " + std::to_string(n));
  ExponentVector e(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!j[k].is_number_integer()) throw Error(Errc::parse, std::string(what) + " entries must be integers");
    e[k] = j[k].get<int>();
  }
  return e;
}

IdealDocument document_from_json(const Json& j) {
  Ring ring = ring_from_json(j);
  const std::size_t n = ring.size();
  std::vector<ExponentVector> raw;
  const char* source = j.contains("exps") ? "exps" : "gens";
  if (j.contains(source)) {
    if (!j[source].is_array()) throw Error(Errc::parse, std::string("\"") + source + "\" must be an array");
    for (const auto& g : j[source]) {
      if (g.is_string()) {
        Scanner sc(g.get_ref<const std::string&>());
        for (auto& e : read_generators(sc, ring)) raw.push_back(std::move(e));
      } else {
        auto e = vector_from_json(g, n, "generator");
        if (!is_nonnegative(e)) throw Error(Errc::parse, "generator exponents must be nonnegative");
        raw.push_back(std::move(e));
      }
    }
  }
  IdealDocument doc;
  doc.ideal = MonomialIdeal(std::move(ring), std::move(raw));
  if (j.contains("a")) {
    doc.a = vector_from_json(j["a"], n, "\"a\"");
    require_determined(doc.ideal, *doc.a);
  }
  return doc;
}

Json document_json(const IdealDocument& doc) {
  const Ring& ring = doc.ideal.ring();
  Json j;
  j["vars"] = ring_base_names(ring);
  if (ring.is_grid()) j["grid"] = ring.slots();
  Json gens = Json::array();
  for (const auto& g : doc.ideal.gens()) gens.push_back(render_monomial(ring, g));
  j["gens"] = std::move(gens);
  if (doc.a) j["a"] = doc.a->coords();
  return j;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
}

Json names_json(const Ring& ring, const VarSet& vars) {
  Json out = Json::array();
  for (std::size_t v : vars) out.push_back(ring.name(v));
  return out;
}

}  // namespace

Ring parse_vars(std::string_view csv) {
  std::vector<std::string> names;
  std::string current;
  for (char c : csv) {
    if (c == ',') {
      names.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  names.push_back(current);
  return Ring::plain(std::move(names));
}

MonomialIdeal parse_ideal(const Ring& ring, std::string_view text) {
  Scanner sc(text);
  return MonomialIdeal(ring, read_generators(sc, ring));
}

ExponentVector parse_monomial(const Ring& ring, std::string_view text) {
  Scanner sc(text);
  ExponentVector e = read_generator(sc, ring);
  sc.skip_ws();
  if (!sc.eof()) throw sc.error("trailing characters after monomial");
  return e;
}

std::string render_monomial(const Ring& ring, const ExponentVector& exps) {
  std::string out;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(k);
    if (exps[k] != 1) out += '^' + std::to_string(exps[k]);
  }
  return out.empty() ? "1" : out;
}

std::string render_ideal(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.gens()) {
    if (!out.empty()) out += ", ";
    out += render_monomial(ideal.ring(), g);
  }
  return out;
}

IdealDocument parse_document(std::string_view json) {
  return document_from_json(parse_json_text(json));
}

std::string render_document(const IdealDocument& doc) { return document_json(doc).dump(); }

std::string to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, rank] : table.entries())
    entries.push_back({{"l", key.first}, {"degree", key.second.coords()}, {"rank", rank}});
  Json coarse = Json::array();
  for (const auto& [key, rank] : table.coarse())
    coarse.push_back({{"l", key.first}, {"degree", key.second}, {"rank", rank}});
  Json totals = Json::array();
  for (const auto& [l, rank] : table.totals()) totals.push_back({{"l", l}, {"rank", rank}});
  Json j;
  j["entries"] = std::move(entries);
  j["coarse"] = std::move(coarse);
  j["totals"] = std::move(totals);
  j["projdim"] = table.max_index();
  return j.dump();
}

std::string to_json(const DepthDim& dd) {
  Json j;
  j["depth"] = dd.depth;
  j["projdim"] = dd.projdim;
  j["dim"] = dd.dim;
  return j.dump();
}

std::string to_json(const Ring& ring, const std::vector<VarSet>& primes) {
  Json list = Json::array();
  for (const auto& p : primes) list.push_back(names_json(ring, p));
  Json j;
  j["primes"] = std::move(list);
  return j.dump();
}

std::string to_json(const Ring& ring, const StandardPairs& pairs) {
  Json list = Json::array();
  for (const auto& p : pairs.pairs) {
    Json e;
    e["base"] = render_monomial(ring, p.base);
    e["exps"] = p.base.coords();
    e["free"] = names_json(ring, p.free);
    list.push_back(std::move(e));
  }
  Json j;
  j["pairs"] = std::move(list);
  j["deg"] = pairs.deg;
  j["adeg"] = pairs.adeg;
  j["dim"] = pairs.dim;
  return j.dump();
}

std::string to_json(const RingProperties& props) {
  Json j;
  j["cohen_macaulay"] = props.cohen_macaulay;
  j["gorenstein"] = props.gorenstein;
  j["seq_cm"] = props.seq_cm;
  return j.dump();
}

std::string to_json(const MonomialIdeal& ideal, const LinearQuotients& lq) {
  Json j;
  j["linear_quotients"] = lq.holds;
  Json order = Json::array();
  for (std::size_t k : lq.order) order.push_back(render_monomial(ideal.ring(), ideal.gens()[k]));
  j["order"] = std::move(order);
  return j.dump();
}

namespace {

Json decomposition_json(const StanleyDecomposition& d) {
  Json j;
  j["module"] = d.module.shape == ModuleShape::ideal ? "ideal" : "quotient";
  j["ideal"] = document_json({d.module.ideal, std::nullopt});
  Json spaces = Json::array();
  for (const auto& s : d.spaces) {
    Json e;
    e["degree"] = s.degree.coords();
    e["free"] = names_json(d.module.ideal.ring(), s.free);
    spaces.push_back(std::move(e));
  }
  j["spaces"] = std::move(spaces);
  return j;
}

}  // namespace

std::string to_json(const SdepthResult& result) {
  Json j;
  j["sdepth"] = result.sdepth;
  j["decomposition"] = decomposition_json(result.witness);
  return j.dump();
}

std::string to_json(const SphereCertificate& cert) {
  Json j;
  j["vertex_count"] = cert.vertex_count;
  j["dimension"] = cert.dimension;
  j["expected_dimension"] = cert.expected_dimension;
  j["f_vector"] = cert.f_vector;
  j["pure"] = cert.pure;
  j["pseudomanifold"] = cert.pseudomanifold;
  j["euler_reduced"] = cert.euler_reduced;
  j["homology"] = cert.homology;
  j["verdict"] = cert.pass ? "pass" : "fail";
  return j.dump();
}

std::string to_json(const Compression& compression) {
  Json j;
  j["core"] = document_json({compression.core, std::nullopt});
  Json script = Json::array();
  for (const auto& op : compression.script) script.push_back({{"i", op.axis + 1}, {"j", op.threshold}});
  j["script"] = std::move(script);
  return j.dump();
}

std::string to_json(const Prop53Report& report) {
  Json j;
  j["success"] = report.success;
  j["slid_side"] = document_json({report.slid_side, std::nullopt});
  j["inflated_side"] = document_json({report.inflated_side, std::nullopt});
  Json renaming = Json::object();
  for (const auto& [from, to] : report.renaming) renaming[from] = to;
  j["renaming"] = std::move(renaming);
  return j.dump();
}

std::string to_json(const ValidationResult& result) {
  Json j;
  j["valid"] = result.valid;
  if (result.witness) {
    j["witness"] = result.witness->coords();
    j["expected"] = result.expected;
    j["covered"] = result.covered;
  }
  return j.dump();
}

std::string render_decomposition(const StanleyDecomposition& d) { return decomposition_json(d).dump(); }

StanleyDecomposition parse_decomposition(std::string_view json) {
  const Json j = parse_json_text(json);
  if (!j.is_object() || !j.contains("ideal") || !j.contains("spaces") || !j["spaces"].is_array())
    throw Error(Errc::parse, "decomposition needs \"ideal\" and \"spaces\"");
  StanleyDecomposition d;
  const std::string shape = j.value("module", std::string("quotient"));
  if (shape == "ideal")
    d.module.shape = ModuleShape::ideal;
  else if (shape == "quotient")
    d.module.shape = ModuleShape::quotient;
  else
    throw Error(Errc::parse, "\"module\" must be \"ideal\" or \"quotient\"");
  d.module.ideal = document_from_json(j["ideal"]).ideal;
  const Ring& ring = d.module.ideal.ring();
  for (const auto& s : j["spaces"]) {
    if (!s.is_object() || !s.contains("degree") || !s.contains("free") || !s["free"].is_array())
      throw Error(Errc::parse, "each space needs \"degree\" and \"free\"");
    StanleySpace space;
    space.degree = vector_from_json(s["degree"], ring.size(), "space degree");
    for (const auto& v : s["free"]) {
      if (!v.is_string()) throw Error(Errc::parse, "free variables are given by name");
      auto idx = ring.index_of(v.get<std::string>());
      if (!idx) throw Error(Errc::parse, "unknown variable '" + v.get<std::string>() + "'");
      space.free.push_back(*idx);
    }
    std::sort(space.free.begin(), space.free.end());
    d.spaces.push_back(std::move(space));
  }
  return d;
}

}  // namespace slidepol
