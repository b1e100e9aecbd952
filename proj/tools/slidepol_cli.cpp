// slidepol command-line tool. Talks to the library only through the C API.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "slidepol/slidepol.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kCap = 3 };

struct Failure {
  int code;
  std::string message;
};

struct Options {
  std::string ideal_text;
  std::string vars;
  std::string input;
  std::string a;
  std::string format = "json";
  std::string module = "quotient";
  std::string var;
  std::string decomposition;
  std::size_t i = 1;
  int j = 1;
  int characteristic = 0;
  bool reversed = false;
  bool certify = false;
  sp_limits limits{};
};

void check(sp_status s) {
  if (s == SP_OK) return;
  throw Failure{s == SP_ERR_CAP_EXCEEDED ? kCap : kUsage,
                std::string(sp_status_name(s)) + ": " + sp_last_error()};
}

class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(sp_ideal* h) : h_(h) {}
  Ideal(Ideal&& o) noexcept : h_(o.h_) { o.h_ = nullptr; }
  Ideal& operator=(Ideal&& o) noexcept {
    std::swap(h_, o.h_);
    return *this;
  }
  ~Ideal() { sp_ideal_free(h_); }
  sp_ideal* get() const { return h_; }
  sp_ideal** out() { return &h_; }

 private:
  sp_ideal* h_ = nullptr;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  sp_string_free(s);
  return out;
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Failure{kUsage, "cannot open '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Variables in order of first appearance, for --ideal without --vars.
std::string infer_vars(const std::string& text) {
  std::vector<std::string> seen;
  for (std::size_t k = 0; k < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[k]))) {
      std::size_t e = k;
      while (e < text.size() && (std::isalnum(static_cast<unsigned char>(text[e])) || text[e] == '_')) ++e;
      while (e < text.size() && text[e] == '\'') ++e;
      std::string name = text.substr(k, e - k);
      if (std::find(seen.begin(), seen.end(), name) == seen.end()) seen.push_back(name);
      k = e;
    } else {
      ++k;
    }
  }
  std::string csv;
  for (const auto& s : seen) csv += (csv.empty() ? "" : ",") + s;
  if (csv.empty()) throw Failure{kUsage, "cannot infer variables from an empty ideal; pass --vars"};
  return csv;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      throw Failure{kUsage, "bad integer '" + cur + "' in --a"};
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

Ideal load(const Options& o) {
  Ideal ideal;
  if (!o.input.empty()) {
    check(sp_ideal_from_json(read_all(o.input).c_str(), ideal.out()));
  } else if (!o.ideal_text.empty() || !o.vars.empty()) {
    const std::string vars = o.vars.empty() ? infer_vars(o.ideal_text) : o.vars;
    check(sp_ideal_parse(vars.c_str(), o.ideal_text.c_str(), ideal.out()));
  } else {
    throw Failure{kUsage, "no ideal given; use --ideal or --input"};
  }
  if (!o.a.empty()) {
    const auto a = parse_int_list(o.a);
    check(sp_ideal_set_a(ideal.get(), a.data(), a.size()));
  }
  return ideal;
}

sp_module_shape shape_of(const Options& o) {
  if (o.module == "ideal") return SP_MODULE_IDEAL;
  if (o.module == "quotient") return SP_MODULE_QUOTIENT;
  throw Failure{kUsage, "--module must be 'ideal' or 'quotient'"};
}

void print_text(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t k = 0; k < j.size(); ++k) print_text(j[k], prefix + "[" + std::to_string(k) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void print_result(const Options& o, const std::string& json) {
  const Json j = Json::parse(json);
  if (o.format == "text")
    print_text(j, "", std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

void print_ideal(const Options& o, const Ideal& ideal) {
  char* s = nullptr;
  if (o.format == "text") {
    check(sp_ideal_render(ideal.get(), &s));
    std::cout << take(s) << "\n";
  } else {
    check(sp_ideal_to_json(ideal.get(), &s));
    std::cout << take(s) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slidepol: sliding functors, polarization and Bier-Murai spheres for monomial ideals"};
  app.require_subcommand(1);
  Options o;
  sp_limits_default(&o.limits);

  std::string suite = "prop22";
  std::uint64_t trials = 100, seed = 1;
  std::size_t n = 4, max_gens = 5;
  int max_exponent = 3;
  unsigned workers = 1;
  double max_skip_ratio = 0.5;
  std::string report_path;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--ideal", o.ideal_text, "generators, e.g. \"x*y*z, x*w, y*w\"");
    cmd->add_option("--vars", o.vars, "comma-separated variable names (default: order of appearance)");
    cmd->add_option("--input", o.input, "ideal document (JSON), '-' for stdin");
    cmd->add_option("--a", o.a, "determining vector, e.g. 2,1,1,1 (default lcm v 1)");
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--char", o.characteristic, "field characteristic (0 or a prime)");
    cmd->add_option("--max-box", o.limits.box, "cap on enumerated box points");
    cmd->add_option("--max-poset", o.limits.poset, "cap on characteristic poset size");
    cmd->add_option("--max-lcm", o.limits.lcm_lattice, "cap on lcm lattice size");
    cmd->add_option("--max-vertices", o.limits.vertices, "cap on simplicial complex vertices");
    cmd->add_option("--max-linquot", o.limits.linquot_gens, "cap on generators for linear quotients");
  };
  auto command = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_input(cmd);
    add_common(cmd);
    return cmd;
  };

  auto* slide = command("slide", "ideal-level slide I^{<(i,j)}");
  auto* contract = command("contract", "inverse slide");
  for (auto* cmd : {slide, contract}) {
    cmd->add_option("--i", o.i, "axis (1-based)")->required();
    cmd->add_option("--j", o.j, "threshold")->required();
  }
  command("compress", "remove exponent gaps; prints the core and the slide script");
  command("polarize", "pol_a(I), or pol^a(I) with --reversed")->add_flag("--reversed", o.reversed);
  command("depolarize", "identify every slot of each grid axis");
  command("inflate", "1-vertex inflation")->add_option("--var", o.var, "variable name")->required();
  command("dual", "Alexander dual with respect to a");
  command("betti", "multigraded Betti numbers")->add_option("--module", o.module, "ideal or quotient");
  command("depth", "depth and projective dimension")->add_option("--module", o.module, "ideal or quotient");
  command("dim", "Krull dimension")->add_option("--module", o.module, "ideal or quotient");
  command("ass", "associated primes of S/I");
  command("pairs", "standard pairs, deg and adeg of S/I");
  command("props", "Cohen-Macaulay, Gorenstein and sequentially Cohen-Macaulay flags of S/I");
  command("linquot", "linear quotients with a witness order");
  command("sdepth", "exact Stanley depth with a witness decomposition")
      ->add_option("--module", o.module, "ideal or quotient");
  command("bm", "Bier-Murai ideal BM_a(I)")->add_flag("--certify", o.certify, "also certify the sphere");
  auto* prop53 = command("prop53", "compare BM of a slide with the inflated BM");
  prop53->add_option("--i", o.i, "axis (1-based)")->required();
  prop53->add_option("--j", o.j, "threshold")->required();
  auto* validate = app.add_subcommand("validate", "check a Stanley decomposition document");
  validate->add_option("--decomposition", o.decomposition, "decomposition JSON file, '-' for stdin")->required();
  add_common(validate);

  auto* verify = app.add_subcommand("verify", "run a theorem-verification suite");
  add_common(verify);
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--trials", trials, "number of random trials");
  verify->add_option("--seed", seed, "64-bit seed");
  verify->add_option("--max-n", n, "largest variable count");
  verify->add_option("--max-exponent", max_exponent, "largest exponent");
  verify->add_option("--max-gens", max_gens, "largest generator count");
  verify->add_option("--workers", workers, "concurrent trials");
  verify->add_option("--max-skip-ratio", max_skip_ratio, "fraction of skipped trials tolerated");
  verify->add_option("--report", report_path, "also write the report to this file");
  app.add_subcommand("suites", "list verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    const sp_limits* lim = &o.limits;
    char* s = nullptr;

    if (name == "suites") {
      check(sp_suite_names(&s));
      print_result(o, take(s));
      return kOk;
    }
    if (name == "verify") {
      Json cfg;
      cfg["suite"] = suite;
      cfg["trials"] = trials;
      cfg["seed"] = seed;
      cfg["n"] = n;
      cfg["max_exponent"] = max_exponent;
      cfg["max_gens"] = max_gens;
      cfg["characteristic"] = o.characteristic;
      cfg["workers"] = workers;
      cfg["max_skip_ratio"] = max_skip_ratio;
      cfg["caps"] = {{"box", o.limits.box},
                     {"poset", o.limits.poset},
                     {"lcm_lattice", o.limits.lcm_lattice},
                     {"vertices", o.limits.vertices},
                     {"linquot_gens", o.limits.linquot_gens}};
      std::size_t violations = 0;
      int cap_fatal = 0;
      check(sp_verify(cfg.dump().c_str(), &s, &violations, &cap_fatal));
      const std::string report = take(s);
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw Failure{kUsage, "cannot write '" + report_path + "'"};
        out << report << "\n";
      }
      print_result(o, report);
      if (violations > 0) return kViolation;
      if (cap_fatal) return kCap;
      return kOk;
    }
    if (name == "validate") {
      check(sp_validate_decomposition_json(read_all(o.decomposition).c_str(), lim, &s));
      const std::string result = take(s);
      print_result(o, result);
      return Json::parse(result).at("valid").get<bool>() ? kOk : kViolation;
    }

    Ideal ideal = load(o);
    Ideal result;
    if (name == "slide") {
      check(sp_slide(ideal.get(), o.i, o.j, result.out()));
    } else if (name == "contract") {
      check(sp_contract(ideal.get(), o.i, o.j, result.out()));
    } else if (name == "compress") {
      char* script = nullptr;
      check(sp_compress(ideal.get(), result.out(), &script));
      const std::string script_json = take(script);
      if (o.format == "text") {
        check(sp_ideal_render(result.get(), &s));
        std::cout << "core: " << take(s) << "\nscript: " << script_json << "\n";
      } else {
        check(sp_ideal_to_json(result.get(), &s));
        Json j;
        j["core"] = Json::parse(take(s));
        j["script"] = Json::parse(script_json);
        std::cout << j.dump(2) << "\n";
      }
      return kOk;
    } else if (name == "polarize") {
      check(sp_polarize(ideal.get(), o.reversed ? 1 : 0, result.out()));
    } else if (name == "depolarize") {
      check(sp_depolarize(ideal.get(), result.out()));
    } else if (name == "inflate") {
      check(sp_inflate(ideal.get(), o.var.c_str(), result.out()));
    } else if (name == "dual") {
      check(sp_dual(ideal.get(), lim, result.out()));
    } else if (name == "bm") {
      if (o.certify) {
        int pass = 0;
        check(sp_bm_certify_json(ideal.get(), lim, &s, &pass));
        print_result(o, take(s));
        return pass ? kOk : kViolation;
      }
      check(sp_bier_murai(ideal.get(), lim, result.out()));
    } else if (name == "prop53") {
      int success = 0;
      check(sp_prop53_json(ideal.get(), o.i, o.j, lim, &s, &success));
      print_result(o, take(s));
      return success ? kOk : kViolation;
    } else {
      if (name == "betti") {
        check(sp_betti_json(ideal.get(), shape_of(o), o.characteristic, lim, &s));
      } else if (name == "depth" || name == "dim") {
        check(sp_depth_json(ideal.get(), shape_of(o), o.characteristic, lim, &s));
        if (name == "dim") {
          Json j;
          j["dim"] = Json::parse(take(s)).at("dim");
          print_result(o, j.dump());
          return kOk;
        }
      } else if (name == "ass") {
        check(sp_ass_json(ideal.get(), lim, &s));
      } else if (name == "pairs") {
        check(sp_pairs_json(ideal.get(), lim, &s));
      } else if (name == "props") {
        check(sp_props_json(ideal.get(), o.characteristic, lim, &s));
      } else if (name == "linquot") {
        check(sp_linquot_json(ideal.get(), lim, &s));
      } else if (name == "sdepth") {
        check(sp_sdepth_json(ideal.get(), shape_of(o), lim, &s));
      }
      print_result(o, take(s));
      return kOk;
    }
    print_ideal(o, result);
    return kOk;
  } catch (const Failure& f) {
    std::cerr << "slidepol: " << f.message << "\n";
    return f.code;
  }
}
