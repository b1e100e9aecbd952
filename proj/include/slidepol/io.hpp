#pragma once

// Text and JSON forms of ideals and of analysis results.
//
// Monomial grammar: generators separated by commas, each either `1` or
// `var(^posint)?(*var(^posint)?)*`. Whitespace is ignored. Variables are
// `[A-Za-z][A-Za-z0-9_]*` with optional trailing primes, or `base[slot]` in a
// grid ring. The empty string is the zero ideal.
//
// Ideal documents are JSON objects
//   {"vars": [...], "grid": [slots...], "gens": [...], "a": [...]}
// where "grid" and "a" are optional and each entry of "gens" is a monomial
// string or an exponent array. An optional "exps" array of exponent arrays
// overrides "gens" when both are present.

#include <optional>
#include <string>
#include <string_view>

#include "slidepol/bier.hpp"
#include "slidepol/functors.hpp"
#include "slidepol/homalg.hpp"
#include "slidepol/stanley.hpp"

namespace slidepol {

/// Comma-separated variable names.
Ring parse_vars(std::string_view csv);

MonomialIdeal parse_ideal(const Ring& ring, std::string_view text);
ExponentVector parse_monomial(const Ring& ring, std::string_view text);

std::string render_monomial(const Ring& ring, const ExponentVector& exps);
/// Generators joined by ", "; the zero ideal renders as "".
std::string render_ideal(const MonomialIdeal& ideal);

struct IdealDocument {
  MonomialIdeal ideal;
  std::optional<ExponentVector> a;
  friend bool operator==(const IdealDocument&, const IdealDocument&) = default;
};

IdealDocument parse_document(std::string_view json);
/// Canonical compact JSON; parse_document inverts it byte for byte.
std::string render_document(const IdealDocument& doc);

std::string to_json(const BettiTable& table);
std::string to_json(const DepthDim& dd);
std::string to_json(const Ring& ring, const std::vector<VarSet>& primes);
std::string to_json(const Ring& ring, const StandardPairs& pairs);
std::string to_json(const RingProperties& props);
std::string to_json(const MonomialIdeal& ideal, const LinearQuotients& lq);
std::string to_json(const SdepthResult& result);
std::string to_json(const SphereCertificate& cert);
std::string to_json(const Compression& compression);
std::string to_json(const Prop53Report& report);
std::string to_json(const ValidationResult& result);

/// Round trip for Stanley decompositions:
///   {"module": "ideal"|"quotient", "ideal": <document>,
///    "spaces": [{"degree": [...], "free": [variable names]}]}
std::string render_decomposition(const StanleyDecomposition& d);
StanleyDecomposition parse_decomposition(std::string_view json);

}  // namespace slidepol
