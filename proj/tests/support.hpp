#pragma once

#include <random>
#include <string>

#include "oracle.hpp"
#include "slidepol/io.hpp"

namespace testing {

using namespace slidepol;

inline MonomialIdeal ideal(const std::string& vars, const std::string& gens) {
  return parse_ideal(parse_vars(vars), gens);
}

inline MonomialIdeal from_gens(const oracle::Gens& gens) {
  std::vector<ExponentVector> raw;
  for (const auto& g : gens) raw.emplace_back(g);
  return MonomialIdeal(Ring::standard(gens.at(0).size()), raw);
}

inline oracle::Gens to_gens(const MonomialIdeal& ideal) {
  oracle::Gens out;
  for (const auto& g : ideal.gens()) out.push_back(g.coords());
  return out;
}

inline std::map<std::pair<int, oracle::Vec>, int> plain(const BettiTable& t) {
  std::map<std::pair<int, oracle::Vec>, int> out;
  for (const auto& [key, v] : t.entries()) out[{key.first, key.second.coords()}] = v;
  return out;
}

inline ModuleDesc quotient(const MonomialIdeal& i) { return {ModuleShape::quotient, i}; }
inline ModuleDesc as_ideal(const MonomialIdeal& i) { return {ModuleShape::ideal, i}; }

/// Random nonzero proper ideal on 1..max_n variables.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t max_n = 4, int max_gens = 5,
                                  int max_exp = 3) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  return from_gens(oracle::random_gens(rng, n, max_gens, max_exp));
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace testing
