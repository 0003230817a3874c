#pragma once

#include "gegenmetric/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <string>

namespace gegenmetric::test {

inline const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    std::ifstream in(std::string(GEGENMETRIC_GOLDEN_DIR) + "/oracle.json");
    return nlohmann::json::parse(in);
  }();
  return data;
}

inline Rational random_rational(std::mt19937& rng, int lo = -50, int hi = 50, int max_den = 13) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

}  // namespace gegenmetric::test
