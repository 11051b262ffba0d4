#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wmds/laurent.hpp"

namespace testing {

inline wmds::GaussElement ge(int n, const std::string& text) { return wmds::GaussElement::parse(n, text); }

/// Builds a polynomial from {"k1,...,kr", "coefficient"} pairs.
inline wmds::LaurentPoly poly(int rank, int n, const std::vector<std::pair<std::string, std::string>>& terms) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : terms) j[k] = v;
  return wmds::LaurentPoly::from_json(rank, n, j);
}

}  // namespace testing
