#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "parind/root_datum.hpp"
#include "parind/weyl.hpp"

namespace testing_util {

inline oracle::Cartan cartan_of(const parind::RootDatum& rd) {
  oracle::Cartan c(rd.rank(), oracle::Vec(rd.rank()));
  for (int i = 0; i < rd.rank(); ++i)
    for (int j = 0; j < rd.rank(); ++j) c[i][j] = rd.cartan()(i, j);
  return c;
}

inline oracle::Elem elem_of(const parind::WeylElement& w) {
  oracle::Elem e;
  for (std::size_t j = 0; j < w.action().cols(); ++j) e.push_back(w.action().column(j));
  return e;
}

inline parind::RootDatum datum(const std::string& type, std::vector<long long> d = {}, long long f = 1,
                               std::optional<long long> p = std::nullopt, std::optional<long long> z = std::nullopt) {
  parind::DatumSpec spec;
  spec.type = type;
  spec.d = std::move(d);
  spec.f = f;
  spec.p = p;
  spec.z_dim = z;
  return parind::RootDatum::build(spec);
}

/// Split types of rank <= 3 used by the exhaustive checks.
inline const std::vector<std::string>& small_types() {
  static const std::vector<std::string> t{"A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "C3", "A1xA2", "A1xB2", "A1xA1xA1"};
  return t;
}

/// Weyl-invariant weightings with values in {1,2} for a type (all-ones first).
inline std::vector<std::vector<long long>> weightings(const std::string& type) {
  const int n = parind::RootDatum::of_type(type).rank();
  std::vector<std::vector<long long>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<long long> d(n);
    for (int i = 0; i < n; ++i) d[i] = ((mask >> i) & 1) ? 2 : 1;
    try {
      datum(type, d);
      out.push_back(d);
    } catch (const std::exception&) {
    }
  }
  return out;
}

}  // namespace testing_util
