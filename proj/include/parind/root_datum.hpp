#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parind/linalg.hpp"
#include "parind/subset.hpp"

namespace parind {

/// A root as an integer vector over the simple-root basis. Nonzero, and all
/// coefficients share a sign.
using Root = IntVec;

/// Input description of a root datum, as read from a spec file.
struct DatumSpec {
  std::string type;                  // "A2", "B3", "A1xG2", ...; empty when cartan is given
  std::optional<IntMatrix> cartan;   // cartan(i,j) = <alpha_i, alpha_j^vee>
  std::vector<long long> d;          // per simple root; empty means all 1
  std::optional<long long> z_dim;    // defaults to the rank
  long long f = 1;                   // [F:Q_p]
  std::optional<long long> p;        // odd prime, enables concrete characters
};

/// Cartan matrix of a named finite type (Bourbaki numbering), products joined by 'x'.
IntMatrix cartan_matrix_for(std::string_view type);

/// Immutable finite reduced root system with dimension weights d_alpha.
///
/// Weights are F-dimensions of root groups; Q_p-dimensions are always
/// f * (F-dimension).
class RootDatum {
 public:
  static RootDatum build(const DatumSpec& spec);
  static RootDatum of_type(std::string_view type) {
    DatumSpec spec;
    spec.type = std::string(type);
    return build(spec);
  }

  int rank() const { return rank_; }
  const std::string& label() const { return label_; }
  const IntMatrix& cartan() const { return cartan_; }
  long long z_dim() const { return z_dim_; }
  long long f() const { return f_; }
  const std::optional<long long>& p() const { return p_; }
  Subset all() const { return Subset::full(rank_); }

  /// Positive roots ordered by height, simple roots first in index order.
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::optional<std::size_t> positive_index(const Root& r) const;
  bool is_root(const Root& r) const;
  static bool is_positive(const Root& r);

  /// d_alpha for any root (positive or negative).
  long long d(const Root& r) const;
  long long d_simple(int i) const { return d_simple_[i]; }
  const std::vector<long long>& weights() const { return d_simple_; }

  /// <lambda, alpha_i^vee>
  long long pairing(const IntVec& lambda, int i) const;
  /// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
  IntVec reflect(int i, IntVec lambda) const;

  Root simple_root(int i) const;
  /// Index of r if r is a simple root.
  std::optional<int> simple_index(const Root& r) const;

  /// Sigma_J: roots (both signs) supported on J.
  std::vector<Root> levi_roots(Subset J) const;
  /// Sigma_J^+.
  std::vector<Root> levi_positive_roots(Subset J) const;
  static bool supported_on(const Root& r, Subset J);

 private:
  RootDatum() = default;

  int rank_ = 0;
  std::string label_;
  IntMatrix cartan_;
  std::vector<long long> d_simple_;
  long long z_dim_ = 0;
  long long f_ = 1;
  std::optional<long long> p_;
  std::vector<Root> positive_;
  std::vector<long long> positive_d_;
  std::map<Root, std::size_t> index_;
};

}  // namespace parind
