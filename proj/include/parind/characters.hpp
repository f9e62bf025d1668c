#pragma once

#include <map>
#include <string>
#include <vector>

#include "parind/linalg.hpp"
#include "parind/weyl.hpp"

namespace parind {

/// Rational vector over the simple-root basis (alpha_w, rho, twisting elements).
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank) : c_(rank) {}
  explicit Weight(std::vector<Rational> c) : c_(std::move(c)) {}
  static Weight from_ints(const IntVec& v);

  int rank() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Throws InputError unless integral.
  IntVec to_ints() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(const Rational& k) const;
  bool operator==(const Weight& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// w(lambda), using the integral action matrix.
Weight act(const WeylElement& w, const Weight& lambda);
/// <lambda, alpha_i^vee>
Rational pairing(const RootDatum& rd, const Weight& lambda, int i);

/// alpha_w = sum of d_beta * beta over the inversion set of w.
Weight alpha_w(const WeylGroup& W, const WeylElement& w);
/// rho = 1/2 sum over positive roots of d_alpha * alpha.
Weight rho(const RootDatum& rd);
/// <theta, alpha^vee> = d_alpha for every simple alpha.
bool is_twisting(const RootDatum& rd, const Weight& theta);

enum class CharMode { Formal, Concrete };

/// Image of one symbol under a simple reflection: another symbol plus an
/// integral weight added to the cyclotomic part.
struct SymbolImage {
  std::string to;
  IntVec shift;
};

/// Declared action of W on the symbol alphabet, given on simple reflections.
/// An action with no declared reflections is the trivial action on every symbol.
class SymbolAction {
 public:
  SymbolAction() = default;

  void declare(int simple, std::string symbol, SymbolImage image);
  bool is_trivial() const { return per_simple_.empty(); }
  const std::map<int, std::map<std::string, SymbolImage>>& table() const { return per_simple_; }

  /// Checks that every declared reflection is an involution on weighted symbols
  /// and that the induced action on all of W is well defined.
  void validate(const WeylGroup& W) const;

 private:
  friend class SmoothCharacter;
  std::map<int, std::map<std::string, SymbolImage>> per_simple_;
};

/// A smooth character: cyclotomic part epsilon_F o (integral weight) times an
/// opaque symbolic part. In concrete mode cyclo is reduced mod `modulus` = p-1.
class SmoothCharacter {
 public:
  SmoothCharacter() = default;
  /// Trivial character on a datum; concrete mode requires p.
  static SmoothCharacter trivial(const RootDatum& rd, CharMode mode);
  static SmoothCharacter make(const RootDatum& rd, CharMode mode, IntVec cyclo,
                              std::map<std::string, long long> sym = {});

  CharMode mode() const { return mode_; }
  long long modulus() const { return modulus_; }
  const IntVec& cyclo() const { return cyclo_; }
  const std::map<std::string, long long>& sym() const { return sym_; }
  bool is_trivial() const;

  /// Tensor product (group law).
  SmoothCharacter operator*(const SmoothCharacter& o) const;
  SmoothCharacter inverse() const;

  /// w(chi) under the action matrix of w and the declared symbol action.
  SmoothCharacter transported(const WeylGroup& W, const WeylElement& w, const SymbolAction& action) const;

  std::string to_string() const;

  friend bool chars_equal(const SmoothCharacter& a, const SmoothCharacter& b);

 private:
  friend class SymbolAction;
  void normalize();
  SmoothCharacter reflected(const RootDatum& rd, int i, const SymbolAction& action) const;

  CharMode mode_ = CharMode::Formal;
  long long modulus_ = 0;
  IntVec cyclo_;
  std::map<std::string, long long> sym_;
};

/// Equality of characters; throws InputError on a mode (or modulus) mismatch.
bool chars_equal(const SmoothCharacter& a, const SmoothCharacter& b);

/// delta_w = epsilon_F o alpha_w.
SmoothCharacter delta_w(const WeylGroup& W, const WeylElement& w, CharMode mode);
/// chi * w = delta_w ⊗ w^{-1}(chi); a right action of W.
SmoothCharacter star(const WeylGroup& W, const SmoothCharacter& chi, const WeylElement& w,
                     const SymbolAction& action = {});

}  // namespace parind
