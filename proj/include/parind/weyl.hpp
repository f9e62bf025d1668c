#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "parind/root_datum.hpp"

namespace parind {

/// An element of the finite Weyl group: its lexicographically smallest reduced
/// word (0-based simple-root indices, w = s_{word[0]} ... s_{word[k-1]}) and its
/// action on the root lattice (column j is w(alpha_j)).
class WeylElement {
 public:
  const std::vector<int>& word() const { return word_; }
  const IntMatrix& action() const { return action_; }
  int length() const { return static_cast<int>(word_.size()); }
  std::size_t index() const { return index_; }
  bool is_identity() const { return word_.empty(); }

  IntVec apply(const IntVec& v) const { return action_.apply(v); }

  /// "e" or "s2s1" (1-based).
  std::string to_string() const;

  bool operator==(const WeylElement& o) const { return action_ == o.action_; }

 private:
  friend class WeylGroup;
  std::vector<int> word_;
  IntMatrix action_;
  std::size_t index_ = 0;
};

/// Result of the Kilmoyer intersection with its brute-force certificate.
struct KilmoyerResult {
  Subset subset;   // J' ∩ w(K)
  bool certified;  // Sigma_{J'} ∩ w(Sigma_K) == Sigma_{J' ∩ w(K)}
};

/// The full Weyl group of a root datum, enumerated once at construction.
class WeylGroup {
 public:
  explicit WeylGroup(RootDatum rd);

  const RootDatum& datum() const { return rd_; }
  int rank() const { return rd_.rank(); }
  std::size_t size() const { return elements_.size(); }
  std::span<const WeylElement> elements() const { return elements_; }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }

  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const { return elements_.back(); }
  const WeylElement& simple(int i) const { return elements_[simple_[i]]; }

  const WeylElement& multiply(const WeylElement& v, const WeylElement& w) const;
  const WeylElement& inverse(const WeylElement& w) const { return elements_[inverse_[w.index()]]; }
  /// Element with the given (not necessarily reduced) word of 0-based indices.
  const WeylElement& from_word(std::span<const int> word) const;
  const WeylElement* find(const IntMatrix& action) const;

  /// Sigma^+ ∩ w^{-1}(-Sigma^+): positive roots made negative by w.
  std::vector<Root> inversion_set(const WeylElement& w) const;
  /// Weighted length: sum of d_beta over the inversion set.
  long long d_w(const WeylElement& w) const;

  /// Bruhat order v <= w.
  bool bruhat_leq(const WeylElement& v, const WeylElement& w) const;

  /// w(Delta_J) ⊆ Sigma^+.
  bool in_D(const WeylElement& w, Subset J) const;
  /// w ∈ D_K and w^{-1} ∈ D_I.
  bool in_D(Subset I, const WeylElement& w, Subset K) const;
  /// D_{I,K}, sorted by (d_w, length, word).
  std::vector<const WeylElement*> dml(Subset I, Subset K) const;

  /// I(w) = {alpha simple : w^{-1}(alpha) > 0}.
  Subset i_of_w(const WeylElement& w) const;
  /// Simple roots lying in w(K): {alpha ∈ Delta : w^{-1}(alpha) ∈ K}.
  Subset image(const WeylElement& w, Subset K) const;
  /// {k ∈ K : w(alpha_k) ∈ I}, i.e. w^{-1}(I) ∩ K.
  Subset preimage_in(const WeylElement& w, Subset I, Subset K) const;

  /// J' ∩ w(K) for w ∈ D_{J',K}; throws PreconditionError otherwise.
  KilmoyerResult kilmoyer(Subset Jp, const WeylElement& w, Subset K) const;

  /// Elements of the standard parabolic subgroup W_J.
  std::vector<const WeylElement*> parabolic_subgroup(Subset J) const;

  void check_subset(Subset J) const;

 private:
  bool bruhat_leq_idx(std::size_t v, std::size_t w) const;

  RootDatum rd_;
  std::vector<WeylElement> elements_;
  std::map<std::vector<long long>, std::size_t> by_action_;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> left_mult_;  // left_mult_[i][w] = s_i w
};

}  // namespace parind
