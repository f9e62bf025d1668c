#pragma once

#include <map>
#include <vector>

#include "parind/characters.hpp"
#include "parind/weyl.hpp"

namespace parind {

/// One orbit's contribution Psi_n to the filtration of L(N, pInd_P^G -):
/// parabolic induction from ind_levi, twisted by delta and shifted by -f*d_w,
/// applied after coinvariants along the Levi coinv_levi of M ∩ n(Q).
struct GradedPiece {
  WeylElement w;
  long long shift = 0;  // -f * d_w
  SmoothCharacter delta;
  Subset coinv_levi;    // I ∩ w(K)
  Subset ind_levi;      // w^{-1}(I) ∩ K
  int height = 0;
};

/// Graded pieces grouped by height 1..r.
struct Filtration {
  std::vector<std::vector<GradedPiece>> groups;

  int length() const { return static_cast<int>(groups.size()); }
  std::size_t piece_count() const;
};

/// Closure order on P\G/Q: w <= w' iff P w' Q lies in the closure of P w Q.
bool closure_leq(const WeylGroup& W, Subset I, Subset K, const WeylElement& w, const WeylElement& w2);

/// F-dimension of the orbit P_I w P_K.
long long orbit_dim(const WeylGroup& W, Subset I, Subset K, const WeylElement& w);

/// Height of every element of D_{I,K}, keyed by element index.
std::map<std::size_t, int> heights(const WeylGroup& W, Subset I, Subset K);

Filtration graded_pieces(const WeylGroup& W, Subset I, Subset K, CharMode mode);

struct DwDimCertificate {
  bool ok = false;
  long long lhs = 0;  // f * d_w
  long long rhs = 0;  // f * sum of d over Sigma_N ∩ w^{-1}(Sigma_Ubar)
  bool root_sets_equal = false;
};

/// Compares f*d_w with the dimension of n_w^{-1}(Ubar) ∩ N computed from root sets.
DwDimCertificate check_dw_dim(const WeylGroup& W, Subset I, Subset K, const WeylElement& w);

}  // namespace parind
