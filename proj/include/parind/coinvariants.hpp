#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parind/characters.hpp"
#include "parind/jh_lattice.hpp"
#include "parind/weyl.hpp"

namespace parind {

/// Sp_{P_base}^{M_ambient}, the generalized Steinberg of a Levi.
struct SteinbergLabel {
  Subset ambient;
  Subset base;
  bool operator==(const SteinbergLabel&) const = default;
};

/// One summand pInd_{ind_levi}^{M_K}(character [⊗ constituent]) of L^{degree}(U_K, -).
struct SummandDescriptor {
  long long degree = 0;  // -j, j = f * d_w
  WeylElement w;
  Subset ind_levi;
  SmoothCharacter character;
  std::optional<SteinbergLabel> constituent;
};

/// j -> summands in degree -j, each list in D_{I,K} order.
using CoinvariantTable = std::map<long long, std::vector<SummandDescriptor>>;

/// L^{-j}(U_K, pInd_{P_I}^G chi) for a character chi of M_I.
CoinvariantTable ps_coinvariants(const WeylGroup& W, Subset I, Subset K, const SmoothCharacter& chi,
                                 const SymbolAction& action = {});

/// L^{-j}(U_K, Sp_{P_I}^G).
CoinvariantTable steinberg_coinvariants(const WeylGroup& W, Subset I, Subset K, CharMode mode = CharMode::Formal);

struct CorollaryTerm {
  WeylElement w;
  SmoothCharacter delta;
};

/// K = ∅ specialization: delta_w for w ∈ D_{I,∅} with I(w) = I.
std::map<long long, std::vector<CorollaryTerm>> steinberg_corollary(const WeylGroup& W, Subset I,
                                                                    CharMode mode = CharMode::Formal);

struct ResolutionCertificate {
  bool ok = false;
  bool predicate = false;          // I(w) \ I ⊆ w(K)
  bool lower_vanishes = false;     // H^{<0} = 0
  bool h0_matches = false;         // H^0 is Sp_{P_{I∩w(K)}} exactly when the predicate holds
  MultFreeModule h0;               // constituents of H^0 found by linear algebra
  SteinbergLabel expected_label;   // (I(w) ∩ w(K), I ∩ w(K))
};

/// Builds C^•_{I(w), I(w)∩w(K)}(I, I) and checks its cohomology against the
/// generalized Steinberg summation condition for w.
ResolutionCertificate verify_by_resolution(const WeylGroup& W, Subset I, Subset K, const WeylElement& w);

}  // namespace parind
