#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parind/characters.hpp"
#include "parind/weyl.hpp"

namespace parind {

struct SpecialSets {
  Subset delta1;  // simple roots with d_alpha = 1
  Subset perp;    // simple roots orthogonal to every root of I
  Subset perp1;   // perp ∩ delta1
};

SpecialSets special_sets(const RootDatum& rd, Subset I);

/// Hypotheses under which H^*(Z, k) is an exterior algebra on z(f+1) generators.
struct TorusAssumptions {
  bool split = true;
  bool p_odd = true;
  bool no_pth_roots_of_unity = true;
  bool all() const { return split && p_odd && no_pth_roots_of_unity; }
};

/// Poincaré polynomial of H^*(Z, k) for a split torus Z of the given rank over
/// F with [F:Q_p] = f, i.e. (1+t)^{rank (f+1)}; nullopt if an assumption fails.
std::optional<std::vector<long long>> torus_poincare(long long torus_rank, long long f, TorusAssumptions a);
/// Uses the datum's z_dim as the torus rank.
std::optional<std::vector<long long>> torus_poincare(const RootDatum& rd, TorusAssumptions a);

enum class Verdict {
  Vanishes,
  Dimension,
  TransferredToLevi,
  HomSum,
  ExactSequence,
  NecessaryCondition,
  Undetermined,
};

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct HomSummand {
  int alpha = 0;
  SmoothCharacter delta;  // delta_{s_alpha}
  std::string descriptor;
};

struct ExtPrediction {
  Verdict verdict = Verdict::Undetermined;
  std::string justification;            // which clause produced the verdict
  long long dimension = 0;              // Dimension
  std::string descriptor;               // TransferredToLevi / ExactSequence
  std::vector<HomSummand> hom_sum;      // HomSum
  std::vector<WeylElement> candidates;  // NecessaryCondition
};

/// Ext^r_G(pInd_{P_I}^G chi, pInd_B^G chi').
struct PsExtQuery {
  Subset I;
  SmoothCharacter chi;
  SmoothCharacter chi_prime;
  long long degree = 0;
  SymbolAction action;
  TorusAssumptions assumptions;
};

ExtPrediction predict_ps_ext(const WeylGroup& W, const PsExtQuery& q);

/// Ext^r_G(pInd_{P_I}^G V, pInd_{P_K}^G W) for abstract V, W described by flags.
struct ParabolicExtQuery {
  Subset I;
  Subset K;
  long long degree = 0;
  bool left_cuspidal = false;     // V
  bool right_cuspidal = false;    // W
  bool distinct_central = false;  // V and W have distinct central characters
  std::string V = "V";
  std::string W = "W";
};

ExtPrediction predict_parabolic_ext(const WeylGroup& W, const ParabolicExtQuery& q);

struct ClaimCertificate {
  bool ok = true;
  std::size_t checked = 0;
  std::size_t premises_held = 0;
  std::optional<std::string> counterexample;
};

/// For every simple alpha and I, K: if Sigma_I ∩ s_alpha(Sigma^+ \ Sigma_K) = ∅ and
/// s_alpha^{-1}(Sigma^+ \ Sigma_I) ∩ Sigma_K = ∅ then I = K.
ClaimCertificate claim_check(const WeylGroup& W);

}  // namespace parind
