#include "parind/ext_predictor.hpp"

#include <set>

#include "parind/error.hpp"

namespace parind {

SpecialSets special_sets(const RootDatum& rd, Subset I) {
  if (!I.is_subset_of(rd.all())) throw InputError("special_sets: subset outside the simple roots");
  SpecialSets s;
  for (int a = 0; a < rd.rank(); ++a) {
    if (rd.d_simple(a) == 1) s.delta1 = s.delta1.with(a);
    bool orthogonal = true;
    for (int b : I.elements()) orthogonal &= rd.cartan()(a, b) == 0;
    if (orthogonal && !I.contains(a)) s.perp = s.perp.with(a);
  }
  s.perp1 = s.perp & s.delta1;
  return s;
}

std::optional<std::vector<long long>> torus_poincare(long long torus_rank, long long f, TorusAssumptions a) {
  if (!a.all()) return std::nullopt;
  if (torus_rank < 0 || f < 1) throw InputError("torus_poincare: invalid rank or degree");
  const long long n = torus_rank * (f + 1);
  std::vector<long long> row{1};
  for (long long k = 0; k < n; ++k) {
    std::vector<long long> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i];
      next[i + 1] += row[i];
    }
    row = std::move(next);
  }
  return row;
}

std::optional<std::vector<long long>> torus_poincare(const RootDatum& rd, TorusAssumptions a) {
  return torus_poincare(rd.z_dim(), rd.f(), a);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Vanishes: return "Vanishes";
    case Verdict::Dimension: return "Dimension";
    case Verdict::TransferredToLevi: return "TransferredToLevi";
    case Verdict::HomSum: return "HomSum";
    case Verdict::ExactSequence: return "ExactSequence";
    case Verdict::NecessaryCondition: return "NecessaryCondition";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::Vanishes, Verdict::Dimension, Verdict::TransferredToLevi, Verdict::HomSum,
                    Verdict::ExactSequence, Verdict::NecessaryCondition, Verdict::Undetermined})
    if (to_string(v) == s) return v;
  throw InputError("unknown verdict '" + s + "'");
}

ExtPrediction predict_ps_ext(const WeylGroup& W, const PsExtQuery& q) {
  if (q.degree < 0) throw InputError("Ext degree must be nonnegative");
  const RootDatum& rd = W.datum();
  const auto reps = W.dml(q.I, Subset{});

  std::vector<SmoothCharacter> twisted;
  for (const auto* w : reps) twisted.push_back(star(W, q.chi, *w, q.action));

  ExtPrediction out;
  for (std::size_t k = 0; k < reps.size(); ++k)
    if (rd.f() * W.d_w(*reps[k]) <= q.degree && chars_equal(q.chi_prime, twisted[k]))
      out.candidates.push_back(*reps[k]);
  if (out.candidates.empty()) {
    out.verdict = Verdict::Vanishes;
    out.justification = "principal-series: no w with f*d_w <= r and chi' = chi*w (central characters differ)";
    return out;
  }

  bool generic = true;
  for (std::size_t a = 0; a < reps.size() && generic; ++a) {
    if (!reps[a]->is_identity() && chars_equal(twisted[a], q.chi)) generic = false;
    for (std::size_t b = a + 1; b < reps.size() && generic; ++b)
      if (chars_equal(twisted[a], twisted[b])) generic = false;
  }
  if (!generic) {
    out.verdict = Verdict::NecessaryCondition;
    out.justification = "principal-series: chi not generic, only the candidate set is determined";
    return out;
  }

  const WeylElement& w = out.candidates.front();
  const long long shift = q.degree - rd.f() * W.d_w(w);
  auto poly = torus_poincare(rd, q.assumptions);
  if (!poly) {
    out.verdict = Verdict::TransferredToLevi;
    out.descriptor = "H^" + std::to_string(shift) + "(Z,k)";
    out.justification = "principal-series generic: Ext_G^r = H^{r-f*d_w}(Z,k), torus cohomology not evaluated";
    return out;
  }
  out.verdict = Verdict::Dimension;
  out.dimension = shift < static_cast<long long>(poly->size()) ? (*poly)[shift] : 0;
  out.descriptor = "H^" + std::to_string(shift) + "(Z,k)";
  out.justification = "principal-series generic: Ext_G^r = H^{r-f*d_w}(Z,k)";
  return out;
}

ExtPrediction predict_parabolic_ext(const WeylGroup& W, const ParabolicExtQuery& q) {
  W.check_subset(q.I);
  W.check_subset(q.K);
  if (q.degree < 0) throw InputError("Ext degree must be nonnegative");
  if (q.distinct_central && q.I == q.K && q.V == q.W)
    throw InputError("contradictory flags: V and W are the same representation but have distinct central characters");

  const RootDatum& rd = W.datum();
  const long long f = rd.f();
  const long long r = q.degree;
  const std::string rs = std::to_string(r);
  ExtPrediction out;

  if (q.I == q.K) {
    if (r < f) {
      if (q.distinct_central) {
        out.verdict = Verdict::Vanishes;
        out.justification = "equal parabolics, r < f: Ext_G^r = Ext_M^r(V,W), zero by distinct central characters";
      } else {
        out.verdict = Verdict::TransferredToLevi;
        out.descriptor = "Ext_M^" + rs + "(" + q.V + "," + q.W + ")";
        out.justification = "equal parabolics, r < f: parabolic induction is an isomorphism on Ext";
      }
      return out;
    }
    if (r == f) {
      if ((q.left_cuspidal || q.right_cuspidal) && q.distinct_central) {
        const auto sets = special_sets(rd, q.I);
        for (int a : sets.perp1.elements()) {
          HomSummand h;
          h.alpha = a;
          h.delta = delta_w(W, W.simple(a), CharMode::Formal);
          const std::string name = "a" + std::to_string(a + 1);
          h.descriptor = "Hom_M(delta_" + name + " ⊗ n_" + name + "^-1 " + q.V + ", " + q.W + ")";
          out.hom_sum.push_back(std::move(h));
        }
        out.verdict = out.hom_sum.empty() ? Verdict::Vanishes : Verdict::HomSum;
        out.justification = "equal parabolics, r = f, cuspidal with distinct central characters: sum over orthogonal simple roots with d = 1";
        return out;
      }
      const auto sets = special_sets(rd, q.I);
      std::string x;
      for (int a : (sets.delta1 - q.I).elements()) {
        const std::string name = "a" + std::to_string(a + 1);
        if (!x.empty()) x += " ⊕ ";
        x += "Hom(delta_" + name + " ⊗ n_" + name + "^-1 L^0(M∩n_" + name + "(U)," + q.V + "), R^0(n_" + name +
             "^-1(U)∩M," + q.W + "))";
      }
      if (x.empty()) x = "0";
      const std::string fs = std::to_string(f);
      out.verdict = Verdict::ExactSequence;
      out.descriptor = "0 -> Ext_M^" + fs + "(" + q.V + "," + q.W + ") -> Ext_G^" + fs + " -> X -> Ext_M^" +
                       std::to_string(f + 1) + "(" + q.V + "," + q.W + "), X = " + x;
      out.justification = "equal parabolics, r = f: four-term exact sequence";
      return out;
    }
    out.justification = "equal parabolics, r > f: no closed form";
    return out;
  }

  if (q.K.is_subset_of(q.I)) {  // P ⊋ Q
    if (q.left_cuspidal && r <= f) {
      out.verdict = Verdict::TransferredToLevi;
      out.descriptor = "Ext_M^" + rs + "(" + q.V + ", pInd_{M∩Q}^M " + q.W + ")";
      out.justification = "P contains Q, V left cuspidal, r <= f";
      return out;
    }
    out.justification = "P contains Q: needs V left cuspidal and r <= f";
    return out;
  }

  if (q.I.is_subset_of(q.K)) {  // P ⊊ Q
    if (q.right_cuspidal && r <= f) {
      out.verdict = Verdict::TransferredToLevi;
      out.descriptor = "Ext_L^" + rs + "(pInd_{P∩L}^L " + q.V + ", " + q.W + ")";
      out.justification = "P contained in Q, W right cuspidal, r <= f";
      return out;
    }
    out.justification = "P contained in Q: needs W right cuspidal and r <= f";
    return out;
  }

  if (q.left_cuspidal && q.right_cuspidal && r == 1) {
    out.verdict = Verdict::Vanishes;
    out.justification = "incomparable parabolics, V left cuspidal, W right cuspidal, r = 1";
    return out;
  }
  out.justification = "incomparable parabolics: only Ext^1 with both cuspidality flags is determined";
  return out;
}

ClaimCertificate claim_check(const WeylGroup& W) {
  const RootDatum& rd = W.datum();
  ClaimCertificate cert;
  for (int a = 0; a < rd.rank(); ++a) {
    const WeylElement& s = W.simple(a);  // s^{-1} = s
    for (Subset I : subsets_of(rd.all())) {
      auto sigma_m = rd.levi_roots(I);
      std::set<Root> sigma_m_set(sigma_m.begin(), sigma_m.end());
      for (Subset K : subsets_of(rd.all())) {
        ++cert.checked;
        auto sigma_l = rd.levi_roots(K);
        std::set<Root> sigma_l_set(sigma_l.begin(), sigma_l.end());
        bool first = true;
        for (const auto& r : rd.positive_roots())
          if (!RootDatum::supported_on(r, K) && sigma_m_set.count(s.apply(r))) {
            first = false;
            break;
          }
        if (!first) continue;
        bool second = true;
        for (const auto& r : rd.positive_roots())
          if (!RootDatum::supported_on(r, I) && sigma_l_set.count(s.apply(r))) {
            second = false;
            break;
          }
        if (!second) continue;
        ++cert.premises_held;
        if (I != K && cert.ok) {
          cert.ok = false;
          cert.counterexample = "alpha=a" + std::to_string(a + 1) + " I={" + I.to_string() + "} K={" +
                                K.to_string() + "}";
        }
      }
    }
  }
  return cert;
}

}  // namespace parind
