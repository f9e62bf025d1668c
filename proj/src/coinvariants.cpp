#include "parind/coinvariants.hpp"

#include "parind/error.hpp"

namespace parind {

CoinvariantTable ps_coinvariants(const WeylGroup& W, Subset I, Subset K, const SmoothCharacter& chi,
                                 const SymbolAction& action) {
  CoinvariantTable out;
  for (const auto* w : W.dml(I, K)) {
    SummandDescriptor s;
    const long long j = W.datum().f() * W.d_w(*w);
    s.degree = -j;
    s.w = *w;
    s.ind_levi = W.preimage_in(*w, I, K);
    // M ∩ n_w(N) acts trivially on a character, so its coinvariants return chi itself.
    s.character = star(W, chi, *w, action);
    out[j].push_back(std::move(s));
  }
  return out;
}

CoinvariantTable steinberg_coinvariants(const WeylGroup& W, Subset I, Subset K, CharMode mode) {
  CoinvariantTable out;
  for (const auto* w : W.dml(I, K)) {
    const Subset iw = W.i_of_w(*w);
    const Subset wk = W.image(*w, K);
    if (!(iw - I).is_subset_of(wk)) continue;
    auto kil = W.kilmoyer(I, *w, K);
    if (!kil.certified) throw std::logic_error("steinberg_coinvariants: Kilmoyer identity failed");
    SummandDescriptor s;
    const long long j = W.datum().f() * W.d_w(*w);
    s.degree = -j;
    s.w = *w;
    s.ind_levi = W.preimage_in(*w, iw, K);
    s.character = delta_w(W, *w, mode);
    s.constituent = SteinbergLabel{iw & wk, kil.subset};
    out[j].push_back(std::move(s));
  }
  return out;
}

std::map<long long, std::vector<CorollaryTerm>> steinberg_corollary(const WeylGroup& W, Subset I, CharMode mode) {
  std::map<long long, std::vector<CorollaryTerm>> out;
  for (const auto* w : W.dml(I, Subset{})) {
    if (W.i_of_w(*w) != I) continue;
    out[W.datum().f() * W.d_w(*w)].push_back({*w, delta_w(W, *w, mode)});
  }
  return out;
}

ResolutionCertificate verify_by_resolution(const WeylGroup& W, Subset I, Subset K, const WeylElement& w) {
  W.check_subset(I);
  W.check_subset(K);
  if (!W.in_D(I, w, K))
    throw PreconditionError("verify_by_resolution: " + w.to_string() + " is not in D_{" + I.to_string() + "," +
                            K.to_string() + "}");
  const Subset iw = W.i_of_w(w);
  const Subset wk = W.image(w, K);

  ResolutionCertificate cert;
  cert.predicate = (iw - I).is_subset_of(wk);
  cert.expected_label = SteinbergLabel{iw & wk, I & wk};

  auto cx = build_complex(W.datum(), ComplexParams{.I0 = I, .I1 = iw, .I = I, .K = iw & wk, .order = {}});
  auto groups = cohomology(cx);
  cert.lower_vanishes = true;
  std::vector<Subset> h0;
  bool multiplicity_one = true;
  for (const auto& g : groups) {
    if (g.degree < 0 && g.dimension != 0) cert.lower_vanishes = false;
    if (g.degree == 0)
      for (const auto& [T, mult] : g.multiplicity) {
        if (mult != 1) multiplicity_one = false;
        h0.push_back(T);
      }
  }
  cert.h0 = MultFreeModule(iw & wk, h0);
  if (cert.predicate)
    cert.h0_matches = cert.h0.size() == 1 && cert.h0.constituents().front() == cert.expected_label.base;
  else
    cert.h0_matches = cert.h0.empty();
  cert.h0_matches = cert.h0_matches && multiplicity_one;
  cert.ok = cert.lower_vanishes && cert.h0_matches;
  return cert;
}

}  // namespace parind
