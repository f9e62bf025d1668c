#include "parind/geom_lemma.hpp"

#include <algorithm>
#include <set>

#include "parind/error.hpp"

namespace parind {

namespace {

void require_in_dml(const WeylGroup& W, Subset I, Subset K, const WeylElement& w, const char* op) {
  W.check_subset(I);
  W.check_subset(K);
  if (!W.in_D(I, w, K))
    throw PreconditionError(std::string(op) + ": " + w.to_string() + " is not in D_{" + I.to_string() + "," +
                            K.to_string() + "}");
}

Root negate(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

// Roots of the standard parabolic P_J: Sigma^+ together with -Sigma_J^+.
std::vector<Root> parabolic_roots(const RootDatum& rd, Subset J) {
  std::vector<Root> out = rd.positive_roots();
  for (const auto& r : rd.levi_positive_roots(J)) out.push_back(negate(r));
  return out;
}

long long weighted(const RootDatum& rd, const std::vector<Root>& roots) {
  long long s = 0;
  for (const auto& r : roots) s += rd.d(r);
  return s;
}

}  // namespace

std::size_t Filtration::piece_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

bool closure_leq(const WeylGroup& W, Subset I, Subset K, const WeylElement& w, const WeylElement& w2) {
  require_in_dml(W, I, K, w, "closure_leq");
  require_in_dml(W, I, K, w2, "closure_leq");
  return W.bruhat_leq(w2, w);
}

long long orbit_dim(const WeylGroup& W, Subset I, Subset K, const WeylElement& w) {
  require_in_dml(W, I, K, w, "orbit_dim");
  const RootDatum& rd = W.datum();
  auto p_roots = parabolic_roots(rd, I);
  auto q_roots = parabolic_roots(rd, K);
  std::set<Root> wq;
  for (const auto& r : q_roots) wq.insert(w.apply(r));
  std::vector<Root> meet;
  for (const auto& r : p_roots)
    if (wq.count(r)) meet.push_back(r);
  const long long dim_p = rd.z_dim() + weighted(rd, p_roots);
  const long long dim_q = rd.z_dim() + weighted(rd, q_roots);
  const long long dim_meet = rd.z_dim() + weighted(rd, meet);
  return dim_p + dim_q - dim_meet;
}

std::map<std::size_t, int> heights(const WeylGroup& W, Subset I, Subset K) {
  auto reps = W.dml(I, K);
  std::map<std::size_t, long long> dims;
  for (const auto* w : reps) dims[w->index()] = orbit_dim(W, I, K, *w);

  std::map<std::size_t, int> out;
  std::vector<const WeylElement*> remaining = reps;
  int level = 0;
  while (!remaining.empty()) {
    ++level;
    // Open orbits of what is left: those not in the closure of another remaining orbit.
    std::vector<const WeylElement*> open;
    for (const auto* w : remaining) {
      bool dominated = false;
      for (const auto* u : remaining)
        if (u != w && W.bruhat_leq(*w, *u)) {
          dominated = true;
          break;
        }
      if (!dominated) open.push_back(w);
    }
    long long top = 0;
    for (const auto* w : open) top = std::max(top, dims[w->index()]);
    std::vector<const WeylElement*> rest;
    for (const auto* w : remaining) {
      bool peel = std::find(open.begin(), open.end(), w) != open.end() && dims[w->index()] == top;
      if (peel)
        out[w->index()] = level;
      else
        rest.push_back(w);
    }
    remaining = std::move(rest);
  }
  return out;
}

Filtration graded_pieces(const WeylGroup& W, Subset I, Subset K, CharMode mode) {
  auto reps = W.dml(I, K);
  auto h = heights(W, I, K);
  int top = 0;
  for (const auto& [idx, v] : h) top = std::max(top, v);
  Filtration filt;
  filt.groups.resize(top);
  for (const auto* w : reps) {
    GradedPiece piece;
    piece.w = *w;
    piece.shift = -W.datum().f() * W.d_w(*w);
    piece.delta = delta_w(W, *w, mode);
    auto kil = W.kilmoyer(I, *w, K);
    if (!kil.certified) throw std::logic_error("graded_pieces: Kilmoyer identity failed for " + w->to_string());
    piece.coinv_levi = kil.subset;
    piece.ind_levi = W.preimage_in(*w, I, K);
    piece.height = h.at(w->index());
    filt.groups[piece.height - 1].push_back(std::move(piece));
  }
  return filt;
}

DwDimCertificate check_dw_dim(const WeylGroup& W, Subset I, Subset K, const WeylElement& w) {
  require_in_dml(W, I, K, w, "check_dw_dim");
  const RootDatum& rd = W.datum();

  // Sigma_N = Sigma^+ \ Sigma_K^+, Sigma_Ubar = -(Sigma^+ \ Sigma_I^+).
  std::set<Root> ubar;
  for (const auto& r : rd.positive_roots())
    if (!RootDatum::supported_on(r, I)) ubar.insert(negate(r));
  std::set<Root> lhs_set;
  for (const auto& r : rd.positive_roots()) {
    if (RootDatum::supported_on(r, K)) continue;
    // r ∈ w^{-1}(Sigma_Ubar) iff w(r) ∈ Sigma_Ubar
    if (ubar.count(w.apply(r))) lhs_set.insert(r);
  }
  auto inv = W.inversion_set(w);
  std::set<Root> inv_set(inv.begin(), inv.end());

  DwDimCertificate cert;
  cert.lhs = rd.f() * W.d_w(w);
  long long s = 0;
  for (const auto& r : lhs_set) s += rd.d(r);
  cert.rhs = rd.f() * s;
  cert.root_sets_equal = lhs_set == inv_set;
  cert.ok = cert.root_sets_equal && cert.lhs == cert.rhs;
  return cert;
}

}  // namespace parind
