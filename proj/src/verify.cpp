#include "parind/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "parind/characters.hpp"
#include "parind/coinvariants.hpp"
#include "parind/error.hpp"
#include "parind/ext_predictor.hpp"
#include "parind/geom_lemma.hpp"
#include "parind/jh_lattice.hpp"

namespace parind {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.checks;
    if (!ok && r_.ok) {
      r_.ok = false;
      r_.counterexample = describe();
    }
  }
  SuiteResult result() && { return std::move(r_); }

 private:
  SuiteResult r_;
};

std::string ik(Subset I, Subset K) { return "I={" + I.to_string() + "} K={" + K.to_string() + "}"; }

std::string root_str(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ')';
  return os.str();
}

SuiteResult suite_roots(const WeylGroup& W) {
  Recorder rec("roots");
  const RootDatum& rd = W.datum();
  for (const auto& beta : rd.positive_roots()) {
    Root neg = beta;
    for (auto& x : neg) x = -x;
    rec.check(rd.is_root(neg) && rd.d(neg) == rd.d(beta), [&] { return "root " + root_str(beta) + ": negative missing or weighted differently"; });
    for (int i = 0; i < rd.rank(); ++i) {
      Root img = rd.reflect(i, beta);
      rec.check(rd.is_root(img) && rd.d(img) == rd.d(beta), [&] {
        return "s" + std::to_string(i + 1) + " maps root " + root_str(beta) + " to " + root_str(img) +
               " outside the root set or with a different weight";
      });
    }
  }
  std::size_t expected = 0;
  for (const auto& w : W.elements()) expected = std::max<std::size_t>(expected, w.length());
  rec.check(expected == rd.positive_roots().size(), [&] {
    return "length of the longest element " + std::to_string(expected) + " differs from the number of positive roots " +
           std::to_string(rd.positive_roots().size());
  });
  return std::move(rec).result();
}

// Double cosets W_I w W_K by closing {w} under left s_i (i ∈ I) and right s_k (k ∈ K).
SuiteResult suite_cosets(const WeylGroup& W) {
  Recorder rec("cosets");
  const Subset all = W.datum().all();
  for (Subset I : subsets_of(all))
    for (Subset K : subsets_of(all)) {
      std::vector<int> cls(W.size(), -1);
      std::vector<std::size_t> minimal;
      for (std::size_t start = 0; start < W.size(); ++start) {
        if (cls[start] >= 0) continue;
        const int c = static_cast<int>(minimal.size());
        std::vector<std::size_t> stack{start};
        cls[start] = c;
        std::size_t best = start;
        while (!stack.empty()) {
          std::size_t x = stack.back();
          stack.pop_back();
          if (W[x].length() < W[best].length()) best = x;
          std::vector<std::size_t> next;
          for (int i : I.elements()) next.push_back(W.multiply(W.simple(i), W[x]).index());
          for (int k : K.elements()) next.push_back(W.multiply(W[x], W.simple(k)).index());
          for (std::size_t y : next)
            if (cls[y] < 0) {
              cls[y] = c;
              stack.push_back(y);
            }
        }
        minimal.push_back(best);
      }
      auto reps = W.dml(I, K);
      rec.check(reps.size() == minimal.size(), [&] {
        return ik(I, K) + ": " + std::to_string(reps.size()) + " representatives but " +
               std::to_string(minimal.size()) + " double cosets";
      });
      std::set<int> seen;
      for (const auto* w : reps) {
        int c = cls[w->index()];
        bool unique_min = true;
        for (std::size_t x = 0; x < W.size(); ++x)
          if (cls[x] == c && x != w->index() && W[x].length() <= w->length()) unique_min = false;
        rec.check(seen.insert(c).second && unique_min, [&] {
          return ik(I, K) + " w=" + w->to_string() + ": not the unique shortest element of a new double coset";
        });
      }
    }
  return std::move(rec).result();
}

SuiteResult suite_dw_dim(const WeylGroup& W) {
  Recorder rec("dw_dim");
  const Subset all = W.datum().all();
  for (Subset I : subsets_of(all))
    for (Subset K : subsets_of(all))
      for (const auto* w : W.dml(I, K)) {
        auto cert = check_dw_dim(W, I, K, *w);
        rec.check(cert.ok, [&] {
          return ik(I, K) + " w=" + w->to_string() + ": f*d_w=" + std::to_string(cert.lhs) +
                 " dim=" + std::to_string(cert.rhs) + (cert.root_sets_equal ? "" : " (root sets differ)");
        });
      }
  return std::move(rec).result();
}

SuiteResult suite_cocycle(const WeylGroup& W) {
  Recorder rec("cocycle");
  const RootDatum& rd = W.datum();
  const Weight r = rho(rd);

  std::vector<Weight> alphas;
  for (const auto& w : W.elements()) {
    Weight a = alpha_w(W, w);
    rec.check(a == r - act(W.inverse(w), r), [&] { return "alpha_w != rho - w^-1 rho for w=" + w.to_string(); });
    alphas.push_back(a);
  }
  for (const auto& v : W.elements())
    for (const auto& w : W.elements()) {
      const auto& vw = W.multiply(v, w);
      rec.check(alphas[vw.index()] == alphas[w.index()] + act(W.inverse(w), alphas[v.index()]), [&] {
        return "cocycle identity fails for v=" + v.to_string() + " w=" + w.to_string();
      });
    }
  std::set<std::vector<Rational>> distinct;
  for (const auto& a : alphas) distinct.insert(a.coeffs());
  rec.check(distinct.size() == alphas.size(), [] { return "w -> alpha_w is not injective"; });

  for (int i = 0; i < rd.rank(); ++i)
    rec.check(pairing(rd, r, i) == Rational(rd.d_simple(i)), [&] {
      return "<rho, a" + std::to_string(i + 1) + "^vee> != d";
    });
  rec.check(is_twisting(rd, r), [] { return "rho is not a twisting element"; });

  std::vector<SmoothCharacter> chis{SmoothCharacter::trivial(rd, CharMode::Formal)};
  for (int i = 0; i < rd.rank(); ++i) {
    IntVec e(rd.rank(), 0);
    e[i] = 1;
    chis.push_back(SmoothCharacter::make(rd, CharMode::Formal, e));
    if (rd.p()) chis.push_back(SmoothCharacter::make(rd, CharMode::Concrete, e));
  }
  for (const auto& chi : chis) {
    std::vector<SmoothCharacter> starred;
    for (const auto& w : W.elements()) starred.push_back(star(W, chi, w));
    rec.check(chars_equal(starred[W.identity().index()], chi), [&] { return chi.to_string() + " * e != " + chi.to_string(); });
    for (const auto& v : W.elements())
      for (const auto& w : W.elements())
        rec.check(chars_equal(star(W, starred[v.index()], w), starred[W.multiply(v, w).index()]), [&] {
          return "(chi*v)*w != chi*(vw) for chi=" + chi.to_string() + " v=" + v.to_string() + " w=" + w.to_string();
        });
    if (chi.mode() == CharMode::Formal) {
      const Weight lambda = Weight::from_ints(chi.cyclo());
      for (const auto& w : W.elements()) {
        const auto& winv = W.inverse(w);
        rec.check(Weight::from_ints(starred[w.index()].cyclo()) == act(winv, lambda - r) + r, [&] {
          return "twisted factorization fails for chi=" + chi.to_string() + " w=" + w.to_string();
        });
      }
    }
  }
  return std::move(rec).result();
}

SuiteResult suite_kilmoyer(const WeylGroup& W) {
  Recorder rec("kilmoyer");
  const Subset all = W.datum().all();
  for (Subset J : subsets_of(all))
    for (Subset K : subsets_of(all))
      for (const auto* w : W.dml(J, K)) {
        auto res = W.kilmoyer(J, *w, K);
        rec.check(res.certified, [&] { return "J'={" + J.to_string() + "} K={" + K.to_string() + "} w=" + w->to_string(); });
      }
  return std::move(rec).result();
}

SuiteResult suite_claim(const WeylGroup& W) {
  Recorder rec("claim");
  auto cert = claim_check(W);
  rec.check(cert.ok, [&] { return cert.counterexample.value_or("claim failed"); });
  SuiteResult r = std::move(rec).result();
  r.checks = cert.checked;
  return r;
}

std::vector<std::vector<int>> orders_for(int rank) {
  std::vector<int> id(rank);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> out;
  if (rank <= 2) {
    do out.push_back(id);
    while (std::next_permutation(id.begin(), id.end()));
  } else {
    out.push_back(id);
    std::reverse(id.begin(), id.end());
    out.push_back(id);
  }
  return out;
}

SuiteResult suite_complex(const WeylGroup& W) {
  Recorder rec("complex");
  const RootDatum& rd = W.datum();
  const auto orders = orders_for(rd.rank());
  for (Subset I1 : subsets_of(rd.all()))
    for (Subset I0 : subsets_of(rd.all()))
      for (Subset I : subsets_of(I1))
        for (Subset K : subsets_of(I1)) {
          std::optional<std::vector<Subset>> reference;
          for (const auto& order : orders) {
            auto cx = build_complex(rd, ComplexParams{.I0 = I0, .I1 = I1, .I = I, .K = K, .order = order});
            auto describe = [&](const std::string& what) {
              std::string o;
              for (int k : order) o += (o.empty() ? "" : ",") + std::to_string(k + 1);
              return "I0={" + I0.to_string() + "} I1={" + I1.to_string() + "} I={" + I.to_string() + "} K={" +
                     K.to_string() + "} order=" + o + ": " + what;
            };
            rec.check(cx.squares_to_zero(), [&] { return describe("d o d != 0"); });
            auto groups = cohomology(cx);
            long long euler = 0;
            for (int n = 0; n >= cx.min_degree(); --n)
              euler += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(cx.term(n).basis.size());
            std::vector<Subset> h0;
            for (const auto& g : groups) {
              rec.check(g.degree == 0 || g.dimension == 0,
                        [&] { return describe("H^" + std::to_string(g.degree) + " != 0"); });
              if (g.degree == 0)
                for (const auto& [T, m] : g.multiplicity) {
                  rec.check(m == 1, [&] { return describe("H^0 constituent with multiplicity > 1"); });
                  h0.push_back(T);
                }
            }
            rec.check(MultFreeModule(K, h0) == h0_label(cx), [&] { return describe("H^0 differs from lattice label"); });
            rec.check(euler == static_cast<long long>(h0.size()), [&] { return describe("Euler characteristic mismatch"); });
            if (!reference) reference = h0;
            rec.check(*reference == h0, [&] { return describe("H^0 depends on the total order"); });
          }
        }
  return std::move(rec).result();
}

SuiteResult suite_steinberg(const WeylGroup& W) {
  Recorder rec("steinberg");
  const RootDatum& rd = W.datum();
  for (Subset I : subsets_of(rd.all()))
    for (Subset K : subsets_of(rd.all())) {
      std::map<std::size_t, const SummandDescriptor*> emitted;
      auto table = steinberg_coinvariants(W, I, K);
      for (const auto& [j, rows] : table)
        for (const auto& s : rows) emitted[s.w.index()] = &s;
      for (const auto* w : W.dml(I, K)) {
        auto cert = verify_by_resolution(W, I, K, *w);
        auto it = emitted.find(w->index());
        const bool included = it != emitted.end();
        bool agrees = cert.ok && cert.predicate == included;
        if (included) {
          const auto& s = *it->second;
          agrees = agrees && s.constituent && *s.constituent == cert.expected_label &&
                   s.degree == -rd.f() * W.d_w(*w) && s.ind_levi == W.preimage_in(*w, W.i_of_w(*w), K);
        }
        rec.check(agrees, [&] {
          return ik(I, K) + " w=" + w->to_string() + ": resolution " + (cert.ok ? "ok" : "failed") + ", predicate " +
                 (cert.predicate ? "true" : "false") + ", summand " + (included ? "emitted" : "omitted");
        });
      }
    }
  return std::move(rec).result();
}

SuiteResult suite_heights(const WeylGroup& W) {
  Recorder rec("heights");
  const RootDatum& rd = W.datum();
  const bool unweighted = std::all_of(rd.weights().begin(), rd.weights().end(), [](long long d) { return d == 1; });
  if (unweighted) {
    auto h = heights(W, Subset{}, Subset{});
    const int top = W.longest().length();
    for (const auto& w : W.elements())
      rec.check(h.at(w.index()) == top - w.length() + 1, [&] {
        return "I={} K={} w=" + w.to_string() + ": height " + std::to_string(h.at(w.index())) + ", expected " +
               std::to_string(top - w.length() + 1);
      });
  }
  for (Subset I : subsets_of(rd.all()))
    for (Subset K : subsets_of(rd.all())) {
      auto reps = W.dml(I, K);
      auto filt = graded_pieces(W, I, K, CharMode::Formal);
      rec.check(filt.piece_count() == reps.size(), [&] {
        return ik(I, K) + ": " + std::to_string(filt.piece_count()) + " graded pieces for " +
               std::to_string(reps.size()) + " orbits";
      });
      for (const auto& group : filt.groups) {
        rec.check(!group.empty(), [&] { return ik(I, K) + ": empty height level"; });
        for (const auto& p : group)
          rec.check(p.shift == -rd.f() * W.d_w(p.w), [&] {
            return ik(I, K) + " w=" + p.w.to_string() + ": shift " + std::to_string(p.shift);
          });
      }
    }
  return std::move(rec).result();
}

using SuiteFn = SuiteResult (*)(const WeylGroup&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"roots", suite_roots},         {"cosets", suite_cosets},   {"dw_dim", suite_dw_dim},
      {"cocycle", suite_cocycle},     {"kilmoyer", suite_kilmoyer}, {"claim", suite_claim},
      {"complex", suite_complex},     {"steinberg", suite_steinberg}, {"heights", suite_heights},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteResult run_suite(const WeylGroup& W, const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(W);
  throw InputError("unknown verification suite '" + name + "'");
}

std::vector<SuiteResult> run_suites(const WeylGroup& W, const std::string& which) {
  std::vector<SuiteResult> out;
  if (which == "all") {
    for (const auto& [n, fn] : registry()) out.push_back(fn(W));
  } else {
    out.push_back(run_suite(W, which));
  }
  return out;
}

}  // namespace parind
