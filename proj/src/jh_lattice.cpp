#include "parind/jh_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "parind/error.hpp"

namespace parind {

MultFreeModule::MultFreeModule(Subset ambient, std::vector<Subset> constituents)
    : ambient_(ambient), constituents_(std::move(constituents)) {
  for (Subset J : constituents_)
    if (!J.is_subset_of(ambient_)) throw InputError("constituent " + J.to_string() + " outside ambient set");
  std::sort(constituents_.begin(), constituents_.end());
  constituents_.erase(std::unique(constituents_.begin(), constituents_.end()), constituents_.end());
}

bool MultFreeModule::contains(Subset J) const {
  return std::binary_search(constituents_.begin(), constituents_.end(), J);
}

bool MultFreeModule::upward_closed() const {
  for (Subset J : constituents_)
    for (int k : (ambient_ - J).elements())
      if (!contains(J.with(k))) return false;
  return true;
}

MultFreeModule jh_of_pind(Subset K, Subset S) {
  if (!S.is_subset_of(K)) throw InputError("jh_of_pind: " + S.to_string() + " is not contained in " + K.to_string());
  std::vector<Subset> out;
  for (Subset extra : subsets_of(K - S)) out.push_back(S | extra);
  return MultFreeModule(K, std::move(out));
}

MultFreeModule lattice_sum(const MultFreeModule& a, const MultFreeModule& b) {
  if (a.ambient() != b.ambient()) throw InputError("lattice_sum: ambient sets differ");
  std::vector<Subset> out;
  std::set_union(a.constituents().begin(), a.constituents().end(), b.constituents().begin(),
                 b.constituents().end(), std::back_inserter(out));
  return MultFreeModule(a.ambient(), std::move(out));
}

MultFreeModule lattice_intersect(const MultFreeModule& a, const MultFreeModule& b) {
  if (a.ambient() != b.ambient()) throw InputError("lattice_intersect: ambient sets differ");
  std::vector<Subset> out;
  std::set_intersection(a.constituents().begin(), a.constituents().end(), b.constituents().begin(),
                        b.constituents().end(), std::back_inserter(out));
  return MultFreeModule(a.ambient(), std::move(out));
}

const ComplexTerm& CoefficientComplex::term(int degree) const {
  if (degree > 0 || degree < min_degree()) throw std::out_of_range("complex term degree out of range");
  return terms_[-degree];
}

const IntMatrix& CoefficientComplex::differential(int degree) const {
  if (degree >= 0 || degree < min_degree()) throw std::out_of_range("complex differential degree out of range");
  return differentials_[-degree - 1];
}

bool CoefficientComplex::squares_to_zero() const {
  for (std::size_t k = 1; k < differentials_.size(); ++k)
    if (!(differentials_[k - 1] * differentials_[k]).is_zero()) return false;
  return true;
}

int complex_sign(const ComplexParams& params, Subset J, int j0) {
  std::vector<int> pos(Subset::kMaxRank, 0);
  if (params.order.empty()) {
    std::iota(pos.begin(), pos.end(), 0);
  } else {
    for (std::size_t k = 0; k < params.order.size(); ++k) pos[params.order[k]] = static_cast<int>(k);
  }
  int count = 0;
  for (int j : (params.I0 | J).elements())
    if (pos[j] < pos[j0]) ++count;
  return count % 2 == 0 ? 1 : -1;
}

CoefficientComplex build_complex(const RootDatum& rd, ComplexParams params) {
  const Subset all = rd.all();
  if (!params.I0.is_subset_of(all) || !params.I1.is_subset_of(all))
    throw InputError("build_complex: I0 and I1 must be subsets of the simple roots");
  if (!params.I.is_subset_of(params.I1) || !params.K.is_subset_of(params.I1))
    throw InputError("build_complex: I and K must be subsets of I1");
  if (!params.order.empty()) {
    std::vector<int> sorted = params.order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(rd.rank());
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) throw InputError("build_complex: order must be a permutation of the simple roots");
  }

  CoefficientComplex cx;
  cx.params_ = params;
  const Subset free = params.I1 - params.I0;
  const int m = free.size();

  std::vector<std::map<std::pair<std::size_t, Subset>, std::size_t>> lookup(m + 1);
  std::vector<std::map<Subset, std::size_t>> summand_pos(m + 1);
  cx.terms_.resize(m + 1);
  for (Subset J : subsets_of(free)) {
    ComplexTerm& t = cx.terms_[J.size()];
    summand_pos[J.size()][J] = t.summands.size();
    t.summands.push_back(J);
    t.modules.push_back(jh_of_pind(params.K, (params.I | J) & params.K));
  }
  for (int k = 0; k <= m; ++k) {
    ComplexTerm& t = cx.terms_[k];
    t.degree = -k;
    for (std::size_t s = 0; s < t.summands.size(); ++s)
      for (Subset T : t.modules[s].constituents()) {
        lookup[k][{s, T}] = t.basis.size();
        t.basis.emplace_back(s, T);
      }
  }

  for (int k = 0; k < m; ++k) {
    const ComplexTerm& target = cx.terms_[k];
    const ComplexTerm& source = cx.terms_[k + 1];
    IntMatrix d(target.basis.size(), source.basis.size());
    for (std::size_t col = 0; col < source.basis.size(); ++col) {
      const auto& [s, T] = source.basis[col];
      Subset J = source.summands[s];
      for (int j0 : J.elements()) {
        Subset smaller = J.without(j0);
        std::size_t tpos = summand_pos[k].at(smaller);
        // The inclusion pInd_{(I∪J)∩K} -> pInd_{(I∪J\{j0})∩K} is the identity on shared constituents.
        std::size_t row = lookup[k].at({tpos, T});
        d(row, col) += complex_sign(params, smaller, j0);
      }
    }
    cx.differentials_.push_back(std::move(d));
  }
  return cx;
}

namespace {

std::vector<std::size_t> positions_of(const ComplexTerm& t, Subset T) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.basis.size(); ++i)
    if (t.basis[i].second == T) out.push_back(i);
  return out;
}

}  // namespace

std::vector<CohomologyGroup> cohomology(const CoefficientComplex& cx) {
  const int lo = cx.min_degree();
  std::vector<Subset> constituents;
  for (int n = 0; n >= lo; --n)
    for (const auto& [s, T] : cx.term(n).basis) constituents.push_back(T);
  std::sort(constituents.begin(), constituents.end());
  constituents.erase(std::unique(constituents.begin(), constituents.end()), constituents.end());

  // rank of d^n in total and per constituent block
  std::map<int, std::size_t> total_rank;
  std::map<std::pair<int, Subset>, std::size_t> block_rank;
  for (int n = lo; n < 0; ++n) {
    const IntMatrix& d = cx.differential(n);
    total_rank[n] = rank(d);
    std::size_t sum = 0;
    for (Subset T : constituents) {
      auto rows = positions_of(cx.term(n + 1), T);
      auto cols = positions_of(cx.term(n), T);
      std::size_t r = (rows.empty() || cols.empty()) ? 0 : rank(select(d, rows, cols));
      block_rank[{n, T}] = r;
      sum += r;
    }
    if (sum != total_rank[n]) throw std::logic_error("cohomology: differential is not block diagonal by constituent");
  }

  std::vector<CohomologyGroup> out;
  for (int n = 0; n >= lo; --n) {
    CohomologyGroup h;
    h.degree = n;
    for (Subset T : constituents) {
      std::size_t dim = positions_of(cx.term(n), T).size();
      std::size_t outgoing = n < 0 ? block_rank[{n, T}] : 0;
      std::size_t incoming = n > lo ? block_rank[{n - 1, T}] : 0;
      std::size_t hdim = dim - outgoing - incoming;
      if (hdim > 0) h.multiplicity[T] = hdim;
      h.dimension += hdim;
    }
    out.push_back(std::move(h));
  }
  return out;
}

MultFreeModule h0_label(const CoefficientComplex& cx) {
  const ComplexParams& p = cx.params();
  MultFreeModule top = jh_of_pind(p.K, p.I & p.K);
  MultFreeModule image(p.K, {});
  for (int j : (p.I1 - p.I0).elements()) image = lattice_sum(image, jh_of_pind(p.K, (p.I.with(j)) & p.K));
  std::vector<Subset> rest;
  for (Subset T : top.constituents())
    if (!image.contains(T)) rest.push_back(T);
  return MultFreeModule(p.K, std::move(rest));
}

}  // namespace parind
