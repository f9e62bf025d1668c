#include "parind/weyl.hpp"

#include <algorithm>
#include <set>

#include "parind/error.hpp"

namespace parind {

std::string WeylElement::to_string() const {
  if (word_.empty()) return "e";
  std::string s;
  for (int i : word_) s += "s" + std::to_string(i + 1);
  return s;
}

WeylGroup::WeylGroup(RootDatum rd) : rd_(std::move(rd)) {
  const int n = rd_.rank();
  std::vector<IntMatrix> reflections;
  for (int i = 0; i < n; ++i) {
    IntMatrix s(n, n);
    for (int j = 0; j < n; ++j) {
      IntVec col = rd_.reflect(i, rd_.simple_root(j));
      for (int r = 0; r < n; ++r) s(r, j) = col[r];
    }
    reflections.push_back(std::move(s));
  }

  WeylElement e;
  e.action_ = IntMatrix::identity(n);
  elements_.push_back(e);
  by_action_.emplace(e.action_.data(), 0);

  // Breadth-first by length. Prepending letters in increasing order to the
  // previous level (itself in lex order) reaches every element first through
  // its lexicographically smallest reduced word.
  std::vector<std::size_t> level{0};
  while (!level.empty()) {
    std::vector<std::size_t> next;
    for (int i = 0; i < n; ++i) {
      for (std::size_t u : level) {
        IntMatrix a = reflections[i] * elements_[u].action_;
        if (by_action_.count(a.data())) continue;
        WeylElement w;
        w.word_.reserve(elements_[u].word_.size() + 1);
        w.word_.push_back(i);
        w.word_.insert(w.word_.end(), elements_[u].word_.begin(), elements_[u].word_.end());
        w.action_ = std::move(a);
        w.index_ = elements_.size();
        by_action_.emplace(w.action_.data(), w.index_);
        next.push_back(w.index_);
        elements_.push_back(std::move(w));
      }
    }
    // `next` is grouped by first letter, which is already lex order.
    level = std::move(next);
  }

  left_mult_.assign(n, std::vector<std::size_t>(elements_.size()));
  for (int i = 0; i < n; ++i)
    for (const auto& w : elements_)
      left_mult_[i][w.index_] = by_action_.at((reflections[i] * w.action_).data());
  for (int i = 0; i < n; ++i) simple_.push_back(left_mult_[i][0]);

  inverse_.resize(elements_.size());
  for (const auto& w : elements_) {
    std::size_t x = 0;
    for (int letter : w.word_) x = left_mult_[letter][x];  // reversed word: s_{k}...s_{1}
    inverse_[w.index_] = x;
  }
}

const WeylElement& WeylGroup::multiply(const WeylElement& v, const WeylElement& w) const {
  return elements_[by_action_.at((v.action() * w.action()).data())];
}

const WeylElement& WeylGroup::from_word(std::span<const int> word) const {
  std::size_t x = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rank()) throw InputError("Weyl word letter out of range");
    x = left_mult_[*it][x];
  }
  return elements_[x];
}

const WeylElement* WeylGroup::find(const IntMatrix& action) const {
  auto it = by_action_.find(action.data());
  if (it == by_action_.end() || action.rows() != static_cast<std::size_t>(rank())) return nullptr;
  return &elements_[it->second];
}

std::vector<Root> WeylGroup::inversion_set(const WeylElement& w) const {
  std::vector<Root> out;
  for (const auto& beta : rd_.positive_roots())
    if (!RootDatum::is_positive(w.apply(beta))) out.push_back(beta);
  return out;
}

long long WeylGroup::d_w(const WeylElement& w) const {
  long long s = 0;
  for (const auto& beta : inversion_set(w)) s += rd_.d(beta);
  return s;
}

bool WeylGroup::bruhat_leq_idx(std::size_t v, std::size_t w) const {
  while (true) {
    if (v == 0) return true;
    const auto& ww = elements_[w];
    if (ww.word_.empty()) return false;
    if (elements_[v].length() > ww.length()) return false;
    int s = ww.word_.front();
    std::size_t sw = left_mult_[s][w];
    std::size_t sv = left_mult_[s][v];
    if (elements_[sv].length() < elements_[v].length()) v = sv;
    w = sw;
  }
}

bool WeylGroup::bruhat_leq(const WeylElement& v, const WeylElement& w) const {
  return bruhat_leq_idx(v.index(), w.index());
}

bool WeylGroup::in_D(const WeylElement& w, Subset J) const {
  for (int j : J.elements())
    if (!RootDatum::is_positive(w.action().column(j))) return false;
  return true;
}

bool WeylGroup::in_D(Subset I, const WeylElement& w, Subset K) const {
  return in_D(w, K) && in_D(inverse(w), I);
}

void WeylGroup::check_subset(Subset J) const {
  if (!J.is_subset_of(rd_.all())) throw InputError("subset " + J.to_string() + " is not contained in the simple roots");
}

std::vector<const WeylElement*> WeylGroup::dml(Subset I, Subset K) const {
  check_subset(I);
  check_subset(K);
  std::vector<const WeylElement*> out;
  for (const auto& w : elements_)
    if (in_D(I, w, K)) out.push_back(&w);
  std::vector<long long> dw(elements_.size(), 0);
  for (const auto* w : out) dw[w->index()] = d_w(*w);
  std::sort(out.begin(), out.end(), [&](const WeylElement* a, const WeylElement* b) {
    if (dw[a->index()] != dw[b->index()]) return dw[a->index()] < dw[b->index()];
    if (a->length() != b->length()) return a->length() < b->length();
    return a->word() < b->word();
  });
  return out;
}

Subset WeylGroup::i_of_w(const WeylElement& w) const {
  const auto& inv = inverse(w);
  Subset out;
  for (int i = 0; i < rank(); ++i)
    if (RootDatum::is_positive(inv.action().column(i))) out = out.with(i);
  return out;
}

Subset WeylGroup::image(const WeylElement& w, Subset K) const {
  const auto& inv = inverse(w);
  Subset out;
  for (int i = 0; i < rank(); ++i) {
    auto k = rd_.simple_index(inv.action().column(i));
    if (k && K.contains(*k)) out = out.with(i);
  }
  return out;
}

Subset WeylGroup::preimage_in(const WeylElement& w, Subset I, Subset K) const {
  Subset out;
  for (int k : K.elements()) {
    auto i = rd_.simple_index(w.action().column(k));
    if (i && I.contains(*i)) out = out.with(k);
  }
  return out;
}

KilmoyerResult WeylGroup::kilmoyer(Subset Jp, const WeylElement& w, Subset K) const {
  check_subset(Jp);
  check_subset(K);
  if (!in_D(Jp, w, K))
    throw PreconditionError("kilmoyer: " + w.to_string() + " is not in D_{" + Jp.to_string() + "," +
                            K.to_string() + "}");
  KilmoyerResult res{Jp & image(w, K), false};

  std::set<Root> image_of_K;
  for (const auto& beta : rd_.levi_roots(K)) image_of_K.insert(w.apply(beta));
  std::set<Root> lhs;
  for (const auto& gamma : rd_.levi_roots(Jp))
    if (image_of_K.count(gamma)) lhs.insert(gamma);
  auto rhs_vec = rd_.levi_roots(res.subset);
  std::set<Root> rhs(rhs_vec.begin(), rhs_vec.end());
  res.certified = lhs == rhs;
  return res;
}

std::vector<const WeylElement*> WeylGroup::parabolic_subgroup(Subset J) const {
  std::vector<const WeylElement*> out;
  for (const auto& w : elements_) {
    bool inside = true;
    for (int letter : w.word_) inside &= J.contains(letter);
    if (inside) out.push_back(&w);
  }
  return out;
}

}  // namespace parind
