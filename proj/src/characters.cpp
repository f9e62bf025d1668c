#include "parind/characters.hpp"

#include "parind/error.hpp"

namespace parind {

Weight Weight::from_ints(const IntVec& v) {
  Weight w(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) w.c_[i] = v[i];
  return w;
}

bool Weight::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Weight::is_integral() const {
  for (const auto& x : c_)
    if (boost::multiprecision::denominator(x) != 1) return false;
  return true;
}

IntVec Weight::to_ints() const {
  if (!is_integral()) throw InputError("weight " + to_string() + " is not integral");
  IntVec v;
  for (const auto& x : c_) v.push_back(static_cast<long long>(boost::multiprecision::numerator(x)));
  return v;
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Weight Weight::operator*(const Rational& k) const {
  Weight r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

std::string Weight::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].str();
  }
  return s + "]";
}

Weight act(const WeylElement& w, const Weight& lambda) {
  const IntMatrix& a = w.action();
  Weight out(lambda.rank());
  for (int r = 0; r < lambda.rank(); ++r)
    for (int c = 0; c < lambda.rank(); ++c)
      if (a(r, c) != 0) out[r] += a(r, c) * lambda[c];
  return out;
}

Rational pairing(const RootDatum& rd, const Weight& lambda, int i) {
  Rational s = 0;
  for (int k = 0; k < rd.rank(); ++k) s += lambda[k] * rd.cartan()(k, i);
  return s;
}

Weight alpha_w(const WeylGroup& W, const WeylElement& w) {
  Weight sum(W.rank());
  for (const auto& beta : W.inversion_set(w)) sum = sum + Weight::from_ints(beta) * W.datum().d(beta);
  return sum;
}

Weight rho(const RootDatum& rd) {
  Weight sum(rd.rank());
  for (const auto& beta : rd.positive_roots()) sum = sum + Weight::from_ints(beta) * rd.d(beta);
  return sum * Rational(1, 2);
}

bool is_twisting(const RootDatum& rd, const Weight& theta) {
  if (theta.rank() != rd.rank()) throw InputError("weight has wrong rank");
  for (int i = 0; i < rd.rank(); ++i)
    if (pairing(rd, theta, i) != rd.d_simple(i)) return false;
  return true;
}

void SymbolAction::declare(int simple, std::string symbol, SymbolImage image) {
  per_simple_[simple][std::move(symbol)] = std::move(image);
}

void SymbolAction::validate(const WeylGroup& W) const {
  if (is_trivial()) return;
  const RootDatum& rd = W.datum();
  std::map<std::string, SymbolImage> const* first = nullptr;
  for (int i = 0; i < rd.rank(); ++i) {
    auto it = per_simple_.find(i);
    if (it == per_simple_.end())
      throw InputError("symbol action: reflection s" + std::to_string(i + 1) + " is not declared");
    if (first) {
      for (const auto& [name, img] : it->second)
        if (!first->count(name)) throw InputError("symbol action: alphabets differ between reflections");
      if (first->size() != it->second.size()) throw InputError("symbol action: alphabets differ between reflections");
    }
    first = &it->second;
    for (const auto& [name, img] : it->second) {
      if (img.shift.size() != static_cast<std::size_t>(rd.rank()))
        throw InputError("symbol action: shift for '" + name + "' has wrong length");
      if (!it->second.count(img.to))
        throw InputError("symbol action: image '" + img.to + "' is not in the alphabet");
    }
  }
  for (const auto& [name, img] : *first) {
    auto basis = SmoothCharacter::make(rd, CharMode::Formal, IntVec(rd.rank(), 0), {{name, 1}});
    for (int i = 0; i < rd.rank(); ++i) {
      auto twice = basis.reflected(rd, i, *this).reflected(rd, i, *this);
      if (!chars_equal(twice, basis))
        throw InputError("symbol action: s" + std::to_string(i + 1) + " is not an involution on '" + name + "'");
    }
    for (const auto& w : W.elements()) {
      auto tw = basis.transported(W, w, *this);
      for (int i = 0; i < rd.rank(); ++i) {
        auto lhs = basis.transported(W, W.multiply(W.simple(i), w), *this);
        auto rhs = tw.reflected(rd, i, *this);
        if (!chars_equal(lhs, rhs))
          throw InputError("symbol action does not satisfy the braid relations (symbol '" + name + "')");
      }
    }
  }
}

SmoothCharacter SmoothCharacter::trivial(const RootDatum& rd, CharMode mode) {
  return make(rd, mode, IntVec(rd.rank(), 0));
}

SmoothCharacter SmoothCharacter::make(const RootDatum& rd, CharMode mode, IntVec cyclo,
                                      std::map<std::string, long long> sym) {
  if (cyclo.size() != static_cast<std::size_t>(rd.rank()))
    throw InputError("character cyclotomic part has length " + std::to_string(cyclo.size()) + ", expected " +
                     std::to_string(rd.rank()));
  SmoothCharacter chi;
  chi.mode_ = mode;
  if (mode == CharMode::Concrete) {
    if (!rd.p()) throw InputError("concrete character mode requires the datum to set p");
    chi.modulus_ = *rd.p() - 1;
  }
  chi.cyclo_ = std::move(cyclo);
  chi.sym_ = std::move(sym);
  chi.normalize();
  return chi;
}

void SmoothCharacter::normalize() {
  if (mode_ == CharMode::Concrete)
    for (auto& x : cyclo_) x = ((x % modulus_) + modulus_) % modulus_;
  std::erase_if(sym_, [](const auto& kv) { return kv.second == 0; });
}

bool SmoothCharacter::is_trivial() const {
  if (!sym_.empty()) return false;
  for (long long x : cyclo_)
    if (x != 0) return false;
  return true;
}

SmoothCharacter SmoothCharacter::operator*(const SmoothCharacter& o) const {
  if (mode_ != o.mode_ || modulus_ != o.modulus_ || cyclo_.size() != o.cyclo_.size())
    throw InputError("cannot multiply characters of different modes or ranks");
  SmoothCharacter r = *this;
  for (std::size_t i = 0; i < cyclo_.size(); ++i) r.cyclo_[i] += o.cyclo_[i];
  for (const auto& [k, v] : o.sym_) r.sym_[k] += v;
  r.normalize();
  return r;
}

SmoothCharacter SmoothCharacter::inverse() const {
  SmoothCharacter r = *this;
  for (auto& x : r.cyclo_) x = -x;
  for (auto& [k, v] : r.sym_) v = -v;
  r.normalize();
  return r;
}

SmoothCharacter SmoothCharacter::reflected(const RootDatum& rd, int i, const SymbolAction& action) const {
  SmoothCharacter r = *this;
  r.cyclo_ = rd.reflect(i, cyclo_);
  if (!action.is_trivial() && !sym_.empty()) {
    auto table = action.per_simple_.find(i);
    r.sym_.clear();
    for (const auto& [name, n] : sym_) {
      if (table == action.per_simple_.end() || !table->second.count(name))
        throw InputError("no declared action of s" + std::to_string(i + 1) + " on symbol '" + name + "'");
      const SymbolImage& img = table->second.at(name);
      r.sym_[img.to] += n;
      for (int k = 0; k < rd.rank(); ++k) r.cyclo_[k] += n * img.shift[k];
    }
  }
  r.normalize();
  return r;
}

SmoothCharacter SmoothCharacter::transported(const WeylGroup& W, const WeylElement& w,
                                             const SymbolAction& action) const {
  SmoothCharacter r = *this;
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = r.reflected(W.datum(), *it, action);
  return r;
}

std::string SmoothCharacter::to_string() const {
  std::string s = "eps_F^[";
  for (std::size_t i = 0; i < cyclo_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cyclo_[i]);
  }
  s += "]";
  if (mode_ == CharMode::Concrete) s += " mod " + std::to_string(modulus_);
  for (const auto& [k, v] : sym_) s += " * " + k + "^" + std::to_string(v);
  return s;
}

bool chars_equal(const SmoothCharacter& a, const SmoothCharacter& b) {
  if (a.mode_ != b.mode_ || a.modulus_ != b.modulus_)
    throw InputError("cannot compare characters in different modes");
  return a.cyclo_ == b.cyclo_ && a.sym_ == b.sym_;
}

SmoothCharacter delta_w(const WeylGroup& W, const WeylElement& w, CharMode mode) {
  return SmoothCharacter::make(W.datum(), mode, alpha_w(W, w).to_ints());
}

SmoothCharacter star(const WeylGroup& W, const SmoothCharacter& chi, const WeylElement& w,
                     const SymbolAction& action) {
  return delta_w(W, w, chi.mode()) * chi.transported(W, W.inverse(w), action);
}

}  // namespace parind
