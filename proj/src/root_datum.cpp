#include "parind/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "parind/error.hpp"

namespace parind {

namespace {

IntMatrix irreducible_cartan(char family, int n) {
  auto fail = [&] {
    throw InputError("unsupported root system type " + std::string(1, family) + std::to_string(n));
  };
  if (n < 1) fail();
  IntMatrix c = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](int i, int j) {
    c(i, j) = -1;
    c(j, i) = -1;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) fail();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) fail();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 4) fail();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) fail();
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) fail();
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c(1, 2) = -2;
      break;
    case 'G':
      if (n != 2) fail();
      c(0, 1) = -1;
      c(1, 0) = -3;  // alpha_1 short, alpha_2 long
      break;
    default:
      fail();
  }
  return c;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

}  // namespace

IntMatrix cartan_matrix_for(std::string_view type) {
  std::vector<IntMatrix> blocks;
  std::size_t pos = 0;
  while (pos <= type.size()) {
    std::size_t end = type.find_first_of("xX*", pos);
    if (end == std::string_view::npos) end = type.size();
    std::string_view part = type.substr(pos, end - pos);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (part.size() < 2) throw InputError("malformed root system type '" + std::string(type) + "'");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    int n = 0;
    for (char ch : part.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw InputError("malformed root system type '" + std::string(type) + "'");
      n = n * 10 + (ch - '0');
      if (n > Subset::kMaxRank) throw InputError("rank too large in '" + std::string(type) + "'");
    }
    blocks.push_back(irreducible_cartan(family, n));
    pos = end + 1;
  }
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.rows();
  IntMatrix c(total, total);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) c(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return c;
}

RootDatum RootDatum::build(const DatumSpec& spec) {
  RootDatum rd;
  if (spec.cartan) {
    rd.cartan_ = *spec.cartan;
    rd.label_ = spec.type.empty() ? "custom" : spec.type;
  } else {
    if (spec.type.empty()) throw InputError("datum spec needs a type or a cartan matrix");
    rd.cartan_ = cartan_matrix_for(spec.type);
    rd.label_ = spec.type;
  }
  const IntMatrix& c = rd.cartan_;
  if (c.rows() == 0 || c.rows() != c.cols()) throw InputError("cartan matrix must be square and nonempty");
  if (c.rows() > static_cast<std::size_t>(Subset::kMaxRank)) throw InputError("rank exceeds supported maximum");
  const int n = static_cast<int>(c.rows());
  rd.rank_ = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && c(i, j) != 2) throw InputError("cartan matrix needs 2 on the diagonal");
      if (i != j && c(i, j) > 0) throw InputError("cartan matrix off-diagonal entries must be <= 0");
      if (i != j && (c(i, j) == 0) != (c(j, i) == 0))
        throw InputError("cartan matrix zero pattern must be symmetric");
    }

  if (spec.d.empty()) {
    rd.d_simple_.assign(n, 1);
  } else {
    if (spec.d.size() != static_cast<std::size_t>(n)) throw InputError("weight vector d has wrong length");
    for (long long x : spec.d)
      if (x < 1) throw InputError("weights d must be positive");
    rd.d_simple_ = spec.d;
  }
  rd.z_dim_ = spec.z_dim.value_or(n);
  if (rd.z_dim_ < 0) throw InputError("z_dim must be nonnegative");
  if (spec.f < 1) throw InputError("f = [F:Q_p] must be positive");
  rd.f_ = spec.f;
  if (spec.p) {
    if (*spec.p == 2 || !is_prime(*spec.p)) throw InputError("p must be an odd prime");
    rd.p_ = spec.p;
  }

  // Reflection closure of the simple roots. A finite reduced system of rank n
  // has at most max(2n^2, 240) roots; anything larger is not of finite type.
  const std::size_t cap = 2 * std::max<std::size_t>(2 * n * n, 240);
  std::map<Root, long long> all;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root a = rd.simple_root(i);
    all.emplace(a, rd.d_simple_[i]);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    long long weight = all.at(beta);
    for (int j = 0; j < n; ++j) {
      Root gamma = rd.reflect(j, beta);
      bool pos = false, neg = false;
      for (long long x : gamma) {
        pos |= x > 0;
        neg |= x < 0;
      }
      if (pos == neg) throw InputError("cartan matrix is not of finite type (mixed-sign root)");
      auto [it, inserted] = all.emplace(gamma, weight);
      if (!inserted) {
        if (it->second != weight) throw InputError("weights d are not constant on Weyl orbits of roots");
        continue;
      }
      if (all.size() > cap) throw InputError("cartan matrix is not of finite type (reflection closure diverges)");
      queue.push_back(gamma);
    }
  }

  for (const auto& [r, w] : all) {
    if (!is_positive(r)) continue;
    Root neg = r;
    for (auto& x : neg) x = -x;
    if (!all.count(neg)) throw InputError("root system is not symmetric under negation");
    rd.positive_.push_back(r);
  }
  auto height = [](const Root& r) {
    long long h = 0;
    for (long long x : r) h += x;
    return h;
  };
  std::sort(rd.positive_.begin(), rd.positive_.end(), [&](const Root& a, const Root& b) {
    long long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (std::size_t k = 0; k < rd.positive_.size(); ++k) {
    rd.index_.emplace(rd.positive_[k], k);
    rd.positive_d_.push_back(all.at(rd.positive_[k]));
  }
  return rd;
}

std::optional<std::size_t> RootDatum::positive_index(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootDatum::is_positive(const Root& r) {
  bool any = false;
  for (long long x : r) {
    if (x < 0) return false;
    any |= x > 0;
  }
  return any;
}

bool RootDatum::is_root(const Root& r) const {
  if (positive_index(r)) return true;
  Root neg = r;
  for (auto& x : neg) x = -x;
  return positive_index(neg).has_value();
}

long long RootDatum::d(const Root& r) const {
  if (auto k = positive_index(r)) return positive_d_[*k];
  Root neg = r;
  for (auto& x : neg) x = -x;
  if (auto k = positive_index(neg)) return positive_d_[*k];
  throw InputError("d requested for a vector that is not a root");
}

long long RootDatum::pairing(const IntVec& lambda, int i) const {
  long long s = 0;
  for (int k = 0; k < rank_; ++k) s += lambda[k] * cartan_(k, i);
  return s;
}

IntVec RootDatum::reflect(int i, IntVec lambda) const {
  lambda[i] -= pairing(lambda, i);
  return lambda;
}

Root RootDatum::simple_root(int i) const {
  Root r(rank_, 0);
  r[i] = 1;
  return r;
}

std::optional<int> RootDatum::simple_index(const Root& r) const {
  int found = -1;
  for (int k = 0; k < static_cast<int>(r.size()); ++k) {
    if (r[k] == 0) continue;
    if (r[k] != 1 || found >= 0) return std::nullopt;
    found = k;
  }
  if (found < 0) return std::nullopt;
  return found;
}

bool RootDatum::supported_on(const Root& r, Subset J) {
  for (int k = 0; k < static_cast<int>(r.size()); ++k)
    if (r[k] != 0 && !J.contains(k)) return false;
  return true;
}

std::vector<Root> RootDatum::levi_positive_roots(Subset J) const {
  std::vector<Root> out;
  for (const auto& r : positive_)
    if (supported_on(r, J)) out.push_back(r);
  return out;
}

std::vector<Root> RootDatum::levi_roots(Subset J) const {
  std::vector<Root> out = levi_positive_roots(J);
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k) {
    Root neg = out[k];
    for (auto& x : neg) x = -x;
    out.push_back(std::move(neg));
  }
  return out;
}

}  // namespace parind
