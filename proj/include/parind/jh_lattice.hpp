#pragma once

#include <map>
#include <vector>

#include "parind/linalg.hpp"
#include "parind/root_datum.hpp"
#include "parind/subset.hpp"

namespace parind {

/// Multiplicity-free module over M_K recorded by its Jordan-Hölder set: each
/// constituent J (with J ⊆ K) stands for the generalized Steinberg Sp_{P_J}^{M_K}.
class MultFreeModule {
 public:
  MultFreeModule() = default;
  MultFreeModule(Subset ambient, std::vector<Subset> constituents);

  Subset ambient() const { return ambient_; }
  const std::vector<Subset>& constituents() const { return constituents_; }
  std::size_t size() const { return constituents_.size(); }
  bool empty() const { return constituents_.empty(); }
  bool contains(Subset J) const;
  /// Closed under passing to larger subsets inside the ambient set.
  bool upward_closed() const;

  bool operator==(const MultFreeModule&) const = default;

 private:
  Subset ambient_;
  std::vector<Subset> constituents_;  // sorted by bitmask
};

/// JH(pInd_{P_S}^{M_K}) = {J : S ⊆ J ⊆ K}.
MultFreeModule jh_of_pind(Subset K, Subset S);
MultFreeModule lattice_sum(const MultFreeModule& a, const MultFreeModule& b);
MultFreeModule lattice_intersect(const MultFreeModule& a, const MultFreeModule& b);

struct ComplexParams {
  Subset I0, I1, I, K;
  /// Total order on the simple roots as a sequence of indices; empty means index order.
  std::vector<int> order;
};

/// Degree n term: summands indexed by J ⊆ I1 \ I0 with |J| = -n, each carrying
/// pInd_{P_{(I ∪ J) ∩ K}}^{M_K}. The basis of the term is the concatenation of
/// the summands' constituents.
struct ComplexTerm {
  int degree = 0;
  std::vector<Subset> summands;
  std::vector<MultFreeModule> modules;
  std::vector<std::pair<std::size_t, Subset>> basis;  // (summand position, constituent)
};

/// The coefficient-system complex C^•_{I1,K}(I, I0) on the constituent basis.
class CoefficientComplex {
 public:
  const ComplexParams& params() const { return params_; }
  int min_degree() const { return -static_cast<int>(terms_.size()) + 1; }
  const ComplexTerm& term(int degree) const;
  /// d^n : C^n -> C^{n+1}, for min_degree() <= n < 0. Rows index C^{n+1}.
  const IntMatrix& differential(int degree) const;
  bool squares_to_zero() const;

 private:
  friend CoefficientComplex build_complex(const RootDatum&, ComplexParams);
  ComplexParams params_;
  std::vector<ComplexTerm> terms_;          // terms_[k] has degree -k
  std::vector<IntMatrix> differentials_;    // differentials_[k] : C^{-k-1} -> C^{-k}
};

/// (-1)^{#{j ∈ I0 ⊔ J : j ≺ j0}}
int complex_sign(const ComplexParams& params, Subset J, int j0);

CoefficientComplex build_complex(const RootDatum& rd, ComplexParams params);

struct CohomologyGroup {
  int degree = 0;
  std::size_t dimension = 0;
  std::map<Subset, std::size_t> multiplicity;  // constituent -> multiplicity
};

/// Cohomology of the complex by exact rank computations, split by constituent.
std::vector<CohomologyGroup> cohomology(const CoefficientComplex& cx);

/// JH set of H^0 from the lattice data alone (no linear algebra).
MultFreeModule h0_label(const CoefficientComplex& cx);

}  // namespace parind
