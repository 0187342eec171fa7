#ifndef NSGP_RFM_HPP
#define NSGP_RFM_HPP

#include <vector>

#include "nsgp/covariety.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

/// The family R(F,m) of numerical semigroups with Frobenius number F and
/// multiplicity m, carried together with its minimum delta(F,m).
class RfmFamily {
 public:
  /// Requires m < F and m not dividing F.
  static RfmFamily create(Int frobenius, Int multiplicity);

  Int frobenius() const { return frobenius_; }
  Int multiplicity() const { return multiplicity_; }
  const NumericalSemigroup& minimum() const { return minimum_; }

  bool contains(const NumericalSemigroup& s) const {
    return s.frobenius() == frobenius_ && s.multiplicity() == multiplicity_;
  }

  /// Generic-engine view of the family.
  CovarietyDescriptor descriptor() const;

 private:
  RfmFamily(Int f, Int m, NumericalSemigroup minimum)
      : frobenius_(f), multiplicity_(m), minimum_(std::move(minimum)) {}

  Int frobenius_;
  Int multiplicity_;
  NumericalSemigroup minimum_;
};

/// A set of positive integers disjoint from delta(F,m) and contained in
/// some member of R(F,m); the generating data for closures.
struct RSet {
  std::vector<Int> elements;  // sorted
  RfmFamily family;
};

/// Validating factory; throws std::domain_error when X is not an R(F,m)-set.
RSet make_rset(std::vector<Int> elements, const RfmFamily& family);

bool is_rfm_set(const std::vector<Int>& elements, const RfmFamily& family);

/// All of R(F,m) as the rooted tree grown from delta(F,m). The child rule
/// adjoins special gaps x with m < x < r(S) and x != F; no membership
/// predicate is evaluated.
CovarietyTree rfm_enumerate(const RfmFamily& family, const EnumerateOptions& options = {});

/// The members of R(F,m) with a prescribed genus. For F > 2m the tree is
/// grown level by level and stopped at the requested genus; for m < F < 2m
/// the full enumeration is filtered. Out-of-range genus yields an empty
/// list (query genus_range for the valid span).
std::vector<NumericalSemigroup> rfm_enumerate_genus(const RfmFamily& family, Int genus,
                                                    const EnumerateOptions& options = {});

/// Inclusive span of genera realized in R(F,m); accepts the degenerate
/// F = m-1 family as well.
struct GenusRange {
  Int lo = 0;
  Int hi = 0;
  bool contains(Int g) const { return lo <= g && g <= hi; }
  Int count() const { return hi - lo + 1; }
};

GenusRange genus_range(Int frobenius, Int multiplicity);

/// Inclusion-maximal members of R(F,m); accepts F = m-1.
std::vector<NumericalSemigroup> maximal_elements(Int frobenius, Int multiplicity,
                                                 const EnumerateOptions& options = {});

/// Smallest member of R(F,m) containing the R-set: the semigroup generated
/// by m and the set, completed with everything past F.
NumericalSemigroup rfm_closure(const RSet& x);

/// The unique minimal R(F,m)-system of generators of S: its minimal
/// generators outside delta(F,m).
RSet rfm_minimal_generators(const NumericalSemigroup& s, const RfmFamily& family);

/// Size of the minimal system; at most min(m-2, e(S)).
Int rfm_rank(const NumericalSemigroup& s, const RfmFamily& family);

/// Maximal-rank test: F > 2m and rank m-2, decided through the minimal
/// generator census and cross-checked against the direct rank.
bool is_mr(const NumericalSemigroup& s);

/// A rank m-2 member of R(F,m) for F > 2m: generated by m and the m-1
/// integers directly below F, completed past F.
NumericalSemigroup mr_witness(Int frobenius, Int multiplicity);

}  // namespace nsgp

#endif  // NSGP_RFM_HPP
