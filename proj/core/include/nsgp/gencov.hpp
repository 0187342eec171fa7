#ifndef NSGP_GENCOV_HPP
#define NSGP_GENCOV_HPP

#include <vector>

#include "nsgp/covariety.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

/// Descending chain from a semigroup to delta(F,m) obtained by repeatedly
/// removing the ratio. F may exceed F(S); the chain then passes through
/// members whose Frobenius number grows toward F.
struct OmegaChain {
  NumericalSemigroup source;
  NumericalSemigroup target;               // delta(F,m)
  std::vector<NumericalSemigroup> chain;   // front() == source, back() == target
  std::vector<Int> removed;                // removed[i] = ratio dropped from chain[i]
};

/// Requires m(S) = m and F(S) <= F, with (F,m) an admissible delta pair.
OmegaChain omega_chain(const NumericalSemigroup& s, Int frobenius, Int multiplicity);

/// Smallest ratio-covariety containing the family (all members sharing one
/// multiplicity) with minimum delta(max F, m): every intersection of chain
/// members across nonempty subfamilies, arranged as a tree.
CovarietyTree generated_covariety(const std::vector<NumericalSemigroup>& family,
                                  const EnumerateOptions& options = {});

}  // namespace nsgp

#endif  // NSGP_GENCOV_HPP
