#ifndef NSGP_ORACLE_HPP
#define NSGP_ORACLE_HPP

#include <vector>

#include "nsgp/semigroup.hpp"

namespace nsgp::oracle {

/// Definition-level enumeration of R(F,m): every subset of the candidate
/// gaps between m and F is tried and kept when the resulting set is closed
/// under addition. Deliberately naive; guarded at F <= 24.
std::vector<NumericalSemigroup> rfm(Int frobenius, Int multiplicity);

/// Intersection of all members of the enumeration that contain the set.
/// Throws std::domain_error when no member does.
NumericalSemigroup closure(const std::vector<Int>& elements, Int frobenius, Int multiplicity);

}  // namespace nsgp::oracle

#endif  // NSGP_ORACLE_HPP
