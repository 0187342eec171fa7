#include "nsgp/gencov.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace nsgp {

namespace {

bool admissible_delta_pair(Int f, Int m) {
  return m >= 2 && (f == m - 1 || (m < f && f % m != 0));
}

}  // namespace

OmegaChain omega_chain(const NumericalSemigroup& s, Int frobenius, Int multiplicity) {
  if (s.multiplicity() != multiplicity)
    throw std::domain_error("multiplicity mismatch between the semigroup and the chain target");
  if (s.frobenius() > frobenius)
    throw std::domain_error("the chain target needs F at least F(S)");
  if (!admissible_delta_pair(frobenius, multiplicity))
    throw std::domain_error("delta(F,m) needs m < F with m not dividing F (or F = m-1)");

  NumericalSemigroup target = NumericalSemigroup::delta(frobenius, multiplicity);
  std::vector<NumericalSemigroup> chain{s};
  std::vector<Int> removed;
  // Each removal raises the genus by one, so the chain length is pinned.
  const Int steps = target.genus() - s.genus();
  for (Int i = 0; i < steps; ++i) {
    removed.push_back(chain.back().ratio());
    chain.push_back(chain.back().remove_ratio());
  }
  if (chain.back() != target)
    throw std::logic_error("ratio removals failed to reach delta(F,m)");
  return OmegaChain{s, std::move(target), std::move(chain), std::move(removed)};
}

CovarietyTree generated_covariety(const std::vector<NumericalSemigroup>& family,
                                  const EnumerateOptions& options) {
  if (family.empty()) throw std::invalid_argument("the generating family must be nonempty");
  const Int m = family.front().multiplicity();
  Int f = 0;
  for (const auto& s : family) {
    if (s.is_naturals()) throw std::domain_error("N cannot generate a ratio-covariety");
    if (s.multiplicity() != m)
      throw std::domain_error("the generating family has mixed multiplicities");
    f = std::max(f, s.frobenius());
  }
  if (!admissible_delta_pair(f, m))
    throw std::domain_error("delta(F,m) is undefined: m divides the family Frobenius number");

  std::vector<OmegaChain> chains;
  chains.reserve(family.size());
  for (const auto& s : family) chains.push_back(omega_chain(s, f, m));

  // All intersections over nonempty subfamilies, one chain member each.
  // Slot value -1 leaves a chain out of the subfamily.
  std::unordered_set<NumericalSemigroup, SemigroupHash> members;
  std::vector<std::ptrdiff_t> pick(chains.size(), -1);
  while (true) {
    std::size_t slot = 0;
    while (slot < pick.size() &&
           pick[slot] + 1 == static_cast<std::ptrdiff_t>(chains[slot].chain.size())) {
      pick[slot] = -1;
      ++slot;
    }
    if (slot == pick.size()) break;
    ++pick[slot];

    bool any = false;
    NumericalSemigroup acc = NumericalSemigroup::naturals();
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (pick[i] < 0) continue;
      const auto& t = chains[i].chain[static_cast<std::size_t>(pick[i])];
      acc = any ? intersect(acc, t) : t;
      any = true;
    }
    if (any) members.insert(std::move(acc));
  }

  const std::size_t expected = members.size();
  CovarietyDescriptor descriptor{
      NumericalSemigroup::delta(f, m),
      [set = std::move(members)](const NumericalSemigroup& s) { return set.count(s) > 0; }};
  CovarietyTree tree = enumerate_tree(descriptor, options);
  if (tree.size() != expected)
    throw std::logic_error("the intersection set is not closed under the tree construction");
  return tree;
}

}  // namespace nsgp
