#ifndef NSGP_COVARIETY_HPP
#define NSGP_COVARIETY_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "nsgp/semigroup.hpp"

namespace nsgp {

/// A ratio-covariety given by its minimum and a membership predicate.
/// The predicate must be decidable on candidate children and safe to call
/// from several threads at once.
struct CovarietyDescriptor {
  NumericalSemigroup minimum;
  std::function<bool(const NumericalSemigroup&)> member;
};

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

/// Rooted tree of a finite ratio-covariety. Vertices are stored level by
/// level (level k holds the members of genus g(root) - k), each level sorted
/// by the set of elements added to the root, so the layout is canonical.
/// The parent of every non-root vertex is the vertex minus its ratio.
struct CovarietyTree {
  std::vector<NumericalSemigroup> vertices;
  std::vector<std::size_t> parent;    // kNoParent at index 0
  std::vector<Int> adjoined;          // element added on the edge from parent; -1 at 0
  std::vector<std::size_t> level_start;  // offsets per level, plus end sentinel

  std::size_t size() const { return vertices.size(); }
  std::size_t levels() const { return level_start.size() - 1; }
  std::span<const NumericalSemigroup> level(std::size_t k) const {
    return {vertices.data() + level_start[k], level_start[k + 1] - level_start[k]};
  }
  const NumericalSemigroup& root() const { return vertices.front(); }
};

enum class Traversal { breadth_first, depth_first };

struct EnumerateOptions {
  int threads = 1;
  Traversal traversal = Traversal::breadth_first;
};

/// Children of S in the tree of R: S with one special gap x adjoined, for
/// every x strictly between the multiplicity and the ratio that keeps the
/// result inside R. Sorted by x.
std::vector<NumericalSemigroup> children(const NumericalSemigroup& s,
                                         const CovarietyDescriptor& r);

/// All members of R as a rooted tree, built from the minimum upwards.
CovarietyTree enumerate_tree(const CovarietyDescriptor& r,
                             const EnumerateOptions& options = {});

/// S, S minus its ratio, and so on down to delta(F(S), m(S)).
std::vector<NumericalSemigroup> ratio_chain(const NumericalSemigroup& s);

/// Post-enumeration check of the three ratio-covariety axioms on a vertex
/// set (the intersection check is quadratic).
struct AxiomReport {
  bool minimum_ok = false;        // root is contained in every member
  bool intersection_ok = false;   // closed under pairwise intersection
  bool ratio_removal_ok = false;  // closed under removing the ratio
  bool ok() const { return minimum_ok && intersection_ok && ratio_removal_ok; }
};

AxiomReport verify_axioms(const CovarietyTree& tree);

namespace detail {

// Child generator: accepted (adjoined element, child) pairs, sorted by the
// adjoined element. Shared by the generic engine and specialized families.
using ChildFn =
    std::function<std::vector<std::pair<Int, NumericalSemigroup>>(const NumericalSemigroup&)>;

CovarietyTree expand_tree(const NumericalSemigroup& root, const ChildFn& make_children,
                          const EnumerateOptions& options);

// One genus step: all children of the given level, sorted by the set of
// elements added to the root.
std::vector<NumericalSemigroup> advance_level(const std::vector<NumericalSemigroup>& level,
                                              const NumericalSemigroup& root,
                                              const ChildFn& make_children, int threads);

// Elements of s that the root lacks, sorted; the canonical ordering key.
std::vector<Int> added_elements(const NumericalSemigroup& s, const NumericalSemigroup& root);

}  // namespace detail

}  // namespace nsgp

#endif  // NSGP_COVARIETY_HPP
