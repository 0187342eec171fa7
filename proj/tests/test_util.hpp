#ifndef NSGP_TESTS_TEST_UTIL_HPP
#define NSGP_TESTS_TEST_UTIL_HPP

// Definition-level helpers shared by the test suites. Everything here works
// on raw membership arrays and never calls into the library code paths it
// is used to check.

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "nsgp/semigroup.hpp"

namespace nsgp::testutil {

// Which values up to bound are sums of the generators.
inline std::vector<char> monoid_membership(const std::vector<Int>& gens, Int bound) {
  std::vector<char> in(static_cast<std::size_t>(bound) + 1, 0);
  in[0] = 1;
  for (Int x = 1; x <= bound; ++x)
    for (Int g : gens)
      if (g >= 1 && g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = 1;
        break;
      }
  return in;
}

using Membership = std::function<bool(Int)>;

inline Membership as_membership(const NumericalSemigroup& s) {
  return [s](Int x) { return s.contains(x); };
}

// Largest gap of a membership predicate known to be full past `horizon`.
inline Int brute_frobenius(const Membership& in, Int horizon) {
  for (Int x = horizon; x >= 0; --x)
    if (!in(x)) return x;
  return -1;
}

inline Int brute_genus(const Membership& in, Int horizon) {
  Int g = 0;
  for (Int x = 0; x <= horizon; ++x)
    if (!in(x)) ++g;
  return g;
}

// Minimal generators by definition: nonzero elements that are not the sum
// of two nonzero elements. Complete above frobenius + multiplicity.
inline std::vector<Int> brute_min_generators(const Membership& in, Int frobenius) {
  Int m = 1;
  while (!in(m)) ++m;
  std::vector<Int> out;
  for (Int e = 1; e <= frobenius + m; ++e) {
    if (!in(e)) continue;
    bool decomposable = false;
    for (Int a = 1; a <= e - a && !decomposable; ++a)
      if (in(a) && in(e - a)) decomposable = true;
    if (!decomposable) out.push_back(e);
  }
  return out;
}

// Pseudo-Frobenius numbers by definition: gaps z with z + s in S for every
// nonzero s up to the Frobenius number (larger s land past F automatically).
inline std::vector<Int> brute_pseudo_frobenius(const Membership& in, Int frobenius) {
  std::vector<Int> out;
  for (Int z = 1; z <= frobenius; ++z) {
    if (in(z)) continue;
    bool pf = true;
    for (Int s = 1; s <= frobenius && pf; ++s)
      if (in(s) && !in(z + s)) pf = false;
    if (pf) out.push_back(z);
  }
  return out;
}

// Special gaps by definition: gaps whose adjunction keeps the set closed
// under addition.
inline std::vector<Int> brute_special_gaps(const Membership& in, Int frobenius) {
  std::vector<Int> out;
  for (Int z = 1; z <= frobenius; ++z) {
    if (in(z)) continue;
    // Sums past the Frobenius number always land inside, so only sums up
    // to F need checking.
    auto with_z = [&](Int x) { return x == z || in(x); };
    bool closed = true;
    for (Int a = 1; a <= frobenius && closed; ++a) {
      if (!with_z(a)) continue;
      for (Int b = a; a + b <= frobenius && closed; ++b)
        if (with_z(b) && !with_z(a + b)) closed = false;
    }
    if (closed) out.push_back(z);
  }
  return out;
}

inline std::pair<Int, std::vector<Int>> canonical_key(const NumericalSemigroup& s) {
  return {s.multiplicity(), s.apery_table()};
}

inline bool same_set(std::vector<NumericalSemigroup> a, std::vector<NumericalSemigroup> b) {
  auto less = [](const NumericalSemigroup& x, const NumericalSemigroup& y) {
    return canonical_key(x) < canonical_key(y);
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

// Every admissible R(F,m) pair with F at most max_frobenius.
inline void for_each_family(Int max_frobenius, const std::function<void(Int, Int)>& fn) {
  for (Int f = 3; f <= max_frobenius; ++f)
    for (Int m = 2; m < f; ++m)
      if (f % m != 0) fn(f, m);
}

inline std::vector<Int> elements_upto(const NumericalSemigroup& s, Int hi) {
  std::vector<Int> out;
  for (Int x = 0; x <= hi; ++x)
    if (s.contains(x)) out.push_back(x);
  return out;
}

// Elements of a minus elements of b (finite by cofiniteness of b).
inline std::vector<Int> difference_elements(const NumericalSemigroup& a,
                                            const NumericalSemigroup& b) {
  std::vector<Int> out;
  for (Int x = 0; x <= std::max(a.frobenius(), b.frobenius()) + 1; ++x)
    if (a.contains(x) && !b.contains(x)) out.push_back(x);
  return out;
}

// The semigroup whose elements are the given sorted list up to `frobenius`
// plus everything past it; validated through the checked factory.
inline NumericalSemigroup from_elements(Int m, Int frobenius,
                                        const std::vector<Int>& small_elements) {
  auto member = [&](Int x) {
    return x > frobenius ||
           std::binary_search(small_elements.begin(), small_elements.end(), x);
  };
  std::vector<Int> table(static_cast<std::size_t>(m), 0);
  for (Int i = 1; i < m; ++i) {
    Int x = i;
    while (!member(x)) x += m;
    table[static_cast<std::size_t>(i)] = x;
  }
  return NumericalSemigroup::from_apery(m, std::move(table));
}

}  // namespace nsgp::testutil

#endif  // NSGP_TESTS_TEST_UTIL_HPP
