#include "nsgp/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsgp::oracle {

namespace {

constexpr Int kOracleFrobeniusCap = 24;

NumericalSemigroup from_membership(Int m, Int f, const std::vector<char>& in) {
  std::vector<Int> table(static_cast<std::size_t>(m), 0);
  for (Int i = 1; i < m; ++i) {
    Int x = i;
    while (x <= f && !in[static_cast<std::size_t>(x)]) x += m;
    if (x > f) x = f + 1 + (((i - (f + 1)) % m + m) % m);
    table[static_cast<std::size_t>(i)] = x;
  }
  return NumericalSemigroup::from_apery(m, std::move(table));
}

}  // namespace

std::vector<NumericalSemigroup> rfm(Int frobenius, Int multiplicity) {
  const Int f = frobenius;
  const Int m = multiplicity;
  if (m < 2 || f <= m || f % m == 0)
    throw std::invalid_argument("the oracle needs m < F with m not dividing F");
  if (f > kOracleFrobeniusCap)
    throw std::invalid_argument("oracle guard: F must stay at or below 24");

  std::vector<Int> candidates;
  for (Int x = m + 1; x < f; ++x)
    if (x % m != 0) candidates.push_back(x);

  std::vector<NumericalSemigroup> out;
  const std::size_t n = candidates.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    // T = {0} + multiples of m up to F + chosen candidates + {F+1, ->}.
    std::vector<char> in(static_cast<std::size_t>(f) + 1, 0);
    in[0] = 1;
    for (Int x = m; x <= f; x += m) in[static_cast<std::size_t>(x)] = 1;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::size_t{1} << b)) in[static_cast<std::size_t>(candidates[b])] = 1;

    bool closed = true;
    for (Int x = 1; x <= f && closed; ++x) {
      if (!in[static_cast<std::size_t>(x)]) continue;
      for (Int y = x; x + y <= f; ++y) {
        if (!in[static_cast<std::size_t>(y)]) continue;
        if (!in[static_cast<std::size_t>(x + y)]) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(from_membership(m, f, in));
  }
  return out;
}

NumericalSemigroup closure(const std::vector<Int>& elements, Int frobenius, Int multiplicity) {
  const Int f = frobenius;
  bool found = false;
  std::vector<char> common(static_cast<std::size_t>(f) + 1, 1);
  for (const auto& s : rfm(f, multiplicity)) {
    bool contains_all = true;
    for (Int x : elements)
      if (!s.contains(x)) {
        contains_all = false;
        break;
      }
    if (!contains_all) continue;
    found = true;
    for (Int x = 0; x <= f; ++x)
      if (!s.contains(x)) common[static_cast<std::size_t>(x)] = 0;
  }
  if (!found) throw std::domain_error("not an R(F,m)-set: no member contains it");
  return from_membership(multiplicity, f, common);
}

}  // namespace nsgp::oracle
