#include "nsgp/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace nsgp {

namespace {

[[noreturn]] void usage_error(const std::string& msg) { throw std::invalid_argument(msg); }
[[noreturn]] void domain_error(const std::string& msg) { throw std::domain_error(msg); }

void validate_table(Int m, const std::vector<Int>& table) {
  if (m < 1) usage_error("multiplicity must be positive");
  if (static_cast<Int>(table.size()) != m) usage_error("Apery table must have one slot per residue class");
  if (table[0] != 0) usage_error("Apery slot 0 must hold 0");
  for (Int i = 1; i < m; ++i) {
    const Int w = table[static_cast<std::size_t>(i)];
    if (w <= m) usage_error("Apery slot " + std::to_string(i) + " must exceed the multiplicity");
    if (w % m != i) usage_error("Apery slot " + std::to_string(i) + " is not congruent to its residue");
  }
  for (Int i = 0; i < m; ++i) {
    for (Int j = i; j < m; ++j) {
      const Int wi = table[static_cast<std::size_t>(i)];
      const Int wj = table[static_cast<std::size_t>(j)];
      if (table[static_cast<std::size_t>((i + j) % m)] > wi + wj)
        usage_error("Apery table is not additively closed");
    }
  }
}

Int frobenius_of(Int m, const std::vector<Int>& table) {
  if (m == 1) return -1;
  return *std::max_element(table.begin(), table.end()) - m;
}

Int genus_of(Int m, const std::vector<Int>& table) {
  Int g = 0;
  for (Int i = 0; i < m; ++i) g += (table[static_cast<std::size_t>(i)] - i) / m;
  return g;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_table_unchecked(Int m, std::vector<Int> table) {
  const Int f = frobenius_of(m, table);
  const Int g = genus_of(m, table);
  return NumericalSemigroup(m, std::move(table), f, g);
}

NumericalSemigroup NumericalSemigroup::naturals() {
  return NumericalSemigroup(1, {0}, -1, 0);
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> generators) {
  if (generators.empty()) usage_error("at least one generator is required");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.front() < 1) usage_error("generators must be positive");
  if (generators.back() > kMaxFrobenius) usage_error("generator exceeds the supported range");

  Int g = 0;
  for (Int x : generators) g = std::gcd(g, x);
  if (g != 1) usage_error("not a numerical semigroup: gcd of the generators is " + std::to_string(g));

  const Int m = generators.front();
  if (m == 1) return naturals();

  // Least element per residue class modulo m: single-source shortest paths
  // where residue r steps to (r + gen) mod m at cost gen.
  constexpr Int kInf = std::numeric_limits<Int>::max();
  std::vector<Int> dist(static_cast<std::size_t>(m), kInf);
  dist[0] = 0;
  using Item = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    const auto [d, r] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (Int gen : generators) {
      if (gen % m == 0) continue;
      const Int nd = d + gen;
      const Int nr = (r + gen) % m;
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        heap.emplace(nd, nr);
      }
    }
  }
  return from_table_unchecked(m, std::move(dist));
}

NumericalSemigroup NumericalSemigroup::from_apery(Int multiplicity, std::vector<Int> table) {
  validate_table(multiplicity, table);
  return from_table_unchecked(multiplicity, std::move(table));
}

NumericalSemigroup NumericalSemigroup::delta(Int frobenius, Int multiplicity) {
  const Int f = frobenius;
  const Int m = multiplicity;
  if (f < 1 || m < 2) usage_error("delta requires F >= 1 and m >= 2");
  if (f > kMaxFrobenius) usage_error("Frobenius number exceeds the supported range");
  std::vector<Int> table(static_cast<std::size_t>(m), 0);
  if (f == m - 1) {
    // {0, m, ->}: each nonzero class is hit first inside [m+1, 2m-1].
    for (Int i = 1; i < m; ++i) table[static_cast<std::size_t>(i)] = i + m;
  } else if (m < f && f % m != 0) {
    // <m> plus {F+1, ->}: nonzero classes first appear after F.
    for (Int i = 1; i < m; ++i) {
      const Int shift = ((i - (f + 1)) % m + m) % m;
      table[static_cast<std::size_t>(i)] = f + 1 + shift;
    }
  } else {
    usage_error("delta requires m < F with m not dividing F (or F = m-1)");
  }
  return from_table_unchecked(m, std::move(table));
}

std::vector<Int> NumericalSemigroup::apery_set() const {
  std::vector<Int> out = apery_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
  if (n == 0 || !contains(n)) domain_error("Apery set needs a nonzero element of S");
  if (n == multiplicity_) return apery_set();
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Int r = 0; r < n; ++r) {
    Int x = r;
    while (!contains(x)) x += n;
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int NumericalSemigroup::ratio() const {
  if (is_naturals()) domain_error("the ratio is undefined for N");
  return *std::min_element(apery_.begin() + 1, apery_.end());
}

std::vector<Int> NumericalSemigroup::min_generators() const {
  if (is_naturals()) return {1};
  const Int m = multiplicity_;
  // w in Ap(S,m)\{0} is a minimal generator iff it is not a sum of two
  // nonzero Apery elements; m itself always is one.
  std::vector<bool> is_sum(static_cast<std::size_t>(m), false);
  for (Int i = 1; i < m; ++i) {
    for (Int j = i; j < m; ++j) {
      const Int s = apery_[static_cast<std::size_t>(i)] + apery_[static_cast<std::size_t>(j)];
      const std::size_t cls = static_cast<std::size_t>((i + j) % m);
      if (apery_[cls] == s) is_sum[cls] = true;
    }
  }
  std::vector<Int> gens{m};
  for (Int i = 1; i < m; ++i)
    if (!is_sum[static_cast<std::size_t>(i)]) gens.push_back(apery_[static_cast<std::size_t>(i)]);
  std::sort(gens.begin(), gens.end());
  return gens;
}

Int NumericalSemigroup::embedding_dimension() const {
  return static_cast<Int>(min_generators().size());
}

std::vector<Int> NumericalSemigroup::pseudo_frobenius() const {
  if (is_naturals()) domain_error("PF is undefined for N");
  const Int m = multiplicity_;
  // Maximal Apery elements under the order a <= b iff b - a in S:
  // w is maximal iff w + w' leaves the Apery set for every nonzero w'.
  std::vector<Int> pf;
  for (Int i = 1; i < m; ++i) {
    const Int w = apery_[static_cast<std::size_t>(i)];
    bool maximal = true;
    for (Int j = 1; j < m && maximal; ++j) {
      const Int s = w + apery_[static_cast<std::size_t>(j)];
      if (apery_[static_cast<std::size_t>(s % m)] == s) maximal = false;
    }
    if (maximal) pf.push_back(w - m);
  }
  std::sort(pf.begin(), pf.end());
  return pf;
}

std::vector<Int> NumericalSemigroup::special_gaps() const {
  std::vector<Int> sg;
  for (Int x : pseudo_frobenius())
    if (contains(2 * x)) sg.push_back(x);
  return sg;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (Int x = 1; x <= frobenius_; ++x)
    if (!contains(x)) out.push_back(x);
  return out;
}

std::vector<Int> NumericalSemigroup::small_elements() const {
  std::vector<Int> out;
  for (Int x = 0; x <= frobenius_ + 1; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::vector<Int> NumericalSemigroup::a_set() const {
  if (is_naturals()) domain_error("A(S) is undefined for N");
  std::vector<Int> out;
  for (Int x = multiplicity_ + 1; x < frobenius_; ++x)
    if (x % multiplicity_ != 0 && contains(x)) out.push_back(x);
  return out;
}

NumericalSemigroup NumericalSemigroup::adjoin(Int x) const {
  if (is_naturals()) domain_error("nothing can be adjoined to N");
  if (x < multiplicity_) domain_error("adjoining below the multiplicity is unsupported");
  if (contains(x)) domain_error(std::to_string(x) + " is already an element");
  // x must be a special gap: x + s in S for every nonzero s, and 2x in S.
  if (!contains(x + multiplicity_)) domain_error(std::to_string(x) + " is not a special gap");
  for (Int i = 1; i < multiplicity_; ++i)
    if (!contains(x + apery_[static_cast<std::size_t>(i)]))
      domain_error(std::to_string(x) + " is not a special gap");
  if (!contains(2 * x)) domain_error(std::to_string(x) + " is not a special gap");

  std::vector<Int> table = apery_;
  const std::size_t cls = static_cast<std::size_t>(x % multiplicity_);
  assert(table[cls] == x + multiplicity_);
  table[cls] = x;
  const Int f = frobenius_of(multiplicity_, table);
  return NumericalSemigroup(multiplicity_, std::move(table), f, genus_ - 1);
}

NumericalSemigroup NumericalSemigroup::remove_ratio() const {
  const Int r = ratio();
  std::vector<Int> table = apery_;
  const std::size_t cls = static_cast<std::size_t>(r % multiplicity_);
  table[cls] = r + multiplicity_;
  const Int f = frobenius_of(multiplicity_, table);
  return NumericalSemigroup(multiplicity_, std::move(table), f, genus_ + 1);
}

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  const Int f = std::max(a.frobenius(), b.frobenius());
  if (f == -1) return NumericalSemigroup::naturals();
  Int m = 1;
  while (!(a.contains(m) && b.contains(m))) ++m;  // reaches F+1 at worst
  std::vector<Int> table(static_cast<std::size_t>(m), 0);
  for (Int i = 1; i < m; ++i) {
    Int x = i;
    while (!(a.contains(x) && b.contains(x))) x += m;
    table[static_cast<std::size_t>(i)] = x;
  }
  return NumericalSemigroup::from_apery(m, std::move(table));
}

bool subset_of(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  const Int horizon = std::max(a.frobenius(), b.frobenius());
  for (Int x = 0; x <= horizon; ++x)
    if (a.contains(x) && !b.contains(x)) return false;
  return true;
}

Classification classify(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw std::domain_error("classification is undefined for N");
  Classification c;
  const Int f = s.frobenius();
  const Int g = s.genus();
  c.symmetric = 2 * g == f + 1;
  c.pseudo_symmetric = 2 * g == f + 2;
  c.irreducible = c.symmetric || c.pseudo_symmetric;  // g == ceil((F+1)/2)
  const auto msg = s.min_generators();
  c.med = static_cast<Int>(msg.size()) == s.multiplicity();
  if (c.med && msg.back() - s.multiplicity() != f)
    throw std::logic_error("MED identity F = max(msg) - m failed");
  return c;
}

InvariantSummary invariants(const NumericalSemigroup& s) {
  InvariantSummary out;
  out.frobenius = s.frobenius();
  out.genus = s.genus();
  out.multiplicity = s.multiplicity();
  out.embedding_dimension = s.embedding_dimension();
  if (!s.is_naturals()) out.ratio = s.ratio();
  return out;
}

std::size_t SemigroupHash::operator()(const NumericalSemigroup& s) const noexcept {
  std::size_t h = static_cast<std::size_t>(s.multiplicity());
  for (Int w : s.apery_table())
    h = h * 1099511628211ULL + static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL;
  return h;
}

}  // namespace nsgp
