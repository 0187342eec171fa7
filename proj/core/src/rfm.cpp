#include "nsgp/rfm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nsgp {

namespace {

// Which values up to `bound` are sums of the given generators.
std::vector<char> representable(Int bound, const std::vector<Int>& gens) {
  std::vector<char> dp(static_cast<std::size_t>(bound) + 1, 0);
  dp[0] = 1;
  for (Int x = 1; x <= bound; ++x)
    for (Int g : gens)
      if (g <= x && dp[static_cast<std::size_t>(x - g)]) {
        dp[static_cast<std::size_t>(x)] = 1;
        break;
      }
  return dp;
}

// <gens> completed with {F+1, ->}, as a canonical value. The generators
// must all exceed or equal m, contain m, and not reach F.
NumericalSemigroup complete_past(Int f, Int m, const std::vector<Int>& gens) {
  const auto dp = representable(f, gens);
  std::vector<Int> table(static_cast<std::size_t>(m), 0);
  for (Int i = 1; i < m; ++i) {
    Int w = -1;
    for (Int x = i; x <= f; x += m)
      if (dp[static_cast<std::size_t>(x)]) {
        w = x;
        break;
      }
    if (w < 0) w = f + 1 + (((i - (f + 1)) % m + m) % m);
    table[static_cast<std::size_t>(i)] = w;
  }
  return NumericalSemigroup::from_apery(m, std::move(table));
}

detail::ChildFn rfm_children(Int f) {
  return [f](const NumericalSemigroup& s) {
    std::vector<std::pair<Int, NumericalSemigroup>> out;
    const Int m = s.multiplicity();
    const Int ratio = s.ratio();
    for (Int x : s.special_gaps())
      if (x > m && x < ratio && x != f) out.emplace_back(x, s.adjoin(x));
    return out;
  };
}

}  // namespace

RfmFamily RfmFamily::create(Int frobenius, Int multiplicity) {
  if (multiplicity < 2) throw std::invalid_argument("multiplicity must be at least 2");
  if (frobenius <= multiplicity)
    throw std::invalid_argument("R(F,m) requires m < F");
  if (frobenius % multiplicity == 0)
    throw std::invalid_argument("R(F,m) requires that m does not divide F");
  return RfmFamily(frobenius, multiplicity,
                   NumericalSemigroup::delta(frobenius, multiplicity));
}

CovarietyDescriptor RfmFamily::descriptor() const {
  const Int f = frobenius_;
  const Int m = multiplicity_;
  return {minimum_, [f, m](const NumericalSemigroup& s) {
            return s.frobenius() == f && s.multiplicity() == m;
          }};
}

RSet make_rset(std::vector<Int> elements, const RfmFamily& family) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_rfm_set(elements, family))
    throw std::domain_error("not an R(F,m)-set");
  return RSet{std::move(elements), family};
}

bool is_rfm_set(const std::vector<Int>& elements, const RfmFamily& family) {
  const Int f = family.frobenius();
  const Int m = family.multiplicity();
  for (Int x : elements)
    if (x <= m || x >= f || x % m == 0) return false;
  // Some member contains the set iff F is not generated by m and the set.
  std::vector<Int> gens{m};
  gens.insert(gens.end(), elements.begin(), elements.end());
  return !representable(f, gens)[static_cast<std::size_t>(f)];
}

CovarietyTree rfm_enumerate(const RfmFamily& family, const EnumerateOptions& options) {
  return detail::expand_tree(family.minimum(), rfm_children(family.frobenius()), options);
}

std::vector<NumericalSemigroup> rfm_enumerate_genus(const RfmFamily& family, Int genus,
                                                    const EnumerateOptions& options) {
  const Int f = family.frobenius();
  const Int m = family.multiplicity();
  if (f < 2 * m) {
    auto tree = rfm_enumerate(family, options);
    std::vector<NumericalSemigroup> out;
    for (auto& v : tree.vertices)
      if (v.genus() == genus) out.push_back(std::move(v));
    return out;
  }
  if (!genus_range(f, m).contains(genus)) return {};
  const auto child_fn = rfm_children(f);
  std::vector<NumericalSemigroup> level{family.minimum()};
  for (Int g = family.minimum().genus(); g > genus; --g)
    level = detail::advance_level(level, family.minimum(), child_fn, options.threads);
  return level;
}

GenusRange genus_range(Int frobenius, Int multiplicity) {
  const Int f = frobenius;
  const Int m = multiplicity;
  if (m >= 2 && f == m - 1) return {m - 1, m - 1};
  if (m < 2 || f <= m || f % m == 0)
    throw std::invalid_argument("genus range requires m < F with m not dividing F, or F = m-1");
  if (f < 2 * m) return {m, f - 1};
  return {(f + 2) / 2, f - f / m};
}

std::vector<NumericalSemigroup> maximal_elements(Int frobenius, Int multiplicity,
                                                 const EnumerateOptions& options) {
  const Int f = frobenius;
  const Int m = multiplicity;
  const GenusRange range = genus_range(f, m);  // validates the pair
  if (f == m - 1) return {NumericalSemigroup::delta(f, m)};
  if (f < 2 * m) {
    // {0, m, ->} minus F.
    std::vector<Int> table(static_cast<std::size_t>(m), 0);
    for (Int i = 1; i < m; ++i)
      table[static_cast<std::size_t>(i)] = (m + i == f) ? f + m : m + i;
    return {NumericalSemigroup::from_apery(m, std::move(table))};
  }
  return rfm_enumerate_genus(RfmFamily::create(f, m), range.lo, options);
}

NumericalSemigroup rfm_closure(const RSet& x) {
  std::vector<Int> gens{x.family.multiplicity()};
  gens.insert(gens.end(), x.elements.begin(), x.elements.end());
  return complete_past(x.family.frobenius(), x.family.multiplicity(), gens);
}

RSet rfm_minimal_generators(const NumericalSemigroup& s, const RfmFamily& family) {
  if (!family.contains(s))
    throw std::domain_error("the semigroup does not belong to R(" +
                            std::to_string(family.frobenius()) + "," +
                            std::to_string(family.multiplicity()) + ")");
  std::vector<Int> out;
  for (Int x : s.min_generators())
    if (x < family.frobenius() && x % family.multiplicity() != 0) out.push_back(x);
  return RSet{std::move(out), family};
}

Int rfm_rank(const NumericalSemigroup& s, const RfmFamily& family) {
  return static_cast<Int>(rfm_minimal_generators(s, family).elements.size());
}

bool is_mr(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw std::domain_error("maximal rank is undefined for N");
  const Int f = s.frobenius();
  const Int m = s.multiplicity();
  if (f <= 2 * m) return false;
  const auto msg = s.min_generators();
  const Int e = static_cast<Int>(msg.size());
  const Int above = static_cast<Int>(
      std::count_if(msg.begin(), msg.end(), [f](Int x) { return x > f; }));
  const bool by_census = (e == m - 1 && above == 0) || (e == m && above == 1);
  const bool by_rank = rfm_rank(s, RfmFamily::create(f, m)) == m - 2;
  if (by_census != by_rank)
    throw std::logic_error("maximal-rank census disagrees with the direct rank");
  return by_census;
}

NumericalSemigroup mr_witness(Int frobenius, Int multiplicity) {
  const Int f = frobenius;
  const Int m = multiplicity;
  if (m < 2 || f <= 2 * m || f % m == 0)
    throw std::invalid_argument("the witness requires F > 2m with m not dividing F");
  std::vector<Int> gens{m};
  for (Int x = f - (m - 1); x <= f - 1; ++x) gens.push_back(x);
  return complete_past(f, m, gens);
}

}  // namespace nsgp
