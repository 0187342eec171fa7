#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nsgp/rfm.hpp"
#include "nsgp/semigroup.hpp"
#include "test_util.hpp"

using namespace nsgp;
using namespace nsgp::testutil;

namespace {

// Sweep subjects: every member of every family with the given bounds, plus
// the degenerate {0,m,->} shapes and N itself.
std::vector<NumericalSemigroup> sweep_semigroups(Int max_f, Int max_m) {
  std::vector<NumericalSemigroup> out;
  for_each_family(max_f, [&](Int f, Int m) {
    if (m > max_m) return;
    for (auto& v : rfm_enumerate(RfmFamily::create(f, m)).vertices) out.push_back(std::move(v));
  });
  for (Int m = 2; m <= max_m; ++m) out.push_back(NumericalSemigroup::delta(m - 1, m));
  out.push_back(NumericalSemigroup::naturals());
  return out;
}

}  // namespace

TEST_CASE("from_generators canonicalizes the three reference inputs") {
  const auto n = NumericalSemigroup::from_generators({1});
  CHECK(n.is_naturals());
  CHECK(n.apery_table() == std::vector<Int>{0});
  CHECK(n.frobenius() == -1);
  CHECK(n.genus() == 0);

  const auto s = NumericalSemigroup::from_generators({6, 8, 13, 15});
  CHECK(s.apery_table() == std::vector<Int>{0, 13, 8, 15, 16, 23});

  const auto t = NumericalSemigroup::from_generators({3, 5, 7});
  CHECK(t.apery_table() == std::vector<Int>{0, 7, 5});
  CHECK(t.frobenius() == 4);
  CHECK(t.genus() == 3);
}

TEST_CASE("from_generators agrees with the additive-closure sieve") {
  const std::vector<std::vector<Int>> inputs{
      {3, 5, 7}, {6, 8, 13, 15}, {5, 7, 9}, {5, 6, 8}, {4, 7, 13}, {2, 9}};
  for (const auto& gens : inputs) {
    const auto s = NumericalSemigroup::from_generators(gens);
    const auto in = monoid_membership(gens, 120);
    for (Int x = 0; x <= 120; ++x) CHECK(s.contains(x) == static_cast<bool>(in[x]));
    CHECK(s.frobenius() == brute_frobenius([&](Int x) { return in[x] != 0; }, 120));
    CHECK(s.genus() == brute_genus([&](Int x) { return in[x] != 0; }, 120));
  }
}

TEST_CASE("from_generators ignores redundant generators") {
  CHECK(NumericalSemigroup::from_generators({3, 5, 7}) ==
        NumericalSemigroup::from_generators({3, 5, 7, 8, 10, 12}));
}

TEST_CASE("from_generators rejects bad input") {
  CHECK_THROWS_AS((void)NumericalSemigroup::from_generators({}), std::invalid_argument);
  CHECK_THROWS_AS((void)NumericalSemigroup::from_generators({2, 4, 6}), std::invalid_argument);
  CHECK_THROWS_AS((void)NumericalSemigroup::from_generators({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS((void)NumericalSemigroup::from_generators({-3, 5}), std::invalid_argument);
}

TEST_CASE("delta values") {
  const auto d74 = NumericalSemigroup::delta(7, 4);
  CHECK(d74.apery_table() == std::vector<Int>{0, 9, 10, 11});
  CHECK(elements_upto(d74, 9) == std::vector<Int>{0, 4, 8, 9});

  const auto d125 = NumericalSemigroup::delta(12, 5);
  CHECK(d125.genus() == 12 - 12 / 5);
  CHECK(elements_upto(d125, 13) == std::vector<Int>{0, 5, 10, 13});

  const auto d32 = NumericalSemigroup::delta(3, 2);
  CHECK(d32.apery_table() == std::vector<Int>{0, 5});

  const auto degenerate = NumericalSemigroup::delta(4, 5);
  CHECK(degenerate.frobenius() == 4);
  CHECK(elements_upto(degenerate, 7) == std::vector<Int>{0, 5, 6, 7});
}

TEST_CASE("delta rejects inadmissible pairs") {
  CHECK_THROWS_AS((void)NumericalSemigroup::delta(8, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)NumericalSemigroup::delta(4, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)NumericalSemigroup::delta(3, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)NumericalSemigroup::delta(5, 1), std::invalid_argument);
}

TEST_CASE("contains") {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  CHECK_FALSE(s.contains(4));
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(-3));
  CHECK(NumericalSemigroup::delta(7, 4).contains(9));
}

TEST_CASE("apery sets for arbitrary nonzero elements") {
  const auto s = NumericalSemigroup::from_generators({6, 8, 13, 15});
  CHECK(s.apery_set(6) == std::vector<Int>{0, 8, 13, 15, 16, 23});

  const auto half_line = NumericalSemigroup::delta(6, 7);
  CHECK(half_line.apery_set(7) == std::vector<Int>{0, 8, 9, 10, 11, 12, 13});

  CHECK(NumericalSemigroup::naturals().apery_set(1) == std::vector<Int>{0});

  // n different from the multiplicity: check against a direct scan.
  const auto t = NumericalSemigroup::from_generators({3, 5, 7});
  const auto ap5 = t.apery_set(5);
  CHECK(ap5.size() == 5);
  std::set<Int> residues;
  for (Int w : ap5) {
    CHECK(t.contains(w));
    CHECK((w - 5 < 0 || !t.contains(w - 5)));
    residues.insert(w % 5);
  }
  CHECK(residues.size() == 5);

  CHECK_THROWS_AS((void)t.apery_set(0), std::domain_error);
  CHECK_THROWS_AS((void)t.apery_set(4), std::domain_error);
}

TEST_CASE("invariant summaries") {
  const auto a = invariants(NumericalSemigroup::from_generators({3, 5, 7}));
  CHECK(a.frobenius == 4);
  CHECK(a.genus == 3);
  CHECK(a.multiplicity == 3);
  CHECK(a.ratio == 5);
  CHECK(a.embedding_dimension == 3);

  const auto b = invariants(NumericalSemigroup::delta(7, 4));
  CHECK(b.frobenius == 7);
  CHECK(b.genus == 6);
  CHECK(b.multiplicity == 4);
  CHECK(b.ratio == 9);
  CHECK(b.embedding_dimension == 4);

  CHECK(NumericalSemigroup::from_generators({5, 7, 9}).ratio() == 7);
  CHECK_FALSE(invariants(NumericalSemigroup::naturals()).ratio.has_value());
  CHECK_THROWS_AS((void)NumericalSemigroup::naturals().ratio(), std::domain_error);
}

TEST_CASE("minimal generating systems") {
  CHECK(NumericalSemigroup::from_generators({3, 5, 7}).min_generators() ==
        std::vector<Int>{3, 5, 7});
  CHECK(NumericalSemigroup::delta(6, 7).min_generators() ==
        std::vector<Int>{7, 8, 9, 10, 11, 12, 13});
  CHECK(NumericalSemigroup::delta(7, 4).min_generators() == std::vector<Int>{4, 9, 10, 11});
  CHECK(NumericalSemigroup::naturals().min_generators() == std::vector<Int>{1});
}

TEST_CASE("pseudo-Frobenius numbers and special gaps") {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  CHECK(s.pseudo_frobenius() == std::vector<Int>{2, 4});
  CHECK(s.special_gaps() == std::vector<Int>{4});

  const auto half_line = NumericalSemigroup::delta(6, 7);
  CHECK(half_line.pseudo_frobenius() == std::vector<Int>{1, 2, 3, 4, 5, 6});
  CHECK(half_line.special_gaps() == std::vector<Int>{4, 5, 6});

  CHECK(NumericalSemigroup::from_generators({2, 3}).pseudo_frobenius() ==
        std::vector<Int>{1});
  CHECK(NumericalSemigroup::delta(7, 4).special_gaps() == std::vector<Int>{5, 6, 7});

  CHECK_THROWS_AS((void)NumericalSemigroup::naturals().pseudo_frobenius(), std::domain_error);
  CHECK_THROWS_AS((void)NumericalSemigroup::naturals().special_gaps(), std::domain_error);
}

TEST_CASE("adjoin replaces one Apery slot") {
  const auto d74 = NumericalSemigroup::delta(7, 4);
  CHECK(d74.adjoin(5).apery_set() == std::vector<Int>{0, 5, 10, 11});
  CHECK(d74.adjoin(6).apery_set() == std::vector<Int>{0, 6, 9, 11});
  CHECK(d74.adjoin(5).genus() == d74.genus() - 1);

  CHECK_THROWS_AS((void)d74.adjoin(4), std::domain_error);   // already inside
  CHECK_THROWS_AS((void)d74.adjoin(3), std::domain_error);   // below multiplicity
  CHECK_THROWS_AS((void)d74.adjoin(2), std::domain_error);   // not a special gap

  // Adjoining below the multiplicity is out of contract; the union can
  // still be formed through its generators, which reproduces the
  // half-line example.
  const auto half_line = NumericalSemigroup::delta(6, 7);
  CHECK_THROWS_AS((void)half_line.adjoin(5), std::domain_error);
  auto gens = half_line.min_generators();
  gens.push_back(5);
  CHECK(NumericalSemigroup::from_generators(gens).apery_set(7) ==
        std::vector<Int>{0, 5, 8, 9, 10, 11, 13});
}

TEST_CASE("remove_ratio") {
  const auto s1 = NumericalSemigroup::from_generators({5, 7, 9});
  CHECK(elements_upto(s1.remove_ratio(), 14) == std::vector<Int>{0, 5, 9, 10, 12, 14});

  const auto s2 = NumericalSemigroup::from_generators({5, 6, 8});
  CHECK_FALSE(s2.remove_ratio().contains(6));
  CHECK(s2.remove_ratio().genus() == s2.genus() + 1);

  const auto d = NumericalSemigroup::delta(7, 4).remove_ratio();
  CHECK(d.frobenius() == 9);
  CHECK(elements_upto(d, 12) == std::vector<Int>{0, 4, 8, 10, 11, 12});

  CHECK_THROWS_AS((void)NumericalSemigroup::naturals().remove_ratio(), std::domain_error);
}

TEST_CASE("intersection") {
  const auto s1 = NumericalSemigroup::from_generators({5, 7, 9});
  const auto s2 = NumericalSemigroup::from_generators({5, 6, 8});
  CHECK(intersect(s1, s1) == s1);

  const auto both = intersect(s1, s2);
  CHECK(both.frobenius() == 13);
  CHECK(elements_upto(both, 14) == std::vector<Int>{0, 5, 10, 12, 14});

  const auto a = NumericalSemigroup::from_generators({2, 3});
  const auto b = NumericalSemigroup::from_generators({3, 4, 5});
  const auto ab = intersect(a, b);
  for (Int x = 0; x <= 6; ++x) CHECK(ab.contains(x) == (a.contains(x) && b.contains(x)));
  CHECK(ab == b);

  CHECK(intersect(NumericalSemigroup::naturals(), NumericalSemigroup::naturals()) ==
        NumericalSemigroup::naturals());
}

TEST_CASE("classification") {
  const auto sym = classify(NumericalSemigroup::from_generators({2, 3}));
  CHECK(sym.symmetric);
  CHECK(sym.irreducible);
  CHECK_FALSE(sym.pseudo_symmetric);

  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  const auto c = classify(s);
  CHECK(c.pseudo_symmetric);
  CHECK(c.irreducible);
  CHECK_FALSE(c.symmetric);
  CHECK(c.med);
  CHECK(s.min_generators().back() - s.multiplicity() == s.frobenius());

  CHECK_THROWS_AS((void)classify(NumericalSemigroup::naturals()), std::domain_error);
}

TEST_CASE("a_set") {
  CHECK(NumericalSemigroup::from_generators({5, 7, 9}).a_set() == std::vector<Int>{7, 9, 12});
  CHECK(NumericalSemigroup::delta(12, 5).a_set().empty());
  CHECK(NumericalSemigroup::delta(7, 4).a_set().empty());
  CHECK(NumericalSemigroup::from_generators({5, 6, 8}).a_set() == std::vector<Int>{6, 8});
}

TEST_CASE("round trip through the minimal generators over the sweep") {
  for (const auto& s : sweep_semigroups(20, 12))
    CHECK(NumericalSemigroup::from_generators(s.min_generators()) == s);
}

TEST_CASE("adjoin and remove_ratio are mutually inverse over the sweep") {
  for (const auto& s : sweep_semigroups(16, 10)) {
    if (s.is_naturals()) continue;
    const Int r = s.ratio();
    CHECK(s.remove_ratio().adjoin(r) == s);
    for (Int x : s.special_gaps())
      if (x > s.multiplicity() && x < r) CHECK(s.adjoin(x).remove_ratio() == s);
  }
}

TEST_CASE("both special-gap characterizations agree over the sweep") {
  for (const auto& s : sweep_semigroups(16, 10)) {
    if (s.is_naturals()) continue;
    const auto pf = s.pseudo_frobenius();
    std::vector<Int> via_pf;
    for (Int x : pf)
      if (std::find(pf.begin(), pf.end(), 2 * x) == pf.end()) via_pf.push_back(x);
    CHECK(via_pf == s.special_gaps());
  }
}

TEST_CASE("definitional oracles confirm msg, PF and SG on mixed shapes") {
  const std::vector<std::vector<Int>> inputs{{3, 5, 7}, {5, 7, 9}, {5, 6, 8},
                                             {4, 6, 9},  {7, 8, 9, 10, 11, 12, 13}};
  for (const auto& gens : inputs) {
    const auto s = NumericalSemigroup::from_generators(gens);
    const auto in = as_membership(s);
    CHECK(s.min_generators() == brute_min_generators(in, s.frobenius()));
    CHECK(s.pseudo_frobenius() == brute_pseudo_frobenius(in, s.frobenius()));
    CHECK(s.special_gaps() == brute_special_gaps(in, s.frobenius()));
  }
}

TEST_CASE("type invariants hold for every constructed value in the sweep") {
  for (const auto& s : sweep_semigroups(18, 10)) {
    // Re-validating through the checked factory exercises slot congruence
    // and the additive-closure inequality.
    const auto again = NumericalSemigroup::from_apery(s.multiplicity(), s.apery_table());
    CHECK(again == s);
    CHECK(again.frobenius() == s.frobenius());
    CHECK(again.genus() == s.genus());
    CHECK(static_cast<Int>(s.gaps().size()) == s.genus());
    if (!s.is_naturals()) {
      CHECK(2 * s.genus() >= s.frobenius() + 1);
      CHECK(s.genus() <= s.frobenius());
    }
  }
}

TEST_CASE("genus equals the gap count up to F for small Frobenius numbers") {
  for (const auto& s : sweep_semigroups(20, 12)) {
    if (s.frobenius() > 30) continue;
    CHECK(s.genus() == brute_genus(as_membership(s), std::max<Int>(s.frobenius(), 0)));
  }
}

TEST_CASE("intersection satisfies the membership and Frobenius laws") {
  const auto pool = sweep_semigroups(14, 8);
  for (std::size_t i = 0; i < pool.size(); i += 7)
    for (std::size_t j = i; j < pool.size(); j += 11) {
      const auto& s = pool[i];
      const auto& t = pool[j];
      const auto both = intersect(s, t);
      CHECK(both.frobenius() == std::max(s.frobenius(), t.frobenius()));
      for (Int x = 0; x <= std::max(s.frobenius(), t.frobenius()) + 1; ++x)
        CHECK(both.contains(x) == (s.contains(x) && t.contains(x)));
    }
}
