#ifndef NSGP_SEMIGROUP_HPP
#define NSGP_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace nsgp {

using Int = std::int64_t;

/// Upper bound accepted for Frobenius numbers and generators. Keeps every
/// intermediate sum far away from 64-bit overflow.
inline constexpr Int kMaxFrobenius = Int{1} << 20;

/// A numerical semigroup: a co-finite submonoid of (N, +).
///
/// The canonical value is the multiplicity m together with the Apery table
/// w[0..m-1], where w[i] is the least element congruent to i modulo m
/// (so w[0] = 0). Membership, the Frobenius number, the genus and every
/// other invariant derive from that table. Values are immutable; all
/// operations return fresh values and are safe to call concurrently.
class NumericalSemigroup {
 public:
  /// The full monoid N (multiplicity 1, Frobenius number -1).
  static NumericalSemigroup naturals();

  /// Semigroup generated by a set of positive integers with gcd 1.
  static NumericalSemigroup from_generators(std::vector<Int> generators);

  /// Builds a value from an explicit Apery table; validates every type
  /// invariant including the additive-closure inequality.
  static NumericalSemigroup from_apery(Int multiplicity, std::vector<Int> table);

  /// The minimum of R(F,m): multiples of m together with {F+1, ->}.
  /// Accepts m < F with m not dividing F, and the degenerate F = m-1
  /// (which yields {0, m, ->}).
  static NumericalSemigroup delta(Int frobenius, Int multiplicity);

  Int multiplicity() const { return multiplicity_; }
  Int frobenius() const { return frobenius_; }
  Int genus() const { return genus_; }
  bool is_naturals() const { return multiplicity_ == 1; }

  /// Membership: x is in S iff x >= 0 and x >= w[x mod m].
  bool contains(Int x) const {
    return x >= 0 && x >= apery_[static_cast<std::size_t>(x % multiplicity_)];
  }

  /// Apery table indexed by residue class modulo the multiplicity.
  const std::vector<Int>& apery_table() const { return apery_; }

  /// Ap(S, m) as a sorted set.
  std::vector<Int> apery_set() const;

  /// Ap(S, n) for any nonzero element n of S, as a sorted set.
  std::vector<Int> apery_set(Int n) const;

  /// Least element not divisible by the multiplicity. Undefined for N.
  Int ratio() const;

  /// The unique minimal system of generators, sorted.
  std::vector<Int> min_generators() const;

  Int embedding_dimension() const;

  /// Gaps z with z + s in S for every nonzero s of S. Undefined for N.
  std::vector<Int> pseudo_frobenius() const;

  /// Pseudo-Frobenius numbers x whose adjunction keeps the set additively
  /// closed (equivalently 2x in S). Undefined for N.
  std::vector<Int> special_gaps() const;

  /// All gaps, sorted.
  std::vector<Int> gaps() const;

  /// Elements up to and including F+1, sorted.
  std::vector<Int> small_elements() const;

  /// A(S): elements below the Frobenius number not divisible by the
  /// multiplicity. Undefined for N.
  std::vector<Int> a_set() const;

  /// S with a special gap x > m adjoined; the Apery slot of x is replaced
  /// in O(m). Rejects x below the multiplicity (that would change the key).
  NumericalSemigroup adjoin(Int x) const;

  /// S without its ratio; inverse of adjoin(ratio()). Undefined for N.
  NumericalSemigroup remove_ratio() const;

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

 private:
  NumericalSemigroup(Int m, std::vector<Int> table, Int frobenius, Int genus)
      : multiplicity_(m), apery_(std::move(table)), frobenius_(frobenius), genus_(genus) {}

  static NumericalSemigroup from_table_unchecked(Int m, std::vector<Int> table);

  Int multiplicity_;
  std::vector<Int> apery_;
  Int frobenius_;
  Int genus_;
};

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b);

/// a is contained in b.
bool subset_of(const NumericalSemigroup& a, const NumericalSemigroup& b);

struct Classification {
  bool symmetric = false;
  bool pseudo_symmetric = false;
  bool irreducible = false;
  bool med = false;  // maximal embedding dimension, e(S) = m(S)
};

Classification classify(const NumericalSemigroup& s);

struct InvariantSummary {
  Int frobenius = 0;
  Int genus = 0;
  Int multiplicity = 0;
  Int embedding_dimension = 0;
  std::optional<Int> ratio;  // empty for N
};

InvariantSummary invariants(const NumericalSemigroup& s);

struct SemigroupHash {
  std::size_t operator()(const NumericalSemigroup& s) const noexcept;
};

}  // namespace nsgp

#endif  // NSGP_SEMIGROUP_HPP
