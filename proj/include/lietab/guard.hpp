#ifndef LIETAB_GUARD_HPP
#define LIETAB_GUARD_HPP

#include <set>
#include <string>

namespace lietab {

/// A congruence condition on the indeterminate q: "q mod m lies in R".
/// The trivial guard (m=1, R={0}) admits every q.  Guards are normalised to
/// the smallest equivalent modulus, so equal conditions compare equal.
class Guard {
 public:
  Guard() : modulus_(1), residues_{0} {}

  /// Throws UnsatisfiableGuard if the residue set is empty or the modulus is 0.
  Guard(unsigned modulus, std::set<unsigned> residues);

  /// The condition "q ≡ residue (mod modulus)".
  static Guard congruent(unsigned modulus, long residue);

  unsigned modulus() const { return modulus_; }
  const std::set<unsigned>& residues() const { return residues_; }
  bool is_trivial() const { return modulus_ == 1; }

  bool admits(long long q0) const;

  /// Conjunction of two guards.  Throws UnsatisfiableGuard when the
  /// intersection is empty.
  Guard meet(const Guard& other) const;

  /// Like meet, but reports emptiness instead of throwing.
  bool try_meet(const Guard& other, Guard* out) const;

  /// True if every q admitted by this guard is admitted by `other`.
  bool implies(const Guard& other) const;

  bool operator==(const Guard& other) const = default;

  /// "all q", "3|q-1", "q mod 12 in {1,5}".
  std::string to_string() const;

 private:
  unsigned modulus_;
  std::set<unsigned> residues_;

  void normalize();
};

}  // namespace lietab

#endif
