#include "lietab/guard.hpp"

#include <numeric>
#include <sstream>

#include "lietab/errors.hpp"

namespace lietab {

Guard::Guard(unsigned modulus, std::set<unsigned> residues)
    : modulus_(modulus), residues_(std::move(residues)) {
  if (modulus_ == 0) fail(Errc::UnsatisfiableGuard, "guard modulus must be positive");
  std::set<unsigned> reduced;
  for (unsigned r : residues_) reduced.insert(r % modulus_);
  residues_ = std::move(reduced);
  if (residues_.empty())
    fail(Errc::UnsatisfiableGuard, "guard admits no residue mod " + std::to_string(modulus_));
  normalize();
}

Guard Guard::congruent(unsigned modulus, long residue) {
  long r = residue % static_cast<long>(modulus);
  if (r < 0) r += modulus;
  return Guard(modulus, {static_cast<unsigned>(r)});
}

void Guard::normalize() {
  // Smallest divisor m' of the modulus such that the residue set is a full
  // preimage of its image mod m'.
  for (unsigned m = 1; m < modulus_; ++m) {
    if (modulus_ % m != 0) continue;
    std::set<unsigned> image;
    for (unsigned r : residues_) image.insert(r % m);
    if (image.size() * (modulus_ / m) == residues_.size()) {
      std::set<unsigned> preimage;
      for (unsigned r = 0; r < modulus_; ++r)
        if (image.count(r % m)) preimage.insert(r);
      if (preimage == residues_) {
        modulus_ = m;
        residues_ = std::move(image);
        return;
      }
    }
  }
}

bool Guard::admits(long long q0) const {
  long long r = q0 % static_cast<long long>(modulus_);
  if (r < 0) r += modulus_;
  return residues_.count(static_cast<unsigned>(r)) != 0;
}

bool Guard::try_meet(const Guard& other, Guard* out) const {
  unsigned m = std::lcm(modulus_, other.modulus_);
  std::set<unsigned> rs;
  for (unsigned r = 0; r < m; ++r)
    if (residues_.count(r % modulus_) && other.residues_.count(r % other.modulus_)) rs.insert(r);
  if (rs.empty()) return false;
  *out = Guard(m, std::move(rs));
  return true;
}

Guard Guard::meet(const Guard& other) const {
  Guard out;
  if (!try_meet(other, &out))
    fail(Errc::UnsatisfiableGuard,
         "incompatible guards " + to_string() + " and " + other.to_string());
  return out;
}

bool Guard::implies(const Guard& other) const {
  unsigned m = std::lcm(modulus_, other.modulus_);
  for (unsigned r = 0; r < m; ++r)
    if (residues_.count(r % modulus_) && !other.residues_.count(r % other.modulus_)) return false;
  return true;
}

std::string Guard::to_string() const {
  if (is_trivial()) return "all q";
  if (residues_.size() == 1) {
    unsigned r = *residues_.begin();
    if (r == 0) return std::to_string(modulus_) + "|q";
    return std::to_string(modulus_) + "|q-" + std::to_string(r);
  }
  std::ostringstream os;
  os << "q mod " << modulus_ << " in {";
  bool first = true;
  for (unsigned r : residues_) {
    if (!first) os << ",";
    os << r;
    first = false;
  }
  os << "}";
  return os.str();
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::UnsatisfiableGuard: return "UnsatisfiableGuard";
    case Errc::GuardViolation: return "GuardViolation";
    case Errc::SupportMismatch: return "SupportMismatch";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::UnknownName: return "UnknownName";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NoIntegerSolution: return "NoIntegerSolution";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::NonInvertibleMatrix: return "NonInvertibleMatrix";
    case Errc::IncompleteRegistry: return "IncompleteRegistry";
    case Errc::InconsistentTable: return "InconsistentTable";
    case Errc::MissingData: return "MissingData";
    case Errc::IoError: return "IoError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace lietab
