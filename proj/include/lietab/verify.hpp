#ifndef LIETAB_VERIFY_HPP
#define LIETAB_VERIFY_HPP

#include <string>
#include <vector>

#include "lietab/model.hpp"

namespace lietab {

struct VerifyOptions {
  std::vector<long long> at;  // prime powers for specialization checks
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok() const;
  std::string to_string() const;
};

/// Consistency sweep over a model: structural validation, orthonormality of
/// the character families of complete tables, split-class data, invertibility
/// of the square character/class value matrices, guard-coverage, exact
/// specialization at the requested q, and comparison against any bundled
/// numeric reference tables.
VerifyReport verify_model(const Model& m, const VerifyOptions& opt = {});

}  // namespace lietab

#endif
