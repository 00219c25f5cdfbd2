#ifndef LIETAB_GROUP_HPP
#define LIETAB_GROUP_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lietab/genvalue.hpp"

namespace lietab {

/// One named conjugacy class of a generic table fragment.  A row may stand
/// for a whole family of classes sharing the same centralizer order and
/// values; family_size is the generic number of classes in the family
/// (1 for an ordinary class).
struct ClassFamily {
  std::string name;
  GenValue centralizer_order;
  std::string inverse_class;
  bool is_unipotent = false;
  std::optional<std::string> semisimple_label;
  Guard guard;  // existence condition on q
  std::optional<std::string> split_parent;
  GenValue family_size = GenValue(1);
  bool connected_centralizer = false;
};

/// A generic group/table fragment: a named list of classes with a generic
/// order.  `complete` asserts the list is exhaustive for every admissible q.
class GenericGroup {
 public:
  std::string name;
  GenValue order;
  std::vector<ClassFamily> classes;
  bool complete = false;

  bool has_class(const std::string& cls) const;
  std::size_t index_of(const std::string& cls) const;   // UnknownClass
  const ClassFamily& class_named(const std::string& cls) const;

  /// order / centralizer_order under the class guard.
  GenValue class_size(const std::string& cls) const;

  std::vector<std::string> class_names() const;
};

using GroupPtr = std::shared_ptr<const GenericGroup>;

struct ValidationIssue {
  std::string code;    // stable machine-readable tag, e.g. "InverseNotInvolution"
  std::string detail;  // names the offending classes/values
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  void add(std::string code, std::string detail);
  std::string to_string() const;
};

/// Checks every structural invariant of a group fragment: reduced class
/// sizes are polynomials, the inverse map is an involution preserving
/// centralizer order and guard, size-one classes are self-inverse, split
/// siblings agree on centralizer order, and (for complete groups) the class
/// sizes sum to the group order under every residue scenario of the guards.
/// Violations are report entries, never exceptions.
ValidationReport validate_group(const GenericGroup& G);

/// A partial or total class function: values defined exactly on `support()`.
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(GroupPtr group, std::string name = "");

  const GroupPtr& group() const { return group_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Defines the value at a class.  UnknownClass if the class does not
  /// exist; UnsatisfiableGuard if the value's guard excludes every q
  /// admitted by the class guard.
  void set(const std::string& cls, GenValue v);

  bool defined_at(const std::string& cls) const;
  const GenValue& at(const std::string& cls) const;  // SupportMismatch
  const std::map<std::string, GenValue>& values() const { return values_; }
  std::vector<std::string> support() const;
  bool total() const;  // support covers every class of the group

  ClassFunction conj() const;  // pointwise cyclotomic conjugation

 private:
  GroupPtr group_;
  std::string name_;
  std::map<std::string, GenValue> values_;
};

/// Inner product restricted to `over`; `partial` is set unless `over` is the
/// full class list of a complete group.
struct InnerProductResult {
  GenValue value;
  bool partial = true;
};

/// |Γ|^{-1} Σ_{C ∈ over} family_size(C)·|C|·f(C)·conj(g(C)).
/// SupportMismatch if some class of `over` is outside either support.
InnerProductResult inner_product(const ClassFunction& f, const ClassFunction& g,
                                 const std::vector<std::string>& over);

/// Inner product over the full class list.
InnerProductResult inner_product(const ClassFunction& f, const ClassFunction& g);

/// The normalised indicator of C: value |Γ|/|C| (= centralizer order) at C,
/// zero elsewhere; support is the full class list.  UnknownClass if C does
/// not exist; InvalidArgument if C is a parameterized family (family_size
/// generically ≠ 1), whose single-member indicator is not representable.
ClassFunction indicator(const GroupPtr& G, const std::string& C);

/// Pointwise linear combination Σ cᵢ·fᵢ on the common support.
/// InvalidArgument if the functions live on different groups;
/// SupportMismatch if the support intersection is empty.
ClassFunction combine(const std::vector<std::pair<GenValue, ClassFunction>>& terms);

}  // namespace lietab

#endif
