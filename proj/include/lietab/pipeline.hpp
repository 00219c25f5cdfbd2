#ifndef LIETAB_PIPELINE_HPP
#define LIETAB_PIPELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "lietab/model.hpp"

namespace lietab {

/// One step of a computation plan.  Unused fields stay empty; class lists
/// left empty default to the relevant unipotent class lists.
struct PlanStep {
  int step = 0;         // 1 = Green solve, 2 = unipotent columns,
                        // 3 = induction decomposition, 4 = mixed-class values
  std::string method;   // step 4 routing: "schewe", "split" or "uniform"
  std::string series;   // steps 2 and 4
  std::string out;      // artifact name override
  std::string G, L, P, mult;                    // step 1
  std::vector<std::string> u_classes, v_classes;
  std::vector<std::string> targets, candidates;  // step 3
  std::vector<std::string> classes;              // step 4 evaluation classes
  std::string split;                             // step 4 split parent
  std::map<std::string, std::vector<std::string>> ip;  // step 4 split route
};

struct Plan {
  std::string name;
  std::vector<PlanStep> steps;
};

Plan parse_plan(const std::string& path);
Plan parse_plan_string(const std::string& text, const std::string& origin = "<plan>");

/// The write-once output set of a pipeline run, together with the groups and
/// auxiliary functions needed to re-ingest its export.
class Artifacts {
 public:
  void put_green(const std::string& name, GreenTable t);
  void put_mult(const std::string& name, MultiplicityMatrix m);
  void put_column(const std::string& name, ClassFunction f);
  void record_group(const GroupPtr& g);
  void record_support(const std::string& name, const ClassFunction& f);

  bool has(const std::string& name) const;
  const GreenTable& green(const std::string& name) const;          // UnknownName
  const MultiplicityMatrix& mult(const std::string& name) const;   // UnknownName
  const ClassFunction& column(const std::string& name) const;      // UnknownName

  /// (kind, name) pairs in creation order.
  const std::vector<std::pair<std::string, std::string>>& index() const {
    return index_;
  }
  bool empty() const { return index_.empty(); }

  /// Model-shaped view for export: recorded groups, artifact columns,
  /// support functions, Green tables, multiplicity matrices.
  Model to_model() const;

 private:
  std::vector<std::pair<std::string, std::string>> index_;
  std::map<std::string, GreenTable> greens_;
  std::map<std::string, MultiplicityMatrix> mults_;
  std::map<std::string, ClassFunction> columns_;
  std::vector<std::string> group_order_;
  std::map<std::string, GroupPtr> groups_;
  std::vector<std::string> support_order_;
  std::map<std::string, ClassFunction> support_;
};

/// Runs the plan's steps in order against the model.  Steps read earlier
/// artifacts in preference to ingested tables; every missing input raises
/// MissingData naming it.  Deterministic: identical inputs give identical
/// artifacts.
Artifacts run_pipeline(const Model& model, const Plan& plan);

/// Canonical JSON of the artifact set; the result is ingestible.
std::string export_artifacts_json(const Artifacts& a);

}  // namespace lietab

#endif
