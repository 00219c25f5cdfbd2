#ifndef LIETAB_MODEL_HPP
#define LIETAB_MODEL_HPP

#include <map>
#include <string>
#include <vector>

#include "lietab/dl_registry.hpp"
#include "lietab/group.hpp"
#include "lietab/induction.hpp"
#include "lietab/split.hpp"

namespace lietab {

/// Metadata for one character-series label: the characters it houses and how
/// their unipotent-support values are obtained (route "ingested", "uniform"
/// or "induce"), plus the references needed by the induction and mixed-class
/// steps.
struct SeriesInfo {
  std::string label;
  std::string group;
  std::vector<std::string> characters;
  std::string method;                          // "", "ingested", "uniform", "induce"
  std::string green;                           // Green table (induce route)
  std::map<std::string, std::string> psi_of;   // character → induced ψ (induce route)
  std::map<std::string, long> signs;           // character → ±1 (induce route)
  std::string levi;                            // subgroup label (mixed-class step)
  std::string mult;                            // multiplicity matrix (mixed-class step)
  std::map<std::string, std::string> twists;   // ψ → constant expression
};

/// A fully specialized reference table at one prime power, for cross-checks.
struct NumericTable {
  std::string group;
  long long q = 0;
  std::map<std::string, std::map<std::string, GenValue>> values;  // char → class → value
};

/// Everything one data file carries: groups, class functions, registries,
/// Green tables, multiplicity matrices, split-class data, series metadata
/// and optional numeric reference tables.
struct Model {
  std::vector<std::string> group_order;  // insertion order, for stable export
  std::map<std::string, GroupPtr> groups;

  std::vector<std::string> function_order;
  std::map<std::string, ClassFunction> functions;

  std::vector<std::string> registry_order;  // keyed by group name
  std::map<std::string, DLRegistry> registries;

  std::vector<std::string> green_order;
  std::map<std::string, GreenTable> greens;

  std::vector<std::string> mult_order;
  std::map<std::string, MultiplicityMatrix> mults;

  std::vector<std::pair<std::string, SplitClassDatum>> split_data;  // (group, datum)
  std::vector<SeriesInfo> series;
  std::vector<NumericTable> numeric_tables;

  const GroupPtr& group(const std::string& name) const;            // UnknownName
  const ClassFunction& function(const std::string& name) const;    // UnknownName
  const SeriesInfo& series_named(const std::string& label) const;  // UnknownName
};

/// All cross-reference and structural checks on an assembled model; every
/// issue names the offending table/class/character.
ValidationReport validate_model(const Model& m);

/// Parses and fully validates a model file.  ParseError carries the position;
/// aggregated validation failures raise InconsistentTable; unreadable files
/// raise IoError.
Model ingest(const std::string& path);
Model ingest_string(const std::string& text, const std::string& origin = "<string>");

/// Canonical JSON rendering; ingest(export_model(m)) reproduces m exactly
/// and re-exporting is byte-stable.
std::string export_model(const Model& m);

}  // namespace lietab

#endif
