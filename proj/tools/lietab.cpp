// Command-line front end.  Talks to the engine exclusively through the C
// API in lietab.h, so it doubles as a smoke test of the shared library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lietab.h"

namespace {

struct ModelDeleter {
  void operator()(lietab_model* m) const { lietab_model_free(m); }
};
struct ArtifactsDeleter {
  void operator()(lietab_artifacts* a) const { lietab_artifacts_free(a); }
};
struct StringDeleter {
  void operator()(char* s) const { lietab_string_free(s); }
};

using ModelPtr = std::unique_ptr<lietab_model, ModelDeleter>;
using ArtifactsPtr = std::unique_ptr<lietab_artifacts, ArtifactsDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// 0 success, 1 inconsistent data, 2 unreadable input, 3 exact math failure.
int exit_code(lietab_status s) {
  switch (s) {
    case LIETAB_OK: return 0;
    case LIETAB_ERR_VALIDATION: return 1;
    case LIETAB_ERR_PARSE: return 2;
    case LIETAB_ERR_IO: return 2;
    case LIETAB_ERR_MATH: return 3;
    default: return 2;
  }
}

int complain(lietab_status s) {
  std::cerr << "error: " << lietab_last_error() << "\n";
  return exit_code(s);
}

ModelPtr load_model(const std::string& path, int& rc) {
  lietab_model* raw = nullptr;
  const lietab_status s = lietab_model_load(path.c_str(), &raw);
  if (s != LIETAB_OK) {
    rc = complain(s);
    return nullptr;
  }
  rc = 0;
  return ModelPtr(raw);
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

long long parse_q(const std::string& arg) {
  std::string digits = arg;
  if (digits.rfind("q=", 0) == 0) digits = digits.substr(2);
  return std::stoll(digits);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generic character-table toolkit"};
  app.set_version_flag("--version", lietab_version());
  app.require_subcommand(1);

  // validate
  std::vector<std::string> validate_files;
  auto* cmd_validate = app.add_subcommand("validate", "parse and cross-check table files");
  cmd_validate->add_option("files", validate_files, "table files")->required();

  // run
  std::string run_plan, run_data, run_out;
  auto* cmd_run = app.add_subcommand("run", "execute a computation plan");
  cmd_run->add_option("--plan", run_plan, "plan file")->required();
  cmd_run->add_option("data", run_data, "table file")->required();
  cmd_run->add_option("-o,--out", run_out, "write artifacts here instead of stdout");

  // verify
  std::string verify_data;
  std::vector<std::string> verify_at;
  auto* cmd_verify = app.add_subcommand("verify", "run the consistency sweep");
  cmd_verify->add_option("data", verify_data, "table file")->required();
  cmd_verify->add_option("--at", verify_at, "also specialize exactly at these prime powers");

  // export
  std::string export_data, export_format = "json", export_out;
  auto* cmd_export = app.add_subcommand("export", "canonical rendering of a table file");
  cmd_export->add_option("data", export_data, "table file")->required();
  cmd_export->add_option("--format", export_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_export->add_option("-o,--out", export_out, "output file");

  // inner
  std::string inner_data, inner_left, inner_right, inner_support;
  auto* cmd_inner = app.add_subcommand("inner", "inner product of two class functions");
  cmd_inner->add_option("data", inner_data, "table file")->required();
  cmd_inner->add_option("--left", inner_left, "first function")->required();
  cmd_inner->add_option("--right", inner_right, "second function")->required();
  cmd_inner->add_option("--support", inner_support, "restrict the sum (\"unipotent\")")
      ->check(CLI::IsMember({"unipotent"}));

  CLI11_PARSE(app, argc, argv);

  if (cmd_validate->parsed()) {
    for (const auto& path : validate_files) {
      int rc = 0;
      ModelPtr m = load_model(path, rc);
      if (!m) return rc;
      std::cout << "ok " << path << "\n";
    }
    return 0;
  }

  if (cmd_run->parsed()) {
    int rc = 0;
    ModelPtr m = load_model(run_data, rc);
    if (!m) return rc;
    lietab_artifacts* raw = nullptr;
    if (lietab_status s = lietab_run(m.get(), run_plan.c_str(), &raw); s != LIETAB_OK)
      return complain(s);
    ArtifactsPtr art(raw);
    char* json = nullptr;
    if (lietab_status s = lietab_artifacts_to_json(art.get(), &json); s != LIETAB_OK)
      return complain(s);
    return write_output(StringPtr(json).get(), run_out);
  }

  if (cmd_verify->parsed()) {
    int rc = 0;
    ModelPtr m = load_model(verify_data, rc);
    if (!m) return rc;
    std::vector<long long> qs;
    for (const auto& a : verify_at) {
      try {
        qs.push_back(parse_q(a));
      } catch (const std::exception&) {
        std::cerr << "error: --at expects an integer, got " << a << "\n";
        return 2;
      }
    }
    int ok = 0;
    char* report = nullptr;
    if (lietab_status s = lietab_verify(m.get(), qs.data(), qs.size(), &ok, &report);
        s != LIETAB_OK)
      return complain(s);
    std::cout << StringPtr(report).get();
    return ok ? 0 : 3;
  }

  if (cmd_export->parsed()) {
    int rc = 0;
    ModelPtr m = load_model(export_data, rc);
    if (!m) return rc;
    char* text = nullptr;
    if (lietab_status s = lietab_export(m.get(), export_format.c_str(), &text);
        s != LIETAB_OK)
      return complain(s);
    return write_output(StringPtr(text).get(), export_out);
  }

  if (cmd_inner->parsed()) {
    int rc = 0;
    ModelPtr m = load_model(inner_data, rc);
    if (!m) return rc;
    int partial = 0;
    char* value = nullptr;
    if (lietab_status s = lietab_inner(m.get(), inner_left.c_str(), inner_right.c_str(),
                                       inner_support == "unipotent", &partial, &value);
        s != LIETAB_OK)
      return complain(s);
    std::cout << StringPtr(value).get() << "\n";
    if (partial) std::cerr << "note: partial sum over a restricted support\n";
    return 0;
  }

  return 2;
}
