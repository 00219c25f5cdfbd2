#include "lietab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "lietab/errors.hpp"
#include "lietab/model.hpp"
#include "lietab/pipeline.hpp"
#include "lietab/text_format.hpp"
#include "lietab/verify.hpp"

struct lietab_model {
  lietab::Model m;
};

struct lietab_artifacts {
  lietab::Artifacts a;
};

namespace {

thread_local std::string g_last_error;

lietab_status status_of(lietab::Errc c) {
  using lietab::Errc;
  switch (c) {
    case Errc::ParseError:
      return LIETAB_ERR_PARSE;
    case Errc::IoError:
      return LIETAB_ERR_IO;
    case Errc::DivisionByZero:
    case Errc::UnsatisfiableGuard:
    case Errc::GuardViolation:
    case Errc::RankDeficient:
    case Errc::NoIntegerSolution:
    case Errc::Inconsistent:
    case Errc::NonInvertibleMatrix:
    case Errc::IncompleteRegistry:
      return LIETAB_ERR_MATH;
    default:
      return LIETAB_ERR_VALIDATION;
  }
}

lietab_status set_error(const lietab::EngineError& e) {
  g_last_error = e.what();
  return status_of(e.code());
}

lietab_status usage(const char* what) {
  g_last_error = std::string("usage: ") + what;
  return LIETAB_ERR_USAGE;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
lietab_status guarded(F&& f) {
  try {
    f();
    return LIETAB_OK;
  } catch (const lietab::EngineError& e) {
    return set_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LIETAB_ERR_USAGE;
  }
}

}  // namespace

extern "C" {

const char* lietab_version(void) { return "0.1.0"; }

const char* lietab_last_error(void) { return g_last_error.c_str(); }

void lietab_string_free(char* s) { std::free(s); }

lietab_status lietab_model_load(const char* path, lietab_model** out) {
  if (!path || !out) return usage("lietab_model_load requires path and out");
  return guarded([&] { *out = new lietab_model{lietab::ingest(path)}; });
}

lietab_status lietab_model_load_string(const char* text, lietab_model** out) {
  if (!text || !out) return usage("lietab_model_load_string requires text and out");
  return guarded([&] { *out = new lietab_model{lietab::ingest_string(text)}; });
}

void lietab_model_free(lietab_model* m) { delete m; }

lietab_status lietab_export(const lietab_model* m, const char* format,
                            char** out) {
  if (!m || !format || !out) return usage("lietab_export requires model, format, out");
  const std::string fmt = format;
  if (fmt != "json" && fmt != "text")
    return usage("format must be \"json\" or \"text\"");
  return guarded([&] {
    *out = dup_string(fmt == "json" ? lietab::export_model(m->m)
                                    : lietab::render_text(m->m));
  });
}

lietab_status lietab_verify(const lietab_model* m, const long long* qs,
                            size_t nq, int* ok, char** report) {
  if (!m || !ok || !report) return usage("lietab_verify requires model, ok, report");
  if (nq > 0 && !qs) return usage("lietab_verify: nq > 0 but qs is null");
  return guarded([&] {
    lietab::VerifyOptions opt;
    opt.at.assign(qs, qs + nq);
    const lietab::VerifyReport rep = lietab::verify_model(m->m, opt);
    *ok = rep.ok() ? 1 : 0;
    *report = dup_string(rep.to_string());
  });
}

lietab_status lietab_inner(const lietab_model* m, const char* left,
                           const char* right, int support_unipotent,
                           int* partial, char** value) {
  if (!m || !left || !right || !partial || !value)
    return usage("lietab_inner requires model, left, right, partial, value");
  return guarded([&] {
    const lietab::ClassFunction& f = m->m.function(left);
    const lietab::ClassFunction& g = m->m.function(right);
    lietab::InnerProductResult r;
    if (support_unipotent) {
      std::vector<std::string> uni;
      for (const auto& fam : f.group()->classes)
        if (fam.is_unipotent) uni.push_back(fam.name);
      r = lietab::inner_product(f, g, uni);
    } else {
      r = lietab::inner_product(f, g);
    }
    *partial = r.partial ? 1 : 0;
    *value = dup_string(r.value.to_string());
  });
}

lietab_status lietab_run(const lietab_model* m, const char* plan_path,
                         lietab_artifacts** out) {
  if (!m || !plan_path || !out) return usage("lietab_run requires model, plan, out");
  return guarded([&] {
    const lietab::Plan plan = lietab::parse_plan(plan_path);
    *out = new lietab_artifacts{lietab::run_pipeline(m->m, plan)};
  });
}

lietab_status lietab_run_string(const lietab_model* m, const char* plan_text,
                                lietab_artifacts** out) {
  if (!m || !plan_text || !out)
    return usage("lietab_run_string requires model, plan, out");
  return guarded([&] {
    const lietab::Plan plan = lietab::parse_plan_string(plan_text);
    *out = new lietab_artifacts{lietab::run_pipeline(m->m, plan)};
  });
}

void lietab_artifacts_free(lietab_artifacts* a) { delete a; }

lietab_status lietab_artifacts_to_json(const lietab_artifacts* a, char** out) {
  if (!a || !out) return usage("lietab_artifacts_to_json requires artifacts and out");
  return guarded([&] { *out = dup_string(lietab::export_artifacts_json(a->a)); });
}

}  // extern "C"
