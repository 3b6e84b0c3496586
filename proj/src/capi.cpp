#include "contragraph.h"

#include <cstring>
#include <memory>
#include <string>

#include "core/certificate.hpp"
#include "core/concepts.hpp"
#include "core/error.hpp"
#include "core/formats.hpp"
#include "core/graph.hpp"
#include "core/verify.hpp"
#include "core/version.hpp"

struct cg_class {
  std::shared_ptr<const cg::ConceptClass> impl;
};

// Holds either a full labeled graph or an adjacency-only import.
struct cg_graph {
  std::shared_ptr<const cg::ContradictionGraph> labeled;
  std::shared_ptr<const cg::AbstractGraph> abstract;

  const std::vector<cg::Bitset>& rows() const {
    return labeled ? labeled->adjacency() : abstract->rows;
  }
};

namespace {

thread_local std::string g_last_error;

cg_status status_from(cg::ErrorKind kind) {
  switch (kind) {
    case cg::ErrorKind::argument: return CG_ERROR_ARGUMENT;
    case cg::ErrorKind::parse: return CG_ERROR_PARSE;
    case cg::ErrorKind::limit: return CG_ERROR_LIMIT;
    case cg::ErrorKind::io: return CG_ERROR_IO;
    case cg::ErrorKind::internal: return CG_ERROR_INTERNAL;
  }
  return CG_ERROR_INTERNAL;
}

template <typename F>
cg_status guarded(F&& f) {
  try {
    f();
    return CG_OK;
  } catch (const cg::Error& e) {
    g_last_error = e.what();
    return status_from(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CG_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CG_ERROR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* message) {
  if (!ok) cg::fail_argument(message);
}

cg::DetectLimits limits_from(std::uint64_t budget_cliques, std::uint64_t budget_bijections) {
  cg::DetectLimits limits;
  if (budget_cliques > 0) limits.max_cliques = budget_cliques;
  if (budget_bijections > 0) limits.max_bijection_nodes = budget_bijections;
  return limits;
}

std::uint64_t cap_or_default(std::uint64_t cap) { return cap > 0 ? cap : cg::kDefaultVertexCap; }

cg_verdict to_c_verdict(cg::DetectVerdict v) {
  switch (v) {
    case cg::DetectVerdict::found: return CG_VERDICT_FOUND;
    case cg::DetectVerdict::not_found: return CG_VERDICT_NOT_FOUND;
    case cg::DetectVerdict::resource_limit: return CG_VERDICT_RESOURCE_LIMIT;
  }
  return CG_VERDICT_RESOURCE_LIMIT;
}

}  // namespace

extern "C" {

const char* cg_version(void) { return cg::kVersion; }

const char* cg_last_error(void) { return g_last_error.c_str(); }

void cg_string_free(char* text) { delete[] text; }

cg_status cg_class_make_full(int n, cg_class** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new cg_class{std::make_shared<const cg::ConceptClass>(cg::make_full(n))};
  });
}

cg_status cg_class_make_parity(int n, cg_class** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new cg_class{std::make_shared<const cg::ConceptClass>(cg::make_parity(n))};
  });
}

cg_status cg_class_make_prefix_tree(int depth, cg_class** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new cg_class{std::make_shared<const cg::ConceptClass>(cg::make_prefix_tree(depth))};
  });
}

cg_status cg_class_make_random(int n, int64_t count, uint64_t seed, cg_class** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new cg_class{std::make_shared<const cg::ConceptClass>(cg::make_random(n, count, seed))};
  });
}

cg_status cg_class_from_json(const char* text, cg_class** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "text and out must not be null");
    *out = new cg_class{std::make_shared<const cg::ConceptClass>(cg::class_from_json(text))};
  });
}

cg_status cg_class_to_json(const cg_class* cls, char** out_text) {
  return guarded([&] {
    require(cls != nullptr && out_text != nullptr, "cls and out_text must not be null");
    *out_text = copy_string(cg::class_to_json(*cls->impl));
  });
}

void cg_class_free(cg_class* cls) { delete cls; }

int cg_class_domain_size(const cg_class* cls) {
  return cls ? cls->impl->domain_size() : 0;
}

int64_t cg_class_concept_count(const cg_class* cls) {
  return cls ? cls->impl->concept_count() : 0;
}

cg_status cg_class_vc_dimension(const cg_class* cls, int* out_vc) {
  return guarded([&] {
    require(cls != nullptr && out_vc != nullptr, "cls and out_vc must not be null");
    *out_vc = cg::vc_dimension(*cls->impl);
  });
}

cg_status cg_vc_at_least(const cg_class* cls, int m, const char* method,
                         uint64_t budget_cliques, uint64_t budget_bijections,
                         uint64_t cap_vertices, int* out_holds) {
  return guarded([&] {
    require(cls != nullptr && method != nullptr && out_holds != nullptr,
            "cls, method and out_holds must not be null");
    *out_holds = cg::vc_at_least(*cls->impl, m, cg::vc_method_from_name(method),
                                 limits_from(budget_cliques, budget_bijections),
                                 cap_or_default(cap_vertices))
                     ? 1
                     : 0;
  });
}

cg_status cg_graph_build(const cg_class* cls, int m, uint64_t cap_vertices, cg_graph** out) {
  return guarded([&] {
    require(cls != nullptr && out != nullptr, "cls and out must not be null");
    *out = new cg_graph{std::make_shared<const cg::ContradictionGraph>(
                            cg::build_graph(cls->impl, m, cap_or_default(cap_vertices))),
                        nullptr};
  });
}

cg_status cg_graph_from_text(const char* text, const char* format, cg_graph** out) {
  return guarded([&] {
    require(text != nullptr && format != nullptr && out != nullptr,
            "text, format and out must not be null");
    const std::string fmt(format);
    if (fmt == "json") {
      *out = new cg_graph{std::make_shared<const cg::ContradictionGraph>(cg::graph_from_json(text)),
                          nullptr};
    } else if (fmt == "graph6") {
      auto g = std::make_shared<cg::AbstractGraph>();
      g->rows = cg::from_graph6(text);
      *out = new cg_graph{nullptr, std::move(g)};
    } else if (fmt == "dimacs") {
      auto g = std::make_shared<cg::AbstractGraph>();
      g->rows = cg::from_dimacs(text);
      *out = new cg_graph{nullptr, std::move(g)};
    } else {
      cg::fail_argument("unknown graph format '" + fmt + "' (expected json, graph6 or dimacs)");
    }
  });
}

cg_status cg_graph_to_text(const cg_graph* g, const char* format, char** out_text) {
  return guarded([&] {
    require(g != nullptr && format != nullptr && out_text != nullptr,
            "g, format and out_text must not be null");
    const std::string fmt(format);
    if (fmt == "json") {
      if (!g->labeled)
        cg::fail_argument("json export needs a labeled graph; this one is adjacency-only");
      *out_text = copy_string(cg::graph_to_json(*g->labeled));
    } else if (fmt == "graph6") {
      *out_text = copy_string(cg::to_graph6(g->rows()));
    } else if (fmt == "dimacs") {
      *out_text = copy_string(cg::to_dimacs(g->rows()));
    } else {
      cg::fail_argument("unknown graph format '" + fmt + "' (expected json, graph6 or dimacs)");
    }
  });
}

void cg_graph_free(cg_graph* g) { delete g; }

int64_t cg_graph_vertex_count(const cg_graph* g) {
  return g ? static_cast<int64_t>(g->rows().size()) : 0;
}

int64_t cg_graph_edge_count(const cg_graph* g) {
  if (!g) return 0;
  if (g->labeled) return g->labeled->edge_count();
  return g->abstract->edge_count();
}

int cg_graph_order(const cg_graph* g) {
  return (g && g->labeled) ? g->labeled->order() : 0;
}

cg_status cg_graph_equal(const cg_graph* a, const cg_graph* b, int* out_equal) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out_equal != nullptr,
            "a, b and out_equal must not be null");
    if (a->labeled && b->labeled) {
      *out_equal = cg::graphs_equal(*a->labeled, *b->labeled) ? 1 : 0;
    } else {
      cg::fail_argument("graph equality is defined on labeled graphs");
    }
  });
}

cg_status cg_graph_relabel(const cg_graph* g, uint64_t seed, cg_graph** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "g and out must not be null");
    auto shuffled = std::make_shared<cg::AbstractGraph>();
    if (g->labeled) {
      shuffled->rows =
          cg::relabel(*g->labeled, cg::random_permutation(g->labeled->adjacency().size(), seed))
              .rows;
    } else {
      // Permute an adjacency-only graph directly.
      const auto& rows = g->abstract->rows;
      auto perm = cg::random_permutation(rows.size(), seed);
      cg::AbstractGraph tmp(rows.size());
      for (std::size_t u = 0; u < rows.size(); ++u)
        rows[u].for_each_set([&](std::size_t v) {
          tmp.rows[static_cast<std::size_t>(perm[u])].set(static_cast<std::size_t>(perm[v]));
        });
      shuffled->rows = std::move(tmp.rows);
    }
    *out = new cg_graph{nullptr, std::move(shuffled)};
  });
}

cg_status cg_detect_graph(const cg_graph* g, int m, uint64_t budget_cliques,
                          uint64_t budget_bijections, char** out_report_json,
                          cg_verdict* out_verdict) {
  return guarded([&] {
    require(g != nullptr && out_report_json != nullptr && out_verdict != nullptr,
            "g, out_report_json and out_verdict must not be null");
    if (g->labeled && g->labeled->order() != m)
      cg::fail_argument("graph was built for m = " + std::to_string(g->labeled->order()) +
                        ", not m = " + std::to_string(m));
    auto report = cg::abstract_detect(g->rows(), m, limits_from(budget_cliques, budget_bijections));
    *out_report_json = copy_string(cg::detect_report_to_json(report));
    *out_verdict = to_c_verdict(report.verdict);
  });
}

cg_status cg_detect_class(const cg_class* cls, int m, const char* method,
                          uint64_t budget_cliques, uint64_t budget_bijections,
                          uint64_t cap_vertices, char** out_report_json,
                          cg_verdict* out_verdict) {
  return guarded([&] {
    require(cls != nullptr && method != nullptr && out_report_json != nullptr &&
                out_verdict != nullptr,
            "cls, method, out_report_json and out_verdict must not be null");
    const auto route = cg::vc_method_from_name(method);
    const auto limits = limits_from(budget_cliques, budget_bijections);
    const auto cap = cap_or_default(cap_vertices);

    if (route == cg::VcMethod::abstract) {
      auto g = cg::build_graph(cls->impl, m, cap);
      auto report = cg::abstract_detect(g.adjacency(), m, limits);
      *out_report_json = copy_string(cg::detect_report_to_json(report));
      *out_verdict = to_c_verdict(report.verdict);
      return;
    }

    cg::DetectReport report;
    if (route == cg::VcMethod::oracle) {
      report.verdict = cg::shatters_some_set(*cls->impl, m) ? cg::DetectVerdict::found
                                                            : cg::DetectVerdict::not_found;
    } else {
      auto sets = cg::shattered_sets(*cls->impl, m);
      if (sets.empty()) {
        report.verdict = cg::DetectVerdict::not_found;
      } else {
        auto g = cg::build_graph(cls->impl, m, cap);
        report.certificate = cg::forward_certificate(g, sets.front());
        report.verdict = cg::DetectVerdict::found;
      }
    }
    *out_report_json = copy_string(cg::detect_report_to_json(report));
    *out_verdict = to_c_verdict(report.verdict);
  });
}

cg_status cg_verify_run(const char* scope, uint64_t seed, char** out_report_json,
                        int* out_all_passed) {
  return guarded([&] {
    require(scope != nullptr && out_report_json != nullptr && out_all_passed != nullptr,
            "scope, out_report_json and out_all_passed must not be null");
    auto report = cg::run_verification(scope, seed);
    *out_report_json = copy_string(cg::run_report_to_json(report));
    *out_all_passed = report.all_passed() ? 1 : 0;
  });
}

}  // extern "C"
