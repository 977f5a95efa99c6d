#include "cyldom/cyldom.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "cyldom/bounds.hpp"
#include "cyldom/cache.hpp"
#include "cyldom/dp_engine.hpp"
#include "cyldom/error.hpp"
#include "cyldom/oracle.hpp"
#include "cyldom/state_space.hpp"
#include "cyldom/transitions.hpp"
#include "cyldom/verify.hpp"

struct cyldom_waste_table {
  std::shared_ptr<const cyldom::WasteTable> table;
};

struct cyldom_table_set {
  cyldom::TableSet set;
};

struct cyldom_report {
  cyldom::BoundReport report;
};

namespace {

thread_local std::string g_last_error;

cyldom_status status_of(cyldom::ErrorKind kind) {
  using cyldom::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument: return CYLDOM_ERR_INVALID_ARGUMENT;
    case ErrorKind::Capacity: return CYLDOM_ERR_CAPACITY;
    case ErrorKind::IncompleteTable: return CYLDOM_ERR_INCOMPLETE_TABLE;
    case ErrorKind::Infeasible: return CYLDOM_ERR_INFEASIBLE;
    case ErrorKind::Domain: return CYLDOM_ERR_DOMAIN;
    case ErrorKind::NoWitness: return CYLDOM_ERR_NO_WITNESS;
    case ErrorKind::Io: return CYLDOM_ERR_IO;
    case ErrorKind::Format: return CYLDOM_ERR_FORMAT;
  }
  return CYLDOM_ERR_INTERNAL;
}

cyldom_status set_error(cyldom_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Body>
cyldom_status guarded(Body&& body) {
  try {
    body();
    return CYLDOM_OK;
  } catch (const cyldom::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CYLDOM_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CYLDOM_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(CYLDOM_ERR_INTERNAL, "unknown exception");
  }
}

#define CYLDOM_REQUIRE(cond, what)                                  \
  do {                                                              \
    if (!(cond)) return set_error(CYLDOM_ERR_INVALID_ARGUMENT, what); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cyldom::Variant to_variant(cyldom_variant v) {
  if (v != CYLDOM_BOUNDARY && v != CYLDOM_INTERIOR) cyldom::fail(cyldom::ErrorKind::InvalidArgument, "unknown variant");
  return v == CYLDOM_BOUNDARY ? cyldom::Variant::Boundary : cyldom::Variant::Interior;
}

cyldom_variant from_variant(cyldom::Variant v) {
  return v == cyldom::Variant::Boundary ? CYLDOM_BOUNDARY : CYLDOM_INTERIOR;
}

}  // namespace

extern "C" {

const char* cyldom_version(void) { return "1.0.0"; }

const char* cyldom_last_error(void) { return g_last_error.c_str(); }

const char* cyldom_status_name(cyldom_status status) {
  switch (status) {
    case CYLDOM_OK: return "ok";
    case CYLDOM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CYLDOM_ERR_CAPACITY: return "capacity exceeded";
    case CYLDOM_ERR_INCOMPLETE_TABLE: return "incomplete table";
    case CYLDOM_ERR_INFEASIBLE: return "infeasible";
    case CYLDOM_ERR_DOMAIN: return "out of domain";
    case CYLDOM_ERR_NO_WITNESS: return "no witness";
    case CYLDOM_ERR_IO: return "i/o error";
    case CYLDOM_ERR_FORMAT: return "format error";
    case CYLDOM_ERR_INTERNAL: break;
  }
  return "internal error";
}

void cyldom_string_free(char* s) { std::free(s); }

cyldom_status cyldom_parse_variant(const char* name, cyldom_variant* out) {
  CYLDOM_REQUIRE(name && out, "null argument");
  const auto v = cyldom::parse_variant(name);
  if (!v) return set_error(CYLDOM_ERR_INVALID_ARGUMENT, std::string("unknown variant '") + name + "'");
  *out = from_variant(*v);
  return CYLDOM_OK;
}

cyldom_status cyldom_state_count(int height, uint64_t* out) {
  CYLDOM_REQUIRE(out, "null argument");
  return guarded([&] { *out = cyldom::enumerate_valid_states(height).size(); });
}

cyldom_status cyldom_transition_count(int height, cyldom_variant variant, uint64_t* out) {
  CYLDOM_REQUIRE(out, "null argument");
  return guarded([&] {
    const cyldom::Variant v = to_variant(variant);
    const cyldom::StateTable states = cyldom::enumerate_valid_states(height);
    std::uint64_t total = 0;
    for (const auto& s : states.states()) total += cyldom::successor_count(s, v);
    *out = total;
  });
}

void cyldom_dp_config_default(cyldom_variant variant, cyldom_dp_config* out) {
  if (!out) return;
  const cyldom::DpParams p = cyldom::default_params(
      variant == CYLDOM_INTERIOR ? cyldom::Variant::Interior : cyldom::Variant::Boundary);
  *out = {p.n_max, p.search.p_max, p.search.window, p.threads};
}

cyldom_status cyldom_waste_table_compute(int height, cyldom_variant variant,
                                         const cyldom_dp_config* config,
                                         cyldom_progress_fn progress, void* user,
                                         cyldom_waste_table** out) {
  CYLDOM_REQUIRE(out, "null argument");
  *out = nullptr;
  return guarded([&] {
    const cyldom::Variant v = to_variant(variant);
    cyldom::DpParams params = cyldom::default_params(v);
    if (config) {
      params.n_max = config->n_max;
      params.search.p_max = config->p_max;
      params.search.window = config->window;
      params.threads = config->threads;
    }
    if (progress) params.progress = [progress, user](std::size_t done, std::size_t total) { progress(done, total, user); };
    const cyldom::TransitionTable table = cyldom::build_transition_table(height, v);
    auto handle = std::make_unique<cyldom_waste_table>();
    handle->table = std::make_shared<const cyldom::WasteTable>(cyldom::compute_waste_table(table, params));
    *out = handle.release();
  });
}

cyldom_status cyldom_waste_table_load(const char* path, cyldom_waste_table** out) {
  CYLDOM_REQUIRE(path && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<cyldom_waste_table>();
    handle->table = std::make_shared<const cyldom::WasteTable>(cyldom::WasteTable::load(path));
    *out = handle.release();
  });
}

cyldom_status cyldom_waste_table_save(const cyldom_waste_table* table, const char* path) {
  CYLDOM_REQUIRE(table && path, "null argument");
  return guarded([&] { table->table->save(path); });
}

cyldom_status cyldom_waste_table_load_cached(const char* dir, cyldom_variant variant, int height,
                                             int n_max, cyldom_waste_table** out) {
  CYLDOM_REQUIRE(dir && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto cached = cyldom::load_cached(dir, to_variant(variant), height, n_max);
    if (!cached) return;
    auto handle = std::make_unique<cyldom_waste_table>();
    handle->table = std::move(cached);
    *out = handle.release();
  });
}

cyldom_status cyldom_waste_table_store_cached(const char* dir, const cyldom_waste_table* table,
                                              char** path_out) {
  CYLDOM_REQUIRE(dir && table, "null argument");
  return guarded([&] {
    const std::string path = cyldom::store_cached(dir, *table->table);
    if (path_out) *path_out = dup_string(path);
  });
}

cyldom_status cyldom_cache_file_name(cyldom_variant variant, int height, int n_max, char** out) {
  CYLDOM_REQUIRE(out, "null argument");
  return guarded([&] { *out = dup_string(cyldom::cache_file_name(to_variant(variant), height, n_max)); });
}

void cyldom_waste_table_free(cyldom_waste_table* table) { delete table; }

cyldom_status cyldom_waste_table_info(const cyldom_waste_table* table, cyldom_table_info* out) {
  CYLDOM_REQUIRE(table && out, "null argument");
  const cyldom::WasteTable& t = *table->table;
  *out = {};
  out->height = t.height();
  out->variant = from_variant(t.variant());
  out->n_max = t.n_max();
  out->seeds_total = t.seeds_total();
  out->seeds_certified = t.seeds_certified();
  if (const auto& g = t.global()) {
    out->has_global = 1;
    out->global_first = g->first;
    out->global_period = g->period;
    out->global_increment = g->increment;
  }
  if (const auto& r = t.residue_constants()) out->residue_count = r->size();
  return CYLDOM_OK;
}

cyldom_status cyldom_waste_table_residues(const cyldom_waste_table* table, int64_t* out,
                                          size_t capacity) {
  CYLDOM_REQUIRE(table && (out || capacity == 0), "null argument");
  const auto& r = table->table->residue_constants();
  if (!r) return set_error(CYLDOM_ERR_INCOMPLETE_TABLE, "table has no residue constants");
  for (std::size_t k = 0; k < r->size() && k < capacity; ++k) out[k] = (*r)[k];
  return CYLDOM_OK;
}

cyldom_status cyldom_waste_table_query(const cyldom_waste_table* table, int64_t n, int64_t* out) {
  CYLDOM_REQUIRE(table && out, "null argument");
  return guarded([&] {
    const cyldom::Waste w = table->table->query(n);
    *out = cyldom::finite(w) ? w : -1;
  });
}

cyldom_status cyldom_waste_table_to_json(const cyldom_waste_table* table, char** out) {
  CYLDOM_REQUIRE(table && out, "null argument");
  return guarded([&] { *out = dup_string(table->table->to_json()); });
}

cyldom_status cyldom_table_set_new(cyldom_table_set** out) {
  CYLDOM_REQUIRE(out, "null argument");
  return guarded([&] { *out = new cyldom_table_set(); });
}

cyldom_status cyldom_table_set_add(cyldom_table_set* set, const cyldom_waste_table* table) {
  CYLDOM_REQUIRE(set && table, "null argument");
  return guarded([&] { set->set.add(table->table); });
}

void cyldom_table_set_free(cyldom_table_set* set) { delete set; }

void cyldom_report_options_default(cyldom_report_options* out) {
  if (out) *out = {0, 1};
}

cyldom_status cyldom_report_make(int64_t n, int64_t m, const cyldom_table_set* set,
                                 const cyldom_report_options* options, cyldom_report** out) {
  CYLDOM_REQUIRE(out, "null argument");
  *out = nullptr;
  return guarded([&] {
    cyldom::ReportOptions opts;
    if (options) {
      opts.with_exact = options->with_exact != 0;
      opts.allow_padding = options->allow_padding != 0;
    }
    static const cyldom::TableSet kEmpty;
    auto handle = std::make_unique<cyldom_report>();
    handle->report = cyldom::make_report(n, m, set ? set->set : kEmpty, opts);
    *out = handle.release();
  });
}

cyldom_status cyldom_report_values_get(const cyldom_report* report, cyldom_report_values* out) {
  CYLDOM_REQUIRE(report && out, "null argument");
  const cyldom::BoundReport& r = report->report;
  *out = {};
  out->n = r.n;
  out->m = r.m;
  out->total_waste = r.total_waste;
  out->lower = r.lower;
  if (r.paper_lower) {
    out->has_paper_lower = 1;
    out->paper_lower_num = r.paper_lower->num();
    out->paper_lower_den = r.paper_lower->den();
  }
  out->upper_ref_num = r.upper_ref.num();
  out->upper_ref_den = r.upper_ref.den();
  if (r.exact) {
    out->has_exact = 1;
    out->exact = *r.exact;
  }
  out->has_partition = r.partition.has_value();
  out->is_exact = r.status() == "exact";
  return CYLDOM_OK;
}

cyldom_status cyldom_report_partition(const cyldom_report* report, char** out) {
  CYLDOM_REQUIRE(report && out, "null argument");
  return guarded([&] {
    *out = dup_string(report->report.partition ? report->report.partition->to_string() : "");
  });
}

cyldom_status cyldom_report_format(const cyldom_report* report, cyldom_format format, char** out) {
  CYLDOM_REQUIRE(report && out, "null argument");
  return guarded([&] {
    switch (format) {
      case CYLDOM_FORMAT_JSON: *out = dup_string(cyldom::report_json(report->report)); return;
      case CYLDOM_FORMAT_CSV: *out = dup_string(cyldom::report_csv_row(report->report)); return;
      case CYLDOM_FORMAT_MARKDOWN: *out = dup_string(cyldom::report_markdown_row(report->report)); return;
    }
    cyldom::fail(cyldom::ErrorKind::InvalidArgument, "unknown format");
  });
}

cyldom_status cyldom_report_header(cyldom_format format, char** out) {
  CYLDOM_REQUIRE(out, "null argument");
  return guarded([&] {
    switch (format) {
      case CYLDOM_FORMAT_JSON: *out = dup_string(""); return;
      case CYLDOM_FORMAT_CSV: *out = dup_string(cyldom::report_csv_header()); return;
      case CYLDOM_FORMAT_MARKDOWN: *out = dup_string(cyldom::report_markdown_header()); return;
    }
    cyldom::fail(cyldom::ErrorKind::InvalidArgument, "unknown format");
  });
}

void cyldom_report_free(cyldom_report* report) { delete report; }

cyldom_status cyldom_paper_lower_bound(int64_t n, int64_t m, int64_t* num, int64_t* den) {
  CYLDOM_REQUIRE(num && den, "null argument");
  return guarded([&] {
    const cyldom::Rational r = cyldom::paper_lower_bound(n, m);
    *num = r.num();
    *den = r.den();
  });
}

cyldom_status cyldom_upper_bound_reference(int64_t n, int64_t m, int64_t* num, int64_t* den) {
  CYLDOM_REQUIRE(num && den, "null argument");
  return guarded([&] {
    const cyldom::Rational r = cyldom::upper_bound_reference(n, m);
    *num = r.num();
    *den = r.den();
  });
}

cyldom_status cyldom_exact_domination_number(int n, int m, int* gamma) {
  CYLDOM_REQUIRE(gamma, "null argument");
  return guarded([&] { *gamma = cyldom::oracle::exact_domination_number(n, m).gamma; });
}

cyldom_status cyldom_brute_min_waste(int height, int n, cyldom_variant variant, int64_t* out) {
  CYLDOM_REQUIRE(out, "null argument");
  return guarded([&] { *out = cyldom::oracle::brute_min_waste(height, n, to_variant(variant)); });
}

cyldom_status cyldom_verify(const char* suite, int threads, const char* cache_dir, cyldom_log_fn log,
                            void* user, int* passed, char** report_json) {
  CYLDOM_REQUIRE(suite && passed, "null argument");
  const auto s = cyldom::parse_suite(suite);
  if (!s) return set_error(CYLDOM_ERR_INVALID_ARGUMENT, std::string("unknown suite '") + suite + "'");
  CYLDOM_REQUIRE(threads >= 1, "threads must be at least 1");
  return guarded([&] {
    cyldom::VerifyOptions options;
    options.threads = threads;
    if (cache_dir) options.cache_dir = cache_dir;
    if (log) options.log = [log, user](const std::string& line) { log(line.c_str(), user); };
    const cyldom::VerifyReport report = cyldom::run_verify(*s, options);
    *passed = report.passed() ? 1 : 0;
    if (report_json) *report_json = dup_string(report.to_json());
  });
}

}  // extern "C"
