#include "wblow.h"

#include <cstring>
#include <new>
#include <string>

#include "report.hpp"
#include "wblow/errors.hpp"
#include "wblow/localmult.hpp"

struct wbl_poly {
  wblow::PolynomialSystem sys;  // exactly one polynomial
};

struct wbl_report {
  std::string text;
  std::string json;
};

struct wbl_dataset {
  wblow::FamilyDataset data;
};

namespace {

struct LastError {
  std::string message;
  int line = 0;
  int column = 0;
};

thread_local LastError last_error;

wbl_status fail(wbl_status s, const std::string& msg, int line = 0, int column = 0) {
  last_error = {msg, line, column};
  return s;
}

template <class Fn>
wbl_status guarded(Fn&& fn) {
  last_error = {};
  try {
    return fn();
  } catch (const wblow::ParseError& e) {
    return fail(WBL_ERR_PARSE, e.what(), e.line(), e.column());
  } catch (const wblow::ArgumentError& e) {
    return fail(WBL_ERR_ARGUMENT, e.what());
  } catch (const wblow::NotFoundError& e) {
    return fail(WBL_ERR_NOT_FOUND, e.what());
  } catch (const wblow::DataError& e) {
    return fail(WBL_ERR_DATA, e.what());
  } catch (const std::bad_alloc&) {
    return fail(WBL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WBL_ERR_INTERNAL, e.what());
  }
}

template <class Fn>
wbl_status emit(wbl_report** out, Fn&& build) {
  if (!out) return fail(WBL_ERR_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  return guarded([&]() -> wbl_status {
    wblow::report::Report rep = build();
    auto* r = new wbl_report{wblow::report::render_text(rep.doc),
                             wblow::report::render_json(rep.doc)};
    *out = r;
    switch (rep.outcome) {
      case wblow::report::Outcome::Ok: return WBL_OK;
      case wblow::report::Outcome::VerifyFailed: return WBL_VERIFY_FAILED;
      case wblow::report::Outcome::Inconclusive: return WBL_INCONCLUSIVE;
    }
    return WBL_ERR_INTERNAL;
  });
}

std::string need(const char* s, const char* what) {
  if (!s) throw wblow::ArgumentError(std::string(what) + " is NULL");
  return s;
}

std::vector<std::string> var_list(const char* vars) {
  return vars ? wblow::split_list(vars) : std::vector<std::string>{};
}

wblow::PolynomialSystem parse_sys(const char* system, const char* vars) {
  auto sys = wblow::parse_system(need(system, "system"), var_list(vars));
  if (sys.polys.empty()) throw wblow::ArgumentError("no polynomials given");
  return sys;
}

template <class T>
std::vector<T> array(const T* p, std::size_t n, const char* what) {
  if (n && !p) throw wblow::ArgumentError(std::string(what) + " is NULL");
  return std::vector<T>(p, p + n);
}

std::vector<wblow::Rational> rational_list(const char* text) {
  std::vector<wblow::Rational> out;
  if (!text) return out;
  for (const auto& f : wblow::split_list(text)) out.push_back(wblow::parse_rational(f));
  return out;
}

unsigned cap_or_default(unsigned cap) { return cap ? cap : wblow::kDefaultCap; }

}  // namespace

extern "C" {

const char* wbl_version(void) { return "1.0.0"; }

const char* wbl_status_name(wbl_status s) {
  switch (s) {
    case WBL_OK: return "ok";
    case WBL_VERIFY_FAILED: return "verify_failed";
    case WBL_ERR_ARGUMENT: return "argument_error";
    case WBL_INCONCLUSIVE: return "inconclusive";
    case WBL_ERR_PARSE: return "parse_error";
    case WBL_ERR_NOT_FOUND: return "not_found";
    case WBL_ERR_DATA: return "data_error";
    case WBL_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* wbl_last_error(void) { return last_error.message.c_str(); }
int wbl_last_error_line(void) { return last_error.line; }
int wbl_last_error_column(void) { return last_error.column; }

wbl_status wbl_poly_parse(const char* text, const char* vars, wbl_poly** out) {
  if (!out) return fail(WBL_ERR_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new wbl_poly{wblow::parse_polynomial(need(text, "text"), var_list(vars))};
    return WBL_OK;
  });
}

void wbl_poly_free(wbl_poly* p) { delete p; }

size_t wbl_poly_nvars(const wbl_poly* p) { return p ? p->sys.names.size() : 0; }

wbl_status wbl_poly_to_string(const wbl_poly* p, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    if (!p) throw wblow::ArgumentError("polynomial is NULL");
    const std::string s = wblow::to_string(p->sys.polys.front(), p->sys.names);
    if (needed) *needed = s.size();
    if (buf && cap) {
      const std::size_t n = std::min(cap - 1, s.size());
      std::memcpy(buf, s.data(), n);
      buf[n] = '\0';
    }
    return WBL_OK;
  });
}

wbl_status wbl_poly_weighted_order(const wbl_poly* p, const uint32_t* weights, size_t n,
                                   int64_t* order) {
  return guarded([&] {
    if (!p || !order) throw wblow::ArgumentError("NULL argument");
    const auto& f = p->sys.polys.front();
    if (n != f.nvars())
      throw wblow::ArgumentError("need " + std::to_string(f.nvars()) + " weight(s), got " +
                                 std::to_string(n));
    auto o = wblow::weighted_order(f, wblow::WeightVector::ambient(array(weights, n, "weights")));
    *order = o ? static_cast<int64_t>(*o) : -1;
    return WBL_OK;
  });
}

const char* wbl_report_text(const wbl_report* r) { return r ? r->text.c_str() : ""; }
const char* wbl_report_json(const wbl_report* r) { return r ? r->json.c_str() : ""; }
void wbl_report_free(wbl_report* r) { delete r; }

wbl_status wbl_mult(const char* system, const char* vars, unsigned cap, wbl_report** out) {
  return emit(out, [&] { return wblow::report::mult(parse_sys(system, vars), cap_or_default(cap)); });
}

wbl_status wbl_fulton(const char* system, const char* vars, const uint32_t* weights, size_t n,
                      const char* scales, unsigned cap, wbl_report** out) {
  return emit(out, [&] {
    return wblow::report::fulton(parse_sys(system, vars), array(weights, n, "weights"),
                                 rational_list(scales), cap_or_default(cap));
  });
}

wbl_status wbl_quotient(const char* system, const char* vars, uint32_t r,
                        const uint32_t* weights, size_t n, unsigned cap, wbl_report** out) {
  return emit(out, [&] {
    return wblow::report::quotient(parse_sys(system, vars), r, array(weights, n, "weights"),
                                   cap_or_default(cap));
  });
}

wbl_status wbl_order(const char* system, const char* vars, const uint32_t* weights, size_t n,
                     wbl_report** out) {
  return emit(out, [&] {
    return wblow::report::order(parse_sys(system, vars), array(weights, n, "weights"));
  });
}

wbl_status wbl_empty(const char* system, const char* vars, const uint32_t* weights, size_t n,
                     unsigned cap, wbl_report** out) {
  return emit(out, [&] {
    return wblow::report::empty(parse_sys(system, vars), array(weights, n, "weights"),
                                cap_or_default(cap));
  });
}

wbl_status wbl_jacobian(const char* system, const char* vars, const char* point,
                        wbl_report** out) {
  return emit(out, [&] {
    return wblow::report::jacobian(parse_sys(system, vars),
                                   rational_list(need(point, "point").c_str()));
  });
}

wbl_status wbl_threshold_lci(const uint32_t* weights, size_t n, const uint64_t* orders,
                             size_t norders, uint32_t r, wbl_report** out) {
  return emit(out, [&] {
    return wblow::report::threshold_lci(array(weights, n, "weights"),
                                        array(orders, norders, "orders"), r);
  });
}

wbl_status wbl_threshold_cak(unsigned k, uint32_t r1, uint32_t r2, uint32_t a,
                             wbl_report** out) {
  return emit(out, [&] { return wblow::report::threshold_cak(k, r1, r2, a); });
}

wbl_status wbl_threshold_exceptional(int which, wbl_report** out) {
  return emit(out, [&] { return wblow::report::threshold_exceptional(which); });
}

wbl_status wbl_threshold_floor(unsigned k, wbl_report** out) {
  return emit(out, [&] { return wblow::report::threshold_floor(k); });
}

wbl_status wbl_contractions(unsigned k, unsigned a_max, wbl_report** out) {
  return emit(out, [&] { return wblow::report::contractions(k, a_max); });
}

wbl_status wbl_wps(const uint32_t* weights, size_t n, wbl_report** out) {
  return emit(out, [&] { return wblow::report::wps(array(weights, n, "weights")); });
}

wbl_status wbl_isolate(const uint32_t* weights, size_t n, const char* names, const char* point,
                       const char* variant, wbl_report** out) {
  return emit(out, [&] {
    return wblow::report::isolate(
        array(weights, n, "weights"), var_list(names), rational_list(point),
        variant ? std::optional<std::string>(variant) : std::nullopt);
  });
}

wbl_status wbl_dataset_load_default(wbl_dataset** out) {
  if (!out) return fail(WBL_ERR_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new wbl_dataset{wblow::FamilyDataset::embedded()};
    return WBL_OK;
  });
}

wbl_status wbl_dataset_load_file(const char* path, wbl_dataset** out) {
  if (!out) return fail(WBL_ERR_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new wbl_dataset{wblow::FamilyDataset::from_file(need(path, "path"))};
    return WBL_OK;
  });
}

void wbl_dataset_free(wbl_dataset* d) { delete d; }

size_t wbl_dataset_size(const wbl_dataset* d) { return d ? d->data.records().size() : 0; }

wbl_status wbl_families_verify(const wbl_dataset* d, wbl_report** out) {
  return emit(out, [&] {
    if (!d) throw wblow::ArgumentError("dataset is NULL");
    return wblow::report::families_verify(d->data);
  });
}

wbl_status wbl_families_show(const wbl_dataset* d, int family_no, int table, wbl_report** out) {
  return emit(out, [&] {
    if (!d) throw wblow::ArgumentError("dataset is NULL");
    if (table < 0 || table > 2) throw wblow::ArgumentError("table must be 1 or 2");
    return wblow::report::families_show(d->data, family_no, table);
  });
}

wbl_status wbl_families_list(const wbl_dataset* d, const char* marker, int table,
                             wbl_report** out) {
  return emit(out, [&] {
    if (!d) throw wblow::ArgumentError("dataset is NULL");
    if (table < 0 || table > 2) throw wblow::ArgumentError("table must be 1 or 2");
    return wblow::report::families_list(
        d->data, marker ? std::optional<std::string>(marker) : std::nullopt, table);
  });
}

wbl_status wbl_propcheck(const char* suite, unsigned cases, uint64_t seed, unsigned cap,
                         wbl_report** out) {
  return emit(out, [&] {
    return wblow::report::propcheck(need(suite, "suite"), cases, seed,
                                    cap ? cap : wblow::GeneratorLimits{}.cap);
  });
}

}  // extern "C"
