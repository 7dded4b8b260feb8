// Command-line front end; talks to the library only through wblow.h.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wblow.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInconclusive = 3, kInternal = 4 };

struct Options {
  bool json = false;
  std::optional<unsigned> cap;
  std::string system;
  std::string file;
  std::string vars;
};

int exit_code(wbl_status s) {
  switch (s) {
    case WBL_OK: return kOk;
    case WBL_VERIFY_FAILED: return kVerifyFailed;
    case WBL_INCONCLUSIVE: return kInconclusive;
    case WBL_ERR_ARGUMENT:
    case WBL_ERR_PARSE:
    case WBL_ERR_NOT_FOUND:
    case WBL_ERR_DATA: return kUsage;
    case WBL_ERR_INTERNAL: break;
  }
  return kInternal;
}

// Takes the slot, not its value: argument evaluation order is unspecified.
int finish(wbl_status s, wbl_report* const* slot, const Options& opt) {
  wbl_report* rep = slot ? *slot : nullptr;
  if (rep) {
    std::fputs(opt.json ? wbl_report_json(rep) : wbl_report_text(rep), stdout);
    wbl_report_free(rep);
  } else {
    std::fprintf(stderr, "wblow: %s: %s\n", wbl_status_name(s), wbl_last_error());
  }
  return exit_code(s);
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned resolve_cap(const Options& opt) {
  if (opt.cap) {
    if (*opt.cap == 0) throw UsageError("--cap must be positive");
    return *opt.cap;
  }
  if (const char* env = std::getenv("WBLOW_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (!*env || *end || v == 0 || v > 100000) throw UsageError("WBLOW_CAP must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return 0;  // library default
}

std::string read_input(const Options& opt) {
  if (!opt.file.empty() && !opt.system.empty())
    throw UsageError("give the system inline or with --file, not both");
  if (opt.file.empty()) {
    if (opt.system.empty()) throw UsageError("no polynomial system given");
    return opt.system;
  }
  std::ostringstream ss;
  if (opt.file == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(opt.file);
    if (!in) throw UsageError("cannot open '" + opt.file + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

const char* vars_or_null(const Options& opt) {
  return opt.vars.empty() ? nullptr : opt.vars.c_str();
}

void add_system(CLI::App* sub, Options& opt) {
  sub->add_option("system", opt.system, "polynomials separated by ',', ';' or newlines");
  sub->add_option("--file", opt.file, "read the system from a file ('-' for stdin)");
  sub->add_option("--vars", opt.vars, "variable order, e.g. x,y,z (default: first appearance)");
}

void add_cap(CLI::App* sub, Options& opt) {
  sub->add_option("--cap", opt.cap, "truncation cap (default: $WBLOW_CAP or 64)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for weighted blowups and Fano 3-fold rigidity data"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "print the structured report instead of text");
  app.fallthrough();

  int code = kOk;
  auto run = [&](auto&& body) {
    return [&, body] {
      try {
        code = body();
      } catch (const UsageError& e) {
        std::fprintf(stderr, "wblow: usage error: %s\n", e.what());
        code = kUsage;
      }
    };
  };

  std::vector<std::uint32_t> weights, space;
  std::vector<std::uint64_t> orders;
  std::vector<std::string> variants;
  std::string scales, point, names, data_path, marker, suite = "valuation";
  std::uint32_t r = 1;

  auto* mult = app.add_subcommand("mult", "local intersection multiplicity at the origin");
  add_system(mult, opt);
  add_cap(mult, opt);
  mult->callback(run([&] {
    wbl_report* rep = nullptr;
    auto text = read_input(opt);
    return finish(wbl_mult(text.c_str(), vars_or_null(opt), resolve_cap(opt), &rep), &rep, opt);
  }));

  auto* fulton = app.add_subcommand("fulton", "multiplicity = lower term + residual along a weighted blowup");
  add_system(fulton, opt);
  add_cap(fulton, opt);
  fulton->add_option("--weights,-w", weights, "blowup weights w1,...,wd")->delimiter(',')->allow_extra_args(false)->required();
  fulton->add_option("--scales", scales, "rational divisor coefficients b1,...,bd");
  fulton->callback(run([&] {
    wbl_report* rep = nullptr;
    auto text = read_input(opt);
    return finish(wbl_fulton(text.c_str(), vars_or_null(opt), weights.data(), weights.size(),
                             scales.empty() ? nullptr : scales.c_str(), resolve_cap(opt), &rep),
                  &rep, opt);
  }));

  auto* quot = app.add_subcommand("quotient", "decomposition at a cyclic quotient point 1/r(w mod r)");
  add_system(quot, opt);
  add_cap(quot, opt);
  quot->add_option("--weights,-w", weights, "blowup weights")->delimiter(',')->allow_extra_args(false)->required();
  quot->add_option("-r", r, "quotient index")->required();
  quot->callback(run([&] {
    wbl_report* rep = nullptr;
    auto text = read_input(opt);
    return finish(wbl_quotient(text.c_str(), vars_or_null(opt), r, weights.data(), weights.size(),
                               resolve_cap(opt), &rep),
                  &rep, opt);
  }));

  auto* order = app.add_subcommand("order", "weighted order, degree and least weight part");
  add_system(order, opt);
  order->add_option("--weights,-w", weights, "weights")->delimiter(',')->allow_extra_args(false)->required();
  order->callback(run([&] {
    wbl_report* rep = nullptr;
    auto text = read_input(opt);
    return finish(wbl_order(text.c_str(), vars_or_null(opt), weights.data(), weights.size(), &rep),
                  &rep, opt);
  }));

  auto* empty = app.add_subcommand("empty", "emptiness certificate on a weighted projective space");
  add_system(empty, opt);
  add_cap(empty, opt);
  empty->add_option("--weights,-w", weights, "weights of P(w)")->delimiter(',')->allow_extra_args(false)->required();
  empty->callback(run([&] {
    wbl_report* rep = nullptr;
    auto text = read_input(opt);
    return finish(wbl_empty(text.c_str(), vars_or_null(opt), weights.data(), weights.size(),
                            resolve_cap(opt), &rep),
                  &rep, opt);
  }));

  auto* jac = app.add_subcommand("jacobian", "rank of the Jacobian matrix at a point");
  add_system(jac, opt);
  jac->add_option("--point", point, "comma-separated rationals")->required();
  jac->callback(run([&] {
    wbl_report* rep = nullptr;
    auto text = read_input(opt);
    return finish(wbl_jacobian(text.c_str(), vars_or_null(opt), point.c_str(), &rep), &rep, opt);
  }));

  auto* thr = app.add_subcommand("threshold", "non-canonicity thresholds");
  std::optional<unsigned> cak, floor_k, r1, r2, a;
  std::optional<int> exceptional;
  auto* o_w = thr->add_option("--weights,-w", weights, "LCI mode: blowup weights")->delimiter(',')->allow_extra_args(false);
  auto* o_o = thr->add_option("--orders", orders, "LCI mode: weighted orders of the equations")->delimiter(',')->allow_extra_args(false);
  auto* o_r = thr->add_option("-r", r, "LCI mode: quotient index");
  auto* o_k = thr->add_option("--cak", cak, "cA_k mode: k");
  auto* o_r1 = thr->add_option("--r1", r1, "cA_k mode: r1");
  auto* o_r2 = thr->add_option("--r2", r2, "cA_k mode: r2");
  auto* o_a = thr->add_option("--a", a, "cA_k mode: a");
  auto* o_e = thr->add_option("--exceptional", exceptional, "exceptional contraction 1 or 2");
  auto* o_f = thr->add_option("--floor", floor_k, "4/(k+1) for a cA_k point");
  thr->callback(run([&] {
    const bool lci = o_w->count() || o_o->count() || o_r->count();
    const bool cakm = o_k->count() || o_r1->count() || o_r2->count() || o_a->count();
    const int modes = lci + cakm + (o_e->count() > 0) + (o_f->count() > 0);
    if (modes != 1)
      throw UsageError("choose exactly one of --weights/--orders/-r, --cak/--r1/--r2/--a, "
                       "--exceptional, --floor");
    wbl_report* rep = nullptr;
    wbl_status s;
    if (lci) {
      if (weights.empty()) throw UsageError("--weights is required in LCI mode");
      s = wbl_threshold_lci(weights.data(), weights.size(), orders.data(), orders.size(), r, &rep);
    } else if (cakm) {
      if (!cak || !r1 || !r2 || !a) throw UsageError("--cak needs --r1, --r2 and --a");
      s = wbl_threshold_cak(*cak, *r1, *r2, *a, &rep);
    } else if (exceptional) {
      s = wbl_threshold_exceptional(*exceptional, &rep);
    } else {
      s = wbl_threshold_floor(*floor_k, &rep);
    }
    return finish(s, &rep, opt);
  }));

  auto* contr = app.add_subcommand("contractions", "divisorial contractions to a cA_k point");
  unsigned k = 1, a_max = 1;
  contr->add_option("--k", k, "k of the cA_k point")->required();
  contr->add_option("--a-max", a_max, "largest a to enumerate")->required();
  contr->callback(run([&] {
    wbl_report* rep = nullptr;
    return finish(wbl_contractions(k, a_max, &rep), &rep, opt);
  }));

  auto* wps = app.add_subcommand("wps", "well-formedness and singular strata of P(a)");
  wps->add_option("weights", space, "weights a0,...,aN")->delimiter(',')->allow_extra_args(false)->required();
  wps->callback(run([&] {
    wbl_report* rep = nullptr;
    return finish(wbl_wps(space.data(), space.size(), &rep), &rep, opt);
  }));

  auto* iso = app.add_subcommand("isolate", "isolating set of a point and degree bounds");
  iso->add_option("--space", space, "weights a0,...,aN")->delimiter(',')->allow_extra_args(false)->required();
  iso->add_option("--point", point, "homogeneous coordinates (rationals)");
  iso->add_option("--variant", variants,
                  "1a, 1b:m, 1c:m1,m2, 2a:r, 2b:r,m, 2c:r,m1,m2; repeat for the max of several")
      ->take_all();
  iso->add_option("--names", names, "coordinate names (default x,y,z,t,[v,]w)");
  iso->callback(run([&] {
    std::string variant;
    for (const auto& v : variants) variant += (variant.empty() ? "" : ";") + v;
    wbl_report* rep = nullptr;
    return finish(wbl_isolate(space.data(), space.size(), names.empty() ? nullptr : names.c_str(),
                              point.empty() ? nullptr : point.c_str(),
                              variant.empty() ? nullptr : variant.c_str(), &rep),
                  &rep, opt);
  }));

  auto* fam = app.add_subcommand("families", "Fano 3-fold tables: verify, show, list");
  fam->add_option("--data", data_path, "dataset file (default: the embedded tables)");
  fam->require_subcommand(1);
  int table = 0;
  int family_no = 0;
  auto with_dataset = [&](auto&& body) {
    wbl_dataset* ds = nullptr;
    wbl_status s = data_path.empty() ? wbl_dataset_load_default(&ds)
                                     : wbl_dataset_load_file(data_path.c_str(), &ds);
    if (s != WBL_OK) return finish(s, nullptr, opt);
    int c = body(ds);
    wbl_dataset_free(ds);
    return c;
  };
  auto* verify = fam->add_subcommand("verify", "recompute -K^3, l_ic, k_cA for every row");
  verify->callback(run([&] {
    return with_dataset([&](wbl_dataset* ds) {
      wbl_report* rep = nullptr;
      return finish(wbl_families_verify(ds, &rep), &rep, opt);
    });
  }));
  auto* show = fam->add_subcommand("show", "one family with recomputed values");
  show->add_option("number", family_no, "family number")->required();
  show->add_option("--table", table, "1 (hypersurfaces) or 2 (codimension 2)");
  show->callback(run([&] {
    return with_dataset([&](wbl_dataset* ds) {
      wbl_report* rep = nullptr;
      return finish(wbl_families_show(ds, family_no, table, &rep), &rep, opt);
    });
  }));
  auto* list = fam->add_subcommand("list", "families filtered by marker and table");
  list->add_option("--marker", marker, "star, club, heart, spade or a label like heart_3_5");
  list->add_option("--table", table, "1 or 2");
  list->callback(run([&] {
    return with_dataset([&](wbl_dataset* ds) {
      wbl_report* rep = nullptr;
      return finish(wbl_families_list(ds, marker.empty() ? nullptr : marker.c_str(), table, &rep),
                    &rep, opt);
    });
  }));

  auto* prop = app.add_subcommand("propcheck", "seeded randomized property suites");
  unsigned cases = 100;
  std::uint64_t seed = 1;
  std::optional<unsigned> prop_cap;
  prop->add_option("--suite", suite, "valuation, corollary, fulton or quotient");
  prop->add_option("--cases", cases, "number of cases");
  prop->add_option("--seed", seed, "seed");
  prop->add_option("--cap", prop_cap, "truncation cap while sampling (default 12)");
  prop->callback(run([&] {
    wbl_report* rep = nullptr;
    return finish(wbl_propcheck(suite.c_str(), cases, seed, prop_cap.value_or(0), &rep), &rep, opt);
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  return code;
}
