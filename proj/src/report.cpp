#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "wblow/blowup.hpp"
#include "wblow/errors.hpp"
#include "wblow/localmult.hpp"
#include "wblow/wps.hpp"

namespace wblow::report {

namespace {

Json q(const Rational& r) { return to_string(r); }

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(q(r));
  return a;
}

Json polys(const std::vector<Polynomial>& v, const std::vector<std::string>& names) {
  Json a = Json::array();
  for (const auto& f : v) a.push_back(to_string(f, names));
  return a;
}

Json system_inputs(const PolynomialSystem& sys) {
  Json in;
  in["system"] = polys(sys.polys, sys.names);
  in["variables"] = sys.names;
  return in;
}

Report make(const std::string& command, Json inputs, Json result, Json certificate = nullptr,
            Outcome outcome = Outcome::Ok) {
  Report r;
  r.doc["command"] = command;
  r.doc["inputs"] = std::move(inputs);
  r.doc["result"] = std::move(result);
  r.doc["certificate"] = std::move(certificate);
  r.outcome = outcome;
  return r;
}

void require_weights(const PolynomialSystem& sys, const std::vector<std::uint32_t>& w) {
  if (w.size() != sys.names.size())
    throw ArgumentError("need one weight per variable: " + std::to_string(sys.names.size()) +
                        " variable(s) (" + [&] {
                          std::string s;
                          for (std::size_t i = 0; i < sys.names.size(); ++i)
                            s += (i ? "," : "") + sys.names[i];
                          return s;
                        }() + "), " + std::to_string(w.size()) + " weight(s)");
}

Json emptiness_json(const EmptinessCertificate& e) {
  Json j;
  switch (e.verdict) {
    case EmptinessVerdict::Empty:
      j["verdict"] = "empty";
      j["level"] = e.level;
      break;
    case EmptinessVerdict::NonemptyWitness:
      j["verdict"] = "witness";
      j["point"] = rationals(e.witness);
      break;
    case EmptinessVerdict::Inconclusive:
      j["verdict"] = "inconclusive";
      j["cap"] = e.cap;
      break;
  }
  return j;
}

// ---- text rendering -----------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return v.empty() ? "(none)" : s;
  }
  return v.dump();
}

bool is_flat_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

bool is_flat_array(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), is_flat_scalar);
}

// Array of objects with identical keys whose values are scalars or scalar lists.
bool is_table(const Json& v) {
  if (!v.is_array() || v.empty() || !v.front().is_object()) return false;
  std::vector<std::string> keys;
  for (auto it = v.front().begin(); it != v.front().end(); ++it) keys.push_back(it.key());
  for (const auto& row : v) {
    if (!row.is_object() || row.size() != keys.size()) return false;
    std::size_t i = 0;
    for (auto it = row.begin(); it != row.end(); ++it, ++i) {
      if (it.key() != keys[i]) return false;
      if (!is_flat_scalar(it.value()) && !is_flat_array(it.value())) return false;
    }
  }
  return true;
}

std::string cell_text(const Json& v) {
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
    return v.empty() ? "-" : s;
  }
  auto s = scalar_text(v);
  return s.empty() ? "-" : s;
}

void render_table(std::ostringstream& out, const Json& rows, std::size_t indent) {
  std::vector<std::string> keys;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) keys.push_back(it.key());
  std::vector<std::vector<std::string>> cells{keys};
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (auto it = row.begin(); it != row.end(); ++it) line.push_back(cell_text(it.value()));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(keys.size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  for (const auto& line : cells) {
    std::string s(indent, ' ');
    for (std::size_t c = 0; c < line.size(); ++c) {
      s += line[c];
      if (c + 1 < line.size()) s += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << s << '\n';
  }
}

void render_value(std::ostringstream& out, const std::string& key, const Json& v,
                  std::size_t indent);

void render_object(std::ostringstream& out, const Json& obj, std::size_t indent) {
  for (auto it = obj.begin(); it != obj.end(); ++it) render_value(out, it.key(), it.value(), indent);
}

void render_value(std::ostringstream& out, const std::string& key, const Json& v,
                  std::size_t indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out << pad << key << ": -\n";
      return;
    }
    out << pad << key << ":\n";
    render_object(out, v, indent + 2);
  } else if (v.is_array() && !v.empty() && !is_flat_array(v)) {
    out << pad << key << ":\n";
    if (is_table(v)) {
      render_table(out, v, indent + 2);
      return;
    }
    for (const auto& item : v) {
      if (item.is_object()) {
        std::ostringstream inner;
        render_object(inner, item, indent + 4);
        std::string block = inner.str();
        block.replace(indent + 2, 2, "- ");
        out << block;
      } else {
        out << pad << "  - " << scalar_text(item) << '\n';
      }
    }
  } else {
    out << pad << key << ": " << scalar_text(v) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream out;
  render_object(out, doc, 0);
  return out.str();
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::vector<std::string> coordinate_names(std::size_t n) {
  static const std::vector<std::vector<std::string>> table = {
      {}, {"x"}, {"x", "y"}, {"x", "y", "z"}, {"x", "y", "z", "t"},
      {"x", "y", "z", "t", "w"}, {"x", "y", "z", "t", "v", "w"}};
  if (n < table.size()) return table[n];
  return default_names(n);
}

// ---- local computations ---------------------------------------------------------

Report mult(const PolynomialSystem& sys, unsigned cap) {
  Json in = system_inputs(sys);
  in["cap"] = cap;
  auto out = local_multiplicity(sys.polys, cap);
  Json res, cert;
  switch (out.status) {
    case MultiplicityStatus::Certified: {
      res["status"] = "certified";
      res["origin"] = "isolated";
      res["value"] = out.result->value;
      Json mons = Json::array();
      for (const auto& m : out.result->standard_monomials) mons.push_back(to_string(m, sys.names));
      res["standard_monomials"] = std::move(mons);
      cert["kind"] = "nakayama";
      cert["level"] = out.result->certified_level;
      const auto n = std::to_string(out.result->certified_level);
      cert["statement"] = "m^" + n + " in I + m^" + std::to_string(out.result->certified_level + 1);
      break;
    }
    case MultiplicityStatus::UnitIdeal:
      res["status"] = "unit_ideal";
      res["origin"] = "not_on_intersection";
      res["value"] = 0;
      cert["kind"] = "unit";
      cert["statement"] = "a defining polynomial has a nonzero constant term";
      break;
    case MultiplicityStatus::Inconclusive:
      res["status"] = "inconclusive";
      res["origin"] = "inconclusive";
      cert["kind"] = "inconclusive";
      cert["cap"] = cap;
      return make("mult", std::move(in), std::move(res), std::move(cert), Outcome::Inconclusive);
  }
  return make("mult", std::move(in), std::move(res), std::move(cert));
}

Report fulton(const PolynomialSystem& sys, const std::vector<std::uint32_t>& weights,
              const std::vector<Rational>& scales, unsigned cap) {
  require_weights(sys, weights);
  Json in = system_inputs(sys);
  in["weights"] = weights;
  if (!scales.empty()) in["scales"] = rationals(scales);
  in["cap"] = cap;
  auto w = WeightVector::blowup(weights);
  auto rep = fulton_check(sys.polys, w, cap, scales);
  if (!rep) {
    return make("fulton", std::move(in), Json{{"status", "inconclusive"}},
                Json{{"kind", "inconclusive"}, {"cap", cap}}, Outcome::Inconclusive);
  }
  Json res;
  res["status"] = "certified";
  res["multiplicity"] = q(rep->multiplicity);
  res["lower_term"] = q(rep->lower_term);
  res["residual"] = q(rep->residual);
  res["valuations"] = rep->valuations;
  res["weight_product"] = w.product();
  res["residual_nonnegative"] = rep->residual_nonnegative();
  res["consistent"] = rep->consistent();
  Json cert;
  cert["multiplicity_level"] = rep->certified_level;
  Json lwp = Json::array();
  for (const auto& f : sys.polys) lwp.push_back(to_string(least_weight_part(f, w), sys.names));
  cert["least_weight_parts"] = std::move(lwp);
  cert["emptiness"] = emptiness_json(rep->emptiness);
  return make("fulton", std::move(in), std::move(res), std::move(cert),
              rep->consistent() ? Outcome::Ok : Outcome::VerifyFailed);
}

Report quotient(const PolynomialSystem& sys, std::uint32_t r,
                const std::vector<std::uint32_t>& weights, unsigned cap) {
  require_weights(sys, weights);
  Json in = system_inputs(sys);
  in["r"] = r;
  in["weights"] = weights;
  in["cap"] = cap;
  auto rep = quotient_mult_relation(sys.polys, r, WeightVector::blowup(weights), cap);
  if (!rep) {
    return make("quotient", std::move(in), Json{{"status", "inconclusive"}},
                Json{{"kind", "inconclusive"}, {"cap", cap}}, Outcome::Inconclusive);
  }
  Json res;
  res["status"] = "certified";
  std::string type = "1/" + std::to_string(r) + "(";
  for (std::size_t i = 0; i < rep->type.size(); ++i)
    type += (i ? "," : "") + std::to_string(rep->type[i]);
  res["type"] = type + ")";
  res["upstairs_multiplicity"] = rep->upstairs_multiplicity;
  res["upstairs_valuations"] = rep->upstairs_valuations;
  res["multiplicity"] = q(rep->multiplicity);
  res["valuations"] = rationals(rep->valuations);
  res["lower_term"] = q(rep->lower_term);
  res["residual"] = q(rep->residual);
  res["consistent"] = rep->consistent();
  Json cert;
  cert["multiplicity_level"] = rep->certified_level;
  cert["emptiness"] = emptiness_json(rep->emptiness);
  return make("quotient", std::move(in), std::move(res), std::move(cert),
              rep->consistent() ? Outcome::Ok : Outcome::VerifyFailed);
}

Report order(const PolynomialSystem& sys, const std::vector<std::uint32_t>& weights) {
  require_weights(sys, weights);
  Json in = system_inputs(sys);
  in["weights"] = weights;
  auto w = WeightVector::ambient(weights);
  Json rows = Json::array();
  for (const auto& f : sys.polys) {
    Json row;
    row["polynomial"] = to_string(f, sys.names);
    if (f.is_zero()) {
      row["order"] = "infinity";
      row["degree"] = nullptr;
      row["least_weight_part"] = nullptr;
      row["quasihomogeneous"] = true;
    } else {
      row["order"] = *weighted_order(f, w);
      row["degree"] = weighted_degree(f, w);
      row["least_weight_part"] = to_string(least_weight_part(f, w), sys.names);
      row["quasihomogeneous"] = is_quasihomogeneous(f, w);
    }
    rows.push_back(std::move(row));
  }
  return make("order", std::move(in), Json{{"polynomials", std::move(rows)}});
}

Report empty(const PolynomialSystem& sys, const std::vector<std::uint32_t>& weights,
             unsigned cap) {
  require_weights(sys, weights);
  Json in = system_inputs(sys);
  in["weights"] = weights;
  in["cap"] = cap;
  auto cert = wps_empty_certificate(sys.polys, WeightVector::ambient(weights), cap);
  Json res;
  res["verdict"] = cert.verdict == EmptinessVerdict::Empty             ? "empty"
                   : cert.verdict == EmptinessVerdict::NonemptyWitness ? "nonempty"
                                                                        : "inconclusive";
  return make("empty", std::move(in), std::move(res), emptiness_json(cert),
              cert.verdict == EmptinessVerdict::Inconclusive ? Outcome::Inconclusive
                                                             : Outcome::Ok);
}

Report jacobian(const PolynomialSystem& sys, const std::vector<Rational>& point) {
  if (point.size() != sys.names.size())
    throw ArgumentError("point has " + std::to_string(point.size()) + " coordinate(s), system has " +
                        std::to_string(sys.names.size()) + " variable(s)");
  Json in = system_inputs(sys);
  in["point"] = rationals(point);
  Json matrix = Json::array();
  for (const auto& f : sys.polys) {
    Json row = Json::array();
    for (std::size_t j = 0; j < sys.names.size(); ++j)
      row.push_back(q(evaluate(partial_derivative(f, j), point)));
    matrix.push_back(std::move(row));
  }
  Json res;
  res["rank"] = jacobian_rank_at(sys.polys, point);
  res["matrix"] = std::move(matrix);
  return make("jacobian", std::move(in), std::move(res));
}

// ---- thresholds -----------------------------------------------------------------

namespace {

Json datum_result(const BlowupDatum& datum) {
  Json res;
  auto disc = lci_discrepancy(datum);
  res["threshold"] = q(lci_threshold(datum));
  res["discrepancy"] = q(disc.value);
  res["discrepancy_non_positive"] = disc.non_positive;
  std::vector<std::uint32_t> sorted(datum.weights().values().begin(),
                                    datum.weights().values().end());
  std::sort(sorted.begin(), sorted.end());
  res["largest_weights"] =
      std::vector<std::uint32_t>(sorted.end() - static_cast<std::ptrdiff_t>(datum.codim() + 2),
                                 sorted.end());
  return res;
}

Json contraction_json(const ContractionWeights& cw) {
  Json j;
  j["kind"] = cw.kind == ContractionWeights::Kind::NonExceptional ? "non_exceptional"
              : cw.kind == ContractionWeights::Kind::ExceptionalCA1 ? "exceptional_cA1"
                                                                    : "exceptional_cA2";
  j["k"] = cw.k;
  const bool plain = cw.kind == ContractionWeights::Kind::NonExceptional;
  j["r1"] = plain ? Json(cw.r1) : Json(nullptr);
  j["r2"] = plain ? Json(cw.r2) : Json(nullptr);
  j["a"] = plain ? Json(cw.a) : Json(nullptr);
  j["weights"] = cw.blowup_weights();
  j["order"] = cw.equation_order();
  j["threshold"] = q(cak_threshold(cw));
  j["discrepancy"] =
      q(lci_discrepancy(BlowupDatum(cw.blowup_weights(), {cw.equation_order()})).value);
  return j;
}

}  // namespace

Report threshold_lci(const std::vector<std::uint32_t>& weights,
                     const std::vector<std::uint64_t>& orders, std::uint32_t r) {
  BlowupDatum datum(weights, orders, r);
  Json in;
  in["mode"] = "lci";
  in["weights"] = weights;
  in["orders"] = orders;
  in["r"] = r;
  return make("threshold", std::move(in), datum_result(datum));
}

namespace {

Report contraction_threshold(const ContractionWeights& cw, Json in) {
  BlowupDatum datum(cw.blowup_weights(), {cw.equation_order()});
  Json res;
  res["threshold"] = q(cak_threshold(cw));
  res["discrepancy"] = q(lci_discrepancy(datum).value);
  res["weights"] = cw.blowup_weights();
  res["order"] = cw.equation_order();
  res["lci_threshold"] = q(lci_threshold(datum));
  res["floor_threshold"] = q(cak_floor_threshold(cw.k));
  return make("threshold", std::move(in), std::move(res));
}

}  // namespace

Report threshold_cak(unsigned k, std::uint32_t r1, std::uint32_t r2, std::uint32_t a) {
  auto cw = ContractionWeights::non_exceptional(k, r1, r2, a);
  Json in;
  in["mode"] = "cak";
  in["k"] = k;
  in["r1"] = r1;
  in["r2"] = r2;
  in["a"] = a;
  return contraction_threshold(cw, std::move(in));
}

Report threshold_exceptional(int which) {
  if (which != 1 && which != 2) throw ArgumentError("--exceptional takes 1 or 2");
  auto cw = which == 1 ? ContractionWeights::exceptional_ca1()
                       : ContractionWeights::exceptional_ca2();
  Json in;
  in["mode"] = "exceptional";
  in["k"] = which;
  return contraction_threshold(cw, std::move(in));
}

Report threshold_floor(unsigned k) {
  Json in;
  in["mode"] = "floor";
  in["k"] = k;
  return make("threshold", std::move(in), Json{{"threshold", q(cak_floor_threshold(k))}});
}

Report contractions(unsigned k, unsigned a_max) {
  Json in;
  in["k"] = k;
  in["a_max"] = a_max;
  Json rows = Json::array();
  for (const auto& cw : enumerate_cak_contractions(k, a_max)) rows.push_back(contraction_json(cw));
  Json res;
  res["count"] = rows.size();
  res["contractions"] = std::move(rows);
  return make("contractions", std::move(in), std::move(res));
}

// ---- weighted projective space ----------------------------------------------------

Report wps(const std::vector<std::uint32_t>& weights) {
  AmbientWPS space(weights);
  Json strata = Json::array();
  for (const auto& s : singular_strata(space)) {
    std::uint64_t g = 0;
    std::vector<std::string> coords;
    for (auto i : s) {
      g = std::gcd(g, std::uint64_t{space.weight(i)});
      coords.push_back(coordinate_names(space.size())[i]);
    }
    Json row;
    row["coordinates"] = coords;
    row["gcd"] = g;
    strata.push_back(std::move(row));
  }
  Json res;
  res["well_formed"] = is_well_formed(space);
  res["singular_strata"] = std::move(strata);
  return make("wps", Json{{"weights", weights}}, std::move(res));
}

Report isolate(const std::vector<std::uint32_t>& weights, const std::vector<std::string>& names,
               const std::vector<Rational>& point, const std::optional<std::string>& variant) {
  AmbientWPS space(weights, names.empty() ? coordinate_names(weights.size()) : names);
  std::vector<IsolatingVariant> variants;
  if (variant) {
    std::string_view rest(*variant);
    while (true) {
      const auto semi = rest.find(';');
      std::string item(rest.substr(0, semi));
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      if (!item.empty()) variants.push_back(IsolatingVariant::parse(item));
      if (semi == std::string_view::npos) break;
      rest.remove_prefix(semi + 1);
    }
  }
  if (variants.empty()) variants.push_back(IsolatingVariant::all_pairs());
  if (!point.empty() && variants.size() > 1)
    throw ArgumentError("an isolating set takes a single variant");
  std::vector<std::string> labels;
  for (const auto& v : variants) labels.push_back(v.label());

  Json in;
  in["space"] = weights;
  in["coordinates"] = space.names();
  in["point"] = point.empty() ? Json(nullptr) : rationals(point);
  in["variant"] = labels;
  Json res;
  res["well_formed"] = is_well_formed(space);
  if (!point.empty()) {
    auto set = isolating_set(point, space, variants.front());
    Json rows = Json::array();
    for (std::size_t k = 0; k < set.polynomials.size(); ++k) {
      Json row;
      row["pair"] = space.names()[set.pairs[k].first] + "," + space.names()[set.pairs[k].second];
      row["polynomial"] = to_string(set.polynomials[k], space.names());
      row["degree"] = set.degrees[k];
      row["vanishes"] = evaluate(set.polynomials[k], point) == 0;
      rows.push_back(std::move(row));
    }
    res["polynomials"] = std::move(rows);
    res["bound"] = set.bound;
  }
  std::uint64_t best = 0;
  for (const auto& v : variants) best = std::max(best, isolating_degree_bound(space, v));
  res["variant_bound"] = best;
  return make("isolate", std::move(in), std::move(res));
}

// ---- families ----------------------------------------------------------------------

namespace {

Json opt_u(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json("-"); }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

Json record_json(const FamilyRecord& r, const RowVerification& row) {
  Json j;
  j["table"] = r.codim;
  j["family"] = r.family_no;
  j["degrees"] = r.degrees;
  j["weights"] = r.weights;
  j["marker"] = r.marker_label();
  j["equation_shape"] = r.equation_shape.empty() ? Json(nullptr) : Json(r.equation_shape);
  j["stored"] = Json{{"minus_K3", q(r.stored_minus_K3)},
                     {"l_ic", opt_u(r.stored_lic)},
                     {"k_cA", r.stored_kca}};
  Json c;
  c["minus_K3"] = q(row.minus_K3);
  c["l_ic"] = opt_u(row.lic);
  std::vector<std::string> rules;
  for (const auto& v : lic_variants(r)) rules.push_back(v.label());
  c["l_ic_rule"] = rules.empty() ? Json(nullptr) : Json(join(rules, ";"));
  c["k_cA"] = row.kca;
  c["k_max_by_inequality"] = opt_u(row.max_k);
  if (row.spade_ok) c["spade_check"] = *row.spade_ok;
  j["computed"] = std::move(c);
  j["status"] = row.passed() ? "pass" : "FAIL";
  j["mismatches"] = row.mismatches;
  return j;
}

}  // namespace

Report families_verify(const FamilyDataset& data) {
  auto rep = verify_all(data);
  Json rows = Json::array();
  std::size_t t1 = 0, t2 = 0;
  for (const auto& row : rep.rows) {
    const auto& r = *row.record;
    (r.codim == 1 ? t1 : t2)++;
    Json j;
    j["table"] = r.codim;
    j["family"] = r.family_no;
    j["marker"] = r.marker_label();
    j["minus_K3"] = q(row.minus_K3);
    j["l_ic"] = opt_u(row.lic);
    j["k_cA"] = row.kca;
    j["status"] = row.passed() ? "pass" : "FAIL";
    j["detail"] = join(row.mismatches, "; ");
    rows.push_back(std::move(j));
  }
  Json in;
  in["dataset"] = data.source();
  Json res;
  res["rows"] = rep.rows.size();
  res["table1_rows"] = t1;
  res["table2_rows"] = t2;
  res["passed"] = rep.passed;
  res["failed"] = rep.failed;
  res["families"] = std::move(rows);
  return make("families verify", std::move(in), std::move(res), nullptr,
              rep.all_passed() ? Outcome::Ok : Outcome::VerifyFailed);
}

Report families_show(const FamilyDataset& data, int family_no, int codim) {
  auto found = data.find(family_no, codim);
  if (found.empty())
    throw NotFoundError("no family " + std::to_string(family_no) +
                        (codim ? " in table " + std::to_string(codim) : std::string()));
  Json in;
  in["dataset"] = data.source();
  in["family"] = family_no;
  in["table"] = codim ? Json(codim) : Json(nullptr);
  Json recs = Json::array();
  bool ok = true;
  for (const auto* r : found) {
    auto row = verify_record(*r);
    ok = ok && row.passed();
    recs.push_back(record_json(*r, row));
  }
  return make("families show", std::move(in), Json{{"records", std::move(recs)}}, nullptr,
              ok ? Outcome::Ok : Outcome::VerifyFailed);
}

Report families_list(const FamilyDataset& data, const std::optional<std::string>& marker,
                     int codim) {
  std::optional<std::string> want;
  if (marker) {
    std::string m(*marker);
    std::transform(m.begin(), m.end(), m.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    static const char* const kKinds[] = {"star", "club", "heart", "spade"};
    const bool kind = std::find(std::begin(kKinds), std::end(kKinds), m) != std::end(kKinds);
    if (!kind) parse_marker(m, 2, nullptr);  // throws DataError on nonsense
    want = m;
  }
  Json rows = Json::array();
  for (const auto& r : data.records()) {
    if (codim && r.codim != codim) continue;
    const auto label = r.marker_label();
    if (want && label != *want && label.rfind(*want + "_", 0) != 0) continue;
    Json j;
    j["table"] = r.codim;
    j["family"] = r.family_no;
    j["degrees"] = r.degrees;
    j["weights"] = r.weights;
    j["marker"] = label;
    j["minus_K3"] = q(r.stored_minus_K3);
    j["l_ic"] = opt_u(r.stored_lic);
    j["k_cA"] = r.stored_kca;
    rows.push_back(std::move(j));
  }
  Json in;
  in["dataset"] = data.source();
  in["marker"] = marker ? Json(*marker) : Json(nullptr);
  in["table"] = codim ? Json(codim) : Json(nullptr);
  Json res;
  res["count"] = rows.size();
  res["families"] = std::move(rows);
  return make("families list", std::move(in), std::move(res));
}

// ---- propcheck ---------------------------------------------------------------------

Report propcheck(const std::string& suite, unsigned cases, std::uint64_t seed, unsigned cap) {
  GeneratorLimits lim;
  lim.cap = cap;
  auto res = run_propcheck(suite, cases, seed, lim);
  Json in;
  in["suite"] = suite;
  in["cases"] = cases;
  in["seed"] = seed;
  in["cap"] = cap;
  Json fails = Json::array();
  for (const auto& f : res.failures) {
    Json j;
    j["case"] = f.case_index;
    j["property"] = f.property;
    j["system"] = f.system;
    j["weights"] = f.weights;
    j["detail"] = f.detail;
    fails.push_back(std::move(j));
  }
  Json out;
  out["checks"] = res.checks;
  out["failures"] = res.failures.size();
  out["skipped"] = res.skipped;
  out["emptiness_inconclusive"] = res.undecided;
  out["max_certified_level"] = res.max_level;
  out["failing_cases"] = std::move(fails);
  return make("propcheck", std::move(in), std::move(out), nullptr,
              res.ok() ? Outcome::Ok : Outcome::VerifyFailed);
}

}  // namespace wblow::report
