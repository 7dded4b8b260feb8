#include "wblow/fano_db.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wblow/blowup.hpp"
#include "wblow/errors.hpp"
#include "wblow/parse.hpp"

namespace wblow {

namespace detail {
extern const char* const kEmbeddedFamilies;
}

namespace {

const char* const kColumns[] = {"family_no",       "codim",      "degrees",
                                "weights",         "case_marker", "stored_minus_K3",
                                "stored_lic",      "stored_kca",  "equation_shape"};
constexpr std::size_t kNumColumns = std::size(kColumns);

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
    throw DataError(std::string("bad ") + what + " '" + s + "'");
  return std::stoull(s);
}

template <class T>
std::vector<T> parse_uint_list(const std::string& s, const char* what) {
  std::vector<T> out;
  for (const auto& f : split_list(s)) {
    auto v = parse_uint(f, what);
    if (v == 0) throw DataError(std::string(what) + " must be positive");
    out.push_back(static_cast<T>(v));
  }
  return out;
}

FamilyRecord parse_row(const std::vector<std::string>& f) {
  FamilyRecord r;
  r.family_no = static_cast<int>(parse_uint(f[0], "family_no"));
  r.codim = static_cast<int>(parse_uint(f[1], "codim"));
  if (r.codim != 1 && r.codim != 2) throw DataError("codim must be 1 or 2");
  r.degrees = parse_uint_list<std::uint64_t>(f[2], "degrees");
  r.weights = parse_uint_list<std::uint32_t>(f[3], "weights");
  if (r.degrees.size() != static_cast<std::size_t>(r.codim))
    throw DataError("codim " + std::to_string(r.codim) + " needs " + std::to_string(r.codim) +
                    " degree(s)");
  if (r.weights.size() != static_cast<std::size_t>(4 + r.codim))
    throw DataError("codim " + std::to_string(r.codim) + " needs " +
                    std::to_string(4 + r.codim) + " weights");
  if (!std::is_sorted(r.weights.begin(), r.weights.end()))
    throw DataError("weights must be ascending");
  r.marker = parse_marker(f[4], r.codim, &r.marker_index);
  try {
    r.stored_minus_K3 = parse_rational(f[5]);
  } catch (const ArgumentError& e) {
    throw DataError(std::string("bad stored_minus_K3: ") + e.what());
  }
  if (r.stored_minus_K3 <= 0) throw DataError("stored_minus_K3 must be positive");
  if (f[6] == "-") {
    if (r.marker != CaseMarker::Star) throw DataError("only Star rows may omit stored_lic");
  } else {
    if (r.marker == CaseMarker::Star) throw DataError("Star rows carry no stored_lic");
    r.stored_lic = parse_uint(f[6], "stored_lic");
  }
  r.stored_kca = parse_uint(f[7], "stored_kca");
  r.equation_shape = f[8];
  return r;
}

}  // namespace

CaseMarker parse_marker(const std::string& text, int codim, std::size_t* index) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (index) *index = 0;
  if (lower == "star") return CaseMarker::Star;
  if (codim == 1) {
    if (lower == "club") return CaseMarker::Club;
    if (lower == "heart") return CaseMarker::Heart;
    if (lower == "spade") return CaseMarker::Spade;
    throw DataError("unknown codimension-1 case marker '" + text + "'");
  }
  for (auto [name, kind] : {std::pair{"club", CaseMarker::Club}, {"heart", CaseMarker::Heart}}) {
    for (std::size_t m : {3u, 4u}) {
      if (lower == std::string(name) + "_" + std::to_string(m) + "_5") {
        if (index) *index = m;
        return kind;
      }
    }
  }
  throw DataError("unknown codimension-2 case marker '" + text + "'");
}

std::string to_string(CaseMarker m) {
  switch (m) {
    case CaseMarker::Star: return "star";
    case CaseMarker::Club: return "club";
    case CaseMarker::Heart: return "heart";
    case CaseMarker::Spade: return "spade";
  }
  return "?";
}

std::string FamilyRecord::marker_label() const {
  std::string s = to_string(marker);
  if (codim == 2 && marker != CaseMarker::Star) s += "_" + std::to_string(marker_index) + "_5";
  return s;
}

FamilyDataset FamilyDataset::parse(std::string_view text, const std::string& source) {
  FamilyDataset ds;
  ds.source_ = source;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    auto where = source + ":" + std::to_string(lineno) + ": ";
    if (!header) {
      if (fields.size() != kNumColumns ||
          !std::equal(fields.begin(), fields.end(), std::begin(kColumns)))
        throw DataError(where + "header must be the " + std::to_string(kNumColumns) +
                        " tab-separated FamilyRecord field names");
      header = true;
      continue;
    }
    if (fields.size() != kNumColumns)
      throw DataError(where + "expected " + std::to_string(kNumColumns) + " fields, found " +
                      std::to_string(fields.size()));
    try {
      ds.records_.push_back(parse_row(fields));
    } catch (const DataError& e) {
      throw DataError(where + e.what());
    }
    const auto& r = ds.records_.back();
    if (std::count_if(ds.records_.begin(), ds.records_.end(), [&](const FamilyRecord& o) {
          return o.family_no == r.family_no && o.codim == r.codim;
        }) > 1)
      throw DataError(where + "duplicate family " + std::to_string(r.family_no));
  }
  if (!header) throw DataError(source + ": empty dataset");
  return ds;
}

FamilyDataset FamilyDataset::embedded() {
  return parse(detail::kEmbeddedFamilies, "<embedded>");
}

FamilyDataset FamilyDataset::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open dataset '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

std::vector<const FamilyRecord*> FamilyDataset::find(int family_no, int codim) const {
  std::vector<const FamilyRecord*> out;
  for (const auto& r : records_)
    if (r.family_no == family_no && (codim == 0 || r.codim == codim)) out.push_back(&r);
  return out;
}

Rational anticanonical_degree(const FamilyRecord& rec) {
  Rational num = 1, den = 1;
  for (auto d : rec.degrees) num *= Rational(static_cast<unsigned long>(d));
  for (auto a : rec.weights) den *= a;
  return num / den;
}

std::vector<IsolatingVariant> lic_variants(const FamilyRecord& rec) {
  if (rec.marker == CaseMarker::Star) return {};
  if (rec.codim == 1) {
    if (rec.marker == CaseMarker::Club) return {IsolatingVariant::avoiding({4})};
    if (rec.degrees[0] % rec.weights[4] == 0) return {IsolatingVariant::chart(1, {4})};
    return {IsolatingVariant::chart(1)};
  }
  const std::size_t m = rec.marker_index;
  if (rec.marker == CaseMarker::Club) return {IsolatingVariant::avoiding({m, 5})};
  if (rec.marker == CaseMarker::Heart)
    return {IsolatingVariant::chart(1, {m, 5}), IsolatingVariant::chart(2, {m, 5})};
  throw DataError("codimension-2 records admit no Spade marker");
}

std::optional<std::uint64_t> compute_lic(const FamilyRecord& rec) {
  auto variants = lic_variants(rec);
  if (variants.empty()) return std::nullopt;
  AmbientWPS space(rec.weights);
  std::uint64_t best = 0;
  for (const auto& v : variants) best = std::max(best, isolating_degree_bound(space, v));
  return best;
}

std::uint64_t compute_kca(const FamilyRecord& rec) {
  auto lic = compute_lic(rec);
  if (!lic) return 1;
  const Rational x = Rational(4) / (Rational(static_cast<unsigned long>(*lic)) *
                                    anticanonical_degree(rec)) - 1;
  const Integer k = floor(x);
  if (k <= 0)
    throw DataError("family " + std::to_string(rec.family_no) + ": k_cA formula gives " +
                    k.get_str() + " (must be positive)");
  return k.get_ui();
}

std::uint64_t max_excluded_k(std::uint64_t l, const Rational& degree) {
  if (l == 0 || degree <= 0) throw ArgumentError("l and degree must be positive");
  // 4/(k+1) decreases in k, so the good k form an initial segment: gallop, then bisect
  auto good = [&](std::uint64_t k) {
    return exclusion_inequality(l, degree, Rational(4) / Rational(static_cast<unsigned long>(k + 1)));
  };
  if (!good(1)) return 0;
  std::uint64_t lo = 1, hi = 2;
  while (good(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (good(mid) ? lo : hi) = mid;
  }
  return lo;
}

bool spade_special_check(const FamilyRecord& rec) {
  if (rec.marker != CaseMarker::Spade)
    throw ArgumentError("spade check applies only to Spade records");
  return Rational(rec.weights[2]) * rec.weights[3] * anticanonical_degree(rec) <= 2;
}

RowVerification verify_record(const FamilyRecord& rec) {
  RowVerification row;
  row.record = &rec;
  row.minus_K3 = anticanonical_degree(rec);
  if (row.minus_K3 != rec.stored_minus_K3)
    row.mismatches.push_back("-K^3: computed " + to_string(row.minus_K3) + ", stored " +
                             to_string(rec.stored_minus_K3));
  try {
    row.lic = compute_lic(rec);
    if (row.lic != rec.stored_lic) {
      auto show = [](const std::optional<std::uint64_t>& v) {
        return v ? std::to_string(*v) : std::string("-");
      };
      row.mismatches.push_back("l_ic: computed " + show(row.lic) + ", stored " +
                               show(rec.stored_lic));
    }
    row.kca = compute_kca(rec);
    if (row.kca != rec.stored_kca)
      row.mismatches.push_back("k_cA: computed " + std::to_string(row.kca) + ", stored " +
                               std::to_string(rec.stored_kca));
    if (row.lic) {
      row.max_k = max_excluded_k(*row.lic, row.minus_K3);
      if (*row.max_k != row.kca)
        row.mismatches.push_back("k_cA: inequality search gives " + std::to_string(*row.max_k) +
                                 ", floor formula " + std::to_string(row.kca));
    }
  } catch (const DataError& e) {
    row.mismatches.push_back(e.what());
  }
  if (rec.marker == CaseMarker::Spade) {
    row.spade_ok = spade_special_check(rec);
    if (!*row.spade_ok) row.mismatches.push_back("spade check a2*a3*(-K^3) <= 2 fails");
  }
  return row;
}

VerificationReport verify_all(const FamilyDataset& data) {
  VerificationReport rep;
  for (const auto& rec : data.records()) {
    rep.rows.push_back(verify_record(rec));
    if (rep.rows.back().passed()) ++rep.passed;
    else ++rep.failed;
  }
  return rep;
}

}  // namespace wblow
