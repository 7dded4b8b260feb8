#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wblow/rational.hpp"
#include "wblow/wps.hpp"

namespace wblow {

enum class CaseMarker { Star, Club, Heart, Spade };

// One row of the index-1 Fano 3-fold tables: hypersurfaces (codim 1) and
// codimension-2 weighted complete intersections.
struct FamilyRecord {
  int family_no = 0;
  int codim = 1;
  std::vector<std::uint64_t> degrees;
  std::vector<std::uint32_t> weights;  // ascending
  CaseMarker marker = CaseMarker::Star;
  // codim 2 Club/Heart: the marker club_{m,5} excludes indices m and 5
  std::size_t marker_index = 0;
  Rational stored_minus_K3;
  std::optional<std::uint64_t> stored_lic;
  std::uint64_t stored_kca = 0;
  std::string equation_shape;

  // "star", "heart", "club_4_5", ...
  std::string marker_label() const;
};

class FamilyDataset {
 public:
  // The table shipped inside the library.
  static FamilyDataset embedded();
  static FamilyDataset from_file(const std::string& path);
  // Tab-separated with a header row; throws DataError naming `source` and the line.
  static FamilyDataset parse(std::string_view text, const std::string& source = "<text>");

  const std::vector<FamilyRecord>& records() const noexcept { return records_; }
  const std::string& source() const noexcept { return source_; }

  // Family numbers repeat across the two tables; codim 0 matches either.
  std::vector<const FamilyRecord*> find(int family_no, int codim = 0) const;

 private:
  std::vector<FamilyRecord> records_;
  std::string source_;
};

CaseMarker parse_marker(const std::string& text, int codim, std::size_t* index);
std::string to_string(CaseMarker m);

// prod degrees / prod weights
Rational anticanonical_degree(const FamilyRecord& rec);

// The isolating-bound variants whose maximum is l_ic; empty for Star.
std::vector<IsolatingVariant> lic_variants(const FamilyRecord& rec);

std::optional<std::uint64_t> compute_lic(const FamilyRecord& rec);

// 1 for Star, else floor(4 / (l_ic * (-K^3)) - 1). Throws DataError when <= 0.
std::uint64_t compute_kca(const FamilyRecord& rec);

// Largest k >= 1 with exclusion_inequality(l, degree, 4/(k+1)); 0 if none.
std::uint64_t max_excluded_k(std::uint64_t l, const Rational& degree);

// a_2 * a_3 * (-K^3) <= 2. Throws ArgumentError unless the marker is Spade.
bool spade_special_check(const FamilyRecord& rec);

struct RowVerification {
  const FamilyRecord* record = nullptr;
  Rational minus_K3;
  std::optional<std::uint64_t> lic;
  std::uint64_t kca = 0;
  std::optional<std::uint64_t> max_k;   // brute-force inequality search (non-Star)
  std::optional<bool> spade_ok;         // Spade rows only
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
};

struct VerificationReport {
  std::vector<RowVerification> rows;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool all_passed() const { return failed == 0; }
};

VerificationReport verify_all(const FamilyDataset& data);
RowVerification verify_record(const FamilyRecord& rec);

}  // namespace wblow
