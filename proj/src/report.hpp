#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wblow/fano_db.hpp"
#include "wblow/parse.hpp"
#include "wblow/propcheck.hpp"

namespace wblow::report {

using Json = nlohmann::ordered_json;

enum class Outcome { Ok, VerifyFailed, Inconclusive };

// {command, inputs, result, certificate}
struct Report {
  Json doc;
  Outcome outcome = Outcome::Ok;
};

std::string render_text(const Json& doc);
std::string render_json(const Json& doc);

Report mult(const PolynomialSystem& sys, unsigned cap);
Report fulton(const PolynomialSystem& sys, const std::vector<std::uint32_t>& weights,
              const std::vector<Rational>& scales, unsigned cap);
Report quotient(const PolynomialSystem& sys, std::uint32_t r,
                const std::vector<std::uint32_t>& weights, unsigned cap);
Report order(const PolynomialSystem& sys, const std::vector<std::uint32_t>& weights);
Report empty(const PolynomialSystem& sys, const std::vector<std::uint32_t>& weights,
             unsigned cap);
Report jacobian(const PolynomialSystem& sys, const std::vector<Rational>& point);

Report threshold_lci(const std::vector<std::uint32_t>& weights,
                     const std::vector<std::uint64_t>& orders, std::uint32_t r);
Report threshold_cak(unsigned k, std::uint32_t r1, std::uint32_t r2, std::uint32_t a);
Report threshold_exceptional(int which);
Report threshold_floor(unsigned k);
Report contractions(unsigned k, unsigned a_max);

Report wps(const std::vector<std::uint32_t>& weights);
// point empty: bound only
Report isolate(const std::vector<std::uint32_t>& weights, const std::vector<std::string>& names,
               const std::vector<Rational>& point, const std::optional<std::string>& variant);

Report families_verify(const FamilyDataset& data);
Report families_show(const FamilyDataset& data, int family_no, int codim);
Report families_list(const FamilyDataset& data, const std::optional<std::string>& marker,
                     int codim);

Report propcheck(const std::string& suite, unsigned cases, std::uint64_t seed, unsigned cap);

// x, y, z, t (, v), w as in the tables for up to six coordinates; x0.. beyond.
std::vector<std::string> coordinate_names(std::size_t n);

}  // namespace wblow::report
