#pragma once

// JSON is the canonical report format: exact values are "p/q" strings and
// polynomials are coefficient arrays, lowest degree first. CSV rows are a
// lossy decimal projection.

#include "invineq/charpoly.hpp"
#include "invineq/fixed_real.hpp"
#include "invineq/identities.hpp"
#include "invineq/matrix.hpp"
#include "invineq/polynomial.hpp"
#include "invineq/roots.hpp"
#include "invineq/spectra.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace invineq {

using json = nlohmann::ordered_json;

/// Decimal digits matching a binary precision.
inline unsigned decimal_digits(unsigned bits) { return bits * 30103u / 100000u; }

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

inline json to_json(const RatMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) entries.push_back(to_string(m(i, j)));
  return {{"dim", m.dim()}, {"entries", entries}};
}

inline json to_json(const PolyMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) entries.push_back(to_json(m(i, j)));
  return {{"dim", m.dim()}, {"entries", entries}};
}

inline json to_json(const Enclosure& e) { return {{"lo", to_string(e.lo)}, {"hi", to_string(e.hi)}}; }

inline json to_json(const CharPoly& f) {
  return {{"n", f.n}, {"degree", f.nu}, {"coefficients", to_json(f.poly)}};
}

inline json to_json(const DetReport& r) {
  return {{"n", r.n}, {"identity", std::string(name(r.identity))}, {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)}, {"equal", r.equal}};
}

inline json to_json(const BoundReport& r, unsigned bits) {
  const unsigned digits = decimal_digits(bits);
  json M = {{"lo", to_string(r.M.largest_root.lo)},
            {"hi", to_string(r.M.largest_root.hi)},
            {"value", r.M_upper.to_decimal(digits)},
            {"p1", to_string(r.M.p1)},
            {"p2", to_string(r.M.p2)}};
  if (r.M.cardano) M["cardano"] = r.M.cardano->to_decimal(digits);
  return {{"n", r.n},
          {"m", {{"u", to_string(r.m.u)}, {"v", to_string(r.m.v)}, {"value", r.m_lower.to_decimal(digits)}}},
          {"lambda", to_json(r.lambda)},
          {"f1", to_string(r.f1)},
          {"M", M},
          {"orderings",
           {{"m_vs_lambda", std::string(name(r.m_vs_lambda))},
            {"lambda_vs_f1", std::string(name(r.lambda_vs_f1))},
            {"lambda_vs_M", std::string(name(r.lambda_vs_M))}}},
          {"ok", r.ok()},
          {"undecided", r.undecided()}};
}

inline std::string bounds_csv_header() { return "n,m,lambda_lo,lambda_hi,f1,M,ok"; }

inline std::string to_csv(const BoundReport& r, unsigned bits) {
  const unsigned digits = decimal_digits(bits);
  auto dec = [&](const Rational& q) { return FixedReal::from_rational(q, bits).to_decimal(digits); };
  return std::to_string(r.n) + "," + r.m_lower.to_decimal(digits) + "," + dec(r.lambda.lo) + "," +
         dec(r.lambda.hi) + "," + to_string(r.f1) + "," + r.M_upper.to_decimal(digits) + "," +
         (r.undecided() ? "undecided" : r.ok() ? "true" : "false");
}

inline json to_json(const AsymptoticRow& r, unsigned bits) {
  const unsigned digits = decimal_digits(bits);
  return {{"n", r.n},
          {"lambda", to_json(r.lambda)},
          {"lambda_over_n4", r.lambda_over_n4.to_decimal(digits)},
          {"lambda_over_f1", r.lambda_over_f1.to_decimal(digits)},
          {"smallest_root_even", r.smallest_root_even.to_decimal(digits)},
          {"smallest_root_odd", r.smallest_root_odd.to_decimal(digits)},
          {"targets",
           {{"inv_pi2", r.targets.inv_pi2.to_decimal(digits)},
            {"eight_over_pi2", r.targets.eight_pi2.to_decimal(digits)},
            {"pi2_over_4", r.targets.pi2_quarter.to_decimal(digits)},
            {"pi2", r.targets.pi2.to_decimal(digits)}}}};
}

inline std::string asymptotics_csv_header() {
  return "n,lambda_over_n4,lambda_over_f1,smallest_root_even,smallest_root_odd,inv_pi2,eight_over_pi2,pi2_over_4,pi2";
}

inline std::string to_csv(const AsymptoticRow& r, unsigned bits) {
  const unsigned d = decimal_digits(bits);
  return std::to_string(r.n) + "," + r.lambda_over_n4.to_decimal(d) + "," + r.lambda_over_f1.to_decimal(d) + "," +
         r.smallest_root_even.to_decimal(d) + "," + r.smallest_root_odd.to_decimal(d) + "," +
         r.targets.inv_pi2.to_decimal(d) + "," + r.targets.eight_pi2.to_decimal(d) + "," +
         r.targets.pi2_quarter.to_decimal(d) + "," + r.targets.pi2.to_decimal(d);
}

inline std::string figure_csv_header() { return "n,root,parity"; }

/// One CSV line per root: midpoint of its enclosure, parity of n.
inline std::vector<std::string> figure_rows(const RootTable& t, unsigned bits) {
  std::vector<std::string> rows;
  rows.reserve(t.roots.size());
  for (const auto& e : t.roots)
    rows.push_back(std::to_string(t.n) + "," +
                   FixedReal::from_rational(e.midpoint(), bits).to_decimal(decimal_digits(bits)) + "," +
                   std::to_string(t.n % 2));
  return rows;
}

}  // namespace invineq
