#pragma once

// CSV and JSON emitters for the CLI. Floats print with 17 significant digits.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apvar/checks.hpp"
#include "apvar/farey.hpp"
#include "apvar/progression.hpp"
#include "apvar/residue.hpp"

namespace apvar {

std::string format_double(double v);

// {"k":..., "q":..., "a":..., "coeffs":[c0, ...]}; "a" omitted when absent.
nlohmann::json logpoly_json(unsigned k, u64 q, std::optional<u64> a, const LogPoly& p);

nlohmann::json check_json(const CheckResult& r);

// Header `q,V_q`, one row per q, then `total,<V>`.
void write_variance_csv(std::ostream& os, const VarianceReport& rep);
nlohmann::json variance_json(const VarianceReport& rep);

// Header `x,Q,V,V_over_xQ`.
void write_growth_csv(std::ostream& os, const GrowthStudy& g);

// Header `a,q,left_num,left_den,right_num,right_den`, ascending center.
void write_farey_csv(std::ostream& os, const std::vector<FareyArc>& arcs);

// Header `a,q,X,re,im,delta_re,delta_im`.
void write_expsum_csv(std::ostream& os, const std::vector<ExpSumValue>& sums, const std::vector<DeltaValue>& deltas);

}  // namespace apvar
