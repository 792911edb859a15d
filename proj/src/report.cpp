#include "apvar/report.hpp"

#include <cstdio>
#include <ostream>

namespace apvar {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json logpoly_json(unsigned k, u64 q, std::optional<u64> a, const LogPoly& p) {
  nlohmann::json j;
  j["k"] = k;
  j["q"] = q;
  if (a) j["a"] = *a;
  j["coeffs"] = p.coeffs;
  return j;
}

nlohmann::json check_json(const CheckResult& r) {
  return {{"check", r.check}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"rel_diff", r.rel_diff}, {"pass", r.pass}};
}

void write_variance_csv(std::ostream& os, const VarianceReport& rep) {
  os << "q,V_q\n";
  for (u64 q = 1; q <= rep.Q; ++q) os << q << ',' << format_double(rep.per_q[q]) << '\n';
  os << "total," << format_double(rep.total) << '\n';
}

nlohmann::json variance_json(const VarianceReport& rep) {
  nlohmann::json j;
  j["x"] = rep.x;
  j["Q"] = rep.Q;
  j["k"] = rep.k;
  j["V_q"] = std::vector<double>(rep.per_q.begin() + 1, rep.per_q.end());
  j["total"] = rep.total;
  j["terms"] = {{"congruence", rep.terms.congruence}, {"cross", rep.terms.cross}, {"square", rep.terms.square}};
  return j;
}

void write_growth_csv(std::ostream& os, const GrowthStudy& g) {
  os << "x,Q,V,V_over_xQ\n";
  for (const auto& r : g.rows) os << r.x << ',' << r.Q << ',' << format_double(r.V) << ',' << format_double(r.V_over_xQ) << '\n';
}

void write_farey_csv(std::ostream& os, const std::vector<FareyArc>& arcs) {
  os << "a,q,left_num,left_den,right_num,right_den\n";
  for (const auto& arc : arcs)
    os << arc.center.num << ',' << arc.center.den << ',' << arc.left.num << ',' << arc.left.den << ','
       << arc.right.num << ',' << arc.right.den << '\n';
}

void write_expsum_csv(std::ostream& os, const std::vector<ExpSumValue>& sums, const std::vector<DeltaValue>& deltas) {
  os << "a,q,X,re,im,delta_re,delta_im\n";
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const auto& s = sums[i];
    os << s.a << ',' << s.q << ',' << s.X << ',' << format_double(s.re) << ',' << format_double(s.im) << ','
       << format_double(deltas[i].value.real()) << ',' << format_double(deltas[i].value.imag()) << '\n';
  }
}

}  // namespace apvar
