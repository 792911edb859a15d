#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include "apvar/report.hpp"

using namespace apvar;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("doubles round-trip through 17 digits") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.1544313298030657}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("variance CSV and JSON") {
  const DkTable t = sieve_dk(2000, 2);
  const VarianceReport rep = variance_total(t, 2000, 12);
  std::ostringstream os;
  write_variance_csv(os, rep);
  const auto lines = lines_of(os.str());
  REQUIRE(lines.size() == 14);
  CHECK(lines.front() == "q,V_q");
  CHECK(lines[1].rfind("1,", 0) == 0);
  CHECK(lines.back() == "total," + format_double(rep.total));
  CHECK(std::strtod(lines[5].substr(2).c_str(), nullptr) == rep.per_q[5]);

  const nlohmann::json j = variance_json(rep);
  CHECK(j["V_q"].size() == 12);
  CHECK(j["total"].get<double>() == rep.total);
  CHECK(j["terms"].contains("cross"));
}

TEST_CASE("other CSV schemas") {
  std::ostringstream g;
  GrowthStudy study{2, {{100, 10, 5.0, 0.005}, {200, 20, 8.0, 0.002}}, 1.0};
  write_growth_csv(g, study);
  const auto gl = lines_of(g.str());
  REQUIRE(gl.size() == 3);
  CHECK(gl[0] == "x,Q,V,V_over_xQ");
  CHECK(gl[1] == "100,10,5,0.0050000000000000001");

  std::ostringstream f;
  write_farey_csv(f, dissection(3));
  const auto fl = lines_of(f.str());
  CHECK(fl[0] == "a,q,left_num,left_den,right_num,right_den");
  CHECK(fl.size() == 1 + 4);
  CHECK(fl[1] == "0,1,-1,4,1,4");

  std::ostringstream e;
  write_expsum_csv(e, {ExpSumValue{1.5, -2.0, 1, 3, 10}}, {DeltaValue{{0.25, -2.0}, 1, 3, 10}});
  const auto el = lines_of(e.str());
  CHECK(el[0] == "a,q,X,re,im,delta_re,delta_im");
  CHECK(el[1] == "1,3,10,1.5,-2,0.25,-2");
}

TEST_CASE("JSON shapes") {
  const nlohmann::json c = check_json({"parseval", 1.0, 1.0, 0.0, true});
  CHECK(c.size() == 5);
  CHECK(c["check"] == "parseval");
  CHECK(c["pass"] == true);
  const nlohmann::json p = logpoly_json(2, 3, std::nullopt, LogPoly{{0.5, 1.0}});
  CHECK_FALSE(p.contains("a"));
  CHECK(p["coeffs"].size() == 2);
  CHECK(logpoly_json(2, 3, 2, LogPoly{{1.0}})["a"] == 2);
}
