#include <doctest.h>

#include <sstream>

#include "swb/cli.hpp"
#include "swb/serialize.hpp"

using namespace swb::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(RunConfig c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig cfg(const std::string& sub) {
  RunConfig c;
  c.subcommand = sub;
  return c;
}

}  // namespace

TEST_CASE("catalan report") {
  RunConfig c = cfg("catalan");
  c.n = 3;
  const Result r = call(c);
  CHECK(r.code == kPass);
  const auto j = swb::Json::parse(r.out);
  CHECK(j["total"] == 5);
  CHECK(j["status"] == "PASS");
  CHECK(j["table"].size() == 5);
}

TEST_CASE("gkm-verify on SL2 b0") {
  RunConfig c = cfg("gkm-verify");
  c.group = "SL2";
  c.d = 2;
  c.klass = "b0";
  CHECK(call(c).code == kPass);
  c.klass = "q0";
  CHECK(call(c).code == kUsage);
}

TEST_CASE("compare-knot reports the normalization") {
  RunConfig c = cfg("compare-knot");
  c.link = "T33";
  const Result r = call(c);
  CHECK(r.code == kPass);
  const auto j = swb::Json::parse(r.out);
  CHECK(j["equal"] == true);
  CHECK(j["normalization"] == "T^3");
}

TEST_CASE("ordinary quotient reports inconclusive when the margin cannot grow") {
  RunConfig c = cfg("ordinary-quotient");
  c.group = "GL";
  c.n = 2;
  c.d = 1;
  c.margin = 2;
  c.max_margin = 2;
  CHECK(call(c).code == kInconclusive);
  c.max_margin = 0;
  const Result r = call(c);
  CHECK(r.code == kPass);
  CHECK(swb::Json::parse(r.out)["quotient_dimension"] == 3);
}

TEST_CASE("malformed configs give usage errors") {
  CHECK(call(cfg("no-such-command")).code == kUsage);
  RunConfig c = cfg("catalan");
  c.n = 7;
  CHECK(call(c).code == kUsage);
  RunConfig j = cfg("jd-series");
  j.group = "E8";
  j.ring = "laurent";
  const Result r = call(j);
  CHECK(r.code == kUsage);
  CHECK_FALSE(r.err.empty());
  RunConfig m = cfg("msv");
  m.curve = "9,9";
  CHECK(call(m).code == kUsage);
  RunConfig k = cfg("compare-knot");
  k.format = Format::Csv;
  CHECK(call(k).code == kUsage);
}

TEST_CASE("csv and human formats") {
  RunConfig c = cfg("jd-series");
  c.n = 2;
  c.maxdeg = 1;
  c.format = Format::Csv;
  CHECK(call(c).out == "a,b,dimension,rank\n0,0,1,0\n1,0,2,1\n0,1,2,1\n");
  c.format = Format::Human;
  const Result h = call(c);
  CHECK(h.out.find("status: PASS") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* sub : {"catalan", "msv", "conjecture-check", "flag-rank1", "gkm-graph"}) {
    RunConfig c = cfg(sub);
    c.n = 3;
    c.q_order = 4;
    CHECK(call(c).out == call(c).out);
  }
}
