#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "twistkit/cli.hpp"
#include "twistkit/errors.hpp"
#include "twistkit/io.hpp"

using namespace twistkit;
using namespace twistkit::testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("twistkit_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("json round trips") {
  CHECK(to_json(make_rational(-6, 4)).dump() == R"({"num":"-3","den":"2"})");
  const Rational big = parse_rational("-98765432109876543210/3");
  CHECK(rational_from_json(to_json(big)) == big);
  CHECK(to_json(casimir()).dump() ==
        R"([{"e":1,"f":1,"d":0,"num":"2","den":"1"},{"e":0,"f":0,"d":2,"num":"1","den":"1"},)"
        R"({"e":0,"f":0,"d":1,"num":"-1","den":"1"}])");
  for (int n = 0; n < 30; ++n) {
    const Element x = random_element(4, 5);
    CHECK(element_from_json(to_json(x)) == x);
    const TensorElement t = random_tensor(4, 5);
    CHECK(tensor_from_json(to_json(t)) == t);
  }
  const TwistCandidate f = published_candidate();
  CHECK(candidate_from_json(to_json(f)).series == f.series);
  CHECK(candidate_from_json(parse_json(to_json(f).dump())).series == f.series);
}

TEST_CASE("json readers reject malformed input") {
  CHECK_THROWS_AS(parse_json("{not json"), InputError);
  CHECK_THROWS_AS(rational_from_json(parse_json(R"({"num":"1","den":"0"})")), InputError);
  CHECK_THROWS_AS(rational_from_json(parse_json(R"({"num":1})")), InputError);
  CHECK_THROWS_AS(element_from_json(parse_json(R"([{"e":-1,"f":0,"d":0,"num":"1","den":"1"}])")), InputError);
  CHECK_THROWS_AS(candidate_from_json(parse_json(R"({"order":1})")), InputError);
  CHECK_THROWS_AS(load_candidate("/nonexistent/twistkit.json"), InputError);
}

TEST_CASE("rep matrix json") {
  const RepMatrix m = evaluate(HSeries<TensorElement>({TensorElement::one(), classical_r()}), SpinRep(1), SpinRep(0));
  const Json j = to_json(m);
  CHECK(j["dim"] == 2);
  CHECK(j["order"] == 1);
  CHECK(j["rows"][0][0].dump() == R"([{"num":"1","den":"1"},{"num":"0","den":"1"}])");
}

TEST_CASE("cli: expand-phi") {
  const Run plus = run({"expand-phi", "--sign", "plus", "--order", "2"});
  CHECK(plus.code == exit_ok);
  CHECK(contains(plus.out, "1 + h^2*(2*I + 2*H^2 - 2*H - 1)/12"));
  const Run zero = run({"expand-phi", "--sign", "plus", "--order", "0"});
  CHECK(zero.out == "1\n");
  const Run minus = run({"expand-phi", "--sign", "minus", "--order", "2"});
  CHECK(contains(minus.out, "1 + h^2*(2*I + 2*H^2 + 2*H - 1)/12"));
  CHECK(run({"expand-phi", "--sign", "sideways"}).code == exit_bad_input);
}

TEST_CASE("cli: solve-twist") {
  const Run one = run({"solve-twist", "--order", "1", "--format", "json"});
  REQUIRE(one.code == exit_ok);
  const Json doc = parse_json(one.out);
  CHECK(tensor_from_json(doc["orders"][0]["particular"]) == classical_r());
  CHECK(candidate_from_json(doc).series == HSeries<TensorElement>({TensorElement::one(), classical_r()}));
  const Run infeasible =
      run({"solve-twist", "--order", "2", "--cutoff-l", "2", "--cutoff-d", "1", "--max-escalations", "0"});
  CHECK(infeasible.code == exit_infeasible);
  CHECK(contains(infeasible.out, "infeasible-at-cutoff"));
}

TEST_CASE("cli: verify") {
  SUBCASE("published candidate") {
    const Run r = run({"verify", "--builtin", "published", "--order", "2", "--expect-paper-behavior"});
    CHECK(r.code == exit_ok);
    CHECK(contains(r.out, "twist J+: pass"));
    CHECK(contains(r.out, "R~q F = sigma(F) R: pass"));
    CHECK(contains(r.out, "unitarity sigma(F) F = 1 (universal): fails-as-paper-states at order 2"));
    CHECK(contains(r.out, "fails-as-paper-states"));
    CHECK(contains(r.out, "verdict: pass"));
    CHECK(run({"verify", "--builtin", "published", "--order", "2"}).code == exit_falsified);
    CHECK(run({"verify", "--builtin", "published", "--order", "2", "--checks", "twist,rmatrix,normalization"}).code ==
          exit_ok);
  }
  SUBCASE("identity candidate") {
    const Run r = run({"verify", "--builtin", "identity", "--order", "1", "--checks", "twist"});
    CHECK(r.code == exit_falsified);
    CHECK(contains(r.out, "verdict: falsified"));
  }
  SUBCASE("candidate files") {
    const std::string good = temp_file("good.json", to_json(published_candidate()).dump());
    CHECK(run({"verify", "--candidate", good, "--order", "2", "--checks", "twist"}).code == exit_ok);
    const std::string bad = temp_file("bad.json", "{\"format\": ");
    CHECK(run({"verify", "--candidate", bad, "--order", "1"}).code == exit_bad_input);
    CHECK(run({"verify", "--candidate", "/nonexistent.json"}).code == exit_bad_input);
  }
}

TEST_CASE("cli: eval-rep") {
  const Run r = run({"eval-rep", "--builtin", "published", "--two-j1", "1", "--two-j2", "1", "--order", "2"});
  CHECK(r.code == exit_ok);
  CHECK(contains(r.out, "sigma(F) F = 1 in spin 1/2 x 1/2: pass"));
  const Run id = run({"eval-rep", "--builtin", "identity", "--two-j1", "1", "--two-j2", "0", "--order", "1"});
  CHECK(id.code == exit_ok);
  CHECK(contains(id.out, "1  0\n0  1\n"));
  const Run json = run({"eval-rep", "--builtin", "published", "--two-j1", "1", "--two-j2", "2", "--format", "json"});
  REQUIRE(json.code == exit_ok);
  CHECK(parse_json(json.out)["matrix"]["dim"] == 6);
  CHECK(run({"eval-rep", "--builtin", "published", "--two-j1", "-1"}).code == exit_bad_input);
}

TEST_CASE("cli: show-rmatrix and misc") {
  const Run r = run({"show-rmatrix", "--order", "1"});
  CHECK(r.code == exit_ok);
  CHECK(contains(r.out, "h^1: 2 * (E ⊗ F) + 2 * (F ⊗ E) + 2 * (H ⊗ H)"));
  CHECK(run({"bogus"}).code == exit_bad_input);
  CHECK(run({}).code == exit_bad_input);
  CHECK(run({"verify", "--builtin", "nope"}).code == exit_bad_input);
}

TEST_CASE("cli: output is deterministic") {
  const std::vector<std::string> args = {"solve-twist", "--order", "2", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}
