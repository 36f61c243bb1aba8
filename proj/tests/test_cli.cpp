#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "decostab/cli.hpp"
#include "decostab/json_io.hpp"
#include "helpers.hpp"

using namespace decostab;
using io::Json;
using testing::q;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
  Json error() const { return Json::parse(err); }
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Result run_doc(const std::string& command, const Json& doc, std::vector<std::string> extra = {}) {
  std::vector<std::string> args = {command};
  if (command == "profile") {
    args.push_back(extra.front());
    extra.erase(extra.begin());
  }
  args.push_back("--file");
  args.push_back("-");
  args.insert(args.end(), extra.begin(), extra.end());
  return run(args, doc.dump());
}

const Json kSym23 = {{"sym", {2, {{"std", 3}}}}};
const Json kPair = {{"r", 2},        {"d", 1},          {"steps", {{1, 1}}},
                    {"alpha", {"1"}}, {"support", {{1, -1}, {0, 0}}}, {"delta", "1/2"}};

}  // namespace

TEST_CASE("representation round trip") {
  const std::vector<Json> docs = {
      kSym23,
      {{"trivial", 2}},
      {{"dual", {{"std", 2}}}},
      {{"tensor", {{{"std", 2}}, {{"dual", {{"std", 2}}}}}}},
      {{"wedge", {2, {{"std", 4}}}}},
      {{"dsum", {{{"std", 3}}, {{"det", {3, -1}}}}}},
  };
  for (const auto& doc : docs) {
    const auto rep = io::read_rep(io::Node(doc));
    CHECK(io::to_json(rep) == doc);
  }
}

TEST_CASE("state sets round trip") {
  const auto states = enumerate_states(RepExpr::tensor(RepExpr::standard(2), RepExpr::dual(RepExpr::standard(2))));
  const Json doc = io::to_json(states);
  CHECK(doc.at("mult") == Json({1, 2, 1}));
  CHECK(io::read_states(io::Node(doc)) == states);
  CHECK(io::read_states(io::Node(Json{{0, 0}, {1, -1}, {0, 0}, {-1, 1}})) == states);
}

TEST_CASE("schema errors name the offending field") {
  auto res = run_doc("check", {{"r", 2}, {"d", 1}, {"steps", {{1, "x"}}}, {"support", {{0, 0}}}, {"delta", "1"}});
  CHECK(res.code == 2);
  CHECK(res.error().at("pointer") == "/steps/0/1");

  res = run_doc("check", {{"r", 2}, {"d", 1}, {"support", {{0, 0}}}});
  CHECK(res.code == 2);
  CHECK(res.error().at("pointer") == "/delta");

  res = run_doc("mu", {{"support", {{1, 0, 0}}}, {"gamma", {"1", "0", "-1"}}});
  CHECK(res.code == 2);
  CHECK(res.error().at("error") == "NotOrdered");
  CHECK(res.error().at("pointer") == "/gamma");

  res = run_doc("states", {{"rep", {{"sym", {2, {{"bogus", 3}}}}}}});
  CHECK(res.code == 2);
  CHECK(res.error().at("pointer") == "/rep/sym/1");

  res = run_doc("check", {{"r", 2}, {"d", 1}, {"support", {{0, 0, 0}}}, {"delta", "1"}});
  CHECK(res.error().at("pointer") == "/support/0");

  res = run_doc("check", {{"r", 2}, {"d", 1}, {"support", {{0, 0}}}, {"delta", 0.5}});
  CHECK(res.code == 2);
  CHECK(res.error().at("pointer") == "/delta");

  res = run({"states", "--rep", "{not json"});
  CHECK(res.code == 2);
  CHECK(res.error().at("pointer") == "/rep");

  CHECK(run({"no-such-command"}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run_doc("check", kPair).code == 0);
  Json failing = kPair;
  failing["delta"] = "1/3";
  CHECK(run_doc("check", failing).code == 0);
  CHECK(run_doc("check", failing, {"--assert-pass"}).code == 4);
  CHECK(run_doc("check", kPair, {"--assert-pass"}).code == 0);
  Json strict = kPair;
  strict["strict"] = true;
  CHECK(run_doc("check", strict, {"--assert-pass"}).code == 4);

  const Json rep = {{"rep", {{"sym", {2, {{"std", 4}}}}}}};
  CHECK(run_doc("k-rho", rep, {"--budget", "100"}).code == 3);
  CHECK(run_doc("k-rho", rep).code == 0);
  ::setenv("DECOSTAB_BUDGET", "100", 1);
  CHECK(run_doc("k-rho", rep).code == 3);
  CHECK(run_doc("simplify", rep).code == 3);
  CHECK(run_doc("k-rho", rep, {"--budget", "5000"}).code == 0);
  ::setenv("DECOSTAB_BUDGET", "lots", 1);
  CHECK(run_doc("k-rho", rep).code == 2);
  ::unsetenv("DECOSTAB_BUDGET");
}

TEST_CASE("documented invocations") {
  auto res = run({"fan", "--rep", kSym23.dump(), "--A", "[[1,0,1],[0,2,0]]"});
  REQUIRE(res.code == 0);
  CHECK(res.json().at("K") == Json({{-2, 1, 1}, {-1, -1, 2}, {-1, 0, 1}}));
  CHECK(res.json().at("critical") == true);

  const Json balanced = {{"r", 3}, {"d", 3}, {"steps", {{1, 1}, {2, 2}}}, {"alpha", {"1", "1"}},
                         {"support", {{0, 0, 0}}}, {"delta", "1"}};
  res = run_doc("check", balanced);
  CHECK(res.json() == Json({{"value", "0"}, {"passes", true}, {"boundary", true}}));

  res = run_doc("threshold", kPair);
  CHECK(res.json() == Json({{"delta", "1/2"}}));

  res = run({"states", "--rep", R"({"wedge":[3,{"std":3}]})", "--canonical"});
  CHECK(res.out == "{\"dimension\":\"1\",\"mult\":[1],\"r\":3,\"states\":[[1,1,1]]}\n");

  res = run({"mu", "--support", "[[1,0,1],[0,2,0],[0,1,1],[0,0,2]]", "--gamma", R"(["-3","0","3"])"});
  CHECK(res.json().at("mu") == "0");

  res = run({"cone", "--r", "2"});
  CHECK(res.json().at("rays") == Json({{-1, 1}}));
}

TEST_CASE("canonical output is stable") {
  const std::vector<std::string> args = {"simplify", "--rep", kSym23.dump(), "--canonical"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find('\n') == a.out.size() - 1);
  CHECK(io::dump(a.json(), true) == a.out);
}

TEST_CASE("commands match library calls") {
  const auto sym23 = RepExpr::sym(2, RepExpr::standard(3));
  const auto a = enumerate_states(sym23);
  const StateSet cell_a = io::read_states(io::Node(Json{{1, 0, 1}, {0, 2, 0}}));
  const auto filt = io::read_filtration(io::Node(kPair));

  CHECK(run_doc("states", {{"rep", kSym23}}).json().at("states") == io::to_json(a).at("states"));
  CHECK(run_doc("degree", {{"rep", kSym23}}).json().at("degree") == homogeneity_degree(sym23));
  CHECK(run_doc("homogenize", {{"summands", {{{"std", 2}}, {{"wedge", {2, {{"std", 2}}}}}}}, {"kappa", 2}})
            .json()
            .at("rep") ==
        io::to_json(homogenize({RepExpr::standard(2), RepExpr::wedge(2, RepExpr::standard(2))}, 2)));
  CHECK(run_doc("envelope-check", {{"rep", kSym23}, {"a", 2}, {"b", 0}, {"c", 1}}).json().at("contained") ==
        state_containment(sym23, 2, 0, 1));
  CHECK(run_doc("decompose", {{"gamma", {"-1/2", "0", "1/2"}}}).json().at("alpha") ==
        io::to_json(decompose(WeightVector({q("-1/2"), 0, q("1/2")})).alpha));
  CHECK(run_doc("mu", {{"support", {{1, 0, 1}}}, {"ranks", {1, 2}}, {"alpha", {"1", "2"}}}).json().at("mu") ==
        io::to_json(mu_filtration({1, 2}, {1, 2}, io::read_states(io::Node(Json{{1, 0, 1}})))));
  CHECK(run_doc("cone", {{"r", 3}, {"halfspaces", {{1, -1, 0}, {0, 1, -1}, {1, -2, 1}}}}).json() ==
        io::to_json(cone_from_halfspaces(3, {{1, -1, 0}, {0, 1, -1}, {1, -2, 1}})));
  CHECK(run_doc("cell", {{"A", {{1, 0, 1}, {0, 2, 0}}}, {"chi", {1, 0, 1}}}).json() ==
        io::to_json(state_cell(cell_a, TorusWeight{{1, 0, 1}})));
  CHECK(run_doc("fan", {{"A", {{1, 0, 1}, {0, 2, 0}}}}).json() == io::to_json(state_fan(cell_a)));
  CHECK(run_doc("critical", {{"A", {{1, 0, 1}, {0, 2, 0}}}}).json().at("critical") == is_critical(cell_a));
  CHECK(run_doc("k-rho", {{"rep", kSym23}}).json().at("K") == Json(critical_weight_vectors(sym23)));
  CHECK(run_doc("m-value", kPair).json().at("M") == io::to_json(m_value(filt.filt)));
  CHECK(run_doc("check", kPair).json() == io::to_json(check(filt.filt, {*filt.support}, filt.params)));
  CHECK(run_doc("check-subbundle",
                {{"r", 3}, {"d", 1}, {"rank", 1}, {"degree", 0}, {"support", {{0, 1, 0}}}, {"delta", "2"}})
            .json() == io::to_json(check_subbundle(1, 0, {framed_support(1, true, 3, false)}, 3, 1, {2, false})));
  Json combined = kPair;
  combined["supports"] = {{{1, -1}}, {{0, 0}}};
  combined["sigma"] = {"1/3", "2/3"};
  const StateSet s1 = io::read_states(io::Node(Json{{1, -1}}));
  const StateSet s2 = io::read_states(io::Node(Json{{0, 0}}));
  CHECK(run_doc("combine", combined).json() ==
        io::to_json(combine_direct_sum(filt.filt, {{s1}, {s2}}, {q("1/3"), q("2/3")}, filt.params)));
  Json sectional = kPair;
  sectional["chi_En"] = 7;
  sectional["h0"] = {4};
  sectional["mu"] = "2";
  CHECK(run_doc("sectional", sectional).json() == io::to_json(sectional_check(filt.filt, 7, {4}, 2, filt.params)));
  CHECK(run_doc("epsilon", {{"d", 1}, {"r", 2}, {"g", 2}, {"n", 10}, {"a", 2}, {"delta", "1/2"}}).json() ==
        Json({{"p", "19"}, {"epsilon", "18"}}));
  CHECK(run_doc("c1", {{"r", 3}, {"a", 2}, {"delta", "3/2"}}).json().at("C1") == io::to_json(bound_c1(3, 2, q("3/2"))));
  CHECK(run_doc("simplify", {{"rep", kSym23}}).json() == io::to_json(simplify(sym23)));
  CHECK(run_doc("threshold", kPair).json().at("delta") ==
        io::to_json(*delta_threshold(filt.filt, {*filt.support})));

  CHECK(run_doc("profile", {{"i", 1}, {"dim_ker", 2}, {"dim_cap", 1}, {"r", 3}}, {"extension"}).json().at("mu") ==
        "-1");
  CHECK(run_doc("profile", {{"i", 1}, {"dim_ker", 1}, {"dim_cap", 0}, {"r", 2}, {"quotient", {{1, 1}}}},
                {"extension"})
            .json()
            .at("support") == io::to_json(extension_states({{1, 1}})));
  auto framed = run_doc("profile", {{"k", 1}, {"in_kernel", false}, {"r", 3}}, {"framed"}).json();
  CHECK(framed.at("mu") == "2");
  CHECK(framed.at("mu_support") == "2");
  CHECK(framed.at("support") == io::to_json(framed_support(1, false, 3)));
  auto hitchin =
      run_doc("profile", {{"i", 1}, {"invariant", true}, {"superinvariant", true}, {"eps_zero", true}, {"r", 3}},
              {"hitchin"})
          .json();
  CHECK(hitchin.at("mu") == "-3");
  CHECK(hitchin.at("mu_support") == "-3");
  CHECK(run_doc("profile", {{"r", 4}}, {"hitchin-nilpotent"}).json().at("mu") == "-4");
  CHECK(run_doc("profile", {{"r", 3}, {"nonzero", {{2, 2}, {1, 3}, {3, 3}}}}, {"conic-support"}).json() ==
        Json({{"minimal", {{1, 3}, {2, 2}}}, {"nu", 4}}));
  CHECK(run_doc("profile", {{"r", 4}, {"k", 2}, {"c_tau", 1}}, {"conic-mu"}).json().at("mu") == "0");
  CHECK(run_doc("profile", {{"r", 3}, {"k", 1}, {"nonzero", {{1, 1}}}}, {"conic-mu"}).json() ==
        Json({{"c_tau", 2}, {"mu", "4"}}));
  CHECK(run_doc("profile", {{"type", "III"}}, {"conic-type"}).json() ==
        io::to_json(conic_critical_type(conic_type_flags(ConicCriticalType::III))));
  CHECK(run_doc("profile", {{"flags", {{1, 2, true}, {1, 3, false}, {2, 2, false}}}}, {"conic-type"})
            .json()
            .at("type") == "I");
}

TEST_CASE("every output re-parses") {
  const std::vector<std::pair<std::string, Json>> cases = {
      {"states", {{"rep", kSym23}}},
      {"fan", {{"A", {{1, 0, 1}, {0, 2, 0}}}}},
      {"check", kPair},
      {"simplify", {{"rep", kSym23}}},
  };
  for (const auto& [command, doc] : cases) {
    const auto res = run_doc(command, doc);
    REQUIRE(res.code == 0);
    const Json parsed = res.json();
    if (command == "states") CHECK(io::read_states(io::Node(parsed)) == enumerate_states(RepExpr::sym(2, RepExpr::standard(3))));
    if (command == "check") CHECK(io::Node(parsed.at("value")).rational() == 0);
  }
}
