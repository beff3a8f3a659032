#include <functional>
#include <string>

#include "doctest.h"
#include "orbicalc/cli.hpp"

using namespace orbicalc::cli;

namespace {
Json request(const std::string& command, Json space, Json payload) {
  return Json{{"command", command}, {"space", std::move(space)}, {"payload", std::move(payload)}};
}

const Json kWps235{{"wps", Json::array({2, 3, 5})}};

bool has_number(const Json& j) {
  if (j.is_number()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_number(v)) return true;
  return false;
}
}  // namespace

TEST_CASE("pairing and virtual genus") {
  const auto r = run(request("pairing", kWps235, {{"degrees", Json::array({15, 15})}}));
  CHECK(r.status == Ok);
  CHECK(r.json["result"]["pairing"] == "15/2");
  const auto g = run(request("virtual-genus", kWps235, {{"degree", "15"}}));
  CHECK(g.status == Ok);
  CHECK(g.json["result"]["virtual_genus"] == "9/4");
  CHECK_FALSE(has_number(g.json));
}

TEST_CASE("adjunction presets") {
  const auto line = run(request("adjunction-check", kWps235, {{"preset", "coordinate-line"}}));
  CHECK(line.status == Ok);
  CHECK(line.json["result"]["verdict"] == "equal");
  const auto pencil = run(request("adjunction-check", kWps235, {{"preset", "pencil"}, {"c", "1"}}));
  CHECK(pencil.json["result"]["verdict"] == "equal");
  CHECK(pencil.json["result"]["orbifold_genus"] == "1/4");
  const auto meet = run(request("intersection-check", kWps235, {{"preset", "pencil"}}));
  CHECK(meet.json["result"]["verdict"] == "equal");
}

TEST_CASE("validation errors carry a field pointer") {
  const auto bad_space = run(request("pairing", {{"wps", Json::array({2, 4, 5})}}, {{"degrees", Json::array({1, 1})}}));
  CHECK(bad_space.status == Invalid);
  CHECK(bad_space.json["error"]["field"] == "/space/wps");
  const auto unknown = run(request("delta", Json::object(), {{"m", 5}, {"b", 3}, {"c", 2}, {"extra", 1}}));
  CHECK(unknown.status == Invalid);
  CHECK(unknown.json["error"]["field"] == "/payload/extra");
  const auto floats = run(request("delta", Json::object(), {{"m", 5.0}, {"b", 3}, {"c", 2}}));
  CHECK(floats.status == Invalid);
  CHECK(floats.json["error"]["field"] == "/payload/m");
  const auto cmd = run(Json{{"command", "nope"}});
  CHECK(cmd.status == Invalid);
  const auto top = run(Json{{"command", "delta"}, {"bogus", 1}});
  CHECK(top.status == Invalid);
  CHECK(top.json["error"]["field"] == "/bogus");
}

TEST_CASE("computation errors") {
  const auto common = run(request("local-int", Json::object(), {{"germs", Json::array({"(t^3, t^5)", "(t^3, t^5)"})}}));
  CHECK(common.status == Failed);
  CHECK(common.json["error"]["kind"] == "CommonBranch");
  const auto idx = run(request("index-dim", Json::object(),
                               {{"chern_pairing", "1"}, {"points", Json::array({Json::array({3, 1, 1})})}}));
  CHECK(idx.status == Failed);
  CHECK(idx.json["error"]["kind"] == "NonIntegralIndex");
}

TEST_CASE("truncation option") {
  const Json req = request("local-int", Json::object(), {{"germs", Json::array({"(t^3, t^5)", "(t^3, 2*t^5)"})}});
  CHECK(run(req, {10, false}).status == Failed);
  CHECK(run(req, {16, false}).json["result"]["local_intersection"] == "15");
  CHECK(parse_truncation("12") == 12);
  CHECK_THROWS(parse_truncation("x"));
  CHECK_THROWS(parse_truncation("0"));
}

TEST_CASE("batch") {
  const std::string text = R"([
  {"command": "delta", "payload": {"m": 5, "b": 3, "c": 2}},
  {"command": "delta", "payload": {"m": 4, "b": 2, "c": 1}},
  {"command": "pairing", "space": {"wps": [2, 4, 5]}, "payload": {"degrees": [1, 1]}}
])";
  // The batch status is the worst entry status: failed outranks invalid.
  const auto r = batch(text);
  CHECK(r.status == Failed);
  REQUIRE(r.json["reports"].size() == 3);
  CHECK(r.json["reports"][0]["result"]["delta"] == "4");
  CHECK(r.json["reports"][1]["status"] == "failed");
  CHECK(r.json["reports"][2]["status"] == "invalid");
  CHECK(dump(batch(text).json) == dump(r.json));
  CHECK(batch("[]").status == Ok);
  CHECK(batch(R"({"requests": []})").status == Ok);
  const auto broken = batch("[\n  {\"command\": }\n]");
  CHECK(broken.status == Invalid);
  CHECK(broken.json["error"]["line"] == "2");
  CHECK(batch(R"({"other": []})").status == Invalid);
}

TEST_CASE("every command is listed") {
  CHECK(command_names().size() == 11);
  for (const auto& name : command_names()) CHECK(name != "batch");
}
