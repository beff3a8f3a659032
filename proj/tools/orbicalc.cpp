// orbicalc: exact orbifold invariants from the command line.
//
// Every subcommand builds one request document and hands it to the same
// dispatcher that batch files use, so `orbicalc sw-dim --wps 2 3 5 --degree 2`
// and a batch entry {"command": "sw-dim", "space": {"wps": [2, 3, 5]},
// "payload": {"degree": 2}} produce identical reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "orbicalc/cli.hpp"
#include "orbicalc/errors.hpp"

namespace {

using orbicalc::cli::Json;

struct Inputs {
  std::vector<std::string> wps;
  std::string input_file;
  std::string payload_text;
  std::string truncation;
  std::string degree;
  std::vector<std::string> degrees;
  std::string self_intersection;
  std::string chern_pairing;
  std::string multiplicity;
  std::string preset;
  std::vector<std::string> coefficients;
  std::vector<std::string> germs;
  std::vector<std::string> orders;
  std::string chern;
  std::vector<std::string> points;
  std::string m, b, c;
  std::string q_max, p_max;
  std::string n;
  std::string batch_path;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw orbicalc::ValidationError("cannot read '" + path + "'", "--input");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw orbicalc::ValidationError(path + ": " + e.what(), "--input");
  }
}

void merge(Json& into, const Json& from, const std::string& what) {
  if (!from.is_object()) throw orbicalc::ValidationError(what + " must be a JSON object", what);
  for (const auto& [k, v] : from.items()) into[k] = v;
}

Json build_request(const std::string& command, const Inputs& in) {
  Json space = Json::object();
  Json payload = Json::object();
  if (!in.input_file.empty()) {
    const Json doc = read_json_file(in.input_file);
    if (!doc.is_object()) throw orbicalc::ValidationError("input file must hold a JSON object", "--input");
    for (const auto& [k, v] : doc.items()) {
      if (k == "space") {
        merge(space, v, "/space");
      } else if (k == "payload") {
        merge(payload, v, "/payload");
      } else {
        throw orbicalc::ValidationError("input file may only hold 'space' and 'payload'", "/" + k);
      }
    }
  }
  if (!in.payload_text.empty()) {
    try {
      merge(payload, Json::parse(in.payload_text), "--payload");
    } catch (const Json::parse_error& e) {
      throw orbicalc::ValidationError(std::string("--payload: ") + e.what(), "--payload");
    }
  }
  if (!in.wps.empty()) space["wps"] = in.wps;
  auto set = [&](const char* key, const std::string& v) {
    if (!v.empty()) payload[key] = v;
  };
  auto set_list = [&](const char* key, const std::vector<std::string>& v) {
    if (!v.empty()) payload[key] = v;
  };
  set("truncation", in.truncation);
  set("degree", in.degree);
  set_list("degrees", in.degrees);
  set("preset", in.preset);
  set_list("orders", in.orders);
  set("q_max", in.q_max);
  set("p_max", in.p_max);
  set("n", in.n);
  set("m", in.m);
  set("b", in.b);
  set("c", in.c);
  if (command == "intersection-check") {
    set_list("c", in.coefficients);
  } else if (!in.coefficients.empty()) {
    payload["c"] = in.coefficients.front();
  }
  if (command == "virtual-genus") {
    set("self_intersection", in.self_intersection);
    set("chern_pairing", in.chern_pairing);
    set("multiplicity", in.multiplicity);
  }
  if (command == "index-dim") {
    set("chern_pairing", in.chern);
    if (!in.points.empty()) {
      if (in.points.size() % 3 != 0) throw orbicalc::ValidationError("--point takes three values", "--point");
      Json pts = Json::array();
      for (std::size_t i = 0; i < in.points.size(); i += 3) {
        pts.push_back({in.points[i], in.points[i + 1], in.points[i + 2]});
      }
      payload["points"] = pts;
    }
  }
  if (command == "local-int") {
    set_list("germs", in.germs);
  } else if (command == "self-int" && !in.germs.empty()) {
    if (in.germs.size() != 1) throw orbicalc::ValidationError("self-int takes one germ", "germ");
    payload["germ"] = in.germs.front();
  }
  return {{"command", command}, {"space", space}, {"payload", payload}};
}

int emit(const orbicalc::cli::Report& report) {
  std::cout << orbicalc::cli::dump(report.json);
  return report.status;
}

int emit_error(const orbicalc::Error& e) {
  Json err{{"kind", e.kind()}, {"message", e.what()}};
  if (const auto* v = dynamic_cast<const orbicalc::ValidationError*>(&e); v && !v->field().empty()) {
    err["field"] = v->field();
  }
  return emit({Json{{"status", e.exit_status() == 2 ? "invalid" : "failed"}, {"error", err}}, e.exit_status()});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of 4-orbifolds with isolated cyclic singularities"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  bool json_output = true;
  bool trace = false;
  std::string file;
  app.add_flag("--json", json_output, "JSON output (the default and only format)");
  app.add_flag("--trace", trace, "Include full derivation traces");
  app.add_option("--file", file, "Run a batch file (JSON array of requests)");

  Inputs in;
  std::vector<std::pair<std::string, CLI::App*>> commands;
  auto add = [&](const std::string& name, const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--input", in.input_file, "JSON file with 'space' and/or 'payload' objects");
    sub->add_option("--payload", in.payload_text, "Payload fields as an inline JSON object");
    commands.emplace_back(name, sub);
    return sub;
  };
  auto wps = [&](CLI::App* sub) { sub->add_option("--wps", in.wps, "Weights d1 d2 d3")->expected(3); };
  auto truncation = [&](CLI::App* sub) { sub->add_option("--truncation", in.truncation, "Germ truncation degree"); };

  auto* pairing = add("pairing", "Pairing a r / (d1 d2 d3) of two degrees");
  wps(pairing);
  pairing->add_option("--degrees", in.degrees, "Degrees a and r")->expected(2);

  auto* genus = add("virtual-genus", "Virtual genus of a curve");
  wps(genus);
  genus->add_option("--degree", in.degree, "Degree r on the weighted projective plane");
  genus->add_option("--self-intersection", in.self_intersection, "C.C for a general orbifold");
  genus->add_option("--chern-pairing", in.chern_pairing, "c1(TX).C for a general orbifold");
  genus->add_option("--multiplicity", in.multiplicity, "m_C");

  auto* adjunction = add("adjunction-check", "Both sides of the adjunction formula");
  wps(adjunction);
  adjunction->add_option("--preset", in.preset, "coordinate-line or pencil");
  adjunction->add_option("--c", in.coefficients, "Pencil parameter")->expected(1);
  truncation(adjunction);

  auto* intersection = add("intersection-check", "Pairing against summed local contributions");
  wps(intersection);
  intersection->add_option("--preset", in.preset, "pencil");
  intersection->add_option("--c", in.coefficients, "Two pencil parameters")->expected(2);
  intersection->add_option("--degrees", in.degrees, "Degrees of the two curves")->expected(2);
  truncation(intersection);

  auto* local = add("local-int", "Local intersection number of two branch germs");
  local->add_option("germs", in.germs, "Two germs such as \"(t^3, t^5)\"")->expected(2);
  truncation(local);

  auto* self = add("self-int", "Local self-intersection of a branch germ");
  self->add_option("germ", in.germs, "A germ such as \"(t^2, t^3)\"")->expected(0, 1);
  self->add_option("--orders", in.orders, "Coprime leading orders l1 l2")->expected(2);

  auto* index = add("index-dim", "Moduli dimension from the orbifold index");
  index->add_option("--chern", in.chern, "c1(TX).f_*[Sigma]");
  index->add_option("--point", in.points, "Orbifold point: order weight1 weight2 (repeatable)")
      ->expected(3)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  auto* sw = add("sw-dim", "Seiberg-Witten moduli dimension d(E)");
  wps(sw);
  sw->add_option("--degree", in.degree, "Bundle degree e");

  auto* delta = add("delta", "delta with c - b delta = 0 mod m");
  delta->add_option("--m", in.m, "Group order");
  delta->add_option("--b", in.b, "Weight prime to m");
  delta->add_option("--c", in.c, "Fiber weight");

  auto* analyze = add("analyze", "Case analysis for the degree-d1 and degree-d2 bundles");
  wps(analyze);
  analyze->add_option("--q-max", in.q_max, "Largest denominator in the degree scan");
  analyze->add_option("--p-max", in.p_max, "Largest numerator in the degree scan");

  auto* example = add("example111", "Normal weight pairs on an invariant (-2)-sphere");
  example->add_option("n,--n", in.n, "Group order n >= 2");

  auto* batch = app.add_subcommand("batch", "Run a batch file");
  batch->add_option("file", in.batch_path, "JSON array of requests")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  orbicalc::cli::RunOptions options;
  options.trace = trace;
  try {
    if (const char* env = std::getenv("ORBICALC_TRUNCATION"); env != nullptr && *env != '\0') {
      options.truncation = orbicalc::cli::parse_truncation(env);
    }
    if (!file.empty()) return emit(orbicalc::cli::batch_file(file, options));
    if (batch->parsed()) return emit(orbicalc::cli::batch_file(in.batch_path, options));
    for (const auto& [name, sub] : commands) {
      if (sub->parsed()) return emit(orbicalc::cli::run(build_request(name, in), options));
    }
  } catch (const orbicalc::Error& e) {
    return emit_error(e);
  }
  std::cerr << app.help();
  return 2;
}
