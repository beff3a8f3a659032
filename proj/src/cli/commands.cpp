#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "fields.hpp"
#include "inputs.hpp"
#include "orbicalc/cli.hpp"
#include "orbicalc/curves.hpp"
#include "orbicalc/deduce.hpp"
#include "orbicalc/errors.hpp"
#include "orbicalc/germs.hpp"
#include "orbicalc/moduli.hpp"

namespace orbicalc::cli {

using namespace detail;

namespace {

std::string q(const Rational& r) { return r.str(); }
std::string z(const Integer& v) { return v.get_str(); }
std::string u(unsigned v) { return std::to_string(v); }

Json point_list(const std::vector<int>& points) {
  Json out = Json::array();
  for (int p : points) out.push_back("p" + std::to_string(p));
  return out;
}

Json weights_json(const orbifold::WeightedProjectivePlane& x) {
  return Json::array({u(x.weight(1)), u(x.weight(2)), u(x.weight(3))});
}

struct Context {
  Fields& space;
  Fields& payload;
  const RunOptions& options;
  std::vector<std::string> rules;

  germs::IntersectionOptions intersection() {
    germs::IntersectionOptions o;
    o.truncation = payload.optional_count("truncation", 1);
    if (!o.truncation) o.truncation = options.truncation;
    return o;
  }

  // Payload and space are fully read: reject leftovers before computing.
  void validated() const {
    space.finish();
    payload.finish();
  }
};

Json ledger_json(const std::vector<curves::LedgerEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    out.push_back({{"kind", e.kind},
                   {"points", e.points},
                   {"ambient", e.ambient},
                   {"value", q(e.contribution.value)},
                   {"exact", e.contribution.exact}});
  }
  return out;
}

Json adjunction_json(const curves::AdjunctionReport& r) {
  return {{"virtual_genus", q(r.virtual_genus)},
          {"orbifold_genus", q(r.orbifold_genus)},
          {"contributions", q(r.contributions)},
          {"rhs", q(r.rhs)},
          {"verdict", curves::to_string(r.verdict)},
          {"equal", r.verdict == curves::Verdict::Equal},
          {"bound_holds", r.bound_holds},
          {"suborbifold", curves::is_suborbifold(r)},
          {"ledger", ledger_json(r.entries)}};
}

Json pairing(Context& c) {
  const auto x = parse_wps(c.space);
  const Json& list = expect_array(c.payload.get("degrees"), c.payload.at("degrees"));
  if (list.size() != 2) throw ValidationError("expected two degrees", c.payload.at("degrees"));
  const Rational a = to_rational(list[0], c.payload.at("degrees") + "/0");
  const Rational r = to_rational(list[1], c.payload.at("degrees") + "/1");
  c.validated();
  c.rules = {"poincare-dual-pairing"};
  return {{"wps", weights_json(x)},
          {"degrees", {q(a), q(r)}},
          {"volume", z(x.volume())},
          {"pairing", q(curves::pairing(a, curves::CurveClass::make(x, r)))}};
}

Json virtual_genus(Context& c) {
  const auto x = parse_optional_wps(c.space);
  const auto numbers = parse_curve(c.payload, x);
  c.space.finish();
  c.rules = {"virtual-genus"};
  return {{"self_intersection", q(numbers.self_intersection)},
          {"chern_pairing", q(numbers.chern_pairing)},
          {"multiplicity", u(numbers.multiplicity)},
          {"virtual_genus", q(curves::virtual_genus(numbers))}};
}

Json adjunction_check(Context& c) {
  const auto x = parse_optional_wps(c.space);
  curves::CurvePresentation p{{}, orbifold::OrbifoldRiemannSurface::sphere(), {}, {}};
  if (auto preset = c.payload.optional_string("preset")) {
    if (!x) throw ValidationError("presets need a weighted projective plane space", c.space.at("wps"));
    if (*preset == "coordinate-line") {
      p = curves::coordinate_line(*x);
    } else if (*preset == "pencil") {
      const auto coefficient = c.payload.optional_string("c").value_or("1");
      p = at_field(c.payload.at("c"), [&] { return curves::pencil_curve(*x, germs::parse_coefficient(coefficient)); });
    } else {
      throw ValidationError("unknown preset '" + *preset + "' (coordinate-line, pencil)", c.payload.at("preset"));
    }
  } else {
    p = parse_presentation(c.payload, x);
  }
  const auto opts = c.intersection();
  c.validated();
  c.rules = {"virtual-genus", "orbifold-genus", "adjunction"};
  return adjunction_json(curves::adjunction_check(p, opts));
}

Json intersection_check(Context& c) {
  const auto x = parse_optional_wps(c.space);
  Rational pairing;
  std::vector<curves::IntersectionPoint> points;
  if (auto preset = c.payload.optional_string("preset")) {
    if (*preset != "pencil") throw ValidationError("unknown preset '" + *preset + "' (pencil)", c.payload.at("preset"));
    if (!x) throw ValidationError("presets need a weighted projective plane space", c.space.at("wps"));
    std::vector<std::string> coefficients{"1", "2"};
    if (const Json* cs = c.payload.find("c")) {
      const Json& a = expect_array(*cs, c.payload.at("c"));
      if (a.size() != 2) throw ValidationError("expected two pencil parameters", c.payload.at("c"));
      coefficients = {to_string(a[0], c.payload.at("c") + "/0"), to_string(a[1], c.payload.at("c") + "/1")};
    }
    const auto c1 = at_field(c.payload.at("c") + "/0", [&] { return germs::parse_coefficient(coefficients[0]); });
    const auto c2 = at_field(c.payload.at("c") + "/1", [&] { return germs::parse_coefficient(coefficients[1]); });
    const Rational degree(Integer(x->weight(2)) * x->weight(3));
    pairing = curves::intersection(curves::CurveClass::make(*x, degree), curves::CurveClass::make(*x, degree));
    points.push_back(at_field(c.payload.path(), [&] { return curves::pencil_intersection_point(*x, c1, c2); }));
  } else {
    if (auto given = c.payload.optional_rational("pairing")) {
      pairing = *given;
    } else {
      if (!x) throw ValidationError("give 'pairing' or a wps space with 'degrees'", c.payload.at("pairing"));
      const Json& list = expect_array(c.payload.get("degrees"), c.payload.at("degrees"));
      if (list.size() != 2) throw ValidationError("expected two degrees", c.payload.at("degrees"));
      const Rational r1 = to_rational(list[0], c.payload.at("degrees") + "/0");
      const Rational r2 = to_rational(list[1], c.payload.at("degrees") + "/1");
      pairing = curves::intersection(curves::CurveClass::make(*x, r1), curves::CurveClass::make(*x, r2));
    }
    const Json& list = expect_array(c.payload.get("points"), c.payload.at("points"));
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = c.payload.at("points") + "/" + std::to_string(i);
      Fields f(list[i], path);
      auto first = parse_marked_point(f.get("first"), f.at("first"), x);
      auto second = parse_marked_point(f.get("second"), f.at("second"), x);
      f.finish();
      points.push_back({std::move(first), std::move(second)});
    }
  }
  const auto opts = c.intersection();
  c.validated();
  c.rules = {"intersection-formula"};
  const auto r = curves::intersection_check(pairing, points, opts);
  return {{"pairing", q(r.pairing)},
          {"total", q(r.total)},
          {"verdict", curves::to_string(r.verdict)},
          {"equal", r.verdict == curves::Verdict::Equal},
          {"ledger", ledger_json(r.entries)}};
}

Json orders_json(const germs::LeadingOrders& o) {
  auto one = [](const germs::LeadingOrder& l) { return l ? u(*l) : std::string("infinity"); };
  return Json::array({one(o.first), one(o.second)});
}

Json local_int(Context& c) {
  const Json& list = expect_array(c.payload.get("germs"), c.payload.at("germs"));
  if (list.size() != 2) throw ValidationError("expected two germs", c.payload.at("germs"));
  const auto g1 = parse_germ(list[0], c.payload.at("germs") + "/0");
  const auto g2 = parse_germ(list[1], c.payload.at("germs") + "/1");
  const auto opts = c.intersection();
  c.validated();
  c.rules = {"resultant-order", "leading-order-bound"};
  const unsigned truncation = opts.truncation.value_or(germs::default_truncation(g1, g2));
  const auto value = germs::local_intersection(g1, g2, opts);
  const auto bound = germs::intersection_lower_bound(g1.leading_orders(), g2.leading_orders());
  Json out{{"germs", {g1.str(), g2.str()}},
           {"local_intersection", z(value)},
           {"lower_bound", bound ? z(*bound) : std::string("infinity")},
           {"leading_orders", Json::array({orders_json(g1.leading_orders()), orders_json(g2.leading_orders())})}};
  if (c.options.trace) out["truncation"] = u(truncation);
  return out;
}

Json self_int(Context& c) {
  if (const Json* o = c.payload.find("orders")) {
    const Json& a = expect_array(*o, c.payload.at("orders"));
    if (a.size() != 2) throw ValidationError("expected two leading orders", c.payload.at("orders"));
    const unsigned l1 = to_count(a[0], c.payload.at("orders") + "/0", 1);
    const unsigned l2 = to_count(a[1], c.payload.at("orders") + "/1", 1);
    c.validated();
    c.rules = {"semigroup-gaps"};
    return {{"orders", {u(l1), u(l2)}},
            {"self_intersection", z(germs::self_intersection_monomial(l1, l2))},
            {"exact", true}};
  }
  const auto g = parse_germ(c.payload.get("germ"), c.payload.at("germ"));
  c.validated();
  c.rules = {"semigroup-gaps", "leading-order-bound"};
  const auto s = germs::self_intersection(g);
  return {{"germ", g.str()},
          {"self_intersection", z(s.value)},
          {"exact", s.exact},
          {"lower_bound", q(germs::self_intersection_lower_bound(g.leading_orders()))}};
}

Json index_dim(Context& c) {
  moduli::IndexInput input;
  input.chern_pairing = c.payload.rational("chern_pairing");
  if (const Json* pts = c.payload.find("points")) {
    const std::string path = c.payload.at("points");
    expect_array(*pts, path);
    for (std::size_t i = 0; i < pts->size(); ++i) {
      const std::string at = path + "/" + std::to_string(i);
      const Json& t = expect_array((*pts)[i], at);
      if (t.size() != 3) throw ValidationError("expected [order, weight1, weight2]", at);
      input.points.push_back({to_count(t[0], at + "/0", 1), to_count(t[1], at + "/1"), to_count(t[2], at + "/2")});
    }
  }
  c.validated();
  c.rules = {"orbifold-index"};
  const auto d = moduli::index_dimension(input);
  return {{"d_tilde", z(d.d_tilde)},
          {"dim_unreduced", z(d.unreduced_dimension)},
          {"dim", z(d.dimension)},
          {"correction", q(d.correction)},
          {"k", u(static_cast<unsigned>(input.points.size()))}};
}

Json sw_dim(Context& c) {
  const auto x = parse_optional_wps(c.space);
  moduli::SWInput input;
  if (x) {
    const Integer e = c.payload.integer("degree");
    input = moduli::SWInput::weighted_projective(*x, e);
  } else {
    input = parse_general_sw(c.space, c.payload);
  }
  c.validated();
  c.rules = {"sw-dimension", "character-sum"};
  const auto d = moduli::sw_dimension(input);
  Json I = Json::array();
  Json points = Json::array();
  for (const auto& p : d.points) {
    I.push_back(q(p.value));
    Json entry{{"label", p.label},
               {"order", u(p.order)},
               {"tangent_weights", {u(p.tangent_weights[0]), u(p.tangent_weights[1])}},
               {"fiber_weight", u(p.fiber_weight)},
               {"I", q(p.value)}};
    if (p.closed) {
      entry["closed_form"] = {{"value", q(p.closed->value)},
                              {"delta", z(p.closed->delta)},
                              {"aligned_weight", p.closed->aligned_weight == 0 ? "first" : "second"}};
    }
    points.push_back(std::move(entry));
  }
  Json out{{"d", q(d.value)},
           {"c1_squared", q(d.c1_squared)},
           {"c1_dot_canonical", q(d.c1_dot_canonical)},
           {"I", std::move(I)},
           {"points", std::move(points)},
           {"warnings", d.warnings}};
  return out;
}

Json delta(Context& c) {
  const unsigned m = c.payload.count("m", 1);
  const Integer b = c.payload.integer("b");
  const Integer cc = c.payload.integer("c");
  c.validated();
  c.rules = {"delta-congruence"};
  if (!b.fits_slong_p() || !cc.fits_slong_p()) throw ValidationError("weights out of range", c.payload.path());
  return {{"m", u(m)}, {"b", z(b)}, {"c", z(cc)}, {"delta", z(moduli::delta_solve(m, b.get_si(), cc.get_si()))}};
}

Json trace_json(const deduce::Trace& trace, bool full) {
  Json out = Json::array();
  for (const auto& f : trace) {
    // Without --trace, closed component cases are summarized by count.
    if (!full && f.outcome == "closed" && (f.rule == "intersection-bound" || f.rule == "common-divisor")) continue;
    Json values = Json::object();
    for (const auto& [k, v] : f.values) values[k] = v;
    out.push_back({{"rule", f.rule}, {"subject", f.subject}, {"outcome", f.outcome}, {"values", std::move(values)}});
  }
  return out;
}

Json analyze(Context& c) {
  const auto x = parse_wps(c.space);
  deduce::AnalysisOptions opts;
  opts.scan_q_max = c.payload.optional_count("q_max", 2).value_or(opts.scan_q_max);
  opts.scan_p_max = c.payload.optional_count("p_max", 1).value_or(opts.scan_p_max);
  c.validated();
  const auto a = deduce::analyze_canonical_pair(x, opts);
  std::map<std::string, unsigned> closed;
  for (const auto& f : a.trace) {
    if (std::find(c.rules.begin(), c.rules.end(), f.rule) == c.rules.end()) c.rules.push_back(f.rule);
    if (f.outcome == "closed") ++closed[f.rule];
  }
  Json closed_json = Json::object();
  for (const auto& [rule, n] : closed) closed_json[rule] = u(n);
  Json survivors = Json::array();
  for (const auto& s : a.survivors) {
    Json components = Json::array();
    for (const auto& comp : s.components) components.push_back({{"n", z(comp.multiplicity)}, {"degree", z(comp.degree)}});
    std::vector<int> through;
    for (const auto& [p, idx] : s.coverage) through.push_back(p);
    std::vector<int> avoids;
    for (int p = 1; p <= 3; ++p) {
      if (!s.coverage.contains(p)) avoids.push_back(p);
    }
    survivors.push_back({{"degree", z(s.target_degree)},
                         {"components", std::move(components)},
                         {"through", point_list(through)},
                         {"avoids", point_list(avoids)}});
  }
  return {{"wps", weights_json(x)},
          {"required_points", {{"E1", point_list(a.required_first)}, {"E2", point_list(a.required_second)}}},
          {"degree_integrality",
           {{"q_max", u(a.scan.q_max)},
            {"p_max", u(a.scan.p_max)},
            {"candidates", z(a.scan.candidates)},
            {"excluded", z(a.scan.excluded)},
            {"all_excluded", a.scan.survivors.empty()}}},
          {"triple_point",
           {{"I", q(a.triple_point.I)},
            {"upper_bound", q(a.triple_point.upper_bound)},
            {"genus_margin", q(a.triple_point.genus_margin)},
            {"threshold_ok", a.triple_point.threshold_ok},
            {"infeasible", a.triple_point.infeasible}}},
          {"uniqueness",
           {{"pairing", q(a.uniqueness.pairing)},
            {"threshold", q(a.uniqueness.threshold)},
            {"unique", a.uniqueness.unique}}},
          {"closed_cases", std::move(closed_json)},
          {"survivors", std::move(survivors)},
          {"certification", adjunction_json(a.certification)},
          {"trace", trace_json(a.trace, c.options.trace)}};
}

Json example111(Context& c) {
  const unsigned n = c.payload.count("n", 2);
  c.validated();
  c.rules = {"orbifold-index"};
  Json pairs = Json::array();
  for (const auto& [m1, m2] : moduli::fixed_point_weight_pairs(n)) pairs.push_back({u(m1), u(m2)});
  return {{"n", u(n)}, {"pairs", std::move(pairs)}};
}

using Handler = std::function<Json(Context&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"pairing", pairing},
      {"virtual-genus", virtual_genus},
      {"adjunction-check", adjunction_check},
      {"intersection-check", intersection_check},
      {"local-int", local_int},
      {"self-int", self_int},
      {"index-dim", index_dim},
      {"sw-dim", sw_dim},
      {"delta", delta},
      {"analyze", analyze},
      {"example111", example111},
  };
  return table;
}

Report error_report(const std::string& command, const Error& e) {
  Json err{{"kind", e.kind()}, {"message", e.what()}};
  if (const auto* v = dynamic_cast<const ValidationError*>(&e); v && !v->field().empty()) err["field"] = v->field();
  Json doc{{"command", command}, {"status", e.exit_status() == Invalid ? "invalid" : "failed"}, {"error", std::move(err)}};
  return {std::move(doc), e.exit_status()};
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Request Request::from_json(const Json& doc) {
  Fields f(doc, "");
  Request r;
  r.command = f.string("command");
  if (const Json* s = f.find("space")) {
    if (!s->is_object()) throw ValidationError("expected an object", "/space");
    r.space = *s;
  }
  if (const Json* p = f.find("payload")) {
    if (!p->is_object()) throw ValidationError("expected an object", "/payload");
    r.payload = *p;
  }
  f.finish();
  return r;
}

Json Request::to_json() const { return {{"command", command}, {"space", space}, {"payload", payload}}; }

Report run(const Request& request, const RunOptions& options) {
  const auto& table = handlers();
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == request.command; });
  try {
    if (it == table.end()) throw ValidationError("unknown command '" + request.command + "'", "/command");
    Fields space(request.space, "/space");
    Fields payload(request.payload, "/payload");
    Context context{space, payload, options, {}};
    Json result = it->second(context);
    Json rules = context.rules;
    Json doc{{"command", request.command}, {"status", "ok"}, {"result", std::move(result)}, {"rules", std::move(rules)}};
    return {std::move(doc), Ok};
  } catch (const Error& e) {
    return error_report(request.command, e);
  }
}

Report run(const Json& request, const RunOptions& options) {
  try {
    return run(Request::from_json(request), options);
  } catch (const Error& e) {
    std::string command;
    if (request.is_object() && request.contains("command") && request["command"].is_string()) {
      command = request["command"].get<std::string>();
    }
    return error_report(command, e);
  }
}

Report batch(const std::string& text, const RunOptions& options) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    Json err{{"kind", "ValidationError"},
             {"message", "batch file is not valid JSON"},
             {"line", std::to_string(line)},
             {"column", std::to_string(column)}};
    return {Json{{"status", "invalid"}, {"error", std::move(err)}, {"reports", Json::array()}}, Invalid};
  }
  const Json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("requests") || doc.size() != 1) {
      ValidationError e("a batch object must have exactly one key, 'requests'", "/requests");
      return {Json{{"status", "invalid"}, {"error", {{"kind", e.kind()}, {"message", e.what()}, {"field", e.field()}}},
                   {"reports", Json::array()}},
              Invalid};
    }
    list = &doc["requests"];
  }
  if (!list->is_array()) {
    return {Json{{"status", "invalid"},
                 {"error", {{"kind", "ValidationError"}, {"message", "a batch must be a JSON array of requests"}}},
                 {"reports", Json::array()}},
            Invalid};
  }
  Report out{Json{{"status", "ok"}, {"reports", Json::array()}}, Ok};
  for (const auto& entry : *list) {
    Report r = run(entry, options);
    out.status = std::max(out.status, r.status);
    out.json["reports"].push_back(std::move(r.json));
  }
  out.json["status"] = out.status == Ok ? "ok" : (out.status == Invalid ? "invalid" : "failed");
  return out;
}

Report batch_file(const std::string& path, const RunOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return {Json{{"status", "invalid"},
                 {"error", {{"kind", "ValidationError"}, {"message", "cannot read batch file '" + path + "'"}}},
                 {"reports", Json::array()}},
            Invalid};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return batch(buffer.str(), options);
}

unsigned parse_truncation(const std::string& text) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || v == 0 || v > 1000000 || text[0] == '-' || text[0] == '+') {
    throw ValidationError("truncation must be a positive integer, got '" + text + "'", "ORBICALC_TRUNCATION");
  }
  return static_cast<unsigned>(v);
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace orbicalc::cli
