#include "inputs.hpp"

#include "orbicalc/errors.hpp"
#include "orbicalc/exactmath/modular.hpp"

namespace orbicalc::cli::detail {

using orbifold::CyclicSingularPoint;
using orbifold::WeightedProjectivePlane;

orbifold::WeightedProjectivePlane parse_wps(Fields& space) {
  auto x = parse_optional_wps(space);
  if (!x) throw ValidationError("this command needs a weighted projective plane", space.at("wps"));
  return *x;
}

std::optional<WeightedProjectivePlane> parse_optional_wps(Fields& space) {
  const Json* w = space.find("wps");
  if (w == nullptr) return std::nullopt;
  const std::string path = space.at("wps");
  const Json& a = expect_array(*w, path);
  if (a.size() != 3) throw ValidationError("expected three weights", path);
  unsigned d[3];
  for (std::size_t i = 0; i < 3; ++i) d[i] = to_count(a[i], path + "/" + std::to_string(i), 1);
  return at_field(path, [&] { return WeightedProjectivePlane(d[0], d[1], d[2]); });
}

germs::BranchGerm parse_germ(const Json& value, const std::string& path) {
  const std::string text = to_string(value, path);
  return at_field(path, [&] { return germs::BranchGerm::parse(text); });
}

namespace {

CyclicSingularPoint parse_point(const Json& value, const std::string& path,
                                const std::optional<WeightedProjectivePlane>& x) {
  if (value.is_string()) {
    const std::string label = value.get<std::string>();
    if (label == "smooth") return CyclicSingularPoint{"smooth", 1, {0, 0}};
    if (x && label.size() == 2 && label[0] == 'p' && label[1] >= '1' && label[1] <= '3') {
      return x->singular_point(label[1] - '0');
    }
    throw ValidationError("unknown ambient point '" + label + "' (use \"smooth\", p1..p3 with a wps space, or an object)",
                          path);
  }
  Fields f(value, path);
  const std::string label = f.string("label");
  const unsigned order = f.count("order", 1);
  const Json& w = expect_array(f.get("weights"), f.at("weights"));
  if (w.size() != 2) throw ValidationError("expected two tangent weights", f.at("weights"));
  const long a = to_integer(w[0], f.at("weights") + "/0").get_si();
  const long b = to_integer(w[1], f.at("weights") + "/1").get_si();
  f.finish();
  return at_field(path, [&] { return CyclicSingularPoint::make(label, order, a, b); });
}

}  // namespace

curves::MarkedPointData parse_marked_point(const Json& value, const std::string& path,
                                           const std::optional<WeightedProjectivePlane>& x) {
  Fields f(value, path);
  const std::string id = f.string("id");
  const Json& point_json = f.get("point");
  const CyclicSingularPoint point = parse_point(point_json, f.at("point"), x);
  const unsigned domain_order = f.optional_count("domain_order", 1).value_or(1);
  const bool has_germ = f.has("germ");
  const bool has_branches = f.has("branches");
  if (has_germ == has_branches) throw ValidationError("give exactly one of 'germ' or 'branches'", path);
  if (has_germ) {
    const auto germ = parse_germ(f.get("germ"), f.at("germ"));
    f.finish();
    return at_field(path, [&] { return curves::MarkedPointData::from_germ(id, domain_order, point, germ); });
  }
  const Json& list = expect_array(f.get("branches"), f.at("branches"));
  std::vector<germs::BranchGerm> branches;
  for (std::size_t i = 0; i < list.size(); ++i) {
    branches.push_back(parse_germ(list[i], f.at("branches") + "/" + std::to_string(i)));
  }
  const unsigned stabilizer = f.optional_count("stabilizer_order", 1).value_or(1);
  f.finish();
  return at_field(path, [&] {
    return curves::MarkedPointData::make(id, domain_order, point.label, point.group_order, std::move(branches),
                                         stabilizer);
  });
}

curves::CurveNumbers parse_curve(Fields& curve, const std::optional<WeightedProjectivePlane>& x) {
  if (curve.has("degree")) {
    if (!x) throw ValidationError("a curve degree needs a weighted projective plane space", curve.at("degree"));
    const Rational degree = curve.rational("degree");
    curve.finish();
    return curves::numbers(curves::CurveClass::make(*x, degree));
  }
  curves::CurveNumbers n{curve.rational("self_intersection"), curve.rational("chern_pairing"),
                         curve.optional_count("multiplicity", 1).value_or(1)};
  curve.finish();
  return n;
}

curves::CurvePresentation parse_presentation(Fields& payload, const std::optional<WeightedProjectivePlane>& x) {
  Fields curve = payload.object("curve");
  const curves::CurveNumbers numbers = parse_curve(curve, x);

  Fields domain = payload.object("domain");
  const unsigned genus = domain.optional_count("genus").value_or(0);
  const unsigned regular = domain.optional_count("regular_multiplicity", 1).value_or(1);
  std::vector<unsigned> orders;
  if (const Json* o = domain.find("orbifold_orders")) {
    expect_array(*o, domain.at("orbifold_orders"));
    for (std::size_t i = 0; i < o->size(); ++i) {
      orders.push_back(to_count((*o)[i], domain.at("orbifold_orders") + "/" + std::to_string(i), 1));
    }
  }
  domain.finish();
  auto surface = at_field(domain.path(), [&] { return orbifold::OrbifoldRiemannSurface(genus, regular, orders); });

  std::vector<curves::MarkedPointData> marked;
  if (const Json* m = payload.find("marked_points")) {
    expect_array(*m, payload.at("marked_points"));
    for (std::size_t i = 0; i < m->size(); ++i) {
      marked.push_back(parse_marked_point((*m)[i], payload.at("marked_points") + "/" + std::to_string(i), x));
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (const Json* p = payload.find("identified_pairs")) {
    const std::string path = payload.at("identified_pairs");
    expect_array(*p, path);
    for (std::size_t i = 0; i < p->size(); ++i) {
      const std::string at = path + "/" + std::to_string(i);
      const Json& pair = expect_array((*p)[i], at);
      if (pair.size() != 2) throw ValidationError("expected a pair of marked point indices", at);
      pairs.emplace_back(to_count(pair[0], at + "/0"), to_count(pair[1], at + "/1"));
    }
  }
  curves::CurvePresentation presentation{numbers, std::move(surface), std::move(marked), std::move(pairs)};
  presentation.validate();
  return presentation;
}

moduli::SWInput parse_general_sw(Fields& space, Fields& payload) {
  moduli::SWInput input;
  const Json& points = expect_array(space.get("points"), space.at("points"));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string path = space.at("points") + "/" + std::to_string(i);
    Fields f(points[i], path);
    const std::string label = f.string("label");
    const unsigned order = f.count("order", 1);
    const Json& w = expect_array(f.get("weights"), f.at("weights"));
    if (w.size() != 2) throw ValidationError("expected two tangent weights", f.at("weights"));
    const long a = to_integer(w[0], f.at("weights") + "/0").get_si();
    const long b = to_integer(w[1], f.at("weights") + "/1").get_si();
    const Integer fiber = to_integer(f.get("fiber_weight"), f.at("fiber_weight"));
    const bool cyclic = f.flag("cyclic", true);
    f.finish();
    auto point = at_field(path, [&] { return CyclicSingularPoint::make(label, order, a, b); });
    const auto c = static_cast<unsigned>(exactmath::mod_floor(fiber, Integer(order)).get_ui());
    input.points.push_back({std::move(point), c, cyclic});
  }
  input.c1_squared = payload.rational("c1_squared");
  input.c1_dot_canonical = payload.rational("c1_dot_canonical");
  return input;
}

}  // namespace orbicalc::cli::detail
