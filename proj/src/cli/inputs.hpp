#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fields.hpp"
#include "orbicalc/errors.hpp"
#include "orbicalc/curves.hpp"
#include "orbicalc/moduli.hpp"
#include "orbicalc/orbifold.hpp"

namespace orbicalc::cli::detail {

/// Runs `f`, attaching `path` to any ValidationError raised without one.
template <class F>
auto at_field(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    if (!e.field().empty()) throw;
    throw ValidationError(e.what(), path);
  }
}

orbifold::WeightedProjectivePlane parse_wps(Fields& space);
std::optional<orbifold::WeightedProjectivePlane> parse_optional_wps(Fields& space);

germs::BranchGerm parse_germ(const Json& value, const std::string& path);

curves::MarkedPointData parse_marked_point(const Json& value, const std::string& path,
                                           const std::optional<orbifold::WeightedProjectivePlane>& x);

/// Explicit presentation: curve, domain, marked_points, identified_pairs.
curves::CurvePresentation parse_presentation(Fields& payload,
                                             const std::optional<orbifold::WeightedProjectivePlane>& x);

curves::CurveNumbers parse_curve(Fields& curve, const std::optional<orbifold::WeightedProjectivePlane>& x);

moduli::SWInput parse_general_sw(Fields& space, Fields& payload);

}  // namespace orbicalc::cli::detail
