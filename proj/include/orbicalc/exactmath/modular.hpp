#pragma once

#include "orbicalc/exactmath/rational.hpp"

namespace orbicalc::exactmath {

/// Unique x in [0, m-1] with b*x = 1 (mod m). Throws NotInvertible when
/// gcd(b, m) != 1 and ValidationError when m < 1.
Integer mod_inverse(const Integer& b, const Integer& m);

/// Least nonnegative residue of a mod m, m > 0.
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace orbicalc::exactmath
