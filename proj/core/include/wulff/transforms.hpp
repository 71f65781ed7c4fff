#ifndef WULFF_TRANSFORMS_HPP
#define WULFF_TRANSFORMS_HPP

#include <span>

#include "wulff/body.hpp"

namespace wulff {

/// The dual cone has a nonzero element, i.e. W° is nonempty.
bool polar_admissible(const SphericalBody& body);

/// W° = ∩_{P ∈ W} H(P), recomputed by dual-cone conversion. Throws
/// kPolarEmpty when the dual cone is {0}.
SphericalBody polar(const SphericalBody& body);

/// polar(body), restricted to Wulff shapes relative to p. Throws
/// kNotAWulffShape when body is not one; the result is checked to be a
/// Wulff shape relative to p as well.
SphericalBody dual_wulff(const SphericalBody& body, const UnitPoint& p);

/// Spherical convex hull of hemispherical points; throws kNotHemispherical.
SphericalBody spherical_hull(std::span<const UnitPoint> points);

/// polar(polar(body)).
SphericalBody double_polar(const SphericalBody& body);

/// For a ⊂ b, whether polar(b) ⊂ polar(a). Throws kPrecondition when a is not
/// contained in b and kPolarEmpty when either polar is empty.
bool polar_antitone_check(const SphericalBody& a, const SphericalBody& b);

/// Largest containment violation of a generator of polar(b) in polar(a);
/// zero up to rounding whenever a ⊂ b.
double antitone_defect(const SphericalBody& a, const SphericalBody& b);

}  // namespace wulff

#endif  // WULFF_TRANSFORMS_HPP
