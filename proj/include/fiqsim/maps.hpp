// Unit-interval map catalog with exact rational step semantics and
// conservative exact interval images for the piecewise-monotone branches.
#pragma once

#include "fiqsim/numeric.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fiqsim {

class MapSpec {
public:
    enum class Kind { doubling, tent, logistic4, baker2d, rotation };

    static MapSpec doubling() { return MapSpec(Kind::doubling); }
    static MapSpec tent() { return MapSpec(Kind::tent); }
    static MapSpec logistic4() { return MapSpec(Kind::logistic4); }
    static MapSpec baker2d() { return MapSpec(Kind::baker2d); }
    static MapSpec rotation(Rational angle);

    // "doubling", "tent", "logistic4", "baker2d", "rotation(1/4)"
    static MapSpec from_name(const std::string& name);
    std::string name() const;

    Kind kind() const { return kind_; }
    const Rational& angle() const { return angle_; }
    bool two_dimensional() const { return kind_ == Kind::baker2d; }

private:
    explicit MapSpec(Kind kind, Rational angle = Rational(0)) : kind_(kind), angle_(std::move(angle)) {}

    Kind kind_;
    Rational angle_;
};

// Exact image of a point in [0,1]. The endpoint 1 follows the closure of the
// branch it terminates (doubling fixes it, tent/logistic send it to 0); the
// logistic map reaches 1 only at x = 1/2 and 1 then iterates to 0.
Rational step_exact(const MapSpec& map, const Rational& x);

// Baker's map on the unit square: (x, y) -> (2x mod 1, (y + floor(2x)) / 2).
std::pair<Rational, Rational> step_exact_pair(const MapSpec& map, const Rational& x, const Rational& y);

// Exact hull of the map image over a sub-interval of [0,1]. Conservative: the
// image of every expansion-consistent value lies inside. At a discontinuous
// breakpoint c, a piece that degenerates to the hull's low end {c} belongs to
// the right branch (0-tail expansion) and to the left branch at the high end
// (1-tail expansion); degenerate pieces on the wrong side are dropped.
// For baker2d this is the image of the expanding x coordinate.
RatInterval image_hull(const MapSpec& map, const RatInterval& in);

}  // namespace fiqsim
