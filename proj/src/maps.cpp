#include "fiqsim/maps.hpp"

#include <algorithm>
#include <optional>

namespace fiqsim {

MapSpec MapSpec::rotation(Rational angle) {
    if (angle < 0 || angle >= 1) {
        throw std::invalid_argument("rotation angle must lie in [0,1): " + rational_str(angle));
    }
    return MapSpec(Kind::rotation, std::move(angle));
}

MapSpec MapSpec::from_name(const std::string& name) {
    if (name == "doubling") return doubling();
    if (name == "tent") return tent();
    if (name == "logistic4") return logistic4();
    if (name == "baker2d") return baker2d();
    if (name.rfind("rotation(", 0) == 0 && name.back() == ')') {
        return rotation(parse_rational(name.substr(9, name.size() - 10)));
    }
    if (name == "rotation") {
        throw std::invalid_argument("rotation requires an angle, e.g. rotation(1/4)");
    }
    throw std::invalid_argument("unknown map '" + name + "'");
}

std::string MapSpec::name() const {
    switch (kind_) {
        case Kind::doubling: return "doubling";
        case Kind::tent: return "tent";
        case Kind::logistic4: return "logistic4";
        case Kind::baker2d: return "baker2d";
        case Kind::rotation: return "rotation(" + rational_str(angle_) + ")";
    }
    return "?";
}

namespace {

void check_domain(const Rational& x) {
    if (x < 0 || x > 1) {
        throw std::invalid_argument("map input outside [0,1]: " + rational_str(x));
    }
}

}  // namespace

Rational step_exact(const MapSpec& map, const Rational& x) {
    check_domain(x);
    switch (map.kind()) {
        case MapSpec::Kind::doubling:
            return x < Rational(1, 2) ? Rational(x * 2) : Rational(x * 2 - 1);
        case MapSpec::Kind::tent:
            return x <= Rational(1, 2) ? Rational(x * 2) : Rational(2 - x * 2);
        case MapSpec::Kind::logistic4:
            return 4 * x * (1 - x);
        case MapSpec::Kind::rotation: {
            Rational y = x + map.angle();
            if (y >= 1) y -= 1;
            return y;
        }
        case MapSpec::Kind::baker2d:
            throw std::invalid_argument("baker2d acts on pairs; use step_exact_pair");
    }
    throw std::logic_error("unreachable");
}

std::pair<Rational, Rational> step_exact_pair(const MapSpec& map, const Rational& x, const Rational& y) {
    if (map.kind() != MapSpec::Kind::baker2d) {
        throw std::invalid_argument("step_exact_pair only applies to baker2d");
    }
    check_domain(x);
    check_domain(y);
    if (x < Rational(1, 2)) {
        return {x * 2, y / 2};
    }
    return {x * 2 - 1, (y + 1) / 2};
}

namespace {

struct Hull {
    std::optional<RatInterval> value;

    void add(Rational a, Rational b) {
        if (a > b) std::swap(a, b);
        if (!value) {
            value = RatInterval{std::move(a), std::move(b)};
            return;
        }
        if (a < value->lo) value->lo = std::move(a);
        if (b > value->hi) value->hi = std::move(b);
    }
};

// Image over one monotone branch restricted to [pl, pu].
Rational eval_branch(MapSpec::Kind kind, const Rational& angle, bool right, const Rational& x) {
    switch (kind) {
        case MapSpec::Kind::doubling:
        case MapSpec::Kind::baker2d:
            return right ? Rational(x * 2 - 1) : Rational(x * 2);
        case MapSpec::Kind::tent:
            return right ? Rational(2 - x * 2) : Rational(x * 2);
        case MapSpec::Kind::logistic4:
            return 4 * x * (1 - x);
        case MapSpec::Kind::rotation:
            return right ? Rational(x + angle - 1) : Rational(x + angle);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

RatInterval image_hull(const MapSpec& map, const RatInterval& in) {
    if (in.lo > in.hi || in.lo < 0 || in.hi > 1) {
        throw std::invalid_argument("image_hull input must be an interval within [0,1]");
    }
    const auto kind = map.kind();
    const Rational& angle = map.angle();
    // Breakpoint between the two monotone branches; rotation(0) has none in (0,1).
    Rational c = kind == MapSpec::Kind::rotation ? 1 - angle : Rational(1, 2);

    Hull hull;
    // Left branch contributes unless its piece degenerates to the hull's low end,
    // whose attaining expansion (0-tail) belongs to the right branch.
    if (in.lo < c) {
        Rational pl = in.lo;
        Rational pu = std::min(in.hi, c, std::less<Rational>());
        hull.add(eval_branch(kind, angle, false, pl), eval_branch(kind, angle, false, pu));
    }
    if (in.hi > c) {
        Rational pl = std::max(in.lo, c, std::less<Rational>());
        Rational pu = in.hi;
        hull.add(eval_branch(kind, angle, true, pl), eval_branch(kind, angle, true, pu));
    }
    if (!hull.value) {
        // in == {c}: keep the value both one-sided expansions can reach.
        hull.add(eval_branch(kind, angle, false, in.lo), eval_branch(kind, angle, true, in.hi));
    }
    return *hull.value;
}

}  // namespace fiqsim
