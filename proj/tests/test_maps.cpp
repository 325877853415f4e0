#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fiqsim/fiq.hpp"
#include "fiqsim/maps.hpp"

#include <vector>

using namespace fiqsim;

TEST_CASE("step_exact on the catalog maps") {
    CHECK(step_exact(MapSpec::doubling(), Rational(5, 8)) == Rational(1, 4));
    CHECK(step_exact(MapSpec::doubling(), Rational(1, 4)) == Rational(1, 2));

    // Tent at 3/8: 1 - |2*(3/8) - 1| = 3/4, checked by hand.
    CHECK(step_exact(MapSpec::tent(), Rational(3, 8)) == Rational(3, 4));
    CHECK(step_exact(MapSpec::tent(), Rational(3, 4)) == Rational(1, 2));

    // Logistic endpoint convention: 1/2 -> 1, and 1 is the fixed endpoint
    // whose iterates are all 0.
    CHECK(step_exact(MapSpec::logistic4(), Rational(1, 2)) == 1);
    CHECK(step_exact(MapSpec::logistic4(), Rational(1)) == 0);
    CHECK(step_exact(MapSpec::logistic4(), Rational(1, 4)) == Rational(3, 4));

    CHECK(step_exact(MapSpec::rotation(Rational(1, 4)), Rational(7, 8)) == Rational(1, 8));
    CHECK(step_exact(MapSpec::rotation(Rational(1, 3)), Rational(1, 2)) == Rational(5, 6));
    CHECK(step_exact(MapSpec::rotation(Rational(0)), Rational(2, 7)) == Rational(2, 7));

    CHECK_THROWS_AS(step_exact(MapSpec::doubling(), Rational(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(step_exact(MapSpec::baker2d(), Rational(1, 2)), std::invalid_argument);

    auto [bx, by] = step_exact_pair(MapSpec::baker2d(), Rational(5, 8), Rational(1, 3));
    CHECK(bx == Rational(1, 4));
    CHECK(by == Rational(2, 3));
    auto [lx, ly] = step_exact_pair(MapSpec::baker2d(), Rational(1, 4), Rational(1, 3));
    CHECK(lx == Rational(1, 2));
    CHECK(ly == Rational(1, 6));
}

TEST_CASE("map names round-trip") {
    for (const char* n : {"doubling", "tent", "logistic4", "baker2d", "rotation(1/4)", "rotation(0/1)"}) {
        CHECK(MapSpec::from_name(n).name() == MapSpec::from_name(MapSpec::from_name(n).name()).name());
    }
    CHECK(MapSpec::from_name("rotation(1/4)").angle() == Rational(1, 4));
    CHECK_THROWS_AS(MapSpec::from_name("rotation"), std::invalid_argument);
    CHECK_THROWS_AS(MapSpec::from_name("circle"), std::invalid_argument);
    CHECK_THROWS_AS(MapSpec::rotation(Rational(1)), std::invalid_argument);
}

TEST_CASE("image hulls on single branches") {
    auto img = image_hull(MapSpec::doubling(), {Rational(1, 8), Rational(1, 4)});
    CHECK(img.lo == Rational(1, 4));
    CHECK(img.hi == Rational(1, 2));

    img = image_hull(MapSpec::tent(), {Rational(5, 8), Rational(3, 4)});
    CHECK(img.lo == Rational(1, 2));
    CHECK(img.hi == Rational(3, 4));

    img = image_hull(MapSpec::rotation(Rational(0)), {Rational(1, 3), Rational(2, 3)});
    CHECK(img.lo == Rational(1, 3));
    CHECK(img.hi == Rational(2, 3));
}

TEST_CASE("image hull at the doubling discontinuity keeps string semantics") {
    // Hull whose low end sits exactly on the breakpoint: the 0-tail expansion
    // of 1/2 starts with bit 1, so only the right branch applies.
    auto img = image_hull(MapSpec::doubling(), {Rational(1, 2), Rational(1, 2) + Rational(1, 1024)});
    CHECK(img.lo == 0);
    CHECK(img.hi == Rational(1, 512));

    // Hull whose high end is the breakpoint: reached by a 1-tail expansion,
    // which lives on the left branch.
    img = image_hull(MapSpec::doubling(), {Rational(1, 2) - Rational(1, 1024), Rational(1, 2)});
    CHECK(img.lo == Rational(511, 512));
    CHECK(img.hi == 1);

    // Genuine straddle: both branches, conservative full hull.
    img = image_hull(MapSpec::doubling(), {Rational(3, 8), Rational(5, 8)});
    CHECK(img.lo == 0);
    CHECK(img.hi == 1);
}

TEST_CASE("image hull catches the logistic vertex") {
    auto img = image_hull(MapSpec::logistic4(), {Rational(2, 5), Rational(3, 5)});
    CHECK(img.hi == 1);
    CHECK(img.lo == Rational(24, 25));
}

TEST_CASE("rotation wrap produces a conservative hull") {
    auto img = image_hull(MapSpec::rotation(Rational(1, 4)), {Rational(2, 5), Rational(4, 5)});
    // Left piece [0.4, 0.75] lands at [0.65, 1]; right piece [0.75, 0.8] wraps to [0, 0.05].
    CHECK(img.lo == 0);
    CHECK(img.hi == 1);
}

namespace {

// Random Fiq with a few determined bits and explicit propensities.
Fiq random_fiq(RandomSource& rng) {
    std::vector<std::pair<std::uint32_t, int>> det;
    std::vector<std::pair<std::uint32_t, Propensity>> props;
    for (std::uint32_t pos = 1; pos <= 10; ++pos) {
        const std::uint64_t roll = rng.next_word() % 4;
        if (roll == 0) {
            det.emplace_back(pos, rng.next_bit());
        } else if (roll == 1) {
            props.emplace_back(pos, Propensity(Rational(1 + rng.next_word() % 9, 10)));
        }
    }
    return Fiq::make(det, props);
}

// A 0-tail completion consistent with x at the given depth.
Rational random_completion(const Fiq& x, std::uint32_t depth, RandomSource& rng) {
    BigInt num = 0;
    for (std::uint32_t pos = 1; pos <= depth; ++pos) {
        const int bit = x.is_determined(pos) ? x.determined_bit(pos) : rng.next_bit();
        num = (num << 1) | bit;
    }
    return Rational(num, BigInt(1) << depth);
}

}  // namespace

TEST_CASE("interval images contain every consistent exact image") {
    RandomSource rng(2024);
    const std::vector<MapSpec> maps = {MapSpec::doubling(), MapSpec::tent(), MapSpec::logistic4(),
                                       MapSpec::baker2d(), MapSpec::rotation(Rational(1, 3)),
                                       MapSpec::rotation(Rational(1, 4))};
    for (int iter = 0; iter < 50; ++iter) {
        Fiq x = random_fiq(rng);
        RatInterval hull = x.possible_interval(16).as_rat();
        for (const auto& map : maps) {
            RatInterval img = image_hull(map, hull);
            for (int n = 0; n < 20; ++n) {
                Rational v = random_completion(x, 16, rng);
                Rational image = map.two_dimensional()
                                     ? step_exact_pair(map, v, Rational(1, 3)).first
                                     : step_exact(map, v);
                CHECK(img.contains(image));
            }
        }
    }
}
