#include "fiqsim/dynamics.hpp"

#include "fiqsim/version.hpp"

#include <algorithm>
#include <functional>

namespace fiqsim {

namespace {

std::optional<BigInt> pinned_bucket(const RatInterval& img, int m) {
    BigInt j = bucket_index(img.lo, m);
    Rational lo_edge(j, BigInt(1) << m);
    Rational hi_edge(j + 1, BigInt(1) << m);
    if (lo_edge <= img.lo && img.hi <= hi_edge) return j;
    return std::nullopt;
}

struct PinResult {
    std::vector<int> bits;
    Rational width;
};

// Refine x until the image of its hull under step_map pins the first m output
// bits: while the image interval straddles a bucket edge (or a branch
// breakpoint), fix the lowest-index undetermined input bit and retry.
PinResult refine_until_pinned(const MapSpec& step_map, Fiq& x, int m, ActualizeSource& src,
                              int budget, std::uint64_t step_index,
                              std::vector<std::uint32_t>& actualized, double& info_gain) {
    std::uint32_t depth = std::max<std::uint32_t>(1, x.explicit_len());
    int used = 0;
    for (;;) {
        RatInterval img = image_hull(step_map, x.possible_interval(depth).as_rat());
        if (auto j = pinned_bucket(img, m)) {
            return {index_bits(*j, m), img.width()};
        }
        if (used >= budget) throw BudgetError(budget, step_index);
        std::uint32_t n = x.lowest_undetermined();
        depth = std::max(depth, n);
        info_gain += 1.0 - bit_information(x.propensity(n));
        x.actualize_bit(n, src);
        actualized.push_back(n);
        ++used;
    }
}

void validate_step_args(const MapSpec& map, const FiqState& state, int m, int budget) {
    if (m < 1) throw std::invalid_argument("output precision m must be >= 1");
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    if (map.two_dimensional() && !state.y) {
        throw std::invalid_argument("baker2d evolves (x, y) pairs; state.y missing");
    }
}

}  // namespace

StepOutcome step_fiq(const MapSpec& map, const FiqState& state, int m, ActualizeSource& src, int budget) {
    validate_step_args(map, state, m, budget);

    Fiq x = state.x;
    StepOutcome out;
    double info_gain = 0.0;
    PinResult pin = refine_until_pinned(map, x, m, src, budget, 1, out.actualized, info_gain);
    out.emitted = pin.bits;
    out.image_width = pin.width;
    switch (map.kind()) {
        case MapSpec::Kind::doubling:
            out.next.x = x.suffix(1);
            break;
        case MapSpec::Kind::baker2d:
            // A pinned image implies a single branch, so bit 1 is determined.
            out.next.x = x.suffix(1);
            out.next.y = state.y->shifted_in(x.determined_bit(1));
            break;
        default:
            out.next.x = Fiq::from_bits(pin.bits);
            break;
    }
    return out;
}

StepOutcome step_fiq(const MapSpec& map, const FiqState& state, int m, RandomSource& rng, int budget) {
    RngActualizer src(rng);
    return step_fiq(map, state, m, src, budget);
}

std::vector<std::uint8_t> Trajectory::emitted_stream() const {
    std::vector<std::uint8_t> bits;
    bits.reserve(steps.size() * static_cast<std::size_t>(manifest.precision));
    for (const auto& s : steps) {
        for (int b : s.emitted) bits.push_back(static_cast<std::uint8_t>(b));
    }
    return bits;
}

std::uint64_t Trajectory::bits_consumed() const {
    std::uint64_t n = 0;
    for (const auto& s : steps) n += s.actualized_positions.size();
    return n;
}

double Trajectory::final_information() const {
    return steps.empty() ? 0.0 : steps.back().info_after;
}

Trajectory evolve_with_source(const MapSpec& map, const FiqState& x0, std::uint64_t steps, int m,
                              ActualizeSource& src, int budget, const std::string& model,
                              std::uint64_t seed_label) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    validate_step_args(map, x0, m, budget);

    Trajectory traj;
    traj.manifest = RunManifest{map.name(),  model,       seed_label,
                                m,           budget,      steps,
                                x0.x.str(),  x0.y ? x0.y->str() : "",
                                FIQSIM_VERSION};
    traj.steps.reserve(steps);

    double info = x0.x.information_content() + (x0.y ? x0.y->information_content() : 0.0);

    if (map.kind() == MapSpec::Kind::rotation) {
        // The composed map is again a rotation, so the exact image of the
        // refined input hull is carried forward with no width growth; input
        // bits keep their original indices throughout.
        Fiq master = x0.x;
        Rational phase(0);
        for (std::uint64_t t = 1; t <= steps; ++t) {
            phase += map.angle();
            if (phase >= 1) phase -= 1;
            std::vector<std::uint32_t> local;
            double gain = 0.0;
            PinResult pin = refine_until_pinned(MapSpec::rotation(phase), master, m, src, budget,
                                                t, local, gain);
            info += gain;
            TrajectoryStep rec;
            rec.step = t;
            rec.emitted = std::move(pin.bits);
            rec.actualized_positions.assign(local.begin(), local.end());
            rec.interval_width = std::move(pin.width);
            rec.info_after = info;
            traj.steps.push_back(std::move(rec));
        }
        return traj;
    }

    FiqState state = x0;
    std::uint64_t origin = 0;  // retired input-bit indices before the current state
    for (std::uint64_t t = 1; t <= steps; ++t) {
        OffsetActualizer osrc(src, origin);
        Fiq x = state.x;
        std::vector<std::uint32_t> local;
        double gain = 0.0;
        PinResult pin = refine_until_pinned(map, x, m, osrc, budget, t, local, gain);
        info += gain;

        TrajectoryStep rec;
        rec.step = t;
        rec.emitted = pin.bits;
        rec.interval_width = std::move(pin.width);
        rec.info_after = info;
        rec.actualized_positions.reserve(local.size());
        for (std::uint32_t p : local) rec.actualized_positions.push_back(origin + p);
        traj.steps.push_back(std::move(rec));

        switch (map.kind()) {
            case MapSpec::Kind::doubling:
                state.x = x.suffix(1);
                origin += 1;
                break;
            case MapSpec::Kind::baker2d:
                state.y = state.y->shifted_in(x.determined_bit(1));
                state.x = x.suffix(1);
                origin += 1;
                break;
            default:  // tent, logistic4: honest reset to the emitted bucket
                origin += x.explicit_len();
                state.x = Fiq::from_bits(pin.bits);
                break;
        }
    }
    return traj;
}

Trajectory evolve(const MapSpec& map, const FiqState& x0, std::uint64_t steps, int m,
                  RandomSource& rng, int budget) {
    RngActualizer src(rng);
    return evolve_with_source(map, x0, steps, m, src, budget, "fiq", rng.seed());
}

std::vector<DivergenceResult> divergence_experiment(const MapSpec& map, std::uint32_t k,
                                                    std::uint32_t trials, RandomSource& rng,
                                                    std::uint64_t horizon, std::uint32_t depth) {
    if (k < 1) throw std::invalid_argument("shared prefix length k must be >= 1");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (depth == 0) depth = k + 64;
    if (depth <= k) throw std::invalid_argument("depth must exceed k");

    std::vector<DivergenceResult> results;
    results.reserve(trials);
    const BigInt den = BigInt(1) << depth;
    for (std::uint32_t trial = 1; trial <= trials; ++trial) {
        BigInt shared = 0;
        for (std::uint32_t i = 0; i < depth; ++i) shared = (shared << 1) | rng.next_bit();
        const BigInt mask = BigInt(1) << (depth - (k + 1));
        Rational xa(shared | mask, den);
        Rational xb(shared & ~mask, den);
        Rational ya(0), yb(0);
        if (map.two_dimensional()) {
            BigInt ybits = 0;
            for (std::uint32_t i = 0; i < depth; ++i) ybits = (ybits << 1) | rng.next_bit();
            ya = yb = Rational(ybits, den);
        }

        std::optional<std::uint64_t> when;
        for (std::uint64_t t = 1; t <= horizon; ++t) {
            if (map.two_dimensional()) {
                std::tie(xa, ya) = step_exact_pair(map, xa, ya);
                std::tie(xb, yb) = step_exact_pair(map, xb, yb);
            } else {
                xa = step_exact(map, xa);
                xb = step_exact(map, xb);
            }
            if (bucket_index(xa, 1) != bucket_index(xb, 1)) {
                when = t;
                break;
            }
        }
        results.push_back(DivergenceResult{k, trial, when});
    }
    return results;
}

}  // namespace fiqsim
