// Discrete-time evolution of Fiq states under unit-interval maps, with lazy
// on-demand bit actualization driven by exact interval refinement.
#pragma once

#include "fiqsim/fiq.hpp"
#include "fiqsim/maps.hpp"
#include "fiqsim/random.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiqsim {

// State of the evolving system; y is present exactly for baker2d.
struct FiqState {
    Fiq x;
    std::optional<Fiq> y;

    static FiqState all_tail(const MapSpec& map) {
        FiqState s;
        if (map.two_dimensional()) s.y = Fiq{};
        return s;
    }
};

class BudgetError : public std::runtime_error {
public:
    BudgetError(int budget, std::uint64_t step)
        : std::runtime_error("actualization budget (" + std::to_string(budget) +
                             ") exhausted at step " + std::to_string(step)),
          step_(step) {}
    std::uint64_t step() const { return step_; }

private:
    std::uint64_t step_;
};

struct StepOutcome {
    FiqState next;
    std::vector<int> emitted;                     // exactly m bits, MSB first
    std::vector<std::uint32_t> actualized;        // positions fixed, in order
    Rational image_width;                         // width of the pinning image interval
};

// One map application: refines the state (actualizing the lowest undetermined
// input bit as needed, at most `budget` times) until the image interval pins
// the first m output bits. The successor keeps the exact shift structure for
// doubling and baker2d; tent, logistic4 and rotation reset to the emitted bits
// followed by the all-1/2 tail.
StepOutcome step_fiq(const MapSpec& map, const FiqState& state, int m, ActualizeSource& src, int budget);
StepOutcome step_fiq(const MapSpec& map, const FiqState& state, int m, RandomSource& rng, int budget);

struct TrajectoryStep {
    std::uint64_t step = 0;                        // 1-based
    std::vector<int> emitted;
    std::vector<std::uint64_t> actualized_positions;  // trajectory-global input-bit indices
    Rational interval_width;
    double info_after = 0.0;                       // cumulative information content
};

struct RunManifest {
    std::string map;
    std::string model;        // "fiq" or "tape"
    std::uint64_t seed = 0;
    int precision = 1;
    int budget = 64;
    std::uint64_t steps = 0;
    std::string x0;
    std::string y0;           // empty unless baker2d
    std::string version;
};

struct Trajectory {
    RunManifest manifest;
    std::vector<TrajectoryStep> steps;

    std::vector<std::uint8_t> emitted_stream() const;
    std::uint64_t bits_consumed() const;
    double final_information() const;
};

// Iterated evolution. Per-step provenance uses global input-bit coordinates:
// shift maps (doubling, baker2d) keep the original indices of the surviving
// bits; reset maps retire the predecessor's explicit region, so each step's
// fresh tail bits get indices past everything previously touched. Rotation
// threads the exact rotated interval of the refined input, so no information
// is discarded between steps and the original indices stay live.
Trajectory evolve_with_source(const MapSpec& map, const FiqState& x0, std::uint64_t steps, int m,
                              ActualizeSource& src, int budget, const std::string& model,
                              std::uint64_t seed_label);
Trajectory evolve(const MapSpec& map, const FiqState& x0, std::uint64_t steps, int m,
                  RandomSource& rng, int budget);

struct DivergenceResult {
    std::uint32_t shared_prefix = 0;
    std::uint32_t trial = 0;
    std::optional<std::uint64_t> step;  // empty = censored at the horizon
};

// For each trial, builds two fully determined dyadic inputs agreeing on the
// first k bits, differing at bit k+1 and sharing random bits k+2..depth, then
// follows both exact orbits and records the first step whose leading output
// bit differs. Baker2d pairs the inputs with one shared random y.
std::vector<DivergenceResult> divergence_experiment(const MapSpec& map, std::uint32_t k,
                                                    std::uint32_t trials, RandomSource& rng,
                                                    std::uint64_t horizon = 100000,
                                                    std::uint32_t depth = 0);

}  // namespace fiqsim
