// Machine-readable export: trajectory CSV, run manifests, divergence tables.
// Exact rationals serialize as "num/den" so round-trips stay lossless.
#pragma once

#include "fiqsim/dynamics.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fiqsim {

// 64-bit FNV-1a; used to stamp outputs with the config they came from.
std::uint64_t fnv1a64(const std::string& data);
std::string hash_hex(std::uint64_t h);

// One row per step: step,emitted_digits,actualized_positions,interval_width.
// Bit strings are most-significant-first; positions are ';'-separated.
std::string trajectory_csv(const Trajectory& t);

// Manifest JSON (map, seed, model, precision, budget, library version, ...).
std::string trajectory_manifest_json(const Trajectory& t, const std::string& config_hash);

std::string divergence_csv(const std::vector<DivergenceResult>& rows);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace fiqsim
