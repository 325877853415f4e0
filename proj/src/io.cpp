#include "fiqsim/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fiqsim {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

std::string trajectory_csv(const Trajectory& t) {
    std::ostringstream out;
    out << "step,emitted_digits,actualized_positions,interval_width\n";
    for (const auto& s : t.steps) {
        out << s.step << "," << bits_str(s.emitted) << ",";
        for (std::size_t i = 0; i < s.actualized_positions.size(); ++i) {
            if (i) out << ";";
            out << s.actualized_positions[i];
        }
        out << "," << rational_str(s.interval_width) << "\n";
    }
    return out.str();
}

std::string trajectory_manifest_json(const Trajectory& t, const std::string& config_hash) {
    nlohmann::json j{{"map", t.manifest.map},
                     {"model", t.manifest.model},
                     {"seed", t.manifest.seed},
                     {"precision", t.manifest.precision},
                     {"budget", t.manifest.budget},
                     {"steps", t.manifest.steps},
                     {"x0", t.manifest.x0},
                     {"library_version", t.manifest.version},
                     {"bits_emitted", t.steps.size() * static_cast<std::size_t>(t.manifest.precision)},
                     {"bits_consumed", t.bits_consumed()},
                     {"final_information", t.final_information()},
                     {"config_hash", config_hash}};
    if (!t.manifest.y0.empty()) j["y0"] = t.manifest.y0;
    return j.dump(2) + "\n";
}

std::string divergence_csv(const std::vector<DivergenceResult>& rows) {
    std::ostringstream out;
    out << "k,trial,divergence_step,censored\n";
    for (const auto& r : rows) {
        out << r.shared_prefix << "," << r.trial << ",";
        if (r.step) {
            out << *r.step << ",0\n";
        } else {
            out << ",1\n";
        }
    }
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace fiqsim
