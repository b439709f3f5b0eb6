#pragma once

#include <cstdint>
#include <string_view>

#include "camel/chip.hpp"
#include "camel/circuit.hpp"
#include "camel/noise.hpp"

namespace camel {

struct ChipConfig {
    int M = 4, N = 4;
    int m = 2, n = 2;  // calibration window; m = n = 0 disables windows
    int window_far_distance = 2;
    DurationConfig durations = default_durations();
    NoiseConfig noise;
    std::uint64_t seed = 0;

    bool windows_enabled() const { return m > 0 && n > 0; }
};

/// Parses and validates the chip JSON, filling defaults for absent fields.
ChipConfig load_chip_config(std::string_view json_text);

ChipConfig load_chip_config_file(const std::string& path);

} // namespace camel
