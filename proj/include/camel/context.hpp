#pragma once

#include <string>
#include <vector>

#include "camel/chip.hpp"
#include "camel/config.hpp"

namespace camel {

/// Compilation modes. Camel schedules crosstalk-free parallel groups against
/// the calibration windows; Serial executes each crosstalk-connected group of
/// CZs one gate at a time (window size 0); Agnostic ignores crosstalk
/// entirely and keeps the plain ASAP schedule.
enum class CompileMode { Camel, Serial, Agnostic };

const char* to_string(CompileMode m);
CompileMode mode_from_string(const std::string& s);

/// Immutable per-chip data shared by the mapper, scheduler and evaluator.
struct ChipContext {
    CouplingGraph graph;
    DistanceMatrix dist;
    std::vector<Window> windows;  // empty when windows are disabled
    int window_diameter = 0;      // m + n - 2 when windows are enabled
    int far_threshold = 2;
    DurationConfig durations;

    bool windows_enabled() const { return !windows.empty(); }
};

ChipContext make_chip_context(const ChipConfig& cfg, ExecPolicy policy = ExecPolicy::Parallel);

} // namespace camel
