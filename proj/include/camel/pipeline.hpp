#pragma once

#include <optional>
#include <string>
#include <vector>

#include "camel/benchgen.hpp"
#include "camel/config.hpp"
#include "camel/context.hpp"
#include "camel/mapper.hpp"
#include "camel/noise.hpp"
#include "camel/scheduler.hpp"

namespace camel {

struct CompileOutcome {
    CompileMode mode = CompileMode::Camel;
    ChipConfig config;
    Circuit source;
    MapResult mapped;
    ScheduleResult scheduled;
    std::vector<CrosstalkEvent> events;
    FidelityReport fidelity;
};

/// parse/generate -> map -> schedule -> evaluate under one mode.
/// Serial mode runs with windows disabled; agnostic mode skips partitioning
/// and evaluates without compensation windows.
CompileOutcome compile_circuit(const Circuit& source, const ChipConfig& cfg, CompileMode mode,
                               const SearchParams& params, bool simulate = false);

/// Throws InternalInvariantViolation unless every two-qubit gate sits on a
/// coupler, the gate multiset is preserved, every sub-layer is independent in
/// its crosstalk graph, and crosstalk-aware modes end with zero events.
void validate_outcome(const ChipContext& ctx, const CompileOutcome& outcome);

/// Report JSON (schema 1) for one compilation; deterministic for fixed inputs.
std::string report_json(const CompileOutcome& outcome, const std::string& qasm_path,
                        const std::string& chip_path);

struct BenchItem {
    std::string name;
    int n = 0;  // 0: pick a default from the chip
    int p = 5;
};

/// Parses "name[:n[:p]]".
BenchItem parse_bench_item(const std::string& spec);

/// Compiles every suite circuit under all three modes and reports depth
/// ratios, event counts and analytic fidelities. Deterministic.
std::string run_bench(const std::vector<BenchItem>& suite, const ChipConfig& cfg,
                      const SearchParams& params);

} // namespace camel
