#pragma once

#include <string>
#include <string_view>

#include "camel/circuit.hpp"

namespace camel {

/// Parses an OpenQASM-2 subset: optional "OPENQASM 2.0;" line, one qreg
/// declaration, then statements from {x, h, rz(theta), cz, swap, barrier,
/// measure}. No includes, no classical registers, no conditionals.
Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit on the gate list: parse_circuit(emit_circuit(c))
/// reproduces c structurally (durations are not part of the text form).
std::string emit_circuit(const Circuit& c, const std::string& reg_name = "q");

} // namespace camel
