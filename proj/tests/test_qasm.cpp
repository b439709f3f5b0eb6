#include <doctest.h>

#include "camel/qasm.hpp"
#include "test_helpers.hpp"

using namespace camel;

TEST_CASE("single statement") {
    Circuit c = parse_circuit("qreg q[2]; cz q[0],q[1];");
    CHECK(c.num_qubits == 2);
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].kind == GateKind::CZ);
    CHECK(c.gates[0].operands == std::vector<int>{0, 1});
}

TEST_CASE("empty body") {
    Circuit c = parse_circuit("qreg q[1];");
    CHECK(c.num_qubits == 1);
    CHECK(c.gates.empty());
}

TEST_CASE("unknown gates are rejected") {
    CHECK_THROWS_AS(parse_circuit("qreg q[2]; cnot q[0],q[1];"), UnsupportedGate);
    try {
        parse_circuit("qreg q[2]; cnot q[0],q[1];");
    } catch (const UnsupportedGate& e) {
        CHECK(e.name == "cnot");
    }
}

TEST_CASE("header and full gate set") {
    Circuit c = parse_circuit(
        "OPENQASM 2.0;\n"
        "qreg q[3];\n"
        "x q[0];\n"
        "h q[1];\n"
        "rz(0.5) q[2];\n"
        "cz q[0],q[1];\n"
        "swap q[1],q[2];\n"
        "barrier q[0],q[1],q[2];\n"
        "measure q[0];\n");
    REQUIRE(c.gates.size() == 7);
    CHECK(c.gates[2].param == 0.5);
    CHECK(c.gates[5].operands.size() == 3);
}

TEST_CASE("errors carry positions and kinds") {
    CHECK_THROWS_AS(parse_circuit("qreg q[2]; cz q[0],q[5];"), QubitOutOfRange);
    CHECK_THROWS_AS(parse_circuit("qreg q[2]; cz q[0];"), SyntaxError);
    CHECK_THROWS_AS(parse_circuit("cz q[0],q[1];"), SyntaxError);
    CHECK_THROWS_AS(parse_circuit("qreg q[2]; include \"x.inc\";"), SyntaxError);
    CHECK_THROWS_AS(parse_circuit("qreg q[2]; cz q[0],q[0];"), SyntaxError);
}

TEST_CASE("round trip is identity on the gate list") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Circuit c = camel::testing::random_circuit(5, 40, seed, seed % 2 == 0);
        Circuit back = parse_circuit(emit_circuit(c));
        CHECK(same_structure(c, back));
    }
}

TEST_CASE("rz angles survive the text form exactly") {
    Circuit c;
    c.num_qubits = 1;
    c.append(GateKind::RZ, {0}, 0.1234567890123456789);
    c.append(GateKind::RZ, {0}, -3.14159265358979312);
    Circuit back = parse_circuit(emit_circuit(c));
    CHECK(back.gates[0].param == c.gates[0].param);
    CHECK(back.gates[1].param == c.gates[1].param);
}

TEST_CASE("durations attach by kind") {
    Circuit c = parse_circuit("qreg q[2]; x q[0]; h q[1]; cz q[0],q[1];");
    Circuit timed = attach_durations(c, default_durations());
    CHECK(timed.gates[0].duration_ns == 20.0);
    CHECK(timed.gates[1].duration_ns == 20.0);
    CHECK(timed.gates[2].duration_ns == 40.0);

    DurationConfig partial;
    partial.t_1q = 20.0;
    Circuit swap_circ = parse_circuit("qreg q[2]; swap q[0],q[1];");
    CHECK_THROWS_AS(attach_durations(swap_circ, partial), MissingDuration);
}
