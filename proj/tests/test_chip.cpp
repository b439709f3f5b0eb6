#include <doctest.h>

#include <cstdlib>

#include "camel/config.hpp"
#include "camel/context.hpp"

using namespace camel;

TEST_CASE("grid sizes and coupler counts") {
    CHECK(build_grid(4, 4).num_qubits() == 16);
    CHECK(build_grid(4, 4).edges.size() == 24);
    CHECK(build_grid(1, 4).edges.size() == 3);
    CHECK(build_grid(2, 4).edges.size() == 10);  // 2*2*4 - 2 - 4
    CHECK_THROWS_AS(build_grid(0, 4), InvalidDimensions);

    for (int M = 1; M <= 8; ++M)
        for (int N = 1; N <= 8; ++N)
            CHECK(static_cast<int>(build_grid(M, N).edges.size()) == 2 * M * N - M - N);
}

TEST_CASE("distances equal Manhattan distance on grids") {
    for (int M = 1; M <= 8; ++M)
        for (int N = 1; N <= 8; ++N) {
            CouplingGraph g = build_grid(M, N);
            DistanceMatrix D = distance_matrix(g);
            for (int a = 0; a < g.num_qubits(); ++a)
                for (int b = 0; b < g.num_qubits(); ++b) {
                    int manhattan =
                        std::abs(g.row_of(a) - g.row_of(b)) + std::abs(g.col_of(a) - g.col_of(b));
                    CHECK(D(a, b) == manhattan);
                }
        }
}

TEST_CASE("window enumeration counts") {
    CouplingGraph g44 = build_grid(4, 4);
    CHECK(enumerate_windows(g44, 2, 2).size() == 9);
    CHECK(enumerate_windows(g44, 4, 4).size() == 1);
    CHECK(enumerate_windows(build_grid(2, 4), 2, 2).size() == 3);
    CHECK_THROWS_AS(enumerate_windows(g44, 5, 2), WindowTooLarge);

    for (int M = 1; M <= 6; ++M)
        for (int N = 1; N <= 6; ++N) {
            CouplingGraph g = build_grid(M, N);
            for (int m = 1; m <= M; ++m)
                for (int n = 1; n <= N; ++n)
                    CHECK(static_cast<int>(enumerate_windows(g, m, n).size()) ==
                          (M - m + 1) * (N - n + 1));
        }
}

TEST_CASE("window distance test") {
    CouplingGraph g = build_grid(2, 8);
    DistanceMatrix D = distance_matrix(g);
    auto ws = enumerate_windows(g, 2, 2);  // origins (0,0)..(0,6)
    // adjacent windows share couplers
    CHECK_FALSE(windows_disjoint_far(ws[0], ws[1], D));
    // columns 0-1 vs 3-4: closest pair two hops apart, still too close
    CHECK_FALSE(windows_disjoint_far(ws[0], ws[3], D));
    // columns 0-1 vs 5-6: four hops
    CHECK(windows_disjoint_far(ws[0], ws[5], D));
    // symmetry
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = 0; j < ws.size(); ++j)
            CHECK(windows_disjoint_far(ws[i], ws[j], D) == windows_disjoint_far(ws[j], ws[i], D));
}

TEST_CASE("chip config loading") {
    ChipConfig minimal = load_chip_config(R"({"M":4,"N":4})");
    CHECK(minimal.M == 4);
    CHECK(minimal.m == 2);
    CHECK(minimal.n == 2);
    CHECK(minimal.durations.t_1q == 20.0);
    CHECK(minimal.durations.t_cz == 40.0);
    CHECK(minimal.durations.t_swap == 120.0);
    CHECK(minimal.durations.t_measure == 500.0);

    ChipConfig serial = load_chip_config(R"({"M":4,"N":4,"window":{"m":0,"n":0}})");
    CHECK_FALSE(serial.windows_enabled());

    CHECK_THROWS_AS(load_chip_config(R"({"M":0,"N":4})"), SchemaError);
    CHECK_THROWS_AS(load_chip_config(R"({"N":4})"), SchemaError);
    CHECK_THROWS_AS(load_chip_config(R"({"M":4,"N":4,"window":{"m":0,"n":2}})"), SchemaError);
    CHECK_THROWS_AS(load_chip_config(R"({"M":4,"N":4,"window":{"m":5,"n":2}})"), SchemaError);
    CHECK_THROWS_AS(load_chip_config("not json"), SchemaError);
    CHECK_THROWS_AS(load_chip_config(R"({"M":2,"N":2,"noise":{"eps_cz":1.5}})"), SchemaError);

    ChipConfig full = load_chip_config(R"({
        "M": 3, "N": 3,
        "window": {"m": 2, "n": 2},
        "durations": {"t_1q": 25, "t_cz": 45, "t_swap": 135, "t_measure": 600},
        "noise": {"T1_ns": 80000, "T2_ns": 40000, "g_xtalk_rad_per_ns": 0.005,
                  "eps_1q": 0.002, "eps_cz": 0.01, "eps_readout": 0.02},
        "seed": 7
    })");
    CHECK(full.durations.t_cz == 45.0);
    CHECK(full.noise.eps_cz == 0.01);
    CHECK(full.seed == 7);

    ChipConfig per_qubit = load_chip_config(
        R"({"M":1,"N":2,"noise":{"T1_ns":[1000.0, 2000.0]}})");
    CHECK(per_qubit.noise.t1_for(0) == 1000.0);
    CHECK(per_qubit.noise.t1_for(1) == 2000.0);
    CHECK_THROWS_AS(load_chip_config(R"({"M":1,"N":2,"noise":{"T1_ns":[1000.0]}})"), SchemaError);
}
