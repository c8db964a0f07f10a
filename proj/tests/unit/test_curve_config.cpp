#include "doctest.h"
#include "enriques/config/curve_config.hpp"
#include "enriques/errors.hpp"
#include "oracles.hpp"

using namespace enriques;
using namespace enriques::config;

TEST_SUITE("curve_config") {

TEST_CASE("the 34-curve configuration") {
    const auto y = build_Y_config();
    REQUIRE(y.size() == 34);
    CHECK(y.pairing("s0", "F1") == 1);
    CHECK(y.pairing("Fw", "Ew") == 2);
    CHECK(y.pairing("E1_4", "E1_5") == 1);
    CHECK(y.pairing("F1", "E1_9") == 1);
    CHECK(y.pairing("m2", "E1_1") == 1);
    for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j <= 4; ++j) {
            const auto si = "s" + std::to_string(i), mj = "m" + std::to_string(j), sj = "s" + std::to_string(j);
            CHECK(y.pairing(si, mj) == (i == j ? 1 : 0));
            CHECK(y.pairing(si, sj) == (i == j ? -2 : 0));
        }
    }
    // Every fiber class is isotropic and meets each section once.
    for (const char* place : {"1", "inf", "w", "w2"}) {
        const auto f = fiber_class(place);
        CHECK(divisor_pairing(y, f, f) == 0);
        for (const auto& name : y.names()) {
            if (y.tags()[y.index_of(name)] == "section") CHECK(divisor_pairing(y, f, {{name, 1}}) == 1);
        }
        for (const char* other : {"1", "inf", "w", "w2"}) {
            CHECK(divisor_pairing(y, f, fiber_class(other)) == 0);
        }
    }
    // Each section meets exactly one component of each reducible fiber.
    for (const char* sec : {"s0", "s3", "m1", "m4"}) {
        int hits = 0;
        for (const auto& name : y.names()) {
            if (y.tags()[y.index_of(name)].rfind("fiber", 0) == 0) hits += int(y.pairing(sec, name));
        }
        CHECK(hits == 4);
    }
    CHECK_THROWS_AS(y.pairing("s0", "nope"), UnknownCurveName);
}

TEST_CASE("divisorial part of D") {
    const auto y = build_Y_config();
    const auto d = derivations::divisorial_part_D();
    CHECK(divisor_pairing(y, d, d) == -24);
    CHECK(derivations::euler_bookkeeping(24, divisor_pairing(y, d, d), 0).degree == 0);
    const auto dp = derivations::divisorial_part_Dprime();
    // D' = (t + 1) D differs from D by the pullback of a divisor on P^1
    // (fiber classes), so its square and its pairing with (D) are fixed.
    CHECK(divisor_pairing(y, dp, fiber_class("1")) == 0);
    CHECK_THROWS_AS(divisor_pairing(y, {{"zz", 1}}, d), UnknownCurveName);
}

TEST_CASE("quotient and blow-down") {
    const auto y = build_Y_config();
    const auto images = quotient_images(y, integral_set_D());
    CHECK(images.size() == 22);
    CHECK(images.pairing("Fw'", "Fw'") == 0);
    const auto x = quotient_blowdown_gram(y, integral_set_D());
    REQUIRE(x.size() == 20);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(x.gram()[i][i] == -2);
    CHECK(x.pairing("s0'", "s0'") == -2);
    CHECK(x.pairing("m0'", "m1'") == 2);
    CHECK(x.pairing("s0'", "m0'") == 2);
    CHECK(x.pairing("E1_1'", "E1_3'") == 1);
    // Hand formula for s0': 2(-2) + <s0,F1>^2 + <s0,Finf>^2.
    CHECK(2 * y.pairing("s0", "s0") + y.pairing("s0", "F1") * y.pairing("s0", "F1") +
              y.pairing("s0", "Finf") * y.pairing("s0", "Finf") ==
          -2);
    CHECK_THROWS_AS(quotient_images(y, {"F1", "E1_1"}), IntegralSetInvalid);
    CHECK_THROWS_AS(quotient_images(y, {"F1", "F1"}), IntegralSetInvalid);
    CHECK_THROWS_AS(quotient_images(y, {"Q"}), UnknownCurveName);
}

TEST_CASE("lattice invariants") {
    const auto e10 = lattice_invariants(build_e10_config());
    CHECK(e10.rank == 10);
    CHECK(e10.determinant == "-1");
    CHECK(e10.n_plus == 1);
    CHECK(e10.n_minus == 9);
    CHECK(oracle::determinant(build_e10_config().gram()) == -1);

    const auto x = lattice_invariants(builtin_config("X20"));
    CHECK(x.rank == 10);
    CHECK(x.n_plus == 1);
    CHECK(x.n_minus == 9);
    CHECK(x.n_zero == 10);

    const auto single = lattice_invariants(IntMatrix{{-2}});
    CHECK(single.rank == 1);
    CHECK(single.determinant == "-2");
    CHECK(single.n_minus == 1);

    const auto zero = lattice_invariants(IntMatrix{{0, 0}, {0, 0}});
    CHECK(zero.rank == 0);
    CHECK(zero.n_zero == 2);
    CHECK(signature(IntMatrix{{0, 1}, {1, 0}}) == std::array<int, 3>{1, 1, 0});
}

TEST_CASE("inertia agrees with Descartes on the characteristic polynomial") {
    for (const char* name : {"E10", "X20", "Y34"}) {
        CAPTURE(name);
        const auto g = builtin_config(name).gram();
        CHECK(signature(g) == oracle::inertia(g));
    }
    const auto y = lattice_invariants(build_Y_config());
    CHECK(y.n_plus == 1);
    CHECK(y.rank == 22);
}

}  // TEST_SUITE
