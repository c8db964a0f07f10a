#include <random>

#include "doctest.h"
#include "enriques/algebra/parse.hpp"
#include "enriques/derivations/derivation.hpp"
#include "enriques/errors.hpp"

using namespace enriques;
using namespace enriques::algebra;
using namespace enriques::derivations;

namespace {

RatFunc R(const char* s, const FiniteField& f = FiniteField::gf2()) { return parse_ratfunc(s, f); }

std::vector<std::string> roots(const IntegralFibers& fib) {
    std::vector<std::string> out;
    for (const auto& l : fib.rational) {
        for (unsigned i = 0; i < l.multiplicity; ++i) out.push_back(l.root.to_string());
    }
    return out;
}

}  // namespace

TEST_SUITE("derivations") {

TEST_CASE("D' acts on generators") {
    const auto dp = derivation_Dprime();
    CHECK(dp.apply(R("t")) == R("(t+1)*(t+a)*(t+a/(a+1))"));
    CHECK(dp.apply(R("t")) == R("(t+1)*(t+a)*(t+b)").substitute(var("b"), R("a/(a+1)")));
    CHECK(dp.apply(R("x")) == R("1 + t^2*x"));
    CHECK(dp.apply(R("x^2")).is_zero());
}

TEST_CASE("Leibniz rule on random rational functions") {
    std::mt19937 rng(17);
    const auto d = derivation_D();
    const char* pieces[] = {"t", "x", "a", "t+1", "x*t+a", "t^2+x", "1/(t+a)", "x^3", "(t+x)/(a+1)"};
    std::uniform_int_distribution<int> pick(0, 8);
    for (int i = 0; i < 25; ++i) {
        const RatFunc f = R(pieces[pick(rng)]) * R(pieces[pick(rng)]) + R(pieces[pick(rng)]);
        const RatFunc g = R(pieces[pick(rng)]) + R(pieces[pick(rng)]) * R(pieces[pick(rng)]);
        CHECK(d.apply(f * g) == d.apply(f) * g + f * d.apply(g));
        CHECK(d.apply(f + g) == d.apply(f) + d.apply(g));
    }
}

TEST_CASE("2-closedness") {
    CHECK(p_closure_multiplier(derivation_Dprime()) == R("t^2"));
    CHECK(p_closure_multiplier(derivation_D()) == R("a^2/(a+1)"));
    // ab with b = a/(a+1).
    CHECK(p_closure_multiplier(derivation_D()) == R("a*(a/(a+1))"));
    const auto zero = ParamContext::specialized(FiniteField::gf2(), 0);
    CHECK(p_closure_multiplier(derivation_D(zero))->is_zero());
    CHECK(vector_field_type(derivation_D(zero)) == VectorFieldType::additive);
    CHECK(vector_field_type(derivation_D()) == VectorFieldType::multiplicative);
    CHECK(vector_field_type(Derivation(R("1"), R("0"))) == VectorFieldType::additive);

    // x^2 d/dx: D^2(x) = 0 but D(x) != 0 and D^2 != h D would need h = 0.
    CHECK(p_closure_multiplier(Derivation(R("0"), R("x^2"))).has_value());
    // t d/dt + t^2 d/dx is not 2-closed: D^2(t) = t, D^2(x) = 0 but D(x) != 0.
    const Derivation bad(R("t"), R("t^2"));
    CHECK_FALSE(p_closure_multiplier(bad).has_value());
    CHECK_THROWS_AS(vector_field_type(bad), NotPClosed);
}

TEST_CASE("specializations are checked") {
    const auto f4 = FiniteField::gf4();
    CHECK_THROWS_AS(ParamContext::specialized(f4, f4.generator()), InvalidParameter);
    CHECK_THROWS_AS(ParamContext::specialized(FiniteField::gf2(), 1), InvalidParameter);
    const auto f16 = FiniteField::gf(4);
    const auto ctx = ParamContext::specialized(f16, f16.generator());
    const auto h = p_closure_multiplier(derivation_D(ctx));
    REQUIRE(h.has_value());
    CHECK(*h == ctx.a() * ctx.b());
    CHECK(*h == ctx.a() + ctx.b());
}

TEST_CASE("integral fibers") {
    CHECK(roots(integral_fiber_places(derivation_Dprime())) == std::vector<std::string>{"1", "a", "a/(a + 1)"});
    CHECK(roots(integral_fiber_places(derivation_D())) == std::vector<std::string>{"a", "a/(a + 1)"});
    const auto zero = ParamContext::specialized(FiniteField::gf2(), 0);
    CHECK(roots(integral_fiber_places(derivation_D(zero))) == std::vector<std::string>{"0", "0"});

    const auto f16 = FiniteField::gf(4);
    const Raw alpha = f16.generator();
    const auto ctx = ParamContext::specialized(f16, alpha);
    const auto fib = integral_fiber_places(derivation_D(ctx));
    REQUIRE(fib.rational.size() == 2);
    std::vector<RatFunc> got{fib.rational[0].root, fib.rational[1].root};
    const RatFunc a = ctx.a(), b = ctx.b();
    CHECK(((got[0] == a && got[1] == b) || (got[0] == b && got[1] == a)));
    CHECK(integral_fiber_places(Derivation(R("0"), R("1"))).all);
}

TEST_CASE("Euler bookkeeping") {
    CHECK(euler_bookkeeping(24, -24, 0).degree == 0);
    CHECK(euler_bookkeeping(24, -24, 0).verdict == EulerVerdict::divisorial);
    CHECK(euler_bookkeeping(24, -20, 0).degree == 4);
    CHECK(euler_bookkeeping(24, -20, 0).verdict == EulerVerdict::isolated_zeros);
    CHECK(euler_bookkeeping(12, -12, 0).degree == 0);
    CHECK(euler_bookkeeping(12, -20, 0).verdict == EulerVerdict::inconsistent);
}

TEST_CASE("divisorial parts") {
    const auto d = divisorial_part_D();
    CHECK(d.size() == 12);
    for (const auto& [n, c] : d) CHECK(c == -1);
    const auto dp = divisorial_part_Dprime();
    CHECK(dp.at("Einf_1") == -1);
    CHECK(dp.at("Einf_2") == -2);
    CHECK(dp.at("E1_3") == 1);
    CHECK(dp.at("Finf") == -2);
}

}  // TEST_SUITE
