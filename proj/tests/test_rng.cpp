#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "uavcic/rng.hpp"

using namespace uavcic;

TEST_CASE("same seed reproduces the same sequence") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a() == b());
    }
}

TEST_CASE("distinct seeds and distinct substreams diverge") {
    Rng a(1);
    Rng b(2);
    int equal = 0;
    for (int i = 0; i < 1000; ++i) {
        equal += a() == b() ? 1 : 0;
    }
    CHECK(equal == 0);

    CHECK(derive_stream_key(7, {1, 2, 3}) == derive_stream_key(7, {1, 2, 3}));
    CHECK(derive_stream_key(7, {1, 2, 3}) != derive_stream_key(7, {1, 2, 4}));
    CHECK(derive_stream_key(7, {1, 2, 3}) != derive_stream_key(8, {1, 2, 3}));
}

TEST_CASE("uniform01 stays in [0,1) with the right mean") {
    Rng rng(3);
    const int n = 1000000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    // 3 sigma bound, sigma = 1/sqrt(12n)
    CHECK(std::abs(sum / n - 0.5) < 3.0 / std::sqrt(12.0 * n));
}

TEST_CASE("gaussian moments") {
    Rng rng(4);
    const int n = 1000000;
    double sum = 0.0;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.gaussian();
        sum += g;
        ss += g * g;
    }
    CHECK(std::abs(sum / n) < 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::sqrt(ss / n) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("complex gaussian has unit mean power and zero mean") {
    Rng rng(5);
    const int n = 1000000;
    double power = 0.0;
    std::complex<double> mean{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const auto g = rng.complex_gaussian();
        power += std::norm(g);
        mean += g;
    }
    CHECK(power / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(mean.real() / n) < 3.0 / std::sqrt(2.0 * n));
    CHECK(std::abs(mean.imag() / n) < 3.0 / std::sqrt(2.0 * n));
}
