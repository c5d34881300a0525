#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "numerics.hpp"

using namespace spectral;

namespace {

ComplexBuffer random_buf(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexBuffer x(n);
    for (auto& v : x) v = cplx(dist(rng), dist(rng));
    return x;
}

double max_abs(const ComplexBuffer& x) {
    double m = 0.0;
    for (const auto& v : x) m = std::max(m, std::abs(v));
    return m;
}

double rel_error(const ComplexBuffer& got, const ComplexBuffer& want) {
    REQUIRE(got.size() == want.size());
    double num = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        num = std::max(num, std::abs(got[i] - want[i]));
    const double den = max_abs(want);
    return den > 0.0 ? num / den : num;
}

}  // namespace

TEST_CASE("power-of-two helpers") {
    CHECK(!is_pow2(0));
    CHECK(is_pow2(1));
    CHECK(is_pow2(2));
    CHECK(!is_pow2(6));
    CHECK(is_pow2(1024));
    CHECK_EQ(next_pow2(1), 1);
    CHECK_EQ(next_pow2(2), 2);
    CHECK_EQ(next_pow2(3), 4);
    CHECK_EQ(next_pow2(500), 512);
    CHECK_EQ(next_pow2(1024), 1024);
    CHECK_EQ(next_pow2(1025), 2048);
    CHECK_THROWS_AS(next_pow2(0), std::invalid_argument);
}

TEST_CASE("zero_pad keeps data and appends zeros") {
    ComplexBuffer x{{1.0, 2.0}, {3.0, 4.0}};
    const ComplexBuffer y = zero_pad(x, 5);
    REQUIRE(y.size() == 5);
    CHECK_EQ(y[0], x[0]);
    CHECK_EQ(y[1], x[1]);
    for (std::size_t i = 2; i < 5; ++i) CHECK_EQ(y[i], cplx(0.0, 0.0));
    CHECK_EQ(zero_pad(x, 2).size(), 2);
    CHECK_THROWS_AS(zero_pad(x, 1), std::invalid_argument);
}

TEST_CASE("dft_naive reproduces a hand-computed 4-point transform") {
    const ComplexBuffer x{{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    const ComplexBuffer X = dft_naive(x);
    REQUIRE(X.size() == 4);
    CHECK(std::abs(X[0] - cplx(10, 0)) < 1e-12);
    CHECK(std::abs(X[1] - cplx(-2, 2)) < 1e-12);
    CHECK(std::abs(X[2] - cplx(-2, 0)) < 1e-12);
    CHECK(std::abs(X[3] - cplx(-2, -2)) < 1e-12);
}

TEST_CASE("dft_naive basics: impulse, constant, single bin tone") {
    const std::size_t n = 16;
    ComplexBuffer delta(n, cplx(0, 0));
    delta[0] = cplx(1, 0);
    for (const auto& v : dft_naive(delta)) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);

    ComplexBuffer ones(n, cplx(1, 0));
    const ComplexBuffer Xc = dft_naive(ones);
    CHECK(std::abs(Xc[0] - cplx(double(n), 0)) < 1e-12);
    for (std::size_t k = 1; k < n; ++k) CHECK(std::abs(Xc[k]) < 1e-12);

    const std::size_t k0 = 5;
    ComplexBuffer tone(n);
    for (std::size_t i = 0; i < n; ++i)
        tone[i] = cis_cycles(double(k0) / double(n), double(i));
    const ComplexBuffer Xt = dft_naive(tone);
    for (std::size_t k = 0; k < n; ++k) {
        const double want = k == k0 ? double(n) : 0.0;
        CHECK(std::abs(Xt[k] - cplx(want, 0)) < 1e-9);
    }
}

TEST_CASE("fft matches dft_naive on random inputs across sizes") {
    std::mt19937_64 rng(12345);
    for (std::size_t n : {2, 4, 8, 16, 64, 128, 256, 1024}) {
        for (int rep = 0; rep < 5; ++rep) {
            const ComplexBuffer x = random_buf(n, rng);
            CHECK(rel_error(fft(x), dft_naive(x)) < 1e-10);
        }
    }
}

TEST_CASE("fft rejects non power-of-two lengths and names the fix") {
    const ComplexBuffer x(6, cplx(1, 0));
    try {
        fft(x);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("pad") != std::string::npos);
        CHECK(msg.find('8') != std::string::npos);
    }
    CHECK_THROWS_AS(fft(ComplexBuffer{}), std::invalid_argument);
    CHECK_THROWS_AS(FftPlan(12), std::invalid_argument);
}

TEST_CASE("FftPlan rejects a mismatched buffer") {
    FftPlan plan(8);
    ComplexBuffer x(4, cplx(1, 0));
    CHECK_THROWS_AS(plan.forward(x), std::invalid_argument);
}

TEST_CASE("ifft inverts fft") {
    std::mt19937_64 rng(777);
    for (std::size_t n : {2, 16, 512}) {
        const ComplexBuffer x = random_buf(n, rng);
        const ComplexBuffer back = ifft(fft(x));
        CHECK(rel_error(back, x) < 1e-12);
    }
}

TEST_CASE("forward transform satisfies Parseval's identity") {
    std::mt19937_64 rng(31);
    for (std::size_t n : {4, 128, 1024}) {
        const ComplexBuffer x = random_buf(n, rng);
        const ComplexBuffer X = fft(x);
        double et = 0.0, ef = 0.0;
        for (const auto& v : x) et += std::norm(v);
        for (const auto& v : X) ef += std::norm(v);
        CHECK(std::abs(et - ef / double(n)) < 1e-10 * et);
    }
}

TEST_CASE("transform is linear") {
    std::mt19937_64 rng(99);
    const std::size_t n = 256;
    const ComplexBuffer x = random_buf(n, rng);
    const ComplexBuffer y = random_buf(n, rng);
    const cplx alpha(0.7, -1.3), beta(-2.1, 0.4);
    ComplexBuffer mix(n);
    for (std::size_t i = 0; i < n; ++i) mix[i] = alpha * x[i] + beta * y[i];
    const ComplexBuffer Xm = fft(mix);
    const ComplexBuffer X = fft(x);
    const ComplexBuffer Y = fft(y);
    ComplexBuffer want(n);
    for (std::size_t i = 0; i < n; ++i) want[i] = alpha * X[i] + beta * Y[i];
    CHECK(rel_error(Xm, want) < 1e-12);
}

TEST_CASE("one plan serves several buffers") {
    std::mt19937_64 rng(4);
    FftPlan plan(64);
    for (int rep = 0; rep < 3; ++rep) {
        ComplexBuffer x = random_buf(64, rng);
        const ComplexBuffer want = dft_naive(x);
        plan.forward(x);
        CHECK(rel_error(x, want) < 1e-10);
    }
}

TEST_CASE("cis_cycles gives exact quarter turns") {
    const cplx i_unit = cis_cycles(0.25, 1.0);
    CHECK(std::abs(i_unit.real()) < 1e-15);
    CHECK(i_unit.imag() == doctest::Approx(1.0).epsilon(1e-15));
    const cplx minus_i = cis_cycles(-0.25, 1.0);
    CHECK(minus_i.imag() == doctest::Approx(-1.0).epsilon(1e-15));
    const cplx one = cis_cycles(0.5, 2.0);
    CHECK(one.real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(one.imag()) < 1e-12);
}

TEST_CASE("cis_cycles keeps phase accuracy at huge arguments") {
    // 0.25 * (4e15 + 1) = 1e15 + 0.25 exactly in double, so the reduced
    // phase is a quarter cycle with no roundoff at all.
    const cplx v = cis_cycles(0.25, 4.0e15 + 1.0);
    CHECK(std::abs(v.real()) < 1e-12);
    CHECK(v.imag() == doctest::Approx(1.0).epsilon(1e-12));

    // moderate arguments agree with the textbook formula
    const double q = 0.123, t = 7.0;
    const double ang = 2.0 * std::numbers::pi * (q * t - std::nearbyint(q * t));
    const cplx want(std::cos(ang), std::sin(ang));
    CHECK(std::abs(cis_cycles(q, t) - want) < 1e-12);
}
