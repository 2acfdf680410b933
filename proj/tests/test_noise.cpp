#include <doctest.h>

#include <cmath>

#include "fluxheat/constants.hpp"
#include "fluxheat/device.hpp"
#include "fluxheat/errors.hpp"
#include "fluxheat/noise.hpp"
#include "helpers.hpp"

using namespace fluxheat;

TEST_SUITE_BEGIN("noise");

TEST_CASE("bare current noise hits the Johnson-Nyquist limit") {
    CHECK_EQ(bare_current_noise(6.0, 0.3, 0.0), 2.0 * phys::kB * 0.3 / 6.0);
    // continuity across omega = 0 at the 1 kHz scale
    const double s0 = bare_current_noise(6.0, 0.3, 0.0);
    for (const double w : {2.0 * phys::pi * 1e3, -2.0 * phys::pi * 1e3})
        CHECK(rel_close(bare_current_noise(6.0, 0.3, w), s0, 1e-6));
}

TEST_CASE("bare current noise detailed-balance identity") {
    const double w = 2.0 * phys::pi * 7e9;
    const double ratio =
        bare_current_noise(6.0, 0.3, w) / bare_current_noise(6.0, 0.3, -w);
    CHECK(rel_close(ratio, std::exp(phys::hbar * w / (phys::kB * 0.3)), 1e-12));
    CHECK(rel_close(ratio, 3.0643129481440985, 1e-12));
    // independent constant arithmetic for the positive branch
    CHECK(rel_close(bare_current_noise(6.0, 0.3, w), 2.2950407143043863e-24, 1e-12));
}

TEST_CASE("resonator transmission passbands and stopband floor") {
    const double fr = 7e9, R = 6.0, Z = 50.0;
    for (int n = 1; n <= 5; ++n)
        CHECK(rel_close(resonator_transmission(n * fr, fr, R, Z), 1.0, 1e-12));
    CHECK(rel_close(resonator_transmission(0.5 * fr, fr, R, Z), 0.0144, 1e-12));
}

TEST_CASE("resonator transmission periodicity, symmetry and bounds") {
    const double fr = 7e9, R = 6.0, Z = 50.0;
    const double floor = (R / Z) * (R / Z);
    Lcg rng;
    for (int it = 0; it < 500; ++it) {
        const double f = rng.in(1e6, 5e10);
        const double t = resonator_transmission(f, fr, R, Z);
        REQUIRE(t >= floor * (1.0 - 1e-9));
        REQUIRE(t <= 1.0 + 1e-9);
        REQUIRE(rel_close(t, resonator_transmission(f + fr, fr, R, Z), 1e-6));
        const double x = rng.in(0.0, 0.5 * fr);
        REQUIRE(rel_close(resonator_transmission(fr + x, fr, R, Z),
                          resonator_transmission(fr - x, fr, R, Z), 1e-6));
    }
}

TEST_CASE("flux noise limits") {
    DeviceParams p;
    const auto ind = NoiseChannel::inductive(0.3, p.R, p.M, p.L);
    CHECK(rel_close(flux_noise(ind, 0.0), 2.0 * p.M * p.M * phys::kB * 0.3 / p.R,
                    1e-15));

    const auto res = reservoir_channel(p, 1, 0.3);
    const double wr = 2.0 * phys::pi * p.fr1;
    // transparent at the passband: the filter drops out
    CHECK(rel_close(flux_noise(res, wr),
                    p.M * p.M * bare_current_noise(p.R, 0.3, wr), 1e-12));
}

TEST_CASE("inductive flux noise falls as 1/omega at high frequency") {
    DeviceParams p;
    const auto ind = NoiseChannel::inductive(0.3, p.R, p.M, p.L);
    // one decade with omega L >> R and hbar omega >> kB T
    const double w1 = 1e13, w2 = 1e14;
    const double slope = std::log(flux_noise(ind, w2) / flux_noise(ind, w1)) /
                         std::log(w2 / w1);
    CHECK(std::fabs(slope + 1.0) < 1e-3);
}

TEST_CASE("flux noise detailed balance and positivity, both filters") {
    DeviceParams p;
    for (const double T : {0.08, 0.3}) {
        const auto res = reservoir_channel(p, 1, T);
        const auto ind = NoiseChannel::inductive(T, p.R, p.M, p.L);
        for (int k = 0; k <= 40; ++k) {
            const double f = 1e6 * std::pow(5e10 / 1e6, k / 40.0);
            const double w = 2.0 * phys::pi * f;
            const double boltz = std::exp(phys::hbar * w / (phys::kB * T));
            if (!std::isfinite(boltz)) continue;
            for (const NoiseChannel& ch : {res, ind}) {
                const double sp = flux_noise(ch, w);
                const double sm = flux_noise(ch, -w);
                REQUIRE(sp >= 0.0);
                REQUIRE(sm >= 0.0);
                REQUIRE(rel_close(sp / sm, boltz, 1e-10));
            }
        }
    }
}

TEST_CASE("flux noise continuity at zero frequency") {
    DeviceParams p;
    const auto res = reservoir_channel(p, 1, 0.3);
    const auto ind = NoiseChannel::inductive(0.3, p.R, p.M, p.L);
    for (const NoiseChannel& ch : {res, ind}) {
        const double s0 = flux_noise(ch, 0.0);
        CHECK(rel_close(flux_noise(ch, 2.0 * phys::pi * 1e3), s0, 1e-6));
        CHECK(rel_close(flux_noise(ch, -2.0 * phys::pi * 1e3), s0, 1e-6));
    }
}

TEST_CASE("noise channel validation") {
    CHECK_THROWS_AS(NoiseChannel::resonator(0.0, 6.0, 0.8e-9, 7e9, 50.0),
                    ParamError);
    CHECK_THROWS_AS(NoiseChannel::resonator(0.3, -6.0, 0.8e-9, 7e9, 50.0),
                    ParamError);
    CHECK_THROWS_AS(NoiseChannel::resonator(0.3, 6.0, 0.8e-9, 0.0, 50.0),
                    ParamError);
    DeviceParams p;
    CHECK_THROWS_AS(reservoir_channel(p, 3, 0.3), ParamError);
}

TEST_SUITE_END();
