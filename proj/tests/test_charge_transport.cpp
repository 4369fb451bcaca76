#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "actinwire/charge_transport.hpp"
#include "support/oracles.hpp"

using namespace actinwire;
using Catch::Approx;

TEST_CASE("eta' endpoints and spot value", "[transport][oracle]") {
  const TransportParams p;
  CHECK(eta_prime(0.0, p) == Approx(4.0 * p.Omega * p.Omega).epsilon(1e-14));
  CHECK(eta_prime(0.0, p) == Approx(22.676644).epsilon(1e-12));
  CHECK(eta_prime(1e6, p) <= 1e-12);
  CHECK(eta_prime(1.0, p) == Approx(0.17377312281968817).epsilon(1e-12));
  CHECK(eta_prime(1.0, p) == Approx(oracles::eta_prime_hiprec(1.0, {})).epsilon(1e-13));
  CHECK_THROWS_AS(eta_prime(-0.5, p), parameter_error);
}

TEST_CASE("velocity anchors and the hard stop", "[transport][oracle]") {
  const TransportParams p;
  CHECK(velocity_m_s(0.0, p) == Approx(0.03).epsilon(0.02));
  CHECK(velocity_m_s(0.0, p) == Approx(0.030006414).epsilon(1e-9));
  CHECK(velocity_m_s(30e-6, p) == Approx(0.0154605427159).epsilon(1e-9));
  CHECK(velocity_m_s(30e-6, p) == Approx(oracles::velocity_hiprec(30e-6, {})).epsilon(1e-13));
  CHECK(velocity_m_s(60e-6, p) == 0.0);
  CHECK(velocity_m_s(1.0, p) == 0.0);
}

TEST_CASE("velocity is non-increasing and settles at beta/alpha", "[transport][property]") {
  std::mt19937_64 rng(13);
  const auto uniform = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
  for (int trial = 0; trial < 40; ++trial) {
    TransportParams p;
    p.mu1 = 50.0 * uniform();
    p.mu2 = 0.1 + 9.9 * uniform();
    p.Omega = 0.5 + 4.0 * uniform();
    p.t_stop_s.reset();
    double prev = velocity_m_s(0.0, p);
    for (double t = 1e-9; t < 1e-3; t *= 1.6) {
      const double v = velocity_m_s(t, p);
      CHECK(v <= prev);
      prev = v;
    }
  }
  // eta' -> 0, so the tail is beta/alpha
  TransportParams p;
  p.t_stop_s.reset();
  CHECK(velocity_m_s(2e-4, p) == Approx(p.beta_m / p.alpha_s).epsilon(1e-6));
}

TEST_CASE("charge capacity is exact and linear", "[transport]") {
  const TransportParams p;
  CHECK(charge_capacity_bits(1.0, p) == 1480.0);
  CHECK(charge_capacity_bits(2.0, p) == 2960.0);
  CHECK(charge_capacity_bits(0.5, p) == 740.0);
  CHECK_THROWS_AS(charge_capacity_bits(0.0, p), parameter_error);
}

TEST_CASE("throughput anchors", "[transport][oracle]") {
  const TransportParams p;
  CHECK(max_throughput_bps(0.0, p) == Approx(4.44e7).epsilon(0.02));
  CHECK(max_throughput_bps(0.0, p) == Approx(44409492.72).epsilon(1e-12));
  CHECK(max_throughput_bps(30e-6, p) == Approx(2.3e7).epsilon(0.10));
  CHECK(max_throughput_bps(30e-6, p) == Approx(22881603.2195).epsilon(1e-9));
  CHECK(max_throughput_bps(60e-6, p) == 0.0);
  // ratio to the wireless baseline, computed as a cross-check
  CHECK(max_throughput_bps(0.0, p) / 5.5e3 == Approx(8.07e3).epsilon(0.01));
}

TEST_CASE("throughput is velocity times per-um capacity at all times", "[transport][property]") {
  const TransportParams p;
  const double scale = 1e6 * charge_capacity_bits(1.0, p);
  for (double t = 0.0; t < 59e-6; t += 1.7e-6) {
    const double v = velocity_m_s(t, p);
    CHECK(max_throughput_bps(t, p) == Approx(v * scale).epsilon(1e-12));
  }
}

TEST_CASE("transmission time matches the closed-form antiderivative oracle",
          "[transport][oracle]") {
  const TransportParams p;
  const auto t1 = transmission_time_s(1.0, p);
  REQUIRE(t1.has_value());
  CHECK(*t1 == Approx(oracles::transmission_time_closed(1.0, {})).epsilon(1e-6));
  CHECK(*t1 == Approx(2.29642589175e-8).epsilon(1e-6));

  const auto t1016 = transmission_time_s(1016.0, p);
  REQUIRE(t1016.has_value());
  CHECK(*t1016 == Approx(oracles::transmission_time_closed(1016.0, {})).epsilon(1e-6));
  CHECK(*t1016 == Approx(4.3495733381e-5).epsilon(1e-6));
}

TEST_CASE("constant-rate override: mu2 = 0 freezes the velocity", "[transport][oracle]") {
  TransportParams p;
  p.mu2 = 0.0;
  CHECK(velocity_m_s(0.0, p) == velocity_m_s(30e-6, p));
  const auto t = transmission_time_s(444.0, p);
  REQUIRE(t.has_value());
  CHECK(*t == Approx(1e-5).margin(1e-7));
  CHECK(*t == Approx(444.0 / max_throughput_bps(0.0, p)).epsilon(1e-9));
}

TEST_CASE("capacity exhaustion before the stop time is not deliverable", "[transport]") {
  const TransportParams p;
  // integral of TM over [0, 60us] is ~1393.0 bits with the defaults
  CHECK(transmission_time_s(1392.0, p).has_value());
  CHECK_FALSE(transmission_time_s(1394.0, p).has_value());
  const auto almost = transmission_time_s(1392.0, p);
  CHECK(*almost <= 60e-6);

  TransportParams unlimited;
  unlimited.t_stop_s.reset();
  CHECK(transmission_time_s(1e6, unlimited).has_value());
}

TEST_CASE("transmission time is strictly increasing and superadditive-bounded",
          "[transport][property]") {
  const TransportParams p;
  std::mt19937_64 rng(29);
  const auto uniform = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
  double prev = 0.0;
  for (const double bits : {1.0, 2.0, 10.0, 100.0, 500.0, 1000.0, 1300.0}) {
    const auto t = transmission_time_s(bits, p);
    REQUIRE(t.has_value());
    CHECK(*t > prev);
    prev = *t;
  }
  for (int i = 0; i < 20; ++i) {
    const double a = 1.0 + 600.0 * uniform();
    const double b = 1.0 + 600.0 * uniform();
    const auto ta = transmission_time_s(a, p);
    const auto tb = transmission_time_s(b, p);
    const auto tab = transmission_time_s(a + b, p);
    REQUIRE((ta && tb && tab));
    CHECK(*tab >= *ta);
    CHECK(*tab >= *tb);
  }
  CHECK_THROWS_AS(transmission_time_s(0.5, p), parameter_error);
}

TEST_CASE("transport parameter validation", "[transport][errors]") {
  TransportParams p;
  p.Omega = 0.0;
  CHECK_THROWS_AS(validate(p), parameter_error);
  p = TransportParams{};
  p.alpha_s = -1.0;
  CHECK_THROWS_AS(validate(p), parameter_error);
  p = TransportParams{};
  p.t_stop_s = 0.0;
  CHECK_THROWS_AS(validate(p), parameter_error);
}
