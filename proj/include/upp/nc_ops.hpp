#pragma once

#include <cstdint>
#include <vector>

#include "upp/composition.hpp"
#include "upp/curve.hpp"

namespace upp {

// Rate-latency service curve beta_{R,theta}(t) = R * max(t - theta, 0),
// R > 0, theta >= 0.
Curve rateLatency(const Rational& rate, const Rational& latency);

// Leaky-bucket arrival curve gamma_{sigma,rho}(t) = sigma + rho * t for
// t >= 0; in particular gamma(0) = sigma.
Curve leakyBucket(const Rational& burst, const Rational& rate);

// Constant function f(t) = k.
Curve constant(const Rational& k);

// Delay-element service curve: 0 on [0, theta], +inf after (wUI).
Curve delayElement(const Rational& latency);

// Stair function nu_{h,P}(t) = h * ceil(t / P); h > 0, P > 0.
// Left-continuous: the value h*k holds on ](k-1)*P, k*P].
Curve stair(const Rational& height, const Rational& period);

// nu_{h,P}(max(t - shift, 0)): the stair delayed by shift >= 0.
Curve shiftedStair(const Rational& height, const Rational& period,
                   const Rational& shift);

// Min-plus convolution with a rate-latency curve on the left:
//   result(t) = inf_{0 <= s <= t} U(s) + R * max(t - s - theta, 0).
// U must be non-negative, non-decreasing and not wUI. Computed as a single
// forward scan that carries the running lower envelope of U anchors
// propagated at slope R, then detects the periodic regime: the result grows
// by min(c_U, R * d_U) per period d_U once either U itself or a frozen
// anchor line dominates.
Curve convolveWithRateLatency(const Curve& u, const Rational& rate,
                              const Rational& latency);

// Maximum horizontal distance between non-decreasing alpha and beta, the
// worst-case delay bound:
//   h(alpha, beta) = sup_t inf { d >= 0 | alpha(t) <= beta(t + d) }.
// +inf when alpha grows faster than beta. Computed through the lower
// pseudo-inverse of beta composed with alpha: the gap G(t) - t is piecewise
// affine and, past T_G, non-increasing per period, so its supremum lives on
// [0, T_G + d_G].
ExtValue horizontalDeviation(const Curve& alpha, const Curve& beta);

// Interleaved Weighted Round-Robin scenario: n flows with integer weights
// and packet-size bounds, served by an aggregate service curve beta.
// flowIndex is 1-based. beta is assumed superadditive; that hypothesis is
// documented, not checked.
struct IwrrConfig {
  std::vector<std::int64_t> weights;
  std::vector<Rational> minPacket;
  std::vector<Rational> maxPacket;
  std::size_t flowIndex = 1;
  Curve beta;
};

void validateIwrrConfig(const IwrrConfig& cfg);

// phi_ij(p) = floor(p/w_i)*w_j + max(w_j - w_i, 0) + min((p mod w_i) + 1, w_j)
std::int64_t iwrrPhi(std::int64_t p, std::int64_t wi, std::int64_t wj);

// psi_i(x) = x + sum_{j != i} phi_ij(floor(x / l_i_min)) * l_j_max
Rational iwrrPsi(const Rational& x, const IwrrConfig& cfg);

// L_tot = w_i * l_i_min + sum_{j != i} w_j * l_j_max
Rational iwrrLtot(const IwrrConfig& cfg);

// U_i(t) = sum_{k=0}^{w_i - 1} nu_{l_i_min, L_tot}(max(t - psi(k * l_i_min), 0))
Curve iwrrU(const IwrrConfig& cfg);

// gamma_i = beta_{1,0} convolved with U_i
Curve iwrrGamma(const IwrrConfig& cfg);

// Per-flow strict service curve beta^i = gamma_i o beta.
Curve iwrrServiceCurve(const IwrrConfig& cfg,
                       ComposeMode mode = ComposeMode::Auto,
                       ComposeStats* stats = nullptr);

}  // namespace upp
