#ifndef GELL_ROTATION_HPP
#define GELL_ROTATION_HPP

#include <Eigen/Dense>
#include <optional>

#include "gell/trace_pairing.hpp"

namespace gell {

// Finite-dimensional clock/shift model of the rational rotation algebra:
// U = diag of q-th roots of unity (angle p/q per site), V the cyclic shift,
// with V U = e^{2 pi i p/q} U V.
struct ClockShiftPair {
    int p = 0;
    int q = 0;
    Eigen::MatrixXcd u;
    Eigen::MatrixXcd v;
    double relation_residual = 0;  // ||VU - e^{2 pi i p/q} UV||_F
};

ClockShiftPair clock_shift(int p, int q);

// Piecewise linear bump profile on the 1/q grid: ramp up over [0, eps],
// plateau to theta = p/q, ramp down over [theta, theta + eps]. Values are
// exact rationals; g^2 = f - f^2 is supported on the down ramp. The grid
// average of f is exactly theta, which pins the projection trace.
struct BumpPair {
    int p = 0;
    int q = 0;
    Rat eps;
    std::vector<Rat> f;          // f(m/q), m = 0..q-1
    std::vector<Rat> g_squared;  // g(m/q)^2

    Rat grid_average() const;  // (1/q) sum f = p/q
};

BumpPair bump_pair(int p, int q, const Rat& eps);

// Rieffel-type projection of trace p/q built from the aligned bump pair.
// The V-vs-V* placement is self-checked: both conventions are tried and the
// one satisfying P^2 = P is kept.
struct RieffelProjection {
    int p = 0;
    int q = 0;
    Rat eps;
    Eigen::MatrixXcd projection;
    std::string convention;  // "V" or "V*"
    double selfadjoint_residual = 0;  // ||P - P*||_F
    double idempotent_residual = 0;   // ||P^2 - P||_F
    double trace = 0;                 // (1/q) Re tr P
    double trace_error = 0;           // |trace - p/q|
    double spectrum_deviation = 0;    // max distance of eigenvalues to {0,1}
    double spectrum_gap = 0;          // gap between the 0- and 1-clusters
};

RieffelProjection rieffel_projection(int p, int q, const Rat& eps);

// A_theta ~ A_zeta iff theta = zeta or theta = 1 - zeta, for theta, zeta in [0,1].
bool rotation_isomorphic(const Rat& theta, const Rat& zeta);

// Trace range Z + theta Z of the rank-2 rotation algebra; nullopt means the
// symbolic parameter.
GapLabelGroup trace_range_d2(const std::optional<Rat>& theta);

}  // namespace gell

#endif
