#include "gell/rotation.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gell {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_reduced_angle(int p, int q) {
    if (q < 1) throw std::invalid_argument("rotation denominator must be >= 1");
    if (p < 1 || p >= q) throw std::invalid_argument("rotation angle p/q must lie in (0,1)");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("rotation angle p/q must be reduced");
}

Eigen::MatrixXcd clock_matrix(int p, int q) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(q, q);
    for (int k = 0; k < q; ++k) {
        double ang = kTwoPi * p * k / q;
        u(k, k) = std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return u;
}

Eigen::MatrixXcd shift_matrix(int q) {
    // V e_k = e_{k-1 mod q}
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(q, q);
    for (int k = 0; k < q; ++k) v((k - 1 + q) % q, k) = 1.0;
    return v;
}

}  // namespace

ClockShiftPair clock_shift(int p, int q) {
    check_reduced_angle(p, q);
    ClockShiftPair cs;
    cs.p = p;
    cs.q = q;
    cs.u = clock_matrix(p, q);
    cs.v = shift_matrix(q);
    std::complex<double> omega(std::cos(kTwoPi * p / q), std::sin(kTwoPi * p / q));
    cs.relation_residual = (cs.v * cs.u - omega * cs.u * cs.v).norm();
    return cs;
}

Rat BumpPair::grid_average() const {
    Rat sum = 0;
    for (const Rat& v : f) sum += v;
    return sum / q;
}

BumpPair bump_pair(int p, int q, const Rat& eps) {
    check_reduced_angle(p, q);
    // breakpoints must align with the 1/q spectral grid
    Rat eq = eps * q;
    if (eps <= 0 || eq.get_den() != 1)
        throw std::invalid_argument("eps must be a positive multiple of 1/q");
    const long e = eq.get_num().get_si();
    const Rat theta = make_rat(p, q);
    if (eps > theta || eps > 1 - theta)
        throw std::invalid_argument("eps must satisfy eps <= min(theta, 1 - theta)");

    BumpPair b;
    b.p = p;
    b.q = q;
    b.eps = eps;
    b.f.assign(q, Rat(0));
    b.g_squared.assign(q, Rat(0));
    for (long m = 0; m < q; ++m) {
        if (m <= e)
            b.f[m] = make_rat(m, e);
        else if (m <= p)
            b.f[m] = 1;
        else if (m <= p + e)
            b.f[m] = 1 - make_rat(m - p, e);
        if (m >= p && m <= p + e) b.g_squared[m] = b.f[m] - b.f[m] * b.f[m];
    }
    return b;
}

RieffelProjection rieffel_projection(int p, int q, const Rat& eps) {
    BumpPair bump = bump_pair(p, q, eps);

    Eigen::MatrixXcd fu = Eigen::MatrixXcd::Zero(q, q);
    Eigen::MatrixXcd gu = Eigen::MatrixXcd::Zero(q, q);
    for (int k = 0; k < q; ++k) {
        long m = (static_cast<long>(k) * p) % q;  // site k has angle m/q
        fu(k, k) = bump.f[m].get_d();
        gu(k, k) = std::sqrt(bump.g_squared[m].get_d());
    }
    Eigen::MatrixXcd v = shift_matrix(q);

    Eigen::MatrixXcd p_v = gu * v + fu + v.adjoint() * gu;
    Eigen::MatrixXcd p_vstar = gu * v.adjoint() + fu + v * gu;
    double res_v = (p_v * p_v - p_v).norm();
    double res_vstar = (p_vstar * p_vstar - p_vstar).norm();

    RieffelProjection out;
    out.p = p;
    out.q = q;
    out.eps = eps;
    if (res_v <= res_vstar) {
        out.projection = p_v;
        out.convention = "V";
        out.idempotent_residual = res_v;
    } else {
        out.projection = p_vstar;
        out.convention = "V*";
        out.idempotent_residual = res_vstar;
    }
    if (out.idempotent_residual > 1e-9)
        throw std::runtime_error("projection identity fails under both V and V* conventions");

    out.selfadjoint_residual = (out.projection - out.projection.adjoint()).norm();
    out.trace = out.projection.trace().real() / q;
    out.trace_error = std::abs(out.trace - static_cast<double>(p) / q);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(out.projection);
    double dev = 0.0;
    double top_of_zero = -1.0, bottom_of_one = 2.0;
    for (int i = 0; i < q; ++i) {
        double ev = es.eigenvalues()(i);
        dev = std::max(dev, std::min(std::abs(ev), std::abs(ev - 1.0)));
        if (ev < 0.5)
            top_of_zero = std::max(top_of_zero, ev);
        else
            bottom_of_one = std::min(bottom_of_one, ev);
    }
    out.spectrum_deviation = dev;
    out.spectrum_gap = bottom_of_one - top_of_zero;
    return out;
}

bool rotation_isomorphic(const Rat& theta, const Rat& zeta) {
    if (theta < 0 || theta > 1 || zeta < 0 || zeta > 1)
        throw std::invalid_argument("rotation parameters must lie in [0,1]");
    return theta == zeta || theta == 1 - zeta;
}

GapLabelGroup trace_range_d2(const std::optional<Rat>& theta) {
    GapLabelGroup g;
    if (!theta) {
        g.symbolic = true;
        g.one_part = SubgroupOfQ{1};
        g.theta_part = SubgroupOfQ{1};
        return g;
    }
    g.symbolic = false;
    g.one_part = subgroup_generator({Rat(1), *theta});
    return g;
}

}  // namespace gell
