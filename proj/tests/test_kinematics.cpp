#include <gtest/gtest.h>

#include <cmath>

#include "compton/constants.hpp"
#include "compton/kinematics.hpp"
#include "test_support.hpp"

using namespace compton;
using compton::testing::rel_diff;

namespace {

constexpr double pi = constants::pi;
const double kOmega5 = to_au(5.0, Unit::keV);
const double kOmega3 = to_au(3.0, Unit::keV);

KinematicInput point(double omega, double E_e, double theta, double phi1, double Phi) {
    return {omega, E_e, theta, phi1, Phi, TMode::fixed_unity};
}

}  // namespace

TEST(Target, Presets) {
    const Target ps = Target::positronium();
    EXPECT_EQ(ps.Z, 0.5);
    EXPECT_EQ(ps.eps0, -0.125);
    const Target h = Target::hydrogen();
    EXPECT_EQ(h.Z, 1.0);
    EXPECT_EQ(h.eps0, -0.5);
    EXPECT_TRUE(parse_target("ps").is_positronium());
    EXPECT_FALSE(parse_target("h").is_positronium());
    EXPECT_THROW(parse_target("he"), DomainError);
}

TEST(Resolve, PhotonMomentum) {
    const auto r = resolve(Target::positronium(), point(kOmega5, 0.5, 1.0, 0.3, 0.2));
    EXPECT_NEAR(r.k_i, 1.34122, 5e-6);
    EXPECT_DOUBLE_EQ(r.k_i, 5000.0 / 27.2114 / 137.0);
    EXPECT_DOUBLE_EQ(r.p1, 1.0);
    EXPECT_EQ(r.t, 1.0);
}

TEST(Resolve, ForwardScatteringHasNoTransfer) {
    const auto r = resolve(Target::positronium(), point(kOmega5, 0.5, 0.0, 0.3, 0.2));
    EXPECT_EQ(r.Q, 0.0);
    EXPECT_THROW(r.cos_beta(), DegenerateGeometryError);
    EXPECT_THROW(r.cos_gamma(), DegenerateGeometryError);
}

TEST(Resolve, CoplanarChi) {
    compton::testing::Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const double th = rng.uniform(0.0, pi), ph = rng.uniform(0.0, pi);
        const auto r = resolve(Target::hydrogen(), point(kOmega5, 0.3, th, ph, 0.0));
        EXPECT_NEAR(r.cos_chi, std::cos(th - ph), 1e-14);
    }
}

TEST(Resolve, FullModeT) {
    KinematicInput in = point(kOmega5, to_au(27.2114, Unit::eV), 1.0, 0.5, 0.0);
    in.t_mode = TMode::full;
    const auto h = resolve(Target::hydrogen(), in);
    EXPECT_NEAR(h.t, 1.0 - 1.5 / kOmega5, 1e-15);
    EXPECT_NEAR(h.t, 0.99184, 5e-6);

    // Ps adds the positron recoil (k_i - p1)^2 / 2
    const auto ps = resolve(Target::positronium(), in);
    const double recoil = ps.k_i * ps.k_i - 2.0 * ps.k_i * ps.p1 * std::cos(0.5) + ps.p1 * ps.p1;
    EXPECT_NEAR(ps.t, 1.0 - (1.0 + 0.125 + recoil / 2.0) / kOmega5, 1e-15);

    in.E_e = 2.0 * kOmega5;
    EXPECT_THROW(resolve(Target::hydrogen(), in), DomainError);
}

TEST(Resolve, Validation) {
    EXPECT_THROW(resolve(Target::hydrogen(), point(0.0, 0.1, 1.0, 1.0, 0.0)), DomainError);
    EXPECT_THROW(resolve(Target::hydrogen(), point(1.0, -0.1, 1.0, 1.0, 0.0)), DomainError);
    EXPECT_THROW(resolve(Target::hydrogen(), point(1.0, 0.1, 3.2, 1.0, 0.0)), DomainError);
    EXPECT_THROW(resolve(Target::hydrogen(), point(1.0, 0.1, 1.0, -0.1, 0.0)), DomainError);
    EXPECT_THROW(resolve(Target::hydrogen(), point(1.0, 0.1, 1.0, 1.0, 2.0 * pi)), DomainError);
}

TEST(Resolve, DerivedScalarsAgreeWithVectors) {
    compton::testing::Rng rng(4);
    for (int i = 0; i < 2000; ++i) {
        KinematicInput in = point(rng.uniform(20.0, 200.0), rng.uniform(0.0, 4.0), rng.uniform(0.01, pi),
                                  rng.uniform(0.0, pi), rng.uniform(0.0, 2.0 * pi - 1e-9));
        in.t_mode = i % 2 ? TMode::full : TMode::fixed_unity;
        ResolvedKinematics r;
        try {
            r = resolve(Target::positronium(), in);
        } catch (const DomainError&) {
            continue;
        }
        EXPECT_LE(rel_diff(r.Q, norm(r.q_vec)), 1e-12);
        EXPECT_NEAR(r.q_dot_p1, dot(r.q_vec, r.p1_vec), 1e-12 * (1.0 + r.Q * r.p1));
        // p_rho^2 + (Q.p1) - p1^2 - Q^2/4 = 0
        const double residual = r.p_rho * r.p_rho + r.q_dot_p1 - r.p1 * r.p1 - r.Q * r.Q / 4.0;
        EXPECT_NEAR(residual, 0.0, 1e-12 * (1.0 + r.p1 * r.p1 + r.Q * r.Q));
        EXPECT_NEAR(r.p_rho, norm(r.p1_vec - 0.5 * r.q_vec), 1e-10);
        EXPECT_EQ(r.mu, r.p_rho);
        EXPECT_DOUBLE_EQ(r.zeta, -0.5 / r.p_rho);
        if (r.p1 > 1e-6) {
            EXPECT_NEAR(r.cos_beta(), dot(r.q_vec, r.p1_vec) / (r.Q * r.p1), 1e-10);
        }
    }
}

TEST(Resolve, HydrogenZeta) {
    const auto r = resolve(Target::hydrogen(), point(kOmega5, 0.5, 1.0, 0.3, 0.2));
    EXPECT_DOUBLE_EQ(r.zeta, -1.0);
    const auto z = resolve(Target::hydrogen(), point(kOmega5, 0.0, 1.0, 0.3, 0.2));
    EXPECT_TRUE(std::isinf(z.zeta));
}

TEST(Resolve, CosGammaSafeguard) {
    // p1 = Q/2 exactly along the binary direction at theta = pi
    const double k = kOmega5 / constants::c;
    const auto r = resolve(Target::positronium(), point(kOmega5, 0.5 * k * k, pi, 0.0, 0.0));
    EXPECT_LT(r.p_rho, 1e-7);
    ResolvedKinematics degenerate = r;
    degenerate.p_rho = 0.0;
    EXPECT_EQ(degenerate.cos_gamma(), -1.0);
}

TEST(Resolve, CosBetaOnBinaryPlane) {
    // cos beta = sin(phi1 + theta/2) at Phi = pi, t = 1
    compton::testing::Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        const double th = rng.uniform(0.01, pi), ph = rng.uniform(0.0, pi);
        const auto r = resolve(Target::hydrogen(), point(kOmega5, 0.4, th, ph, pi));
        EXPECT_NEAR(r.cos_beta(), std::sin(ph + th / 2.0), 1e-12);
    }
    const BinaryDirection b = binary_direction(1.1);
    const auto r = resolve(Target::hydrogen(), point(kOmega5, 0.4, 1.1, b.phi1, b.Phi));
    EXPECT_NEAR(r.cos_beta(), 1.0, 1e-15);
}

TEST(MuSquared, FormAExamples) {
    const double k = kOmega5 / constants::c;
    // p1 = Q/2 in the binary direction
    const double th = 1.3;
    const double p1 = k * std::sin(th / 2.0);
    const auto r = resolve(Target::positronium(), point(kOmega5, 0.5 * p1 * p1, th, pi / 2 - th / 2, pi));
    EXPECT_NEAR(mu_squared_form_a(r), 0.0, 1e-15);
    // phi1 = 0, theta = pi, p1 = k
    const auto back = resolve(Target::positronium(), point(kOmega5, 0.5 * k * k, pi, 0.0, 0.0));
    EXPECT_NEAR(mu_squared_form_a(back), 0.0, 1e-15);
    // p1 = 0
    const auto rest = resolve(Target::positronium(), point(kOmega5, 0.0, 2.0, 0.4, 1.0));
    EXPECT_DOUBLE_EQ(mu_squared_form_a(rest), rest.Q * rest.Q / 4.0);
}

TEST(MuSquared, FormBExamples) {
    const double k = 1.3;
    const double th = 2.1;
    EXPECT_NEAR(mu_squared_form_b(std::sin(th / 2), th, pi / 2 - th / 2, pi, k), 0.0, 1e-15);
    EXPECT_GT(mu_squared_form_b(0.4, th, 0.7, 0.0, k), 0.0);
}

TEST(MuSquared, FormsAgreeOnRandomPoints) {
    compton::testing::Rng rng(6);
    for (int i = 0; i < 10000; ++i) {
        const double omega = rng.uniform(to_au(1.0, Unit::keV), to_au(5.0, Unit::keV));
        const double E_e = rng.uniform(0.0, 4.0);
        const double th = rng.uniform(0.0, pi), ph = rng.uniform(0.0, pi), Ph = rng.uniform(0.0, 2 * pi - 1e-12);
        const auto r = resolve(Target::positronium(), point(omega, E_e, th, ph, Ph));
        const double a = mu_squared_form_a(r);
        const double b = mu_squared_form_b(r.p1 / r.k_i, th, ph, Ph, r.k_i);
        EXPECT_LE(rel_diff(a, b), 1e-12) << i;
        EXPECT_GE(b, 0.0);
        EXPECT_LE(rel_diff(a, r.mu * r.mu), 1e-10);
    }
}

TEST(MuSquared, NoZeroAbovePhotonMomentum) {
    // p1 > k at t = 1: mu stays away from zero for every photon direction
    const double k = kOmega5 / constants::c;
    const double p1 = 1.05 * k;
    for (double th = 0.0; th <= pi; th += pi / 90) {
        for (double ph = 0.0; ph <= pi; ph += pi / 90) {
            const auto r = resolve(Target::positronium(), point(kOmega5, 0.5 * p1 * p1, th, ph, pi));
            EXPECT_GE(r.mu, 0.05 * k - 1e-12);
        }
    }
}

TEST(ResonanceEnergy, Values) {
    EXPECT_EQ(resonance_energy(kOmega5, 0.0), 0.0);
    EXPECT_NEAR(resonance_energy(kOmega5, pi), 0.8994294549, 1e-9);
    EXPECT_NEAR(from_au(resonance_energy(kOmega5, pi), Unit::eV), 24.47, 5e-3);
    EXPECT_NEAR(resonance_energy(kOmega3, pi), 0.3237946, 1e-7);
    EXPECT_NEAR(from_au(resonance_energy(kOmega3, pi), Unit::eV), 8.81, 5e-3);
    double prev = 0.0;
    for (double th = 0.01; th <= pi; th += 0.01) {
        const double e = resonance_energy(kOmega5, th);
        EXPECT_GT(e, prev);
        prev = e;
    }
}

TEST(ClosestApproach, ReachesZeroOnTheResonanceLine) {
    const double k = kOmega5 / constants::c;
    for (double th : {0.3, 1.0, 2.0, 3.0}) {
        const double p1 = k * std::sin(th / 2);
        const auto a = closest_resonance_approach(p1, pi / 2 - th / 2, k);
        EXPECT_NEAR(a.mu_min, 0.0, 1e-14);
        EXPECT_NEAR(a.theta, th, 1e-7);
        EXPECT_EQ(a.Phi, pi);
    }
    // the reported minimum is attained and nothing on a grid beats it
    const double p1 = 0.7, phi1 = 0.9;
    const auto a = closest_resonance_approach(p1, phi1, k);
    const auto at = resolve(Target::positronium(), point(kOmega5, 0.5 * p1 * p1, a.theta, phi1, a.Phi));
    EXPECT_NEAR(at.mu, a.mu_min, 1e-12);
    for (double th = 0.0; th <= pi; th += pi / 180) {
        for (double Ph = 0.0; Ph < 2 * pi; Ph += pi / 36) {
            const auto r = resolve(Target::positronium(), point(kOmega5, 0.5 * p1 * p1, th, phi1, Ph));
            EXPECT_GE(r.mu, a.mu_min - 1e-12);
        }
    }
}
