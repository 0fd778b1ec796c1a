#include <gtest/gtest.h>

#include <cmath>

#include "compton/amplitudes.hpp"
#include "compton/oracle.hpp"
#include "test_support.hpp"

using namespace compton;
using compton::testing::rel_diff;

namespace {

struct Pair {
    Complex plus, minus;
};

Pair closed_form(double q, double p, double cs, double Z) {
    const Vec3 qv{0.0, 0.0, q};
    const Vec3 pv{p * std::sqrt(1.0 - cs * cs), 0.0, p * cs};
    return {j0_coulomb(qv, pv, Z), j0_coulomb(-qv, pv, Z)};
}

Pair numeric(double q, double p, double cs, double Z, const oracle::OracleConfig& cfg = {}) {
    return {oracle::j0_numeric(q, p, cs, Z, cfg), oracle::j0_numeric(q, p, -cs, Z, cfg)};
}

void expect_agreement(const Pair& a, const Pair& b) {
    EXPECT_LE(rel_diff(std::norm(a.plus), std::norm(b.plus)), 1e-4);
    EXPECT_LE(rel_diff(std::norm(a.minus), std::norm(b.minus)), 1e-4);
    EXPECT_NEAR(std::arg((a.plus / a.minus) / (b.plus / b.minus)), 0.0, 1e-4);
}

}  // namespace

TEST(CoulombSeries, FreeLimitIsRiccatiBessel) {
    for (int l = 0; l <= 12; ++l) {
        for (double rho = 0.05; rho <= 2.0; rho += 0.15) {
            const double expected = rho * std::sph_bessel(static_cast<unsigned>(l), rho);
            const auto f = oracle::coulomb_f_series(l, 0.0, rho);
            EXPECT_LE(rel_diff(f.F, expected), 1e-12) << l << ' ' << rho;
        }
    }
}

TEST(CoulombSeries, DerivativeMatchesDifferenceQuotient) {
    for (int l : {0, 3, 10}) {
        for (double eta : {-2.0, -0.5, 0.7}) {
            const double rho = 1.3, h = 1e-5;
            const double fd = (oracle::coulomb_f_series(l, eta, rho + h).F - oracle::coulomb_f_series(l, eta, rho - h).F) / (2 * h);
            EXPECT_LE(rel_diff(oracle::coulomb_f_series(l, eta, rho).dF, fd), 1e-8);
        }
    }
}

TEST(Oracle, SpecifiedPositroniumPoint) {
    oracle::OracleConfig cfg;
    cfg.l_max = 25;
    expect_agreement(numeric(0.9, 0.7, 0.5, 0.5, cfg), closed_form(0.9, 0.7, 0.5, 0.5));
}

TEST(Oracle, SpecifiedHydrogenPoint) {
    expect_agreement(numeric(1.2, 1.0, -0.3, 1.0), closed_form(1.2, 1.0, -0.3, 1.0));
}

TEST(Oracle, RandomPoints) {
    compton::testing::Rng rng(41);
    for (int i = 0; i < 5; ++i) {
        const double Z = i % 2 ? 1.0 : 0.5;
        const double q = rng.uniform(0.3, 1.5), p = rng.uniform(0.3, 1.5), cs = rng.uniform(-1.0, 1.0);
        expect_agreement(numeric(q, p, cs, Z), closed_form(q, p, cs, Z));
    }
}

TEST(Oracle, TailBoundsTheTruncationChange) {
    const double q = 0.9, p = 0.7, cs = 0.5, Z = 0.5;
    oracle::OracleConfig cfg;
    cfg.l_max = 25;
    const auto radial = oracle::radial_integrals(q, p, Z, cfg);
    const auto full = oracle::sum_partial_waves(radial, p, cs, Z);
    const auto cut = oracle::sum_partial_waves({radial.begin(), radial.begin() + 21}, p, cs, Z);
    EXPECT_LE(std::abs(full.value - cut.value), cut.tail * std::abs(cut.value));
}

TEST(Oracle, ReflectedGeometry) {
    // mirroring both vectors through the xy-plane keeps the angle between them
    const double q = 0.8, p = 0.6, cs = 0.2, Z = 1.0;
    const Complex num = oracle::j0_numeric(q, p, cs, Z);
    const Vec3 qv{0.0, 0.0, -q};
    const Vec3 pv{p * std::sqrt(1.0 - cs * cs), 0.0, -p * cs};
    EXPECT_LE(rel_diff(std::abs(num), std::abs(j0_coulomb(qv, pv, Z))), 1e-4);
}

TEST(Oracle, ConfigAndDomain) {
    oracle::OracleConfig bad;
    bad.l_max = 41;
    EXPECT_THROW(oracle::j0_numeric(1.0, 1.0, 0.0, 1.0, bad), DomainError);
    bad = {};
    bad.radial_cutoff = 40.0;
    EXPECT_THROW(oracle::j0_numeric(1.0, 1.0, 0.0, 1.0, bad), DomainError);
    EXPECT_THROW(oracle::j0_numeric(1.0, 0.04, 0.0, 1.0), DomainError);
    EXPECT_THROW(oracle::j0_numeric(0.0, 1.0, 0.0, 1.0), DomainError);
    EXPECT_THROW(oracle::j0_numeric(1.0, 1.0, 1.5, 1.0), DomainError);

    oracle::OracleConfig tight;
    tight.l_max = 2;
    tight.tolerance = 1e-12;
    EXPECT_THROW(oracle::j0_numeric(1.4, 1.4, 0.3, 0.5, tight), ConvergenceError);
}
