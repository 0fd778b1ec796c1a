// FDCS and DDCS for positronium and hydrogen at a few points.

#include <cstdio>

#include "compton/cross_sections.hpp"
#include "compton/quadrature.hpp"

int main() {
    using namespace compton;
    const double omega = to_au(5.0, Unit::keV);
    const double E_e = to_au(27.2, Unit::eV);
    const double deg = constants::pi / 180.0;

    for (const Target target : {Target::positronium(), Target::hydrogen()}) {
        KinematicInput in{omega, E_e, 60 * deg, 60 * deg, 180 * deg, TMode::fixed_unity};
        const CrossSectionSample s = fdcs(target, in);
        const CrossSectionSample b = convert_units(s, CrossSectionUnits::barn_per_eV_sr2);
        std::printf("%-2s FDCS  %.6e au  = %.6e barn/(eV sr^2)\n", target_name(target).data(), s.value, b.value);
    }

    const double omega3 = to_au(3.0, Unit::keV);
    const double E_peak = resonance_energy(omega3, constants::pi);
    std::printf("middle-peak energy at 3 keV: %.4f eV\n", from_au(E_peak, Unit::eV));
    for (const Target target : {Target::positronium(), Target::hydrogen()}) {
        const DdcsResult r = ddcs_phi1(target, omega3, E_peak, 0.0);
        std::printf("%-2s DDCS  %.6e +- %.1e au (%zu evaluations)\n", target_name(target).data(),
                    r.integration.value, r.integration.error_estimate, r.integration.evaluations);
    }
}
