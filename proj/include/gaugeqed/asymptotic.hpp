#pragma once

#include "gaugeqed/hilbert.hpp"
#include "gaugeqed/params.hpp"

namespace gaugeqed {

// Closed-form large-coupling and small-coupling limits, used as independent
// test oracles. Built from coherent-state amplitudes and qubit rotations
// only; no shared code with the diagonalization path.

enum class AsymptoticFlavor {
    CavityDipole,   // (|-i eta>|+x> -+ |+i eta>|-x>)/sqrt(2), entangled cats
    CavityCoulomb,  // |0>|-+z>, separable
    CircuitFlux,    // (|-eta>|+x> -+ |+eta>|-x>)/sqrt(2), real amplitudes
};

struct LargeEtaStates {
    Vector psi_minus;  // lower of the quasi-degenerate pair
    Vector psi_plus;
    double truncation_defect = 0.0;  // |1 - norm^2| before renormalization
};

/// The two lowest-energy states for eta omega_c >> omega_0, renormalized on
/// the truncated space. Throws TruncationError when the cutoff cannot hold
/// the coherent amplitudes (defect > 1e-4).
LargeEtaStates large_eta_states(const RabiParams& p, const HilbertSpec& spec,
                                AsymptoticFlavor flavor);

struct JcDoublet {
    double e_minus = 0.0;  // transition energies from the ground state
    double e_plus = 0.0;
};

/// Jaynes-Cummings first-doublet transition energies
/// E_-+ = (omega_c + omega_0)/2 -+ sqrt(g^2 + delta^2/4), delta = omega_0 - omega_c.
/// Valid as an oracle for eta <~ 0.02.
JcDoublet jc_doublet(const RabiParams& p);

}  // namespace gaugeqed
