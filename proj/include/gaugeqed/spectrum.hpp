#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gaugeqed/hamiltonians.hpp"

namespace gaugeqed {

// Dressed-state label in the Jaynes-Cummings notation: ground |0~>, doublet
// members |n~ +-related>, or unassigned when continuation is ambiguous.
struct StateLabel {
    enum class Kind { Ground, Minus, Plus, Unassigned };
    Kind kind = Kind::Unassigned;
    int n = 0;

    std::string str() const;
    bool operator==(const StateLabel&) const = default;
};

struct Spectrum {
    RealVector energies;            // ascending, units of omega_c
    Matrix states;                  // columns, orthonormal, phase-fixed
    std::vector<StateLabel> labels; // empty until label_states
    int converged_levels = 0;
    HilbertSpec spec;
    Gauge gauge = Gauge::Coulomb;
    double omega_c = 1.0;
    double omega_0 = 1.0;
    double eta = 0.0;
    double theta = 0.0;

    int dim() const { return static_cast<int>(energies.size()); }
    double transition_energy(int j, int k = 0) const { return energies[j] - energies[k]; }
    Vector state(int j) const { return states.col(j); }
};

/// Diagonalize a tagged Hamiltonian directly (no convergence control).
Spectrum diagonalize(const GaugeHamiltonian& h);

using HamiltonianBuilder = std::function<GaugeHamiltonian(const HilbertSpec&)>;

struct ConvergenceOptions {
    int n_levels = 8;
    double rel_tol = 1e-8;
    double abs_floor = 1e-9;   // for near-degenerate level differences
    int initial_cutoff = 0;    // 0 = default_cutoff(eta)
    int max_cutoff = 512;
};

/// Diagonalize with the cutoff escalated until the lowest n_levels energy
/// differences E_j - E_0 are stable under cutoff doubling. Returns the
/// spectrum at the doubled (finer) cutoff. Throws ConvergenceError at the
/// cap, reporting the last two estimates.
Spectrum diagonalize_converged(const HamiltonianBuilder& builder, double eta_hint,
                               const ConvergenceOptions& opts = {});

// Converged-spectrum helpers for the standard builders.
Spectrum coulomb_spectrum(const RabiParams& p, const ConvergenceOptions& opts = {});
Spectrum dipole_spectrum(const RabiParams& p, const ConvergenceOptions& opts = {});
Spectrum flux_spectrum(const CircuitParams& p, const ConvergenceOptions& opts = {});
Spectrum charge_spectrum(const CircuitParams& p, const ConvergenceOptions& opts = {});

Spectrum spectrum_of(Gauge g, const RabiParams& p, const ConvergenceOptions& opts = {});

struct LabelingOptions {
    double eta_start = 1e-3;
    double eta_step = 0.02;
    int n_levels = 8;
    double ambiguity_gap = 0.05;  // overlap margin below which we refine / unassign
    int max_refinements = 4;
    int cutoff = 0;               // 0 = default_cutoff(target eta)
    double theta = 0.0;           // flux-gauge sweeps only
};

/// Assign |0~>, |n~ +/-> labels to the lowest levels of the target spectrum
/// by adiabatic continuation along an eta grid from eta_start (where JC
/// labels are unambiguous) to spectrum.eta. Ambiguous matchings are refined
/// by halving the local step; if still ambiguous the level is Unassigned.
Spectrum label_states(Spectrum spectrum, const LabelingOptions& opts = {});

/// Labeled spectra for a whole eta sweep in one continuation pass (all at a
/// common cutoff so eigenvectors can be tracked point to point).
std::vector<Spectrum> labeled_sweep(Gauge g, const RabiParams& base,
                                    const std::vector<double>& etas,
                                    const LabelingOptions& opts = {});

/// Index of the lowest level carrying the requested label, if assigned.
std::optional<int> find_label(const Spectrum& s, StateLabel want);

}  // namespace gaugeqed
