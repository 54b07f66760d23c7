#pragma once

#include <vector>

#include "casimir/limits.hpp"
#include "casimir/material.hpp"

namespace casimir {

// Knobs of the l-sum / k-integral evaluation.
struct EvalConfig {
    double quad_rel_tol = 1e-8;  // per-mode adaptive quadrature target
    double lsum_rel_tol = 1e-9;  // l-tail termination threshold
    int lsum_consecutive = 2;    // successive negligible terms required
    int l_hard_max = 2000;

    // Upper integration bound from the explicit e^{-2kd} envelope: the
    // discarded tail is below tol with `k_cutoff_margin` spare decades.
    double k_cutoff_margin = 30.0;
    double k_cutoff(double d_nm, double tol) const;

    void validate() const;
};

struct EnergyResult {
    double energy_eV = 0.0;          // <= 0
    double s_dimensionless = 0.0;    // -E 8 pi d^4 / (3 hbar c alpha(0))
    int l_used = 0;                  // highest partial wave accumulated
    double quad_error_estimate = 0.0;
    bool converged = false;
};

// Interaction energy of an atom at distance d from the shell surface,
//   E = -(hbar c Omega / pi (R+d)^2) sum_{l>=1} nu Int_0^inf dk alpha(i hbar c k)
//         { te_num/f_TE + tm_num/f_TM },
// accumulated in fixed ascending-l order (bitwise reproducible).  Omega = 0
// short-circuits to exactly zero.  Exhausting l_hard_max before the tail
// rule fires yields converged = false, not an exception.
EnergyResult interaction_energy(const ShellSpec& shell, const AtomModel& atom, double d_nm,
                                const EvalConfig& cfg = {});

// Perfect-conductor (Boyer) limit; kernels are the closed Omega -> inf
// expressions, not a large-Omega evaluation of the finite form.
EnergyResult boyer_energy(double radius_nm, const AtomModel& atom, double d_nm,
                          const EvalConfig& cfg = {});

enum class SVariant { finite, boyer };
double dimensionless_S(const ShellSpec& shell, const AtomModel& atom, double d_nm,
                       const EvalConfig& cfg, SVariant variant);

struct SweepRow {
    double d_nm = 0.0;
    double e_full_eV = 0.0;
    double e_boyer_eV = 0.0;
    double e_plate_eV = 0.0;
    double e_near_eV = 0.0;
    double e_far_eV = 0.0;
    double s_omega = 0.0;
    bool converged = true;
};

// One row per grid point; grid must be strictly increasing and positive.
// Rows may be computed in parallel but are returned in grid order.
std::vector<SweepRow> sweep(const ShellSpec& shell, const AtomModel& atom,
                            const std::vector<double>& d_grid, const EvalConfig& cfg = {});

// Exact energy against one limiting law at a single distance.
AsymptoteReport asymptote_point(const ShellSpec& shell, const AtomModel& atom, double d_nm,
                                Regime regime, const EvalConfig& cfg = {});

// Plain serial evaluation path, kept as the reference the parallel kernels
// are checked against (results must match bitwise).
namespace reference {
EnergyResult interaction_energy(const ShellSpec& shell, const AtomModel& atom, double d_nm,
                                const EvalConfig& cfg = {});
EnergyResult boyer_energy(double radius_nm, const AtomModel& atom, double d_nm,
                          const EvalConfig& cfg = {});
}  // namespace reference

}  // namespace casimir
