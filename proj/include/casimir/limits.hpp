#pragma once

#include "casimir/material.hpp"

namespace casimir {

// One row of a regime-comparison report.
enum class Regime { near, far, plate };

struct AsymptoteReport {
    double d_nm = 0.0;
    double e_full_eV = 0.0;
    double e_limit_eV = 0.0;
    double rel_dev = 0.0;  // |e_full - e_limit| / |e_full|
    Regime regime = Regime::near;
};

// Retardation crossover of the atom-plate interaction,
//   S(v) = (1/3) Int_0^inf dt e^{-t} [ (1+t)/(1+t^2/4v^2) + t/(1+t^2/4v^2)^2 ],
// v = d k_a.  Strictly increasing from S ~ pi v/3 (v -> 0, the d^{-3} law)
// to S -> 1 (v -> inf, the retarded d^{-4} law).  Fixed composite panels,
// no adaptivity; accurate to ~1e-14.
double plate_S(double v);

// Atom-plate energy E = -(3 hbar c / 8 pi d^4) sum_k alpha_k(0) S(d k_k),
// summed per oscillator (the energy is linear in the polarizability).
double plate_energy(const AtomModel& atom, double d_nm);

// Near-zone (non-retarded) law E = -(hbar c / 8 d^3) sum_k alpha_k(0) k_k.
double near_field_energy(const AtomModel& atom, double d_nm);

// Finite-conductivity roll-off of the far-field TM response,
//   F(a) = (8a^2/23) Int_0^inf (y^4+2y^3+5y^2+6y+3)/(3y^2+2a^2) e^{-2y} dy,
// with a^2 = d^2 Omega / R.  F(0) = 0, strictly increasing, F(inf) = 1;
// F(a) ~ 2 pi sqrt(6) a / 23 for small a.
double far_field_F(double a);

// Asymptotic d^{-7} law, E = -hbar c alpha(0) R^3 (53Q+138)/(8 pi (3+Q) d^7).
// Valid for d >> R, d >> 1/k_a and d >> sqrt(R/Omega); the validity scales
// are reported by far_field_validity, not enforced.
double far_field_energy(const ShellSpec& shell, const AtomModel& atom, double d_nm);

// Dimensionless far-field S with the conductivity roll-off kept,
//   S = (R/d)^3 [ 7Q/(3(3+Q)) + (46/3) F(a) ].
double far_field_S(const ShellSpec& shell, const AtomModel& atom, double d_nm);

// Distance scales the far-field law assumes large against.  The conduction
// scale sqrt(R/Omega) is infinite for Omega = 0: the d^{-7} law never
// applies to an uncharged shell.
struct FarFieldValidity {
    double radius_scale_nm;      // R
    double atom_scale_nm;        // 1/k_a
    double conduction_scale_nm;  // sqrt(R/Omega)
    double min_distance(double factor = 1.0) const;
};
FarFieldValidity far_field_validity(const ShellSpec& shell, const AtomModel& atom);

// Static polarizability the shell shows in the far-field two-atom analogy,
// alpha_f = (53Q+138)/(46Q+138) R^3; between R^3 and (53/46) R^3.
struct EffectivePolarizability {
    double nm3;
    double m3;
};
EffectivePolarizability effective_polarizability(const ShellSpec& shell);

}  // namespace casimir
