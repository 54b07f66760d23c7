#pragma once

#include "casimir/material.hpp"
#include "casimir/riccati_bessel.hpp"

namespace casimir {

// Geometric numerators of one angular-momentum mode at imaginary wavenumber
// k, with x = kR and z = k(R+d):
//   te_num = s_l^2(x) e_l^2(z)
//   tm_num = s_l'^2(x) e_l'^2(z) + s_l'^2(x) e_l^2(z) (nu^2 - 1/4)/z^2
// Both are positive and decay at least as e^{-2kd}, which is applied as an
// explicit factor on the scaled Bessel products.
struct ModeKernel {
    int l = 0;
    double k_invnm = 0.0;
    double te_num = 0.0;
    double tm_num = 0.0;
};

// Conductor-limit kernels, already divided by the limiting mode response:
//   te = s_l^2(x) e_l^2(z) / (s_l(x) e_l(x))
//   tm = -[s_l'^2(x) e_l'^2(z) + s_l'^2(x) e_l^2(z)(nu^2-1/4)/z^2] / (s_l'(x) e_l'(x))
struct BoyerKernel {
    int l = 0;
    double k_invnm = 0.0;
    double te = 0.0;
    double tm = 0.0;
};

// Jost functions on the imaginary axis,
//   f_TE(ik) = 1 + (Omega/k) s_l(x) e_l(x)
//   f_TM(ik) = 1 - (Omega/k) s_l'(x) e_l'(x)
// with x = kR.  Both are >= 1 for Omega >= 0 and non-decreasing in Omega.
// Summations start at l = 1; l = 0 carries no electromagnetic mode.
double jost_te(int l, double k_invnm, const ShellSpec& shell);
double jost_tm(int l, double k_invnm, const ShellSpec& shell);

ModeKernel mode_kernel(int l, double k_invnm, double radius_nm, double dist_nm);
BoyerKernel boyer_kernel(int l, double k_invnm, double radius_nm, double dist_nm);

// Pair-level forms for callers that already hold the scaled Bessel values
// at x = kR (px) and z = k(R+d) (pz).
inline double jost_te(const ScaledBesselPair& px, double omega_over_k) {
    return 1.0 + omega_over_k * px.se();
}
inline double jost_tm(const ScaledBesselPair& px, double omega_over_k) {
    return 1.0 - omega_over_k * px.dsde();
}
ModeKernel mode_kernel(const ScaledBesselPair& px, const ScaledBesselPair& pz, double k_invnm,
                       double dist_nm);
BoyerKernel boyer_kernel(const ScaledBesselPair& px, const ScaledBesselPair& pz, double k_invnm,
                         double dist_nm);

}  // namespace casimir
