#include "casimir/response.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

namespace {

void check_mode_args(int l, double k) {
    if (l < 1) throw std::domain_error("response: mode sums start at l = 1");
    if (!std::isfinite(k) || k <= 0.0)
        throw std::domain_error("response: wavenumber k must be positive");
}

}  // namespace

double jost_te(int l, double k_invnm, const ShellSpec& shell) {
    check_mode_args(l, k_invnm);
    shell.validate();
    const ScaledBesselPair px = eval_pair(l, k_invnm * shell.radius_nm);
    return jost_te(px, shell.omega_invnm / k_invnm);
}

double jost_tm(int l, double k_invnm, const ShellSpec& shell) {
    check_mode_args(l, k_invnm);
    shell.validate();
    const ScaledBesselPair px = eval_pair(l, k_invnm * shell.radius_nm);
    return jost_tm(px, shell.omega_invnm / k_invnm);
}

ModeKernel mode_kernel(const ScaledBesselPair& px, const ScaledBesselPair& pz, double k_invnm,
                       double dist_nm) {
    const double nu = px.l + 0.5;
    const double z = pz.x;
    // cross-argument scale: e^{x-z} 2^{scale2(z)-scale2(x)} = e^{-kd} 2^{...}
    const double cross = std::ldexp(std::exp(-k_invnm * dist_nm), pz.scale2 - px.scale2);
    const double te = px.s_hat * pz.e_hat * cross;
    const double tma = px.ds_hat * pz.de_hat * cross;
    const double tmb = px.ds_hat * pz.e_hat * cross;
    return {px.l, k_invnm, te * te, tma * tma + tmb * tmb * (nu * nu - 0.25) / (z * z)};
}

BoyerKernel boyer_kernel(const ScaledBesselPair& px, const ScaledBesselPair& pz, double k_invnm,
                         double dist_nm) {
    const ModeKernel kern = mode_kernel(px, pz, k_invnm, dist_nm);
    // s_l' e_l' < 0, so both kernels come out positive.
    return {px.l, k_invnm, kern.te_num / px.se(), -kern.tm_num / px.dsde()};
}

ModeKernel mode_kernel(int l, double k_invnm, double radius_nm, double dist_nm) {
    check_mode_args(l, k_invnm);
    if (!std::isfinite(radius_nm) || radius_nm <= 0.0)
        throw std::domain_error("mode_kernel: radius must be positive");
    if (!std::isfinite(dist_nm) || dist_nm <= 0.0)
        throw std::domain_error("mode_kernel: the atom must sit outside the shell (d > 0)");
    return mode_kernel(eval_pair(l, k_invnm * radius_nm),
                       eval_pair(l, k_invnm * (radius_nm + dist_nm)), k_invnm, dist_nm);
}

BoyerKernel boyer_kernel(int l, double k_invnm, double radius_nm, double dist_nm) {
    check_mode_args(l, k_invnm);
    if (!std::isfinite(radius_nm) || radius_nm <= 0.0)
        throw std::domain_error("boyer_kernel: radius must be positive");
    if (!std::isfinite(dist_nm) || dist_nm <= 0.0)
        throw std::domain_error("boyer_kernel: the atom must sit outside the shell (d > 0)");
    return boyer_kernel(eval_pair(l, k_invnm * radius_nm),
                        eval_pair(l, k_invnm * (radius_nm + dist_nm)), k_invnm, dist_nm);
}

}  // namespace casimir
