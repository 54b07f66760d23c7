#include "casimir/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "casimir/quadrature.hpp"
#include "casimir/response.hpp"
#include "casimir/riccati_bessel.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int block_size = 16;  // l-terms evaluated per parallel batch

struct OscTerm {
    double g2;  // strength^2
    double w2;  // omega^2
};

// k-integrand of one partial wave, in the compressed variable
// u = k/(k + k_scale).  The integrand is finite at k = 0 and carries the
// explicit e^{-2kd} envelope through the scaled Bessel products.
struct ModeIntegrand {
    int l;
    double radius, dist;
    double omega;  // plasma wavenumber; ignored on the Boyer path
    bool boyer;
    double k_scale;
    const std::vector<OscTerm>* osc;

    double alpha(double k) const {
        const double w = units::hbar_c_eV_nm * k;
        double a = 0.0;
        for (const OscTerm& o : *osc) a += o.g2 / (w * w + o.w2);
        return a;
    }

    double operator()(double u) const {
        const double k = k_scale * u / (1.0 - u);
        const double jac = k_scale / ((1.0 - u) * (1.0 - u));
        const ScaledBesselPair px = eval_pair(l, k * radius);
        const ScaledBesselPair pz = eval_pair(l, k * (radius + dist));
        const ModeKernel kern = mode_kernel(px, pz, k, dist);
        if (boyer) return jac * k * alpha(k) * (kern.te_num / px.se() - kern.tm_num / px.dsde());
        const double ok = omega / k;
        return jac * alpha(k) *
               (kern.te_num / jost_te(px, ok) + kern.tm_num / jost_tm(px, ok));
    }
};

struct LTerm {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

struct Problem {
    double radius, dist, omega;
    bool boyer;
    std::vector<OscTerm> osc;
    double k_scale, u_max;
    double quad_rel_tol;
};

LTerm eval_l_term(const Problem& p, int l) {
    ModeIntegrand f{l, p.radius, p.dist, p.omega, p.boyer, p.k_scale, &p.osc};
    const QuadResult q = integrate_adaptive(f, 0.0, p.u_max, p.quad_rel_tol);
    const double nu = l + 0.5;
    return {nu * q.value, nu * q.error, q.converged};
}

Problem make_problem(double radius, double omega, bool boyer, const AtomModel& atom, double d,
                     const EvalConfig& cfg) {
    Problem p;
    p.radius = radius;
    p.dist = d;
    p.omega = omega;
    p.boyer = boyer;
    for (const Oscillator& o : atom.oscillators)
        p.osc.push_back({o.strength * o.strength, o.omega_eV * o.omega_eV});
    p.k_scale = atom.wavenumber_invnm();
    const double k_max = cfg.k_cutoff(d, cfg.quad_rel_tol);
    p.u_max = k_max / (k_max + p.k_scale);
    p.quad_rel_tol = cfg.quad_rel_tol;
    return p;
}

// Shared l-sum driver.  Terms may be evaluated in parallel blocks, but the
// accumulation and the termination scan always run in ascending l, so the
// result does not depend on the thread count and matches the serial
// reference bitwise.
EnergyResult accumulate(const Problem& p, const AtomModel& atom, const EvalConfig& cfg,
                        bool parallel) {
    const double length = p.radius + p.dist;
    const double pref = p.boyer ? -units::hbar_c_eV_nm / (pi * length * length)
                                : -units::hbar_c_eV_nm * p.omega / (pi * length * length);
    // Do not test the tail before the angular-momentum barrier at the
    // integrand peak k ~ 1/(2d) has opened: l_min = 2 k_peak (R+d).
    const int l_min = static_cast<int>(std::ceil(length / p.dist));

    double sum = 0.0;
    double err = 0.0;
    int consec = 0;
    int l_used = 0;
    bool tail_done = false;
    bool quads_ok = true;

    auto scan_one = [&](const LTerm& t, int l) {
        sum += t.value;
        err += t.error;
        quads_ok = quads_ok && t.converged;
        l_used = l;
        if (l >= l_min && std::abs(t.value) <= cfg.lsum_rel_tol * std::abs(sum)) {
            if (++consec >= cfg.lsum_consecutive) tail_done = true;
        } else {
            consec = 0;
        }
    };

    if (!parallel) {
        for (int l = 1; l <= cfg.l_hard_max && !tail_done; ++l) scan_one(eval_l_term(p, l), l);
    } else {
        LTerm buf[block_size];
        for (int base = 1; base <= cfg.l_hard_max && !tail_done; base += block_size) {
            const int hi = std::min(base + block_size - 1, cfg.l_hard_max);
#pragma omp parallel for schedule(dynamic)
            for (int l = base; l <= hi; ++l) buf[l - base] = eval_l_term(p, l);
            for (int l = base; l <= hi && !tail_done; ++l) scan_one(buf[l - base], l);
        }
    }

    EnergyResult r;
    r.energy_eV = pref * sum;
    const double d4 = p.dist * p.dist * p.dist * p.dist;
    r.s_dimensionless = -r.energy_eV * 8.0 * pi * d4 /
                        (3.0 * units::hbar_c_eV_nm * atom.static_polarizability_nm3());
    r.l_used = l_used;
    r.quad_error_estimate = std::abs(pref) * err;
    r.converged = tail_done && quads_ok;
    return r;
}

void check_energy_args(const AtomModel& atom, double d_nm, const EvalConfig& cfg) {
    atom.validate();
    cfg.validate();
    if (!std::isfinite(d_nm) || d_nm <= 0.0)
        throw std::domain_error("energy: the atom must sit outside the shell (d > 0)");
}

EnergyResult zero_result() { return EnergyResult{0.0, 0.0, 0, 0.0, true}; }

EnergyResult run_interaction(const ShellSpec& shell, const AtomModel& atom, double d_nm,
                             const EvalConfig& cfg, bool parallel) {
    shell.validate();
    check_energy_args(atom, d_nm, cfg);
    if (shell.omega_invnm == 0.0) return zero_result();  // no coupling, exactly zero
    const Problem p = make_problem(shell.radius_nm, shell.omega_invnm, false, atom, d_nm, cfg);
    return accumulate(p, atom, cfg, parallel);
}

EnergyResult run_boyer(double radius_nm, const AtomModel& atom, double d_nm,
                       const EvalConfig& cfg, bool parallel) {
    if (!std::isfinite(radius_nm) || radius_nm <= 0.0)
        throw std::domain_error("boyer_energy: radius must be positive");
    check_energy_args(atom, d_nm, cfg);
    const Problem p = make_problem(radius_nm, 0.0, true, atom, d_nm, cfg);
    return accumulate(p, atom, cfg, parallel);
}

}  // namespace

double EvalConfig::k_cutoff(double d_nm, double tol) const {
    return (std::log(1.0 / tol) + k_cutoff_margin) / (2.0 * d_nm);
}

void EvalConfig::validate() const {
    if (!(quad_rel_tol > 0.0) || quad_rel_tol >= 1.0)
        throw std::domain_error("EvalConfig: quad_rel_tol must lie in (0, 1)");
    if (!(lsum_rel_tol > 0.0) || lsum_rel_tol >= 1.0)
        throw std::domain_error("EvalConfig: lsum_rel_tol must lie in (0, 1)");
    if (lsum_consecutive < 1) throw std::domain_error("EvalConfig: lsum_consecutive must be >= 1");
    if (l_hard_max < 1 || l_hard_max > max_order)
        throw std::domain_error("EvalConfig: l_hard_max must lie in [1, max_order]");
    if (!(k_cutoff_margin >= 0.0))
        throw std::domain_error("EvalConfig: k_cutoff_margin must be >= 0");
}

EnergyResult interaction_energy(const ShellSpec& shell, const AtomModel& atom, double d_nm,
                                const EvalConfig& cfg) {
    return run_interaction(shell, atom, d_nm, cfg, true);
}

EnergyResult boyer_energy(double radius_nm, const AtomModel& atom, double d_nm,
                          const EvalConfig& cfg) {
    return run_boyer(radius_nm, atom, d_nm, cfg, true);
}

namespace reference {

EnergyResult interaction_energy(const ShellSpec& shell, const AtomModel& atom, double d_nm,
                                const EvalConfig& cfg) {
    return run_interaction(shell, atom, d_nm, cfg, false);
}

EnergyResult boyer_energy(double radius_nm, const AtomModel& atom, double d_nm,
                          const EvalConfig& cfg) {
    return run_boyer(radius_nm, atom, d_nm, cfg, false);
}

}  // namespace reference

double dimensionless_S(const ShellSpec& shell, const AtomModel& atom, double d_nm,
                       const EvalConfig& cfg, SVariant variant) {
    if (variant == SVariant::boyer)
        return boyer_energy(shell.radius_nm, atom, d_nm, cfg).s_dimensionless;
    return interaction_energy(shell, atom, d_nm, cfg).s_dimensionless;
}

std::vector<SweepRow> sweep(const ShellSpec& shell, const AtomModel& atom,
                            const std::vector<double>& d_grid, const EvalConfig& cfg) {
    shell.validate();
    atom.validate();
    cfg.validate();
    for (std::size_t i = 0; i < d_grid.size(); ++i) {
        if (!std::isfinite(d_grid[i]) || d_grid[i] <= 0.0)
            throw std::domain_error("sweep: distances must be positive");
        if (i > 0 && d_grid[i] <= d_grid[i - 1])
            throw std::domain_error("sweep: distance grid must be strictly increasing");
    }
    std::vector<SweepRow> rows(d_grid.size());
    const long n = static_cast<long>(d_grid.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        const double d = d_grid[static_cast<std::size_t>(i)];
        SweepRow row;
        row.d_nm = d;
        const EnergyResult full = reference::interaction_energy(shell, atom, d, cfg);
        const EnergyResult boyer = reference::boyer_energy(shell.radius_nm, atom, d, cfg);
        row.e_full_eV = full.energy_eV;
        row.e_boyer_eV = boyer.energy_eV;
        row.e_plate_eV = plate_energy(atom, d);
        row.e_near_eV = near_field_energy(atom, d);
        row.e_far_eV = far_field_energy(shell, atom, d);
        row.s_omega = full.s_dimensionless;
        row.converged = full.converged && boyer.converged;
        rows[static_cast<std::size_t>(i)] = row;
    }
    return rows;
}

AsymptoteReport asymptote_point(const ShellSpec& shell, const AtomModel& atom, double d_nm,
                                Regime regime, const EvalConfig& cfg) {
    const double e_full = interaction_energy(shell, atom, d_nm, cfg).energy_eV;
    double e_limit = 0.0;
    switch (regime) {
        case Regime::near: e_limit = near_field_energy(atom, d_nm); break;
        case Regime::far: e_limit = far_field_energy(shell, atom, d_nm); break;
        case Regime::plate: e_limit = plate_energy(atom, d_nm); break;
    }
    AsymptoteReport rep;
    rep.d_nm = d_nm;
    rep.e_full_eV = e_full;
    rep.e_limit_eV = e_limit;
    rep.regime = regime;
    if (e_full == 0.0)
        rep.rel_dev = (e_limit == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
    else
        rep.rel_dev = std::abs(e_full - e_limit) / std::abs(e_full);
    return rep;
}

}  // namespace casimir
