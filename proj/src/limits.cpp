#include "casimir/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;

// Composite fixed-rule quadrature on [0, T]: dyadic panels from w/64 up to
// width 2 resolve the inner scale w, arithmetic width-2 panels cover the
// exponential tail.
template <class F>
double composite_scaled(F&& f, double w, double upper) {
    double total = 0.0;
    double lo = 0.0;
    double hi = std::min(w / 64.0, upper);
    while (lo < upper) {
        total += integrate_panel(f, lo, hi);
        lo = hi;
        const double width = hi;
        hi = (width < 2.0) ? std::min(2.0 * hi, upper) : std::min(hi + 2.0, upper);
        if (hi <= lo) break;
    }
    return total;
}

void require_positive_distance(double d_nm) {
    if (!std::isfinite(d_nm) || d_nm <= 0.0)
        throw std::domain_error("limits: distance d must be positive");
}

}  // namespace

double plate_S(double v) {
    if (!std::isfinite(v) || v <= 0.0) throw std::domain_error("plate_S: v must be positive");
    const double inv2v = 1.0 / (2.0 * v);
    auto f = [inv2v](double t) {
        const double u = t * inv2v;
        const double den = 1.0 + u * u;
        return std::exp(-t) * ((1.0 + t) / den + t / (den * den));
    };
    const double w = std::min(2.0 * v, 1.0);
    return composite_scaled(f, w, 60.0) / 3.0;
}

double plate_energy(const AtomModel& atom, double d_nm) {
    atom.validate();
    require_positive_distance(d_nm);
    double sum = 0.0;
    for (const Oscillator& o : atom.oscillators) {
        const double alpha_k = (o.strength / o.omega_eV) * (o.strength / o.omega_eV);
        sum += alpha_k * plate_S(d_nm * o.omega_eV / units::hbar_c_eV_nm);
    }
    return -3.0 * units::hbar_c_eV_nm * sum / (8.0 * pi * d_nm * d_nm * d_nm * d_nm);
}

double near_field_energy(const AtomModel& atom, double d_nm) {
    atom.validate();
    require_positive_distance(d_nm);
    double sum = 0.0;
    for (const Oscillator& o : atom.oscillators) {
        const double alpha_k = (o.strength / o.omega_eV) * (o.strength / o.omega_eV);
        sum += alpha_k * o.omega_eV / units::hbar_c_eV_nm;
    }
    return -units::hbar_c_eV_nm * sum / (8.0 * d_nm * d_nm * d_nm);
}

double far_field_F(double a) {
    if (!std::isfinite(a) || a < 0.0) throw std::domain_error("far_field_F: a must be >= 0");
    if (a == 0.0) return 0.0;
    const double two_a2 = 2.0 * a * a;
    auto f = [two_a2](double y) {
        const double p = ((y + 2.0) * y * y + 5.0 * y + 6.0) * y + 3.0;
        return p / (3.0 * y * y + two_a2) * std::exp(-2.0 * y);
    };
    const double w = std::min(a, 1.0);
    return 8.0 * a * a / 23.0 * composite_scaled(f, w, 40.0);
}

double far_field_energy(const ShellSpec& shell, const AtomModel& atom, double d_nm) {
    shell.validate();
    atom.validate();
    require_positive_distance(d_nm);
    const double q = shell.q();
    const double r3 = shell.radius_nm * shell.radius_nm * shell.radius_nm;
    const double d = d_nm;
    return -units::hbar_c_eV_nm * atom.static_polarizability_nm3() * r3 * (53.0 * q + 138.0) /
           (8.0 * pi * (3.0 + q) * d * d * d * d * d * d * d);
}

double far_field_S(const ShellSpec& shell, const AtomModel& atom, double d_nm) {
    shell.validate();
    atom.validate();
    require_positive_distance(d_nm);
    const double q = shell.q();
    const double a = d_nm * std::sqrt(shell.omega_invnm / shell.radius_nm);
    const double ratio = shell.radius_nm / d_nm;
    return ratio * ratio * ratio * (7.0 * q / (3.0 * (3.0 + q)) + 46.0 / 3.0 * far_field_F(a));
}

double FarFieldValidity::min_distance(double factor) const {
    return factor * std::max({radius_scale_nm, atom_scale_nm, conduction_scale_nm});
}

FarFieldValidity far_field_validity(const ShellSpec& shell, const AtomModel& atom) {
    shell.validate();
    atom.validate();
    const double conduction =
        shell.omega_invnm > 0.0 ? std::sqrt(shell.radius_nm / shell.omega_invnm)
                                : std::numeric_limits<double>::infinity();
    return {shell.radius_nm, 1.0 / atom.wavenumber_invnm(), conduction};
}

EffectivePolarizability effective_polarizability(const ShellSpec& shell) {
    shell.validate();
    const double q = shell.q();
    const double r3 = shell.radius_nm * shell.radius_nm * shell.radius_nm;
    const double nm3 = (53.0 * q + 138.0) / (46.0 * q + 138.0) * r3;
    return {nm3, nm3 * units::nm3_to_m3};
}

}  // namespace casimir
