#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir {

// Internal unit system is (eV, nm): lengths in nm, energies in eV,
// wavenumbers in 1/nm, polarizabilities in nm^3.  k[1/nm] = omega[eV]/hbar_c.
namespace units {
inline constexpr double hbar_c_eV_nm = 197.3269804;
inline constexpr double au_polarizability_nm3 = 1.482e-4;  // 1 a.u. = 1.482e-31 m^3
inline constexpr double nm3_to_m3 = 1e-27;
}  // namespace units

// Infinitely thin conductive sphere in the hydrodynamic model: radius R and
// plasma wavenumber Omega = 4 pi n e^2 / (m c^2).
struct ShellSpec {
    double radius_nm = 0.0;
    double omega_invnm = 0.0;

    double q() const { return omega_invnm * radius_nm; }  // Q = Omega R
    void validate() const;
};

// One polarizability oscillator.  `strength` is g in eV nm^{3/2}, so that
// g^2/(omega^2 + omega_k^2) comes out in nm^3 directly.
struct Oscillator {
    double strength = 0.0;
    double omega_eV = 0.0;
};

struct AtomModel {
    std::vector<Oscillator> oscillators;
    std::string label;

    void validate() const;
    double static_polarizability_nm3() const;  // alpha(0) = sum g_k^2/omega_k^2
    double min_omega_eV() const;
    // Resonance wavenumber of the softest oscillator, omega_min/hbar_c.
    double wavenumber_invnm() const;
    bool single_oscillator() const { return oscillators.size() == 1; }
};

// alpha(i omega) = sum_k g_k^2/(omega^2 + omega_k^2), in nm^3.
// Positive and non-increasing in omega; omega < 0 is a domain error.
double polarizability_imag_axis(const AtomModel& atom, double omega_eV);

// Hydrogen in the single-oscillator model: alpha(0) = 4.50 a.u.,
// omega_a = 11.65 eV (k_a = 0.059 1/nm).
AtomModel hydrogen_default();

// C60 shell: R = 0.342 nm with Q = Omega R = 4.94e-4.  Q and R are the
// stored quantities; Omega is derived.
ShellSpec c60_default();

// Atom model file: one oscillator per line, two columns "g_eV_nm32 omega_eV",
// '#' starts a comment.  Throws std::runtime_error with the offending line
// number on malformed input.
AtomModel parse_atom_model(std::istream& in, const std::string& label);
AtomModel load_atom_file(const std::string& path);

}  // namespace casimir
