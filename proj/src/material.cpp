#include "casimir/material.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace casimir {

void ShellSpec::validate() const {
    if (!std::isfinite(radius_nm) || radius_nm <= 0.0)
        throw std::domain_error("ShellSpec: radius must be positive");
    if (!std::isfinite(omega_invnm) || omega_invnm < 0.0)
        throw std::domain_error("ShellSpec: plasma wavenumber must be non-negative");
}

void AtomModel::validate() const {
    if (oscillators.empty())
        throw std::domain_error("AtomModel: needs at least one oscillator");
    for (const Oscillator& o : oscillators) {
        if (!std::isfinite(o.strength) || o.strength <= 0.0)
            throw std::domain_error("AtomModel: oscillator strength must be positive");
        if (!std::isfinite(o.omega_eV) || o.omega_eV <= 0.0)
            throw std::domain_error("AtomModel: oscillator frequency must be positive");
    }
}

double AtomModel::static_polarizability_nm3() const {
    double a = 0.0;
    for (const Oscillator& o : oscillators) a += (o.strength / o.omega_eV) * (o.strength / o.omega_eV);
    return a;
}

double AtomModel::min_omega_eV() const {
    double w = std::numeric_limits<double>::infinity();
    for (const Oscillator& o : oscillators) w = std::min(w, o.omega_eV);
    return w;
}

double AtomModel::wavenumber_invnm() const { return min_omega_eV() / units::hbar_c_eV_nm; }

double polarizability_imag_axis(const AtomModel& atom, double omega_eV) {
    atom.validate();
    if (!std::isfinite(omega_eV) || omega_eV < 0.0)
        throw std::domain_error("polarizability_imag_axis: frequency must be non-negative");
    double a = 0.0;
    for (const Oscillator& o : atom.oscillators)
        a += o.strength * o.strength / (omega_eV * omega_eV + o.omega_eV * o.omega_eV);
    return a;
}

AtomModel hydrogen_default() {
    const double alpha0 = 4.50 * units::au_polarizability_nm3;  // nm^3
    const double omega = 11.65;                                 // eV
    return AtomModel{{Oscillator{std::sqrt(alpha0) * omega, omega}}, "hydrogen"};
}

ShellSpec c60_default() {
    const double radius = 0.342;  // nm
    const double q = 4.94e-4;
    return ShellSpec{radius, q / radius};
}

AtomModel parse_atom_model(std::istream& in, const std::string& label) {
    AtomModel atom;
    atom.label = label;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double g = 0.0, w = 0.0;
        if (!(ls >> g)) continue;  // blank or comment-only line
        if (!(ls >> w))
            throw std::runtime_error(label + ":" + std::to_string(lineno) +
                                     ": expected two columns \"g omega_eV\"");
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error(label + ":" + std::to_string(lineno) + ": trailing field '" +
                                     extra + "'");
        if (!(g > 0.0) || !(w > 0.0) || !std::isfinite(g) || !std::isfinite(w))
            throw std::runtime_error(label + ":" + std::to_string(lineno) +
                                     ": oscillator parameters must be positive");
        atom.oscillators.push_back({g, w});
    }
    if (atom.oscillators.empty())
        throw std::runtime_error(label + ": no oscillators found");
    return atom;
}

AtomModel load_atom_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open atom file '" + path + "'");
    return parse_atom_model(in, path);
}

}  // namespace casimir
