#include "casimir/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "casimir/energy.hpp"
#include "casimir/limits.hpp"
#include "casimir/material.hpp"
#include "casimir/response.hpp"
#include "casimir/riccati_bessel.hpp"

namespace casimir {

std::string format_g17(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, p);
}

namespace {

// Resolved once from the command line before any computation starts.
struct RunConfig {
    ShellSpec shell;
    AtomModel atom;
    EvalConfig eval;
    bool magnitude = false;
    std::string format = "pretty";
    std::vector<std::string> columns;
};

struct ShellOpts {
    double radius = 0.0;
    double omega = -1.0;
    double q = -1.0;
    bool c60 = false;
};

void add_shell_options(CLI::App* cmd, ShellOpts& o) {
    cmd->add_option("--R", o.radius, "shell radius [nm]");
    auto* om = cmd->add_option("--Omega", o.omega, "plasma wavenumber [1/nm]");
    auto* qq = cmd->add_option("--Q", o.q, "dimensionless Q = Omega R");
    om->excludes(qq);
    cmd->add_flag("--c60", o.c60, "C60 preset (R = 0.342 nm, Q = 4.94e-4)");
}

ShellSpec resolve_shell(const ShellOpts& o) {
    if (o.c60) {
        if (o.radius > 0.0 || o.omega >= 0.0 || o.q >= 0.0)
            throw std::domain_error("--c60 cannot be combined with --R/--Omega/--Q");
        return c60_default();
    }
    if (!(o.radius > 0.0)) throw std::domain_error("shell radius --R must be positive (or use --c60)");
    if (o.omega >= 0.0) return ShellSpec{o.radius, o.omega};
    if (o.q >= 0.0) return ShellSpec{o.radius, o.q / o.radius};
    throw std::domain_error("the shell needs --Omega or --Q (or --c60)");
}

AtomModel resolve_atom(const std::string& spec) {
    if (spec == "hydrogen") return hydrogen_default();
    if (spec.rfind("file:", 0) == 0) return load_atom_file(spec.substr(5));
    throw std::domain_error("unknown atom '" + spec + "' (expected hydrogen or file:<path>)");
}

std::vector<double> make_grid(double lo, double hi, int points, const std::string& spacing) {
    if (!(lo > 0.0)) throw std::domain_error("grid start must be positive");
    if (points < 1) throw std::domain_error("points must be >= 1");
    if (points > 1 && !(hi > lo)) throw std::domain_error("grid end must exceed grid start");
    std::vector<double> g(static_cast<std::size_t>(points));
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    if (spacing == "log") {
        const double step = std::log(hi / lo) / (points - 1);
        for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    } else {
        const double step = (hi - lo) / (points - 1);
        for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo + step * i;
    }
    g.back() = hi;
    return g;
}

void apply_thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("CASIMIR_SHELL_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1)
            omp_set_num_threads(static_cast<int>(std::min(n, 1024L)));
    }
#endif
}

double emit(double e, bool magnitude) { return magnitude ? std::abs(e) : e; }

const std::vector<std::string> sweep_all_columns = {
    "d_nm", "E_full_eV", "E_boyer_eV", "E_plate_eV", "E_near_eV", "E_far_eV", "S_omega"};

double sweep_cell(const SweepRow& r, const std::string& col, bool mag) {
    if (col == "d_nm") return r.d_nm;
    if (col == "E_full_eV") return emit(r.e_full_eV, mag);
    if (col == "E_boyer_eV") return emit(r.e_boyer_eV, mag);
    if (col == "E_plate_eV") return emit(r.e_plate_eV, mag);
    if (col == "E_near_eV") return emit(r.e_near_eV, mag);
    if (col == "E_far_eV") return emit(r.e_far_eV, mag);
    if (col == "S_omega") return r.s_omega;
    throw std::domain_error("unknown column '" + col + "'");
}

int cmd_energy(const RunConfig& rc, double d, bool boyer, std::ostream& out) {
    if (!(d > 0.0)) throw std::domain_error("d must be positive");
    const EnergyResult res = boyer ? boyer_energy(rc.shell.radius_nm, rc.atom, d, rc.eval)
                                   : interaction_energy(rc.shell, rc.atom, d, rc.eval);
    const double e = emit(res.energy_eV, rc.magnitude);
    if (rc.format == "csv") {
        out << "d_nm,energy_eV,S,l_used,quad_error_eV,converged\n";
        out << format_g17(d) << ',' << format_g17(e) << ',' << format_g17(res.s_dimensionless)
            << ',' << res.l_used << ',' << format_g17(res.quad_error_estimate) << ','
            << (res.converged ? 1 : 0) << '\n';
    } else {
        out << "energy_eV    = " << format_g17(e) << '\n';
        out << "S            = " << format_g17(res.s_dimensionless) << '\n';
        out << "l_used       = " << res.l_used << '\n';
        out << "quad_error   = " << format_g17(res.quad_error_estimate) << '\n';
        out << "converged    = " << (res.converged ? "yes" : "no") << '\n';
    }
    return res.converged ? 0 : 2;
}

int cmd_sweep(const RunConfig& rc, const std::vector<double>& grid, std::ostream& out,
              std::ostream& err) {
    const auto& cols = rc.columns.empty() ? sweep_all_columns : rc.columns;
    for (const auto& c : cols) sweep_cell(SweepRow{}, c, false);  // validate names up front
    const auto rows = sweep(rc.shell, rc.atom, grid, rc.eval);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    bool all_ok = true;
    for (const SweepRow& r : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << format_g17(sweep_cell(r, cols[i], rc.magnitude));
        out << '\n';
        all_ok = all_ok && r.converged;
    }
    if (!all_ok) {
        err << "warning: at least one row did not converge (l_hard_max = " << rc.eval.l_hard_max
            << ")\n";
        return 2;
    }
    return 0;
}

int cmd_plate(const RunConfig& rc, const std::vector<double>& vgrid, std::ostream& out) {
    const double ka = rc.atom.wavenumber_invnm();
    out << "v,S,E_plate_eV\n";
    for (double v : vgrid) {
        const double s = plate_S(v);
        const double e = emit(plate_energy(rc.atom, v / ka), rc.magnitude);
        out << format_g17(v) << ',' << format_g17(s) << ',' << format_g17(e) << '\n';
    }
    return 0;
}

int cmd_asymptote(const RunConfig& rc, const std::vector<double>& grid,
                  const std::string& regime_name, std::ostream& out) {
    std::vector<std::pair<std::string, Regime>> regimes;
    if (regime_name == "near" || regime_name == "all") regimes.emplace_back("near", Regime::near);
    if (regime_name == "far" || regime_name == "all") regimes.emplace_back("far", Regime::far);
    if (regime_name == "plate" || regime_name == "all")
        regimes.emplace_back("plate", Regime::plate);
    if (regimes.empty())
        throw std::domain_error("unknown regime '" + regime_name + "' (near|far|plate|all)");

    const FarFieldValidity v = far_field_validity(rc.shell, rc.atom);
    out << "# far-field law assumes d >> R = " << format_g17(v.radius_scale_nm)
        << " nm, d >> 1/k_a = " << format_g17(v.atom_scale_nm)
        << " nm, d >> sqrt(R/Omega) = " << format_g17(v.conduction_scale_nm) << " nm\n";
    out << "d_nm,regime,E_full_eV,E_limit_eV,rel_dev\n";
    for (double d : grid) {
        for (const auto& [name, reg] : regimes) {
            const AsymptoteReport rep = asymptote_point(rc.shell, rc.atom, d, reg, rc.eval);
            out << format_g17(rep.d_nm) << ',' << name << ','
                << format_g17(emit(rep.e_full_eV, rc.magnitude)) << ','
                << format_g17(emit(rep.e_limit_eV, rc.magnitude)) << ','
                << format_g17(rep.rel_dev) << '\n';
        }
    }
    return 0;
}

int cmd_bessel(int l_lo, int l_hi, double x, std::ostream& out) {
    if (l_lo < 0 || l_hi < l_lo) throw std::domain_error("bad order range");
    const auto seq = eval_sequence(l_hi, x);
    out << "l,x,s,ds,e,de,s_hat,ds_hat,e_hat,de_hat,scale2\n";
    for (int l = l_lo; l <= l_hi; ++l) {
        const ScaledBesselPair& p = seq[static_cast<std::size_t>(l)];
        out << l << ',' << format_g17(x) << ',' << format_g17(p.s()) << ',' << format_g17(p.ds())
            << ',' << format_g17(p.e()) << ',' << format_g17(p.de()) << ','
            << format_g17(p.s_hat) << ',' << format_g17(p.ds_hat) << ',' << format_g17(p.e_hat)
            << ',' << format_g17(p.de_hat) << ',' << p.scale2 << '\n';
    }
    return 0;
}

void parse_order_range(const std::string& text, int& lo, int& hi) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::domain_error("bad --l value '" + text + "' (expected N or N..M)");
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    apply_thread_cap();

    CLI::App app{"van der Waals / Casimir-Polder energy of an atom outside a thin plasma shell"};
    app.require_subcommand(1);

    ShellOpts shell_opts;
    std::string atom_spec = "hydrogen";
    RunConfig rc;
    double d = 0.0;
    bool boyer = false;
    double dmin = 0.0, dmax = 0.0, vmin = 0.0, vmax = 0.0;
    int points = 0;
    std::string spacing = "log";
    std::string regime = "all";
    std::string orders = "0";
    double bessel_x = 1.0;
    std::string columns_arg;

    auto add_common = [&](CLI::App* cmd, bool with_shell) {
        if (with_shell) add_shell_options(cmd, shell_opts);
        cmd->add_option("--atom", atom_spec, "atom model: hydrogen or file:<path>");
        cmd->add_option("--tol", rc.eval.quad_rel_tol, "quadrature relative tolerance");
        cmd->add_option("--ltol", rc.eval.lsum_rel_tol, "partial-wave tail tolerance");
        cmd->add_option("--lmax", rc.eval.l_hard_max, "hard cap on the partial-wave sum");
        cmd->add_flag("--magnitude", rc.magnitude, "emit |E| instead of the signed energy");
    };

    CLI::App* energy_cmd = app.add_subcommand("energy", "interaction energy at one distance");
    add_common(energy_cmd, true);
    energy_cmd->add_option("--d", d, "atom-shell distance [nm]")->required();
    energy_cmd->add_flag("--boyer", boyer, "perfect-conductor limit");
    energy_cmd->add_option("--format", rc.format, "pretty or csv")
        ->check(CLI::IsMember({"pretty", "csv"}));

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "distance sweep as CSV");
    add_common(sweep_cmd, true);
    sweep_cmd->add_option("--dmin", dmin, "first distance [nm]")->required();
    sweep_cmd->add_option("--dmax", dmax, "last distance [nm]")->required();
    sweep_cmd->add_option("--points", points, "grid size")->required();
    sweep_cmd->add_option("--spacing", spacing, "log or linear")
        ->check(CLI::IsMember({"log", "linear"}));
    sweep_cmd->add_option("--columns", columns_arg, "comma-separated column subset");

    CLI::App* plate_cmd = app.add_subcommand("plate", "plate-limit S(v) and energy as CSV");
    add_common(plate_cmd, false);
    plate_cmd->add_option("--vmin", vmin, "first v = d k_a")->required();
    plate_cmd->add_option("--vmax", vmax, "last v")->required();
    plate_cmd->add_option("--points", points, "grid size")->required();
    plate_cmd->add_option("--spacing", spacing, "log or linear")
        ->check(CLI::IsMember({"log", "linear"}));

    CLI::App* asym_cmd = app.add_subcommand("asymptote", "exact energy vs limiting laws as CSV");
    add_common(asym_cmd, true);
    asym_cmd->add_option("--dmin", dmin, "first distance [nm]")->required();
    asym_cmd->add_option("--dmax", dmax, "last distance [nm]")->required();
    asym_cmd->add_option("--points", points, "grid size")->required();
    asym_cmd->add_option("--spacing", spacing, "log or linear")
        ->check(CLI::IsMember({"log", "linear"}));
    asym_cmd->add_option("--regime", regime, "near, far, plate or all");

    CLI::App* bessel_cmd = app.add_subcommand("bessel", "scaled Riccati-Bessel table");
    bessel_cmd->add_option("--l", orders, "order N or range N..M")->required();
    bessel_cmd->add_option("--x", bessel_x, "argument")->required();

    app.add_subcommand("selftest", "run the embedded invariant suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc_exit = app.exit(e, out, err);
        return rc_exit == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand("selftest")) return run_selftest(out) ? 0 : 2;
        if (app.got_subcommand("bessel")) {
            int lo = 0, hi = 0;
            parse_order_range(orders, lo, hi);
            return cmd_bessel(lo, hi, bessel_x, out);
        }

        rc.atom = resolve_atom(atom_spec);
        rc.eval.validate();
        if (app.got_subcommand("plate")) {
            if (!(vmin > 0.0) || (points > 1 && !(vmax > vmin)))
                throw std::domain_error("need 0 < vmin < vmax");
            return cmd_plate(rc, make_grid(vmin, vmax, points, spacing), out);
        }

        rc.shell = resolve_shell(shell_opts);
        rc.shell.validate();
        if (app.got_subcommand("energy")) {
            if (!(d > 0.0)) throw std::domain_error("d must be positive");
            return cmd_energy(rc, d, boyer, out);
        }
        if (app.got_subcommand("sweep")) {
            if (!columns_arg.empty()) {
                std::stringstream ss(columns_arg);
                std::string c;
                while (std::getline(ss, c, ',')) rc.columns.push_back(c);
            }
            if (!(dmin > 0.0) || (points > 1 && !(dmax > dmin)) || points < 1)
                throw std::domain_error("need 0 < dmin < dmax and points >= 1");
            return cmd_sweep(rc, make_grid(dmin, dmax, points, spacing), out, err);
        }
        if (app.got_subcommand("asymptote")) {
            if (!(dmin > 0.0) || (points > 1 && !(dmax > dmin)) || points < 1)
                throw std::domain_error("need 0 < dmin < dmax and points >= 1");
            return cmd_asymptote(rc, make_grid(dmin, dmax, points, spacing), regime, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

namespace {

struct Check {
    std::string name;
    std::function<std::string()> run;  // empty string on success
};

std::string within(double got, double want, double rel_tol, const std::string& what) {
    const double dev = std::abs(got - want) / std::abs(want);
    if (dev <= rel_tol) return {};
    std::ostringstream os;
    os << what << ": got " << format_g17(got) << ", want " << format_g17(want) << " (dev "
       << format_g17(dev) << " > " << format_g17(rel_tol) << ")";
    return os.str();
}

}  // namespace

bool run_selftest(std::ostream& out) {
    const AtomModel hydrogen = hydrogen_default();
    const ShellSpec c60 = c60_default();

    std::vector<Check> checks;
    checks.push_back({"closed forms s0 e0 s1 e1 at x=1", [] {
        const auto p0 = eval_pair(0, 1.0);
        const auto p1 = eval_pair(1, 1.0);
        std::string r = within(p0.s(), std::sinh(1.0), 1e-12, "s_0(1)");
        if (r.empty()) r = within(p0.e(), std::exp(-1.0), 1e-12, "e_0(1)");
        if (r.empty()) r = within(p1.s(), std::cosh(1.0) - std::sinh(1.0), 1e-12, "s_1(1)");
        if (r.empty()) r = within(p1.e(), 2.0 * std::exp(-1.0), 1e-12, "e_1(1)");
        return r;
    }});
    checks.push_back({"scaled Wronskian over random grid", [] {
        unsigned long long state = 88172645463325252ull;
        auto next = [&state] {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return double(state >> 11) * 0x1p-53;
        };
        for (int i = 0; i < 2000; ++i) {
            const int l = static_cast<int>(next() * 200.0);
            const double x = 1e-4 * std::pow(1e7, next());
            const auto p = eval_pair(l, x);
            if (std::abs(p.wronskian() + 1.0) > 1e-10) {
                std::ostringstream os;
                os << "l=" << l << " x=" << format_g17(x) << " W=" << format_g17(p.wronskian());
                return os.str();
            }
        }
        return std::string{};
    }});
    checks.push_back({"Jost function closed value", [] {
        const ShellSpec unit{1.0, 1.0};
        std::string r =
            within(jost_te(1, 1.0, unit), 1.0 + 2.0 * std::exp(-2.0), 1e-12, "f_TE(l=1,kR=1,Q=1)");
        if (r.empty() && jost_te(1, 1.0, ShellSpec{1.0, 0.0}) != 1.0)
            r = "f_TE at Omega=0 is not exactly 1";
        return r;
    }});
    checks.push_back({"plate S(v) limits", [] {
        std::string r = within(plate_S(1e3), 1.0, 1e-3, "S(1e3)");
        if (r.empty())
            r = within(plate_S(1e-3) / (std::numbers::pi * 1e-3 / 3.0), 1.0, 5e-3,
                       "S(1e-3)/(pi v/3)");
        return r;
    }});
    checks.push_back({"far-field F(a) limits", [] {
        if (far_field_F(0.0) != 0.0) return std::string("F(0) != 0");
        return within(far_field_F(1e3), 1.0, 1e-3, "F(1e3)");
    }});
    checks.push_back({"plate prefactor", [&hydrogen] {
        const double pref = 3.0 * units::hbar_c_eV_nm * hydrogen.static_polarizability_nm3() /
                            (8.0 * std::numbers::pi);
        return within(pref, 0.0156, 0.01, "3 hbar c alpha(0) / 8 pi");
    }});
    checks.push_back({"effective polarizability of C60", [&c60] {
        return within(effective_polarizability(c60).m3, 4.0e-29, 0.02, "alpha_f");
    }});
    checks.push_back({"default parameter set", [&hydrogen, &c60] {
        std::string r = within(hydrogen.wavenumber_invnm(), 0.059, 0.01, "k_a");
        if (r.empty()) r = within(c60.q(), 4.94e-4, 1e-12, "Q");
        if (r.empty())
            r = within(c60.radius_nm * hydrogen.wavenumber_invnm(), 0.0202, 0.01, "q_a");
        if (r.empty())
            r = within(c60.omega_invnm / hydrogen.wavenumber_invnm(), 2.44e-2, 0.01, "Omega/k_a");
        return r;
    }});
    checks.push_back({"zero coupling gives zero energy", [&hydrogen] {
        const EnergyResult res = interaction_energy(ShellSpec{1.0, 0.0}, hydrogen, 1.0);
        if (res.energy_eV != 0.0 || !res.converged) return std::string("expected exactly 0");
        return std::string{};
    }});
    checks.push_back({"parallel path matches serial reference", [&hydrogen, &c60] {
        const EnergyResult a = interaction_energy(c60, hydrogen, 0.5);
        const EnergyResult b = reference::interaction_energy(c60, hydrogen, 0.5);
        if (a.energy_eV != b.energy_eV || a.l_used != b.l_used)
            return std::string("parallel and serial results differ");
        return std::string{};
    }});
    checks.push_back({"contact energy scale", [&hydrogen, &c60] {
        const EnergyResult res = interaction_energy(c60, hydrogen, 0.053);
        if (!res.converged) return std::string("contact energy did not converge");
        return within(std::abs(res.energy_eV), 3.8, 0.10, "|E(0.053)|");
    }});
    checks.push_back({"plate contact energy scale", [&hydrogen] {
        return within(std::abs(plate_energy(hydrogen, 0.053)), 6.4, 0.10, "|E_plate(0.053)|");
    }});

    int failed = 0;
    for (const Check& c : checks) {
        std::string msg;
        try {
            msg = c.run();
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        if (msg.empty()) {
            out << "ok   " << c.name << '\n';
        } else {
            out << "FAIL " << c.name << ": " << msg << '\n';
            ++failed;
        }
    }
    out << (failed == 0 ? "selftest passed" : "selftest FAILED") << " (" << checks.size() - failed
        << "/" << checks.size() << ")\n";
    return failed == 0;
}

}  // namespace casimir
