#pragma once

/**
 * @file app.hpp
 * @brief Command-line front end: argument grammar and dispatch.
 *
 *   tzlab [global flags] <command> [subcommand] [options]
 *
 * Global flags: --seed, --out, --format csv|json, --config, --no-timestamp,
 * --threads, --units natural|si. Exit status 0 on success, 1 when the library
 * rejects the request, 2 on usage errors.
 */

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tzlab/cli/output.hpp"
#include "tzlab/eprspace.hpp"
#include "tzlab/fitkit.hpp"
#include "tzlab/fracdyn.hpp"
#include "tzlab/loopgas.hpp"
#include "tzlab/zetalab.hpp"

namespace tzlab::cli {

inline constexpr double kHbarSi = 1.054571817e-34;     // J s
inline constexpr double kElectronMass = 9.1093837015e-31;  // kg

struct Globals {
    std::uint64_t seed = 1;
    std::string out = "-";
    std::string format;
    bool no_timestamp = false;
    unsigned threads = 1;
    std::string units = "natural";
};

namespace detail {

using cdouble = std::complex<double>;

inline std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo)) throw DomainError("frequency range must satisfy 0 < fmin < fmax");
    if (n < 2) throw DomainError("need at least 2 points");
    std::vector<double> out;
    const double a = std::log10(lo), b = std::log10(hi);
    for (int i = 0; i < n; ++i) out.push_back(std::pow(10.0, a + (b - a) * i / (n - 1)));
    return out;
}

struct ModelOpts {
    double alpha = 0.8;
    double tau = 1e-3;
    double r_ct = 50.0;
    double r_s = 5.0;

    void add(CLI::App* sc) {
        sc->add_option("--alpha", alpha, "dispersion exponent in (0,1]")->capture_default_str();
        sc->add_option("--tau", tau, "time constant [s]")->capture_default_str();
        sc->add_option("--r-ct", r_ct, "charge-transfer resistance [ohm]")->capture_default_str();
        sc->add_option("--r-s", r_s, "series resistance [ohm]")->capture_default_str();
    }
    fracdyn::ColeColeModel model() const { return {alpha, tau, r_ct, r_s}; }
};

struct GridOpts {
    double fmin = 1.0;
    double fmax = 1e5;
    int points = 60;

    void add(CLI::App* sc) {
        sc->add_option("--fmin", fmin, "lowest frequency [Hz]")->capture_default_str();
        sc->add_option("--fmax", fmax, "highest frequency [Hz]")->capture_default_str();
        sc->add_option("--points", points, "number of log-spaced frequencies")->capture_default_str();
    }
};

struct LatticeOpts {
    double xmin = -8.0;
    double xmax = 8.0;
    int sites = 201;
    double eps = 0.01;
    std::optional<double> mass;
    std::optional<double> hbar;
    std::string potential = "free";
    double omega = 1.0;
    double u0 = 0.0;
    std::string boundary = "periodic";

    void add(CLI::App* sc) {
        sc->add_option("--xmin", xmin)->capture_default_str();
        sc->add_option("--xmax", xmax)->capture_default_str();
        sc->add_option("--sites", sites)->capture_default_str();
        sc->add_option("--eps", eps, "time step")->capture_default_str();
        sc->add_option("--mass", mass, "particle mass (default 1, or m_e with --units si)");
        sc->add_option("--hbar", hbar, "reduced Planck constant (default 1, or SI value)");
        sc->add_option("--potential", potential, "free | harmonic | constant")
            ->check(CLI::IsMember({"free", "harmonic", "constant"}))
            ->capture_default_str();
        sc->add_option("--omega", omega, "harmonic frequency, u = m omega^2 x^2 / 2")->capture_default_str();
        sc->add_option("--u0", u0, "value of the constant potential")->capture_default_str();
        sc->add_option("--boundary", boundary)
            ->check(CLI::IsMember({"periodic", "reflecting"}))
            ->capture_default_str();
    }

    loopgas::LoopLattice lattice(const Globals& g) const {
        const bool si = g.units == "si";
        loopgas::LoopLattice lat;
        lat.x_min = xmin;
        lat.x_max = xmax;
        lat.n_sites = sites;
        lat.eps = eps;
        lat.mass = mass.value_or(si ? kElectronMass : 1.0);
        lat.hbar = hbar.value_or(si ? kHbarSi : 1.0);
        lat.boundary = loopgas::boundary_from_string(boundary);
        lat.validate();
        if (potential == "harmonic") {
            const double k = lat.mass * omega * omega;
            lat.set_potential([k](double x) { return 0.5 * k * x * x; });
        } else if (potential == "constant") {
            const double c = u0;
            lat.set_potential([c](double) { return c; });
        }
        lat.validate();
        return lat;
    }
};

inline void warn_lattice(const loopgas::LoopLattice& lat, std::ostream& err) {
    if (lat.stability_warning()) {
        err << "warning: hbar*eps/(m*delta^2) = " << format_double(lat.stability_ratio()) << " exceeds 1\n";
    }
}

inline Table pair_corr_table(const zetalab::PairCorrelation& pc) {
    Table t{{"bin_center", "empirical", "gue_reference"}, {}};
    const auto centers = pc.bin_centers();
    for (std::size_t b = 0; b < centers.size(); ++b) t.add({centers[b], pc.empirical[b], pc.reference[b]});
    return t;
}

inline json pair_corr_record(const zetalab::PairCorrelation& pc) {
    return {{"ks_distance", pc.ks_distance}, {"pair_count", pc.pair_count}, {"point_count", pc.point_count}};
}

inline json factor_json(const eprspace::PrimeVector& v) {
    json f = json::object();
    for (const auto& [p, r] : v.entries()) f[std::to_string(p)] = r;
    return f;
}

}  // namespace detail

/// Owns the parser and the selected action.
class Cli {
public:
    Cli() : app_("Fractional dynamics, zeta statistics and loop-gas laboratory", "tzlab") {
        app_.set_config("--config", "", "read `key = value` defaults from a file");
        app_.add_option("--seed", g_.seed, "random seed")->capture_default_str();
        app_.add_option("--out", g_.out, "output file ('-' for stdout)")->capture_default_str();
        app_.add_option("--format", g_.format, "csv | json (default: from --out extension)")
            ->check(CLI::IsMember({"csv", "json"}));
        app_.add_flag("--no-timestamp", g_.no_timestamp, "omit the timestamp from outputs");
        app_.add_option("--threads", g_.threads, "worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
        app_.add_option("--units", g_.units, "natural | si")
            ->check(CLI::IsMember({"natural", "si"}))
            ->capture_default_str();
        app_.require_subcommand(1);
        app_.fallthrough();
        add_fracdyn();
        add_zeta();
        add_epr();
        add_loops();
        add_fit();
    }

    /// Parses and runs; returns the process exit status.
    int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
        err_ = &err;
        try {
            app_.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app_.exit(e, out, err);
        } catch (const CLI::CallForAllHelp& e) {
            return app_.exit(e, out, err);
        } catch (const CLI::ParseError& e) {
            app_.exit(e, err, err);
            return 2;
        }
        try {
            if (!action_) throw Error("no command selected");
            const Result r = action_();
            json meta = json::object();
            if (r.stochastic) meta["seed"] = g_.seed;
            if (g_.units != "natural") meta["units"] = g_.units;
            if (!g_.no_timestamp) meta["timestamp"] = iso_timestamp();
            const Format fmt = pick_format(r);
            if (g_.out.empty() || g_.out == "-") {
                emit(out, r, meta, fmt);
            } else {
                std::ofstream file(g_.out);
                if (!file) throw Error("cannot open '" + g_.out + "' for writing");
                emit(file, r, meta, fmt);
                if (!file) throw Error("write to '" + g_.out + "' failed");
            }
            return 0;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
    }

private:
    CLI::App app_;
    Globals g_;
    std::function<Result()> action_;
    std::ostream* err_ = &std::cerr;

    Format pick_format(const Result& r) const {
        if (g_.format == "csv") return Format::csv;
        if (g_.format == "json") return Format::json;
        auto ends_with = [&](const std::string& suffix) {
            return g_.out.size() >= suffix.size() && g_.out.compare(g_.out.size() - suffix.size(), suffix.size(), suffix) == 0;
        };
        if (ends_with(".json")) return Format::json;
        if (ends_with(".csv")) return Format::csv;
        return r.table ? Format::csv : Format::json;
    }

    static void emit(std::ostream& os, const Result& r, const json& meta, Format fmt) {
        if (fmt == Format::json) {
            write_json(os, r, meta);
        } else {
            write_csv(os, r, meta);
        }
    }

    template <class F>
    void on(CLI::App* sc, F f) {
        sc->callback([this, f] { action_ = f; });
    }

    void add_fracdyn() {
        {
            auto* sc = app_.add_subcommand("impedance", "Cole-Cole impedance over a log frequency grid");
            auto m = std::make_shared<detail::ModelOpts>();
            auto gr = std::make_shared<detail::GridOpts>();
            m->add(sc);
            gr->add(sc);
            on(sc, [m, gr] {
                const auto model = m->model();
                Result r;
                r.table = Table{{"freq_hz", "re_z_ohm", "im_z_ohm"}, {}};
                for (double f : detail::log_grid(gr->fmin, gr->fmax, gr->points)) {
                    const auto z = fracdyn::cole_cole_impedance(model, fitkit::omega_of(f));
                    r.table->add({f, z.real(), z.imag()});
                }
                return r;
            });
        }
        {
            auto* sc = app_.add_subcommand("arc", "circle fit of a Nyquist arc");
            auto input = std::make_shared<std::string>();
            auto m = std::make_shared<detail::ModelOpts>();
            auto gr = std::make_shared<detail::GridOpts>();
            sc->add_option("--input", *input, "spectrum CSV (otherwise the model options are sampled)");
            m->add(sc);
            gr->add(sc);
            on(sc, [input, m, gr] {
                std::vector<std::complex<double>> zs;
                if (!input->empty()) {
                    for (const auto& p : fitkit::load_spectrum(*input).points) zs.push_back(p.z);
                } else {
                    for (double f : detail::log_grid(gr->fmin, gr->fmax, gr->points)) {
                        zs.push_back(fracdyn::cole_cole_impedance(m->model(), fitkit::omega_of(f)));
                    }
                }
                const auto a = fracdyn::arc_fit(zs);
                Result r;
                r.record = {{"center_re", a.center.real()},
                            {"center_im", a.center.imag()},
                            {"radius", a.radius},
                            {"depression_angle", a.depression_angle},
                            {"alpha_estimate", 1.0 - 2.0 * a.depression_angle / std::numbers::pi},
                            {"rms_residual", a.rms_residual},
                            {"points", zs.size()}};
                return r;
            });
        }
        {
            auto* sc = app_.add_subcommand("ml", "Mittag-Leffler function E_alpha");
            auto alpha = std::make_shared<double>(0.5);
            auto zr = std::make_shared<double>(-1.0);
            auto zi = std::make_shared<double>(0.0);
            auto xmin = std::make_shared<std::optional<double>>();
            auto xmax = std::make_shared<std::optional<double>>();
            auto points = std::make_shared<int>(50);
            sc->add_option("--alpha", *alpha)->capture_default_str();
            sc->add_option("--z", *zr, "real part of the argument")->capture_default_str();
            sc->add_option("--zi", *zi, "imaginary part of the argument")->capture_default_str();
            sc->add_option("--xmin", *xmin, "tabulate on the real axis from xmin");
            sc->add_option("--xmax", *xmax, "... to xmax");
            sc->add_option("--points", *points)->capture_default_str();
            on(sc, [=] {
                Result r;
                if (xmin->has_value() != xmax->has_value()) throw DomainError("ml: give both --xmin and --xmax");
                if (xmin->has_value()) {
                    if (*points < 2) throw DomainError("ml: need at least 2 points");
                    r.record = {{"alpha", *alpha}};
                    r.table = Table{{"x", "value"}, {}};
                    for (int i = 0; i < *points; ++i) {
                        const double x = **xmin + (**xmax - **xmin) * i / (*points - 1);
                        r.table->add({x, fracdyn::mittag_leffler(*alpha, x)});
                    }
                    return r;
                }
                const auto v = fracdyn::mittag_leffler(*alpha, std::complex<double>(*zr, *zi));
                r.record = {{"alpha", *alpha}, {"z_re", *zr}, {"z_im", *zi}, {"re", v.real()}, {"im", v.imag()}};
                return r;
            });
        }
        {
            auto* sc = app_.add_subcommand("fracderiv", "Grunwald-Letnikov derivative of t^p");
            auto alpha = std::make_shared<double>(0.5);
            auto h = std::make_shared<double>(0.01);
            auto points = std::make_shared<int>(101);
            auto p = std::make_shared<double>(1.0);
            sc->add_option("--alpha", *alpha)->capture_default_str();
            sc->add_option("--step", *h, "sample spacing")->capture_default_str();
            sc->add_option("--points", *points)->capture_default_str();
            sc->add_option("--p", *p, "exponent of the sampled power t^p")->capture_default_str();
            on(sc, [=] {
                if (*points < 2) throw DomainError("fracderiv: need at least 2 points");
                if (!(*p >= 0.0)) throw DomainError("fracderiv: p must be >= 0");
                std::vector<double> f(*points);
                for (int k = 0; k < *points; ++k) f[k] = std::pow(k * *h, *p);
                const auto d = fracdyn::gl_fracderiv(f, *alpha, *h);
                const double c = std::tgamma(*p + 1.0) / std::tgamma(*p + 1.0 - *alpha);
                Result r;
                r.record = {{"alpha", *alpha}, {"p", *p}};
                r.table = Table{{"t", "f", "derivative", "exact"}, {}};
                for (int k = 0; k < *points; ++k) {
                    const double t = k * *h;
                    const double exact = t > 0.0 ? c * std::pow(t, *p - *alpha) : (*p > *alpha ? 0.0 : NAN);
                    r.table->add({t, f[k], d[k], exact});
                }
                return r;
            });
        }
        {
            auto* sc = app_.add_subcommand("phase", "phase angle phi and arrow-of-time angle Delta");
            auto alpha = std::make_shared<double>(0.8);
            auto points = std::make_shared<int>(0);
            sc->add_option("--alpha", *alpha)->capture_default_str();
            sc->add_option("--points", *points, "tabulate on [1/2, 1] instead");
            on(sc, [=] {
                Result r;
                if (*points > 0) {
                    if (*points < 2) throw DomainError("phase: need at least 2 points");
                    r.table = Table{{"alpha", "phi", "delta"}, {}};
                    for (int i = 0; i < *points; ++i) {
                        const double a = 0.5 + 0.5 * i / (*points - 1);
                        const auto pp = fracdyn::phase_angles(a);
                        r.table->add({a, pp.phi, pp.delta});
                    }
                    return r;
                }
                const auto pp = fracdyn::phase_angles(*alpha);
                r.record = {{"alpha", *alpha},
                            {"phi", pp.phi},
                            {"delta", pp.delta},
                            {"budget", std::abs(pp.phi) + std::abs(pp.delta)},
                            {"fractal_dimension", 1.0 / *alpha}};
                return r;
            });
        }
        {
            auto* sc = app_.add_subcommand("twist", "compose two twisted shifts (a, b) under Delta(alpha)");
            auto alpha = std::make_shared<double>(0.8);
            auto v = std::make_shared<std::array<std::int64_t, 4>>(std::array<std::int64_t, 4>{1, 0, 0, 1});
            sc->add_option("--alpha", *alpha)->capture_default_str();
            sc->add_option("--a1", (*v)[0])->capture_default_str();
            sc->add_option("--b1", (*v)[1])->capture_default_str();
            sc->add_option("--a2", (*v)[2])->capture_default_str();
            sc->add_option("--b2", (*v)[3])->capture_default_str();
            on(sc, [=] {
                const double delta = fracdyn::phase_angles(*alpha).delta;
                const fracdyn::TwistedShift g1{(*v)[0], (*v)[1], {}};
                const fracdyn::TwistedShift g2{(*v)[2], (*v)[3], {}};
                const auto prod = fracdyn::twisted_compose(g1, g2, delta);
                Result r;
                r.record = {{"delta", delta},
                            {"a", prod.a},
                            {"b", prod.b},
                            {"theta", prod.theta.signed_radians()},
                            {"commutator_phase", fracdyn::commutator_phase(g1, g2, delta).signed_radians()}};
                return r;
            });
        }
    }

    void add_zeta() {
        auto* z = app_.add_subcommand("zeta", "Riemann zeta laboratory");
        z->require_subcommand(1);
        {
            auto* sc = z->add_subcommand("eval", "zeta(s) with an error bound");
            auto s = std::make_shared<std::array<double, 2>>(std::array<double, 2>{0.5, 14.134725141734694});
            sc->add_option("--sigma", (*s)[0])->capture_default_str();
            sc->add_option("--t", (*s)[1])->capture_default_str();
            on(sc, [s] {
                const auto p = zetalab::zeta({(*s)[0], (*s)[1]});
                Result r;
                r.record = {{"sigma", (*s)[0]},      {"t", (*s)[1]},
                            {"re", p.value.real()},  {"im", p.value.imag()},
                            {"abs_err_bound", p.abs_err_bound}, {"degraded", p.degraded}};
                return r;
            });
        }
        {
            auto* sc = z->add_subcommand("xi", "completed xi(s)");
            auto s = std::make_shared<std::array<double, 2>>(std::array<double, 2>{0.5, 0.0});
            sc->add_option("--sigma", (*s)[0])->capture_default_str();
            sc->add_option("--t", (*s)[1])->capture_default_str();
            on(sc, [s] {
                const auto v = zetalab::completed_xi({(*s)[0], (*s)[1]});
                Result r;
                r.record = {{"sigma", (*s)[0]}, {"t", (*s)[1]}, {"re", v.real()}, {"im", v.imag()}};
                return r;
            });
        }
        {
            auto* sc = z->add_subcommand("zeros", "critical-line zeros up to --tmax");
            auto tmax = std::make_shared<double>(100.0);
            auto opt = std::make_shared<zetalab::ZeroScanOptions>();
            sc->add_option("--tmax", *tmax)->capture_default_str();
            sc->add_option("--grid", opt->grid, "sign-change scan step")->capture_default_str();
            sc->add_option("--tol", opt->tol, "bracket width")->capture_default_str();
            on(sc, [this, tmax, opt] {
                auto o = *opt;
                o.threads = g_.threads;
                const auto zl = zetalab::find_zeros(*tmax, o);
                Result r;
                r.record = {{"t_max", zl.t_max},
                            {"count", zl.ordinates.size()},
                            {"smooth_count", zetalab::smooth_zero_count(zl.t_max)},
                            {"grid", zl.grid}};
                r.table = Table{{"index", "t_ordinate"}, {}};
                for (std::size_t i = 0; i < zl.ordinates.size(); ++i) r.table->add({i + 1, zl.ordinates[i]});
                return r;
            });
        }
        {
            auto* sc = z->add_subcommand("paircorr", "pair correlation of unfolded zeros vs GUE");
            auto tmax = std::make_shared<double>(1420.0);
            auto max_sep = std::make_shared<double>(3.0);
            auto bins = std::make_shared<std::size_t>(30);
            sc->add_option("--tmax", *tmax, "zeros up to this height")->capture_default_str();
            sc->add_option("--max-sep", *max_sep)->capture_default_str();
            sc->add_option("--bins", *bins)->capture_default_str();
            on(sc, [this, tmax, max_sep, bins] {
                zetalab::ZeroScanOptions o;
                o.threads = g_.threads;
                const auto u = zetalab::unfold(zetalab::find_zeros(*tmax, o));
                const auto pc = zetalab::pair_correlation(std::span<const double>(u), *max_sep, *bins);
                Result r;
                r.record = detail::pair_corr_record(pc);
                r.table = detail::pair_corr_table(pc);
                return r;
            });
        }
        {
            auto* sc = z->add_subcommand("gue", "pair correlation of GUE bulk eigenvalues");
            auto dim = std::make_shared<std::size_t>(200);
            auto trials = std::make_shared<std::size_t>(50);
            auto max_sep = std::make_shared<double>(3.0);
            auto bins = std::make_shared<std::size_t>(30);
            sc->add_option("--dim", *dim)->capture_default_str();
            sc->add_option("--trials", *trials)->capture_default_str();
            sc->add_option("--max-sep", *max_sep)->capture_default_str();
            sc->add_option("--bins", *bins)->capture_default_str();
            on(sc, [this, dim, trials, max_sep, bins] {
                const auto seqs = zetalab::gue_sample(*dim, *trials, g_.seed);
                const auto pc = zetalab::pair_correlation(std::span<const std::vector<double>>(seqs), *max_sep, *bins);
                Result r;
                r.stochastic = true;
                r.record = detail::pair_corr_record(pc);
                r.table = detail::pair_corr_table(pc);
                return r;
            });
        }
        {
            auto* sc = z->add_subcommand("universality", "vertical-shift self-approximation scan on a disc");
            struct Opts {
                double center = 0.75, radius = 0.05, eps = 0.3, tmax = 100.0, step = 0.05;
                bool include_origin = false;
            };
            auto o = std::make_shared<Opts>();
            sc->add_option("--center", o->center)->capture_default_str();
            sc->add_option("--radius", o->radius)->capture_default_str();
            sc->add_option("--eps", o->eps)->capture_default_str();
            sc->add_option("--tmax", o->tmax)->capture_default_str();
            sc->add_option("--step", o->step)->capture_default_str();
            sc->add_flag("--include-origin", o->include_origin, "scan from t = 0");
            on(sc, [this, o] {
                zetalab::ScanOptions so;
                so.include_origin = o->include_origin;
                so.threads = g_.threads;
                const auto rep = zetalab::bagchi_scan({o->center, o->radius}, o->eps, o->tmax, o->step, so);
                Result r;
                r.record = {{"hit_measure", rep.hit_measure},
                            {"witness_count", rep.witnesses.size()},
                            {"first_witness", rep.witnesses.empty() ? json(nullptr) : json(rep.witnesses.front())}};
                r.table = Table{{"t", "sup_error", "hit"}, {}};
                for (const auto& s : rep.samples) r.table->add({s.t, s.sup_error, s.hit ? 1 : 0});
                return r;
            });
        }
        {
            auto* sc = z->add_subcommand("spectral", "spectral zeta of a finite spectrum, direct and via the heat trace");
            auto eigs = std::make_shared<std::vector<double>>(std::vector<double>{1.0, 2.0, 3.0});
            auto s = std::make_shared<double>(2.0);
            sc->add_option("--eigs", *eigs, "positive eigenvalues")->delimiter(',')->capture_default_str();
            sc->add_option("--s", *s)->capture_default_str();
            on(sc, [eigs, s] {
                Result r;
                r.record = {{"s", *s},
                            {"spectral_zeta", zetalab::spectral_zeta(*eigs, *s).real()},
                            {"heat_trace_mellin", zetalab::heat_trace_mellin(*eigs, *s)}};
                return r;
            });
        }
    }

    void add_epr() {
        auto* e = app_.add_subcommand("epr", "prime-exponent space");
        e->require_subcommand(1);
        {
            auto* sc = e->add_subcommand("factor", "prime factorization");
            auto n = std::make_shared<std::uint64_t>(0);
            sc->add_option("n", *n)->required();
            on(sc, [n] {
                const auto v = eprspace::factorize(*n);
                Result r;
                r.record = {{"n", *n}, {"factors", detail::factor_json(v)}};
                return r;
            });
        }
        {
            auto* sc = e->add_subcommand("lattice", "join (lcm), meet (gcd) and order of two integers");
            auto ab = std::make_shared<std::array<std::uint64_t, 2>>();
            sc->add_option("a", (*ab)[0])->required();
            sc->add_option("b", (*ab)[1])->required();
            on(sc, [ab] {
                const auto a = eprspace::factorize((*ab)[0]);
                const auto b = eprspace::factorize((*ab)[1]);
                const auto [l, g] = eprspace::lcm_gcd(a, b);
                Result r;
                r.record = {{"a", (*ab)[0]},
                            {"b", (*ab)[1]},
                            {"lcm", l.to_int()},
                            {"gcd", g.to_int()},
                            {"a_divides_b", eprspace::divides(a, b)},
                            {"b_divides_a", eprspace::divides(b, a)},
                            {"log_norm_a", eprspace::log_norm(a)},
                            {"log_norm_b", eprspace::log_norm(b)},
                            {"log_norm_lcm", eprspace::log_norm(l)},
                            {"log_norm_gcd", eprspace::log_norm(g)}};
                return r;
            });
        }
        {
            auto* sc = e->add_subcommand("trace", "trace of exp(-s log N) over an index range");
            struct Opts {
                std::uint64_t n_min = 1, n_max = 1000;
                double sigma = 2.0, t = 0.0;
            };
            auto o = std::make_shared<Opts>();
            sc->add_option("--nmin", o->n_min, "first index of the sheet")->capture_default_str();
            sc->add_option("--nmax", o->n_max)->capture_default_str();
            sc->add_option("--sigma", o->sigma)->capture_default_str();
            sc->add_option("--t", o->t)->capture_default_str();
            on(sc, [o] {
                const std::complex<double> s(o->sigma, o->t);
                const auto v = eprspace::trace_exp_range(o->n_min, o->n_max, s);
                Result r;
                r.record = {{"n_min", o->n_min}, {"n_max", o->n_max}, {"sigma", o->sigma},
                            {"t", o->t},         {"re", v.real()},    {"im", v.imag()}};
                return r;
            });
        }
        {
            auto* sc = e->add_subcommand("pair", "Cantor pairing N x N -> N (or its inverse)");
            auto mn = std::make_shared<std::array<std::uint64_t, 2>>();
            auto k = std::make_shared<std::optional<std::uint64_t>>();
            sc->add_option("m", (*mn)[0]);
            sc->add_option("n", (*mn)[1]);
            sc->add_option("--unpair", *k, "invert k instead");
            on(sc, [mn, k] {
                Result r;
                if (k->has_value()) {
                    const auto [m, n] = eprspace::unpair(**k);
                    r.record = {{"k", **k}, {"m", m}, {"n", n}};
                } else {
                    r.record = {{"m", (*mn)[0]}, {"n", (*mn)[1]}, {"k", eprspace::pair((*mn)[0], (*mn)[1])}};
                }
                return r;
            });
        }
        {
            auto* sc = e->add_subcommand("fiber", "vertical translates K + i k tau of a rectangle");
            struct Opts {
                eprspace::Rect k{0.5, 1.0, 0.0, 1.0};
                double tau = 2.0;
                int copies = 3;
            };
            auto o = std::make_shared<Opts>();
            sc->add_option("--re-lo", o->k.re_lo)->capture_default_str();
            sc->add_option("--re-hi", o->k.re_hi)->capture_default_str();
            sc->add_option("--im-lo", o->k.im_lo)->capture_default_str();
            sc->add_option("--im-hi", o->k.im_hi)->capture_default_str();
            sc->add_option("--tau", o->tau)->capture_default_str();
            sc->add_option("--copies", o->copies)->capture_default_str();
            on(sc, [o] {
                const auto f = eprspace::fiber_copies(o->k, o->tau, o->copies);
                Result r;
                r.record = {{"period", f.period}, {"disjoint", f.disjoint()}, {"minimal_period", f.minimal_period()}};
                r.table = Table{{"k", "re_lo", "re_hi", "im_lo", "im_hi"}, {}};
                for (int i = 0; i < f.copies; ++i) {
                    const auto c = f.copy(i);
                    r.table->add({i, c.re_lo, c.re_hi, c.im_lo, c.im_hi});
                }
                return r;
            });
        }
    }

    void add_loops() {
        auto* l = app_.add_subcommand("loops", "lattice Feynman-Kac loop gas");
        l->require_subcommand(1);
        {
            auto* sc = l->add_subcommand("kernel", "transfer kernel diagnostics");
            auto lo = std::make_shared<detail::LatticeOpts>();
            lo->add(sc);
            on(sc, [this, lo] {
                const auto lat = lo->lattice(g_);
                detail::warn_lattice(lat, *err_);
                const auto k = loopgas::build_kernel(lat);
                const Eigen::VectorXd rows = k.matrix.rowwise().sum();
                Result r;
                r.record = {{"n_sites", lat.n_sites},
                            {"delta", lat.delta()},
                            {"eps", lat.eps},
                            {"stability_ratio", lat.stability_ratio()},
                            {"stability_warning", lat.stability_warning()},
                            {"row_sum_min", rows.minCoeff()},
                            {"row_sum_max", rows.maxCoeff()},
                            {"symmetric", k.matrix == k.matrix.transpose()}};
                return r;
            });
        }
        {
            auto* sc = l->add_subcommand("propagator", "q(x0 -> x, t) slices");
            auto lo = std::make_shared<detail::LatticeOpts>();
            auto x0 = std::make_shared<double>(0.0);
            auto steps = std::make_shared<int>(100);
            auto every = std::make_shared<int>(0);
            lo->add(sc);
            sc->add_option("--x0", *x0, "start position (nearest site)")->capture_default_str();
            sc->add_option("--steps", *steps)->capture_default_str();
            sc->add_option("--every", *every, "emit a slice every this many steps (default: final only)");
            on(sc, [this, lo, x0, steps, every] {
                const auto lat = lo->lattice(g_);
                detail::warn_lattice(lat, *err_);
                if (*steps < 1) throw DomainError("propagator: steps must be >= 1");
                const int stride = *every > 0 ? *every : *steps;
                const auto k = loopgas::build_kernel(lat);
                const int s0 = lat.site_of(*x0);
                Eigen::VectorXd v = Eigen::VectorXd::Unit(lat.n_sites, s0);
                Result r;
                r.record = {{"x0", lat.x(s0)}, {"steps", *steps}};
                r.table = Table{{"t", "x", "value"}, {}};
                for (int s = 1; s <= *steps; ++s) {
                    v = k.matrix * v;
                    if (s % stride == 0 || s == *steps) {
                        for (int j = 0; j < lat.n_sites; ++j) r.table->add({s * lat.eps, lat.x(j), v(j) / lat.delta()});
                    }
                }
                return r;
            });
        }
        {
            auto* sc = l->add_subcommand("sample", "Monte Carlo path or loop ensemble");
            auto lo = std::make_shared<detail::LatticeOpts>();
            auto x0 = std::make_shared<double>(0.0);
            auto steps = std::make_shared<int>(100);
            auto paths = std::make_shared<int>(10000);
            auto mode = std::make_shared<std::string>("open");
            lo->add(sc);
            sc->add_option("--x0", *x0)->capture_default_str();
            sc->add_option("--steps", *steps)->capture_default_str();
            sc->add_option("--paths", *paths)->capture_default_str();
            sc->add_option("--mode", *mode, "open | loop")->check(CLI::IsMember({"open", "loop"}))->capture_default_str();
            on(sc, [this, lo, x0, steps, paths, mode] {
                const auto lat = lo->lattice(g_);
                detail::warn_lattice(lat, *err_);
                const int s0 = lat.site_of(*x0);
                const auto pm = *mode == "loop" ? loopgas::PathMode::loop : loopgas::PathMode::open;
                const auto ens = loopgas::sample_paths(lat, s0, *paths, *steps, g_.seed, pm, g_.threads);
                const auto k = loopgas::build_kernel(lat);
                Result r;
                r.stochastic = true;
                const double t = *steps * lat.eps;
                if (pm == loopgas::PathMode::loop) {
                    const auto est = loopgas::estimate_loop(ens);
                    r.record = {{"x0", lat.x(s0)},
                                {"t", t},
                                {"paths", *paths},
                                {"estimate", est.mean},
                                {"std_error", est.std_error},
                                {"transfer_matrix", loopgas::propagator(k, s0, s0, *steps)}};
                    return r;
                }
                r.record = {{"x0", lat.x(s0)},
                            {"paths", *paths},
                            {"mean_square_displacement", loopgas::mean_square_displacement(ens, *steps)}};
                r.table = Table{{"t", "x", "value", "std_error"}, {}};
                for (int j = 0; j < lat.n_sites; ++j) {
                    const auto est = loopgas::estimate_propagator(ens, j);
                    r.table->add({t, lat.x(j), est.mean, est.std_error});
                }
                return r;
            });
        }
        {
            auto* sc = l->add_subcommand("entropy", "loop entropy S_path(t) = ln Tr T^n");
            auto lo = std::make_shared<detail::LatticeOpts>();
            auto steps = std::make_shared<int>(400);
            auto every = std::make_shared<int>(10);
            lo->add(sc);
            sc->add_option("--steps", *steps, "largest n")->capture_default_str();
            sc->add_option("--every", *every)->capture_default_str();
            on(sc, [this, lo, steps, every] {
                const auto lat = lo->lattice(g_);
                detail::warn_lattice(lat, *err_);
                if (*every < 1 || *steps < 1) throw DomainError("entropy: steps and every must be >= 1");
                const auto spec = loopgas::kernel_spectrum(loopgas::build_kernel(lat));
                Result r;
                r.table = Table{{"t", "s_path"}, {}};
                for (int n = *every; n <= *steps; n += *every) r.table->add({n * lat.eps, loopgas::path_entropy(spec, n)});
                return r;
            });
        }
        {
            auto* sc = l->add_subcommand("fluct", "quadratic fluctuation bound inside the thermal window");
            struct Opts {
                double beta = 1.0, dt = 0.5;
                std::optional<double> mass, hbar;
            };
            auto o = std::make_shared<Opts>();
            sc->add_option("--beta", o->beta)->capture_default_str();
            sc->add_option("--dt", o->dt)->capture_default_str();
            sc->add_option("--mass", o->mass);
            sc->add_option("--hbar", o->hbar);
            on(sc, [this, o] {
                const bool si = g_.units == "si";
                const double m = o->mass.value_or(si ? kElectronMass : 1.0);
                const double hb = o->hbar.value_or(si ? kHbarSi : 1.0);
                const auto fb = loopgas::fluctuation_bound(o->beta, o->dt, m, hb);
                Result r;
                r.record = {{"beta", o->beta},
                            {"dt", o->dt},
                            {"dx2", fb.dx2},
                            {"thermal_time", fb.cutoff},
                            {"thermodynamic", fb.thermodynamic},
                            {"two_beta_hbar_d", 2.0 * o->beta * hb * hb / (2.0 * m)}};
                return r;
            });
        }
        {
            auto* sc = l->add_subcommand("forwardbackward", "forward/backward functionals and rho = phi * phi_hat");
            auto lo = std::make_shared<detail::LatticeOpts>();
            struct Opts {
                int steps = 50, every = 10;
                double c0 = -1.0, w0 = 1.0, c1 = 1.0, w1 = 1.0;
            };
            auto o = std::make_shared<Opts>();
            lo->add(sc);
            sc->add_option("--steps", o->steps)->capture_default_str();
            sc->add_option("--every", o->every)->capture_default_str();
            sc->add_option("--phi0-center", o->c0)->capture_default_str();
            sc->add_option("--phi0-width", o->w0)->capture_default_str();
            sc->add_option("--phi1-center", o->c1)->capture_default_str();
            sc->add_option("--phi1-width", o->w1)->capture_default_str();
            on(sc, [this, lo, o] {
                const auto lat = lo->lattice(g_);
                detail::warn_lattice(lat, *err_);
                if (o->every < 1) throw DomainError("forwardbackward: every must be >= 1");
                if (!(o->w0 > 0.0) || !(o->w1 > 0.0)) throw DomainError("forwardbackward: widths must be positive");
                auto bump = [&](double c, double w) {
                    Eigen::VectorXd v(lat.n_sites);
                    for (int j = 0; j < lat.n_sites; ++j) v(j) = std::exp(-0.5 * std::pow((lat.x(j) - c) / w, 2));
                    return v;
                };
                const auto k = loopgas::build_kernel(lat);
                const auto fb = loopgas::forward_backward(k, bump(o->c0, o->w0), bump(o->c1, o->w1), o->steps);
                double lo_m = std::numeric_limits<double>::infinity(), hi_m = -lo_m;
                for (std::size_t s = 0; s < fb.rho.size(); ++s) {
                    lo_m = std::min(lo_m, fb.mass(s, lat.delta()));
                    hi_m = std::max(hi_m, fb.mass(s, lat.delta()));
                }
                Result r;
                r.record = {{"mass_min", lo_m}, {"mass_max", hi_m}};
                r.table = Table{{"t", "x", "value"}, {}};
                for (int s = 0; s <= o->steps; ++s) {
                    if (s % o->every != 0 && s != o->steps) continue;
                    for (int j = 0; j < lat.n_sites; ++j) r.table->add({s * lat.eps, lat.x(j), fb.rho[s](j)});
                }
                return r;
            });
        }
    }

    void add_fit() {
        {
            auto* sc = app_.add_subcommand("fit", "fit a Cole-Cole element to a spectrum CSV");
            auto input = std::make_shared<std::string>();
            auto init = std::make_shared<std::array<std::optional<double>, 4>>();
            sc->add_option("--input", *input, "spectrum CSV")->required();
            sc->add_option("--init-alpha", (*init)[0]);
            sc->add_option("--init-tau", (*init)[1]);
            sc->add_option("--init-r-ct", (*init)[2]);
            sc->add_option("--init-r-s", (*init)[3]);
            on(sc, [this, input, init] {
                const auto spec = fitkit::load_spectrum(*input);
                std::optional<fracdyn::ColeColeModel> start;
                int given = 0;
                for (const auto& v : *init) given += v.has_value();
                if (given != 0 && given != 4) throw DomainError("fit: give all four --init-* values or none");
                if (given == 4) start.emplace(*(*init)[0], *(*init)[1], *(*init)[2], *(*init)[3]);
                const auto res = fitkit::fit_cole_cole(spec, start);
                for (const auto& w : res.warnings) *err_ << "warning: " << w << '\n';
                Result r;
                r.record = {{"alpha", res.model.alpha()}, {"tau_s", res.model.tau()},
                            {"r_ct_ohm", res.model.r_ct()},  {"r_s_ohm", res.model.r_s()},
                            {"loss", res.loss},             {"converged", res.converged},
                            {"n_iter", res.n_iter}};
                return r;
            });
        }
        {
            auto* sc = app_.add_subcommand("synth", "synthetic Cole-Cole spectrum with Gaussian noise");
            auto m = std::make_shared<detail::ModelOpts>();
            auto gr = std::make_shared<detail::GridOpts>();
            auto noise = std::make_shared<double>(0.0);
            m->add(sc);
            gr->add(sc);
            sc->add_option("--noise", *noise, "relative noise level")->capture_default_str();
            on(sc, [this, m, gr, noise] {
                const auto spec = fitkit::synth_spectrum_hz(m->model(), detail::log_grid(gr->fmin, gr->fmax, gr->points),
                                                           *noise, g_.seed);
                Result r;
                r.stochastic = true;
                r.table = Table{{"freq_hz", "re_z_ohm", "im_z_ohm"}, {}};
                for (const auto& p : spec.points) r.table->add({p.freq_hz, p.z.real(), p.z.imag()});
                return r;
            });
        }
    }
};

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Cli cli;
    return cli.run(argc, argv, out, err);
}

}  // namespace tzlab::cli
