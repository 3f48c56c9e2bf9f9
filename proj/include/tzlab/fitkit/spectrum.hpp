#pragma once

/**
 * @file spectrum.hpp
 * @brief Impedance spectra: CSV I/O and synthetic generation.
 *
 * CSV layout: header `freq_hz,re_z_ohm,im_z_ohm`, one point per line.
 * Lines starting with '#' before the header carry metadata and are skipped.
 * omega is always derived as 2 pi freq_hz so a written spectrum reads back
 * bit-for-bit.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tzlab/core/error.hpp"
#include "tzlab/core/format.hpp"
#include "tzlab/fracdyn/cole_cole.hpp"

namespace tzlab::fitkit {

using cdouble = std::complex<double>;

inline constexpr const char* kSpectrumHeader = "freq_hz,re_z_ohm,im_z_ohm";

struct SpectrumPoint {
    double freq_hz;
    double omega;
    cdouble z;

    bool operator==(const SpectrumPoint&) const = default;
};

inline double omega_of(double freq_hz) { return 2.0 * std::numbers::pi * freq_hz; }

struct Spectrum {
    std::vector<SpectrumPoint> points;
    std::string label;

    std::size_t size() const { return points.size(); }

    void add(double freq_hz, cdouble z) { points.push_back({freq_hz, omega_of(freq_hz), z}); }

    /// Sorts by frequency and enforces strictly positive, strictly increasing
    /// frequencies with finite impedances.
    void validate_and_sort() {
        std::stable_sort(points.begin(), points.end(),
                         [](const SpectrumPoint& a, const SpectrumPoint& b) { return a.freq_hz < b.freq_hz; });
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& p = points[i];
            if (!(p.freq_hz > 0.0) || !std::isfinite(p.freq_hz)) {
                throw DomainError("spectrum: frequencies must be positive and finite");
            }
            if (!std::isfinite(p.z.real()) || !std::isfinite(p.z.imag())) {
                throw DomainError("spectrum: impedance values must be finite");
            }
            if (i > 0 && !(p.freq_hz > points[i - 1].freq_hz)) {
                throw DomainError("spectrum: duplicate frequency " + format_double(p.freq_hz));
            }
        }
    }
};

inline Spectrum read_spectrum(std::istream& in, std::string label = {}) {
    Spectrum spec;
    spec.label = std::move(label);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!have_header) {
            if (line.front() == '#') continue;
            if (line != kSpectrumHeader) {
                throw ParseError(std::string("expected header '") + kSpectrumHeader + "'", line_no);
            }
            have_header = true;
            continue;
        }
        double f = 0.0, re = 0.0, im = 0.0;
        std::istringstream fields(line);
        std::string a, b, c, extra;
        if (!std::getline(fields, a, ',') || !std::getline(fields, b, ',') || !std::getline(fields, c, ',') ||
            std::getline(fields, extra)) {
            throw ParseError("expected 3 comma-separated fields", line_no);
        }
        if (!parse_double(a, f) || !parse_double(b, re) || !parse_double(c, im)) {
            throw ParseError("non-numeric field", line_no);
        }
        spec.add(f, {re, im});
    }
    if (!have_header) throw ParseError("missing header", line_no);
    spec.validate_and_sort();
    return spec;
}

inline Spectrum load_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_spectrum(in, path);
}

inline void write_spectrum(std::ostream& out, const Spectrum& spec) {
    out << kSpectrumHeader << '\n';
    for (const auto& p : spec.points) {
        out << format_double(p.freq_hz) << ',' << format_double(p.z.real()) << ',' << format_double(p.z.imag())
            << '\n';
    }
}

/// Model values at the given frequencies plus Gaussian noise of standard
/// deviation noise_rel |Z| on each of Re and Im.
inline Spectrum synth_spectrum_hz(const fracdyn::ColeColeModel& model, const std::vector<double>& freqs_hz,
                                  double noise_rel, std::uint64_t seed) {
    if (!(noise_rel >= 0.0) || !std::isfinite(noise_rel)) throw DomainError("synth_spectrum: noise_rel must be >= 0");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Spectrum spec;
    spec.label = "synthetic";
    for (double f : freqs_hz) {
        const double omega = omega_of(f);
        if (!(omega > 0.0)) throw DomainError("synth_spectrum: frequencies must be positive");
        cdouble z = fracdyn::cole_cole_impedance(model, omega);
        if (noise_rel > 0.0) {
            const double scale = noise_rel * std::abs(z);
            const double dr = gauss(rng);
            const double di = gauss(rng);
            z += cdouble(scale * dr, scale * di);
        }
        spec.points.push_back({f, omega, z});
    }
    spec.validate_and_sort();
    return spec;
}

/// As synth_spectrum_hz with angular frequencies; each omega is mapped to
/// freq_hz and back so the result is exactly representable in CSV.
inline Spectrum synth_spectrum(const fracdyn::ColeColeModel& model, const std::vector<double>& omegas,
                               double noise_rel, std::uint64_t seed) {
    std::vector<double> freqs;
    freqs.reserve(omegas.size());
    for (double w : omegas) freqs.push_back(w / (2.0 * std::numbers::pi));
    return synth_spectrum_hz(model, freqs, noise_rel, seed);
}

}  // namespace tzlab::fitkit
