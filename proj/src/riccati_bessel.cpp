#include "casimir/riccati_bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace casimir {

namespace {

constexpr double rescale_hi = 0x1p600;
constexpr double rescale_lo = 0x1p-600;
constexpr int rescale_bits = 600;

// Scratch buffers indexed by level+1 so that level -1 is storable.
struct Scratch {
    std::vector<double> emant, smant;
    std::vector<int> eexp, sexp;
};

Scratch& scratch() {
    thread_local Scratch s;
    return s;
}

void check_domain(int l, double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("riccati_bessel: argument x must be positive and finite");
    if (l < 0)
        throw std::domain_error("riccati_bessel: order l must be non-negative");
    if (l > max_order)
        throw std::length_error("riccati_bessel: order " + std::to_string(l) +
                                " exceeds max_order = " + std::to_string(max_order));
}

// Bring (m, e) with m > 0 to m in [1, 2).
inline void normalize(double& m, int& e) {
    int k = 0;
    m = std::frexp(m, &k);
    m *= 2.0;
    e += k - 1;
}

int miller_start(int l_max, double x) {
    const double xe = std::max(1.0, x);
    const double start = l_max + std::ceil(10.0 + 2.0 * std::sqrt(l_max * xe));
    // The margin above thins out for small l_max at large x; keep
    // (start^2 - l_max^2)/x >= 36 so the admixture of the decaying
    // solution stays below ~2e-16.
    const double sep = std::ceil(std::sqrt(double(l_max) * l_max + 36.0 * xe));
    return static_cast<int>(std::max(start, sep));
}

// mant * 2^{pot} * e^{ex}, saturating instead of overflowing intermediates.
double unscale(double mant, int pot, double ex) {
    if (std::abs(ex) < 700.0) return std::ldexp(mant * std::exp(ex), pot);
    const double t = ex * 1.4426950408889634074;  // / ln 2
    double ip = 0.0;
    const double frac = std::modf(t, &ip);
    double shift = ip + pot;
    if (shift > 1e9) shift = 1e9;
    if (shift < -1e9) shift = -1e9;
    return std::ldexp(mant * std::exp2(frac), static_cast<int>(shift));
}

}  // namespace

double ScaledBesselPair::s() const { return unscale(s_hat, -scale2, x); }
double ScaledBesselPair::ds() const { return unscale(ds_hat, -scale2, x); }
double ScaledBesselPair::e() const { return unscale(e_hat, scale2, -x); }
double ScaledBesselPair::de() const { return unscale(de_hat, scale2, -x); }

void eval_sequence(int l_max, double x, std::vector<ScaledBesselPair>& out) {
    check_domain(l_max, x);

    auto& scr = scratch();
    const std::size_t n = static_cast<std::size_t>(l_max) + 2;  // levels -1 .. l_max
    scr.emant.resize(n);
    scr.eexp.resize(n);
    scr.smant.resize(n);
    scr.sexp.resize(n);
    double* em = scr.emant.data();
    int* ee = scr.eexp.data();
    double* sm = scr.smant.data();
    int* se = scr.sexp.data();

    // Decaying solution ehat_l = e^{+x} e_l(x), upward from
    // ehat_{-1} = 1, ehat_0 = 1, ehat_1 = 1 + 1/x:
    //   ehat_{l+1} = ehat_{l-1} + ((2l+1)/x) ehat_l
    em[0] = 1.0;
    ee[0] = 0;
    em[1] = 1.0;
    ee[1] = 0;
    if (l_max >= 1) {
        em[2] = 1.0 + 1.0 / x;
        ee[2] = 0;
        double a = em[1], b = em[2];
        int cur = 0;
        for (int l = 1; l < l_max; ++l) {
            const double c = a + ((2.0 * l + 1.0) / x) * b;
            a = b;
            b = c;
            if (b >= rescale_hi) {
                a *= rescale_lo;
                b *= rescale_lo;
                cur += rescale_bits;
            }
            em[l + 2] = b;
            ee[l + 2] = cur;
        }
    }

    // Growing solution shat_l = e^{-x} s_l(x), anchored at the closed forms
    // shat_{-1} = e^{-x} cosh x, shat_0 = e^{-x} sinh x.
    const double s0 = -std::expm1(-2.0 * x) / 2.0;
    const double smm1 = (1.0 + std::exp(-2.0 * x)) / 2.0;
    sm[0] = smm1;
    se[0] = 0;
    sm[1] = s0;
    se[1] = 0;
    if (l_max >= 1) {
        if (x >= double(l_max) * l_max) {
            // Far below the turning point l ~ x the upward recurrence loses
            // nothing; it avoids the deep Miller start for huge arguments.
            double a = smm1, b = s0;
            for (int l = 0; l < l_max; ++l) {
                const double c = a - ((2.0 * l + 1.0) / x) * b;
                a = b;
                b = c;
                sm[l + 2] = b;
                se[l + 2] = 0;
            }
        } else {
            // Miller downward recurrence; trial values grow towards l = 0
            // and are normalised against the exact shat_0.
            const int lst = miller_start(l_max, x);
            double tp = 0.0, t = 1.0;
            int cnt = 0;
            for (int l = lst; l >= 0; --l) {
                if (l <= l_max) {
                    sm[l + 1] = t;
                    se[l + 1] = cnt;
                }
                const double tm = tp + ((2.0 * l + 1.0) / x) * t;  // trial at l-1
                tp = t;
                t = tm;
                if (t >= rescale_hi) {
                    tp *= rescale_lo;
                    t *= rescale_lo;
                    cnt += rescale_bits;
                }
            }
            double n0 = sm[1];
            int p0 = se[1];
            normalize(n0, p0);
            double m0 = s0;
            int e0 = 0;
            normalize(m0, e0);
            for (int l = l_max; l >= 1; --l) {
                double m = sm[l + 1];
                int p = se[l + 1];
                normalize(m, p);
                sm[l + 1] = (m / n0) * m0;
                se[l + 1] = (p - p0) + e0;
                normalize(sm[l + 1], se[l + 1]);
            }
            sm[1] = m0;
            se[1] = e0;
        }
    }

    // Assemble pairs.  scale2 is the binary exponent of ehat_l, so e_hat
    // lands in [1, 2) and all same-argument products are plain doubles.
    out.resize(static_cast<std::size_t>(l_max) + 1);
    for (int l = 0; l <= l_max; ++l) {
        ScaledBesselPair& p = out[static_cast<std::size_t>(l)];
        p.l = l;
        p.x = x;
        double me = em[l + 1];
        int sc = ee[l + 1];
        normalize(me, sc);
        p.scale2 = sc;
        p.e_hat = me;
        p.de_hat = -(std::ldexp(em[l], ee[l] - sc) + (l / x) * me);
        p.s_hat = std::ldexp(sm[l + 1], se[l + 1] + sc);
        p.ds_hat = std::ldexp(sm[l], se[l] + sc) - (l / x) * p.s_hat;
    }
}

std::vector<ScaledBesselPair> eval_sequence(int l_max, double x) {
    std::vector<ScaledBesselPair> out;
    eval_sequence(l_max, x, out);
    return out;
}

ScaledBesselPair eval_pair(int l, double x) {
    thread_local std::vector<ScaledBesselPair> buf;
    eval_sequence(l, x, buf);
    return buf[static_cast<std::size_t>(l)];
}

}  // namespace casimir
