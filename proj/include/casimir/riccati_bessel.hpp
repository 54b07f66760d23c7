#pragma once

#include <vector>

namespace casimir {

// Modified Riccati-Bessel functions on the imaginary frequency axis,
//
//   s_l(x) = sqrt(pi x / 2) I_{l+1/2}(x)     (growing,  ~ e^{+x}/2 for large x)
//   e_l(x) = sqrt(2 x / pi) K_{l+1/2}(x)     (decaying, ~ e^{-x}   for large x)
//
// evaluated in exponentially scaled form: s-type values carry e^{-x}, e-type
// values carry e^{+x}.  A shared power-of-two exponent `scale2` absorbs the
// residual l-dependent dynamic range (s_l ~ x^{l+1}/(2l+1)!!, e_l ~
// (2l-1)!!/x^l near the origin), which exceeds the double range already at
// l ~ 150 for small arguments:
//
//   e^{-x} s_l(x)  = s_hat  * 2^{-scale2}
//   e^{-x} s_l'(x) = ds_hat * 2^{-scale2}
//   e^{+x} e_l(x)  = e_hat  * 2^{+scale2}
//   e^{+x} e_l'(x) = de_hat * 2^{+scale2}
//
// Same-argument products (s_l e_l, s_l' e_l', the Wronskian) are plain
// products of the stored fields; cross-argument products pick up a factor
// 2^{scale2(z) - scale2(x)} e^{x-z}.
struct ScaledBesselPair {
    int l = 0;
    double x = 0.0;
    double s_hat = 0.0;   // > 0
    double ds_hat = 0.0;  // > 0
    double e_hat = 0.0;   // > 0, normalised into [1, 2)
    double de_hat = 0.0;  // < 0
    int scale2 = 0;

    // Same-argument products; the scale factors cancel exactly.
    double se() const { return s_hat * e_hat; }      // s_l(x) e_l(x)
    double dsde() const { return ds_hat * de_hat; }  // s_l'(x) e_l'(x)

    // s_hat de_hat - ds_hat e_hat; equals -1 up to roundoff for all (l, x).
    double wronskian() const { return s_hat * de_hat - ds_hat * e_hat; }

    // Unscaled values (s_l = s_hat 2^{-scale2} e^{+x}, ...).  These can
    // overflow or underflow the double range at large l or large x; meant
    // for tables and small-order checks, not for forming products.
    double s() const;
    double ds() const;
    double e() const;
    double de() const;
};

// Largest supported order.  Near-contact runs need a few hundred partial
// waves; 2000 leaves headroom.
inline constexpr int max_order = 2000;

// Scaled values at a single (l, x).  Throws std::domain_error for
// non-finite or non-positive x, std::length_error for l > max_order.
// Relative accuracy better than 1e-12 for l <= 200, x in [1e-6, 1e4].
ScaledBesselPair eval_pair(int l, double x);

// All orders 0..l_max at fixed x in one recurrence pass.
std::vector<ScaledBesselPair> eval_sequence(int l_max, double x);
void eval_sequence(int l_max, double x, std::vector<ScaledBesselPair>& out);

}  // namespace casimir
