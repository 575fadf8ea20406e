#include "cech_p1.hpp"

#include <cstdlib>

#include "trgr/matrix.hpp"

namespace trgr::checks {

std::pair<long, long> cech_p1_cohomology(int k) {
    // Chart sections in the first trivialization: f in span(z^0..z^B0) on the
    // z-chart, g in span(z^{k-B0}..z^k) on the w-chart. Overlap cochains live
    // on the exponent window [-B, B]. B0 = 2B + |k| makes both windows wide
    // enough that the kernel and cokernel of d(f, g) = f - g match the full
    // Cech complex in the reported range.
    const long B = std::abs(k) + 2;
    const long B0 = 2 * B + std::abs(k);

    const long f_lo = 0, f_hi = B0;            // exponents of f
    const long g_lo = k - B0, g_hi = k;        // exponents of g
    const long w_lo = std::min(f_lo, g_lo);    // full coefficient window of f - g
    const long w_hi = std::max(f_hi, g_hi);
    const long w_size = w_hi - w_lo + 1;
    const long f_dim = f_hi - f_lo + 1;
    const long g_dim = g_hi - g_lo + 1;

    // d(f, g) = f - g expressed on the window.
    RationalMatrix d(static_cast<std::size_t>(w_size), static_cast<std::size_t>(f_dim + g_dim));
    for (long e = f_lo; e <= f_hi; ++e)
        d.at(static_cast<std::size_t>(e - w_lo), static_cast<std::size_t>(e - f_lo)) = 1;
    for (long e = g_lo; e <= g_hi; ++e)
        d.at(static_cast<std::size_t>(e - w_lo), static_cast<std::size_t>(f_dim + e - g_lo)) = -1;

    const long rank = static_cast<long>(d.rank());
    const long h0 = f_dim + g_dim - rank;

    // Cokernel measured on the overlap window [-B, B] only; exponents outside
    // it are always hit by one of the chart windows.
    RationalMatrix overlap(static_cast<std::size_t>(2 * B + 1),
                           static_cast<std::size_t>(f_dim + g_dim));
    long covered = 0;
    for (long e = -B; e <= B; ++e) {
        const std::size_t row = static_cast<std::size_t>(e + B);
        if (e >= f_lo && e <= f_hi) overlap.at(row, static_cast<std::size_t>(e - f_lo)) = 1;
        if (e >= g_lo && e <= g_hi)
            overlap.at(row, static_cast<std::size_t>(f_dim + e - g_lo)) = -1;
    }
    covered = static_cast<long>(overlap.rank());
    const long h1 = 2 * B + 1 - covered;

    return {h0, h1};
}

}  // namespace trgr::checks
