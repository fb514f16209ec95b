#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metafib/sequence.hpp"

namespace metafib {

namespace detail {

inline double char_poly(unsigned k, double x) {
    // x^k - x^{k-1} - 1 evaluated as x^{k-1} * (x - 1) - 1
    double p = 1.0;
    for (unsigned i = 1; i < k; ++i) p *= x;
    return p * (x - 1.0) - 1.0;
}

}  // namespace detail

// Largest positive root of x^k - x^{k-1} - 1, the growth ratio of the
// k-step Fibonacci-like sequence. Bracketed bisection on [1, 2]: the
// polynomial is -1 at x=1 and nonnegative at x=2, and increasing on the
// bracket. k=1 gives x-2 with root exactly 2.
inline double phi_k(unsigned k, double tolerance) {
    if (k < 1) throw bad_parameter("phi: k must be >= 1");
    if (!(tolerance > 0)) throw non_positive_tolerance();
    if (k == 1) return 2.0;
    double lo = 1.0, hi = 2.0;
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (detail::char_poly(k, mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

enum class RatioReference { None, Half, PhiInverse };

struct RatioSample {
    index_t n = 0;
    term_t value = 0;   // exact numerator; the ratio is value/n
    double ratio = 0.0;
};

struct RatioReport {
    std::vector<RatioSample> samples;
    double tail_running_max = 0.0;
    double tail_running_min = 0.0;
    std::optional<double> reference;
    std::optional<double> deviation_at_last;  // |last ratio - reference|
    // Set when convergence of the sampled ratio is an open question; the
    // numbers are then observations only and nothing may be asserted of them.
    bool descriptive_only = false;
    std::string note;
};

inline std::vector<index_t> geometric_schedule(index_t first, index_t last, double factor = 2.0) {
    std::vector<index_t> out;
    if (first < 1 || last < first || factor <= 1.0) return out;
    double x = static_cast<double>(first);
    index_t prev = 0;
    while (true) {
        index_t n = static_cast<index_t>(x);
        if (n > last) break;
        if (n != prev) out.push_back(n);
        prev = n;
        x *= factor;
    }
    if (out.empty() || out.back() != last) out.push_back(last);
    return out;
}

// Ratios term[n]/n at the given sample indices. `tail_window` counts samples
// from the end over which the running max/min are taken (0 means all).
// `k_for_phi` is consulted only for the PhiInverse reference.
inline RatioReport ratio_report(const SequenceState& state, const std::vector<index_t>& samples,
                                RatioReference ref, unsigned k_for_phi = 0,
                                std::size_t tail_window = 0) {
    RatioReport rep;
    rep.samples.reserve(samples.size());
    for (index_t n : samples) {
        term_t v = state.term(n);
        rep.samples.push_back({n, v, static_cast<double>(v) / static_cast<double>(n)});
    }
    if (!rep.samples.empty()) {
        std::size_t start = 0;
        if (tail_window > 0 && tail_window < rep.samples.size())
            start = rep.samples.size() - tail_window;
        rep.tail_running_max = rep.samples[start].ratio;
        rep.tail_running_min = rep.samples[start].ratio;
        for (std::size_t i = start; i < rep.samples.size(); ++i) {
            rep.tail_running_max = std::max(rep.tail_running_max, rep.samples[i].ratio);
            rep.tail_running_min = std::min(rep.tail_running_min, rep.samples[i].ratio);
        }
    }
    switch (ref) {
        case RatioReference::None:
            break;
        case RatioReference::Half:
            rep.reference = 0.5;
            break;
        case RatioReference::PhiInverse:
            rep.reference = 1.0 / phi_k(k_for_phi, 1e-12);
            if (k_for_phi >= 2) {
                rep.descriptive_only = true;
                rep.note = "convergence of this ratio is an open question; "
                           "reference shown for comparison only";
            }
            break;
    }
    if (rep.reference && !rep.samples.empty())
        rep.deviation_at_last = std::fabs(rep.samples.back().ratio - *rep.reference);
    return rep;
}

struct RatioBound {
    double max_ratio = 0.0;
    index_t argmax = 0;
    double slack = 0.0;  // (C(1) + 2) / low, from the counting bound on C(n)
    bool satisfies_half_bound = false;  // max_ratio <= 1/2 + slack
};

// Finite-horizon form of the asymptotic bound C(n)/n <= 1/2: the maximum of
// C(n)/n over [lo, hi] must stay within slack of 1/2, where the slack comes
// from C(n) <= C(1) + floor((n-1)/2) + 1.
inline RatioBound half_ratio_bound_check(const SequenceState& state, index_t lo, index_t hi) {
    if (lo < 1 || lo > hi || hi > state.len()) throw index_out_of_range(hi, lo, state.len());
    const auto& t = state.table();
    // exact rational comparison via cross-multiplication
    index_t best_n = lo;
    term_t best_v = t[lo];
    for (index_t n = lo + 1; n <= hi; ++n) {
        if (static_cast<unsigned __int128>(t[n]) * best_n >
            static_cast<unsigned __int128>(best_v) * n) {
            best_n = n;
            best_v = t[n];
        }
    }
    RatioBound out;
    out.argmax = best_n;
    out.max_ratio = static_cast<double>(best_v) / static_cast<double>(best_n);
    out.slack = static_cast<double>(state.term(1) + 2) / static_cast<double>(lo);
    // 2*lo*C(n) <= lo*n + 2*(C(1)+2)*n, exactly
    const unsigned __int128 lhs = static_cast<unsigned __int128>(2) * lo * best_v;
    const unsigned __int128 rhs =
        static_cast<unsigned __int128>(lo) * best_n +
        static_cast<unsigned __int128>(2) * (state.term(1) + 2) * best_n;
    out.satisfies_half_bound = lhs <= rhs;
    return out;
}

}  // namespace metafib
