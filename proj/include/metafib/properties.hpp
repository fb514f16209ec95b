#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "metafib/sequence.hpp"

namespace metafib {

struct CheckResult {
    std::string property_name;
    bool holds = false;
    // (index, what was observed there); present iff the property fails
    std::optional<std::pair<index_t, std::string>> first_violation;
    std::pair<index_t, index_t> checked_range{0, 0};
};

namespace detail {

// `table` is 1-indexed with slot 0 unused.
inline long long table_delta(const std::vector<term_t>& table, index_t n) {
    return static_cast<long long>(table[n]) - static_cast<long long>(table[n - 1]);
}

inline void require_range(const std::vector<term_t>& table, index_t lo, index_t hi, index_t min_lo) {
    const index_t len = table.size() - 1;
    if (lo < min_lo || lo > hi || hi > len) throw index_out_of_range(hi, min_lo, len);
}

}  // namespace detail

// Every forward difference on [lo, hi] lies in {0,1}.
inline CheckResult check_slow_growth(const std::vector<term_t>& table, index_t lo, index_t hi) {
    detail::require_range(table, lo, hi, 2);
    CheckResult r{"slow-growth", true, std::nullopt, {lo, hi}};
    for (index_t n = lo; n <= hi; ++n) {
        long long d = detail::table_delta(table, n);
        if (d != 0 && d != 1) {
            r.holds = false;
            r.first_violation = std::make_pair(n, "difference " + std::to_string(d));
            break;
        }
    }
    return r;
}

inline CheckResult check_slow_growth(const SequenceState& state, index_t lo, index_t hi) {
    return check_slow_growth(state.table(), lo, hi);
}

// No n in [lo, hi] has differences 1 at both n and n-1.
inline CheckResult check_no_consecutive_increments(const std::vector<term_t>& table, index_t lo,
                                                   index_t hi) {
    detail::require_range(table, lo, hi, 3);
    CheckResult r{"no-consecutive-increments", true, std::nullopt, {lo, hi}};
    for (index_t n = lo; n <= hi; ++n) {
        if (detail::table_delta(table, n) == 1 && detail::table_delta(table, n - 1) == 1) {
            r.holds = false;
            r.first_violation = std::make_pair(n, "differences at " + std::to_string(n - 1) +
                                                      " and " + std::to_string(n) + " both 1");
            break;
        }
    }
    return r;
}

inline CheckResult check_no_consecutive_increments(const SequenceState& state, index_t lo,
                                                   index_t hi) {
    return check_no_consecutive_increments(state.table(), lo, hi);
}

struct SplitComponents {
    term_t c1 = 0;  // C(n - s - C(n-1))
    term_t c2 = 0;  // C(n - s - 2 - C(n-3))
};

// The two summands of a Conolly term, recomputed from the table.
inline SplitComponents split_components(const SequenceState& state, index_t n) {
    const auto* p = state.spec().get_if<Conolly>();
    if (!p) throw bad_parameter("split applies to Conolly specs only");
    if (n < state.ic_len() + 1 || n > state.len())
        throw index_out_of_range(n, state.ic_len() + 1, state.len());
    const auto& t = state.table();
    const long long s = static_cast<long long>(p->s);
    const long long sn = static_cast<long long>(n);
    const index_t a1 = static_cast<index_t>(sn - s - static_cast<long long>(t[n - 1]));
    const index_t a2 = static_cast<index_t>(sn - s - 2 - static_cast<long long>(t[n - 3]));
    return {t[a1], t[a2]};
}

// c1 - c2 in {0,1}, with the parity form: c1 = c2 = C(n)/2 when C(n) is even,
// c1 = c2 + 1 = (C(n)+1)/2 when odd.
inline CheckResult check_split_law(const SequenceState& state, index_t lo, index_t hi) {
    detail::require_range(state.table(), lo, hi, state.ic_len() + 1);
    CheckResult r{"split-law", true, std::nullopt, {lo, hi}};
    for (index_t n = lo; n <= hi; ++n) {
        auto [c1, c2] = split_components(state, n);
        const term_t cn = state.term(n);
        bool ok;
        if (cn % 2 == 0)
            ok = c1 == c2 && c1 == cn / 2;
        else
            ok = c1 == c2 + 1 && c1 == (cn + 1) / 2;
        if (!ok) {
            r.holds = false;
            r.first_violation = std::make_pair(
                n, "c1=" + std::to_string(c1) + " c2=" + std::to_string(c2) +
                       " C(n)=" + std::to_string(cn));
            break;
        }
    }
    return r;
}

// Per-summand contribution to the forward difference:
//   d_i(n) = C(n - a_i - C(n-b_i)) - C(n-1 - a_i - C(n-1-b_i)).
// Their sum is exactly delta(n).
inline std::vector<long long> delta_decomposition(const SequenceState& state, index_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
    if (const auto* p = state.spec().get_if<Conolly>()) {
        parts = {{p->s, 1}, {p->s + 2, 3}};
    } else if (const auto* g = state.spec().get_if<GeneralConolly>()) {
        parts = g->terms;
    } else {
        throw bad_parameter("delta decomposition applies to Conolly-type specs only");
    }
    if (n < state.ic_len() + 2 || n > state.len())
        throw index_out_of_range(n, state.ic_len() + 2, state.len());
    const auto& t = state.table();
    const long long sn = static_cast<long long>(n);
    std::vector<long long> out;
    out.reserve(parts.size());
    for (const auto& [ai, bi] : parts) {
        const long long a = static_cast<long long>(ai);
        const index_t hi_arg = static_cast<index_t>(sn - a - static_cast<long long>(t[n - bi]));
        const index_t lo_arg =
            static_cast<index_t>(sn - 1 - a - static_cast<long long>(t[n - 1 - bi]));
        out.push_back(static_cast<long long>(t[hi_arg]) - static_cast<long long>(t[lo_arg]));
    }
    return out;
}

// E_n = E_{n-1} + E_{n-k}, E_n = 1 for n <= k. 1-indexed.
struct ESequence {
    unsigned k = 1;
    std::vector<term_t> values;  // slot 0 unused

    term_t at(index_t n) const {
        if (n < 1 || n + 1 > values.size()) throw index_out_of_range(n, 1, values.size() - 1);
        return values[n];
    }
    index_t len() const { return values.size() - 1; }
};

inline ESequence gen_E(unsigned k, index_t count) {
    if (k < 1) throw bad_parameter("E sequence: k must be >= 1");
    if (count < k) throw bad_parameter("E sequence: count must be >= k");
    ESequence e;
    e.k = k;
    e.values.assign(1, 0);
    for (index_t n = 1; n <= count; ++n) {
        if (n <= k) {
            e.values.push_back(1);
        } else {
            term_t prev = e.values[n - 1];
            term_t back = e.values[n - k];
            if (prev > max_term - back) throw arithmetic_overflow(n);
            e.values.push_back(prev + back);
        }
    }
    return e;
}

// A(E_n) = E_{n-1} for the Conway spec (k, 0, 1) started from two ones, plus
// the two auxiliary statements its induction leans on:
//   hyp2: some j in [0, k-1] has A(E_{n-j} - 1) = E_{n-j-1}
//   hyp3: A(E_n + 1) = E_{n-1} + 1
struct EnCorrespondenceReport {
    CheckResult main;
    bool hyp2_all = true;
    bool hyp3_all = true;
    std::optional<index_t> hyp2_first_failure;
    std::optional<index_t> hyp3_first_failure;
    // (n, witnessing j) for each checked n > k
    std::vector<std::pair<index_t, unsigned>> hyp2_witnesses;
    index_t max_checked_n = 0;
};

inline EnCorrespondenceReport check_en_correspondence(unsigned k, index_t horizon) {
    EnCorrespondenceReport rep;
    rep.main = {"A(E_n) = E_{n-1}", true, std::nullopt, {2, 0}};

    SequenceState a(conway_spec(k, 0, 1), {1, 1});
    a.extend(horizon);

    // E values up to the horizon (plus one index for E_{n-1} lookups)
    ESequence e;
    e.k = k;
    e.values.assign(1, 0);
    {
        index_t n = 1;
        while (true) {
            term_t v;
            if (n <= k)
                v = 1;
            else
                v = e.values[n - 1] + e.values[n - k];
            if (v > horizon) break;
            e.values.push_back(v);
            ++n;
        }
    }

    for (index_t n = 2; n <= e.len(); ++n) {
        const term_t en = e.at(n);
        if (en > a.len()) break;
        rep.max_checked_n = n;
        if (a.term(en) != e.at(n - 1)) {
            rep.main.holds = false;
            rep.main.first_violation = std::make_pair(
                n, "A(" + std::to_string(en) + ") = " + std::to_string(a.term(en)) +
                       ", expected " + std::to_string(e.at(n - 1)));
            break;
        }
        if (n <= k) continue;

        bool hyp2 = false;
        unsigned witness_j = 0;
        for (unsigned j = 0; j < k && j < n; ++j) {
            const term_t enj = e.at(n - j);
            if (enj < 2 || n - j < 2) continue;  // E_{n-j}-1 below the table
            if (a.term(enj - 1) == e.at(n - j - 1)) {
                hyp2 = true;
                witness_j = j;
                break;
            }
        }
        if (hyp2) {
            rep.hyp2_witnesses.emplace_back(n, witness_j);
        } else {
            rep.hyp2_all = false;
            if (!rep.hyp2_first_failure) rep.hyp2_first_failure = n;
        }

        if (en + 1 <= a.len()) {
            if (a.term(en + 1) != e.at(n - 1) + 1) {
                rep.hyp3_all = false;
                if (!rep.hyp3_first_failure) rep.hyp3_first_failure = n;
            }
        }
    }
    rep.main.checked_range = {2, rep.max_checked_n};
    return rep;
}

// Sampled (index, value) pairs; evidence for unbounded growth at desk scale.
inline std::vector<std::pair<index_t, term_t>> growth_report(
    const SequenceState& state, const std::vector<index_t>& checkpoints) {
    std::vector<std::pair<index_t, term_t>> out;
    out.reserve(checkpoints.size());
    for (index_t n : checkpoints) out.emplace_back(n, state.term(n));
    return out;
}

inline bool strictly_increasing(const std::vector<std::pair<index_t, term_t>>& samples) {
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].second <= samples[i - 1].second) return false;
    return true;
}

}  // namespace metafib
