#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "metafib/properties.hpp"
#include "metafib/validators.hpp"

namespace metafib {

// Initial-condition generator for sweeps.
struct IcPattern {
    enum class Kind { AllOnes, Staircase, Explicit };

    Kind kind = Kind::AllOnes;
    std::size_t length = 1;
    std::vector<term_t> values;  // Explicit only

    static IcPattern all_ones(std::size_t len) { return {Kind::AllOnes, len, {}}; }
    static IcPattern staircase(std::size_t len) { return {Kind::Staircase, len, {}}; }
    static IcPattern explicit_list(std::vector<term_t> v) {
        IcPattern p{Kind::Explicit, v.size(), std::move(v)};
        return p;
    }

    std::vector<term_t> materialize() const {
        switch (kind) {
            case Kind::AllOnes:
                return std::vector<term_t>(length, 1);
            case Kind::Staircase: {
                // 1,1,2,2,3,3,...
                std::vector<term_t> v(length);
                for (std::size_t i = 0; i < length; ++i) v[i] = i / 2 + 1;
                return v;
            }
            case Kind::Explicit:
                return values;
        }
        return {};
    }

    std::string describe() const {
        switch (kind) {
            case Kind::AllOnes:
                return "ones:" + std::to_string(length);
            case Kind::Staircase:
                return "stair:" + std::to_string(length);
            case Kind::Explicit: {
                std::string out;
                for (std::size_t i = 0; i < values.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(values[i]);
                }
                return out;
            }
        }
        return "";
    }
};

struct SurveyOutcome {
    enum class Kind {
        SlowToHorizon,
        HaltedAt,
        NonSlowAt,
        ConsecutiveIncrementsAt,  // Conolly-type only
        Failed,                   // construction error or overflow
    };

    Kind kind = Kind::SlowToHorizon;
    index_t n = 0;            // first-event index where applicable
    long long delta = 0;      // NonSlowAt only
    std::optional<Diagnostic> diagnostic;  // HaltedAt only
    std::string message;      // Failed only

    std::string describe() const {
        switch (kind) {
            case Kind::SlowToHorizon:
                return "slow-to-horizon";
            case Kind::HaltedAt:
                return "halted at " + std::to_string(n) +
                       (diagnostic ? " (" + diagnostic->message() + ")" : "");
            case Kind::NonSlowAt:
                return "non-slow at " + std::to_string(n) + " (delta " + std::to_string(delta) +
                       ")";
            case Kind::ConsecutiveIncrementsAt:
                return "consecutive increments at " + std::to_string(n);
            case Kind::Failed:
                return "failed: " + message;
        }
        return "";
    }
};

// Classification of one parameter/IC combination over a generation horizon.
struct SurveyRecord {
    std::optional<RecursionSpec> spec;  // absent when the spec itself was invalid
    std::string spec_descriptor;
    std::string ics_descriptor;
    index_t horizon = 0;
    SurveyOutcome outcome;
    bool validator_ran = false;
    bool validator_passed = false;
    std::string validator_summary;
    term_t max_value = 0;
    index_t generated_len = 0;
    double final_ratio = 0.0;
};

namespace detail {

// First event scanning forward through the table from index `from`:
// a non-slow difference, or (Conolly-type) two consecutive unit increments.
inline std::optional<SurveyOutcome> scan_events(const std::vector<term_t>& table, index_t from,
                                                index_t to, bool conolly_family) {
    for (index_t n = std::max<index_t>(from, 2); n <= to; ++n) {
        long long d = table_delta(table, n);
        if (d != 0 && d != 1)
            return SurveyOutcome{SurveyOutcome::Kind::NonSlowAt, n, d, std::nullopt, ""};
        if (conolly_family && n >= 3 && d == 1 && table_delta(table, n - 1) == 1)
            return SurveyOutcome{SurveyOutcome::Kind::ConsecutiveIncrementsAt, n, 0, std::nullopt,
                                 ""};
    }
    return std::nullopt;
}

}  // namespace detail

// Generates one grid point to the horizon and classifies the first event.
// A passing validator verdict with any outcome other than slow-to-horizon
// would contradict the guarantees the validator certifies, so it aborts.
inline SurveyRecord survey_point(const RecursionSpec& spec, const IcPattern& ics, index_t horizon) {
    SurveyRecord rec;
    rec.spec = spec;
    rec.spec_descriptor = spec.describe();
    rec.ics_descriptor = ics.describe();
    rec.horizon = horizon;

    if (spec.is<Conway>() || spec.is<Conolly>()) {
        auto ics_list = ics.materialize();
        if (ics_list.size() >= spec.min_initial_conditions() && !ics_list.empty()) {
            bool all_positive = true;
            for (term_t v : ics_list)
                if (v < 1) all_positive = false;
            if (all_positive) {
                auto vr = validate(spec, ics_list);
                rec.validator_ran = true;
                rec.validator_passed = vr.overall;
                rec.validator_summary = vr.summary();
            }
        }
    }

    const bool conolly_family = spec.is<Conolly>() || spec.is<GeneralConolly>();
    try {
        SequenceState st(spec, ics.materialize());
        std::optional<SurveyOutcome> event =
            detail::scan_events(st.table(), 2, st.len(), conolly_family);
        while (!event && st.len() < horizon) {
            auto r = st.step();
            if (auto* d = std::get_if<Diagnostic>(&r)) {
                event = SurveyOutcome{SurveyOutcome::Kind::HaltedAt, d->n, 0, *d, ""};
                break;
            }
            event = detail::scan_events(st.table(), st.len(), st.len(), conolly_family);
        }
        rec.outcome = event.value_or(SurveyOutcome{});
        rec.generated_len = st.len();
        for (index_t i = 1; i <= st.len(); ++i) rec.max_value = std::max(rec.max_value, st.term(i));
        rec.final_ratio =
            static_cast<double>(st.term(st.len())) / static_cast<double>(st.len());
    } catch (const construction_error& e) {
        rec.outcome = {SurveyOutcome::Kind::Failed, 0, 0, std::nullopt, e.what()};
    } catch (const arithmetic_overflow& e) {
        rec.outcome = {SurveyOutcome::Kind::Failed, e.at_index, 0, std::nullopt, e.what()};
    }

    if (rec.validator_passed && rec.outcome.kind != SurveyOutcome::Kind::SlowToHorizon)
        throw std::logic_error("validator guarantee contradicted at " + rec.spec_descriptor +
                               " ics " + rec.ics_descriptor + ": " + rec.outcome.describe());
    return rec;
}

struct GridPoint {
    RecursionSpec spec;
    IcPattern ics;
};

// Runs all points in parallel; the result order is the input order regardless
// of scheduling.
inline std::vector<SurveyRecord> run_survey(const std::vector<GridPoint>& points, index_t horizon,
                                            unsigned threads = 0) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, points.size() ? points.size() : 1);
    std::vector<SurveyRecord> out(points.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            try {
                out[i] = survey_point(points[i].spec, points[i].ics, horizon);
            } catch (...) {
                std::lock_guard<std::mutex> lk(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

struct IntRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;  // inclusive
};

// Grid over (k, a, b) with all-ones initial conditions. When
// `ic_len_relative_to_b` is set, a point with parameter b gets lengths
// b+lo..b+hi; otherwise lengths are absolute. Points whose ICs are too short
// are still emitted and classify as Failed.
inline std::vector<SurveyRecord> survey_conway(IntRange k, IntRange a, IntRange b, IntRange ic_len,
                                               bool ic_len_relative_to_b, index_t horizon,
                                               unsigned threads = 0) {
    std::vector<GridPoint> pts;
    for (std::uint64_t kk = k.lo; kk <= k.hi; ++kk)
        for (std::uint64_t aa = a.lo; aa <= a.hi; ++aa)
            for (std::uint64_t bb = b.lo; bb <= b.hi; ++bb)
                for (std::uint64_t l = ic_len.lo; l <= ic_len.hi; ++l) {
                    std::uint64_t len = ic_len_relative_to_b ? bb + l : l;
                    pts.push_back({conway_spec(static_cast<unsigned>(kk), aa, bb),
                                   IcPattern::all_ones(len)});
                }
    return run_survey(pts, horizon, threads);
}

inline std::vector<SurveyRecord> survey_variant(IntRange k, IntRange a, IntRange b, IntRange c,
                                                const std::vector<IcPattern>& patterns,
                                                index_t horizon, unsigned threads = 0) {
    std::vector<GridPoint> pts;
    for (std::uint64_t kk = k.lo; kk <= k.hi; ++kk)
        for (std::uint64_t aa = a.lo; aa <= a.hi; ++aa)
            for (std::uint64_t bb = b.lo; bb <= b.hi; ++bb)
                for (std::uint64_t cc = c.lo; cc <= c.hi; ++cc)
                    for (const auto& p : patterns)
                        pts.push_back({variant_spec(static_cast<unsigned>(kk), aa, bb, cc), p});
    return run_survey(pts, horizon, threads);
}

inline std::vector<SurveyRecord> survey_conolly(IntRange s, const std::vector<IcPattern>& patterns,
                                                index_t horizon, unsigned threads = 0) {
    std::vector<GridPoint> pts;
    for (std::uint64_t ss = s.lo; ss <= s.hi; ++ss)
        for (const auto& p : patterns) pts.push_back({conolly_spec(ss), p});
    return run_survey(pts, horizon, threads);
}

}  // namespace metafib
