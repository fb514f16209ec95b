#pragma once

// Reference evaluator for small n: a direct top-down transcription of each
// recursion, kept deliberately separate from the engine's forward generator.
// A per-evaluation cache makes the recursion tractable; the logic is still
// the recursive definition, argument checks and all.

#include <map>
#include <optional>
#include <vector>

#include "metafib/recursion.hpp"

namespace metafib::testing {

class NaiveOracle {
public:
    NaiveOracle(RecursionSpec spec, std::vector<term_t> ics)
        : spec_(std::move(spec)), ics_(std::move(ics)) {}

    // Value of term n, or nullopt if the recursion is undefined at or below n.
    std::optional<term_t> value(long long n) {
        if (n < 1) return std::nullopt;
        if (n <= static_cast<long long>(ics_.size())) return ics_[n - 1];
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        auto v = compute(n);
        cache_.emplace(n, v);
        return v;
    }

    // Terms ic_len+1 .. limit in order; stops at the first undefined term.
    struct Run {
        std::vector<term_t> values;  // 1-indexed, slot 0 unused; includes ics
        std::optional<long long> first_undefined;
    };

    Run run(long long limit) {
        Run out;
        out.values.assign(1, 0);
        out.values.insert(out.values.end(), ics_.begin(), ics_.end());
        for (long long n = static_cast<long long>(ics_.size()) + 1; n <= limit; ++n) {
            auto v = value(n);
            if (!v) {
                out.first_undefined = n;
                break;
            }
            out.values.push_back(*v);
        }
        return out;
    }

private:
    RecursionSpec spec_;
    std::vector<term_t> ics_;
    std::map<long long, std::optional<term_t>> cache_;

    // sub(m) within the evaluation of term n: m must be a legal argument.
    std::optional<term_t> sub(long long n, long long m) {
        if (m < 1 || m > n - 1) return std::nullopt;
        return value(m);
    }

    std::optional<term_t> compose(long long n, unsigned k, long long start) {
        long long cur = start;
        for (unsigned i = 0; i < k; ++i) {
            auto v = sub(n, cur);
            if (!v) return std::nullopt;
            cur = static_cast<long long>(*v);
        }
        return static_cast<term_t>(cur);
    }

    std::optional<term_t> compute(long long n) {
        if (const auto* p = spec_.get_if<Conway>()) {
            auto t = compose(n, p->k, n - static_cast<long long>(p->b));
            if (!t) return std::nullopt;
            auto x = sub(n, n - static_cast<long long>(p->a) - static_cast<long long>(*t));
            auto y = sub(n, static_cast<long long>(*t));
            if (!x || !y) return std::nullopt;
            return *x + *y;
        }
        if (const auto* p = spec_.get_if<ConwayVariant>()) {
            auto t = compose(n, p->k, n - static_cast<long long>(p->b));
            if (!t) return std::nullopt;
            auto x = sub(n, n - static_cast<long long>(p->a) - static_cast<long long>(*t));
            if (!x) return std::nullopt;
            auto u = compose(n, p->k, n - static_cast<long long>(p->c));
            if (!u) return std::nullopt;
            auto y = sub(n, static_cast<long long>(*u));
            if (!y) return std::nullopt;
            return *x + *y;
        }
        if (const auto* p = spec_.get_if<Conolly>()) {
            const long long s = static_cast<long long>(p->s);
            auto c1ref = sub(n, n - 1);
            auto c3ref = sub(n, n - 3);
            if (!c1ref || !c3ref) return std::nullopt;
            auto x = sub(n, n - s - static_cast<long long>(*c1ref));
            auto y = sub(n, n - s - 2 - static_cast<long long>(*c3ref));
            if (!x || !y) return std::nullopt;
            return *x + *y;
        }
        const auto& g = *spec_.get_if<GeneralConolly>();
        term_t total = 0;
        for (const auto& [ai, bi] : g.terms) {
            auto r = sub(n, n - static_cast<long long>(bi));
            if (!r) return std::nullopt;
            auto x = sub(n, n - static_cast<long long>(ai) - static_cast<long long>(*r));
            if (!x) return std::nullopt;
            total += *x;
        }
        return total;
    }
};

}  // namespace metafib::testing
