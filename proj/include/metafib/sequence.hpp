#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "metafib/recursion.hpp"

namespace metafib {

// Why a term could not be computed: which argument escaped which interval.
struct Diagnostic {
    enum class Role { InnerComposition, OuterArgument };

    index_t n = 0;               // index of the term that failed
    Role role = Role::OuterArgument;
    unsigned position = 1;       // composition step (1..k) or summand index (1-based)
    long long computed_value = 0;
    long long interval_low = 0;  // violated bounds
    long long interval_high = 0;
    bool open_interval = false;  // (low, high) when true, [low, high] otherwise

    bool operator==(const Diagnostic&) const = default;

    std::string message() const {
        std::string where = role == Role::InnerComposition
                                ? "composition step " + std::to_string(position)
                                : "summand " + std::to_string(position);
        const char* lb = open_interval ? "(" : "[";
        const char* rb = open_interval ? ")" : "]";
        return "term " + std::to_string(n) + ": " + where + " produced " +
               std::to_string(computed_value) + " outside " + lb +
               std::to_string(interval_low) + ", " + std::to_string(interval_high) + rb;
    }
};

// Full record of one term's evaluation, for debugging and display.
struct EvalTrace {
    struct CompositionStep {
        unsigned depth;    // 1..k
        index_t argument;  // index fed into the table at this step
        term_t value;      // table value read
        bool operator==(const CompositionStep&) const = default;
    };

    index_t n = 0;
    std::vector<CompositionStep> composition_chain;
    std::vector<std::pair<index_t, term_t>> summand_arguments;  // in recursion order
    term_t result = 0;
};

// A spec plus the exact 1-indexed term table computed so far.
//
// Terms are generated strictly forward: term n is computed only from terms
// 1..n-1, so each step terminates and the table is re-derivable from the
// initial conditions. A failed step transitions the state to Halted and keeps
// every computed term.
class SequenceState {
public:
    using StepResult = std::variant<term_t, Diagnostic>;
    using ComposeResult = std::variant<term_t, Diagnostic>;

    SequenceState(RecursionSpec spec, const std::vector<term_t>& initial_conditions)
        : spec_(std::move(spec)) {
        if (initial_conditions.empty()) throw empty_initial_conditions();
        for (std::size_t i = 0; i < initial_conditions.size(); ++i) {
            if (initial_conditions[i] < 1 || initial_conditions[i] > max_term)
                throw non_positive_initial_condition(i + 1);
        }
        const std::size_t required = spec_.min_initial_conditions();
        if (initial_conditions.size() < required)
            throw too_few_initial_conditions(required, initial_conditions.size());
        terms_.reserve(initial_conditions.size() + 1);
        terms_.push_back(0);  // slot 0 unused; the table is 1-indexed
        terms_.insert(terms_.end(), initial_conditions.begin(), initial_conditions.end());
        ic_len_ = initial_conditions.size();
    }

    const RecursionSpec& spec() const { return spec_; }
    index_t len() const { return terms_.size() - 1; }
    std::size_t ic_len() const { return ic_len_; }
    bool active() const { return !halted_.has_value(); }
    const std::optional<Diagnostic>& halted() const { return halted_; }

    term_t term(index_t i) const {
        if (i < 1 || i > len()) throw index_out_of_range(i, 1, len());
        return terms_[i];
    }

    // 1-indexed view; element 0 is a placeholder.
    const std::vector<term_t>& table() const { return terms_; }

    long long delta(index_t n) const {
        if (n < 2 || n > len()) throw index_out_of_range(n, 2, len());
        return static_cast<long long>(terms_[n]) - static_cast<long long>(terms_[n - 1]);
    }

    // v_0 = m, v_{t+1} = terms[v_t]; every v_t used as an index must lie in
    // [1, limit]. Returns v_depth.
    ComposeResult iterate_composition(unsigned depth, index_t m) const {
        return compose_bounded(depth, m, len(), 0, nullptr);
    }

    // Same, but replaying a historical evaluation: indices bounded by `limit`.
    ComposeResult iterate_composition_bounded(unsigned depth, index_t m, index_t limit) const {
        return compose_bounded(depth, m, limit, 0, nullptr);
    }

    // Computes the next term. On success appends it; on failure transitions to
    // Halted and preserves the table. Re-stepping a Halted state returns the
    // same Diagnostic.
    StepResult step() {
        if (halted_) return *halted_;
        const index_t n = len() + 1;
        auto r = evaluate(n, nullptr);
        if (auto* d = std::get_if<Diagnostic>(&r)) {
            halted_ = *d;
            return *d;
        }
        terms_.push_back(std::get<term_t>(r));
        return std::get<term_t>(r);
    }

    // Repeated step until len = target_len or Halted. Idempotent when
    // target_len <= len.
    SequenceState& extend(index_t target_len) {
        while (len() < target_len && active()) step();
        return *this;
    }

    EvalTrace trace(index_t n) const {
        if (n <= ic_len_) throw trace_of_initial_condition(n);
        if (n > len()) throw index_out_of_range(n, ic_len_ + 1, len());
        EvalTrace t;
        t.n = n;
        auto r = evaluate(n, &t);
        // n was computed, so its replay cannot fail
        t.result = std::get<term_t>(r);
        return t;
    }

private:
    RecursionSpec spec_;
    std::vector<term_t> terms_;
    std::size_t ic_len_ = 0;
    std::optional<Diagnostic> halted_;

    ComposeResult compose_bounded(unsigned depth, index_t m, index_t limit, index_t fail_n,
                                  EvalTrace* tr) const {
        index_t cur = m;
        for (unsigned t = 1; t <= depth; ++t) {
            if (cur < 1 || cur > limit) {
                Diagnostic d;
                d.n = fail_n ? fail_n : m;
                d.role = Diagnostic::Role::InnerComposition;
                d.position = t;
                d.computed_value = static_cast<long long>(cur);
                d.interval_low = 1;
                d.interval_high = static_cast<long long>(limit);
                return d;
            }
            term_t v = terms_[cur];
            if (tr) tr->composition_chain.push_back({t, cur, v});
            cur = static_cast<index_t>(v);
        }
        return static_cast<term_t>(cur);
    }

    static Diagnostic outer_diag(index_t n, unsigned summand, long long value, long long low,
                                 long long high, bool open) {
        Diagnostic d;
        d.n = n;
        d.role = Diagnostic::Role::OuterArgument;
        d.position = summand;
        d.computed_value = value;
        d.interval_low = low;
        d.interval_high = high;
        d.open_interval = open;
        return d;
    }

    term_t checked_sum(index_t n, const std::vector<index_t>& args, EvalTrace* tr) const {
        term_t sum = 0;
        for (index_t a : args) {
            term_t v = terms_[a];
            if (tr) tr->summand_arguments.emplace_back(a, v);
            if (sum > max_term - v) throw arithmetic_overflow(n);
            sum += v;
        }
        return sum;
    }

    // Evaluates the recursion at index n using terms 1..n-1 only.
    StepResult evaluate(index_t n, EvalTrace* tr) const {
        const long long sn = static_cast<long long>(n);
        const index_t limit = n - 1;

        if (const auto* p = spec_.get_if<Conway>()) {
            auto cr = compose_bounded(p->k, n - p->b, limit, n, tr);
            if (auto* d = std::get_if<Diagnostic>(&cr)) return *d;
            const long long v = static_cast<long long>(std::get<term_t>(cr));
            const long long a = static_cast<long long>(p->a);
            // condition: 0 < A^k(n-b) < n-a, equivalent to both arguments
            // lying in [1, n-1]
            if (!(v > 0 && v < sn - a))
                return outer_diag(n, 1, v, 0, sn - a, /*open=*/true);
            const index_t outer = static_cast<index_t>(sn - a - v);
            const index_t inner = static_cast<index_t>(v);
            return checked_sum(n, {outer, inner}, tr);
        }

        if (const auto* p = spec_.get_if<ConwayVariant>()) {
            auto br = compose_bounded(p->k, n - p->b, limit, n, tr);
            if (auto* d = std::get_if<Diagnostic>(&br)) return *d;
            const long long v = static_cast<long long>(std::get<term_t>(br));
            const long long outer = sn - static_cast<long long>(p->a) - v;
            if (!(outer >= 1 && outer <= static_cast<long long>(limit)))
                return outer_diag(n, 1, outer, 1, static_cast<long long>(limit), false);
            auto cr = compose_bounded(p->k, n - p->c, limit, n, tr);
            if (auto* d = std::get_if<Diagnostic>(&cr)) return *d;
            const long long w = static_cast<long long>(std::get<term_t>(cr));
            if (!(w >= 1 && w <= static_cast<long long>(limit)))
                return outer_diag(n, 2, w, 1, static_cast<long long>(limit), false);
            return checked_sum(n, {static_cast<index_t>(outer), static_cast<index_t>(w)}, tr);
        }

        if (const auto* p = spec_.get_if<Conolly>()) {
            const long long s = static_cast<long long>(p->s);
            const long long arg1 = sn - s - static_cast<long long>(terms_[n - 1]);
            if (!(arg1 >= 1 && arg1 <= static_cast<long long>(limit)))
                return outer_diag(n, 1, arg1, 1, static_cast<long long>(limit), false);
            const long long arg2 = sn - s - 2 - static_cast<long long>(terms_[n - 3]);
            if (!(arg2 >= 1 && arg2 <= static_cast<long long>(limit)))
                return outer_diag(n, 2, arg2, 1, static_cast<long long>(limit), false);
            return checked_sum(n, {static_cast<index_t>(arg1), static_cast<index_t>(arg2)}, tr);
        }

        const auto& g = *spec_.get_if<GeneralConolly>();
        std::vector<index_t> args;
        args.reserve(g.terms.size());
        for (std::size_t i = 0; i < g.terms.size(); ++i) {
            const auto& [ai, bi] = g.terms[i];
            const long long arg =
                sn - static_cast<long long>(ai) - static_cast<long long>(terms_[n - bi]);
            if (!(arg >= 1 && arg <= static_cast<long long>(limit)))
                return outer_diag(n, static_cast<unsigned>(i + 1), arg, 1,
                                  static_cast<long long>(limit), false);
            args.push_back(static_cast<index_t>(arg));
        }
        return checked_sum(n, args, tr);
    }
};

inline SequenceState new_state(RecursionSpec spec, const std::vector<term_t>& ics) {
    return SequenceState(std::move(spec), ics);
}

}  // namespace metafib
