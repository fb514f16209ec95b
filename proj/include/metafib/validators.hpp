#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metafib/sequence.hpp"

namespace metafib {

struct Hypothesis {
    std::string name;
    bool satisfied = false;
    // (index, description of the offending values); present iff unsatisfied
    std::optional<std::pair<index_t, std::string>> witness;
};

// Pass/fail per sufficient hypothesis, with witnesses for failures.
struct ValidationReport {
    RecursionSpec spec;
    std::vector<Hypothesis> hypotheses;
    bool overall = false;  // conjunction of hypothesis flags
    std::string guarantees;  // what now holds for all n, empty when overall is false
    std::vector<std::string> notes;  // advisory observations, never affect overall

    std::string summary() const {
        std::string out;
        for (const auto& h : hypotheses) {
            out += h.name + (h.satisfied ? ": pass" : ": FAIL");
            if (h.witness)
                out += " (at " + std::to_string(h.witness->first) + ": " + h.witness->second + ")";
            out += "; ";
        }
        out += overall ? "overall: pass" : "overall: FAIL";
        return out;
    }
};

namespace detail {

inline std::optional<std::pair<index_t, std::string>> first_non_slow(
    const std::vector<term_t>& ics) {
    for (std::size_t i = 1; i < ics.size(); ++i) {
        long long d = static_cast<long long>(ics[i]) - static_cast<long long>(ics[i - 1]);
        if (d != 0 && d != 1)
            return std::make_pair(static_cast<index_t>(i + 1),
                                  "difference " + std::to_string(d));
    }
    return std::nullopt;
}

}  // namespace detail

// Sufficient conditions for a Conway spec + initial conditions to stay
// defined and slow-growing forever:
//   I.a  all initial conditions positive
//   I.b  initial conditions slow-growing
//   I.c  first term equals 1
//   II   the first recursive term exists and its forward difference is 0 or 1
inline ValidationReport validate_conway(const Conway& params, const std::vector<term_t>& ics) {
    ValidationReport rep{RecursionSpec(params), {}, false, "", {}};

    Hypothesis ia{"I.a positive initial conditions", true, std::nullopt};
    for (std::size_t i = 0; i < ics.size(); ++i) {
        if (ics[i] < 1) {
            ia.satisfied = false;
            ia.witness = std::make_pair(static_cast<index_t>(i + 1), "value 0");
            break;
        }
    }

    Hypothesis ib{"I.b slow-growing initial conditions", true, std::nullopt};
    if (auto w = detail::first_non_slow(ics)) {
        ib.satisfied = false;
        ib.witness = w;
    }

    Hypothesis ic{"I.c first term equals 1", !ics.empty() && ics[0] == 1, std::nullopt};
    if (!ic.satisfied)
        ic.witness = std::make_pair(index_t{1},
                                    ics.empty() ? std::string("no terms")
                                                : "value " + std::to_string(ics[0]));

    const index_t first_recursive = static_cast<index_t>(ics.size()) + 1;
    Hypothesis ii{"II first recursive term defined with difference in {0,1}", false, std::nullopt};
    if (!ia.satisfied || ics.size() < params.b) {
        ii.witness = std::make_pair(first_recursive, "not evaluated: malformed initial conditions");
    } else {
        SequenceState st(rep.spec, ics);
        auto r = st.step();
        if (auto* d = std::get_if<Diagnostic>(&r)) {
            ii.witness = std::make_pair(first_recursive, d->message());
        } else {
            long long dlt = st.delta(first_recursive);
            if (dlt == 0 || dlt == 1) {
                ii.satisfied = true;
            } else {
                ii.witness = std::make_pair(first_recursive,
                                            "difference " + std::to_string(dlt));
            }
        }
    }

    if (params.b > params.a)
        rep.notes.push_back("b > a: definedness of the first recursive term is automatic "
                            "once hypothesis I holds");

    rep.hypotheses = {ia, ib, ic, ii};
    rep.overall = ia.satisfied && ib.satisfied && ic.satisfied && ii.satisfied;
    if (rep.overall)
        rep.guarantees = "sequence is defined for all positive n, remains slow-growing, "
                         "and is unbounded";
    return rep;
}

// Sufficient conditions for a Conolly spec + r initial conditions:
//   I    the first recursive term exists
//   II   no index 3..r has two consecutive forward differences of 1
//   III  the sequence is slow-growing through term r+1
inline ValidationReport validate_conolly(const Conolly& params, const std::vector<term_t>& ics) {
    ValidationReport rep{RecursionSpec(params), {}, false, "", {}};
    const index_t r = static_cast<index_t>(ics.size());
    const index_t first_recursive = r + 1;

    bool positive = !ics.empty();
    for (term_t v : ics)
        if (v < 1) positive = false;

    Hypothesis hi{"I first recursive term defined", false, std::nullopt};
    Hypothesis hii{"II no consecutive unit increments within initial conditions", true,
                   std::nullopt};
    Hypothesis hiii{"III slow-growing through the first recursive term", false, std::nullopt};

    for (std::size_t n = 3; n <= ics.size(); ++n) {
        long long d1 = static_cast<long long>(ics[n - 1]) - static_cast<long long>(ics[n - 2]);
        long long d0 = static_cast<long long>(ics[n - 2]) - static_cast<long long>(ics[n - 3]);
        if (d1 == 1 && d0 == 1) {
            hii.satisfied = false;
            hii.witness = std::make_pair(static_cast<index_t>(n), "two consecutive differences of 1");
            break;
        }
    }

    auto ics_slow = detail::first_non_slow(ics);

    if (!positive || ics.size() < 3) {
        hi.witness = std::make_pair(first_recursive, "not evaluated: malformed initial conditions");
        if (ics_slow)
            hiii.witness = ics_slow;
        else
            hiii.witness = std::make_pair(first_recursive,
                                          std::string("not evaluated: malformed initial conditions"));
    } else {
        SequenceState st(rep.spec, ics);
        auto sr = st.step();
        if (auto* d = std::get_if<Diagnostic>(&sr)) {
            hi.witness = std::make_pair(first_recursive, d->message());
            if (ics_slow)
                hiii.witness = ics_slow;
            else
                hiii.witness = std::make_pair(first_recursive, "term undefined");
        } else {
            hi.satisfied = true;
            long long dlt = st.delta(first_recursive);
            if (ics_slow) {
                hiii.witness = ics_slow;
            } else if (dlt != 0 && dlt != 1) {
                hiii.witness = std::make_pair(first_recursive, "difference " + std::to_string(dlt));
            } else {
                hiii.satisfied = true;
                // The hypotheses only constrain indices up to r; a unit
                // increment pair straddling r+1 already contradicts the
                // conclusion, so surface it early as an advisory.
                if (r >= 2 && dlt == 1 && st.delta(r) == 1)
                    rep.notes.push_back("advisory: differences at " + std::to_string(r) + " and " +
                                        std::to_string(first_recursive) +
                                        " are both 1; the guaranteed conclusion forbids this");
            }
        }
    }

    rep.hypotheses = {hi, hii, hiii};
    rep.overall = hi.satisfied && hii.satisfied && hiii.satisfied;
    if (rep.overall)
        rep.guarantees = "sequence is defined and slow-growing for all n >= 1, is unbounded, "
                         "and never has two consecutive unit increments";
    return rep;
}

inline ValidationReport validate(const RecursionSpec& spec, const std::vector<term_t>& ics) {
    if (const auto* c = spec.get_if<Conway>()) return validate_conway(*c, ics);
    if (const auto* c = spec.get_if<Conolly>()) return validate_conolly(*c, ics);
    throw bad_parameter("no validator exists for this recursion family");
}

struct ConditionN {
    bool holds = false;
    long long value = 0;  // A^k(n-b)
    long long bound = 0;  // n-a; the requirement is 0 < value < bound
};

// Definedness condition for term n of a Conway spec: 0 < A^k(n-b) < n-a.
inline std::variant<ConditionN, Diagnostic> check_condition_N(const SequenceState& state,
                                                              index_t n) {
    const auto* p = state.spec().get_if<Conway>();
    if (!p) throw bad_parameter("condition check applies to Conway specs only");
    if (n < state.ic_len() + 1 || n > state.len() + 1)
        throw index_out_of_range(n, state.ic_len() + 1, state.len() + 1);
    auto cr = state.iterate_composition_bounded(p->k, n - p->b, n - 1);
    if (auto* d = std::get_if<Diagnostic>(&cr)) return *d;
    ConditionN out;
    out.value = static_cast<long long>(std::get<term_t>(cr));
    out.bound = static_cast<long long>(n) - static_cast<long long>(p->a);
    out.holds = out.value > 0 && out.value < out.bound;
    return out;
}

}  // namespace metafib
