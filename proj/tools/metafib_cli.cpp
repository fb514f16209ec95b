// metafib — workbench for nested meta-Fibonacci recursions.
//
// Subcommands: gen, validate, check, survey, ratio, trace.
// Exit codes: 0 success, 1 usage error, 2 generation halted,
//             3 property/validation violation.

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "metafib/metafib.hpp"

using namespace metafib;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHalted = 2;
constexpr int kExitViolation = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- parsing

IcPattern parse_ics(const std::string& text) {
    auto parse_len = [](const std::string& s) -> std::size_t {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size() || v == 0) throw UsageError("bad ic length: " + s);
        return static_cast<std::size_t>(v);
    };
    if (text.rfind("ones:", 0) == 0) return IcPattern::all_ones(parse_len(text.substr(5)));
    if (text.rfind("stair:", 0) == 0) return IcPattern::staircase(parse_len(text.substr(6)));
    std::vector<term_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            values.push_back(std::stoull(item, &pos));
            if (pos != item.size()) throw UsageError("");
        } catch (...) {
            throw UsageError("bad ics element: '" + item + "'");
        }
    }
    if (values.empty()) throw UsageError("empty ics list");
    return IcPattern::explicit_list(std::move(values));
}

IntRange parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            std::uint64_t v = std::stoull(text);
            return {v, v};
        }
        IntRange r{std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
        if (r.hi < r.lo) throw UsageError("descending range: " + text);
        return r;
    } catch (const UsageError&) {
        throw;
    } catch (...) {
        throw UsageError("bad range: '" + text + "' (expected N or N..M)");
    }
}

// length range for ics sweep syntax like "ones:3..8"
std::vector<IcPattern> parse_ics_sweep(const std::string& text) {
    auto expand = [](const std::string& lens, auto make) {
        IntRange r = parse_range(lens);
        std::vector<IcPattern> out;
        for (std::uint64_t l = r.lo; l <= r.hi; ++l) out.push_back(make(l));
        return out;
    };
    if (text.rfind("ones:", 0) == 0)
        return expand(text.substr(5), [](std::uint64_t l) { return IcPattern::all_ones(l); });
    if (text.rfind("stair:", 0) == 0)
        return expand(text.substr(6), [](std::uint64_t l) { return IcPattern::staircase(l); });
    return {parse_ics(text)};
}

// Per-subcommand recursion-spec flags.
struct SpecOptions {
    std::string family;
    unsigned k = 1;
    std::uint64_t a = 0, b = 1, c = 1, s = 0;
    std::string pairs;  // general conolly, "a1:b1,a2:b2"
    std::string ics;

    void attach(CLI::App* cmd, const std::string& fam, bool need_ics = true) {
        family = fam;
        if (fam == "conway" || fam == "variant") {
            cmd->add_option("-k,--k", k, "composition depth (>= 1)");
            cmd->add_option("-a,--a", a, "shift a (>= 0)");
            cmd->add_option("-b,--b", b, "offset b (>= 1)");
        }
        if (fam == "variant") cmd->add_option("-c,--c", c, "second offset c (>= 1)");
        if (fam == "conolly") cmd->add_option("-s,--s", s, "shift s (>= 0)");
        if (fam == "general")
            cmd->add_option("--pairs", pairs, "summands as a1:b1,a2:b2,...")->required();
        if (need_ics)
            cmd->add_option("--ics", ics, "initial conditions: 1,1 | ones:N | stair:N")
                ->required();
    }

    RecursionSpec build_spec() const {
        try {
            if (family == "conway") return conway_spec(k, a, b);
            if (family == "variant") return variant_spec(k, a, b, c);
            if (family == "conolly") return conolly_spec(s);
            std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
            std::stringstream ss(pairs);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto colon = item.find(':');
                if (colon == std::string::npos)
                    throw UsageError("bad pair: '" + item + "' (expected a:b)");
                parts.emplace_back(std::stoull(item.substr(0, colon)),
                                   std::stoull(item.substr(colon + 1)));
            }
            return general_conolly_spec(std::move(parts));
        } catch (const construction_error& e) {
            throw UsageError(e.what());
        } catch (const UsageError&) {
            throw;
        } catch (...) {
            throw UsageError("bad spec parameters");
        }
    }

    SequenceState build_state() const {
        try {
            return SequenceState(build_spec(), parse_ics(ics).materialize());
        } catch (const construction_error& e) {
            throw UsageError(e.what());
        }
    }
};

// ---------------------------------------------------------------- output

void print_sequence(const SequenceState& st, const std::string& format) {
    if (format == "bfile") {
        std::cout << serialize_bfile(to_bfile(st));
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (index_t i = 1; i <= st.len(); ++i) std::cout << i << "," << st.term(i) << "\n";
    } else if (format == "json") {
        json out;
        out["spec"] = st.spec().describe();
        out["len"] = st.len();
        json terms = json::array();
        for (index_t i = 1; i <= st.len(); ++i) terms.push_back(st.term(i));
        out["terms"] = terms;
        if (st.halted()) out["halted"] = st.halted()->message();
        std::cout << out.dump(2) << "\n";
    } else {  // table
        std::printf("%10s %12s\n", "n", "value");
        for (index_t i = 1; i <= st.len(); ++i)
            std::printf("%10llu %12llu\n", static_cast<unsigned long long>(i),
                        static_cast<unsigned long long>(st.term(i)));
    }
}

void print_report(const ValidationReport& rep) {
    std::cout << "spec: " << rep.spec.describe() << "\n";
    for (const auto& h : rep.hypotheses) {
        std::cout << "  " << (h.satisfied ? "[pass] " : "[FAIL] ") << h.name;
        if (h.witness)
            std::cout << "  (witness: index " << h.witness->first << ", " << h.witness->second
                      << ")";
        std::cout << "\n";
    }
    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
    std::cout << (rep.overall ? "overall: PASS" : "overall: FAIL") << "\n";
    if (rep.overall) std::cout << "guarantees: " << rep.guarantees << "\n";
}

int report_check(const CheckResult& r) {
    std::cout << r.property_name << " on [" << r.checked_range.first << ", "
              << r.checked_range.second << "]: " << (r.holds ? "PASS" : "FAIL") << "\n";
    if (r.first_violation)
        std::cout << "  first violation at " << r.first_violation->first << ": "
                  << r.first_violation->second << "\n";
    return r.holds ? kExitOk : kExitViolation;
}

json outcome_to_json(const SurveyOutcome& o) {
    json j;
    switch (o.kind) {
        case SurveyOutcome::Kind::SlowToHorizon:
            j["kind"] = "slow-to-horizon";
            break;
        case SurveyOutcome::Kind::HaltedAt:
            j["kind"] = "halted";
            j["n"] = o.n;
            if (o.diagnostic) j["diagnostic"] = o.diagnostic->message();
            break;
        case SurveyOutcome::Kind::NonSlowAt:
            j["kind"] = "non-slow";
            j["n"] = o.n;
            j["delta"] = o.delta;
            break;
        case SurveyOutcome::Kind::ConsecutiveIncrementsAt:
            j["kind"] = "consecutive-increments";
            j["n"] = o.n;
            break;
        case SurveyOutcome::Kind::Failed:
            j["kind"] = "failed";
            j["message"] = o.message;
            break;
    }
    return j;
}

json record_to_json(const SurveyRecord& r) {
    json j;
    j["spec"] = r.spec_descriptor;
    j["ics"] = r.ics_descriptor;
    j["horizon"] = r.horizon;
    j["outcome"] = outcome_to_json(r.outcome);
    j["validator"] = {{"ran", r.validator_ran},
                      {"passed", r.validator_passed},
                      {"summary", r.validator_summary}};
    j["max_value"] = r.max_value;
    j["generated_len"] = r.generated_len;
    j["final_ratio"] = r.final_ratio;
    return j;
}

// ---------------------------------------------------------------- commands

struct GenCmd {
    SpecOptions spec;
    index_t horizon = 100;
    std::string format = "table";
};

int run_gen(const GenCmd& cmd) {
    auto st = cmd.spec.build_state();
    st.extend(cmd.horizon);
    print_sequence(st, cmd.format);
    if (st.len() < cmd.horizon && st.halted()) {
        std::cerr << "halted: " << st.halted()->message() << "\n";
        return kExitHalted;
    }
    return kExitOk;
}

int run_validate(const SpecOptions& opts) {
    auto spec = opts.build_spec();
    auto ics = parse_ics(opts.ics).materialize();
    if (!spec.is<Conway>() && !spec.is<Conolly>())
        throw UsageError("no validator exists for family '" + opts.family + "'");
    ValidationReport rep = validate(spec, ics);
    print_report(rep);
    return rep.overall ? kExitOk : kExitViolation;
}

struct CheckCmd {
    SpecOptions spec;
    std::string bfile_path;
    index_t horizon = 0;
    unsigned en_k = 2;
    std::vector<index_t> checkpoints;
};

// loads either the generated table or an external b-file
std::vector<term_t> check_table(const CheckCmd& cmd, index_t& n) {
    if (!cmd.bfile_path.empty()) {
        std::ifstream in(cmd.bfile_path);
        if (!in) throw UsageError("cannot open b-file: " + cmd.bfile_path);
        std::stringstream buf;
        buf << in.rdbuf();
        auto table = table_from_bfile(parse_bfile(buf.str()));
        if (n == 0 || n > table.size() - 1) n = table.size() - 1;
        return table;
    }
    if (cmd.spec.ics.empty()) throw UsageError("provide either spec flags with --ics or --bfile");
    auto st = cmd.spec.build_state();
    if (n == 0) throw UsageError("-n is required when generating");
    st.extend(n);
    if (st.len() < n) {
        std::cerr << "halted: " << st.halted()->message() << "\n";
        std::exit(kExitHalted);
    }
    return st.table();
}

int run_check_slow(CheckCmd cmd) {
    index_t n = cmd.horizon;
    auto table = check_table(cmd, n);
    return report_check(check_slow_growth(table, 2, n));
}

int run_check_noconsec(CheckCmd cmd) {
    index_t n = cmd.horizon;
    auto table = check_table(cmd, n);
    return report_check(check_no_consecutive_increments(table, 3, n));
}

int run_check_split(const CheckCmd& cmd) {
    auto st = cmd.spec.build_state();
    if (!st.spec().is<Conolly>()) throw UsageError("split law applies to conolly specs");
    if (cmd.horizon == 0) throw UsageError("-n is required");
    st.extend(cmd.horizon);
    if (st.len() < cmd.horizon) {
        std::cerr << "halted: " << st.halted()->message() << "\n";
        return kExitHalted;
    }
    return report_check(check_split_law(st, st.ic_len() + 1, st.len()));
}

int run_check_en(const CheckCmd& cmd) {
    if (cmd.horizon == 0) throw UsageError("-n is required");
    auto rep = check_en_correspondence(cmd.en_k, cmd.horizon);
    int rc = report_check(rep.main);
    std::cout << "  checked n up to " << rep.max_checked_n << "\n";
    std::cout << "  auxiliary 2 (shifted predecessor hit): "
              << (rep.hyp2_all ? "PASS" : "FAIL") << "\n";
    std::cout << "  auxiliary 3 (successor shift): " << (rep.hyp3_all ? "PASS" : "FAIL") << "\n";
    if (!rep.hyp2_all || !rep.hyp3_all) rc = kExitViolation;
    return rc;
}

int run_check_growth(const CheckCmd& cmd) {
    auto st = cmd.spec.build_state();
    if (cmd.checkpoints.empty()) throw UsageError("--checkpoints is required");
    index_t target = *std::max_element(cmd.checkpoints.begin(), cmd.checkpoints.end());
    st.extend(target);
    if (st.len() < target) {
        std::cerr << "halted: " << st.halted()->message() << "\n";
        return kExitHalted;
    }
    auto rep = growth_report(st, cmd.checkpoints);
    for (const auto& [n, v] : rep) std::cout << n << " " << v << "\n";
    bool inc = strictly_increasing(rep);
    std::cout << "strictly increasing: " << (inc ? "PASS" : "FAIL") << "\n";
    return inc ? kExitOk : kExitViolation;
}

struct SurveyCmd {
    std::string k = "1", a = "0", b = "1", c = "1", s = "0";
    std::string ics;
    bool ics_relative = false;
    index_t horizon = 10000;
    unsigned threads = 0;
    std::string out_path, csv_path;
    bool timestamp = false;
};

int run_survey(const std::string& family, const SurveyCmd& cmd) {
    std::vector<SurveyRecord> recs;
    if (family == "conway") {
        auto lens = parse_ics_sweep(cmd.ics);
        IntRange len_range{0, 0};
        if (!lens.empty() && lens.front().kind == IcPattern::Kind::AllOnes)
            len_range = {lens.front().length, lens.back().length};
        else
            throw UsageError("conway survey sweeps all-ones ics; use --ics ones:L or ones:L1..L2");
        recs = survey_conway(parse_range(cmd.k), parse_range(cmd.a), parse_range(cmd.b),
                             len_range, cmd.ics_relative, cmd.horizon, cmd.threads);
    } else if (family == "variant") {
        recs = survey_variant(parse_range(cmd.k), parse_range(cmd.a), parse_range(cmd.b),
                              parse_range(cmd.c), parse_ics_sweep(cmd.ics), cmd.horizon,
                              cmd.threads);
    } else {
        recs = survey_conolly(parse_range(cmd.s), parse_ics_sweep(cmd.ics), cmd.horizon,
                              cmd.threads);
    }

    json report;
    report["meta"] = {{"family", family}, {"horizon", cmd.horizon}, {"records", recs.size()}};
    if (cmd.timestamp) {
        char buf[64];
        std::time_t now = std::time(nullptr);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        report["meta"]["generated_at"] = buf;
    }
    json arr = json::array();
    for (const auto& r : recs) arr.push_back(record_to_json(r));
    report["records"] = arr;

    if (!cmd.out_path.empty()) {
        std::ofstream out(cmd.out_path);
        if (!out) throw UsageError("cannot write " + cmd.out_path);
        out << report.dump(2) << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
    if (!cmd.csv_path.empty()) {
        std::ofstream out(cmd.csv_path);
        if (!out) throw UsageError("cannot write " + cmd.csv_path);
        out << "spec,ics,horizon,outcome,n,validator_passed,max_value,generated_len,final_ratio\n";
        for (const auto& r : recs) {
            out << r.spec_descriptor << "," << r.ics_descriptor << "," << r.horizon << ","
                << outcome_to_json(r.outcome)["kind"].get<std::string>() << "," << r.outcome.n
                << "," << (r.validator_passed ? 1 : 0) << "," << r.max_value << ","
                << r.generated_len << "," << r.final_ratio << "\n";
        }
    }

    std::size_t slow = 0;
    for (const auto& r : recs)
        if (r.outcome.kind == SurveyOutcome::Kind::SlowToHorizon) ++slow;
    std::cerr << recs.size() << " records, " << slow << " slow-to-horizon\n";
    return kExitOk;
}

struct RatioCmd {
    SpecOptions spec;
    index_t horizon = 10000;
    std::string ref = "none";
    index_t first_sample = 10;
};

int run_ratio(const RatioCmd& cmd) {
    auto st = cmd.spec.build_state();
    st.extend(cmd.horizon);
    if (st.len() < cmd.horizon) {
        std::cerr << "halted: " << st.halted()->message() << "\n";
        return kExitHalted;
    }
    RatioReference ref = RatioReference::None;
    unsigned k_for_phi = 0;
    if (cmd.ref == "half") {
        ref = RatioReference::Half;
    } else if (cmd.ref == "phi") {
        ref = RatioReference::PhiInverse;
        if (const auto* p = st.spec().get_if<Conway>())
            k_for_phi = p->k;
        else if (const auto* p = st.spec().get_if<ConwayVariant>())
            k_for_phi = p->k;
        else
            throw UsageError("--ref phi needs a conway-type spec");
    } else if (cmd.ref != "none") {
        throw UsageError("--ref must be half, phi, or none");
    }
    auto schedule = geometric_schedule(std::min(cmd.first_sample, cmd.horizon), cmd.horizon);
    auto rep = ratio_report(st, schedule, ref, k_for_phi, 4);
    std::printf("%10s %12s %14s\n", "n", "value", "value/n");
    for (const auto& s : rep.samples)
        std::printf("%10llu %12llu %14.9f\n", static_cast<unsigned long long>(s.n),
                    static_cast<unsigned long long>(s.value), s.ratio);
    std::printf("tail running max %.9f, min %.9f\n", rep.tail_running_max, rep.tail_running_min);
    if (rep.reference)
        std::printf("reference %.12f, deviation at last sample %.9f\n", *rep.reference,
                    *rep.deviation_at_last);
    if (rep.descriptive_only) std::printf("[descriptive only] %s\n", rep.note.c_str());
    return kExitOk;
}

struct TraceCmd {
    SpecOptions spec;
    index_t at = 0;
};

int run_trace(const TraceCmd& cmd) {
    auto st = cmd.spec.build_state();
    st.extend(cmd.at);
    if (st.len() < cmd.at) {
        std::cerr << "halted: " << st.halted()->message() << "\n";
        return kExitHalted;
    }
    EvalTrace t;
    try {
        t = st.trace(cmd.at);
    } catch (const trace_of_initial_condition&) {
        throw UsageError("term " + std::to_string(cmd.at) + " is an initial condition");
    }
    std::cout << "term " << t.n << " of " << st.spec().describe() << "\n";
    for (const auto& s : t.composition_chain)
        std::cout << "  composition step " << s.depth << ": table[" << s.argument
                  << "] = " << s.value << "\n";
    for (std::size_t i = 0; i < t.summand_arguments.size(); ++i)
        std::cout << "  summand " << i + 1 << ": table[" << t.summand_arguments[i].first
                  << "] = " << t.summand_arguments[i].second << "\n";
    std::cout << "  result " << t.result << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"meta-Fibonacci recursion workbench"};
    app.require_subcommand(1);
    app.set_config("--config", "", "optional key=value config file; flags override");
    app.allow_config_extras(false);

    const std::vector<std::string> families = {"conway", "variant", "conolly", "general"};

    // gen
    auto* gen = app.add_subcommand("gen", "generate a sequence");
    gen->require_subcommand(1);
    std::map<std::string, GenCmd> gen_cmds;
    for (const auto& fam : families) {
        auto* sub = gen->add_subcommand(fam);
        auto& cmd = gen_cmds[fam];
        cmd.spec.attach(sub, fam);
        sub->add_option("-n,--terms", cmd.horizon, "number of terms to generate")->required();
        sub->add_option("--format", cmd.format, "table|csv|bfile|json")
            ->check(CLI::IsMember({"table", "csv", "bfile", "json"}));
    }

    // validate
    auto* val = app.add_subcommand("validate", "check sufficient hypotheses");
    val->require_subcommand(1);
    std::map<std::string, SpecOptions> val_cmds;
    for (const auto& fam : {std::string("conway"), std::string("conolly")}) {
        auto* sub = val->add_subcommand(fam);
        val_cmds[fam].attach(sub, fam);
    }

    // check
    auto* chk = app.add_subcommand("check", "post-generation property checks");
    chk->require_subcommand(1);
    std::map<std::string, CheckCmd> chk_cmds;
    for (const auto& prop : {"slow", "noconsec", "split", "en", "growth"}) {
        auto* sub = chk->add_subcommand(prop);
        auto& cmd = chk_cmds[prop];
        std::string p = prop;
        if (p == "en") {
            sub->add_option("-k,--k", cmd.en_k, "composition depth");
            sub->add_option("-n,--terms", cmd.horizon, "horizon")->required();
            continue;
        }
        // spec flags are shared across families here; --family selects
        sub->add_option("--family", cmd.spec.family, "conway|variant|conolly|general")
            ->default_val(p == "split" || p == "growth" ? "conolly" : "conway");
        sub->add_option("-k,--k", cmd.spec.k, "");
        sub->add_option("-a,--a", cmd.spec.a, "");
        sub->add_option("-b,--b", cmd.spec.b, "");
        sub->add_option("-c,--c", cmd.spec.c, "");
        sub->add_option("-s,--s", cmd.spec.s, "");
        sub->add_option("--pairs", cmd.spec.pairs, "");
        sub->add_option("--ics", cmd.spec.ics, "");
        sub->add_option("-n,--terms", cmd.horizon, "horizon");
        if (p == "slow" || p == "noconsec")
            sub->add_option("--bfile", cmd.bfile_path, "check an external b-file instead");
        if (p == "growth")
            sub->add_option("--checkpoints", cmd.checkpoints, "indices to sample")->delimiter(',');
    }

    // survey
    auto* sur = app.add_subcommand("survey", "parameter sweeps");
    sur->require_subcommand(1);
    std::map<std::string, SurveyCmd> sur_cmds;
    for (const auto& fam : {"conway", "variant", "conolly"}) {
        auto* sub = sur->add_subcommand(fam);
        auto& cmd = sur_cmds[fam];
        std::string f = fam;
        if (f != "conolly") {
            sub->add_option("--k", cmd.k, "range N or N..M");
            sub->add_option("--a", cmd.a, "range");
            sub->add_option("--b", cmd.b, "range");
        }
        if (f == "variant") sub->add_option("--c", cmd.c, "range");
        if (f == "conolly") sub->add_option("--s", cmd.s, "range");
        sub->add_option("--ics", cmd.ics, "ones:L, ones:L1..L2, stair:L1..L2, or explicit list")
            ->required();
        if (f == "conway")
            sub->add_flag("--rel", cmd.ics_relative, "ic lengths are offsets from b");
        sub->add_option("-n,--horizon", cmd.horizon, "generation horizon");
        sub->add_option("--threads", cmd.threads, "worker threads (0 = all cores)");
        sub->add_option("--out", cmd.out_path, "write JSON report here (default stdout)");
        sub->add_option("--csv", cmd.csv_path, "also write a CSV summary");
        sub->add_flag("--timestamp", cmd.timestamp, "include a generation timestamp in meta");
    }

    // ratio
    auto* rat = app.add_subcommand("ratio", "value/n diagnostics");
    rat->require_subcommand(1);
    std::map<std::string, RatioCmd> rat_cmds;
    for (const auto& fam : families) {
        auto* sub = rat->add_subcommand(fam);
        auto& cmd = rat_cmds[fam];
        cmd.spec.attach(sub, fam);
        sub->add_option("-n,--terms", cmd.horizon, "horizon")->required();
        sub->add_option("--ref", cmd.ref, "half|phi|none");
        sub->add_option("--first", cmd.first_sample, "first sample index");
    }

    // trace
    auto* trc = app.add_subcommand("trace", "show one term's evaluation");
    trc->require_subcommand(1);
    std::map<std::string, TraceCmd> trc_cmds;
    for (const auto& fam : families) {
        auto* sub = trc->add_subcommand(fam);
        auto& cmd = trc_cmds[fam];
        cmd.spec.attach(sub, fam);
        sub->add_option("--at", cmd.at, "term index to trace")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        auto picked = [](CLI::App* parent) {
            return parent->get_subcommands().front()->get_name();
        };
        if (gen->parsed()) return run_gen(gen_cmds[picked(gen)]);
        if (val->parsed()) return run_validate(val_cmds[picked(val)]);
        if (chk->parsed()) {
            auto prop = picked(chk);
            auto& cmd = chk_cmds[prop];
            if (prop == "slow") return run_check_slow(cmd);
            if (prop == "noconsec") return run_check_noconsec(cmd);
            if (prop == "split") return run_check_split(cmd);
            if (prop == "en") return run_check_en(cmd);
            return run_check_growth(cmd);
        }
        if (sur->parsed()) return run_survey(picked(sur), sur_cmds[picked(sur)]);
        if (rat->parsed()) return run_ratio(rat_cmds[picked(rat)]);
        if (trc->parsed()) return run_trace(trc_cmds[picked(trc)]);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const construction_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bfile_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
