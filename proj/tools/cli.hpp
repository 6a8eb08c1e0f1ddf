#pragma once

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcmerge/fcmerge.hpp"

namespace fcmerge::cli {

enum ExitCode : int {
    kOk = 0,
    kViolated = 1,
    kSourceError = 2,
    kUsageError = 3,
    kSizeLimit = 4,
};

using nlohmann::json;

inline json to_json(const ClosedSet& s) {
    json lits = json::array();
    for (const auto& l : s.literals()) lits.push_back(to_string(l));
    return {{"bottom", s.is_bottom()}, {"literals", lits}};
}

inline json to_json(const Program& p) {
    json rules = json::array();
    for (const auto& r : p) rules.push_back(to_string(r));
    return rules;
}

inline json to_json(const Instance& inst) {
    json programs = json::object(), profiles = json::object();
    for (const auto& [name, p] : inst.programs) programs[name] = to_json(p);
    for (const auto& [name, f] : inst.profiles) {
        json members = json::array();
        for (const auto& m : f.members()) members.push_back(to_json(m));
        profiles[name] = members;
    }
    return {{"strategy", to_string(inst.strategy)}, {"programs", programs}, {"profiles", profiles}};
}

inline json to_json(const Verdict& v) {
    json witness = json::array();
    for (const auto& [label, set] : v.witness) witness.push_back({{"label", label}, {"value", to_json(set)}});
    return {{"status", to_string(v.status)}, {"reason", v.reason}, {"witness", witness}};
}

inline json to_json(const FuzzReport& r) {
    const auto& c = r.config;
    json strategies = json::array(), postulates = json::array();
    for (auto s : c.strategies) strategies.push_back(to_string(s));
    for (auto p : c.postulates) postulates.push_back(to_string(p));
    json tallies = json::array(), records = json::array(), witnesses = json::array();
    for (const auto& t : r.tallies)
        tallies.push_back({{"postulate", to_string(t.postulate)}, {"strategy", to_string(t.strategy)},
                           {"guaranteed", t.guaranteed}, {"holds", t.holds}, {"violated", t.violated},
                           {"vacuous", t.vacuous}, {"skipped", t.skipped}});
    for (const auto& e : r.records)
        records.push_back({{"postulate", to_string(e.postulate)}, {"strategy", to_string(e.strategy)},
                           {"position", e.position}, {"trial_seed", e.trial_seed}, {"status", to_string(e.status)}});
    for (const auto& w : r.witnesses)
        witnesses.push_back({{"postulate", to_string(w.postulate)}, {"strategy", to_string(w.strategy)},
                             {"position", w.position}, {"original", to_json(w.original)},
                             {"shrunk", to_json(w.shrunk)}, {"verdict", to_json(w.verdict)}});
    return {{"config",
             {{"seed", c.seed}, {"trials", c.trials}, {"atoms", c.atoms}, {"rules", c.rules},
              {"body_len", c.body_len}, {"neg_prob", c.neg_prob}, {"strategies", strategies},
              {"postulates", postulates}}},
            {"tallies", tallies},
            {"records", records},
            {"witnesses", witnesses},
            {"guaranteed_violations", r.guaranteed_violations()}};
}

inline json to_json(const CorpusReport& r) {
    json results = json::array();
    for (const auto& e : r.results)
        results.push_back({{"name", e.name}, {"strategy", to_string(e.strategy)}, {"expected", e.expected},
                           {"actual", e.actual}, {"matched", e.matched}});
    return {{"success", r.success()}, {"results", results}};
}

/// Cap from FCMERGE_MAX_ENUM, or the default.
inline EnumerationLimits limits_from_env() {
    EnumerationLimits limits;
    if (const char* v = std::getenv("FCMERGE_MAX_ENUM")) {
        try {
            std::size_t used = 0;
            unsigned long n = std::stoul(v, &used);
            if (used != std::string(v).size()) throw std::invalid_argument(v);
            limits.max_candidates = n;
        } catch (const std::exception&) {
            throw ConfigError(std::string("FCMERGE_MAX_ENUM is not a number: ") + v);
        }
    }
    return limits;
}

inline Strategy strategy_option(const std::string& name) {
    auto s = parse_strategy(name);
    if (!s) throw ConfigError("unknown op '" + name + "' (expected rk, h or eh)");
    return *s;
}

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

/// Runs one command line. Results go to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const std::filesystem::path& default_corpus = {}) {
    CLI::App app{"Syntactic revision, arbitration and merging of forward-chaining programs", "fcmerge"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit a JSON document instead of text");

    std::string op = "rk";
    auto add_op = [&](CLI::App* sub) {
        sub->add_option("--op", op, "Revision operator: rk, h or eh")->check(CLI::IsMember({"rk", "h", "eh"}));
    };

    auto* cns_cmd = app.add_subcommand("cns", "Forward-chaining closure of a program");
    std::string cns_file;
    bool layers = false;
    cns_cmd->add_option("FILE", cns_file)->required();
    cns_cmd->add_flag("--layers", layers, "Also print the derivation layers");

    auto* revise_cmd = app.add_subcommand("revise", "Revise BASE by NEW");
    std::string base_file, new_file;
    bool revise_closure = false;
    add_op(revise_cmd);
    revise_cmd->add_option("BASE", base_file)->required();
    revise_cmd->add_option("NEW", new_file)->required();
    revise_cmd->add_flag("--closure", revise_closure, "Print the closure of the result");

    auto* arb_cmd = app.add_subcommand("arbitrate", "Arbitrate between two programs");
    std::string a_file, b_file;
    add_op(arb_cmd);
    arb_cmd->add_option("A", a_file)->required();
    arb_cmd->add_option("B", b_file)->required();

    auto* merge_cmd = app.add_subcommand("merge", "Merge programs under an integrity constraint");
    std::string constraint_file;
    std::vector<std::string> profile_files;
    add_op(merge_cmd);
    merge_cmd->add_option("CONSTRAINT", constraint_file)->required();
    merge_cmd->add_option("PROG", profile_files, "Program or profile files")->required();

    auto* check_cmd = app.add_subcommand("check", "Evaluate one postulate on concrete programs");
    std::string postulate_name;
    std::map<std::string, std::string> program_files, profile_bindings;
    add_op(check_cmd);
    check_cmd->add_option("POSTULATE", postulate_name, "SA1..SA8 or FP0..FP8")->required();
    for (const char* v : {"P", "Q", "P1", "P2", "Q1", "Q2"})
        check_cmd->add_option(std::string("--") + v, program_files[v], std::string("Program bound to ") + v);
    for (const char* v : {"Phi", "Phi1", "Phi2"})
        check_cmd->add_option(std::string("--") + v, profile_bindings[v], std::string("Profile bound to ") + v);

    auto* fuzz_cmd = app.add_subcommand("fuzz", "Search random instances for postulate violations");
    FuzzConfig cfg;
    std::string fuzz_strategies = "rk,h,eh", fuzz_postulates;
    bool no_shrink = false;
    fuzz_cmd->add_option("--seed", cfg.seed);
    fuzz_cmd->add_option("--trials", cfg.trials, "Instances per postulate");
    fuzz_cmd->add_option("--atoms", cfg.atoms);
    fuzz_cmd->add_option("--rules", cfg.rules, "Maximum rules per program");
    fuzz_cmd->add_option("--body-len", cfg.body_len);
    fuzz_cmd->add_option("--neg-prob", cfg.neg_prob);
    fuzz_cmd->add_option("--strategies", fuzz_strategies, "Comma-separated subset of rk,h,eh");
    fuzz_cmd->add_option("--postulates", fuzz_postulates, "Comma-separated postulates (default: all)");
    fuzz_cmd->add_option("--jobs", cfg.jobs, "Worker threads");
    fuzz_cmd->add_flag("--no-shrink", no_shrink, "Report violations without shrinking them");

    auto* corpus_cmd = app.add_subcommand("corpus", "Re-check the regression corpus");
    std::string corpus_dir = default_corpus.string();
    corpus_cmd->add_option("--dir", corpus_dir, "Corpus directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "fcmerge: " << e.what() << "\n";
        return kUsageError;
    }

    auto emit = [&](const json& j, const std::string& text) {
        if (as_json) out << j.dump(2) << "\n";
        else out << text;
    };

    try {
        const EnumerationLimits limits = limits_from_env();
        const Strategy strategy = strategy_option(op);

        if (*cns_cmd) {
            ClosedSet c = closure(load_program(cns_file));
            json j{{"closure", to_json(c)}};
            std::string text = render(c) + "\n";
            if (layers && c.is_consistent()) {
                auto strata = stratify(load_program(cns_file));
                json jl = json::array();
                for (std::size_t i = 0; i < strata.layers.size(); ++i) {
                    ClosedSet layer(strata.layers[i]);
                    jl.push_back(to_json(layer).at("literals"));
                    text += "L" + std::to_string(i) + ": " + render(layer) + "\n";
                }
                j["layers"] = jl;
            }
            emit(j, text);
            return kOk;
        }
        if (*revise_cmd) {
            Program p = load_program(base_file), q = load_program(new_file);
            json j{{"op", op}};
            std::string text;
            ClosedSet c;
            if (strategy == Strategy::ExtendedHull) {
                Flock f = revise_extended_hull(Flock(p), q, limits);
                json members = json::array();
                for (const auto& m : f.members()) members.push_back(to_json(m));
                j["flock"] = members;
                c = flock_closure(f);
                text = render(f);
            } else {
                Program r = strategy == Strategy::Rank ? revise_rank(p, q) : revise_hull(p, q, limits);
                j["program"] = to_json(r);
                c = closure(r);
                text = render(r);
            }
            j["closure"] = to_json(c);
            emit(j, revise_closure ? render(c) + "\n" : text);
            return kOk;
        }
        if (*arb_cmd) {
            ClosedSet r = arbitrate(load_program(a_file), load_program(b_file), strategy, limits);
            emit({{"op", op}, {"result", to_json(r)}}, render(r) + "\n");
            return kOk;
        }
        if (*merge_cmd) {
            std::vector<Program> members;
            for (const auto& f : profile_files) {
                Profile part = load_profile(f);
                members.insert(members.end(), part.members().begin(), part.members().end());
            }
            ClosedSet r = merge(load_program(constraint_file), Profile(std::move(members)), strategy, limits);
            emit({{"op", op}, {"result", to_json(r)}}, render(r) + "\n");
            return kOk;
        }
        if (*check_cmd) {
            auto id = parse_postulate(postulate_name);
            if (!id) throw ConfigError("unknown postulate '" + postulate_name + "'");
            Instance inst;
            inst.strategy = strategy;
            for (const auto& [var, file] : program_files)
                if (!file.empty()) inst.programs[var] = load_program(file);
            for (const auto& [var, file] : profile_bindings)
                if (!file.empty()) inst.profiles.emplace(var, load_profile(file));
            Verdict v = check(*id, inst, limits);
            json j = to_json(v);
            j["postulate"] = to_string(*id);
            j["op"] = op;
            emit(j, render(v));
            switch (v.status) {
                case Status::Violated: return kViolated;
                case Status::Skipped: return kSizeLimit;
                default: return kOk;
            }
        }
        if (*fuzz_cmd) {
            cfg.strategies.clear();
            for (const auto& s : split_list(fuzz_strategies)) cfg.strategies.push_back(strategy_option(s));
            if (!fuzz_postulates.empty()) {
                cfg.postulates.clear();
                for (const auto& name : split_list(fuzz_postulates)) {
                    auto id = parse_postulate(name);
                    if (!id) throw ConfigError("unknown postulate '" + name + "'");
                    cfg.postulates.push_back(*id);
                }
            }
            cfg.shrink = !no_shrink;
            cfg.limits = limits;
            FuzzReport r = search(cfg);
            emit(to_json(r), render(r));
            return r.guaranteed_violations() > 0 ? kViolated : kOk;
        }
        if (*corpus_cmd) {
            if (corpus_dir.empty()) throw ConfigError("no corpus directory given (use --dir)");
            CorpusReport r = run_corpus(std::filesystem::path(corpus_dir), limits);
            emit(to_json(r), render(r));
            return r.success() ? kOk : kViolated;
        }
    } catch (const SourceError& e) {
        err << "fcmerge: " << e.what() << "\n";
        return kSourceError;
    } catch (const EmptyProfile& e) {
        err << "fcmerge: " << e.what() << "\n";
        return kSourceError;
    } catch (const SizeLimitExceeded& e) {
        err << "fcmerge: " << e.what() << " (raise FCMERGE_MAX_ENUM to allow it)\n";
        return kSizeLimit;
    } catch (const std::exception& e) {
        err << "fcmerge: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace fcmerge::cli
