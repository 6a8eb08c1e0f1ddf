#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "merging.hpp"
#include "postulates.hpp"
#include "revision.hpp"
#include "strategy.hpp"

namespace fcmerge {

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t atoms = 6;
    std::size_t rules = 8;
    std::size_t body_len = 3;
    double neg_prob = 0.3;
    std::vector<Strategy> strategies{all_strategies.begin(), all_strategies.end()};
    std::vector<PostulateId> postulates{all_postulates.begin(), all_postulates.end()};
    std::size_t jobs = 1;
    bool shrink = true;
    std::size_t max_witnesses = 3;  // shrunk witnesses kept per (postulate, strategy)
    EnumerationLimits limits{};
};

inline void validate(const FuzzConfig& cfg) {
    if (cfg.atoms < 1) throw ConfigError("atoms must be at least 1");
    if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
    if (!(cfg.neg_prob >= 0.0 && cfg.neg_prob <= 1.0)) throw ConfigError("neg_prob must lie in [0, 1]");
    if (cfg.strategies.empty()) throw ConfigError("no strategy selected");
    if (cfg.postulates.empty()) throw ConfigError("no postulate selected");
    if (cfg.jobs < 1) throw ConfigError("jobs must be at least 1");
    bool merging = std::any_of(cfg.postulates.begin(), cfg.postulates.end(),
                               [](PostulateId id) { return id.family == PostulateId::Family::FP; });
    if (merging && cfg.rules < 1) throw ConfigError("merging postulates need rules >= 1 (profile members are nonempty)");
}

/// Random source for the generators: std::mt19937_64 with modulo reduction
/// for bounded draws and 53-bit fractions for probabilities. Both are fully
/// specified, so streams reproduce across platforms and versions.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }
    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

  private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Atom names a..z, then v26, v27, ...
inline std::vector<std::string> vocabulary(std::size_t atoms) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < atoms; ++i)
        out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
    return out;
}

/// Up to `cfg.rules` rules (at least `min_rules`) over `vocab`; bodies hold
/// up to `cfg.body_len` literals, an empty body being a fact.
inline Program gen_program(const FuzzConfig& cfg, RandomStream& rng, const std::vector<std::string>& vocab,
                           std::size_t min_rules = 0) {
    auto literal = [&] {
        const std::string& atom = vocab[rng.below(vocab.size())];
        return Literal(atom, rng.chance(cfg.neg_prob));
    };
    std::size_t n = std::max(min_rules, rng.below(cfg.rules + 1));
    Program out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Literal> body;
        std::size_t len = rng.below(cfg.body_len + 1);
        for (std::size_t j = 0; j < len; ++j) body.push_back(literal());
        out.insert(Rule(std::move(body), literal()));
    }
    return out;
}

inline Program gen_program(const FuzzConfig& cfg, RandomStream& rng) {
    return gen_program(cfg, rng, vocabulary(cfg.atoms));
}

namespace detail {

/// `count` vocabularies for the programs of one instance. Half the time
/// they all coincide on a subset of at least half the atoms, so the programs
/// talk about the same things and can conflict; otherwise each is drawn
/// independently.
inline std::vector<std::vector<std::string>> draw_vocabularies(const FuzzConfig& cfg, RandomStream& rng,
                                                               std::size_t count) {
    auto all = vocabulary(cfg.atoms);
    auto subset = [&](std::size_t min_size) {
        auto v = all;
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
        v.resize(min_size + rng.below(all.size() - min_size + 1));
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<std::vector<std::string>> out;
    if (rng.chance(0.5)) {
        out.assign(count, subset((cfg.atoms + 1) / 2));
    } else {
        for (std::size_t i = 0; i < count; ++i) out.push_back(subset(1));
    }
    return out;
}

/// A program with the same closure, written as bare facts, when that is a
/// nonempty consistent program; otherwise a fresh draw.
inline Program syntactic_variant(const FuzzConfig& cfg, RandomStream& rng, const Program& p,
                                 const std::vector<std::string>& vocab, std::size_t min_rules) {
    ClosedSet c = closure(p);
    if (c.is_consistent() && c.size() >= std::max<std::size_t>(min_rules, 1) && rng.chance(0.5))
        return facts_of(c.literals());
    return gen_program(cfg, rng, vocab, min_rules);
}

inline Profile gen_profile(const FuzzConfig& cfg, RandomStream& rng, const std::vector<std::string>& vocab) {
    std::vector<Program> members;
    std::size_t n = 1 + rng.below(3);
    for (std::size_t i = 0; i < n; ++i) members.push_back(gen_program(cfg, rng, vocab, 1));
    return Profile(std::move(members));
}

}  // namespace detail

/// A random instance binding exactly the variables of `id`.
inline Instance gen_instance(PostulateId id, const FuzzConfig& cfg, RandomStream& rng) {
    using F = PostulateId::Family;
    const auto& spec = spec_of(id);
    auto vocabs = detail::draw_vocabularies(cfg, rng, spec.program_vars.size() + spec.profile_vars.size());
    std::size_t next_vocab = 0;
    auto vocab = [&]() -> const std::vector<std::string>& { return vocabs[next_vocab++]; };

    Instance inst;
    if (id == PostulateId{F::SA, 5}) {
        inst.programs["P1"] = gen_program(cfg, rng, vocab());
        inst.programs["Q1"] = gen_program(cfg, rng, vocab());
        inst.programs["P2"] = detail::syntactic_variant(cfg, rng, inst.programs["P1"], vocab(), 0);
        inst.programs["Q2"] = detail::syntactic_variant(cfg, rng, inst.programs["Q1"], vocab(), 0);
        return inst;
    }
    if (id == PostulateId{F::FP, 3}) {
        inst.programs["P"] = gen_program(cfg, rng, vocab());
        inst.programs["Q"] = detail::syntactic_variant(cfg, rng, inst.programs["P"], vocab(), 0);
        Profile phi1 = detail::gen_profile(cfg, rng, vocab());
        const auto& v2 = vocab();
        std::vector<Program> members;
        for (const auto& m : phi1.members()) members.push_back(detail::syntactic_variant(cfg, rng, m, v2, 1));
        inst.profiles.emplace("Phi1", std::move(phi1));
        inst.profiles.emplace("Phi2", Profile(std::move(members)));
        return inst;
    }
    if (id == PostulateId{F::FP, 4}) {
        // Extending the constraint makes both premises P_i |- P likely.
        const Program p = gen_program(cfg, rng, vocab());
        inst.programs["P"] = p;
        for (const char* name : {"P1", "P2"}) {
            Program extra = gen_program(cfg, rng, vocab(), 1);
            inst.programs[name] = rng.chance(0.6) ? p | extra : extra;
        }
        return inst;
    }
    for (const auto& v : spec.program_vars) inst.programs[v] = gen_program(cfg, rng, vocab());
    for (const auto& v : spec.profile_vars) inst.profiles.emplace(v, detail::gen_profile(cfg, rng, vocab()));
    return inst;
}

/// Greedy shrinking: repeatedly drops rules that mention one atom, single
/// rules, profile members, and single body literals while `keep` still
/// holds. The result is locally minimal under those moves.
inline Instance shrink(const Instance& inst, const std::function<bool(const Instance&)>& keep) {
    if (!keep(inst)) throw PredicateNotHolding();
    Instance cur = inst;

    // Every candidate built from `cur`, coarse moves first.
    auto candidates = [](const Instance& base) {
        std::vector<Instance> out;
        std::vector<std::string> atoms;
        for (const auto& [_, p] : base.programs)
            for (auto& a : atoms_of(p)) atoms.push_back(a);
        for (const auto& [_, f] : base.profiles)
            for (const auto& m : f.members())
                for (auto& a : atoms_of(m)) atoms.push_back(a);
        std::sort(atoms.begin(), atoms.end());
        atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

        auto mentions = [](const Rule& r, const std::string& atom) {
            if (r.head().atom() == atom) return true;
            return std::any_of(r.body().begin(), r.body().end(), [&](const Literal& l) { return l.atom() == atom; });
        };
        for (const auto& atom : atoms) {
            Instance next = base;
            bool ok = true;
            for (auto& [_, p] : next.programs) {
                Program kept;
                for (const auto& r : p)
                    if (!mentions(r, atom)) kept.insert(r);
                p = kept;
            }
            for (auto& [name, f] : next.profiles) {
                std::vector<Program> members;
                for (const auto& m : f.members()) {
                    Program kept;
                    for (const auto& r : m)
                        if (!mentions(r, atom)) kept.insert(r);
                    if (!kept.empty()) members.push_back(std::move(kept));
                }
                if (members.empty()) ok = false;
                else f = Profile(std::move(members));
            }
            if (ok && next.rule_count() < base.rule_count()) out.push_back(std::move(next));
        }

        for (const auto& [name, p] : base.programs) {
            for (const auto& r : p) {
                Instance next = base;
                next.programs[name].erase(r);
                out.push_back(std::move(next));
            }
        }
        for (const auto& [name, f] : base.profiles) {
            const auto& members = f.members();
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (members.size() > 1) {
                    auto fewer = members;
                    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
                    Instance next = base;
                    next.profiles.at(name) = Profile(std::move(fewer));
                    out.push_back(std::move(next));
                }
                if (members[i].size() > 1) {
                    for (const auto& r : members[i]) {
                        auto changed = members;
                        changed[i].erase(r);
                        Instance next = base;
                        next.profiles.at(name) = Profile(std::move(changed));
                        out.push_back(std::move(next));
                    }
                }
            }
        }

        auto drop_body_literals = [](const Program& p, auto&& emit) {
            for (const auto& r : p) {
                for (std::size_t j = 0; j < r.body().size(); ++j) {
                    auto body = r.body();
                    body.erase(body.begin() + static_cast<std::ptrdiff_t>(j));
                    Program q = p;
                    q.erase(r);
                    q.insert(Rule(std::move(body), r.head()));
                    emit(std::move(q));
                }
            }
        };
        for (const auto& [name, p] : base.programs) {
            drop_body_literals(p, [&](Program q) {
                Instance next = base;
                next.programs[name] = std::move(q);
                out.push_back(std::move(next));
            });
        }
        for (const auto& [name, f] : base.profiles) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                drop_body_literals(f.members()[i], [&](Program q) {
                    auto members = f.members();
                    members[i] = std::move(q);
                    Instance next = base;
                    next.profiles.at(name) = Profile(std::move(members));
                    out.push_back(std::move(next));
                });
            }
        }
        return out;
    };

    for (bool progress = true; progress;) {
        progress = false;
        for (auto& next : candidates(cur)) {
            if (keep(next)) {
                cur = std::move(next);
                progress = true;
                break;
            }
        }
    }
    return cur;
}

/// One evaluation of the search.
struct FuzzRecord {
    PostulateId postulate;
    Strategy strategy;
    std::size_t position;      // trial index
    std::uint64_t trial_seed;  // seeds the instance generator for this trial
    Status status;

    friend bool operator==(const FuzzRecord&, const FuzzRecord&) = default;
};

struct FuzzTally {
    PostulateId postulate;
    Strategy strategy;
    bool guaranteed;
    std::size_t holds = 0, violated = 0, vacuous = 0, skipped = 0;

    std::size_t non_vacuous() const { return holds + violated; }
    friend bool operator==(const FuzzTally&, const FuzzTally&) = default;
};

struct FuzzWitness {
    PostulateId postulate;
    Strategy strategy;
    std::size_t position;
    Instance original;
    Instance shrunk;
    Verdict verdict;  // on the shrunk instance
};

struct FuzzReport {
    FuzzConfig config;
    std::vector<FuzzRecord> records;
    std::vector<FuzzTally> tallies;
    std::vector<FuzzWitness> witnesses;

    const FuzzTally* tally(PostulateId id, Strategy s) const {
        for (const auto& t : tallies)
            if (t.postulate == id && t.strategy == s) return &t;
        return nullptr;
    }

    /// Violations of postulates the operators are proven to satisfy.
    std::size_t guaranteed_violations() const {
        std::size_t n = 0;
        for (const auto& t : tallies)
            if (t.guaranteed) n += t.violated;
        return n;
    }
};

inline std::uint64_t trial_seed(std::uint64_t seed, PostulateId id, std::size_t trial) {
    auto tag = static_cast<std::uint64_t>(id.family == PostulateId::Family::SA ? 100 : 200) + id.index;
    return mix_seed(seed ^ mix_seed((tag << 32) ^ trial));
}

/// Runs `cfg.trials` random instances per selected postulate and evaluates
/// each under every selected strategy; all strategies see the same
/// instances. The report is independent of `cfg.jobs`.
inline FuzzReport search(const FuzzConfig& cfg) {
    validate(cfg);
    const std::size_t n_strat = cfg.strategies.size();
    const std::size_t per_postulate = cfg.trials;
    const std::size_t total = cfg.postulates.size() * per_postulate;
    std::vector<Status> statuses(total * n_strat);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            PostulateId id = cfg.postulates[k / per_postulate];
            std::size_t trial = k % per_postulate;
            RandomStream rng(trial_seed(cfg.seed, id, trial));
            Instance inst = gen_instance(id, cfg, rng);
            for (std::size_t s = 0; s < n_strat; ++s) {
                inst.strategy = cfg.strategies[s];
                statuses[k * n_strat + s] = check(id, inst, cfg.limits).status;
            }
        }
    };
    std::size_t jobs = std::min(cfg.jobs, total);
    if (jobs <= 1) {
        work(0, total);
    } else {
        std::vector<std::thread> threads;
        std::size_t chunk = (total + jobs - 1) / jobs;
        for (std::size_t j = 0; j < jobs; ++j) {
            std::size_t b = j * chunk, e = std::min(total, b + chunk);
            if (b < e) threads.emplace_back(work, b, e);
        }
        for (auto& t : threads) t.join();
    }

    FuzzReport report;
    report.config = cfg;
    for (std::size_t pi = 0; pi < cfg.postulates.size(); ++pi) {
        PostulateId id = cfg.postulates[pi];
        for (std::size_t s = 0; s < n_strat; ++s) {
            Strategy strategy = cfg.strategies[s];
            FuzzTally tally{id, strategy, guaranteed(id, strategy)};
            std::size_t kept = 0;
            for (std::size_t trial = 0; trial < per_postulate; ++trial) {
                std::size_t k = pi * per_postulate + trial;
                Status st = statuses[k * n_strat + s];
                std::uint64_t ts = trial_seed(cfg.seed, id, trial);
                report.records.push_back({id, strategy, trial, ts, st});
                switch (st) {
                    case Status::Holds: ++tally.holds; break;
                    case Status::Violated: ++tally.violated; break;
                    case Status::Vacuous: ++tally.vacuous; break;
                    case Status::Skipped: ++tally.skipped; break;
                }
                if (st == Status::Violated && cfg.shrink && kept < cfg.max_witnesses) {
                    ++kept;
                    RandomStream rng(ts);
                    Instance inst = gen_instance(id, cfg, rng);
                    inst.strategy = strategy;
                    auto violated = [&](const Instance& i) {
                        return check(id, i, cfg.limits).status == Status::Violated;
                    };
                    Instance small = shrink(inst, violated);
                    report.witnesses.push_back({id, strategy, trial, inst, small, check(id, small, cfg.limits)});
                }
            }
            report.tallies.push_back(tally);
        }
    }
    return report;
}

}  // namespace fcmerge
