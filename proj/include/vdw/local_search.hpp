#pragma once

// Stochastic local search for lower-bound witnesses: GSAT-TABU (best net
// score among non-tabu variables, aspiration on reaching zero falsified
// clauses) and WalkSAT in the SKC variant.  Make/break counts are maintained
// incrementally through a critical-variable cache per clause.
//
// Searches are deterministic functions of (formula, config): run k draws its
// generator from splitmix64(seed, k), so outcomes are reproducible and
// individual runs could be farmed out without changing results.

#include "vdw/certificate.hpp"
#include "vdw/cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdw {

enum class LsScheme { GSAT_TABU, WALKSAT };

struct LsConfig {
    LsScheme scheme = LsScheme::GSAT_TABU;
    int runs = 10;
    long long cutoff = 100000;  // flips per run
    uint64_t seed = 1;
    int tabu_tenure = 10;
    double noise = 0.4;
    std::string initial;  // optional start bits; perturbed for runs > 1
};

struct LsOutcome {
    bool found = false;
    std::string witness;  // bits over the formula's variables when found
    long long best_unsat = -1;
    long long flips_used = 0;
    int runs_used = 0;
};

inline uint64_t splitmix64(uint64_t seed, uint64_t index) {
    uint64_t z = seed + (index + 1) * 0x9E3779B97f4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace detail {

// Occurrence lists plus incremental true-literal counters, the critical
// variable of each singly-satisfied clause, and per-variable make/break.
class LsState {
public:
    explicit LsState(const CnfFormula& f) : f_(f) {
        occ_pos_.assign(f.num_vars + 1, {});
        occ_neg_.assign(f.num_vars + 1, {});
        for (size_t ci = 0; ci < f.clauses.size(); ++ci)
            for (int lit : f.clauses[ci])
                (lit > 0 ? occ_pos_ : occ_neg_)[lit_var(lit)].push_back((int)ci);
        assign_.assign(f.num_vars + 1, 0);
        true_count_.assign(f.clauses.size(), 0);
        crit_.assign(f.clauses.size(), 0);
        make_.assign(f.num_vars + 1, 0);
        break_.assign(f.num_vars + 1, 0);
    }

    void reset(const std::vector<uint8_t>& start) {
        for (int v = 1; v <= f_.num_vars; ++v) assign_[v] = start[v];
        std::fill(make_.begin(), make_.end(), 0);
        std::fill(break_.begin(), break_.end(), 0);
        falsified_.clear();
        where_.assign(f_.clauses.size(), -1);
        for (size_t ci = 0; ci < f_.clauses.size(); ++ci) {
            int tc = 0, crit = 0;
            for (int lit : f_.clauses[ci])
                if (lit_true(lit)) {
                    ++tc;
                    crit = lit_var(lit);
                }
            true_count_[ci] = tc;
            crit_[ci] = tc == 1 ? crit : 0;
            if (tc == 0) {
                add_falsified((int)ci);
                for (int lit : f_.clauses[ci]) ++make_[lit_var(lit)];
            } else if (tc == 1) {
                ++break_[crit];
            }
        }
    }

    void flip(int v) {
        assign_[v] ^= 1;
        const auto& now_true = assign_[v] ? occ_pos_[v] : occ_neg_[v];
        const auto& now_false = assign_[v] ? occ_neg_[v] : occ_pos_[v];
        for (int ci : now_true) {
            int tc = ++true_count_[ci];
            if (tc == 1) {
                remove_falsified(ci);
                for (int lit : f_.clauses[ci]) --make_[lit_var(lit)];
                crit_[ci] = v;
                ++break_[v];
            } else if (tc == 2) {
                --break_[crit_[ci]];
                crit_[ci] = 0;
            }
        }
        for (int ci : now_false) {
            int tc = --true_count_[ci];
            if (tc == 0) {
                add_falsified(ci);
                for (int lit : f_.clauses[ci]) ++make_[lit_var(lit)];
                --break_[v];
                crit_[ci] = 0;
            } else if (tc == 1) {
                int crit = 0;
                for (int lit : f_.clauses[ci])
                    if (lit_true(lit)) {
                        crit = lit_var(lit);
                        break;
                    }
                crit_[ci] = crit;
                ++break_[crit];
            }
        }
    }

    bool lit_true(int lit) const {
        return assign_[lit_var(lit)] == (lit > 0 ? 1 : 0);
    }

    long long num_falsified() const { return (long long)falsified_.size(); }
    const std::vector<int>& falsified() const { return falsified_; }
    long long make(int v) const { return make_[v]; }
    long long brk(int v) const { return break_[v]; }
    int num_vars() const { return f_.num_vars; }
    const std::vector<int>& clause(int ci) const { return f_.clauses[ci]; }

    std::string bits() const {
        std::string s(f_.num_vars, '0');
        for (int v = 1; v <= f_.num_vars; ++v)
            if (assign_[v]) s[v - 1] = '1';
        return s;
    }

private:
    void add_falsified(int ci) {
        where_[ci] = (int)falsified_.size();
        falsified_.push_back(ci);
    }

    void remove_falsified(int ci) {
        int pos = where_[ci];
        int last = falsified_.back();
        falsified_[pos] = last;
        where_[last] = pos;
        falsified_.pop_back();
        where_[ci] = -1;
    }

    const CnfFormula& f_;
    std::vector<std::vector<int>> occ_pos_, occ_neg_;
    std::vector<uint8_t> assign_;
    std::vector<int> true_count_, crit_;
    std::vector<long long> make_, break_;
    std::vector<int> falsified_, where_;
};

}  // namespace detail

// Runs the configured scheme until a model is found or runs x cutoff flips
// are spent.  A found witness is re-checked against the formula before being
// reported; an unverifiable model is a logic error.
inline LsOutcome local_search(const CnfFormula& f, const LsConfig& cfg) {
    if (cfg.runs < 1 || cfg.cutoff < 1 || cfg.noise < 0.0 || cfg.noise > 1.0)
        throw std::invalid_argument("local_search: invalid config");
    if (!cfg.initial.empty() && (int)cfg.initial.size() != f.num_vars)
        throw std::invalid_argument("local_search: initial assignment length mismatch");

    LsOutcome out;
    if (f.num_vars == 0) {
        out.found = f.clauses.empty();
        out.best_unsat = out.found ? 0 : (long long)f.clauses.size();
        out.runs_used = out.found ? 1 : cfg.runs;
        return out;
    }

    detail::LsState state(f);
    std::vector<uint8_t> start(f.num_vars + 1, 0);
    std::vector<long long> tabu_until(f.num_vars + 1, -1);
    std::vector<int> candidates;
    candidates.reserve(f.num_vars);

    for (int run = 0; run < cfg.runs && !out.found; ++run) {
        std::mt19937_64 rng(splitmix64(cfg.seed, (uint64_t)run));
        out.runs_used = run + 1;

        if (cfg.initial.empty()) {
            for (int v = 1; v <= f.num_vars; ++v) start[v] = rng() & 1;
        } else {
            for (int v = 1; v <= f.num_vars; ++v) start[v] = cfg.initial[v - 1] == '1';
            if (run > 0) {
                // Later runs explore around the supplied start: flip about
                // five percent of the variables, at least one.
                int k = std::max(1, (int)((f.num_vars * 5 + 50) / 100));
                std::vector<int> order(f.num_vars);
                for (int v = 1; v <= f.num_vars; ++v) order[v - 1] = v;
                for (int i = 0; i < k; ++i) {
                    std::uniform_int_distribution<int> pick(i, f.num_vars - 1);
                    std::swap(order[i], order[pick(rng)]);
                    start[order[i]] ^= 1;
                }
            }
        }

        state.reset(start);
        std::fill(tabu_until.begin(), tabu_until.end(), -1);
        if (out.best_unsat < 0 || state.num_falsified() < out.best_unsat)
            out.best_unsat = state.num_falsified();

        for (long long flip = 0; flip < cfg.cutoff; ++flip) {
            if (state.num_falsified() == 0) break;

            int chosen = 0;
            if (cfg.scheme == LsScheme::GSAT_TABU) {
                long long best = std::numeric_limits<long long>::min();
                candidates.clear();
                for (int v = 1; v <= f.num_vars; ++v) {
                    long long score = state.make(v) - state.brk(v);
                    if (tabu_until[v] >= flip &&
                        state.num_falsified() - state.make(v) + state.brk(v) != 0)
                        continue;  // tabu and no aspiration
                    if (score > best) {
                        best = score;
                        candidates.clear();
                    }
                    if (score == best) candidates.push_back(v);
                }
                if (candidates.empty()) {
                    // Everything tabu with no winning move: take a random
                    // variable rather than stalling.
                    std::uniform_int_distribution<int> pick(1, f.num_vars);
                    chosen = pick(rng);
                } else {
                    std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
                    chosen = candidates[pick(rng)];
                }
                tabu_until[chosen] = flip + cfg.tabu_tenure;
            } else {
                const auto& fals = state.falsified();
                std::uniform_int_distribution<size_t> pick_clause(0, fals.size() - 1);
                const auto& clause = state.clause(fals[pick_clause(rng)]);
                candidates.clear();
                for (int lit : clause)
                    if (state.brk(lit_var(lit)) == 0) candidates.push_back(lit_var(lit));
                if (!candidates.empty()) {
                    std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
                    chosen = candidates[pick(rng)];
                } else if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) <
                           cfg.noise) {
                    std::uniform_int_distribution<size_t> pick(0, clause.size() - 1);
                    chosen = lit_var(clause[pick(rng)]);
                } else {
                    long long best = std::numeric_limits<long long>::max();
                    for (int lit : clause) {
                        long long b = state.brk(lit_var(lit));
                        if (b < best) {
                            best = b;
                            candidates.clear();
                        }
                        if (b == best) candidates.push_back(lit_var(lit));
                    }
                    std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
                    chosen = candidates[pick(rng)];
                }
            }

            state.flip(chosen);
            ++out.flips_used;
            if (state.num_falsified() < out.best_unsat)
                out.best_unsat = state.num_falsified();
        }

        if (state.num_falsified() == 0) {
            std::string bits = state.bits();
            if (first_falsified_clause(f, bits))
                throw std::logic_error("local_search: unverifiable witness");
            out.found = true;
            out.witness = bits;
        }
    }
    return out;
}

// Initial guess for n from a full solution for n-1: copy and append a zero.
inline std::string warm_start_vdw(const std::string& bits_prev) {
    return bits_prev + "0";
}

// Initial guess for a palindromic half at n from the half at n-2: the
// embedding sends variable v to v+1, so the previous half shifts right and
// the new border variable 1 starts at zero.
inline std::string warm_start_pd(const std::string& half_prev) {
    return "0" + half_prev;
}

struct CampaignRow {
    int n = 0;
    bool found = false;
    long long flips = 0;
    std::string certificate;  // compact notation when found
};

struct CampaignConfig {
    LsScheme scheme = LsScheme::GSAT_TABU;
    int runs_per_n = 10;
    long long cutoff = 100000;
    uint64_t seed = 1;
    long long max_total_flips = -1;  // < 0: unlimited
    int max_consecutive_failures = 1;
    int n_limit = -1;  // < 0: unlimited
    bool palindromic = false;
};

struct CampaignResult {
    std::vector<CampaignRow> rows;
    int best_n = 0;           // largest n with a verified witness
    long long lower_bound = 0;  // best_n + 1 when any witness was found
    std::string best_witness;   // raw bits for best_n
    long long total_flips = 0;
};

// Sweeps n upward with warm starts, stopping on budget exhaustion or a run
// of consecutive failures.  Every reported witness has been verified against
// its formula by local_search.
inline CampaignResult run_campaign(int t0, int t1, int n_start,
                                   const CampaignConfig& cfg) {
    CampaignResult res;
    std::string warm;
    int failures = 0;
    // Palindromic sweeps stay within one parity class so that the n-2 -> n
    // warm start applies.
    int step = cfg.palindromic ? 2 : 1;
    for (int n = n_start;; n += step) {
        if (cfg.n_limit >= 0 && n > cfg.n_limit) break;
        if (cfg.max_total_flips >= 0 && res.total_flips >= cfg.max_total_flips) break;

        CnfFormula f = cfg.palindromic ? encode_pd(t0, t1, n) : encode_vdw(t0, t1, n);
        LsConfig ls;
        ls.scheme = cfg.scheme;
        ls.runs = cfg.runs_per_n;
        ls.cutoff = cfg.cutoff;
        ls.seed = splitmix64(cfg.seed, (uint64_t)n);
        if (!warm.empty() && (int)warm.size() == f.num_vars) ls.initial = warm;

        LsOutcome lo = local_search(f, ls);
        res.total_flips += lo.flips_used;

        CampaignRow row;
        row.n = n;
        row.found = lo.found;
        row.flips = lo.flips_used;
        if (lo.found) {
            row.certificate = emit_compact(lo.witness);
            res.best_n = n;
            res.lower_bound = n + 1;
            res.best_witness = lo.witness;
            warm = cfg.palindromic ? warm_start_pd(lo.witness)
                                   : warm_start_vdw(lo.witness);
            failures = 0;
        } else {
            ++failures;
            warm.clear();
        }
        res.rows.push_back(std::move(row));
        if (!lo.found && failures >= cfg.max_consecutive_failures) break;
    }
    return res;
}

// Line-oriented record per campaign row: n, verdict, flips, certificate.
inline std::string format_campaign(const CampaignResult& res) {
    std::string out;
    for (const auto& row : res.rows) {
        out += std::to_string(row.n);
        out += row.found ? " found " : " not-found ";
        out += std::to_string(row.flips);
        if (row.found) {
            out += ' ';
            out += row.certificate;
        }
        out += '\n';
    }
    return out;
}

}  // namespace vdw
