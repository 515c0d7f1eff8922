#pragma once

// Complete backtracking SAT solver: unit propagation to fixpoint plus
// two-sided Jeroslow-Wang branching, recomputed per node over the active
// residual formula.  Iterative control stack with literal/flipped frames,
// which doubles as the checkpoint format and the cube-splitting frontier.
//
// No clause learning, no restarts, no preprocessing beyond unit propagation,
// no lookahead beyond the branching weights: the search tree is a function
// of the input formula alone, which keeps runs reproducible and cube
// decompositions exact partitions of the search space.

#include "vdw/cnf.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace vdw {

enum class Verdict { SAT, UNSAT, INDETERMINATE };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::SAT: return "SAT";
        case Verdict::UNSAT: return "UNSAT";
        default: return "INDETERMINATE";
    }
}

struct SolveStats {
    long long nodes = 0;        // decisions made, counting both branches
    long long unit_props = 0;   // literals assigned by propagation
    int max_depth = 0;          // deepest decision stack
    double wall_seconds = 0.0;
};

struct SolveResult {
    Verdict verdict = Verdict::INDETERMINATE;
    std::vector<int8_t> witness;  // index v: >0 true, <0 false, 0 unassigned
    SolveStats stats;
};

// ---------------------------------------------------------------------------
// Pure single-step operations, usable independently of the solver.

// F restricted by literal u: clauses containing u vanish, occurrences of the
// complement are deleted (possibly leaving an empty clause).
inline CnfFormula residual(const CnfFormula& f, int u) {
    CnfFormula r;
    r.num_vars = f.num_vars;
    r.comments = f.comments;
    for (const auto& c : f.clauses) {
        bool satisfied = false;
        for (int lit : c)
            if (lit == u) { satisfied = true; break; }
        if (satisfied) continue;
        std::vector<int> nc;
        nc.reserve(c.size());
        for (int lit : c)
            if (lit != -u) nc.push_back(lit);
        r.clauses.push_back(std::move(nc));
    }
    return r;
}

struct UpResult {
    std::vector<int> implied;  // in propagation order
    bool conflict = false;
};

// Unit propagation to fixpoint on the formula as given, scanning clauses in
// order; independent of the solver's incremental machinery.
inline UpResult unit_propagate(const CnfFormula& f) {
    UpResult r;
    std::vector<int8_t> assign(f.num_vars + 1, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : f.clauses) {
            bool sat = false;
            int free_lit = 0, free_cnt = 0;
            for (int lit : c) {
                int8_t a = assign[lit_var(lit)];
                if (a == 0) {
                    ++free_cnt;
                    free_lit = lit;
                } else if ((a > 0) == (lit > 0)) {
                    sat = true;
                    break;
                }
            }
            if (sat) continue;
            if (free_cnt == 0) {
                r.conflict = true;
                return r;
            }
            if (free_cnt == 1) {
                assign[lit_var(free_lit)] = free_lit > 0 ? 1 : -1;
                r.implied.push_back(free_lit);
                changed = true;
            }
        }
    }
    return r;
}

// Jeroslow-Wang weight w(u) = sum over clauses containing u of 2^-length,
// as an exact fixed-point integer scaled by 2^62 (clauses longer than 62
// contribute nothing).
using JwWeight = unsigned __int128;

inline JwWeight jw_clause_contribution(size_t len) {
    return len <= 62 ? (JwWeight)1 << (62 - len) : 0;
}

inline JwWeight jw_weight_scaled(const CnfFormula& f, int u) {
    JwWeight w = 0;
    for (const auto& c : f.clauses)
        for (int lit : c)
            if (lit == u) w += jw_clause_contribution(c.size());
    return w;
}

inline double jw_weight(const CnfFormula& f, int u) {
    return (double)jw_weight_scaled(f, u) / (double)((JwWeight)1 << 62);
}

// Branching literal of the two-sided rule: maximise w(x) + w(-x); prefer the
// smallest variable on ties and the positive phase when w(x) >= w(-x).
// Returns 0 if no variable occurs in any clause.
inline int choose_branch(const CnfFormula& f) {
    std::vector<JwWeight> pos(f.num_vars + 1, 0), neg(f.num_vars + 1, 0);
    for (const auto& c : f.clauses) {
        JwWeight contrib = jw_clause_contribution(c.size());
        for (int lit : c) (lit > 0 ? pos[lit] : neg[-lit]) += contrib;
    }
    int best_var = 0;
    JwWeight best = 0;
    for (int v = 1; v <= f.num_vars; ++v) {
        JwWeight comb = pos[v] + neg[v];
        if (comb > best) {
            best = comb;
            best_var = v;
        }
    }
    if (best_var == 0) return 0;
    return pos[best_var] >= neg[best_var] ? best_var : -best_var;
}

// ---------------------------------------------------------------------------
// Checkpoints: the decision stack as (literal, flipped) pairs plus a formula
// fingerprint.  A frame (u, 0) still has its complement pending; (u, 1) has u
// currently assigned with the complement already explored.

struct Checkpoint {
    uint64_t formula_hash = 0;
    std::vector<std::pair<int, bool>> frames;

    bool operator==(const Checkpoint&) const = default;
};

inline uint64_t formula_hash(const CnfFormula& f) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](long long x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (uint64_t)(x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(f.num_vars);
    for (const auto& c : f.clauses) {
        for (int lit : c) mix(lit);
        mix(std::numeric_limits<long long>::min());
    }
    return h;
}

inline std::string serialize_checkpoint(const Checkpoint& cp) {
    std::ostringstream out;
    out << "h " << std::hex << cp.formula_hash << std::dec << '\n';
    for (auto [lit, flipped] : cp.frames) out << lit << ' ' << (flipped ? 1 : 0) << '\n';
    return out.str();
}

struct CheckpointParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Checkpoint parse_checkpoint(const std::string& text) {
    Checkpoint cp;
    std::istringstream in(text);
    std::string line;
    bool have_hash = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (!have_hash) {
            std::string tag;
            ls >> tag >> std::hex >> cp.formula_hash;
            if (tag != "h" || ls.fail())
                throw CheckpointParseError("checkpoint line 1: expected 'h <hash>'");
            have_hash = true;
            continue;
        }
        long long lit;
        int flag;
        ls >> lit >> flag;
        if (ls.fail() || lit == 0 || (flag != 0 && flag != 1))
            throw CheckpointParseError("checkpoint line " + std::to_string(lineno) +
                                       ": expected '<literal> <0|1>'");
        cp.frames.emplace_back((int)lit, flag == 1);
    }
    if (!have_hash) throw CheckpointParseError("checkpoint: missing hash header");
    return cp;
}

// ---------------------------------------------------------------------------

struct DpllOptions {
    long long max_nodes = -1;  // < 0: unlimited
    std::vector<int> assumptions;  // non-backtrackable cube prefix
    const Checkpoint* resume = nullptr;
    std::string checkpoint_path;   // written on INDETERMINATE exits
    long long checkpoint_every = 0;  // also every N nodes if > 0
    const std::atomic<bool>* cancel = nullptr;
};

class DpllSolver {
public:
    explicit DpllSolver(const CnfFormula& f)
        : num_vars_(f.num_vars), clauses_(f.clauses), hash_(formula_hash(f)) {
        occ_.assign(2 * (num_vars_ + 1), {});
        for (size_t ci = 0; ci < clauses_.size(); ++ci)
            for (int lit : clauses_[ci]) occ_[lit_index(lit)].push_back((int)ci);
        true_count_.assign(clauses_.size(), 0);
        false_count_.assign(clauses_.size(), 0);
        assign_.assign(num_vars_ + 1, 0);
        n_unsat_ = (long long)clauses_.size();
    }

    SolveResult solve(const DpllOptions& opts = {}) {
        auto t0 = std::chrono::steady_clock::now();
        SolveResult res;
        res.verdict = run_search(opts, nullptr, nullptr, -1);
        if (res.verdict == Verdict::SAT) res.witness = assign_;
        res.stats = stats_;
        res.stats.wall_seconds = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - t0).count();
        return res;
    }

    struct EnumResult {
        unsigned long long count = 0;
        std::vector<std::string> witnesses;  // lexicographically sorted
        bool complete = false;
        SolveStats stats;
    };

    EnumResult enumerate(bool want_witnesses, const DpllOptions& opts = {}) {
        auto t0 = std::chrono::steady_clock::now();
        EnumResult er;
        Verdict v = run_search(opts, &er, nullptr, -1, want_witnesses);
        er.complete = v != Verdict::INDETERMINATE;
        if (want_witnesses) std::sort(er.witnesses.begin(), er.witnesses.end());
        er.stats = stats_;
        er.stats.wall_seconds = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - t0).count();
        return er;
    }

    // Decision-literal cubes at the given depth.  Branches refuted above the
    // frontier are omitted; satisfiable leaves above it yield short cubes.
    // The cubes partition the models of the formula.
    std::vector<std::vector<int>> split(int level, const DpllOptions& opts = {}) {
        std::vector<std::vector<int>> cubes;
        run_search(opts, nullptr, &cubes, level);
        return cubes;
    }

    Checkpoint checkpoint() const {
        Checkpoint cp;
        cp.formula_hash = hash_;
        for (const auto& fr : frames_) cp.frames.emplace_back(fr.lit, fr.flipped);
        return cp;
    }

    uint64_t hash() const { return hash_; }
    const SolveStats& stats() const { return stats_; }

private:
    struct Frame {
        int lit;
        bool flipped;
        size_t trail_mark;
    };

    static size_t lit_index(int lit) { return 2 * (size_t)lit_var(lit) + (lit < 0); }

    void push_assign(int lit) {
        assign_[lit_var(lit)] = lit > 0 ? 1 : -1;
        trail_.push_back(lit);
    }

    // Counter updates for trail literals; returns a conflicting clause index
    // or -1.  Unit clauses found are assigned immediately.  After a conflict
    // the queue is still drained so that every trail literal has its counter
    // effects applied exactly once, keeping undo symmetric.
    long long propagate() {
        long long conflict = -1;
        while (qhead_ < trail_.size()) {
            int l = trail_[qhead_++];
            for (int ci : occ_[lit_index(l)])
                if (true_count_[ci]++ == 0) --n_unsat_;
            for (int ci : occ_[lit_index(-l)]) {
                ++false_count_[ci];
                if (conflict >= 0 || true_count_[ci] > 0) continue;
                int free_lit = 0, free_cnt = 0;
                bool sat = false;
                for (int lit : clauses_[ci]) {
                    int8_t a = assign_[lit_var(lit)];
                    if (a == 0) {
                        if (++free_cnt > 1) break;
                        free_lit = lit;
                    } else if ((a > 0) == (lit > 0)) {
                        sat = true;
                        break;
                    }
                }
                if (sat) continue;
                if (free_cnt == 0) {
                    conflict = ci;
                } else if (free_cnt == 1) {
                    push_assign(free_lit);
                    ++stats_.unit_props;
                }
            }
        }
        return conflict;
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            int l = trail_.back();
            trail_.pop_back();
            assign_[lit_var(l)] = 0;
            for (int ci : occ_[lit_index(l)])
                if (--true_count_[ci] == 0) ++n_unsat_;
            for (int ci : occ_[lit_index(-l)]) --false_count_[ci];
        }
        qhead_ = trail_.size();
    }

    // Two-sided Jeroslow-Wang over the active clauses.
    int choose_internal() {
        std::fill(wpos_.begin(), wpos_.end(), 0);
        std::fill(wneg_.begin(), wneg_.end(), 0);
        for (size_t ci = 0; ci < clauses_.size(); ++ci) {
            if (true_count_[ci] > 0) continue;
            size_t free_len = clauses_[ci].size() - false_count_[ci];
            JwWeight contrib = jw_clause_contribution(free_len);
            if (contrib == 0) continue;
            for (int lit : clauses_[ci]) {
                int v = lit_var(lit);
                if (assign_[v] != 0) continue;
                (lit > 0 ? wpos_ : wneg_)[v] += contrib;
            }
        }
        int best_var = 0;
        JwWeight best = 0;
        for (int v = 1; v <= num_vars_; ++v) {
            if (assign_[v] != 0) continue;
            JwWeight comb = wpos_[v] + wneg_[v];
            if (comb > best) {
                best = comb;
                best_var = v;
            }
        }
        if (best_var == 0) return 0;
        return wpos_[best_var] >= wneg_[best_var] ? best_var : -best_var;
    }

    // Shared search core.  With `en` set, satisfiable leaves are counted and
    // expanded; with `cubes` set, the frontier at `split_level` is collected.
    Verdict run_search(const DpllOptions& opts, EnumResult* en,
                       std::vector<std::vector<int>>* cubes, int split_level,
                       bool want_witnesses = false) {
        if (opts.resume && !opts.assumptions.empty())
            throw std::invalid_argument("dpll: cannot resume under assumptions");

        // Assumption prefix: fixed for the whole search, never flipped.
        for (int a : opts.assumptions) {
            if (a == 0 || lit_var(a) > num_vars_)
                throw std::invalid_argument("dpll: bad assumption literal");
            int8_t cur = assign_[lit_var(a)];
            if (cur != 0) {
                if ((cur > 0) != (a > 0)) return finish(Verdict::UNSAT, opts);
                continue;
            }
            push_assign(a);
            if (propagate() >= 0) return finish(Verdict::UNSAT, opts);
        }

        if (opts.resume) {
            if (opts.resume->formula_hash != hash_)
                throw CheckpointParseError("checkpoint does not match this formula");
            for (auto [lit, flipped] : opts.resume->frames) {
                if (propagate() >= 0)
                    throw CheckpointParseError("checkpoint replay hit a conflict");
                frames_.push_back({lit, flipped, trail_.size()});
                if (assign_[lit_var(lit)] != 0)
                    throw CheckpointParseError("checkpoint replay re-assigns a variable");
                push_assign(lit);
            }
        }

        long long next_checkpoint =
            opts.checkpoint_every > 0 ? stats_.nodes + opts.checkpoint_every : -1;

        for (;;) {
            long long conflict_ci = propagate();
            if (conflict_ci < 0) {
                stats_.max_depth = std::max(stats_.max_depth, (int)frames_.size());
                bool sat_leaf = n_unsat_ == 0;
                bool at_frontier = cubes && (int)frames_.size() == split_level;

                if (cubes && (sat_leaf || at_frontier)) {
                    std::vector<int> cube;
                    cube.reserve(frames_.size());
                    for (const auto& fr : frames_) cube.push_back(fr.lit);
                    cubes->push_back(std::move(cube));
                    if (!backtrack()) return finish(Verdict::UNSAT, opts);
                    continue;
                }
                if (sat_leaf) {
                    if (!en) return finish(Verdict::SAT, opts);
                    record_models(*en, want_witnesses);
                    if (!backtrack()) return finish(Verdict::UNSAT, opts);
                    continue;
                }

                if (opts.cancel && opts.cancel->load(std::memory_order_relaxed))
                    return finish(Verdict::INDETERMINATE, opts);
                if (opts.max_nodes >= 0 && stats_.nodes >= opts.max_nodes)
                    return finish(Verdict::INDETERMINATE, opts);
                if (next_checkpoint >= 0 && stats_.nodes >= next_checkpoint) {
                    write_checkpoint(opts);
                    next_checkpoint = stats_.nodes + opts.checkpoint_every;
                }

                int lit = choose_internal();
                if (lit == 0) {
                    // No active clause mentions a free variable; with unsat
                    // clauses remaining this cannot happen at fixpoint.
                    return finish(Verdict::UNSAT, opts);
                }
                frames_.push_back({lit, false, trail_.size()});
                push_assign(lit);
                ++stats_.nodes;
            } else {
                if (!backtrack()) return finish(Verdict::UNSAT, opts);
            }
        }
    }

    // Pop exhausted frames, flip the deepest pending one.  False when the
    // whole tree (above the assumptions) is explored.
    bool backtrack() {
        while (!frames_.empty() && frames_.back().flipped) {
            undo_to(frames_.back().trail_mark);
            frames_.pop_back();
        }
        if (frames_.empty()) return false;
        Frame& fr = frames_.back();
        undo_to(fr.trail_mark);
        fr.lit = -fr.lit;
        fr.flipped = true;
        push_assign(fr.lit);
        ++stats_.nodes;
        return true;
    }

    void record_models(EnumResult& er, bool want_witnesses) {
        size_t free_vars = (size_t)num_vars_ - trail_.size();
        if (free_vars > 62)
            throw std::runtime_error("dpll enumerate: model count would overflow");
        er.count += 1ull << free_vars;
        if (!want_witnesses) return;
        std::vector<int> free_list;
        for (int v = 1; v <= num_vars_; ++v)
            if (assign_[v] == 0) free_list.push_back(v);
        std::string base(num_vars_, '0');
        for (int v = 1; v <= num_vars_; ++v)
            if (assign_[v] > 0) base[v - 1] = '1';
        for (uint64_t m = 0; m < (1ull << free_list.size()); ++m) {
            std::string bits = base;
            for (size_t i = 0; i < free_list.size(); ++i)
                bits[free_list[i] - 1] = (m >> i) & 1 ? '1' : '0';
            er.witnesses.push_back(std::move(bits));
        }
    }

    Verdict finish(Verdict v, const DpllOptions& opts) {
        if (v == Verdict::INDETERMINATE) write_checkpoint(opts);
        return v;
    }

    void write_checkpoint(const DpllOptions& opts) {
        if (opts.checkpoint_path.empty()) return;
        std::ofstream out(opts.checkpoint_path);
        out << serialize_checkpoint(checkpoint());
    }

    int num_vars_;
    std::vector<std::vector<int>> clauses_;
    uint64_t hash_;
    std::vector<std::vector<int>> occ_;
    std::vector<int> true_count_, false_count_;
    std::vector<int8_t> assign_;
    std::vector<int> trail_;
    size_t qhead_ = 0;
    long long n_unsat_ = 0;
    std::vector<Frame> frames_;
    SolveStats stats_;
    std::vector<JwWeight> wpos_ = std::vector<JwWeight>(num_vars_ + 1, 0),
                          wneg_ = std::vector<JwWeight>(num_vars_ + 1, 0);
};

// ---------------------------------------------------------------------------
// Cube-and-conquer driver: solve every cube, aggregating verdicts.  A SAT
// cube cancels the remaining work (unless counting).

struct CubeRunResult {
    Verdict verdict = Verdict::UNSAT;
    std::vector<int8_t> witness;
    std::vector<Verdict> per_cube;
    long long total_nodes = 0;
};

inline CubeRunResult solve_cubes(const CnfFormula& f, const std::vector<std::vector<int>>& cubes,
                                 int jobs = 1, long long max_nodes_per_cube = -1) {
    CubeRunResult out;
    out.per_cube.assign(cubes.size(), Verdict::INDETERMINATE);
    if (cubes.empty()) return out;

    std::atomic<size_t> next{0};
    std::atomic<bool> cancel{false};
    std::atomic<long long> nodes{0};
    std::atomic<int> sat_at{-1};

    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cubes.size() || cancel.load()) return;
            DpllSolver solver(f);
            DpllOptions opts;
            opts.assumptions = cubes[i];
            opts.max_nodes = max_nodes_per_cube;
            opts.cancel = &cancel;
            SolveResult r = solver.solve(opts);
            out.per_cube[i] = r.verdict;
            nodes += r.stats.nodes;
            if (r.verdict == Verdict::SAT) {
                int expect = -1;
                if (sat_at.compare_exchange_strong(expect, (int)i)) {
                    out.witness = r.witness;
                    cancel.store(true);
                }
                return;
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    out.total_nodes = nodes.load();
    bool any_indet = false;
    out.verdict = Verdict::UNSAT;
    for (size_t i = 0; i < cubes.size(); ++i) {
        if (out.per_cube[i] == Verdict::SAT) {
            out.verdict = Verdict::SAT;
            break;
        }
        if (out.per_cube[i] == Verdict::INDETERMINATE) any_indet = true;
    }
    if (out.verdict != Verdict::SAT && any_indet) out.verdict = Verdict::INDETERMINATE;
    return out;
}

// Model counts summed over a cube decomposition.
inline unsigned long long count_cubes(const CnfFormula& f,
                                      const std::vector<std::vector<int>>& cubes) {
    unsigned long long total = 0;
    for (const auto& cube : cubes) {
        DpllSolver solver(f);
        DpllOptions opts;
        opts.assumptions = cube;
        total += solver.enumerate(false, opts).count;
    }
    return total;
}

// Cube file format: one cube per line, literals space-separated; the
// alternative "a <literals> 0" per-line form is accepted and emitted on
// request.
inline std::string emit_cubes(const std::vector<std::vector<int>>& cubes, bool icnf = false) {
    std::ostringstream out;
    for (const auto& cube : cubes) {
        if (icnf) out << 'a';
        for (size_t i = 0; i < cube.size(); ++i) {
            if (icnf || i) out << ' ';
            out << cube[i];
        }
        if (icnf) out << " 0";
        out << '\n';
    }
    return out.str();
}

inline std::vector<std::vector<int>> parse_cubes(const std::string& text) {
    std::vector<std::vector<int>> cubes;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<int> cube;
        std::string tok;
        bool icnf = false;
        while (ls >> tok) {
            if (tok == "a" && cube.empty() && !icnf) {
                icnf = true;
                continue;
            }
            long long lit;
            try {
                size_t pos = 0;
                lit = std::stoll(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw std::runtime_error("cube file line " + std::to_string(lineno) +
                                         ": bad token '" + tok + "'");
            }
            if (lit == 0) break;  // icnf terminator
            cube.push_back((int)lit);
        }
        cubes.push_back(std::move(cube));
    }
    return cubes;
}

}  // namespace vdw
