// Command-line front end: instance generation, solving (complete and local
// search), cube splitting, certificate verification and statistics, and the
// number-computation drivers.
//
// Exit codes: 0 ordinary success, 10 SAT, 20 UNSAT, 30 UNKNOWN,
// 1 usage error, 2 soundness/verification failure.

#include "vdw/certificate.hpp"
#include "vdw/cnf.hpp"
#include "vdw/dpll.hpp"
#include "vdw/hypergraph.hpp"
#include "vdw/local_search.hpp"
#include "vdw/numbers.hpp"
#include "vdw/oracle.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitUnknown = 30;
constexpr int kExitUsage = 1;
constexpr int kExitSoundness = 2;

// Line-oriented key=value records, or one JSON object with --json.
class Record {
public:
    explicit Record(bool as_json) : json_(as_json) {}

    template <typename T>
    void set(const std::string& key, const T& value) {
        if (json_) {
            obj_[key] = value;
        } else {
            std::ostringstream os;
            if constexpr (std::is_same_v<T, bool>)
                os << (value ? "true" : "false");
            else
                os << value;
            lines_ += key + "=" + os.str() + "\n";
        }
    }

    void emit() const {
        if (json_)
            std::cout << obj_.dump(2) << "\n";
        else
            std::cout << lines_;
    }

private:
    bool json_;
    nlohmann::ordered_json obj_;
    std::string lines_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string witness_bits(const std::vector<int8_t>& w, int num_vars) {
    std::string bits(num_vars, '0');
    for (int v = 1; v <= num_vars; ++v)
        if (w[v] > 0) bits[v - 1] = '1';
    return bits;
}

int verdict_exit(vdw::Verdict v) {
    switch (v) {
        case vdw::Verdict::SAT: return kExitSat;
        case vdw::Verdict::UNSAT: return kExitUnsat;
        default: return kExitUnknown;
    }
}

double round3(double x) { return (double)(long long)(x * 1000.0 + 0.5) / 1000.0; }

struct SolveArgs {
    std::string kind;  // vdw | pd, or empty with --file
    int t0 = 0, t1 = 0, n = -1;
    std::string engine = "dpll";
    std::string file;
    long long max_nodes = -1;
    int runs = 10;
    long long cutoff = 100000;
    uint64_t seed = 1;
    int tabu_tenure = 10;
    double noise = 0.4;
    std::string initial;
    std::string cube_file;
    std::string checkpoint_path;
    long long checkpoint_every = 0;
    std::string resume_path;
    int jobs = 1;
    bool no_middle_unit = false;
    bool enumerate_models = false;
};

// Builds the instance a solve/split command addresses.
vdw::CnfFormula build_instance(const SolveArgs& a) {
    if (!a.file.empty()) return vdw::parse_dimacs(read_file(a.file));
    if (a.kind == "vdw") return vdw::encode_vdw(a.t0, a.t1, a.n);
    if (a.kind == "pd") return vdw::pd_instance(a.t0, a.t1, a.n, !a.no_middle_unit);
    throw CLI::ValidationError("kind must be vdw or pd");
}

// A printed SAT claim is always re-checked first: against the clause set,
// and for parameterised instances also as a good (palindromic) partition.
void attach_sat_certificate(Record& rec, const SolveArgs& a, const vdw::CnfFormula& f,
                            const std::string& bits) {
    if (vdw::first_falsified_clause(f, bits))
        throw vdw::SoundnessError("model fails the formula it claims to satisfy");
    rec.set("model", bits);
    if (a.kind == "vdw") {
        if (vdw::verify_good(bits, a.t0, a.t1))
            throw vdw::SoundnessError("model is not a good partition");
        rec.set("certificate", vdw::emit_compact(bits));
    } else if (a.kind == "pd") {
        std::string full = vdw::expand_half(bits, a.n);
        if (!vdw::is_palindrome(full) || vdw::verify_good(full, a.t0, a.t1))
            throw vdw::SoundnessError("model is not a good palindromic partition");
        rec.set("certificate_half", vdw::emit_compact(bits));
        rec.set("certificate", vdw::emit_compact(full));
    }
}

int cmd_solve(const SolveArgs& a, bool json) {
    vdw::CnfFormula f = build_instance(a);
    Record rec(json);
    rec.set("command", "solve");
    if (a.file.empty()) {
        rec.set("kind", a.kind);
        rec.set("t0", a.t0);
        rec.set("t1", a.t1);
        rec.set("n", a.n);
    } else {
        rec.set("file", a.file);
    }
    rec.set("engine", a.engine);
    rec.set("variables", f.num_vars);
    rec.set("clauses", (long long)f.clauses.size());

    vdw::Verdict verdict = vdw::Verdict::INDETERMINATE;

    if (a.engine == "dpll") {
        if (!a.cube_file.empty()) {
            auto cubes = vdw::parse_cubes(read_file(a.cube_file));
            rec.set("cubes", (long long)cubes.size());
            rec.set("jobs", a.jobs);
            vdw::CubeRunResult cr = vdw::solve_cubes(f, cubes, a.jobs, a.max_nodes);
            verdict = cr.verdict;
            rec.set("nodes", cr.total_nodes);
            if (verdict == vdw::Verdict::SAT)
                attach_sat_certificate(rec, a, f, witness_bits(cr.witness, f.num_vars));
        } else if (a.enumerate_models) {
            vdw::DpllSolver solver(f);
            vdw::DpllOptions opts;
            opts.max_nodes = a.max_nodes;
            auto er = solver.enumerate(false, opts);
            verdict = !er.complete ? vdw::Verdict::INDETERMINATE
                      : er.count > 0 ? vdw::Verdict::SAT
                                     : vdw::Verdict::UNSAT;
            rec.set("models", er.count);
            rec.set("complete", er.complete);
            rec.set("nodes", er.stats.nodes);
            rec.set("wall_seconds", round3(er.stats.wall_seconds));
        } else {
            vdw::DpllSolver solver(f);
            vdw::DpllOptions opts;
            opts.max_nodes = a.max_nodes;
            opts.checkpoint_path = a.checkpoint_path;
            opts.checkpoint_every = a.checkpoint_every;
            vdw::Checkpoint cp;
            if (!a.resume_path.empty()) {
                cp = vdw::parse_checkpoint(read_file(a.resume_path));
                opts.resume = &cp;
            }
            vdw::SolveResult r = solver.solve(opts);
            verdict = r.verdict;
            rec.set("nodes", r.stats.nodes);
            rec.set("unit_propagations", r.stats.unit_props);
            rec.set("max_depth", r.stats.max_depth);
            rec.set("wall_seconds", round3(r.stats.wall_seconds));
            if (verdict == vdw::Verdict::SAT)
                attach_sat_certificate(rec, a, f, witness_bits(r.witness, f.num_vars));
            if (verdict == vdw::Verdict::INDETERMINATE && !a.checkpoint_path.empty())
                rec.set("checkpoint", a.checkpoint_path);
        }
    } else if (a.engine == "gsat-tabu" || a.engine == "walksat") {
        vdw::LsConfig cfg;
        cfg.scheme = a.engine == "gsat-tabu" ? vdw::LsScheme::GSAT_TABU
                                             : vdw::LsScheme::WALKSAT;
        cfg.runs = a.runs;
        cfg.cutoff = a.cutoff;
        cfg.seed = a.seed;
        cfg.tabu_tenure = a.tabu_tenure;
        cfg.noise = a.noise;
        cfg.initial = a.initial;
        rec.set("runs", cfg.runs);
        rec.set("cutoff", cfg.cutoff);
        rec.set("seed", cfg.seed);
        vdw::LsOutcome lo = vdw::local_search(f, cfg);
        // Local search is one-sided: not-found is UNKNOWN, never UNSAT.
        verdict = lo.found ? vdw::Verdict::SAT : vdw::Verdict::INDETERMINATE;
        rec.set("flips", lo.flips_used);
        rec.set("runs_used", lo.runs_used);
        rec.set("best_unsat", lo.best_unsat);
        if (lo.found) attach_sat_certificate(rec, a, f, lo.witness);
    } else {
        throw CLI::ValidationError("engine must be dpll, gsat-tabu, or walksat");
    }

    rec.set("verdict", std::string(vdw::to_string(verdict)));
    rec.emit();
    return verdict_exit(verdict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"van der Waerden number toolkit: CNF generation, DPLL and local "
                 "search, cube splitting, certificates, and number computation"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "emit one JSON object instead of key=value lines");

    int exit_code = 0;

    // ---- generate ----------------------------------------------------------
    struct {
        std::string kind;
        int t0, t1, n;
        std::string out;
    } gen;
    auto* generate = app.add_subcommand("generate", "write a DIMACS instance");
    generate->add_option("kind", gen.kind, "vdw or pd")->required();
    generate->add_option("t0", gen.t0, "progression length avoided in block 0")->required();
    generate->add_option("t1", gen.t1, "progression length avoided in block 1")->required();
    generate->add_option("n", gen.n, "interval length")->required();
    generate->add_option("-o,--out", gen.out, "output path (default: conventional name)");
    generate->callback([&] {
        vdw::CnfFormula f;
        if (gen.kind == "vdw")
            f = vdw::encode_vdw(gen.t0, gen.t1, gen.n);
        else if (gen.kind == "pd")
            f = vdw::encode_pd(gen.t0, gen.t1, gen.n);
        else
            throw CLI::ValidationError("kind must be vdw or pd");
        std::string path = gen.out.empty()
                               ? vdw::cnf_filename(gen.kind == "pd", gen.t0, gen.t1, gen.n)
                               : gen.out;
        write_file(path, vdw::emit_dimacs(f));
        Record rec(json);
        rec.set("command", "generate");
        rec.set("kind", gen.kind);
        rec.set("t0", gen.t0);
        rec.set("t1", gen.t1);
        rec.set("n", gen.n);
        rec.set("variables", f.num_vars);
        rec.set("clauses", (long long)f.clauses.size());
        rec.set("file", path);
        rec.emit();
    });

    // ---- solve -------------------------------------------------------------
    SolveArgs sa;
    auto* solve = app.add_subcommand(
        "solve", "solve an instance (exit 10 SAT / 20 UNSAT / 30 UNKNOWN)");
    solve->add_option("kind", sa.kind, "vdw or pd (omit with --file)");
    solve->add_option("t0", sa.t0, "block-0 progression length");
    solve->add_option("t1", sa.t1, "block-1 progression length");
    solve->add_option("n", sa.n, "interval length");
    solve->add_option("engine", sa.engine, "dpll (default), gsat-tabu, or walksat");
    solve->add_option("--file", sa.file, "solve a DIMACS file instead of parameters");
    solve->add_option("--max-nodes", sa.max_nodes, "DPLL node budget (-1 unlimited)");
    solve->add_option("--runs", sa.runs, "local-search runs");
    solve->add_option("--cutoff", sa.cutoff, "local-search flips per run");
    solve->add_option("--seed", sa.seed, "local-search seed (printed for reruns)");
    solve->add_option("--tabu-tenure", sa.tabu_tenure, "GSAT-TABU tenure");
    solve->add_option("--noise", sa.noise, "WalkSAT noise probability");
    solve->add_option("--initial", sa.initial, "initial assignment bits (local search)");
    solve->add_option("--cubes", sa.cube_file, "restrict the DPLL search to these cubes");
    solve->add_option("--jobs", sa.jobs, "parallel workers for cube solving");
    solve->add_option("--checkpoint", sa.checkpoint_path,
                      "write the search frontier here when interrupted by budget");
    solve->add_option("--checkpoint-every", sa.checkpoint_every,
                      "also checkpoint every N nodes");
    solve->add_option("--resume", sa.resume_path, "resume from a checkpoint file");
    solve->add_flag("--no-middle-unit", sa.no_middle_unit,
                    "palindromic: skip the middle-vertex unit clause");
    solve->add_flag("--count", sa.enumerate_models, "count models instead of deciding");
    solve->callback([&] {
        if (sa.file.empty() && sa.kind.empty())
            throw CLI::ValidationError("give kind t0 t1 n, or --file");
        if (sa.file.empty() && sa.n < 0)
            throw CLI::ValidationError("give kind t0 t1 n, or --file");
        exit_code = cmd_solve(sa, json);
    });

    // ---- split -------------------------------------------------------------
    struct {
        std::string kind;
        int t0, t1, n, level;
        std::string out;
        bool icnf = false;
        bool no_middle_unit = false;
    } sp;
    auto* split = app.add_subcommand("split", "emit cube decomposition at a depth");
    split->add_option("kind", sp.kind, "vdw or pd")->required();
    split->add_option("t0", sp.t0)->required();
    split->add_option("t1", sp.t1)->required();
    split->add_option("n", sp.n)->required();
    split->add_option("level", sp.level, "decision depth of the frontier")->required();
    split->add_option("-o,--out", sp.out, "cube file (default: conventional name)");
    split->add_flag("--icnf", sp.icnf, "write 'a <lits> 0' lines");
    split->add_flag("--no-middle-unit", sp.no_middle_unit,
                    "palindromic: skip the middle-vertex unit clause");
    split->callback([&] {
        SolveArgs tmp;
        tmp.kind = sp.kind;
        tmp.t0 = sp.t0;
        tmp.t1 = sp.t1;
        tmp.n = sp.n;
        tmp.no_middle_unit = sp.no_middle_unit;
        vdw::CnfFormula f = build_instance(tmp);
        vdw::DpllSolver solver(f);
        auto cubes = solver.split(sp.level);
        std::string path = sp.out.empty()
                               ? vdw::cnf_filename(sp.kind == "pd", sp.t0, sp.t1, sp.n) +
                                     ".cubes"
                               : sp.out;
        write_file(path, vdw::emit_cubes(cubes, sp.icnf));
        Record rec(json);
        rec.set("command", "split");
        rec.set("kind", sp.kind);
        rec.set("t0", sp.t0);
        rec.set("t1", sp.t1);
        rec.set("n", sp.n);
        rec.set("level", sp.level);
        rec.set("cubes", (long long)cubes.size());
        rec.set("file", path);
        rec.emit();
    });

    // ---- verify ------------------------------------------------------------
    struct {
        std::string file;
        int t0, t1;
        bool palindrome = false;
        int half_n = -1;
    } vf;
    auto* verify = app.add_subcommand("verify", "check a certificate file");
    verify->add_option("file", vf.file, "compact or raw bitstring certificate")->required();
    verify->add_option("t0", vf.t0)->required();
    verify->add_option("t1", vf.t1)->required();
    verify->add_flag("--palindrome", vf.palindrome, "also require palindromicity");
    verify->add_option("--half", vf.half_n,
                       "treat the content as a half-assignment for this full length");
    verify->callback([&] {
        std::string text = read_file(vf.file);
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.pop_back();
        if (text.empty()) throw std::runtime_error(vf.file + " is empty");
        std::string bits = vdw::parse_compact(text);
        bool expect_pal = vf.palindrome;
        if (vf.half_n >= 0) {
            bits = vdw::expand_half(bits, vf.half_n);
            expect_pal = true;
        }
        Record rec(json);
        rec.set("command", "verify");
        rec.set("file", vf.file);
        rec.set("t0", vf.t0);
        rec.set("t1", vf.t1);
        rec.set("n", (long long)bits.size());
        bool ok = true;
        if (expect_pal && !vdw::is_palindrome(bits)) {
            ok = false;
            rec.set("palindrome", false);
        } else if (expect_pal) {
            rec.set("palindrome", true);
        }
        if (auto viol = vdw::verify_good(bits, vf.t0, vf.t1)) {
            ok = false;
            rec.set("violation_block", viol->block);
            rec.set("violation_start", viol->a);
            rec.set("violation_step", viol->d);
            rec.set("violation_length", viol->block == 0 ? vf.t0 : vf.t1);
        }
        rec.set("ok", ok);
        rec.emit();
        if (!ok) exit_code = kExitSoundness;
    });

    // ---- stats -------------------------------------------------------------
    struct {
        std::string file;
    } st;
    auto* stats = app.add_subcommand("stats", "certificate statistics");
    stats->add_option("file", st.file, "compact or raw bitstring certificate")->required();
    stats->callback([&] {
        std::string text = read_file(st.file);
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.pop_back();
        if (text.empty()) throw std::runtime_error(st.file + " is empty");
        std::string bits = vdw::parse_compact(text);
        vdw::CertificateStats cs = vdw::compute_stats(bits);
        auto quint = vdw::stats_quintuple(cs);
        Record rec(json);
        rec.set("command", "stats");
        rec.set("file", st.file);
        rec.set("n", (long long)bits.size());
        rec.set("zeros", cs.n0);
        rec.set("ones", cs.n1);
        rec.set("max_zero_run", cs.n00);
        rec.set("runs_zeros", cs.runs0);
        rec.set("runs_ones", cs.runs1);
        rec.set("peaks_zeros", cs.np0);
        rec.set("valleys_zeros", cs.nv0);
        rec.set("peaks_ones", cs.np1);
        rec.set("valleys_ones", cs.nv1);
        rec.set("max_plateau_zeros", cs.max_plateau0);
        rec.set("max_plateau_ones", cs.max_plateau1);
        std::ostringstream q;
        q << "[";
        for (size_t i = 0; i < quint.size(); ++i) {
            q << "[" << quint[i][0] << "," << quint[i][1] << "]";
            if (i + 1 < quint.size()) q << ",";
        }
        q << "]";
        rec.set("quintuple", q.str());
        rec.emit();
    });

    // ---- compute -----------------------------------------------------------
    struct {
        std::string kind;
        int t0, t1;
        std::string strategy = "hybrid";
        long long max_nodes = -1;
        int n_max = -1;
        int n0 = -1;
        int ls_runs = 10;
        long long ls_cutoff = 100000;
        uint64_t seed = 1;
        bool certify = false;
    } cp;
    auto* compute = app.add_subcommand("compute", "compute w(2;t0,t1) or the "
                                                  "palindromic pair (p,q)");
    compute->add_option("kind", cp.kind, "vdw or pd")->required();
    compute->add_option("t0", cp.t0)->required();
    compute->add_option("t1", cp.t1)->required();
    compute->add_option("--strategy", cp.strategy, "dpll or hybrid (default)");
    compute->add_option("--max-nodes", cp.max_nodes, "DPLL node budget per solve");
    compute->add_option("--n-max", cp.n_max, "scan ceiling");
    compute->add_option("--n0", cp.n0, "scan start (vdw)");
    compute->add_option("--ls-runs", cp.ls_runs, "probe runs per instance");
    compute->add_option("--ls-cutoff", cp.ls_cutoff, "probe flips per run");
    compute->add_option("--seed", cp.seed, "probe seed (printed for reruns)");
    compute->add_flag("--certify", cp.certify, "palindromic: re-verify the bundle");
    compute->callback([&] {
        vdw::ComputeStrategy strategy;
        if (cp.strategy == "dpll")
            strategy = vdw::ComputeStrategy::DPLL;
        else if (cp.strategy == "hybrid")
            strategy = vdw::ComputeStrategy::HYBRID;
        else
            throw CLI::ValidationError("strategy must be dpll or hybrid");
        vdw::ComputeLimits limits;
        limits.max_nodes = cp.max_nodes;
        limits.n_max = cp.n_max;
        limits.ls_runs = cp.ls_runs;
        limits.ls_cutoff = cp.ls_cutoff;
        limits.seed = cp.seed;

        Record rec(json);
        rec.set("command", "compute");
        rec.set("kind", cp.kind);
        rec.set("t0", cp.t0);
        rec.set("t1", cp.t1);
        rec.set("strategy", cp.strategy);
        rec.set("seed", cp.seed);

        if (cp.kind == "vdw") {
            vdw::VdwResult r = vdw::compute_vdw(cp.t0, cp.t1, strategy, limits, cp.n0);
            rec.set("exact", r.exact);
            rec.set(r.exact ? "value" : "lower_bound", r.value);
            if (!r.witness.empty()) {
                rec.set("witness_n", (long long)r.witness.size());
                rec.set("witness", vdw::emit_compact(r.witness));
            }
            rec.set("nodes", r.total_stats.nodes);
            rec.set("wall_seconds", round3(r.total_stats.wall_seconds));
        } else if (cp.kind == "pd") {
            vdw::PdResult r = vdw::compute_pd(cp.t0, cp.t1, strategy, limits);
            rec.set("exact", r.exact);
            if (r.exact) {
                rec.set("p", r.p);
                rec.set("q", r.q);
                rec.set("span", r.span());
                if (auto kv = vdw::known_vdw(cp.t1); kv && cp.t0 == 3) {
                    rec.set("gap", kv->value - r.q);
                    rec.set("gap_exact", kv->exact);
                }
                rec.set("witness_p", vdw::emit_compact(r.half_p_minus_1));
                rec.set("witness_q", vdw::emit_compact(r.half_q_minus_1));
            }
            std::ostringstream prof;
            for (const auto& [n, v] : r.profile)
                prof << n << ":" << vdw::to_string(v) << " ";
            rec.set("profile", prof.str());
            rec.set("nodes", r.total_stats.nodes);
            rec.set("wall_seconds", round3(r.total_stats.wall_seconds));
            if (cp.certify && r.exact) {
                vdw::PdCertBundle bundle = vdw::certify_pd(r, limits);
                rec.set("certified", bundle.complete);
                rec.set("certificate_p", vdw::emit_compact(bundle.partition_p));
                rec.set("certificate_q", vdw::emit_compact(bundle.partition_q));
            }
        } else {
            throw CLI::ValidationError("kind must be vdw or pd");
        }
        rec.emit();
    });

    // ---- campaign ----------------------------------------------------------
    struct {
        std::string kind;
        int t0, t1, n_start;
        std::string scheme = "gsat-tabu";
        int runs = 10;
        long long cutoff = 100000;
        uint64_t seed = 1;
        long long max_flips = -1;
        int max_failures = 1;
        int n_limit = -1;
    } cam;
    auto* campaign = app.add_subcommand("campaign",
                                        "local-search sweep for lower bounds");
    campaign->add_option("kind", cam.kind, "vdw or pd")->required();
    campaign->add_option("t0", cam.t0)->required();
    campaign->add_option("t1", cam.t1)->required();
    campaign->add_option("n_start", cam.n_start)->required();
    campaign->add_option("--scheme", cam.scheme, "gsat-tabu or walksat");
    campaign->add_option("--runs", cam.runs, "runs per n");
    campaign->add_option("--cutoff", cam.cutoff, "flips per run");
    campaign->add_option("--seed", cam.seed, "campaign seed (printed for reruns)");
    campaign->add_option("--max-flips", cam.max_flips, "total flip budget");
    campaign->add_option("--max-failures", cam.max_failures,
                         "stop after this many consecutive failures");
    campaign->add_option("--n-limit", cam.n_limit, "stop above this n");
    campaign->callback([&] {
        vdw::CampaignConfig cfg;
        if (cam.scheme == "gsat-tabu")
            cfg.scheme = vdw::LsScheme::GSAT_TABU;
        else if (cam.scheme == "walksat")
            cfg.scheme = vdw::LsScheme::WALKSAT;
        else
            throw CLI::ValidationError("scheme must be gsat-tabu or walksat");
        cfg.runs_per_n = cam.runs;
        cfg.cutoff = cam.cutoff;
        cfg.seed = cam.seed;
        cfg.max_total_flips = cam.max_flips;
        cfg.max_consecutive_failures = cam.max_failures;
        cfg.n_limit = cam.n_limit;
        cfg.palindromic = cam.kind == "pd";
        if (cam.kind != "vdw" && cam.kind != "pd")
            throw CLI::ValidationError("kind must be vdw or pd");
        vdw::CampaignResult r = vdw::run_campaign(cam.t0, cam.t1, cam.n_start, cfg);
        std::cout << vdw::format_campaign(r);
        Record rec(json);
        rec.set("command", "campaign");
        rec.set("kind", cam.kind);
        rec.set("t0", cam.t0);
        rec.set("t1", cam.t1);
        rec.set("seed", cam.seed);
        rec.set("best_n", r.best_n);
        rec.set("lower_bound", r.lower_bound);
        rec.set("total_flips", r.total_flips);
        rec.emit();
    });

    // ---- known -------------------------------------------------------------
    auto* known = app.add_subcommand("known", "print the reference tables");
    known->callback([&] {
        for (const auto& kv : vdw::known_vdw_values())
            std::printf("w(2;3,%d) %s %lld\n", kv.t, kv.exact ? "=" : ">=", kv.value);
        for (const auto& kp : vdw::known_pd_values()) {
            std::printf("pd(2;3,%d) %s (%lld,%lld) span %lld", kp.t,
                        kp.exact ? "=" : ">=", kp.p, kp.q, kp.q - kp.p);
            if (auto gap = vdw::pd_gap(kp.t))
                std::printf(" gap %s%lld", gap->exact ? "" : ">=", gap->value);
            std::printf("\n");
        }
    });

    // ---- growth ------------------------------------------------------------
    auto* growth = app.add_subcommand("growth", "check growth bounds on the tables");
    growth->callback([&] {
        vdw::GrowthReport report = vdw::check_growth_bounds();
        for (const auto& row : report.rows) {
            std::printf("t=%d %s=%lld diff=%lld quadratic_flag=%d upper_ok=%d\n",
                        row.t, row.exact ? "w" : "lb", row.value, row.diff_prev,
                        (int)row.refutes_quadratic_conjecture, (int)row.upper_bound_ok);
        }
        std::printf("refuted:");
        for (int t : report.refuted) std::printf(" %d", t);
        std::printf("\nall_upper_ok=%d\n", (int)report.all_upper_ok);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const vdw::SoundnessError& e) {
        std::cerr << "soundness error: " << e.what() << "\n";
        return kExitSoundness;
    } catch (const vdw::CertificationError& e) {
        std::cerr << "certification error: " << e.what() << "\n";
        return kExitSoundness;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
