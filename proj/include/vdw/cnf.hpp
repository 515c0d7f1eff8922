#pragma once

// CNF formulas over positive variable indices, DIMACS serialization, and the
// SAT encodings of the two-block arithmetic-progression colouring problems.
//
// Literals are nonzero ints: +v / -v for variable v.  Bit i of a partition
// string is '1' iff element i lies in the block whose long progressions are
// forbidden by the negative clauses.

#include "vdw/hypergraph.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdw {

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;   // no tautologies, no duplicate literals
    std::vector<std::string> comments;

    bool operator==(const CnfFormula&) const = default;
};

inline int lit_var(int lit) { return lit < 0 ? -lit : lit; }

// Two-block instance on {1..n}: a positive clause per length-t0 progression
// (may not lie entirely in block 0) and a negative clause per length-t1
// progression (may not lie entirely in block 1).
inline CnfFormula encode_vdw(int t0, int t1, int n) {
    if (t0 < 2) throw std::invalid_argument("encode_vdw: progression lengths must be >= 2");
    if (t1 < t0) throw std::invalid_argument("encode_vdw: t1 must be >= t0");
    if (n < 0) throw std::invalid_argument("encode_vdw: n must be >= 0");
    CnfFormula f;
    f.num_vars = n;
    Hypergraph pos = arithp(t0, n);
    Hypergraph neg = arithp(t1, n);
    f.clauses.reserve(pos.edges.size() + neg.edges.size());
    for (const auto& e : pos.edges) f.clauses.emplace_back(e.begin(), e.end());
    for (const auto& e : neg.edges) {
        std::vector<int> c;
        c.reserve(e.size());
        for (int v : e) c.push_back(-v);
        f.clauses.push_back(std::move(c));
    }
    std::ostringstream c1, c2;
    c1 << "two-block partition instance, progression lengths " << t0 << " and " << t1;
    c2 << "n = " << n << ", progressions listed in colexicographic order";
    f.comments = {c1.str(), c2.str()};
    return f;
}

// Palindromic variant: variables are the fold classes {1..ceil(n/2)} and the
// progression hypergraphs are folded through the reflection v <-> n+1-v.
inline CnfFormula encode_pd(int t0, int t1, int n) {
    if (t0 < 2) throw std::invalid_argument("encode_pd: progression lengths must be >= 2");
    if (t1 < t0) throw std::invalid_argument("encode_pd: t1 must be >= t0");
    if (n < 0) throw std::invalid_argument("encode_pd: n must be >= 0");
    CnfFormula f;
    f.num_vars = (n + 1) / 2;
    Hypergraph pos = pdarithp(t0, n);
    Hypergraph neg = pdarithp(t1, n);
    f.clauses.reserve(pos.edges.size() + neg.edges.size());
    for (const auto& e : pos.edges) f.clauses.emplace_back(e.begin(), e.end());
    for (const auto& e : neg.edges) {
        std::vector<int> c;
        c.reserve(e.size());
        for (int v : e) c.push_back(-v);
        f.clauses.push_back(std::move(c));
    }
    std::ostringstream c1, c2;
    c1 << "palindromic two-block partition instance, progression lengths " << t0 << " and " << t1;
    c2 << "n = " << n << ", " << f.num_vars << " fold-class variables";
    f.comments = {c1.str(), c2.str()};
    return f;
}

// For odd n and t0 = 3 the middle element cannot sit in block 0 together with
// any other block-0 element u: {u, middle, n+1-u} is a progression whose ends
// fold onto the same variable.  Appends the corresponding positive unit
// clause; even n (no middle fold class of its own) is left unchanged.
// Callers must ensure block 0 = {middle} alone is impossible (e.g. n large
// enough that the complement of a single element always contains a forbidden
// progression) before relying on this as an equisatisfiable strengthening.
inline CnfFormula pd_middle_unit(CnfFormula f, int t0, int n) {
    if (n % 2 == 1 && t0 == 3 && n >= 1) {
        f.clauses.push_back({(n + 1) / 2});
    }
    return f;
}

inline std::string emit_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    for (const auto& c : f.comments) out << "c " << c << '\n';
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

struct DimacsParseError : std::runtime_error {
    int line;
    DimacsParseError(int line_, const std::string& what_)
        : std::runtime_error("dimacs line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

inline CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula f;
    bool have_header = false;
    long long declared_clauses = 0;
    std::vector<int> current;
    bool in_clause = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == 'c') {
            f.comments.push_back(line.size() > 1 && line[1] == ' ' ? line.substr(2)
                                                                   : line.substr(1));
            continue;
        }
        if (line[0] == 'p') {
            if (have_header) throw DimacsParseError(lineno, "duplicate header");
            std::istringstream hs(line);
            std::string p, fmt;
            long long nv = -1, nc = -1;
            hs >> p >> fmt >> nv >> nc;
            std::string rest;
            if (!(hs >> std::ws).eof()) hs >> rest;
            if (p != "p" || fmt != "cnf" || nv < 0 || nc < 0 || !rest.empty())
                throw DimacsParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
            f.num_vars = (int)nv;
            declared_clauses = nc;
            have_header = true;
            continue;
        }
        if (!have_header) throw DimacsParseError(lineno, "clause before header");
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            long long lit;
            try {
                size_t pos = 0;
                lit = std::stoll(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw DimacsParseError(lineno, "bad token '" + tok + "'");
            }
            if (lit == 0) {
                if ((long long)f.clauses.size() == declared_clauses)
                    throw DimacsParseError(lineno, "more clauses than the header declares");
                f.clauses.push_back(current);
                current.clear();
                in_clause = false;
            } else {
                if (lit < -f.num_vars || lit > f.num_vars)
                    throw DimacsParseError(lineno, "literal " + std::to_string(lit) +
                                                       " out of range for " +
                                                       std::to_string(f.num_vars) + " variables");
                current.push_back((int)lit);
                in_clause = true;
            }
        }
    }
    if (!have_header) throw DimacsParseError(lineno, "missing header");
    if (in_clause) throw DimacsParseError(lineno, "unterminated clause at end of input");
    if ((long long)f.clauses.size() != declared_clauses)
        throw DimacsParseError(lineno, "header declares " + std::to_string(declared_clauses) +
                                           " clauses but " + std::to_string(f.clauses.size()) +
                                           " were given");
    return f;
}

// Conventional instance file names, e.g. vdw_2-3-4_6.cnf / vdw_pd_2-3-4_9.cnf.
inline std::string cnf_filename(bool palindromic, int t0, int t1, int n) {
    std::ostringstream s;
    s << (palindromic ? "vdw_pd_2-" : "vdw_2-") << t0 << '-' << t1 << '_' << n << ".cnf";
    return s.str();
}

// Truth values per variable: >0 true, <0 false, 0 unassigned (treated as
// false).  Index 0 of `assign` is unused.
inline std::string assignment_to_partition(const std::vector<int8_t>& assign, int n,
                                           bool palindromic) {
    int vars = palindromic ? (n + 1) / 2 : n;
    if ((int)assign.size() < vars + 1)
        throw std::invalid_argument("assignment_to_partition: assignment too short");
    std::string bits(n, '0');
    for (int v = 1; v <= n; ++v) {
        int var = palindromic ? mirror(n, v) : v;
        bits[v - 1] = assign[var] > 0 ? '1' : '0';
    }
    return bits;
}

// True iff every clause has a literal satisfied by `bits` (bit v-1 = '1'
// means variable v true).  Unsatisfied index returned for diagnostics.
inline std::optional<size_t> first_falsified_clause(const CnfFormula& f, const std::string& bits) {
    if ((int)bits.size() != f.num_vars)
        throw std::invalid_argument("first_falsified_clause: assignment length mismatch");
    for (size_t i = 0; i < f.clauses.size(); ++i) {
        bool sat = false;
        for (int lit : f.clauses[i]) {
            bool val = bits[lit_var(lit) - 1] == '1';
            if ((lit > 0) == val) {
                sat = true;
                break;
            }
        }
        if (!sat) return i;
    }
    return std::nullopt;
}

}  // namespace vdw
