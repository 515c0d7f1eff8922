#pragma once

// Hypergraphs of arithmetic progressions over {1..n}, plus their palindromic
// quotients.  Vertices are 1-based.  Edges are strictly increasing vertex
// lists; edge lists are kept duplicate-free and sorted colexicographically,
// which fixes the clause order of the derived CNF encodings.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdw {

struct Hypergraph {
    int num_vertices = 0;
    std::vector<std::vector<int>> edges;

    bool operator==(const Hypergraph&) const = default;
};

// Colexicographic order on strictly increasing vertex sets: compare largest
// elements first; on a tie the shorter set (a "suffix" of the longer) is
// smaller.
inline bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
    auto ia = a.rbegin(), ib = b.rbegin();
    for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return a.size() < b.size();
}

inline void sort_colex(std::vector<std::vector<int>>& edges) {
    std::sort(edges.begin(), edges.end(), colex_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

// All arithmetic progressions {a, a+d, ..., a+(t-1)d} with a,d >= 1 that fit
// inside {1..n}, as a hypergraph on n vertices.
inline Hypergraph arithp(int t, int n) {
    if (t < 1) throw std::invalid_argument("arithp: progression length must be >= 1");
    if (n < 0) throw std::invalid_argument("arithp: vertex count must be >= 0");
    Hypergraph h;
    h.num_vertices = n;
    if (t == 1) {
        for (int a = 1; a <= n; ++a) h.edges.push_back({a});
        return h;
    }
    for (int d = 1; (long long)(t - 1) * d < n; ++d) {
        for (int a = 1; a + (t - 1) * d <= n; ++a) {
            std::vector<int> e(t);
            for (int i = 0; i < t; ++i) e[i] = a + i * d;
            h.edges.push_back(std::move(e));
        }
    }
    sort_colex(h.edges);
    return h;
}

// Number of arithmetic progressions of length t in {1..n}.
inline long long arithp_edge_count(int t, int n) {
    if (t == 1) return n;
    long long total = 0;
    for (long long d = 1; (t - 1) * d < n; ++d) total += n - (t - 1) * d;
    return total;
}

// Reflection v <-> n+1-v folded onto the lower half {1..ceil(n/2)}.
inline int mirror(int n, int v) {
    if (v < 1 || v > n) throw std::out_of_range("mirror: vertex out of range");
    return v <= (n + 1) / 2 ? v : n + 1 - v;
}

namespace detail {

// Keep only the subset-minimal sets.  Candidates are processed smallest
// first, so a candidate survives iff no already-kept set is contained in it.
inline std::vector<std::vector<int>> minimal_sets(std::vector<std::vector<int>> sets) {
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    std::vector<std::vector<int>> kept;
    for (auto& cand : sets) {
        bool subsumed = false;
        for (const auto& small : kept) {
            if (small.size() >= cand.size()) break;
            if (std::includes(cand.begin(), cand.end(), small.begin(), small.end())) {
                subsumed = true;
                break;
            }
        }
        if (!subsumed) kept.push_back(std::move(cand));
    }
    return kept;
}

}  // namespace detail

// Image of arithp(t,n) under the reflection map, reduced to subset-minimal
// edges, on the vertex set {1..ceil(n/2)}.
inline Hypergraph pdarithp(int t, int n) {
    Hypergraph base = arithp(t, n);
    Hypergraph h;
    h.num_vertices = (n + 1) / 2;

    std::vector<std::vector<int>> images;
    images.reserve(base.edges.size());
    for (const auto& e : base.edges) {
        std::vector<int> img;
        img.reserve(e.size());
        for (int v : e) img.push_back(mirror(n, v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        images.push_back(std::move(img));
    }
    h.edges = detail::minimal_sets(std::move(images));
    sort_colex(h.edges);
    return h;
}

inline std::string dump_pdarithp(int t, int n) {
    Hypergraph h = pdarithp(t, n);
    std::ostringstream out;
    out << "palindromised hypergraph t=" << t << " n=" << n << '\n';
    for (const auto& e : h.edges) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace vdw
