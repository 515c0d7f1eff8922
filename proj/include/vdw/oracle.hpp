#pragma once

// Ground-truth engines for tests: exhaustive enumeration of two-block
// partitions by bit-twiddling, with a naive progression scan and no pruning.
// Deliberately too simple to share bugs with the solver stack.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdw {

struct OracleVerdict {
    bool satisfiable = false;
    unsigned long long count = 0;
    std::vector<std::string> witnesses;  // filled only on request
};

namespace detail {

// Bitmasks of all progressions {a, a+d, .., a+(t-1)d} inside {1..n},
// as bit a-1 .. bit a-1+(t-1)d.
inline std::vector<uint64_t> progression_masks(int t, int n) {
    std::vector<uint64_t> masks;
    for (int d = 1; (long long)(t - 1) * d < n; ++d) {
        uint64_t base = 0;
        for (int i = 0; i < t; ++i) base |= 1ull << (i * d);
        for (int a = 0; a + (t - 1) * d < n; ++a) masks.push_back(base << a);
    }
    return masks;
}

inline bool hits_any(uint64_t side, const std::vector<uint64_t>& masks) {
    for (uint64_t m : masks)
        if ((side & m) == m) return true;
    return false;
}

inline std::string bits_to_string(uint64_t x, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (x & (1ull << i)) s[i] = '1';
    return s;
}

}  // namespace detail

// All 2^n block assignments of {1..n}; bit i-1 set means i is in block 1.
inline OracleVerdict enumerate_partitions(int t0, int t1, int n, bool want_witnesses = false) {
    if (n > 26) throw std::invalid_argument("enumerate_partitions: n > 26 exceeds the budget");
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    auto masks0 = detail::progression_masks(t0, n);
    auto masks1 = detail::progression_masks(t1, n);
    uint64_t all = n == 0 ? 0 : (1ull << n) - 1;
    OracleVerdict v;
    for (uint64_t x = 0;; ++x) {
        if (!detail::hits_any(x, masks1) && !detail::hits_any(~x & all, masks0)) {
            ++v.count;
            if (want_witnesses) v.witnesses.push_back(detail::bits_to_string(x, n));
        }
        if (x == all) break;
    }
    v.satisfiable = v.count > 0;
    return v;
}

// All palindromic block assignments: enumerate the half strings, expand by
// reflection, scan the full string.
inline OracleVerdict enumerate_pd(int t0, int t1, int n, bool want_witnesses = false) {
    int h = (n + 1) / 2;
    if (h > 26) throw std::invalid_argument("enumerate_pd: ceil(n/2) > 26 exceeds the budget");
    if (n < 0) throw std::invalid_argument("enumerate_pd: n must be >= 0");
    auto masks0 = detail::progression_masks(t0, n);
    auto masks1 = detail::progression_masks(t1, n);
    uint64_t all = h == 0 ? 0 : (1ull << h) - 1;
    uint64_t full = n == 0 ? 0 : (1ull << n) - 1;
    OracleVerdict v;
    for (uint64_t x = 0;; ++x) {
        uint64_t expanded = 0;
        for (int i = 1; i <= n; ++i) {
            int m = i <= h ? i : n + 1 - i;
            if (x & (1ull << (m - 1))) expanded |= 1ull << (i - 1);
        }
        if (!detail::hits_any(expanded, masks1) && !detail::hits_any(~expanded & full, masks0)) {
            ++v.count;
            if (want_witnesses) v.witnesses.push_back(detail::bits_to_string(expanded, n));
        }
        if (x == all) break;
    }
    v.satisfiable = v.count > 0;
    return v;
}

}  // namespace vdw
