#pragma once

// Partition certificates as bitstrings, their compact run notation, goodness
// verification, palindromic expansion, and structural statistics.
//
// Compact notation: a '0'/'1' symbol optionally followed by '^' and a run
// length, written either as a single digit or braced ("1^4", "1^{18}").
// Whitespace is ignored.  The canonical emitted form uses a bare symbol for
// runs of 1, an unbraced digit for 2..9, and braces from 10 up.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace vdw {

struct CompactParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string parse_compact(const std::string& text) {
    std::string bits;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (unsigned char)text[i] <= ' ') ++i;
    };
    skip_ws();
    while (i < text.size()) {
        char sym = text[i];
        if (sym != '0' && sym != '1')
            throw CompactParseError("unexpected character '" + std::string(1, sym) +
                                    "' at position " + std::to_string(i));
        ++i;
        long long count = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            if (i < text.size() && text[i] == '{') {
                ++i;
                std::string digits;
                while (i < text.size() && text[i] != '}') {
                    if (!isdigit((unsigned char)text[i]))
                        throw CompactParseError("bad exponent digit at position " +
                                                std::to_string(i));
                    digits += text[i++];
                }
                if (i == text.size()) throw CompactParseError("unterminated exponent brace");
                ++i;
                if (digits.empty()) throw CompactParseError("empty exponent braces");
                count = std::stoll(digits);
            } else if (i < text.size() && isdigit((unsigned char)text[i])) {
                count = text[i++] - '0';  // a single digit, per the notation
            } else {
                throw CompactParseError("'^' not followed by an exponent at position " +
                                        std::to_string(i));
            }
            if (count < 1) throw CompactParseError("exponent must be positive");
        }
        bits.append(count, sym);
        skip_ws();
    }
    return bits;
}

inline std::string emit_compact(const std::string& bits) {
    std::string out;
    size_t i = 0;
    while (i < bits.size()) {
        char sym = bits[i];
        if (sym != '0' && sym != '1')
            throw CompactParseError("bitstring may contain only '0' and '1'");
        size_t j = i;
        while (j < bits.size() && bits[j] == sym) ++j;
        size_t run = j - i;
        out += sym;
        if (run >= 10)
            out += "^{" + std::to_string(run) + "}";
        else if (run >= 2)
            out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

struct Violation {
    long long a = 0, d = 0;
    int block = 0;
    bool operator==(const Violation&) const = default;
};

// First (a, d, block) in lexicographic order such that the progression
// {a, a+d, ..., a+(t-1)d} lies entirely in the given block, where t = t0 for
// block 0 and t = t1 for block 1.  nullopt means the partition is good.
inline std::optional<Violation> verify_good(const std::string& bits, int t0, int t1) {
    if (t0 < 2 || t1 < t0)
        throw std::invalid_argument("verify_good: need 2 <= t0 <= t1");
    long long n = (long long)bits.size();
    for (long long a = 1; a <= n; ++a) {
        for (long long d = 1; a + (long long)(t0 - 1) * d <= n; ++d) {
            for (int block = 0; block <= 1; ++block) {
                int t = block == 0 ? t0 : t1;
                if (a + (long long)(t - 1) * d > n) continue;
                char want = block == 0 ? '0' : '1';
                bool inside = true;
                for (int i = 0; i < t; ++i) {
                    if (bits[a + (long long)i * d - 1] != want) {
                        inside = false;
                        break;
                    }
                }
                if (inside) return Violation{a, d, block};
            }
        }
    }
    return std::nullopt;
}

inline bool is_palindrome(const std::string& bits) {
    size_t n = bits.size();
    for (size_t i = 0; i < n / 2; ++i)
        if (bits[i] != bits[n - 1 - i]) return false;
    return true;
}

// Expand a half certificate over the fold classes {1..ceil(n/2)} to the full
// palindromic bitstring of length n.
inline std::string expand_half(const std::string& half, long long n) {
    if ((long long)half.size() != (n + 1) / 2)
        throw std::invalid_argument("expand_half: half length must be ceil(n/2)");
    std::string bits(n, '0');
    for (long long v = 1; v <= n; ++v) {
        long long m = v <= (n + 1) / 2 ? v : n + 1 - v;
        bits[v - 1] = half[m - 1];
    }
    return bits;
}

// Run-length view: exponents of the maximal runs of a symbol, in order.
inline std::vector<long long> run_lengths(const std::string& bits, char sym) {
    std::vector<long long> runs;
    size_t i = 0;
    while (i < bits.size()) {
        if (bits[i] != sym) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < bits.size() && bits[j] == sym) ++j;
        runs.push_back((long long)(j - i));
        i = j;
    }
    return runs;
}

// Peaks and valleys of a sequence, counting a plateau once (local extrema
// need not be strict).  The endpoints count as extrema of the side they
// close: a constant or single-element sequence has one peak and no valley.
inline std::pair<long long, long long> peaks_valleys(const std::vector<long long>& seq) {
    if (seq.empty()) return {0, 0};
    std::vector<long long> c;
    for (long long x : seq)
        if (c.empty() || c.back() != x) c.push_back(x);
    if (c.size() == 1) return {1, 0};
    long long np = 0, nv = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        bool rose = i > 0 && c[i - 1] < c[i];
        bool falls = i + 1 < c.size() && c[i] > c[i + 1];
        bool fell = i > 0 && c[i - 1] > c[i];
        bool rises = i + 1 < c.size() && c[i] < c[i + 1];
        if (i == 0) {
            falls ? ++np : ++nv;
        } else if (i + 1 == c.size()) {
            rose ? ++np : ++nv;
        } else {
            if (rose && falls) ++np;
            if (fell && rises) ++nv;
        }
    }
    return {np, nv};
}

// Longest run of equal consecutive values.
inline long long max_plateau(const std::vector<long long>& seq) {
    long long best = 0, cur = 0;
    for (size_t i = 0; i < seq.size(); ++i) {
        cur = (i > 0 && seq[i] == seq[i - 1]) ? cur + 1 : 1;
        best = std::max(best, cur);
    }
    return best;
}

struct CertificateStats {
    long long n0 = 0, n1 = 0;
    long long n00 = 0;  // adjacent positions i, i+1 that are both '0'
    std::vector<long long> epos0, epos1;
    long long runs0 = 0, runs1 = 0;
    long long np0 = 0, nv0 = 0, np1 = 0, nv1 = 0;
    long long max_plateau0 = 0, max_plateau1 = 0;
};

inline CertificateStats compute_stats(const std::string& bits) {
    CertificateStats s;
    for (char ch : bits) (ch == '1' ? s.n1 : s.n0)++;
    for (size_t i = 0; i + 1 < bits.size(); ++i)
        if (bits[i] == '0' && bits[i + 1] == '0') ++s.n00;
    s.epos0 = run_lengths(bits, '0');
    s.epos1 = run_lengths(bits, '1');
    s.runs0 = (long long)s.epos0.size();
    s.runs1 = (long long)s.epos1.size();
    std::tie(s.np0, s.nv0) = peaks_valleys(s.epos0);
    std::tie(s.np1, s.nv1) = peaks_valleys(s.epos1);
    s.max_plateau0 = max_plateau(s.epos0);
    s.max_plateau1 = max_plateau(s.epos1);
    return s;
}

// Summary quintuple: counts per block of (symbols), (runs), (runs of length
// >= 2), (peaks + valleys of the run-length sequence), (longest plateau of
// the run-length sequence).
inline std::array<std::array<long long, 2>, 5> stats_quintuple(const CertificateStats& s) {
    auto ge2 = [](const std::vector<long long>& runs) {
        long long c = 0;
        for (long long r : runs)
            if (r >= 2) ++c;
        return c;
    };
    return {{{s.n0, s.n1},
             {s.runs0, s.runs1},
             {ge2(s.epos0), ge2(s.epos1)},
             {s.np0 + s.nv0, s.np1 + s.nv1},
             {s.max_plateau0, s.max_plateau1}}};
}

}  // namespace vdw
