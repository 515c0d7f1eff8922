#include <catch2/catch_amalgamated.hpp>

#include "vdw/certificate.hpp"
#include "fixture_io.hpp"

#include <random>

using namespace vdw;

namespace {

// Independent mask-based goodness check, for cross-validation of
// verify_good: progressions as precomputed bitmasks, no shared scan logic.
bool good_by_masks(const std::string& bits, int t0, int t1) {
    int n = (int)bits.size();
    uint64_t ones = 0;
    for (int i = 0; i < n; ++i)
        if (bits[i] == '1') ones |= 1ull << i;
    uint64_t zeros = ~ones & ((n == 64 ? ~0ull : (1ull << n) - 1));
    for (int block = 0; block <= 1; ++block) {
        int t = block == 0 ? t0 : t1;
        uint64_t side = block == 0 ? zeros : ones;
        for (int d = 1; (t - 1) * d < n; ++d) {
            uint64_t mask = 0;
            for (int i = 0; i < t; ++i) mask |= 1ull << (i * d);
            for (int a = 0; a + (t - 1) * d < n; ++a)
                if ((side & (mask << a)) == (mask << a)) return false;
        }
    }
    return true;
}

const int kFixtureTable[][3] = {
    // t, length as stored, longest good prefix for lengths (3, t)
    {19, 348, 348},  {20, 389, 388},  {21, 416, 415},  {22, 463, 463},
    {23, 515, 515},  {24, 592, 592},  {25, 655, 655},  {26, 726, 726},
    {27, 769, 769},  {28, 826, 826},  {29, 867, 867},  {30, 902, 902},
    {31, 930, 930},  {32, 1006, 1006}, {33, 1063, 1063}, {34, 1144, 1143},
    {35, 1205, 1204}, {36, 1258, 1257}, {37, 1339, 1338}, {38, 1379, 1378},
    {39, 1419, 1418},
};

}  // namespace

TEST_CASE("parse_compact") {
    CHECK(parse_compact("01^20^21^20") == "01100110");
    CHECK(parse_compact("1^{4}01^{6}0") == "111101111110");
    CHECK(parse_compact("") == "");
    CHECK(parse_compact("0^3") == "000");
    // Unbraced exponents are single digits: 1^12 is twelve-then-lone-"2"?  No:
    // one '1' dozen times would need braces; "1^12" reads as 1^1 then "2" is
    // invalid, so exponent 12 must be braced.
    CHECK_THROWS_AS(parse_compact("1^12"), CompactParseError);
    CHECK(parse_compact("1^{12}").size() == 12);
    CHECK(parse_compact(" 0 1^2 \n0") == "0110");
    CHECK_THROWS_AS(parse_compact("2"), CompactParseError);
    CHECK_THROWS_AS(parse_compact("1^"), CompactParseError);
    CHECK_THROWS_AS(parse_compact("1^{}"), CompactParseError);
    CHECK_THROWS_AS(parse_compact("1^{4"), CompactParseError);
    CHECK_THROWS_AS(parse_compact("^2"), CompactParseError);
    CHECK_THROWS_AS(parse_compact("1^0"), CompactParseError);
}

TEST_CASE("emit_compact canonical form") {
    CHECK(emit_compact("01100110") == "01^20^21^20");
    CHECK(emit_compact("") == "");
    CHECK(emit_compact("000") == "0^3");
    CHECK(emit_compact(std::string(12, '1')) == "1^{12}");
    CHECK(emit_compact("10") == "10");

    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int len = (int)(rng() % 40);
        std::string bits;
        for (int i = 0; i < len; ++i) bits += (rng() & 1) ? '1' : '0';
        CHECK(parse_compact(emit_compact(bits)) == bits);
    }
}

TEST_CASE("verify_good basics") {
    CHECK(verify_good("01100110", 3, 3) == std::nullopt);
    CHECK(verify_good("", 3, 3) == std::nullopt);
    CHECK(verify_good("111", 3, 3) == Violation{1, 1, 1});
    CHECK(verify_good("000", 3, 3) == Violation{1, 1, 0});
    CHECK(verify_good("011100111", 3, 4) == std::nullopt);
    // Violation coordinates are the lexicographically first (a, d, block).
    CHECK(verify_good("010101010", 3, 3) == Violation{1, 2, 0});
    CHECK_THROWS_AS(verify_good("01", 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_good("01", 3, 2), std::invalid_argument);
}

TEST_CASE("verify_good agrees with an independent mask scanner") {
    for (auto [t0, t1] : {std::pair{3, 3}, {3, 4}, {2, 5}, {4, 4}}) {
        for (int n = 0; n <= 14; ++n) {
            for (uint32_t x = 0; x < (1u << n); ++x) {
                std::string bits(n, '0');
                for (int i = 0; i < n; ++i)
                    if (x & (1u << i)) bits[i] = '1';
                bool good = !verify_good(bits, t0, t1).has_value();
                REQUIRE(good == good_by_masks(bits, t0, t1));
            }
        }
    }
}

TEST_CASE("violations returned are real and minimal") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 500; ++iter) {
        int n = 5 + (int)(rng() % 20);
        std::string bits;
        for (int i = 0; i < n; ++i) bits += (rng() & 1) ? '1' : '0';
        auto v = verify_good(bits, 3, 4);
        if (!v) continue;
        int t = v->block == 0 ? 3 : 4;
        char want = v->block == 0 ? '0' : '1';
        REQUIRE(v->a + (t - 1) * v->d <= n);
        for (int i = 0; i < t; ++i) REQUIRE(bits[v->a + i * v->d - 1] == want);
        // No violation with smaller (a, d, block).
        for (long long a = 1; a <= v->a; ++a) {
            for (long long d = 1; d <= n; ++d) {
                for (int block = 0; block <= 1; ++block) {
                    auto tup = std::tuple{a, d, (long long)block};
                    if (tup >= std::tuple{v->a, v->d, (long long)v->block}) continue;
                    int tt = block == 0 ? 3 : 4;
                    if (a + (tt - 1) * d > n) continue;
                    char w = block == 0 ? '0' : '1';
                    bool inside = true;
                    for (int i = 0; i < tt; ++i)
                        if (bits[a + i * d - 1] != w) { inside = false; break; }
                    REQUIRE(!inside);
                }
            }
        }
    }
}

TEST_CASE("is_palindrome") {
    CHECK(is_palindrome("01100110"));
    CHECK(!is_palindrome("00110011"));
    CHECK(is_palindrome(""));
    CHECK(is_palindrome("0"));
    CHECK(is_palindrome("01110"));
}

TEST_CASE("expand_half") {
    CHECK(expand_half("0110", 8) == "01100110");
    CHECK(expand_half("011", 5) == "01110");
    CHECK(expand_half("", 0) == "");
    CHECK(expand_half("1", 1) == "1");
    CHECK_THROWS_AS(expand_half("01", 5), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 100; ++iter) {
        int n = (int)(rng() % 30);
        std::string half;
        for (int i = 0; i < (n + 1) / 2; ++i) half += (rng() & 1) ? '1' : '0';
        std::string full = expand_half(half, n);
        REQUIRE((int)full.size() == n);
        REQUIRE(is_palindrome(full));
        REQUIRE(full.substr(0, (n + 1) / 2) == half);
    }
}

TEST_CASE("peaks and valleys of run-length sequences") {
    CHECK(peaks_valleys({}) == std::pair<long long, long long>{0, 0});
    CHECK(peaks_valleys({7}) == std::pair<long long, long long>{1, 0});
    CHECK(peaks_valleys({4, 4, 4}) == std::pair<long long, long long>{1, 0});
    CHECK(peaks_valleys({2, 2}) == std::pair<long long, long long>{1, 0});
    CHECK(peaks_valleys({3, 1, 3, 1, 3}) == std::pair<long long, long long>{3, 2});
    CHECK(peaks_valleys({1, 2, 1}) == std::pair<long long, long long>{1, 2});
    CHECK(peaks_valleys({1, 2, 3}) == std::pair<long long, long long>{1, 1});
    CHECK(peaks_valleys({3, 1, 4, 4, 1}) == std::pair<long long, long long>{2, 2});
    CHECK(peaks_valleys({5, 5, 3, 5, 5}) == std::pair<long long, long long>{2, 1});

    // For non-constant sequences, peaks + valleys = direction changes + 2.
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 300; ++iter) {
        int len = 1 + (int)(rng() % 12);
        std::vector<long long> seq;
        for (int i = 0; i < len; ++i) seq.push_back((long long)(rng() % 4));
        std::vector<long long> c;
        for (long long x : seq)
            if (c.empty() || c.back() != x) c.push_back(x);
        auto [np, nv] = peaks_valleys(seq);
        if (c.size() == 1) {
            REQUIRE(np + nv == 1);
            continue;
        }
        long long changes = 0;
        for (size_t i = 2; i < c.size(); ++i)
            if ((c[i] > c[i - 1]) != (c[i - 1] > c[i - 2])) ++changes;
        REQUIRE(np + nv == changes + 2);
    }
}

TEST_CASE("max_plateau") {
    CHECK(max_plateau({}) == 0);
    CHECK(max_plateau({5}) == 1);
    CHECK(max_plateau({1, 1, 1, 1}) == 4);
    CHECK(max_plateau({2, 1, 1, 3, 3, 3}) == 3);
}

TEST_CASE("statistics of the worked examples") {
    std::string b1 = parse_compact("1^8001^601^301^101^3001^501^801^5001^301^101^301^6001^8");
    CertificateStats s1 = compute_stats(b1);
    CHECK(s1.n0 == 16);
    CHECK(s1.n1 == 60);
    CHECK(s1.n00 == 4);
    CHECK(s1.epos1 == std::vector<long long>{8, 6, 3, 1, 3, 5, 8, 5, 3, 1, 3, 6, 8});
    CHECK(s1.np1 == 3);
    CHECK(s1.nv1 == 2);
    CHECK(s1.np1 + s1.nv1 == 5);

    std::string b2 = parse_compact("1^101^101^201^201^301^3");
    CertificateStats s2 = compute_stats(b2);
    CHECK(s2.n0 == 5);
    CHECK(s2.n1 == 12);
    CHECK(s2.n00 == 0);
    CHECK(s2.np1 == 1);
    CHECK(s2.nv1 == 1);

    // All-ones degenerate record.
    CertificateStats s3 = compute_stats(std::string(9, '1'));
    CHECK(s3.n0 == 0);
    CHECK(s3.epos1 == std::vector<long long>{9});
    CHECK(s3.np1 == 1);
    CHECK(s3.nv1 == 0);
    CHECK(s3.max_plateau0 == 0);
    CHECK(s3.max_plateau1 == 1);

    // Four equal consecutive exponents in a good partition at n = 8.
    CertificateStats s4 = compute_stats("10100101");
    CHECK(s4.epos1 == std::vector<long long>{1, 1, 1, 1});
    CHECK(s4.max_plateau1 == 4);
    CHECK(verify_good("10100101", 3, 3) == std::nullopt);
}

TEST_CASE("stored certificates parse and their good prefixes verify") {
    for (auto [t, stored_len, good_len] : kFixtureTable) {
        CAPTURE(t);
        std::string bits = parse_compact(read_fixture("w3_t" + std::to_string(t) + ".cert"));
        REQUIRE((int)bits.size() == stored_len);
        std::string good = bits.substr(0, good_len);
        REQUIRE(verify_good(good, 3, t) == std::nullopt);
        if (good_len < stored_len) REQUIRE(verify_good(bits, 3, t).has_value());
    }
}

TEST_CASE("summary quintuple of the stored t=20 certificate") {
    std::string bits = parse_compact(read_fixture("w3_t20.cert"));
    auto q = stats_quintuple(compute_stats(bits));
    std::array<std::array<long long, 2>, 5> expect = {
        {{48, 341}, {44, 45}, {4, 37}, {5, 27}, {20, 1}}};
    CHECK(q == expect);
}

TEST_CASE("stored palindromic halves expand to good palindromic partitions") {
    struct Row {
        const char* file;
        long long n;
        int t1;
    };
    for (auto [file, n, t1] : {Row{"pd3_t3_n8.half", 8, 3},
                               Row{"pd3_t34_n1053.half", 1053, 34},
                               Row{"pd3_t34_n1080.half", 1080, 34}}) {
        CAPTURE(file);
        std::string half = parse_compact(read_fixture(file));
        REQUIRE((long long)half.size() == (n + 1) / 2);
        std::string full = expand_half(half, n);
        REQUIRE(is_palindrome(full));
        REQUIRE(verify_good(full, 3, t1) == std::nullopt);
    }
}

TEST_CASE("tampering with a stored certificate is detected with coordinates") {
    std::string bits = parse_compact(read_fixture("w3_t19.cert"));
    REQUIRE(verify_good(bits, 3, 19) == std::nullopt);
    std::string bad = bits;
    bad[100] = bad[100] == '1' ? '0' : '1';
    auto v = verify_good(bad, 3, 19);
    REQUIRE(v.has_value());
    int t = v->block == 0 ? 3 : 19;
    char want = v->block == 0 ? '0' : '1';
    for (int i = 0; i < t; ++i) REQUIRE(bad[v->a + i * v->d - 1] == want);
}
