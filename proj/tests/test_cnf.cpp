#include <catch2/catch_amalgamated.hpp>

#include "vdw/cnf.hpp"

using namespace vdw;

namespace {

// Exhaustive model-level satisfiability check over full bitstrings, with the
// formula evaluated purely through first_falsified_clause.
bool sat_by_enumeration(const CnfFormula& f) {
    int v = f.num_vars;
    REQUIRE(v <= 20);
    for (uint32_t x = 0; x < (1u << v); ++x) {
        std::string bits(v, '0');
        for (int i = 0; i < v; ++i)
            if (x & (1u << i)) bits[i] = '1';
        if (!first_falsified_clause(f, bits)) return true;
    }
    return v == 0;  // no variables, no clauses -> vacuously satisfiable
}

std::string strip_comment_lines(const std::string& dimacs) {
    std::istringstream in(dimacs);
    std::string line, out;
    while (std::getline(in, line))
        if (line.empty() || line[0] != 'c') out += line + "\n";
    return out;
}

}  // namespace

TEST_CASE("encode_vdw shape and clause order") {
    CnfFormula f = encode_vdw(3, 4, 6);
    CHECK(f.num_vars == 6);
    REQUIRE(f.clauses.size() == 9);
    CHECK(f.clauses.front() == std::vector<int>{1, 2, 3});
    CHECK(f.clauses.back() == std::vector<int>{-3, -4, -5, -6});

    CHECK(strip_comment_lines(emit_dimacs(f)) ==
          "p cnf 6 9\n"
          "1 2 3 0\n"
          "2 3 4 0\n"
          "1 3 5 0\n"
          "3 4 5 0\n"
          "2 4 6 0\n"
          "4 5 6 0\n"
          "-1 -2 -3 -4 0\n"
          "-2 -3 -4 -5 0\n"
          "-3 -4 -5 -6 0\n");
}

TEST_CASE("encode_vdw rejects bad arguments") {
    CHECK_THROWS_AS(encode_vdw(1, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(encode_vdw(4, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(encode_vdw(3, 3, -1), std::invalid_argument);
}

TEST_CASE("encode_vdw satisfiability at the first threshold") {
    CHECK(first_falsified_clause(encode_vdw(3, 3, 8), "01100110") == std::nullopt);
    CHECK(sat_by_enumeration(encode_vdw(3, 3, 8)));
    CHECK(!sat_by_enumeration(encode_vdw(3, 3, 9)));
}

TEST_CASE("encode_pd shape and clause order") {
    CnfFormula f = encode_pd(3, 4, 9);
    CHECK(f.num_vars == 5);
    REQUIRE(f.clauses.size() == 10);
    CHECK(strip_comment_lines(emit_dimacs(f)) ==
          "p cnf 5 10\n"
          "1 2 3 0\n"
          "2 4 0\n"
          "1 3 4 0\n"
          "1 5 0\n"
          "2 5 0\n"
          "3 5 0\n"
          "4 5 0\n"
          "-2 -4 0\n"
          "-1 -3 -5 0\n"
          "-3 -4 -5 0\n");
}

TEST_CASE("encode_pd satisfiability pattern for lengths (3,3)") {
    // Half-string models; good n are all n <= 6 plus n = 8.
    CHECK(first_falsified_clause(encode_pd(3, 3, 8), "0110") == std::nullopt);
    for (int n = 0; n <= 12; ++n) {
        bool expect = n <= 6 || n == 8;
        CAPTURE(n);
        CHECK(sat_by_enumeration(encode_pd(3, 3, n)) == expect);
    }
}

TEST_CASE("pd_middle_unit appends the forced middle-element unit") {
    CnfFormula f = encode_pd(3, 9, 9);
    size_t before = f.clauses.size();
    CnfFormula g = pd_middle_unit(f, 3, 9);
    REQUIRE(g.clauses.size() == before + 1);
    CHECK(g.clauses.back() == std::vector<int>{5});

    CnfFormula even = encode_pd(3, 4, 10);
    CHECK(pd_middle_unit(even, 3, 10) == even);
    CnfFormula other = encode_pd(4, 5, 9);
    CHECK(pd_middle_unit(other, 4, 9) == other);
}

TEST_CASE("middle unit preserves satisfiability when n is large enough") {
    // For t1 = 5, n = 19 >= 2*5+1, so block 0 = {middle} alone is impossible.
    CnfFormula f = encode_pd(3, 5, 19);
    CnfFormula g = pd_middle_unit(f, 3, 19);
    CHECK(sat_by_enumeration(f) == sat_by_enumeration(g));

    // Same check across a small n sweep (both parities; even n is a no-op).
    for (int n = 11; n <= 21; ++n) {
        CAPTURE(n);
        CHECK(sat_by_enumeration(encode_pd(3, 5, n)) ==
              sat_by_enumeration(pd_middle_unit(encode_pd(3, 5, n), 3, n)));
    }
}

TEST_CASE("emit_dimacs of the empty formula") {
    CHECK(emit_dimacs(CnfFormula{}) == "p cnf 0 0\n");
    CHECK(strip_comment_lines(emit_dimacs(encode_vdw(3, 3, 0))) == "p cnf 0 0\n");
}

TEST_CASE("parse_dimacs accepts well-formed input") {
    CnfFormula f = parse_dimacs("p cnf 1 1\n1 0\n");
    CHECK(f.num_vars == 1);
    REQUIRE(f.clauses.size() == 1);
    CHECK(f.clauses[0] == std::vector<int>{1});

    CnfFormula g = parse_dimacs("c hello\np cnf 3 2\n1 -2 0\n-1 2 3 0\n");
    CHECK(g.comments == std::vector<std::string>{"hello"});
    CHECK(g.clauses == std::vector<std::vector<int>>{{1, -2}, {-1, 2, 3}});

    // Clauses may span lines; terminators are what count.
    CnfFormula h = parse_dimacs("p cnf 3 2\n1 -2\n0 -1 2 3 0\n");
    CHECK(h.clauses == g.clauses);
}

TEST_CASE("parse_dimacs reports errors with line numbers") {
    auto expect_error_on_line = [](const std::string& text, int line) {
        try {
            parse_dimacs(text);
            FAIL("expected a parse error for: " << text);
        } catch (const DimacsParseError& e) {
            CHECK(e.line == line);
        }
    };
    // Clause count mismatch: header declares 5, only 4 given.
    expect_error_on_line("p cnf 4 5\n1 0\n2 0\n3 0\n4 0\n", 5);
    // More clauses than declared.
    expect_error_on_line("p cnf 4 1\n1 0\n2 0\n", 3);
    // Literal out of range.
    expect_error_on_line("p cnf 2 1\n3 0\n", 2);
    // Bad token.
    expect_error_on_line("p cnf 2 1\n1 x 0\n", 2);
    // Unterminated clause.
    expect_error_on_line("p cnf 2 1\n1 2\n", 2);
    // Clause before header.
    expect_error_on_line("1 0\np cnf 2 1\n", 1);
    // Malformed header.
    expect_error_on_line("p cnf x 1\n", 1);
}

TEST_CASE("dimacs round trip is structural identity") {
    for (const CnfFormula& f : {encode_vdw(3, 4, 6), encode_pd(3, 4, 9), CnfFormula{},
                                encode_vdw(3, 3, 12), pd_middle_unit(encode_pd(3, 5, 19), 3, 19)}) {
        CnfFormula back = parse_dimacs(emit_dimacs(f));
        CHECK(back == f);
        CHECK(emit_dimacs(back) == emit_dimacs(f));
    }
}

TEST_CASE("instance file names") {
    CHECK(cnf_filename(false, 3, 4, 6) == "vdw_2-3-4_6.cnf");
    CHECK(cnf_filename(true, 3, 4, 9) == "vdw_pd_2-3-4_9.cnf");
}

TEST_CASE("assignment_to_partition") {
    // Unassigned variables land in block 0.
    std::vector<int8_t> a = {0, 1, 0, -1, 1};
    CHECK(assignment_to_partition(a, 4, false) == "1001");

    // Palindromic expansion from half assignments.
    std::vector<int8_t> half = {0, -1, 1, 1, -1};
    CHECK(assignment_to_partition(half, 8, true) == "01100110");
    std::vector<int8_t> half5 = {0, -1, 1, 1};
    CHECK(assignment_to_partition(half5, 5, true) == "01110");

    // A full assignment built from a known good partition stays good.
    std::string cert = "11100101110010111";
    std::vector<int8_t> full(18, 0);
    for (int v = 1; v <= 17; ++v) full[v] = cert[v - 1] == '1' ? 1 : -1;
    std::string bits = assignment_to_partition(full, 17, false);
    CHECK(bits == cert);
    CHECK(first_falsified_clause(encode_vdw(3, 4, 17), bits) == std::nullopt);
}
