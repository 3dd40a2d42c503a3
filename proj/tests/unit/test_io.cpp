#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "singq/constructions.hpp"
#include "singq/io.hpp"

using namespace singq;

TEST_CASE("singquandle files round-trip through the canonical form") {
    const OrientedSingquandle s = affine_singquandle(5, 2, 3);
    const std::string text = format_singquandle(s);
    CHECK(text.rfind("singquandle n=5\n", 0) == 0);

    const StructureTables t = parse_structure(text);
    CHECK(t.is_singquandle());
    CHECK(t.op == s.op());
    CHECK(*t.r1 == s.r1());
    CHECK(*t.r2 == s.r2());
    CHECK(format_structure(t) == text);

    const OrientedSingquandle back = parse_singquandle(text);
    CHECK(back == s);
}

TEST_CASE("quandle files round-trip") {
    const Quandle q = dihedral_quandle(7);
    const std::string text = format_quandle(q);
    CHECK(text.rfind("quandle n=7\n", 0) == 0);
    const StructureTables t = parse_structure(text);
    CHECK(!t.is_singquandle());
    CHECK(parse_quandle(text) == q);
    CHECK(format_structure(t) == text);
}

TEST_CASE("whitespace and comments are tolerated") {
    const std::string text =
        "# three-element trivial quandle\n"
        "quandle   n=3\n"
        "op:  # row x lists x*0 x*1 x*2\n"
        "0 0 0\n"
        "\n"
        "  1 1 1\n"
        "2 2   2\n";
    const StructureTables t = parse_structure(text);
    CHECK(t.op == trivial_quandle(3).op());
}

TEST_CASE("parse errors name the offending line") {
    try {
        parse_structure("quandle n=2\nop:\n0 0\n1\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() > 0);
    }
    CHECK_THROWS_AS(parse_structure("quandle n=2\nop:\n0 9\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_structure("frobn n=2\nop:\n0 0\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_structure("quandle n=2\nmul:\n0 0\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_structure("quandle n=2\nop:\n0 0\n1 1\nextra\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_structure("quandle n=0\nop:\n"), ParseError);
    CHECK_THROWS_AS(parse_structure(""), ParseError);
    // A singquandle header requires all three tables.
    CHECK_THROWS_AS(parse_structure("singquandle n=1\nop:\n0\nr1:\n0\n"),
                    ParseError);
}

TEST_CASE("validating loads enforce the axioms") {
    CHECK_THROWS_AS(parse_quandle("quandle n=2\nop:\n1 1\n1 1\n"), AxiomError);
    try {
        parse_quandle("quandle n=2\nop:\n1 1\n1 1\n");
    } catch (const AxiomError& e) {
        CHECK(!e.report().all_passed());
        CHECK(e.report().first_failure() != nullptr);
    }
    // A broken quandle part rejects the singquandle load too.
    CHECK_THROWS_AS(
        parse_singquandle("singquandle n=2\nop:\n1 1\n1 1\n"
                          "r1:\n0 0\n1 1\nr2:\n0 1\n0 1\n"),
        AxiomError);
    // Broken singular maps still load; that verdict belongs to the checker,
    // so defective candidates stay representable.
    const OrientedSingquandle cand =
        parse_singquandle("singquandle n=2\nop:\n0 0\n1 1\n"
                          "r1:\n0 0\n1 1\nr2:\n0 0\n1 1\n");
    CHECK(!check_oriented_singquandle(cand).all_passed());
    // parse_quandle accepts a singquandle file and keeps its op table.
    CHECK(parse_quandle(format_singquandle(affine_singquandle(5, 2, 3))) ==
          affine_quandle(5, 2));
}

TEST_CASE("group files round-trip and are verified") {
    const FiniteGroup g = named_group("s3");
    const std::string text = format_group(g);
    CHECK(text.rfind("group n=6\n", 0) == 0);
    CHECK(parse_group(text).table() == g.table());
    CHECK_THROWS_AS(parse_group("group n=2\nmul:\n0 1\n1 1\n"), DomainError);
    CHECK_THROWS_AS(parse_group("quandle n=1\nmul:\n0\n"), ParseError);
}

TEST_CASE("file helpers report the path on failure") {
    namespace fs = std::filesystem;
    const fs::path p = fs::temp_directory_path() / "singq_io_test.txt";
    write_file(p.string(), "quandle n=1\nop:\n0\n");
    CHECK(read_file(p.string()) == "quandle n=1\nop:\n0\n");
    std::remove(p.string().c_str());

    const std::string missing = (fs::temp_directory_path() / "singq_missing_f").string();
    try {
        read_file(missing);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find(missing) != std::string::npos);
    }
}
