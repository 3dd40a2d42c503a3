#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "singq/diagram.hpp"

using namespace singq;

TEST_CASE("the built-in fixtures are valid and round-trip exactly") {
    const auto& list = fixture_list();
    REQUIRE(list.size() == 6);
    for (const auto& info : list) {
        CAPTURE(info.name);
        const SingularDiagram d = fixture(info.name);
        CHECK(validate_diagram(d).ok);
        CHECK(parse_diagram(serialize_diagram(d)) == d);
        CHECK(!info.description.empty());
    }
    CHECK_THROWS_AS(fixture("no-such-fixture"), DomainError);
}

TEST_CASE("fixture texts are pinned") {
    CHECK(serialize_diagram(fixture("fig7-hopf")) == "P 1 2 3 4\nS 4 3 1 2\n");
    CHECK(serialize_diagram(fixture("fig8-left")) == "P 1 2 3 4\nS 3 4 1 2\n");
    CHECK(serialize_diagram(fixture("fig8-right")) ==
          "S 1 2 3 4\nP 3 4 5 6\nP 6 5 2 1\n");
    CHECK(serialize_diagram(fixture("fig8-left/omega5a")) ==
          "P 1 2 3 4\nS 4 3 2 1\n");
    CHECK(fixture("fig7-hopf/omega1").crossings.size() == 3);
    CHECK(fixture("fig7-hopf/omega2").crossings.size() == 4);
}

TEST_CASE("parsing normalizes labels by first appearance") {
    const SingularDiagram d = parse_diagram("P 10 20 30 40\nS 40 30 10 20\n");
    CHECK(d == fixture("fig7-hopf"));
    // Comments, blank lines and extra spaces are ignored.
    const SingularDiagram e = parse_diagram(
        "# a Hopf link with one singular crossing\n\n"
        "  P 1 2 3 4   # positive crossing\n"
        "S 4 3 1 2\n");
    CHECK(e == fixture("fig7-hopf"));
}

TEST_CASE("kinks may reuse a label within one crossing") {
    const SingularDiagram d = fixture("fig7-hopf/omega1");
    CHECK(validate_diagram(d).ok);
    // The kink crossing P 6 5 1 6 consumes and produces semiarc 6.
    const CrossingRecord& kink = d.crossings.back();
    CHECK(kink.in0() == kink.out1());
}

TEST_CASE("parse errors carry line numbers") {
    for (const char* bad : {
             "P 1 2 3\n",          // too few ports
             "X 1 2 3 4\n",        // unknown crossing kind
             "P 1 2 3 four\n",     // not a number
             "P 1 2 3 4 5\n",      // too many ports
             "P 0 1 2 3\n",        // labels must be positive
         }) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_diagram(bad), ParseError);
    }
    try {
        parse_diagram("P 1 2 3 4\nS 4 3 1\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("closure violations are rejected with all issues reported") {
    // One crossing alone leaves 1 and 2 without producers.
    CHECK_THROWS_AS(parse_diagram("P 1 2 3 4\n"), ParseError);

    SingularDiagram d;
    d.semiarc_count = 3;
    d.crossings.push_back({CrossingKind::Positive, {1, 1, 2, 3}});
    const DiagramReport rep = validate_diagram(d);
    CHECK(!rep.ok);
    CHECK(rep.issues.size() >= 2);
    bool mentions_same_input = false;
    for (const auto& issue : rep.issues)
        if (issue.find("same semiarc") != std::string::npos)
            mentions_same_input = true;
    CHECK(mentions_same_input);

    SingularDiagram out_of_range;
    out_of_range.semiarc_count = 4;
    out_of_range.crossings.push_back({CrossingKind::Singular, {1, 2, 3, 5}});
    CHECK(!validate_diagram(out_of_range).ok);

    SingularDiagram no_crossings;
    no_crossings.semiarc_count = 1;
    CHECK(!validate_diagram(no_crossings).ok);
}

TEST_CASE("the empty diagram is valid and round-trips") {
    const SingularDiagram d{};
    CHECK(validate_diagram(d).ok);
    CHECK(serialize_diagram(d).empty());
    CHECK(parse_diagram("") == d);
    CHECK(parse_diagram("# only a comment\n\n") == d);
}

TEST_CASE("random closed diagrams survive a serialize/parse round-trip") {
    std::mt19937 rng(20260814u);
    for (int trial = 0; trial < 100; ++trial) {
        const int c = 1 + static_cast<int>(rng() % 10);
        const int s = 2 * c;
        // Hand each crossing two distinct inputs and two distinct outputs by
        // splitting two random permutations of the semiarcs into pairs.
        std::vector<int> ins(static_cast<size_t>(s)), outs(static_cast<size_t>(s));
        std::iota(ins.begin(), ins.end(), 1);
        std::iota(outs.begin(), outs.end(), 1);
        std::shuffle(ins.begin(), ins.end(), rng);
        std::shuffle(outs.begin(), outs.end(), rng);
        SingularDiagram d;
        d.semiarc_count = s;
        for (int i = 0; i < c; ++i) {
            CrossingRecord rec;
            const int kind = static_cast<int>(rng() % 3);
            rec.kind = kind == 0   ? CrossingKind::Positive
                       : kind == 1 ? CrossingKind::Negative
                                   : CrossingKind::Singular;
            rec.ports = {ins[static_cast<size_t>(2 * i)],
                         ins[static_cast<size_t>(2 * i + 1)],
                         outs[static_cast<size_t>(2 * i)],
                         outs[static_cast<size_t>(2 * i + 1)]};
            d.crossings.push_back(rec);
        }
        REQUIRE(validate_diagram(d).ok);
        // One normalization pass, then the text form is a fixed point.
        const SingularDiagram norm = parse_diagram(serialize_diagram(d));
        CHECK(validate_diagram(norm).ok);
        CHECK(norm.crossings.size() == d.crossings.size());
        CHECK(norm.semiarc_count == d.semiarc_count);
        CHECK(parse_diagram(serialize_diagram(norm)) == norm);
    }
}
