#pragma once

#include <array>
#include <string>
#include <vector>

#include "singq/error.hpp"

namespace singq {

// Semiarcs are the edges of the diagram's underlying 4-valent graph, labeled
// 1..S.  A crossing consumes two semiarcs and emits two, following the
// strand orientations:
//
//   P/N (regular):  ports = under_in, over_in, under_out, over_out
//   S   (singular): ports = in_left, in_right, out_left, out_right
//
// At a singular crossing the strands pass through, so in_left continues as
// out_right and in_right continues as out_left.
enum class CrossingKind { Positive, Negative, Singular };

struct CrossingRecord {
    CrossingKind kind = CrossingKind::Positive;
    std::array<int, 4> ports{};  // role order as above

    int in0() const { return ports[0]; }
    int in1() const { return ports[1]; }
    int out0() const { return ports[2]; }
    int out1() const { return ports[3]; }

    bool operator==(const CrossingRecord& o) const {
        return kind == o.kind && ports == o.ports;
    }
};

// A closed oriented singular link diagram, combinatorially: every semiarc
// label in 1..semiarc_count appears exactly once as an input port and exactly
// once as an output port.  A label may appear as both an input and an output
// of the same crossing (that is a kink).  No planar embedding is stored; the
// encoder declares each regular crossing's sign.
struct SingularDiagram {
    int semiarc_count = 0;
    std::vector<CrossingRecord> crossings;

    bool operator==(const SingularDiagram& o) const {
        return semiarc_count == o.semiarc_count && crossings == o.crossings;
    }
};

struct DiagramReport {
    bool ok = true;
    std::vector<std::string> issues;
};

// Checks the closed-diagram invariants and reports every violation.
DiagramReport validate_diagram(const SingularDiagram& d);

// Parses the one-crossing-per-line format
//     P u o u' o'   |   N u o u' o'   |   S l r l' r'
// with '#' comments and blank lines ignored.  Labels are arbitrary positive
// integers in the input and are normalized to 1..S in order of first
// appearance.  Throws ParseError (with line number) on malformed input and
// on any validation failure.
SingularDiagram parse_diagram(const std::string& text);

// Canonical text form; parse_diagram(serialize_diagram(d)) == d for every
// valid normalized diagram.
std::string serialize_diagram(const SingularDiagram& d);

// ---- fixtures --------------------------------------------------------

struct FixtureInfo {
    std::string name;
    std::string description;
};

const std::vector<FixtureInfo>& fixture_list();

// Returns a named built-in diagram; throws DomainError for unknown names.
SingularDiagram fixture(const std::string& name);

}  // namespace singq
