#include "singq/diagram.hpp"

namespace singq {

namespace {

struct Entry {
    FixtureInfo info;
    const char* text;
};

// All encodings are stored in normalized label order, so every fixture
// round-trips through parse/serialize unchanged.
//
// The two fig8 encodings are pinned by their coloring sets rather than by a
// drawing: colored over the conjugation structure with R1 = x^2 y^-1 and
// R2 = y x^-1 y, the singular inputs (c1, c2) of fig8-left range over the
// diagonal {(x, x)} and those of fig8-right over {(x, y) : xyx^-1 = yxy^-1},
// for each of S3, D4 and Q8.  fig8-right needs the two extra regular
// crossings because a singular record always reads its equations in flow
// direction; the rerouting expresses the reversed strand without inverse
// maps of R1 or R2.
const Entry kFixtures[] = {
    {{"fig7-hopf",
      "oriented Hopf link variant: one positive and one singular crossing"},
     "P 1 2 3 4\n"
     "S 4 3 1 2\n"},
    {{"fig7-hopf/omega1",
      "fig7-hopf with a positive kink spliced into one semiarc"},
     "P 1 2 3 4\n"
     "S 4 3 5 2\n"
     "P 6 5 1 6\n"},
    {{"fig7-hopf/omega2",
      "fig7-hopf with a cancelling clasp spliced into two parallel semiarcs"},
     "P 1 2 3 4\n"
     "N 3 4 5 6\n"
     "P 5 6 7 8\n"
     "S 8 7 1 2\n"},
    {{"fig8-left",
      "singular Hopf link variant: colorings project onto the diagonal"},
     "P 1 2 3 4\n"
     "S 3 4 1 2\n"},
    {{"fig8-left/omega5a",
      "fig8-left after sliding the regular crossing past the singular one"},
     "P 1 2 3 4\n"
     "S 4 3 2 1\n"},
    {{"fig8-right",
      "singular Hopf link variant with one strand reversed: colorings "
      "project onto {(x, y) : xyx^-1 = yxy^-1}"},
     "S 1 2 3 4\n"
     "P 3 4 5 6\n"
     "P 6 5 2 1\n"},
};

}  // namespace

const std::vector<FixtureInfo>& fixture_list() {
    static const std::vector<FixtureInfo> list = [] {
        std::vector<FixtureInfo> v;
        for (const Entry& e : kFixtures) v.push_back(e.info);
        return v;
    }();
    return list;
}

SingularDiagram fixture(const std::string& name) {
    for (const Entry& e : kFixtures)
        if (e.info.name == name) return parse_diagram(e.text);
    std::string msg = "unknown fixture '" + name + "'; available:";
    for (const Entry& e : kFixtures) msg += " " + e.info.name;
    throw DomainError(msg);
}

}  // namespace singq
