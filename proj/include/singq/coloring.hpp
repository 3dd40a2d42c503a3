#pragma once

#include <cstdint>

#include "singq/diagram.hpp"
#include "singq/singquandle.hpp"

namespace singq {

// A coloring assigns an element index to each semiarc; entry i colors
// semiarc i+1.
using Coloring = std::vector<int>;

struct ColoringSet {
    int semiarc_count = 0;
    std::vector<Coloring> colorings;  // lexicographically sorted

    std::uint64_t count() const { return colorings.size(); }
};

// Size guards for the coloring search; callers may raise them.
struct ColoringLimits {
    int max_semiarcs = 64;
    int max_carrier = 64;
};

// Enumerates all colorings of d by s.  A coloring satisfies, per crossing,
//   P: c(over_out) = c(over_in),  c(under_out) = c(under_in) *  c(over_in)
//   N: c(over_out) = c(over_in),  c(under_out) = c(under_in) inv* c(over_in)
//   S: c(out_left) = R1(c(in_left), c(in_right)),
//      c(out_right) = R2(c(in_left), c(in_right))
// Search: semiarcs are branched in ascending label order with ascending
// element values; after each assignment, ports uniquely determined by a
// constraint are propagated (for * and inv* any of under_in/under_out/over
// equality via right-translation bijectivity; for R1/R2 the outputs only).
// The result is sorted lexicographically.  With a nonzero limit the search
// stops after that many colorings (the first ones in search order, then
// sorted).  The empty diagram has exactly one (empty) coloring.
ColoringSet enumerate_colorings(const SingularDiagram& d,
                                const OrientedSingquandle& s,
                                std::uint64_t limit = 0,
                                const ColoringLimits& guards = {});

// Same search, counting only.
std::uint64_t count_colorings(const SingularDiagram& d,
                              const OrientedSingquandle& s,
                              const ColoringLimits& guards = {});

// True iff the coloring counts differ, i.e. s certifies that no sequence of
// the generating moves turns d1 into d2.
bool counts_distinguish(const SingularDiagram& d1, const SingularDiagram& d2,
                        const OrientedSingquandle& s,
                        const ColoringLimits& guards = {});

}  // namespace singq
