#pragma once

#include <optional>
#include <vector>

#include "singq/singquandle.hpp"

namespace singq {

// A map between carriers, stored as the image list images[x].
struct StructureMap {
    int source_size = 0;
    int target_size = 0;
    std::vector<int> images;

    bool is_bijective() const;

    bool operator==(const StructureMap& o) const {
        return source_size == o.source_size && target_size == o.target_size &&
               images == o.images;
    }
};

// True iff f respects *, R1 and R2 pointwise.  Throws DomainError when the
// map shape does not match the two structures.
bool is_singquandle_homomorphism(const StructureMap& f,
                                 const OrientedSingquandle& s,
                                 const OrientedSingquandle& t);

// Exhaustive backtracking search for an isomorphism s -> t.  Candidates are
// pruned by diagonal fixed-point profiles (whether R1(x,x) = x and
// R2(x,x) = x) before the search; images are assigned in ascending element
// order, so the returned witness is the lexicographically first isomorphism
// (as an image sequence).  Returns std::nullopt when none exists.
// Carriers larger than max_size are refused with TooLargeError.
std::optional<StructureMap> find_isomorphism(const OrientedSingquandle& s,
                                             const OrientedSingquandle& t,
                                             int max_size = 12);

}  // namespace singq
