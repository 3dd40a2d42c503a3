#include "singq/coloring.hpp"

#include <algorithm>
#include <functional>

namespace singq {

namespace {

struct Search {
    const SingularDiagram& d;
    const OrientedSingquandle& s;
    std::vector<int> colors;          // 0-based per semiarc, -1 = open
    std::vector<int> trail;           // indices assigned since last mark

    Search(const SingularDiagram& dia, const OrientedSingquandle& str)
        : d(dia), s(str), colors(static_cast<size_t>(dia.semiarc_count), -1) {}

    // Assigns semiarc index i (0-based); false on conflict.
    bool assign(int i, int v) {
        int& slot = colors[static_cast<size_t>(i)];
        if (slot == v) return true;
        if (slot != -1) return false;
        slot = v;
        trail.push_back(i);
        return true;
    }

    int color(int port) const { return colors[static_cast<size_t>(port - 1)]; }

    // One fixpoint pass: applies every determined constraint until stable.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            const size_t before = trail.size();
            for (const CrossingRecord& c : d.crossings) {
                if (c.kind == CrossingKind::Singular) {
                    const int l = color(c.ports[0]), r = color(c.ports[1]);
                    if (l >= 0 && r >= 0) {
                        if (!assign(c.ports[2] - 1, s.r1().at(l, r))) return false;
                        if (!assign(c.ports[3] - 1, s.r2().at(l, r))) return false;
                    }
                    continue;
                }
                // Regular crossing: ports = under_in, over_in, under_out,
                // over_out; a negative crossing swaps * and its inverse.
                const bool pos = c.kind == CrossingKind::Positive;
                const OpTable& fwd = pos ? s.op() : s.inv();
                const OpTable& bwd = pos ? s.inv() : s.op();
                int oi = color(c.ports[1]), oo = color(c.ports[3]);
                if (oi >= 0 && !assign(c.ports[3] - 1, oi)) return false;
                if (oo >= 0 && !assign(c.ports[1] - 1, oo)) return false;
                const int o = color(c.ports[1]);
                if (o < 0) continue;
                const int ui = color(c.ports[0]), uo = color(c.ports[2]);
                if (ui >= 0 && !assign(c.ports[2] - 1, fwd.at(ui, o))) return false;
                if (uo >= 0 && !assign(c.ports[0] - 1, bwd.at(uo, o))) return false;
            }
            if (trail.size() != before) changed = true;
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            colors[static_cast<size_t>(trail.back())] = -1;
            trail.pop_back();
        }
    }

    // Visits complete colorings in search order; emit returns false to stop.
    bool run(const std::function<bool(const std::vector<int>&)>& emit) {
        const size_t mark = trail.size();
        if (!propagate()) {
            undo_to(mark);
            return true;
        }
        int open = -1;
        for (size_t i = 0; i < colors.size(); ++i)
            if (colors[i] == -1) {
                open = static_cast<int>(i);
                break;
            }
        if (open == -1) {
            const bool keep_going = emit(colors);
            undo_to(mark);
            return keep_going;
        }
        for (int v = 0; v < s.size(); ++v) {
            const size_t inner = trail.size();
            if (assign(open, v) && !run(emit)) {
                undo_to(mark);
                return false;
            }
            undo_to(inner);
        }
        undo_to(mark);
        return true;
    }
};

void check_guards(const SingularDiagram& d, const OrientedSingquandle& s,
                  const ColoringLimits& guards) {
    DiagramReport rep = validate_diagram(d);
    if (!rep.ok)
        throw DomainError("diagram is not closed: " +
                          (rep.issues.empty() ? std::string("invalid")
                                              : rep.issues.front()));
    if (d.semiarc_count > guards.max_semiarcs)
        throw TooLargeError("diagram exceeds the semiarc limit of " +
                            std::to_string(guards.max_semiarcs));
    if (s.size() > guards.max_carrier)
        throw TooLargeError("carrier exceeds the coloring limit of " +
                            std::to_string(guards.max_carrier));
}

}  // namespace

ColoringSet enumerate_colorings(const SingularDiagram& d,
                                const OrientedSingquandle& s,
                                std::uint64_t limit,
                                const ColoringLimits& guards) {
    check_guards(d, s, guards);
    ColoringSet out;
    out.semiarc_count = d.semiarc_count;
    Search search(d, s);
    search.run([&](const std::vector<int>& c) {
        out.colorings.push_back(c);
        return limit == 0 || out.colorings.size() < limit;
    });
    std::sort(out.colorings.begin(), out.colorings.end());
    return out;
}

std::uint64_t count_colorings(const SingularDiagram& d,
                              const OrientedSingquandle& s,
                              const ColoringLimits& guards) {
    check_guards(d, s, guards);
    std::uint64_t n = 0;
    Search search(d, s);
    search.run([&](const std::vector<int>&) {
        ++n;
        return true;
    });
    return n;
}

bool counts_distinguish(const SingularDiagram& d1, const SingularDiagram& d2,
                        const OrientedSingquandle& s,
                        const ColoringLimits& guards) {
    return count_colorings(d1, s, guards) != count_colorings(d2, s, guards);
}

}  // namespace singq
