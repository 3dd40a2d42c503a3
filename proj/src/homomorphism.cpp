#include "singq/homomorphism.hpp"

#include <algorithm>

namespace singq {

bool StructureMap::is_bijective() const {
    if (source_size != target_size) return false;
    std::vector<bool> hit(static_cast<size_t>(target_size), false);
    for (int v : images) {
        if (v < 0 || v >= target_size || hit[static_cast<size_t>(v)]) return false;
        hit[static_cast<size_t>(v)] = true;
    }
    return static_cast<int>(images.size()) == source_size;
}

bool is_singquandle_homomorphism(const StructureMap& f,
                                 const OrientedSingquandle& s,
                                 const OrientedSingquandle& t) {
    const int n = s.size(), m = t.size();
    if (f.source_size != n || f.target_size != m ||
        static_cast<int>(f.images.size()) != n)
        throw DomainError("map shape does not match the structures");
    for (int v : f.images)
        if (v < 0 || v >= m) throw DomainError("map image out of range");

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int fx = f.images[x], fy = f.images[y];
            if (f.images[s.op().at(x, y)] != t.op().at(fx, fy)) return false;
            if (f.images[s.r1().at(x, y)] != t.r1().at(fx, fy)) return false;
            if (f.images[s.r2().at(x, y)] != t.r2().at(fx, fy)) return false;
        }
    return true;
}

namespace {

// Per-element profile used to prune the isomorphism search: an isomorphism
// preserves whether x is a fixed point of the diagonal maps x -> R1(x, x)
// and x -> R2(x, x).
int diagonal_profile(const OrientedSingquandle& s, int x) {
    return (s.r1().at(x, x) == x ? 1 : 0) | (s.r2().at(x, x) == x ? 2 : 0);
}

bool full_check(const OrientedSingquandle& s, const OrientedSingquandle& t,
                const std::vector<int>& images) {
    const int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int fa = images[static_cast<size_t>(a)],
                      fb = images[static_cast<size_t>(b)];
            if (images[static_cast<size_t>(s.op().at(a, b))] != t.op().at(fa, fb)) return false;
            if (images[static_cast<size_t>(s.r1().at(a, b))] != t.r1().at(fa, fb)) return false;
            if (images[static_cast<size_t>(s.r2().at(a, b))] != t.r2().at(fa, fb)) return false;
        }
    return true;
}

bool extend(const OrientedSingquandle& s, const OrientedSingquandle& t,
            const std::vector<int>& profile_t, std::vector<int>& images,
            std::vector<bool>& used, int x) {
    const int n = s.size();
    // The incremental checks below only cover constraints whose three
    // participating elements are all assigned, so finished assignments get
    // one complete pass.
    if (x == n) return full_check(s, t, images);
    const int want = diagonal_profile(s, x);
    for (int v = 0; v < n; ++v) {
        if (used[static_cast<size_t>(v)] || profile_t[static_cast<size_t>(v)] != want)
            continue;
        // Check every constraint whose operands are all assigned so far.
        bool ok = true;
        images[static_cast<size_t>(x)] = v;
        used[static_cast<size_t>(v)] = true;
        for (int y = 0; y <= x && ok; ++y) {
            const int pairs[2][2] = {{x, y}, {y, x}};
            for (const auto& p : pairs) {
                const int a = p[0], b = p[1];
                const int fa = images[static_cast<size_t>(a)],
                          fb = images[static_cast<size_t>(b)];
                const int im_op = s.op().at(a, b), im_r1 = s.r1().at(a, b),
                          im_r2 = s.r2().at(a, b);
                if (im_op <= x && images[static_cast<size_t>(im_op)] != t.op().at(fa, fb)) { ok = false; break; }
                if (im_r1 <= x && images[static_cast<size_t>(im_r1)] != t.r1().at(fa, fb)) { ok = false; break; }
                if (im_r2 <= x && images[static_cast<size_t>(im_r2)] != t.r2().at(fa, fb)) { ok = false; break; }
            }
        }
        if (ok && extend(s, t, profile_t, images, used, x + 1)) return true;
        used[static_cast<size_t>(v)] = false;
        images[static_cast<size_t>(x)] = -1;
    }
    return false;
}

}  // namespace

std::optional<StructureMap> find_isomorphism(const OrientedSingquandle& s,
                                             const OrientedSingquandle& t,
                                             int max_size) {
    const int n = s.size();
    if (n > max_size || t.size() > max_size)
        throw TooLargeError("isomorphism search limited to carriers of size " +
                            std::to_string(max_size));
    if (n != t.size()) return std::nullopt;

    // Profile multisets must agree, otherwise no bijection can work.
    std::vector<int> ps(static_cast<size_t>(n)), pt(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        ps[static_cast<size_t>(x)] = diagonal_profile(s, x);
        pt[static_cast<size_t>(x)] = diagonal_profile(t, x);
    }
    {
        std::vector<int> a = ps, b = pt;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    std::vector<int> images(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);
    if (!extend(s, t, pt, images, used, 0)) return std::nullopt;

    StructureMap f;
    f.source_size = n;
    f.target_size = n;
    f.images = std::move(images);
    return f;
}

}  // namespace singq
