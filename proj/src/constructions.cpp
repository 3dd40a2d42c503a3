#include "singq/constructions.hpp"

#include <numeric>

namespace singq {

namespace {

int mod(long long v, int n) {
    long long r = v % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

void require_positive(int n, const char* what) {
    if (n < 1) throw DomainError(std::string(what) + " needs a positive carrier size");
}

// x * y = y^-m x y^m; negative m conjugates by the inverse power.
int conj_power(const FiniteGroup& g, int x, int y, int m) {
    const int ym = m >= 0 ? g.pow(y, m) : g.pow(g.inv(y), -static_cast<long long>(m));
    return g.mul(g.mul(g.inv(ym), x), ym);
}

constexpr int kMaxWordExponent = 64;

void require_exponent(int n) {
    if (n < 1) throw DomainError("the case n = 0 is excluded: the word exponent must be at least 1");
    if (n > kMaxWordExponent) throw TooLargeError("word exponent capped at 64");
}

}  // namespace

Quandle trivial_quandle(int n) {
    require_positive(n, "trivial quandle");
    OpTable op(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) op.set(x, y, x);
    return Quandle::from_table(std::move(op));
}

Quandle dihedral_quandle(int n) {
    require_positive(n, "dihedral quandle");
    OpTable op(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) op.set(x, y, mod(2LL * y - x, n));
    return Quandle::from_table(std::move(op));
}

Quandle affine_quandle(int n, long long a) {
    require_positive(n, "affine quandle");
    const int am = mod(a, n);
    if (std::gcd(am, n) != 1)
        throw DomainError("affine parameter must be a unit mod n");
    OpTable op(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            op.set(x, y, mod(static_cast<long long>(am) * x +
                             static_cast<long long>(1 - am) * y, n));
    return Quandle::from_table(std::move(op));
}

Quandle conjugation_quandle(const FiniteGroup& g, int m) {
    const int n = g.order();
    OpTable op(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) op.set(x, y, conj_power(g, x, y, m));
    return Quandle::from_table(std::move(op));
}

OrientedSingquandle affine_singquandle(int n, long long a, long long b) {
    Quandle q = affine_quandle(n, a);
    const int am = mod(a, n), bm = mod(b, n);
    OpTable r1(n), r2(n);
    const long long c2 = static_cast<long long>(am) * (1 - bm);  // a(1-b)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            r1.set(x, y, mod(static_cast<long long>(bm) * x +
                             static_cast<long long>(1 - bm) * y, n));
            r2.set(x, y, mod(c2 * x + (1 - c2) * y, n));
        }
    return OrientedSingquandle(std::move(q), std::move(r1), std::move(r2));
}

OrientedSingquandle alexander_singquandle(int n, long long t, long long v,
                                          long long a, long long b, long long c,
                                          std::string* note) {
    require_positive(n, "Alexander singquandle");
    const long long tm = mod(t, n), vm = mod(v, n);
    const long long alpha =
        mod(mod(a, n) * tm + mod(b, n) * vm + mod(mod(c, n) * tm, n) * vm, n);
    if (note) {
        note->clear();
        if (alpha != 0)
            *note = "R2 uses the y-coefficient 1 - t(1 - alpha) forced by the "
                    "axioms; the variant (1 - t)(1 - alpha) differs here and "
                    "would not satisfy them";
    }
    // With alpha fixed, the maps coincide with the plain affine two-parameter
    // structure.
    return affine_singquandle(n, t, alpha);
}

OrientedSingquandle abelian_fg_singquandle(const FiniteGroup& a,
                                           const std::vector<int>& f,
                                           const std::vector<int>& h) {
    const int n = a.order();
    if (!a.is_abelian()) throw DomainError("the underlying group must be abelian");
    if (static_cast<int>(f.size()) != n || static_cast<int>(h.size()) != n)
        throw DomainError("f and h must be image lists on the group carrier");
    for (int v : f)
        if (v < 0 || v >= n) throw DomainError("f image out of range");
    for (int v : h)
        if (v < 0 || v >= n) throw DomainError("h image out of range");

    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int v : f) {
        if (hit[static_cast<size_t>(v)]) throw DomainError("f must be a bijection");
        hit[static_cast<size_t>(v)] = true;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (f[static_cast<size_t>(a.mul(x, y))] !=
                a.mul(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
                throw DomainError("f must be a group endomorphism");
            if (h[static_cast<size_t>(a.mul(x, y))] !=
                a.mul(h[static_cast<size_t>(x)], h[static_cast<size_t>(y)]))
                throw DomainError("h must be a group endomorphism");
        }
    for (int x = 0; x < n; ++x)
        if (f[static_cast<size_t>(h[static_cast<size_t>(x)])] !=
            h[static_cast<size_t>(f[static_cast<size_t>(x)])])
            throw DomainError("f and h must commute");

    // x*y = f(x) + y - f(y); R1 = h(y) + x - h(x); R2 = h(f(x)) + y - h(f(y)).
    auto comb = [&a](int p, int q, int r) { return a.mul(a.mul(p, q), a.inv(r)); };
    OpTable op(n), r1(n), r2(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const size_t sx = static_cast<size_t>(x), sy = static_cast<size_t>(y);
            op.set(x, y, comb(f[sx], y, f[sy]));
            r1.set(x, y, comb(h[sy], x, h[sx]));
            r2.set(x, y, comb(h[static_cast<size_t>(f[sx])], y,
                              h[static_cast<size_t>(f[sy])]));
        }
    return OrientedSingquandle(Quandle::from_table(std::move(op)), std::move(r1),
                               std::move(r2));
}

OrientedSingquandle conj_solution_singquandle(const FiniteGroup& g, int k, int n) {
    Quandle q = conjugation_quandle(g, 1);
    const int m = g.order();
    OpTable r1(m), r2(m);
    auto set_all = [&](auto&& f1, auto&& f2) {
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                r1.set(x, y, f1(x, y));
                r2.set(x, y, f2(x, y));
            }
    };
    switch (k) {
        case 1:
            set_all([&](int x, int) { return x; }, [&](int, int y) { return y; });
            break;
        case 2:
            // R1 = xyxy^-1x^-1, R2 = xyx^-1
            set_all(
                [&](int x, int y) {
                    return g.mul(g.mul(g.mul(g.mul(x, y), x), g.inv(y)), g.inv(x));
                },
                [&](int x, int y) { return g.mul(g.mul(x, y), g.inv(x)); });
            break;
        case 3:
            // R1 = y^-1xy, R2 = y^-1x^-1yxy
            set_all(
                [&](int x, int y) { return g.mul(g.mul(g.inv(y), x), y); },
                [&](int x, int y) {
                    return g.mul(g.mul(g.mul(g.mul(g.inv(y), g.inv(x)), y), x), y);
                });
            break;
        case 4:
            // R1 = xy^-1x^-1yx, R2 = x^-1y^-1xy^2
            set_all(
                [&](int x, int y) {
                    return g.mul(g.mul(g.mul(g.mul(x, g.inv(y)), g.inv(x)), y), x);
                },
                [&](int x, int y) {
                    return g.mul(g.mul(g.mul(g.inv(x), g.inv(y)), x),
                                 g.mul(y, y));
                });
            break;
        case 5: {
            // R1 = y(x^-1y)^n, R2 = (y^-1x)^(n+1)y
            require_exponent(n);
            set_all(
                [&](int x, int y) {
                    return g.mul(y, g.pow(g.mul(g.inv(x), y), n));
                },
                [&](int x, int y) {
                    return g.mul(g.pow(g.mul(g.inv(y), x), n + 1LL), y);
                });
            break;
        }
        default:
            throw DomainError("solution index must be between 1 and 5");
    }
    return OrientedSingquandle(std::move(q), std::move(r1), std::move(r2));
}

OrientedSingquandle prop_family_singquandle(const FiniteGroup& g, int family, int n) {
    require_exponent(n);
    Quandle q = conjugation_quandle(g, 1);
    const int m = g.order();
    OpTable r1(m), r2(m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            const int xyi = g.mul(x, g.inv(y));   // xy^-1
            const int xiy = g.mul(g.inv(x), y);   // x^-1y
            const int yxi = g.mul(y, g.inv(x));   // yx^-1
            const int yix = g.mul(g.inv(y), x);   // y^-1x
            int a, b;
            switch (family) {
                case 1:  // R1 = x(xy^-1)^n, R2 = y(x^-1y)^n
                    a = g.mul(x, g.pow(xyi, n));
                    b = g.mul(y, g.pow(xiy, n));
                    break;
                case 2:  // R1 = (xy^-1)^n x, R2 = (x^-1y)^n y
                    a = g.mul(g.pow(xyi, n), x);
                    b = g.mul(g.pow(xiy, n), y);
                    break;
                case 3:  // R1 = x(yx^-1)^(n+1), R2 = x(y^-1x)^n
                    a = g.mul(x, g.pow(yxi, n + 1LL));
                    b = g.mul(x, g.pow(yix, n));
                    break;
                default:
                    throw DomainError("family index must be 1, 2 or 3");
            }
            r1.set(x, y, a);
            r2.set(x, y, b);
        }
    return OrientedSingquandle(std::move(q), std::move(r1), std::move(r2));
}

namespace {

// Visits every oriented singquandle over q in lexicographic R1 order.  The
// callback returns false to stop.
template <typename Fn>
void for_each_singquandle(const Quandle& q, int max_carrier, Fn&& fn) {
    const int n = q.size();
    if (n > max_carrier)
        throw TooLargeError("enumeration limited to carriers of size " +
                            std::to_string(max_carrier));
    const int cells = n * n;
    std::vector<int> r1c(static_cast<size_t>(cells), 0);
    for (;;) {
        OpTable r1(n, r1c);
        OpTable r2(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                r2.set(x, y, r1.at(y, q.op().at(x, y)));
        if (check_tables(q.op(), &r1, &r2).all_passed()) {
            OrientedSingquandle s(q, std::move(r1), std::move(r2));
            if (!fn(std::move(s))) return;
        }
        // Row-major odometer step.
        int i = cells - 1;
        while (i >= 0 && r1c[static_cast<size_t>(i)] == n - 1) {
            r1c[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
        ++r1c[static_cast<size_t>(i)];
    }
}

}  // namespace

std::vector<OrientedSingquandle> enumerate_singquandles(const Quandle& q,
                                                        std::uint64_t limit,
                                                        int max_carrier) {
    std::vector<OrientedSingquandle> out;
    for_each_singquandle(q, max_carrier, [&](OrientedSingquandle s) {
        out.push_back(std::move(s));
        return limit == 0 || out.size() < limit;
    });
    return out;
}

std::uint64_t count_singquandles(const Quandle& q, int max_carrier) {
    std::uint64_t count = 0;
    for_each_singquandle(q, max_carrier, [&](OrientedSingquandle&&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace singq
