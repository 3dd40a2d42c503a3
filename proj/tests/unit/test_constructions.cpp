#include <doctest.h>

#include <numeric>
#include <string>
#include <vector>

#include "singq/constructions.hpp"
#include "singq/singquandle.hpp"

using namespace singq;

namespace {

bool passes_all(const OrientedSingquandle& s) {
    return check_oriented_singquandle(s).all_passed();
}

}  // namespace

TEST_CASE("trivial and dihedral quandles") {
    const Quandle t3 = trivial_quandle(3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(t3.op().at(x, y) == x);

    // 2y - x = -x + 2y is the affine quandle with a = n - 1.
    CHECK(dihedral_quandle(5).op() == affine_quandle(5, 4).op());
    CHECK(dihedral_quandle(7).op().at(2, 5) == (2 * 5 - 2) % 7);
    CHECK_THROWS_AS(trivial_quandle(0), DomainError);
}

TEST_CASE("affine quandle needs an invertible coefficient") {
    CHECK_THROWS_AS(affine_quandle(6, 2), DomainError);
    CHECK_THROWS_AS(affine_quandle(5, 0), DomainError);
    // Coefficients are taken mod n.
    CHECK(affine_quandle(5, 7).op() == affine_quandle(5, 2).op());
    CHECK(affine_quandle(5, -3).op() == affine_quandle(5, 2).op());
}

TEST_CASE("conjugation quandle over S3") {
    const FiniteGroup s3 = symmetric_group(3);
    const Quandle q = conjugation_quandle(s3);
    // y^-1 x y at the pinned spot: conjugating the transposition (01) by
    // the transposition (02) gives (12).
    CHECK(q.op().at(2, 5) == 1);
    // Conjugation by y^2 is trivial whenever y is an involution.
    const Quandle q2 = conjugation_quandle(s3, 2);
    CHECK(q2.op().at(2, 5) == 2);
    CHECK(check_tables(q2.op()).all_passed());
}

TEST_CASE("affine singquandle tables and axioms") {
    const OrientedSingquandle s = affine_singquandle(5, 2, 3);
    CHECK(passes_all(s));
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
            CHECK(s.r1().at(x, y) == (3 * x + 3 * y) % 5);  // bx + (1-b)y
            CHECK(s.r2().at(x, y) == x);  // a(1-b) = 1, 1 - a(1-b) = 0
        }
}

TEST_CASE("affine singquandle axioms hold for every b, unit or not") {
    for (int n = 2; n <= 7; ++n)
        for (int a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            for (int b = 0; b < n; ++b) CHECK(passes_all(affine_singquandle(n, a, b)));
        }
    CHECK_THROWS_AS(affine_singquandle(6, 3, 1), DomainError);
}

TEST_CASE("alexander singquandle reduces to the affine one") {
    // alpha = at + bv + ctv.
    std::string note;
    const OrientedSingquandle s = alexander_singquandle(5, 2, 3, 0, 0, 0, &note);
    CHECK(s == affine_singquandle(5, 2, 0));
    CHECK(note.empty());  // alpha = 0: both y-coefficient forms agree

    const OrientedSingquandle t = alexander_singquandle(5, 2, 0, 3, 4, 1, &note);
    CHECK(t == affine_singquandle(5, 2, (3 * 2) % 5));  // v = 0 kills b and c
    CHECK(!note.empty());

    note.clear();
    CHECK(alexander_singquandle(7, 3, 2, 1, 1, 1, &note) ==
          affine_singquandle(7, 3, (1 * 3 + 1 * 2 + 1 * 3 * 2) % 7));
    CHECK(!note.empty());
    CHECK(note.find("(1 - t)(1 - alpha)") != std::string::npos);
}

TEST_CASE("alexander singquandle passes the axioms across a parameter sweep") {
    for (int t = 1; t < 5; ++t) {
        if (std::gcd(t, 5) != 1) continue;
        for (int v = 0; v < 5; ++v)
            for (int a = 0; a < 5; ++a)
                CHECK(passes_all(alexander_singquandle(5, t, v, a, 2, 3)));
    }
}

TEST_CASE("abelian f-g singquandle") {
    // f(x) = 2x and h(x) = 3x on Z_5 reproduce the affine singquandle with
    // a = 2, b = 3.
    std::vector<int> f(5), h(5);
    for (int x = 0; x < 5; ++x) {
        f[static_cast<size_t>(x)] = 2 * x % 5;
        h[static_cast<size_t>(x)] = 3 * x % 5;
    }
    const FiniteGroup z5 = cyclic_group(5);
    const OrientedSingquandle s = abelian_fg_singquandle(z5, f, h);
    CHECK(s == affine_singquandle(5, 2, 3));
    CHECK(passes_all(s));
}

TEST_CASE("abelian f-g works over a non-cyclic abelian group") {
    const FiniteGroup k4 = direct_product(cyclic_group(2), cyclic_group(2));
    // f swaps the coordinates; h is the identity.
    const std::vector<int> f = {0, 2, 1, 3};
    const std::vector<int> h = {0, 1, 2, 3};
    CHECK(passes_all(abelian_fg_singquandle(k4, f, h)));
}

TEST_CASE("abelian f-g validates its inputs") {
    const FiniteGroup z4 = cyclic_group(4);
    const std::vector<int> id = {0, 1, 2, 3};
    CHECK_THROWS_AS(abelian_fg_singquandle(z4, {0, 0, 0, 0}, id), DomainError);
    CHECK_THROWS_AS(abelian_fg_singquandle(z4, {0, 1, 0, 1}, id), DomainError);
    CHECK_THROWS_AS(abelian_fg_singquandle(z4, id, {0, 1, 0, 1}), DomainError);
    CHECK_THROWS_AS(abelian_fg_singquandle(z4, id, {0, 1}), DomainError);
    CHECK_THROWS_AS(
        abelian_fg_singquandle(symmetric_group(3), {0, 1, 2, 3, 4, 5},
                               {0, 1, 2, 3, 4, 5}),
        DomainError);

    // f and h must commute: over Z2 x Z2 take f = coordinate swap and
    // h = projection to the first coordinate.
    const FiniteGroup k4 = direct_product(cyclic_group(2), cyclic_group(2));
    CHECK_THROWS_AS(abelian_fg_singquandle(k4, {0, 2, 1, 3}, {0, 0, 2, 2}),
                    DomainError);
}

TEST_CASE("conjugation word solutions satisfy the axioms") {
    const FiniteGroup s3 = symmetric_group(3);
    for (int k = 1; k <= 4; ++k) CHECK(passes_all(conj_solution_singquandle(s3, k)));
    for (int n = 1; n <= 3; ++n)
        CHECK(passes_all(conj_solution_singquandle(s3, 5, n)));
    CHECK_THROWS_AS(conj_solution_singquandle(s3, 0), DomainError);
    CHECK_THROWS_AS(conj_solution_singquandle(s3, 6), DomainError);
    CHECK_THROWS_AS(conj_solution_singquandle(s3, 5, 0), DomainError);
}

TEST_CASE("solution 1 is the projection pair") {
    const FiniteGroup s3 = symmetric_group(3);
    const OrientedSingquandle s = conj_solution_singquandle(s3, 1);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            CHECK(s.r1().at(x, y) == x);
            CHECK(s.r2().at(x, y) == y);
        }
}

TEST_CASE("solutions collapse over abelian groups") {
    // With xy = yx, solution 2's words xyxy^-1x^-1 and xyx^-1 reduce to x, y.
    const FiniteGroup z6 = cyclic_group(6);
    CHECK(conj_solution_singquandle(z6, 2) == conj_solution_singquandle(z6, 1));
    CHECK(conj_solution_singquandle(z6, 3) == conj_solution_singquandle(z6, 1));
}

TEST_CASE("word families satisfy the axioms and fix the diagonal") {
    for (const FiniteGroup& g : {symmetric_group(3), dihedral_group(4),
                                 quaternion_group()})
        for (int family = 1; family <= 3; ++family)
            for (int n = 1; n <= 3; ++n) {
                const OrientedSingquandle s = prop_family_singquandle(g, family, n);
                CHECK(passes_all(s));
                for (int x = 0; x < s.size(); ++x) {
                    CHECK(s.r1().at(x, x) == x);
                    CHECK(s.r2().at(x, x) == x);
                }
            }
}

TEST_CASE("family 1 at n = 1 is the squaring pair x^2y^-1, yx^-1y") {
    const FiniteGroup s3 = symmetric_group(3);
    const OrientedSingquandle s = prop_family_singquandle(s3, 1, 1);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            CHECK(s.r1().at(x, y) == s3.mul(s3.mul(x, x), s3.inv(y)));
            CHECK(s.r2().at(x, y) == s3.mul(s3.mul(y, s3.inv(x)), y));
        }
}

TEST_CASE("word family guards") {
    const FiniteGroup s3 = symmetric_group(3);
    CHECK_THROWS_AS(prop_family_singquandle(s3, 0, 1), DomainError);
    CHECK_THROWS_AS(prop_family_singquandle(s3, 4, 1), DomainError);
    CHECK_THROWS_AS(prop_family_singquandle(s3, 1, 0), DomainError);
    CHECK_THROWS_AS(prop_family_singquandle(s3, 1, 65), TooLargeError);
    CHECK(passes_all(prop_family_singquandle(s3, 1, 64)));
    try {
        prop_family_singquandle(s3, 1, 0);
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("n = 0") != std::string::npos);
    }
}
