#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singq/group.hpp"
#include "singq/homomorphism.hpp"
#include "singq/singquandle.hpp"

namespace singq {

// ---- quandles --------------------------------------------------------

Quandle trivial_quandle(int n);                    // x*y = x
Quandle dihedral_quandle(int n);                   // x*y = 2y - x mod n
Quandle affine_quandle(int n, long long a);        // x*y = ax + (1-a)y, gcd(a,n)=1
Quandle conjugation_quandle(const FiniteGroup& g, int m = 1);  // x*y = y^-m x y^m

// ---- singquandles ----------------------------------------------------

// Affine maps over Z_n on top of the affine quandle:
//   R1(x,y) = bx + (1-b)y,  R2(x,y) = a(1-b)x + (1 - a(1-b))y.
OrientedSingquandle affine_singquandle(int n, long long a, long long b);

// Affine maps with twist parameters over Z_n: with alpha = at + bv + ctv,
//   x*y = tx + (1-t)y,  R1(x,y) = alpha*x + (1-alpha)y,
//   R2(x,y) = t(1-alpha)x + (1 - t(1-alpha))y.
// When `note` is non-null and a superficially natural variant of R2 (with
// y-coefficient (1-t)(1-alpha), which breaks the axioms unless alpha = 0)
// would differ from the table produced, a warning is written to *note.
OrientedSingquandle alexander_singquandle(int n, long long t, long long v,
                                          long long a, long long b, long long c,
                                          std::string* note = nullptr);

// Over an abelian group A with f an automorphism, h an endomorphism and
// f o h = h o f:
//   x*y = f(x) + y - f(y),  R1(x,y) = h(y) + x - h(x),
//   R2(x,y) = h(f(x)) + y - h(f(y)).
// f and h are given as image lists on the carrier of `a`.
OrientedSingquandle abelian_fg_singquandle(const FiniteGroup& a,
                                           const std::vector<int>& f,
                                           const std::vector<int>& h);

// Word solutions over the conjugation quandle x*y = y^-1 x y of g.
// k selects the solution:
//   1: R1 = x                  R2 = y
//   2: R1 = xyxy^-1x^-1        R2 = xyx^-1
//   3: R1 = y^-1xy             R2 = y^-1x^-1yxy
//   4: R1 = xy^-1x^-1yx        R2 = x^-1y^-1xy^2
//   5: R1 = y(x^-1y)^n         R2 = (y^-1x)^(n+1)y     (needs n >= 1)
OrientedSingquandle conj_solution_singquandle(const FiniteGroup& g, int k, int n = 1);

// Word families over the conjugation quandle, n >= 1:
//   1: R1 = x(xy^-1)^n         R2 = y(x^-1y)^n
//   2: R1 = (xy^-1)^n x        R2 = (x^-1y)^n y
//   3: R1 = x(yx^-1)^(n+1)     R2 = x(y^-1x)^n
OrientedSingquandle prop_family_singquandle(const FiniteGroup& g, int family, int n);

// ---- enumeration -----------------------------------------------------

// All oriented singquandles over the fixed quandle q, in lexicographic order
// of the R1 table (read row-major).  R2 is forced pointwise by the axiom
// R2(x,y) = R1(y, x*y), so only R1 tables are enumerated; each derived pair
// is kept iff the full checker passes.  Stops early after `limit` results
// when limit is nonzero.  Carriers larger than max_carrier are refused
// (|X|^(|X|^2) candidate tables).
std::vector<OrientedSingquandle> enumerate_singquandles(const Quandle& q,
                                                        std::uint64_t limit = 0,
                                                        int max_carrier = 4);

// Total count, without materializing the structures.
std::uint64_t count_singquandles(const Quandle& q, int max_carrier = 4);

}  // namespace singq
