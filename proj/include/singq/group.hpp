#pragma once

#include <string>
#include <vector>

#include "singq/op_table.hpp"

namespace singq {

// A finite group given by its multiplication table.  Identity and inverses
// are derived; associativity, identity and inverses are verified whenever a
// group is constructed from a raw table.
class FiniteGroup {
public:
    // Verifies the group axioms (O(n^3) associativity scan).
    static FiniteGroup from_table(OpTable mul);

    int order() const { return mul_.size(); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return mul_.at(a, b); }
    int inv(int a) const { return inv_[a]; }
    const OpTable& table() const { return mul_; }

    bool is_abelian() const;

    // a^k for k >= 0 by repeated squaring.
    int pow(int a, long long k) const;

    bool operator==(const FiniteGroup& o) const { return mul_ == o.mul_; }

private:
    FiniteGroup(OpTable mul, int identity, std::vector<int> inv)
        : mul_(std::move(mul)), identity_(identity), inv_(std::move(inv)) {}

    OpTable mul_;
    int identity_ = 0;
    std::vector<int> inv_;
};

// Builders.  Size caps keep the verification scan and downstream exhaustive
// algorithms tractable; each throws DomainError/TooLargeError outside them.
FiniteGroup cyclic_group(int n);                 // Z_n, 1 <= n <= 512
FiniteGroup dihedral_group(int n);               // order 2n, 1 <= n <= 256
FiniteGroup symmetric_group(int n);              // S_n, 1 <= n <= 5
FiniteGroup quaternion_group();                  // Q8
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);  // order <= 512

// Resolves "z<k>", "s<k>", "d<k>" (order 2k) or "q8"; throws DomainError on
// anything else.
FiniteGroup named_group(const std::string& name);

// Element order of S_n: permutations of {0,...,n-1} listed in lexicographic
// one-line order; index = lexicographic rank.  Composition is mul(a, b) =
// "a after b", i.e. (a o b)(i) = a(b(i)).
std::vector<int> permutation_of_index(int n, int index);
int index_of_permutation(const std::vector<int>& perm);

}  // namespace singq
