#include "singq/group.hpp"

#include <algorithm>
#include <cctype>

namespace singq {

FiniteGroup FiniteGroup::from_table(OpTable mul) {
    const int n = mul.size();
    if (n < 1) throw DomainError("a group needs at least one element");

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (mul.at(e, a) != a || mul.at(a, e) != a) {
                ok = false;
                break;
            }
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw DomainError("multiplication table has no identity");

    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul.at(a, b) == identity && mul.at(b, a) == identity) {
                inv[a] = b;
                break;
            }
        if (inv[a] < 0)
            throw DomainError("element " + std::to_string(a) + " has no inverse");
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul.at(mul.at(a, b), c) != mul.at(a, mul.at(b, c)))
                    throw DomainError("multiplication is not associative at (" +
                                      std::to_string(a) + ", " + std::to_string(b) +
                                      ", " + std::to_string(c) + ")");

    return FiniteGroup(std::move(mul), identity, std::move(inv));
}

bool FiniteGroup::is_abelian() const {
    const int n = order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::pow(int a, long long k) const {
    if (k < 0) throw DomainError("pow expects a nonnegative exponent");
    int acc = identity_;
    int base = a;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw DomainError("cyclic group order must be positive");
    if (n > 512) throw TooLargeError("cyclic group order capped at 512");
    OpTable mul(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul.set(a, b, (a + b) % n);
    return FiniteGroup::from_table(std::move(mul));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw DomainError("dihedral parameter must be positive");
    if (n > 256) throw TooLargeError("dihedral parameter capped at 256");
    // Elements: r^a -> a, s r^a -> n + a, with s r^a s = r^-a.
    const int m = 2 * n;
    OpTable mul(m);
    auto rot = [n](int a) { return ((a % n) + n) % n; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const bool fi = i >= n, fj = j >= n;
            const int a = fi ? i - n : i, b = fj ? j - n : j;
            int v;
            if (!fi && !fj) v = rot(a + b);             // r^a r^b
            else if (!fi && fj) v = n + rot(b - a);     // r^a (s r^b) = s r^(b-a)
            else if (fi && !fj) v = n + rot(a + b);     // (s r^a) r^b
            else v = rot(b - a);                        // (s r^a)(s r^b) = r^(b-a)
            mul.set(i, j, v);
        }
    return FiniteGroup::from_table(std::move(mul));
}

std::vector<int> permutation_of_index(int n, int index) {
    if (n < 1 || n > 12) throw DomainError("permutation degree out of range");
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (index < 0 || index >= fact) throw DomainError("permutation index out of range");

    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> perm;
    long long rem = index;
    for (int i = n; i >= 1; --i) {
        fact /= i;
        const int pick = static_cast<int>(rem / fact);
        rem %= fact;
        perm.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
    }
    return perm;
}

int index_of_permutation(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    if (n < 1 || n > 12) throw DomainError("permutation degree out of range");
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    long long index = 0;
    for (int i = 0; i < n; ++i) {
        fact /= (n - i);
        auto it = std::find(pool.begin(), pool.end(), perm[i]);
        if (it == pool.end()) throw DomainError("not a permutation");
        index += (it - pool.begin()) * fact;
        pool.erase(it);
    }
    return static_cast<int>(index);
}

FiniteGroup symmetric_group(int n) {
    if (n < 1) throw DomainError("symmetric group degree must be positive");
    if (n > 5) throw TooLargeError("symmetric group degree capped at 5");
    int order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    std::vector<std::vector<int>> perms;
    perms.reserve(order);
    for (int i = 0; i < order; ++i) perms.push_back(permutation_of_index(n, i));

    OpTable mul(order);
    std::vector<int> comp(n);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            // (a o b)(i) = a(b(i)): apply b first.
            for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            mul.set(a, b, index_of_permutation(comp));
        }
    return FiniteGroup::from_table(std::move(mul));
}

FiniteGroup quaternion_group() {
    // Elements (sign, axis) with axes 1, i, j, k: index = 2*axis + (sign<0).
    // i*j = k, j*k = i, k*i = j, and i^2 = j^2 = k^2 = -1.
    auto idx = [](int sign, int axis) { return 2 * axis + (sign < 0 ? 1 : 0); };
    OpTable mul(8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = (a & 1) ? -1 : 1, xa = a >> 1;
            int sb = (b & 1) ? -1 : 1, xb = b >> 1;
            int sign = sa * sb, axis;
            if (xa == 0) axis = xb;
            else if (xb == 0) axis = xa;
            else if (xa == xb) { axis = 0; sign = -sign; }
            else {
                // distinct imaginary axes: cyclic rule with sign
                static const int prod_axis[4][4] = {{0,0,0,0},{0,0,3,2},{0,3,0,1},{0,2,1,0}};
                static const int prod_sign[4][4] = {{1,1,1,1},{1,1,1,-1},{1,-1,1,1},{1,1,-1,1}};
                axis = prod_axis[xa][xb];
                sign *= prod_sign[xa][xb];
            }
            mul.set(a, b, idx(sign, axis));
        }
    return FiniteGroup::from_table(std::move(mul));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const long long order = static_cast<long long>(a.order()) * b.order();
    if (order > 512) throw TooLargeError("direct product order capped at 512");
    const int n = static_cast<int>(order), nb = b.order();
    OpTable mul(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            mul.set(x, y, a.mul(xa, ya) * nb + b.mul(xb, yb));
        }
    return FiniteGroup::from_table(std::move(mul));
}

FiniteGroup named_group(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    auto numeric_suffix = [&s]() -> int {
        if (s.size() < 2) return -1;
        for (size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return -1;
        return std::stoi(s.substr(1));
    };
    if (s == "q8") return quaternion_group();
    const int k = numeric_suffix();
    if (k >= 0) {
        if (s[0] == 'z') return cyclic_group(k);
        if (s[0] == 's') return symmetric_group(k);
        if (s[0] == 'd') return dihedral_group(k);
    }
    throw DomainError("unknown group name '" + name +
                      "' (expected z<n>, s<n>, d<n> or q8)");
}

}  // namespace singq
