#include "singq/quandle.hpp"

#include "singq/singquandle.hpp"

namespace singq {

Quandle Quandle::from_table(OpTable op) {
    AxiomReport rep = check_tables(op);
    if (!rep.all_passed()) {
        const auto* f = rep.first_failure();
        throw AxiomError("not a quandle: axiom " + axiom_name(f->id) + " fails",
                         std::move(rep));
    }
    const int n = op.size();
    OpTable inv(n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) inv.set(op.at(x, y), y, x);
    return Quandle(std::move(op), std::move(inv));
}

AxiomReport check_oriented_singquandle(const OrientedSingquandle& s) {
    return check_tables(s.op(), &s.r1(), &s.r2());
}

}  // namespace singq
