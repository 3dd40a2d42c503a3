#include "singq/axioms.hpp"

namespace singq {

std::string axiom_name(AxiomId id) {
    switch (id) {
        case AxiomId::QuandleIdempotence: return "Q1 idempotence";
        case AxiomId::QuandleRightInvertible: return "Q2 right-invertibility";
        case AxiomId::QuandleDistributive: return "Q3 self-distributivity";
        case AxiomId::SingOmega4aR1: return "S1 (Omega4a, R1)";
        case AxiomId::SingOmega4aR2: return "S2 (Omega4a, R2)";
        case AxiomId::SingOmega4e: return "S3 (Omega4e)";
        case AxiomId::SingOmega5aR2: return "S4 (Omega5a, R2)";
        case AxiomId::SingOmega5aMixed: return "S5 (Omega5a, mixed)";
    }
    return "?";
}

bool AxiomReport::all_passed() const {
    for (const auto& e : entries)
        if (e.status != AxiomStatus::Pass) return false;
    return !entries.empty();
}

const AxiomReport::Entry* AxiomReport::find(AxiomId id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

const AxiomReport::Entry* AxiomReport::first_failure() const {
    for (const auto& e : entries)
        if (e.status == AxiomStatus::Fail) return &e;
    return nullptr;
}

namespace {

// Derives inv(x, y) = z with z*y = x; valid only once Q2 has passed.
OpTable invert_columns(const OpTable& op) {
    const int n = op.size();
    OpTable inv(n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) inv.set(op.at(x, y), y, x);
    return inv;
}

}  // namespace

AxiomReport check_tables(const OpTable& op, const OpTable* r1, const OpTable* r2) {
    const int n = op.size();
    AxiomReport rep;
    rep.entries.reserve(8);  // keeps the entry pointers below stable
    auto add = [&rep](AxiomId id) -> AxiomReport::Entry& {
        rep.entries.push_back({id, AxiomStatus::Pass, {}});
        return rep.entries.back();
    };

    {
        auto& e = add(AxiomId::QuandleIdempotence);
        for (int x = 0; x < n; ++x)
            if (op.at(x, x) != x) {
                e.status = AxiomStatus::Fail;
                e.witness = {x};
                break;
            }
    }
    {
        auto& e = add(AxiomId::QuandleRightInvertible);
        std::vector<int> first_hit(n);
        for (int y = 0; y < n && e.status == AxiomStatus::Pass; ++y) {
            first_hit.assign(n, -1);
            for (int x = 0; x < n; ++x) {
                int v = op.at(x, y);
                if (first_hit[v] >= 0) {
                    e.status = AxiomStatus::Fail;
                    e.witness = {y, first_hit[v], x};
                    break;
                }
                first_hit[v] = x;
            }
        }
    }
    {
        auto& e = add(AxiomId::QuandleDistributive);
        for (int x = 0; x < n && e.status == AxiomStatus::Pass; ++x)
            for (int y = 0; y < n && e.status == AxiomStatus::Pass; ++y)
                for (int z = 0; z < n; ++z)
                    if (op.at(op.at(x, y), z) != op.at(op.at(x, z), op.at(y, z))) {
                        e.status = AxiomStatus::Fail;
                        e.witness = {x, y, z};
                        break;
                    }
    }

    if (!r1 && !r2) return rep;
    if (!r1 || !r2) throw DomainError("r1 and r2 must be supplied together");
    if (r1->size() != n || r2->size() != n)
        throw DomainError("op, r1 and r2 must share one carrier size");

    const bool quandle_ok = rep.all_passed();
    auto s1 = &add(AxiomId::SingOmega4aR1);
    auto s2 = &add(AxiomId::SingOmega4aR2);
    auto s3 = &add(AxiomId::SingOmega4e);
    auto s4 = &add(AxiomId::SingOmega5aR2);
    auto s5 = &add(AxiomId::SingOmega5aMixed);
    if (!quandle_ok) {
        // The singquandle axioms use the inverse operation, which only exists
        // over a valid quandle.
        for (auto* e : {s1, s2, s3, s4, s5}) e->status = AxiomStatus::Skipped;
        return rep;
    }

    const OpTable inv = invert_columns(op);
    const OpTable &R1 = *r1, &R2 = *r2;

    for (int x = 0; x < n && s1->status == AxiomStatus::Pass; ++x)
        for (int y = 0; y < n && s1->status == AxiomStatus::Pass; ++y)
            for (int z = 0; z < n; ++z)
                if (op.at(R1.at(inv.at(x, y), z), y) != R1.at(x, op.at(z, y))) {
                    s1->status = AxiomStatus::Fail;
                    s1->witness = {x, y, z};
                    break;
                }
    for (int x = 0; x < n && s2->status == AxiomStatus::Pass; ++x)
        for (int y = 0; y < n && s2->status == AxiomStatus::Pass; ++y)
            for (int z = 0; z < n; ++z)
                if (R2.at(inv.at(x, y), z) != inv.at(R2.at(x, op.at(z, y)), y)) {
                    s2->status = AxiomStatus::Fail;
                    s2->witness = {x, y, z};
                    break;
                }
    for (int x = 0; x < n && s3->status == AxiomStatus::Pass; ++x)
        for (int y = 0; y < n && s3->status == AxiomStatus::Pass; ++y)
            for (int z = 0; z < n; ++z)
                if (op.at(inv.at(y, R1.at(x, z)), x) !=
                    inv.at(op.at(y, R2.at(x, z)), z)) {
                    s3->status = AxiomStatus::Fail;
                    s3->witness = {x, y, z};
                    break;
                }
    for (int x = 0; x < n && s4->status == AxiomStatus::Pass; ++x)
        for (int y = 0; y < n; ++y)
            if (R2.at(x, y) != R1.at(y, op.at(x, y))) {
                s4->status = AxiomStatus::Fail;
                s4->witness = {x, y};
                break;
            }
    for (int x = 0; x < n && s5->status == AxiomStatus::Pass; ++x)
        for (int y = 0; y < n; ++y)
            if (op.at(R1.at(x, y), R2.at(x, y)) != R2.at(y, op.at(x, y))) {
                s5->status = AxiomStatus::Fail;
                s5->witness = {x, y};
                break;
            }

    return rep;
}

}  // namespace singq
