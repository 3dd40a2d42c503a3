#pragma once

#include <string>
#include <vector>

#include "singq/op_table.hpp"

namespace singq {

// The three quandle axioms followed by the five oriented-singquandle axioms.
// S1/S2 come from the slide of a singular crossing under a regular one
// (move O4a), S3 from move O4e, and S4/S5 from move O5a.
enum class AxiomId {
    QuandleIdempotence,      // x*x = x
    QuandleRightInvertible,  // every column of * is a permutation
    QuandleDistributive,     // (x*y)*z = (x*z)*(y*z)
    SingOmega4aR1,           // R1(x inv* y, z) * y = R1(x, z*y)
    SingOmega4aR2,           // R2(x inv* y, z) = R2(x, z*y) inv* y
    SingOmega4e,             // (y inv* R1(x,z)) * x = (y * R2(x,z)) inv* z
    SingOmega5aR2,           // R2(x,y) = R1(y, x*y)
    SingOmega5aMixed,        // R1(x,y) * R2(x,y) = R2(y, x*y)
};

enum class AxiomStatus { Pass, Fail, Skipped };

// Short display name such as "Q1 idempotence" or "S4 (Omega5a)".
std::string axiom_name(AxiomId id);

struct AxiomReport {
    struct Entry {
        AxiomId id;
        AxiomStatus status = AxiomStatus::Skipped;
        // Lexicographically first violation.  Length depends on the axiom:
        // Q1 -> {x}; Q2 -> {y, x, x'} with x*y = x'*y; Q3, S1-S3 -> {x, y, z};
        // S4, S5 -> {x, y}.  Empty unless status == Fail.
        std::vector<int> witness;
    };

    std::vector<Entry> entries;

    bool all_passed() const;
    const Entry* find(AxiomId id) const;
    const Entry* first_failure() const;
};

// Checks the quandle axioms of `op` and, when r1/r2 are supplied, the five
// singquandle axioms on top of them.  The singquandle axioms need the inverse
// operation, so they are reported as Skipped whenever a quandle axiom fails.
// Witnesses are the lexicographically first violating tuples, scanning
// (x, y, z) in row-major order.
AxiomReport check_tables(const OpTable& op, const OpTable* r1 = nullptr,
                         const OpTable* r2 = nullptr);

}  // namespace singq
