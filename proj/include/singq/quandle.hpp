#pragma once

#include "singq/axioms.hpp"
#include "singq/op_table.hpp"

namespace singq {

// Thrown when a table fails an axiom check; carries the full report.
class AxiomError : public Error {
public:
    AxiomError(const std::string& what, AxiomReport report)
        : Error(what), report_(std::move(report)) {}
    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
};

// A finite quandle: an idempotent, right-invertible, right self-distributive
// operation together with the derived inverse operation
//   inv(x, y) = the unique z with z*y = x.
class Quandle {
public:
    // Validates the three quandle axioms; throws AxiomError naming the first
    // failed axiom (the report covers all three).
    static Quandle from_table(OpTable op);

    int size() const { return op_.size(); }
    const OpTable& op() const { return op_; }
    const OpTable& inv() const { return inv_; }

    bool operator==(const Quandle& other) const { return op_ == other.op_; }
    bool operator!=(const Quandle& other) const { return op_ != other.op_; }

private:
    Quandle(OpTable op, OpTable inv) : op_(std::move(op)), inv_(std::move(inv)) {}

    OpTable op_;
    OpTable inv_;
};

}  // namespace singq
