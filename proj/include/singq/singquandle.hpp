#pragma once

#include "singq/quandle.hpp"

namespace singq {

// A quandle equipped with two extra binary maps R1, R2 on the same carrier.
// R1 and R2 need not be invertible in either argument.  The constructor only
// enforces well-formedness (matching sizes); whether the five singquandle
// axioms hold is the job of check_oriented_singquandle, so that candidate
// structures can be represented during enumeration and testing.
class OrientedSingquandle {
public:
    OrientedSingquandle(Quandle q, OpTable r1, OpTable r2)
        : q_(std::move(q)), r1_(std::move(r1)), r2_(std::move(r2)) {
        if (r1_.size() != q_.size() || r2_.size() != q_.size())
            throw DomainError("op, r1 and r2 must share one carrier size");
    }

    int size() const { return q_.size(); }
    const Quandle& quandle() const { return q_; }
    const OpTable& op() const { return q_.op(); }
    const OpTable& inv() const { return q_.inv(); }
    const OpTable& r1() const { return r1_; }
    const OpTable& r2() const { return r2_; }

    bool operator==(const OrientedSingquandle& o) const {
        return q_ == o.q_ && r1_ == o.r1_ && r2_ == o.r2_;
    }
    bool operator!=(const OrientedSingquandle& o) const { return !(*this == o); }

private:
    Quandle q_;
    OpTable r1_;
    OpTable r2_;
};

// Full eight-axiom report for a candidate structure.  The quandle part of an
// OrientedSingquandle is valid by construction, so its three entries always
// pass; they are re-checked anyway to keep the report self-contained.
AxiomReport check_oriented_singquandle(const OrientedSingquandle& s);

}  // namespace singq
