#pragma once

#include <string>
#include <vector>

#include "pid/dist.hpp"

namespace pid {

/// Output of the do-operation: a three-variable distribution over the same
/// alphabets as the input, whose third-axis marginal equals the requested
/// target. Full alphabets are retained (zero-probability outcomes included)
/// so tensor shapes stay stable for aggregation and comparison.
struct DoResult {
    JointDist3 dist;
};

/// Resets the Z marginal of `d` to `target_marginal` while leaving the
/// conditional structure given Z untouched:
///
///   Pr(A,B,C = x,y,z) = 0                                  if Pr(Z=z) = 0
///                     = Pr(X,Y,Z = x,y,z) * t(z) / Pr(Z=z) otherwise.
///
/// Requires supp(target) within supp(Z marginal); positive target mass on a
/// zero-probability z throws SupportMismatch.
DoResult do_operation(const JointDist3& d, const Dist1& target_marginal);

/// One do-operation output per condition value with positive probability,
/// each with target D_{Z | condition = value}. `direction` names the source
/// variable being conditioned on (Y or X); zero-probability condition values
/// carry no weight and are skipped.
struct ConditionedFamily {
    Var direction;
    std::vector<std::size_t> condition_index; // into the condition alphabet
    std::vector<std::string> condition_label;
    std::vector<double> weight;               // Pr(condition = value)
    std::vector<Dist1> target;                // D_{Z | condition = value}
    std::vector<DoResult> member;

    std::size_t size() const { return member.size(); }
};

ConditionedFamily conditioned_family(const JointDist3& d, Var direction);

/// Pairwise joint over (X alphabet, Y alphabet) whose conditional given a
/// condition value equals the corresponding member's source marginal:
/// Pr(x,y) = Pr(Y=y) * Pr(member_y source = x) for direction Y, and
/// Pr(x,y) = Pr(X=x) * Pr(member_x source = y) for direction X.
struct AggregatedSource {
    Var direction;
    JointDist2 joint;
};

AggregatedSource aggregate_source(const ConditionedFamily& f);

/// Marginal of a family member over its non-conditioned source variable
/// (X for direction Y, Y for direction X).
Dist1 member_source_marginal(const ConditionedFamily& f, std::size_t i);

/// Pairwise marginal of a member over (source, Z); the mutual information of
/// this pair is the member's contribution to unique information.
JointDist2 member_source_target_pair(const ConditionedFamily& f, std::size_t i);

} // namespace pid
