#pragma once

#include "pid/dist.hpp"

namespace pid {

/// Logarithm base for all information quantities. Bits by default.
enum class LogBase { Two, E, Ten };

/// ln(base); information in the chosen unit is the natural-log value divided
/// by this.
double log_divisor(LogBase base);

const char* log_base_name(LogBase base);

/// Shannon entropy with the 0*log(0) = 0 convention, enforced by skipping
/// zero entries rather than evaluating log(0).
double entropy(const Dist1& d, LogBase base = LogBase::Two);
double entropy(const JointDist2& d, LogBase base = LogBase::Two);
double entropy(const JointDist3& d, LogBase base = LogBase::Two);

/// H(target | other axis) on a pairwise joint, computed as the weighted sum
/// of per-condition entropies; conditions with zero probability contribute 0.
double conditional_entropy(const JointDist2& d, std::size_t target_axis,
                           LogBase base = LogBase::Two);

double conditional_entropy(const JointDist3& d, Var target, Var given,
                           LogBase base = LogBase::Two);
double conditional_entropy(const JointDist3& d, Var target, Var given1, Var given2,
                           LogBase base = LogBase::Two);

/// I(first; second) = H(first) - H(first | second).
double mutual_information(const JointDist2& d, LogBase base = LogBase::Two);
double mutual_information(const JointDist3& d, Var a, Var b, LogBase base = LogBase::Two);

/// I(a; b | given) = sum over g of Pr(given=g) * I(a; b | given=g).
double conditional_mutual_information(const JointDist3& d, Var a, Var b, Var given,
                                      LogBase base = LogBase::Two);

/// I(X,Y; Z): mutual information between the source pair and the target.
double joint_mutual_information(const JointDist3& d, LogBase base = LogBase::Two);

} // namespace pid
