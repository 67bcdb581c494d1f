#pragma once

#include "pid/do_op.hpp"
#include "pid/info.hpp"

namespace pid {

enum class UniqueDirection { XToZGivenY, YToZGivenX };

/// Weighted mutual information between each family member's source and
/// target marginals: sum over conditions of Pr(condition) * I(source; Z).
double unique_information(const JointDist3& d, UniqueDirection dir,
                          LogBase base = LogBase::Two);

/// Same quantity along the entropy route:
/// sum of Pr(condition) * H(member source) minus H(source | Z).
/// Agrees with unique_information up to rounding; the residual between the
/// two routes is a correctness check, not a tuning knob.
double unique_information_alt(const JointDist3& d, UniqueDirection dir,
                              LogBase base = LogBase::Two);

/// I(X;Z) - Un(X -> Z | Y).
double redundant_information(const JointDist3& d, LogBase base = LogBase::Two);

/// Mutual information of the aggregated source joint; an independent route
/// to the same value as redundant_information.
double redundant_information_alt(const JointDist3& d, LogBase base = LogBase::Two);

/// I(X;Z|Y) - Un(X -> Z | Y). May be negative when H(Z|X,Y) > 0; it is
/// reported as computed, never clamped.
double synergistic_information(const JointDist3& d, LogBase base = LogBase::Two);

/// The four information atoms plus every Shannon quantity they must
/// reconcile with, the alternate computation routes, and the residuals
/// between routes.
struct PidResult {
    LogBase base = LogBase::Two;

    double un_x_z_given_y = 0; // Un(X -> Z | Y)
    double un_y_z_given_x = 0; // Un(Y -> Z | X)
    double red = 0;            // Red(X,Y -> Z), canonical (X,Y) order
    double syn = 0;            // Syn(X,Y -> Z)

    double i_xz = 0, i_yz = 0, i_xyz = 0;
    double i_xz_given_y = 0, i_yz_given_x = 0;
    double h_z_given_xy = 0;

    double un_x_alt = 0, un_y_alt = 0; // entropy-route unique information
    double red_alt = 0;                // aggregated-source route
    double red_swapped = 0;            // Red(Y,X -> Z)

    bool closed_system = false; // H(Z|X,Y) <= 1e-9 in the chosen unit

    double eq1_residual = 0;         // |i_xyz - (red + syn + un_x + un_y)|
    double un_x_alt_residual = 0;    // |un_x - un_x_alt|
    double un_y_alt_residual = 0;
    double red_alt_residual = 0;     // |red - red_alt|
    double red_swapped_residual = 0; // |red - red_swapped|
};

PidResult decompose(const JointDist3& d, LogBase base = LogBase::Two);

} // namespace pid
