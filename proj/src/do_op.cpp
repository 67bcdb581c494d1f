#include "pid/do_op.hpp"

#include "pid/numerics.hpp"

namespace pid {

DoResult do_operation(const JointDist3& d, const Dist1& target_marginal) {
    if (target_marginal.alphabet() != d.z_alphabet()) {
        throw ShapeMismatch("do_operation: target marginal alphabet differs from the Z alphabet");
    }
    const Dist1 z_marginal = marginal(d, Var::Z);

    // Per-z scaling factor t(z)/Pr(Z=z). A zero Z-marginal cell forces the
    // whole z slice to zero; positive target mass there is unreachable.
    std::vector<double> factor(d.size_z(), 0.0);
    for (std::size_t iz = 0; iz < d.size_z(); ++iz) {
        const double mz = z_marginal.at(iz);
        const double tz = target_marginal.at(iz);
        if (mz > 0.0) {
            factor[iz] = tz / mz;
        } else if (tz > 0.0) {
            throw SupportMismatch("do_operation: target puts mass " + format_double(tz) +
                                  " on z='" + d.z_alphabet().label(iz) +
                                  "' which has zero probability");
        }
    }

    std::vector<double> out(d.cells());
    for (std::size_t ix = 0; ix < d.size_x(); ++ix) {
        for (std::size_t iy = 0; iy < d.size_y(); ++iy) {
            for (std::size_t iz = 0; iz < d.size_z(); ++iz) {
                out[(ix * d.size_y() + iy) * d.size_z() + iz] = d.at(ix, iy, iz) * factor[iz];
            }
        }
    }
    return DoResult{JointDist3::checked(d.x_alphabet(), d.y_alphabet(), d.z_alphabet(),
                                        std::move(out))};
}

ConditionedFamily conditioned_family(const JointDist3& d, Var direction) {
    if (direction == Var::Z) {
        throw InvalidArgument("conditioned_family: condition on a source variable, X or Y");
    }
    // Weights and conditional targets both come from the (condition, Z)
    // pairwise marginal so that each target sums to 1 up to rounding.
    const JointDist2 cond_z = marginal(d, direction, Var::Z);
    const std::size_t nc = cond_z.size1();
    const std::size_t nz = cond_z.size2();

    ConditionedFamily family;
    family.direction = direction;
    for (std::size_t c = 0; c < nc; ++c) {
        NeumaierSum mass;
        for (std::size_t z = 0; z < nz; ++z) mass.add(cond_z.at(c, z));
        const double w = mass.value();
        if (w <= 0.0) continue;

        std::vector<double> t(nz);
        for (std::size_t z = 0; z < nz; ++z) t[z] = cond_z.at(c, z) / w;
        Dist1 target = Dist1::checked(d.z_alphabet(), std::move(t));

        family.condition_index.push_back(c);
        family.condition_label.push_back(cond_z.first_alphabet().label(c));
        family.weight.push_back(w);
        family.member.push_back(do_operation(d, target));
        family.target.push_back(std::move(target));
    }
    return family;
}

Dist1 member_source_marginal(const ConditionedFamily& f, std::size_t i) {
    const Var source = f.direction == Var::Y ? Var::X : Var::Y;
    return marginal(f.member.at(i).dist, source);
}

JointDist2 member_source_target_pair(const ConditionedFamily& f, std::size_t i) {
    const Var source = f.direction == Var::Y ? Var::X : Var::Y;
    return marginal(f.member.at(i).dist, source, Var::Z);
}

AggregatedSource aggregate_source(const ConditionedFamily& f) {
    if (f.member.empty()) {
        throw InvalidArgument("aggregate_source: family has no members");
    }
    const JointDist3& any = f.member.front().dist;
    const std::size_t nx = any.size_x();
    const std::size_t ny = any.size_y();

    // Columns (direction Y) or rows (direction X) for skipped zero-weight
    // condition values stay zero.
    std::vector<double> joint(nx * ny, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Dist1 src = member_source_marginal(f, i);
        const std::size_t c = f.condition_index[i];
        if (f.direction == Var::Y) {
            for (std::size_t x = 0; x < nx; ++x) joint[x * ny + c] = f.weight[i] * src.at(x);
        } else {
            for (std::size_t y = 0; y < ny; ++y) joint[c * ny + y] = f.weight[i] * src.at(y);
        }
    }
    return AggregatedSource{f.direction,
                            JointDist2::checked(any.x_alphabet(), any.y_alphabet(),
                                                std::move(joint))};
}

} // namespace pid
