#include "pid/dist.hpp"

#include <cmath>

#include "pid/numerics.hpp"

namespace pid {

const char* var_name(Var v) {
    switch (v) {
        case Var::X: return "x";
        case Var::Y: return "y";
        case Var::Z: return "z";
    }
    return "?";
}

namespace {

// Shared validation: nonnegativity, normalization within tol::norm.
// Returns |sum - 1| and optionally rescales so the entries sum to the
// compensated total exactly divided out.
double validate_entries(std::vector<double>& p, bool renormalize, const char* what) {
    for (double v : p) {
        if (v < 0.0 || std::isnan(v)) {
            throw NegativeProbability(std::string(what) + ": entry " + format_double(v) +
                                      " is negative or NaN");
        }
    }
    const double sum = compensated_sum(p);
    const double residual = std::abs(sum - 1.0);
    if (residual > tol::norm) {
        throw NotNormalized(std::string(what) + ": entries sum to " + format_double(sum));
    }
    if (renormalize && sum != 1.0) {
        for (double& v : p) v /= sum;
    }
    return residual;
}

std::size_t checked_shape(std::size_t actual, std::size_t expected, const char* what) {
    if (actual != expected) {
        throw ShapeMismatch(std::string(what) + ": got " + std::to_string(actual) +
                            " entries, alphabets require " + std::to_string(expected));
    }
    return actual;
}

} // namespace

Dist1 Dist1::ingest(Alphabet a, std::vector<double> p) {
    checked_shape(p.size(), a.size(), "Dist1");
    const double r = validate_entries(p, true, "Dist1");
    return Dist1(std::move(a), std::move(p), r);
}

Dist1 Dist1::checked(Alphabet a, std::vector<double> p) {
    checked_shape(p.size(), a.size(), "Dist1");
    const double r = validate_entries(p, false, "Dist1");
    return Dist1(std::move(a), std::move(p), r);
}

JointDist2 JointDist2::ingest(Alphabet a1, Alphabet a2, std::vector<double> p) {
    checked_shape(p.size(), a1.size() * a2.size(), "JointDist2");
    const double r = validate_entries(p, true, "JointDist2");
    return JointDist2(std::move(a1), std::move(a2), std::move(p), r);
}

JointDist2 JointDist2::checked(Alphabet a1, Alphabet a2, std::vector<double> p) {
    checked_shape(p.size(), a1.size() * a2.size(), "JointDist2");
    const double r = validate_entries(p, false, "JointDist2");
    return JointDist2(std::move(a1), std::move(a2), std::move(p), r);
}

JointDist3 JointDist3::ingest(Alphabet ax, Alphabet ay, Alphabet az, std::vector<double> p) {
    checked_shape(p.size(), ax.size() * ay.size() * az.size(), "JointDist3");
    const double r = validate_entries(p, true, "JointDist3");
    return JointDist3(std::move(ax), std::move(ay), std::move(az), std::move(p), r);
}

JointDist3 JointDist3::checked(Alphabet ax, Alphabet ay, Alphabet az, std::vector<double> p) {
    checked_shape(p.size(), ax.size() * ay.size() * az.size(), "JointDist3");
    const double r = validate_entries(p, false, "JointDist3");
    return JointDist3(std::move(ax), std::move(ay), std::move(az), std::move(p), r);
}

const Alphabet& JointDist3::alphabet(Var v) const {
    switch (v) {
        case Var::X: return ax_;
        case Var::Y: return ay_;
        case Var::Z: return az_;
    }
    return ax_;
}

std::size_t JointDist3::size(Var v) const { return alphabet(v).size(); }

JointDist3 validate(std::vector<double> tensor, Alphabet ax, Alphabet ay, Alphabet az) {
    return JointDist3::ingest(std::move(ax), std::move(ay), std::move(az), std::move(tensor));
}

Dist1 marginal(const JointDist3& d, Var v) {
    const std::size_t n = d.size(v);
    std::vector<NeumaierSum> acc(n);
    for (std::size_t ix = 0; ix < d.size_x(); ++ix) {
        for (std::size_t iy = 0; iy < d.size_y(); ++iy) {
            for (std::size_t iz = 0; iz < d.size_z(); ++iz) {
                const std::size_t i = v == Var::X ? ix : v == Var::Y ? iy : iz;
                acc[i].add(d.at(ix, iy, iz));
            }
        }
    }
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = acc[i].value();
    return Dist1::checked(d.alphabet(v), std::move(p));
}

JointDist2 marginal(const JointDist3& d, Var first, Var second) {
    if (first == second) {
        throw InvalidArgument("marginal: pair axes must be distinct");
    }
    const std::size_t n1 = d.size(first);
    const std::size_t n2 = d.size(second);
    std::vector<NeumaierSum> acc(n1 * n2);
    for (std::size_t ix = 0; ix < d.size_x(); ++ix) {
        for (std::size_t iy = 0; iy < d.size_y(); ++iy) {
            for (std::size_t iz = 0; iz < d.size_z(); ++iz) {
                const std::size_t idx[3] = {ix, iy, iz};
                const std::size_t i = idx[static_cast<int>(first)];
                const std::size_t j = idx[static_cast<int>(second)];
                acc[i * n2 + j].add(d.at(ix, iy, iz));
            }
        }
    }
    std::vector<double> p(n1 * n2);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = acc[i].value();
    return JointDist2::checked(d.alphabet(first), d.alphabet(second), std::move(p));
}

Dist1 marginal(const JointDist2& d, std::size_t axis) {
    if (axis > 1) throw InvalidArgument("marginal: JointDist2 axis must be 0 or 1");
    const std::size_t n = axis == 0 ? d.size1() : d.size2();
    std::vector<NeumaierSum> acc(n);
    for (std::size_t i = 0; i < d.size1(); ++i) {
        for (std::size_t j = 0; j < d.size2(); ++j) {
            acc[axis == 0 ? i : j].add(d.at(i, j));
        }
    }
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = acc[i].value();
    return Dist1::checked(axis == 0 ? d.first_alphabet() : d.second_alphabet(), std::move(p));
}

JointDist2 condition_on(const JointDist3& d, Var given, const std::string& label) {
    const std::size_t g = d.alphabet(given).index(label);
    const Var remaining1 = given == Var::X ? Var::Y : Var::X;
    const Var remaining2 = given == Var::Z ? Var::Y : Var::Z;
    const std::size_t n1 = d.size(remaining1);
    const std::size_t n2 = d.size(remaining2);

    std::vector<double> slice(n1 * n2);
    NeumaierSum mass;
    for (std::size_t ix = 0; ix < d.size_x(); ++ix) {
        for (std::size_t iy = 0; iy < d.size_y(); ++iy) {
            for (std::size_t iz = 0; iz < d.size_z(); ++iz) {
                const std::size_t idx[3] = {ix, iy, iz};
                if (idx[static_cast<int>(given)] != g) continue;
                const double v = d.at(ix, iy, iz);
                slice[idx[static_cast<int>(remaining1)] * n2 +
                      idx[static_cast<int>(remaining2)]] = v;
                mass.add(v);
            }
        }
    }
    const double total = mass.value();
    if (total <= 0.0) {
        throw DegenerateCondition("Pr(" + std::string(var_name(given)) + "=" + label +
                                  ") = 0, cannot condition");
    }
    for (double& v : slice) v /= total;
    return JointDist2::checked(d.alphabet(remaining1), d.alphabet(remaining2), std::move(slice));
}

Dist1 conditional(const JointDist3& d, Var target, Var given, const std::string& label) {
    if (target == given) {
        throw InvalidArgument("conditional: target and given must differ");
    }
    JointDist2 slice = condition_on(d, given, label);
    const Var remaining1 = given == Var::X ? Var::Y : Var::X;
    return marginal(slice, target == remaining1 ? 0 : 1);
}

JointDist3 product(const JointDist3& d1, const JointDist3& d2) {
    Alphabet ax = Alphabet::paired(d1.x_alphabet(), d2.x_alphabet());
    Alphabet ay = Alphabet::paired(d1.y_alphabet(), d2.y_alphabet());
    Alphabet az = Alphabet::paired(d1.z_alphabet(), d2.z_alphabet());
    std::vector<double> p;
    p.reserve(d1.cells() * d2.cells());
    for (std::size_t x1 = 0; x1 < d1.size_x(); ++x1)
    for (std::size_t x2 = 0; x2 < d2.size_x(); ++x2)
    for (std::size_t y1 = 0; y1 < d1.size_y(); ++y1)
    for (std::size_t y2 = 0; y2 < d2.size_y(); ++y2)
    for (std::size_t z1 = 0; z1 < d1.size_z(); ++z1)
    for (std::size_t z2 = 0; z2 < d2.size_z(); ++z2) {
        p.push_back(d1.at(x1, y1, z1) * d2.at(x2, y2, z2));
    }
    return JointDist3::checked(std::move(ax), std::move(ay), std::move(az), std::move(p));
}

} // namespace pid
