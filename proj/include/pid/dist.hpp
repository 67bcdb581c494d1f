#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pid/alphabet.hpp"
#include "pid/errors.hpp"

namespace pid {

enum class Var { X = 0, Y = 1, Z = 2 };

const char* var_name(Var v);

/// Distribution of a single variable.
class Dist1 {
public:
    /// Validates and renormalizes (divides by the exact sum). For external
    /// inputs, so downstream identities are not polluted by input slack.
    static Dist1 ingest(Alphabet a, std::vector<double> p);

    /// Validates without renormalizing. For internally constructed vectors
    /// that are normalized by construction.
    static Dist1 checked(Alphabet a, std::vector<double> p);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return p_.size(); }
    double at(std::size_t i) const { return p_.at(i); }
    const std::vector<double>& probs() const { return p_; }

    /// |sum - 1| of the raw input, before any renormalization.
    double norm_residual() const { return norm_residual_; }

private:
    Dist1(Alphabet a, std::vector<double> p, double residual)
        : alphabet_(std::move(a)), p_(std::move(p)), norm_residual_(residual) {}

    Alphabet alphabet_;
    std::vector<double> p_;
    double norm_residual_;
};

/// Joint distribution of two variables, row-major over (first, second).
class JointDist2 {
public:
    static JointDist2 ingest(Alphabet a1, Alphabet a2, std::vector<double> p);
    static JointDist2 checked(Alphabet a1, Alphabet a2, std::vector<double> p);

    const Alphabet& first_alphabet() const { return a1_; }
    const Alphabet& second_alphabet() const { return a2_; }
    std::size_t size1() const { return a1_.size(); }
    std::size_t size2() const { return a2_.size(); }
    double at(std::size_t i, std::size_t j) const { return p_[i * a2_.size() + j]; }
    const std::vector<double>& probs() const { return p_; }
    double norm_residual() const { return norm_residual_; }

private:
    JointDist2(Alphabet a1, Alphabet a2, std::vector<double> p, double residual)
        : a1_(std::move(a1)), a2_(std::move(a2)), p_(std::move(p)), norm_residual_(residual) {}

    Alphabet a1_, a2_;
    std::vector<double> p_;
    double norm_residual_;
};

/// Joint distribution of the full three-variable system. Dense tensor in
/// x-major order: index (ix, iy, iz) maps to (ix*|Y| + iy)*|Z| + iz.
/// Immutable after construction; all operations on it are pure functions.
class JointDist3 {
public:
    static JointDist3 ingest(Alphabet ax, Alphabet ay, Alphabet az, std::vector<double> p);
    static JointDist3 checked(Alphabet ax, Alphabet ay, Alphabet az, std::vector<double> p);

    const Alphabet& x_alphabet() const { return ax_; }
    const Alphabet& y_alphabet() const { return ay_; }
    const Alphabet& z_alphabet() const { return az_; }
    const Alphabet& alphabet(Var v) const;

    std::size_t size_x() const { return ax_.size(); }
    std::size_t size_y() const { return ay_.size(); }
    std::size_t size_z() const { return az_.size(); }
    std::size_t size(Var v) const;
    std::size_t cells() const { return p_.size(); }

    double at(std::size_t ix, std::size_t iy, std::size_t iz) const {
        return p_[(ix * ay_.size() + iy) * az_.size() + iz];
    }
    const std::vector<double>& tensor() const { return p_; }
    double norm_residual() const { return norm_residual_; }

private:
    JointDist2 marginal_pair(Var first, Var second) const;

    JointDist3(Alphabet ax, Alphabet ay, Alphabet az, std::vector<double> p, double residual)
        : ax_(std::move(ax)), ay_(std::move(ay)), az_(std::move(az)),
          p_(std::move(p)), norm_residual_(residual) {}

    Alphabet ax_, ay_, az_;
    std::vector<double> p_;
    double norm_residual_;
};

/// Ingestion entry point for raw tensors: shape check, nonnegativity check,
/// normalization check within tol::norm, then exact renormalization.
JointDist3 validate(std::vector<double> tensor, Alphabet ax, Alphabet ay, Alphabet az);

/// Sums out the complementary axes.
Dist1 marginal(const JointDist3& d, Var v);
JointDist2 marginal(const JointDist3& d, Var first, Var second);
Dist1 marginal(const JointDist2& d, std::size_t axis);

/// Distribution over the two remaining axes (in X,Y,Z order) given one
/// variable's observed value. Throws DegenerateCondition when the
/// conditioning event has zero probability.
JointDist2 condition_on(const JointDist3& d, Var given, const std::string& label);

/// Distribution of `target` given `given = label`.
Dist1 conditional(const JointDist3& d, Var target, Var given, const std::string& label);

/// Product system over paired alphabets:
/// Pr((x,x'),(y,y'),(z,z')) = Pr1(x,y,z) * Pr2(x',y',z').
JointDist3 product(const JointDist3& d1, const JointDist3& d2);

} // namespace pid
