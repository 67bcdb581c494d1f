#include "pid/info.hpp"

#include <cmath>

#include "pid/numerics.hpp"

namespace pid {

double log_divisor(LogBase base) {
    switch (base) {
        case LogBase::Two: return std::log(2.0);
        case LogBase::E: return 1.0;
        case LogBase::Ten: return std::log(10.0);
    }
    return std::log(2.0);
}

const char* log_base_name(LogBase base) {
    switch (base) {
        case LogBase::Two: return "2";
        case LogBase::E: return "e";
        case LogBase::Ten: return "10";
    }
    return "2";
}

namespace {

double entropy_nats(std::span<const double> p) {
    NeumaierSum s;
    for (double v : p) {
        if (v > 0.0) s.add(-v * std::log(v));
    }
    return s.value();
}

// H(cols | rows) in nats for a row-major matrix: weighted per-row entropy of
// the row-normalized conditionals.
double cond_entropy_cols_given_rows_nats(std::span<const double> m, std::size_t rows,
                                         std::size_t cols) {
    NeumaierSum total;
    for (std::size_t r = 0; r < rows; ++r) {
        NeumaierSum row_mass;
        for (std::size_t c = 0; c < cols; ++c) row_mass.add(m[r * cols + c]);
        const double w = row_mass.value();
        if (w <= 0.0) continue;
        NeumaierSum h;
        for (std::size_t c = 0; c < cols; ++c) {
            const double q = m[r * cols + c] / w;
            if (q > 0.0) h.add(-q * std::log(q));
        }
        total.add(w * h.value());
    }
    return total.value();
}

// I(rows; cols) = H(rows) - H(rows | cols) in nats.
double mi_nats(std::span<const double> m, std::size_t rows, std::size_t cols) {
    std::vector<double> row_marginal(rows, 0.0);
    {
        std::vector<NeumaierSum> acc(rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) acc[r].add(m[r * cols + c]);
        for (std::size_t r = 0; r < rows; ++r) row_marginal[r] = acc[r].value();
    }
    // H(rows | cols): transpose traversal, per-column conditionals.
    NeumaierSum h_given;
    for (std::size_t c = 0; c < cols; ++c) {
        NeumaierSum col_mass;
        for (std::size_t r = 0; r < rows; ++r) col_mass.add(m[r * cols + c]);
        const double w = col_mass.value();
        if (w <= 0.0) continue;
        NeumaierSum h;
        for (std::size_t r = 0; r < rows; ++r) {
            const double q = m[r * cols + c] / w;
            if (q > 0.0) h.add(-q * std::log(q));
        }
        h_given.add(w * h.value());
    }
    return entropy_nats(row_marginal) - h_given.value();
}

} // namespace

double entropy(const Dist1& d, LogBase base) {
    return entropy_nats(d.probs()) / log_divisor(base);
}

double entropy(const JointDist2& d, LogBase base) {
    return entropy_nats(d.probs()) / log_divisor(base);
}

double entropy(const JointDist3& d, LogBase base) {
    return entropy_nats(d.tensor()) / log_divisor(base);
}

double conditional_entropy(const JointDist2& d, std::size_t target_axis, LogBase base) {
    if (target_axis > 1) throw InvalidArgument("conditional_entropy: axis must be 0 or 1");
    if (target_axis == 1) {
        return cond_entropy_cols_given_rows_nats(d.probs(), d.size1(), d.size2()) /
               log_divisor(base);
    }
    // H(first | second): regroup column-major.
    std::vector<double> t(d.size1() * d.size2());
    for (std::size_t j = 0; j < d.size2(); ++j)
        for (std::size_t i = 0; i < d.size1(); ++i) t[j * d.size1() + i] = d.at(i, j);
    return cond_entropy_cols_given_rows_nats(t, d.size2(), d.size1()) / log_divisor(base);
}

double conditional_entropy(const JointDist3& d, Var target, Var given, LogBase base) {
    if (target == given) throw InvalidArgument("conditional_entropy: target equals given");
    JointDist2 pair = marginal(d, given, target);
    return cond_entropy_cols_given_rows_nats(pair.probs(), pair.size1(), pair.size2()) /
           log_divisor(base);
}

double conditional_entropy(const JointDist3& d, Var target, Var given1, Var given2,
                           LogBase base) {
    if (target == given1 || target == given2 || given1 == given2) {
        throw InvalidArgument("conditional_entropy: variables must be distinct");
    }
    // All three variables are involved; regroup the tensor as
    // [given-pair][target] and reuse the matrix routine.
    const std::size_t nt = d.size(target);
    const std::size_t n1 = d.size(given1);
    const std::size_t n2 = d.size(given2);
    std::vector<double> m(n1 * n2 * nt);
    for (std::size_t ix = 0; ix < d.size_x(); ++ix) {
        for (std::size_t iy = 0; iy < d.size_y(); ++iy) {
            for (std::size_t iz = 0; iz < d.size_z(); ++iz) {
                const std::size_t idx[3] = {ix, iy, iz};
                const std::size_t g = idx[static_cast<int>(given1)] * n2 +
                                      idx[static_cast<int>(given2)];
                m[g * nt + idx[static_cast<int>(target)]] = d.at(ix, iy, iz);
            }
        }
    }
    return cond_entropy_cols_given_rows_nats(m, n1 * n2, nt) / log_divisor(base);
}

double mutual_information(const JointDist2& d, LogBase base) {
    return mi_nats(d.probs(), d.size1(), d.size2()) / log_divisor(base);
}

double mutual_information(const JointDist3& d, Var a, Var b, LogBase base) {
    JointDist2 pair = marginal(d, a, b);
    return mutual_information(pair, base);
}

double conditional_mutual_information(const JointDist3& d, Var a, Var b, Var given,
                                      LogBase base) {
    if (a == b || a == given || b == given) {
        throw InvalidArgument("conditional_mutual_information: variables must be distinct");
    }
    const std::size_t ng = d.size(given);
    const std::size_t na = d.size(a);
    const std::size_t nb = d.size(b);

    NeumaierSum total;
    for (std::size_t g = 0; g < ng; ++g) {
        // Slice at given=g, laid out [a][b], with its mass.
        std::vector<double> slice(na * nb, 0.0);
        NeumaierSum mass;
        for (std::size_t ix = 0; ix < d.size_x(); ++ix) {
            for (std::size_t iy = 0; iy < d.size_y(); ++iy) {
                for (std::size_t iz = 0; iz < d.size_z(); ++iz) {
                    const std::size_t idx[3] = {ix, iy, iz};
                    if (idx[static_cast<int>(given)] != g) continue;
                    const double v = d.at(ix, iy, iz);
                    slice[idx[static_cast<int>(a)] * nb + idx[static_cast<int>(b)]] = v;
                    mass.add(v);
                }
            }
        }
        const double w = mass.value();
        if (w <= 0.0) continue;
        for (double& v : slice) v /= w;
        total.add(w * mi_nats(slice, na, nb));
    }
    return total.value() / log_divisor(base);
}

double joint_mutual_information(const JointDist3& d, LogBase base) {
    // The tensor in x-major order is already the matrix [(x,y)][z].
    return mi_nats(d.tensor(), d.size_x() * d.size_y(), d.size_z()) / log_divisor(base);
}

} // namespace pid
