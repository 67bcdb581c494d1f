#include "pid/samples.hpp"

namespace pid {

JointDist3 estimate_from_samples(const SampleTable& t, const Alphabet& ax, const Alphabet& ay,
                                 const Alphabet& az, double smoothing_alpha) {
    if (smoothing_alpha < 0.0) {
        throw InvalidArgument("smoothing alpha must be nonnegative");
    }
    if (t.rows.empty() && smoothing_alpha == 0.0) {
        throw EmptyInput("no samples and no smoothing prior");
    }

    const std::size_t cells = ax.size() * ay.size() * az.size();
    std::vector<double> counts(cells, 0.0);
    for (const SampleRow& row : t.rows) {
        const std::size_t ix = ax.index(row.x);
        const std::size_t iy = ay.index(row.y);
        const std::size_t iz = az.index(row.z);
        counts[(ix * ay.size() + iy) * az.size() + iz] += 1.0;
    }

    const double n = static_cast<double>(t.rows.size());
    const double denom = n + smoothing_alpha * static_cast<double>(cells);
    for (double& c : counts) c = (c + smoothing_alpha) / denom;
    return JointDist3::ingest(ax, ay, az, std::move(counts));
}

} // namespace pid
