#pragma once

#include <string>
#include <vector>

#include "pid/dist.hpp"

namespace pid {

struct SampleRow {
    std::string x, y, z;
};

/// Raw observation list. Labels are checked against the declared alphabets
/// when the table is turned into a distribution.
struct SampleTable {
    std::vector<SampleRow> rows;
};

/// Dirichlet-smoothed empirical estimate:
///   Pr(x,y,z) = (count(x,y,z) + alpha) / (N + alpha * |X||Y||Z|).
/// alpha = 0 gives exact relative frequencies. Throws EmptyInput when there
/// are no rows and no prior mass, UnknownLabel for rows outside the alphabets.
JointDist3 estimate_from_samples(const SampleTable& t, const Alphabet& ax, const Alphabet& ay,
                                 const Alphabet& az, double smoothing_alpha);

} // namespace pid
