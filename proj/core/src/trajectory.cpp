#include "cohex/trajectory.hpp"

namespace cohex {

PopulationDistribution populations_of(const AmplitudeTrajectory& trajectory) {
    PopulationDistribution dist;
    dist.times = trajectory.times;
    dist.pops.reserve(trajectory.amps.size());
    for (const auto& row : trajectory.amps) {
        std::vector<double> pops(row.size());
        for (size_t n = 0; n < row.size(); ++n) {
            pops[n] = std::norm(row[n]);
        }
        dist.pops.push_back(std::move(pops));
    }
    return dist;
}

} // namespace cohex
