#pragma once

#include <vector>

namespace emot {

// Per-point labels: cluster ids are contiguous from 0 in order of the
// first core point encountered in input order; kNoise marks outliers.
struct ClusterLabeling {
    static constexpr int kNoise = -1;

    std::vector<int> labels;

    int cluster_count() const;
    bool is_noise(size_t i) const { return labels[i] == kNoise; }
};

// Density clustering under cosine distance. A point is core iff its
// eps-neighborhood (self inclusive, distance <= eps) holds at least
// min_pts points. Border points reachable from several clusters join
// the cluster discovered first in scan order.
// Throws BadParams for eps <= 0 or min_pts < 1.
ClusterLabeling dbscan(const std::vector<std::vector<double>>& points, double eps, int min_pts);

}  // namespace emot
