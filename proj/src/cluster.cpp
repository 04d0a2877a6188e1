#include "emot/cluster.hpp"

#include <algorithm>
#include <deque>

#include "emot/errors.hpp"
#include "emot/tfidf.hpp"

namespace emot {

int ClusterLabeling::cluster_count() const {
    int max_id = -1;
    for (int l : labels) max_id = std::max(max_id, l);
    return max_id + 1;
}

ClusterLabeling dbscan(const std::vector<std::vector<double>>& points, double eps, int min_pts) {
    if (eps <= 0.0) raise(ErrorCode::BadParams, "eps must be positive");
    if (min_pts < 1) raise(ErrorCode::BadParams, "min_pts must be at least 1");

    const size_t n = points.size();
    ClusterLabeling out;
    out.labels.assign(n, ClusterLabeling::kNoise);
    if (n == 0) return out;

    std::vector<std::vector<size_t>> neighborhoods(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (cosine_distance(points[i], points[j]) <= eps) neighborhoods[i].push_back(j);
        }
    }

    std::vector<bool> visited(n, false);
    int next_cluster = 0;
    for (size_t i = 0; i < n; ++i) {
        if (visited[i]) continue;
        visited[i] = true;
        if (neighborhoods[i].size() < static_cast<size_t>(min_pts)) continue;  // noise for now

        const int cluster = next_cluster++;
        out.labels[i] = cluster;
        std::deque<size_t> seeds(neighborhoods[i].begin(), neighborhoods[i].end());
        while (!seeds.empty()) {
            const size_t q = seeds.front();
            seeds.pop_front();
            if (out.labels[q] == ClusterLabeling::kNoise) out.labels[q] = cluster;  // border
            if (visited[q]) continue;
            visited[q] = true;
            out.labels[q] = cluster;
            if (neighborhoods[q].size() >= static_cast<size_t>(min_pts)) {
                seeds.insert(seeds.end(), neighborhoods[q].begin(), neighborhoods[q].end());
            }
        }
    }
    return out;
}

}  // namespace emot
