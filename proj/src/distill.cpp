#include "emot/distill.hpp"

#include <algorithm>
#include <map>

#include "emot/cluster.hpp"
#include "emot/tfidf.hpp"

namespace emot {

bool contains_negation(const std::string& text) {
    const auto toks = raw_tokens(text);
    for (size_t i = 0; i < toks.size(); ++i) {
        if (toks[i] == "not" || toks[i] == "no" || toks[i] == "never" || toks[i] == "cannot")
            return true;
        if (toks[i] == "ruled" && i + 1 < toks.size() && toks[i + 1] == "out") return true;
    }
    return false;
}

std::vector<size_t> resolve_contradictions(std::span<Insight> insights,
                                           const std::vector<std::vector<double>>& vectors,
                                           double similarity_threshold) {
    std::vector<bool> negated(insights.size());
    for (size_t i = 0; i < insights.size(); ++i) negated[i] = contains_negation(insights[i].text);

    std::vector<bool> dropped(insights.size(), false);
    for (size_t i = 0; i < insights.size(); ++i) {
        for (size_t j = i + 1; j < insights.size(); ++j) {
            if (negated[i] == negated[j]) continue;  // negation parity: no contradiction
            if (cosine_similarity(vectors[i], vectors[j]) < similarity_threshold) continue;
            // Drop the lower-trust side; on equal trust the later insight loses.
            size_t loser;
            if (insights[i].effective_trust() < insights[j].effective_trust()) {
                loser = i;
            } else if (insights[j].effective_trust() < insights[i].effective_trust()) {
                loser = j;
            } else {
                loser = insights[i].id <= insights[j].id ? j : i;
            }
            insights[loser].contradicted = true;
            dropped[loser] = true;
        }
    }

    std::vector<size_t> kept;
    for (size_t i = 0; i < insights.size(); ++i) {
        if (!dropped[i]) kept.push_back(i);
    }
    return kept;
}

std::vector<size_t> resolve_contradictions(std::span<Insight> insights,
                                           double similarity_threshold) {
    if (insights.empty()) return {};
    std::vector<std::string> corpus;
    corpus.reserve(insights.size());
    for (const auto& in : insights) corpus.push_back(in.text);
    auto [model, vectors] = tfidf_fit_transform(corpus);
    return resolve_contradictions(insights, vectors, similarity_threshold);
}

std::vector<DistilledInsight> distill(std::span<Insight> insights,
                                      const std::string& problem_context,
                                      const DistillParams& params) {
    std::vector<DistilledInsight> out;
    if (insights.empty()) return out;

    std::vector<std::string> corpus;
    corpus.reserve(insights.size());
    for (const auto& in : insights) corpus.push_back(in.text);
    auto [model, vectors] = tfidf_fit_transform(corpus);
    const std::vector<double> context_vec = model.transform(problem_context);

    const ClusterLabeling labeling = dbscan(vectors, params.eps, params.min_pts);

    // Group member indices per cluster; noise points become singleton
    // groups ordered after the clusters by scan position.
    std::vector<std::vector<size_t>> groups(static_cast<size_t>(labeling.cluster_count()));
    for (size_t i = 0; i < insights.size(); ++i) {
        if (labeling.is_noise(i)) {
            groups.push_back({i});
        } else {
            groups[static_cast<size_t>(labeling.labels[i])].push_back(i);
        }
    }

    for (const auto& group : groups) {
        // Contradiction pass within the cluster, using the corpus-wide vectors.
        std::vector<Insight*> members;
        std::vector<std::vector<double>> member_vecs;
        for (size_t idx : group) {
            members.push_back(&insights[idx]);
            member_vecs.push_back(vectors[idx]);
        }
        std::vector<Insight> snapshot;
        snapshot.reserve(members.size());
        for (auto* m : members) snapshot.push_back(*m);
        const auto kept_local =
            resolve_contradictions(std::span<Insight>(snapshot), member_vecs,
                                   params.contradiction_similarity);
        // Copy contradiction marks back to the real records.
        for (size_t li = 0; li < members.size(); ++li) {
            if (snapshot[li].contradicted) members[li]->contradicted = true;
        }
        if (kept_local.empty()) continue;

        size_t rep_local = kept_local[0];
        for (size_t li : kept_local) {
            const Insight& cand = *members[li];
            const Insight& best = *members[rep_local];
            if (cand.effective_trust() > best.effective_trust() ||
                (cand.effective_trust() == best.effective_trust() && cand.id < best.id)) {
                rep_local = li;
            }
        }

        Insight& rep = *members[rep_local];
        DistilledInsight distilled;
        distilled.insight_id = rep.id;
        distilled.text = rep.text;
        distilled.source_node = rep.source_node;
        distilled.iteration = rep.iteration;
        distilled.effective_trust = rep.effective_trust();
        distilled.relevance = cosine_similarity(context_vec, vectors[group[rep_local]]);
        for (size_t li : kept_local) {
            distilled.source_ids.push_back(members[li]->id);
            members[li]->utilisation_count += 1;
        }
        out.push_back(std::move(distilled));
    }
    return out;
}

}  // namespace emot
