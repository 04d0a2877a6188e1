#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "emot/text.hpp"
#include "emot/trust.hpp"

namespace emot {

enum class HierarchyLevel { Micro = 0, Meso = 1, Macro = 2, Meta = 3 };

const char* level_name(HierarchyLevel level);

enum class StateKind { Active, PartiallyActive, Dormant, Pruned };

const char* state_name(StateKind kind);

// Node lifecycle state. weight is only meaningful for PartiallyActive,
// where it must lie strictly inside (0, 1).
struct NodeState {
    StateKind kind = StateKind::Active;
    double weight = 1.0;

    static NodeState active() { return {StateKind::Active, 1.0}; }
    static NodeState partially_active(double weight);
    static NodeState dormant() { return {StateKind::Dormant, 0.0}; }
    static NodeState pruned() { return {StateKind::Pruned, 0.0}; }

    bool processing() const {
        return kind == StateKind::Active || kind == StateKind::PartiallyActive;
    }
};

// Sparse relevance snapshot captured when a node goes dormant.
struct RelevanceProfile {
    SparseVec term_weights;            // unit-norm tf-idf of the node's content
    std::set<int> phase_affinity;      // phases (as ints) the node is expected to matter in
    std::string created_context_digest;
    int dormant_since = 0;

    bool empty() const { return term_weights.empty() && phase_affinity.empty(); }
};

struct ReasoningNode {
    int id = -1;
    HierarchyLevel level = HierarchyLevel::Micro;
    NodeState state = NodeState::active();
    std::string role_tag;
    std::optional<TrustScore> trust;
    RelevanceProfile relevance_profile;
    int created_iteration = 0;
};

struct Insight {
    int id = -1;
    std::string text;
    int source_node = -1;
    int iteration = 0;
    TrustScore trust;
    double weight = 1.0;  // 1.0 for active nodes, the partial weight otherwise
    int utilisation_count = 0;
    bool contradicted = false;

    double effective_trust() const { return weight * trust.composite; }
};

enum class EdgeKind { Upward, Downward, Lateral };

const char* edge_kind_name(EdgeKind kind);

struct Edge {
    int from = -1;
    int to = -1;
    EdgeKind kind = EdgeKind::Lateral;

    auto operator<=>(const Edge&) const = default;
};

class Topology {
public:
    // Appends a node with the next ordinal id and returns it.
    int add_node(HierarchyLevel level, std::string role_tag);

    const ReasoningNode& node(int id) const;
    ReasoningNode& node(int id);
    bool has_node(int id) const;

    const std::vector<ReasoningNode>& nodes() const { return nodes_; }
    std::vector<ReasoningNode>& nodes() { return nodes_; }
    const std::set<Edge>& edges() const { return edges_; }

    // Applies a state transition; Pruned is terminal and any attempt to
    // leave it throws LevelViolation-free BadParams.
    void set_state(int id, NodeState next);

    std::vector<int> node_ids_at_level(HierarchyLevel level) const;

private:
    std::vector<ReasoningNode> nodes_;
    std::set<Edge> edges_;

    friend void connect(Topology& t, int from_id, int to_id, EdgeKind kind);
};

// Adds an edge after checking both ids and the level-adjacency rule
// (Upward: L -> L+1, Downward: L -> L-1, Lateral: equal levels, no
// self-edges). Duplicate edges are ignored.
void connect(Topology& t, int from_id, int to_id, EdgeKind kind);

// Ids of non-pruned neighbors reachable over edges of the given kind,
// ascending. Throws UnknownNode.
std::vector<int> neighbors(const Topology& t, int id, EdgeKind kind);

// The 13-node default network: 6 Micro, 4 Meso, 2 Macro, 1 Meta.
// Adjacent levels are fully connected (Upward plus matching Downward)
// and each multi-node level carries a lateral ring, both directions.
Topology build_default_topology();

}  // namespace emot
