#include "emot/hierarchy.hpp"

#include <algorithm>

#include "emot/errors.hpp"

namespace emot {

const char* level_name(HierarchyLevel level) {
    switch (level) {
        case HierarchyLevel::Micro: return "Micro";
        case HierarchyLevel::Meso: return "Meso";
        case HierarchyLevel::Macro: return "Macro";
        case HierarchyLevel::Meta: return "Meta";
    }
    return "?";
}

const char* state_name(StateKind kind) {
    switch (kind) {
        case StateKind::Active: return "Active";
        case StateKind::PartiallyActive: return "PartiallyActive";
        case StateKind::Dormant: return "Dormant";
        case StateKind::Pruned: return "Pruned";
    }
    return "?";
}

const char* edge_kind_name(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Upward: return "Upward";
        case EdgeKind::Downward: return "Downward";
        case EdgeKind::Lateral: return "Lateral";
    }
    return "?";
}

NodeState NodeState::partially_active(double weight) {
    if (!(weight > 0.0 && weight < 1.0))
        raise(ErrorCode::OutOfRange,
              "partial activation weight must lie strictly in (0,1)");
    return {StateKind::PartiallyActive, weight};
}

int Topology::add_node(HierarchyLevel level, std::string role_tag) {
    ReasoningNode node;
    node.id = static_cast<int>(nodes_.size());
    node.level = level;
    node.role_tag = std::move(role_tag);
    nodes_.push_back(std::move(node));
    return nodes_.back().id;
}

bool Topology::has_node(int id) const {
    return id >= 0 && static_cast<size_t>(id) < nodes_.size();
}

const ReasoningNode& Topology::node(int id) const {
    if (!has_node(id)) raise(ErrorCode::UnknownNode, "node " + std::to_string(id));
    return nodes_[static_cast<size_t>(id)];
}

ReasoningNode& Topology::node(int id) {
    if (!has_node(id)) raise(ErrorCode::UnknownNode, "node " + std::to_string(id));
    return nodes_[static_cast<size_t>(id)];
}

void Topology::set_state(int id, NodeState next) {
    ReasoningNode& n = node(id);
    if (n.state.kind == StateKind::Pruned && next.kind != StateKind::Pruned)
        raise(ErrorCode::BadParams,
              "node " + std::to_string(id) + " is pruned; Pruned is terminal");
    n.state = next;
}

std::vector<int> Topology::node_ids_at_level(HierarchyLevel level) const {
    std::vector<int> ids;
    for (const auto& n : nodes_) {
        if (n.level == level) ids.push_back(n.id);
    }
    return ids;
}

void connect(Topology& t, int from_id, int to_id, EdgeKind kind) {
    const ReasoningNode& from = t.node(from_id);
    const ReasoningNode& to = t.node(to_id);
    if (from_id == to_id) raise(ErrorCode::LevelViolation, "self-edges are not allowed");

    const int from_level = static_cast<int>(from.level);
    const int to_level = static_cast<int>(to.level);
    const int delta = to_level - from_level;
    const bool ok = (kind == EdgeKind::Upward && delta == 1) ||
                    (kind == EdgeKind::Downward && delta == -1) ||
                    (kind == EdgeKind::Lateral && delta == 0);
    if (!ok)
        raise(ErrorCode::LevelViolation,
              std::string(edge_kind_name(kind)) + " edge " + level_name(from.level) + "#" +
                  std::to_string(from_id) + " -> " + level_name(to.level) + "#" +
                  std::to_string(to_id));
    t.edges_.insert(Edge{from_id, to_id, kind});
}

std::vector<int> neighbors(const Topology& t, int id, EdgeKind kind) {
    if (!t.has_node(id)) raise(ErrorCode::UnknownNode, "node " + std::to_string(id));
    std::vector<int> ids;
    for (const auto& e : t.edges()) {
        if (e.from != id || e.kind != kind) continue;
        if (t.node(e.to).state.kind == StateKind::Pruned) continue;
        ids.push_back(e.to);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

Topology build_default_topology() {
    Topology t;

    const char* micro_roles[] = {"fact-extraction",  "data-point-analysis", "observation-detail",
                                 "measurement-review", "context-detail",     "anomaly-detection"};
    const char* meso_roles[] = {"pattern-correlation", "temporal-sequencing", "causal-hypothesis",
                                "cross-domain-linking"};
    const char* macro_roles[] = {"solution-integration", "strategy-formation"};

    std::vector<int> micro, meso, macro;
    for (const char* role : micro_roles) micro.push_back(t.add_node(HierarchyLevel::Micro, role));
    for (const char* role : meso_roles) meso.push_back(t.add_node(HierarchyLevel::Meso, role));
    for (const char* role : macro_roles) macro.push_back(t.add_node(HierarchyLevel::Macro, role));
    const int meta = t.add_node(HierarchyLevel::Meta, "oversight-quality");

    auto connect_levels = [&t](const std::vector<int>& lower, const std::vector<int>& upper) {
        for (int lo : lower) {
            for (int up : upper) {
                connect(t, lo, up, EdgeKind::Upward);
                connect(t, up, lo, EdgeKind::Downward);
            }
        }
    };
    connect_levels(micro, meso);
    connect_levels(meso, macro);
    connect_levels(macro, {meta});

    auto lateral_ring = [&t](const std::vector<int>& ids) {
        if (ids.size() < 2) return;
        for (size_t i = 0; i < ids.size(); ++i) {
            const int a = ids[i];
            const int b = ids[(i + 1) % ids.size()];
            connect(t, a, b, EdgeKind::Lateral);
            connect(t, b, a, EdgeKind::Lateral);
        }
    };
    lateral_ring(micro);
    lateral_ring(meso);
    lateral_ring(macro);

    return t;
}

}  // namespace emot
