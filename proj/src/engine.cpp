#include "emot/engine.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "emot/errors.hpp"
#include "emot/text.hpp"

namespace emot {

namespace {

constexpr HierarchyLevel kLevels[] = {HierarchyLevel::Micro, HierarchyLevel::Meso,
                                      HierarchyLevel::Macro, HierarchyLevel::Meta};

std::string join_ids(const std::vector<int>& ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ids[i]);
    }
    return out;
}

bool macro_or_meta_processing(const Topology& topology) {
    for (const auto& node : topology.nodes()) {
        if ((node.level == HierarchyLevel::Macro || node.level == HierarchyLevel::Meta) &&
            node.state.processing()) {
            return true;
        }
    }
    return false;
}

// Engine-side run state plus event logging.
class Engine {
public:
    Engine(const std::string& problem, const EngineConfig& config, Backend& backend)
        : problem_(problem),
          config_(config),
          backend_(backend),
          palace_(config.initial_palace ? *config.initial_palace : Palace(config.palace)) {}

    RunResult execute() {
        if (config_.iterations < 1)
            raise(ErrorCode::ConfigError, "iterations must be at least 1");
        if (problem_.empty()) raise(ErrorCode::EmptyPrompt, "problem text is empty");

        topology_ = config_.topology ? *config_.topology : build_default_topology();
        bool any_active = false;
        for (const auto& node : topology_.nodes()) any_active |= node.state.processing();
        if (!any_active) raise(ErrorCode::NoActiveNodes, "topology has no processing nodes");

        write_header();
        trace_.add(0, "run_start", "nodes=" + std::to_string(topology_.nodes().size()));

        try {
            for (int iteration = 1; iteration <= config_.iterations; ++iteration) {
                run_iteration(iteration);
            }
            finish();
        } catch (const std::exception& e) {
            trace_.set_footer_line(std::string("ABORTED ") + Trace::escape(e.what()));
            flush_trace(trace_);
            throw;
        }
        flush_trace(result_.trace);
        return std::move(result_);
    }

private:
    void flush_trace(const Trace& trace) const {
        if (!config_.trace_path) return;
        std::ofstream file(*config_.trace_path, std::ios::trunc);
        if (!file.is_open())
            raise(ErrorCode::IoError, "cannot write trace to " + *config_.trace_path);
        file << trace.to_text();
    }

    void write_header() {
        std::ostringstream cfg;
        cfg << "CONFIG iterations=" << config_.iterations
            << " dormancy=" << (config_.dormancy_enabled ? 1 : 0)
            << " memory_palace=" << (config_.memory_palace_enabled ? 1 : 0)
            << " trust_threshold=" << format_double(config_.trust_threshold, 6)
            << " qam_rounds=" << config_.qam_rounds << " seed=" << config_.seed;
        trace_.set_header_line(cfg.str());
        trace_.set_header_line(std::string("BACKEND kind=") +
                               backend_kind_name(backend_.config().kind) +
                               " model=" + backend_.config().model);
        char digest[32];
        std::snprintf(digest, sizeof(digest), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(problem_)));
        trace_.set_header_line("PROBLEM digest=" + std::string(digest) +
                               " bytes=" + std::to_string(problem_.size()));
        for (const auto& node : topology_.nodes()) {
            trace_.set_header_line("NODE id=" + std::to_string(node.id) + " level=" +
                                   level_name(node.level) + " role=" + node.role_tag);
        }
        for (const auto& edge : topology_.edges()) {
            trace_.set_header_line("EDGE " + std::to_string(edge.from) + " " +
                                   std::to_string(edge.to) + " " + edge_kind_name(edge.kind));
        }
    }

    std::string context_text() const {
        std::string ctx = problem_;
        for (const auto& meta : last_meta_texts_) {
            ctx += '\n';
            ctx += meta;
        }
        return ctx;
    }

    std::string call(const std::string& purpose, int node_id, const std::string& prompt,
                     int iteration) {
        const CachedResult result =
            cached_complete(cache_, ledger_, backend_, CompletionRequest{prompt});
        std::ostringstream payload;
        payload << "purpose=" << purpose << " node=" << node_id
                << " cache=" << (result.was_hit ? "hit" : "miss")
                << " prompt_tokens=" << result.response.prompt_tokens
                << " completion_tokens=" << result.response.completion_tokens;
        trace_.add(iteration, "backend_call", payload.str());
        return result.response.text;
    }

    void log_state(int iteration, int node_id, StateKind from, const NodeState& to,
                   const std::string& reason) {
        std::ostringstream payload;
        payload << "node=" << node_id << " from=" << state_name(from)
                << " to=" << state_name(to.kind);
        if (to.kind == StateKind::PartiallyActive)
            payload << " weight=" << format_double(to.weight, 6);
        payload << " reason=" << reason;
        trace_.add(iteration, "state", payload.str());
    }

    void apply_pool_decisions(int iteration, Phase phase) {
        std::vector<DormancyRecord> snapshot;
        snapshot.reserve(records_.size());
        for (const auto& [id, record] : records_) snapshot.push_back(record);
        const auto decisions = evaluate_dormant_pool(snapshot, context_text(), phase, iteration,
                                                     config_.dormancy);
        for (const auto& [node_id, decision] : decisions) {
            std::ostringstream payload;
            payload << "node=" << node_id
                    << " p=" << format_double(decision.probability, 6)
                    << " decision=" << reactivation_kind_name(decision.kind);
            trace_.add(iteration, "pool_decision", payload.str());

            const StateKind from = topology_.node(node_id).state.kind;
            switch (decision.kind) {
                case ReactivationKind::Stay:
                    if (from != StateKind::Dormant) {
                        topology_.set_state(node_id, NodeState::dormant());
                        log_state(iteration, node_id, from, NodeState::dormant(), "stay");
                    }
                    break;
                case ReactivationKind::Partial: {
                    const NodeState next = NodeState::partially_active(decision.probability);
                    topology_.set_state(node_id, next);
                    log_state(iteration, node_id, from, next, "partial");
                    break;
                }
                case ReactivationKind::Reactivate:
                    topology_.set_state(node_id, NodeState::active());
                    records_.erase(node_id);
                    log_state(iteration, node_id, from, NodeState::active(), "reactivate");
                    break;
            }
        }
    }

    std::string build_generation_prompt(const ReasoningNode& node, Phase phase,
                                        const HifFragments& fragments,
                                        const std::vector<std::string>& memory_lines) const {
        std::ostringstream prompt;
        prompt << "PROBLEM: " << problem_ << '\n';
        prompt << "ROLE: " << node.role_tag << '\n';
        prompt << "LEVEL: " << level_name(node.level) << '\n';
        prompt << "PHASE: " << phase_name(phase) << '\n';
        for (const auto& line : fragments.top_down) prompt << line << '\n';
        for (const auto& line : fragments.bottom_up) prompt << "EVIDENCE: " << line << '\n';
        for (const auto& line : fragments.lateral) prompt << "PEER: " << line << '\n';
        for (const auto& line : memory_lines) prompt << "MEMORY: " << line << '\n';
        prompt << "TASK: contribute one line of the form \"INSIGHT: " << node.role_tag
               << " <finding>\" for this reasoning unit.";
        return prompt.str();
    }

    void process_node(int iteration, Phase phase, ReasoningNode& node,
                      const std::vector<DistilledInsight>& lower_reps,
                      std::vector<Insight>& level_insights) {
        HifFragments fragments = hif_inputs(topology_, node.id, lower_reps, last_meta_texts_,
                                            level_insights, config_.lateral_budget);
        std::vector<std::string> memory_lines;
        if (config_.memory_palace_enabled && config_.memory_k > 0) {
            const auto hits = palace_.retrieve(problem_ + " " + node.role_tag,
                                               static_cast<size_t>(config_.memory_k), phase);
            for (const auto& [entry, score] : hits) memory_lines.push_back(entry.encoded_text);
            trace_.add(iteration, "memory_retrieve",
                       "node=" + std::to_string(node.id) + " k=" +
                           std::to_string(config_.memory_k) +
                           " returned=" + std::to_string(hits.size()));
        }

        const std::string reply = call(
            "generation", node.id,
            build_generation_prompt(node, phase, fragments, memory_lines), iteration);

        const std::string trust_prompt =
            build_trust_prompt(node.role_tag, level_name(node.level));
        const std::string trust_reply = call("trust", node.id, trust_prompt, iteration);
        TrustScore trust = parse_trust_reply(trust_reply, config_.trust_weights)
                               .value_or(fallback_trust(config_.trust_weights));
        node.trust = trust;
        trace_.add(iteration, "trust",
                   "node=" + std::to_string(node.id) +
                       " composite=" + format_double(trust.composite, 6));

        const double weight =
            node.state.kind == StateKind::PartiallyActive ? node.state.weight : 1.0;
        for (const auto& text : parse_insight_lines(reply)) {
            Insight insight;
            insight.id = next_insight_id_++;
            insight.text = text;
            insight.source_node = node.id;
            insight.iteration = iteration;
            insight.trust = trust;
            insight.weight = weight;
            trace_.add(iteration, "insight",
                       "id=" + std::to_string(insight.id) + " node=" +
                           std::to_string(node.id) + " weight=" + format_double(weight, 6) +
                           " text=" + Trace::escape(insight.text));
            node_content_[node.id] += insight.text + "\n";
            level_insights.push_back(std::move(insight));
        }
    }

    void run_iteration(int iteration) {
        const Phase phase = phase_for_iteration(iteration, config_.iterations);
        trace_.add(iteration, "phase", std::string("phase=") + phase_name(phase));

        if (config_.dormancy_enabled && !records_.empty()) {
            apply_pool_decisions(iteration, phase);
        }

        std::vector<DistilledInsight> lower_reps;
        std::vector<DistilledInsight> iteration_reps;
        for (HierarchyLevel level : kLevels) {
            std::vector<Insight> level_insights;
            for (int id : topology_.node_ids_at_level(level)) {
                ReasoningNode& node = topology_.node(id);
                if (!node.state.processing()) continue;
                process_node(iteration, phase, node, lower_reps, level_insights);
            }

            std::vector<DistilledInsight> reps;
            if (!level_insights.empty()) {
                reps = distill(std::span<Insight>(level_insights), problem_,
                               config_.distill_params);
                int contradicted = 0;
                for (const auto& in : level_insights) contradicted += in.contradicted ? 1 : 0;
                trace_.add(iteration, "distill",
                           std::string("level=") + level_name(level) +
                               " inputs=" + std::to_string(level_insights.size()) +
                               " representatives=" + std::to_string(reps.size()) +
                               " contradicted=" + std::to_string(contradicted));
            }

            if (level == HierarchyLevel::Meta && !level_insights.empty()) {
                last_meta_texts_.clear();
                for (const auto& in : level_insights) last_meta_texts_.push_back(in.text);
            }

            for (auto& in : level_insights) result_.insights.push_back(std::move(in));
            for (const auto& rep : reps) {
                iteration_reps.push_back(rep);
                if (topology_.node(rep.source_node).level >= HierarchyLevel::Macro) {
                    synthesis_pool_.push_back(rep);
                }
            }
            lower_reps = std::move(reps);
        }

        apply_dormancy_step(iteration, phase);

        if (config_.memory_palace_enabled) {
            encode_representatives(iteration, phase, iteration_reps);
        }
        for (auto& rep : iteration_reps) result_.distilled.push_back(std::move(rep));
    }

    void apply_dormancy_step(int iteration, Phase phase) {
        const Phase next_phase =
            phase_for_iteration(std::min(iteration + 1, config_.iterations), config_.iterations);
        if (config_.dormancy_enabled) {
            for (auto& node : topology_.nodes()) {
                if (!node.trust) continue;
                const bool below =
                    is_dormancy_candidate(*node.trust, config_.trust_threshold);
                if (node.state.kind == StateKind::Active && below) {
                    const DormancyRecord record = enter_dormancy(
                        topology_, node.id, node_content_[node.id], context_text(), iteration,
                        phase, next_phase, true, config_.trust_threshold);
                    records_[node.id] = record;
                    log_state(iteration, node.id, StateKind::Active, NodeState::dormant(),
                              "dormancy");
                    trace_.add(iteration, "dormancy_enter",
                               "node=" + std::to_string(node.id) + " since=" +
                                   std::to_string(iteration) + " composite=" +
                                   format_double(node.trust->composite, 6));
                } else if (node.state.kind == StateKind::PartiallyActive) {
                    auto it = records_.find(node.id);
                    if (below && it != records_.end()) {
                        // Still SDC-managed: re-anchor the record, keep the state.
                        it->second.entry_trust = *node.trust;
                        it->second.profile.term_weights =
                            normalized_term_counts(node_content_[node.id]);
                        it->second.profile.phase_affinity = {static_cast<int>(phase),
                                                             static_cast<int>(next_phase)};
                        it->second.profile.created_context_digest = context_text();
                        it->second.profile.dormant_since = iteration;
                        topology_.node(node.id).relevance_profile = it->second.profile;
                        trace_.add(iteration, "dormancy_refresh",
                                   "node=" + std::to_string(node.id) +
                                       " since=" + std::to_string(iteration));
                    } else if (!below) {
                        topology_.set_state(node.id, NodeState::active());
                        if (it != records_.end()) records_.erase(it);
                        log_state(iteration, node.id, StateKind::PartiallyActive,
                                  NodeState::active(), "promote");
                    }
                }
            }
        } else {
            std::vector<StateKind> before;
            before.reserve(topology_.nodes().size());
            for (const auto& node : topology_.nodes()) before.push_back(node.state.kind);
            const auto pruned =
                prune_low_value(topology_, config_.trust_threshold, false);
            for (int id : pruned) {
                log_state(iteration, id, before[static_cast<size_t>(id)], NodeState::pruned(),
                          "prune");
            }
            if (!pruned.empty()) {
                trace_.add(iteration, "prune", "nodes=" + join_ids(pruned));
            }
        }
    }

    void encode_representatives(int iteration, Phase phase,
                                const std::vector<DistilledInsight>& reps) {
        const EncodingStyle preferred = preferred_style_for_phase(phase);
        for (const auto& rep : reps) {
            const std::vector<EncodeInput> input = {
                {rep.insight_id, rep.text, rep.effective_trust}};
            store_entry(iteration, encode(input, EncodingStyle::TemporalLadder, iteration,
                                          config_.palace.loci_grid));
            if (preferred != EncodingStyle::TemporalLadder) {
                store_entry(iteration, encode(input, preferred, iteration,
                                              config_.palace.loci_grid));
            }
        }
    }

    void store_entry(int iteration, MemoryEntry entry) {
        const EncodingStyle style = entry.style;
        const int rep = entry.source_insights.empty() ? -1 : entry.source_insights.front();
        const int id = palace_.store(std::move(entry));
        trace_.add(iteration, "memory_store",
                   "entry=" + std::to_string(id) + " style=" + encoding_style_name(style) +
                       " rep=" + std::to_string(rep));
    }

    void finish() {
        const int footer_iteration = config_.iterations;
        SolutionDocument solution = synthesize(
            topology_, synthesis_pool_, problem_,
            [&](const std::string& prompt) {
                return call("synthesis", -1, prompt, footer_iteration);
            });
        const RunStatus status =
            solution.empty() ? RunStatus::FailureSynthesis : RunStatus::Synthesized;
        trace_.add(footer_iteration, "synthesis",
                   std::string("status=") + run_status_name(status) +
                       " contributors=" + std::to_string(solution.contributing_insights.size()));

        double internal_quality = 0.0;
        if (status == RunStatus::Synthesized) {
            const QamOutcome outcome = qam_refine(
                solution, problem_, last_meta_texts_, config_.qam_rounds,
                [&](const std::string& prompt) {
                    return call("qam_revision", -1, prompt, footer_iteration);
                },
                [&](const std::string& prompt) {
                    return call("trust", -1, prompt, footer_iteration);
                },
                config_.trust_weights);
            trace_.add(footer_iteration, "qam_assess",
                       "composite=" + format_double(outcome.initial_composite, 6));
            for (const auto& round : outcome.rounds) {
                trace_.add(footer_iteration, "qam_round",
                           "round=" + std::to_string(round.round) +
                               " composite=" + format_double(round.composite, 6) +
                               " accepted=" + (round.accepted ? std::string("1")
                                                              : std::string("0")));
            }
            solution = outcome.solution;
            internal_quality = outcome.internal_quality;
        }

        result_.solution = std::move(solution);
        result_.status = status;
        result_.internal_quality = internal_quality;
        result_.ledger = ledger_.snapshot();
        result_.ledger.estimated_cost = estimate_cost(result_.ledger, config_.cost_model);
        result_.estimated_cost = result_.ledger.estimated_cost;

        for (const auto& line : palace_.serialize()) trace_.set_footer_line(line);
        trace_.set_footer_line(
            "LEDGER llm_calls=" + std::to_string(result_.ledger.llm_calls) +
            " cache_hits=" + std::to_string(result_.ledger.cache_hits) +
            " prompt_tokens=" + std::to_string(result_.ledger.prompt_tokens) +
            " completion_tokens=" + std::to_string(result_.ledger.completion_tokens) +
            " wall_seconds=" + format_double(result_.ledger.wall_seconds, 3) +
            " cost=" + format_double(result_.estimated_cost, 6));
        trace_.set_footer_line(std::string("STATUS ") + run_status_name(result_.status));
        trace_.set_footer_line("INTERNAL_QUALITY " +
                               format_double(result_.internal_quality, 6));

        result_.trace = std::move(trace_);
        result_.topology = std::move(topology_);
        result_.palace = std::move(palace_);
    }

    const std::string& problem_;
    EngineConfig config_;
    Backend& backend_;

    Topology topology_;
    Palace palace_;
    CompletionCache cache_;
    SharedLedger ledger_;
    Trace trace_;
    RunResult result_;

    std::map<int, DormancyRecord> records_;
    std::map<int, std::string> node_content_;
    std::vector<std::string> last_meta_texts_;
    std::vector<DistilledInsight> synthesis_pool_;
    int next_insight_id_ = 0;
};

}  // namespace

const char* run_status_name(RunStatus status) {
    switch (status) {
        case RunStatus::Synthesized: return "Synthesized";
        case RunStatus::FailureSynthesis: return "FailureSynthesis";
    }
    return "?";
}

std::string render_solution_body(const std::vector<SolutionSection>& sections) {
    std::string body;
    for (const auto& section : sections) {
        if (section.text.empty()) continue;
        if (!body.empty()) body += "\n\n";
        body += "## " + section.heading + "\n" + section.text;
    }
    return body;
}

std::vector<std::string> parse_insight_lines(const std::string& reply_text) {
    std::vector<std::string> out;
    for (const auto& line : split_lines(reply_text)) {
        if (line.rfind("INSIGHT: ", 0) == 0) {
            const std::string text = trim(line.substr(9));
            if (!text.empty()) out.push_back(text);
        }
    }
    return out;
}

std::string strip_trust_lines(const std::string& reply_text) {
    std::string out;
    for (const auto& line : split_lines(reply_text)) {
        if (parse_trust_reply(line)) continue;
        if (!out.empty()) out += '\n';
        out += line;
    }
    return out;
}

HifFragments hif_inputs(const Topology& topology, int node_id,
                        const std::vector<DistilledInsight>& lower_level_reps,
                        const std::vector<std::string>& latest_meta_texts,
                        const std::vector<Insight>& iteration_level_insights,
                        int lateral_budget) {
    const ReasoningNode& node = topology.node(node_id);
    HifFragments fragments;

    const auto down = neighbors(topology, node_id, EdgeKind::Downward);
    for (const auto& rep : lower_level_reps) {
        if (std::find(down.begin(), down.end(), rep.source_node) != down.end()) {
            fragments.bottom_up.push_back(rep.text);
        }
    }

    if (node.level != HierarchyLevel::Meta) {
        for (const auto& text : latest_meta_texts) {
            fragments.top_down.push_back("CONSTRAINT: " + text);
        }
    }

    const auto lateral = neighbors(topology, node_id, EdgeKind::Lateral);
    std::vector<const Insight*> candidates;
    for (const auto& insight : iteration_level_insights) {
        if (std::find(lateral.begin(), lateral.end(), insight.source_node) != lateral.end()) {
            candidates.push_back(&insight);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Insight* a, const Insight* b) {
        if (a->effective_trust() != b->effective_trust())
            return a->effective_trust() > b->effective_trust();
        return a->id < b->id;
    });
    for (size_t i = 0; i < candidates.size() && i < static_cast<size_t>(lateral_budget); ++i) {
        fragments.lateral.push_back(candidates[i]->text);
    }
    return fragments;
}

SolutionDocument synthesize(const Topology& topology,
                            const std::vector<DistilledInsight>& macro_meta_pool,
                            const std::string& problem, const CompletionFn& complete) {
    SolutionDocument doc;
    if (!macro_or_meta_processing(topology)) return doc;  // FailureSynthesis

    std::ostringstream prompt;
    prompt << "SYNTHESIS REQUEST\nPROBLEM: " << problem << '\n';
    for (const auto& rep : macro_meta_pool) prompt << "COMPONENT: " << rep.text << '\n';
    prompt << "TASK: combine the components above into one coherent final solution.";
    const std::string narrative = strip_trust_lines(complete(prompt.str()));

    SolutionSection assessment{"Assessment", narrative, {}};
    SolutionSection components{"Components", "", {}};
    for (const auto& rep : macro_meta_pool) {
        components.text += "- (#" + std::to_string(rep.insight_id) + ") " + rep.text + "\n";
        components.insight_ids.push_back(rep.insight_id);
        doc.contributing_insights.push_back(rep.insight_id);
    }
    doc.sections = {std::move(assessment), std::move(components)};
    doc.body = render_solution_body(doc.sections);
    return doc;
}

QamOutcome qam_refine(const SolutionDocument& solution, const std::string& problem,
                      const std::vector<std::string>& meta_constraints, int rounds,
                      const CompletionFn& revise, const CompletionFn& assess,
                      const TrustWeights& weights) {
    if (rounds < 0) raise(ErrorCode::BadParams, "qam rounds must be non-negative");
    QamOutcome outcome;
    outcome.solution = solution;
    outcome.initial_composite =
        assess_with(assess, build_text_trust_prompt(solution.body), weights).composite;
    outcome.internal_quality = outcome.initial_composite;

    for (int round = 1; round <= rounds; ++round) {
        std::ostringstream prompt;
        prompt << "REFINE\nPROBLEM: " << problem << "\nCURRENT SOLUTION:\n"
               << outcome.solution.body << '\n';
        for (const auto& constraint : meta_constraints) {
            prompt << "CONSTRAINT: " << constraint << '\n';
        }
        prompt << "TASK: produce an improved revision of the solution.";
        const std::string revision = strip_trust_lines(revise(prompt.str()));

        SolutionDocument candidate = outcome.solution;
        if (!candidate.sections.empty()) {
            candidate.sections[0].text = revision;
        } else {
            candidate.sections = {{"Assessment", revision, {}}};
        }
        candidate.body = render_solution_body(candidate.sections);

        const double composite =
            assess_with(assess, build_text_trust_prompt(candidate.body), weights).composite;
        const bool accepted = composite > outcome.internal_quality;
        outcome.rounds.push_back({round, composite, accepted});
        if (!accepted) break;
        outcome.solution = std::move(candidate);
        outcome.internal_quality = composite;
    }
    return outcome;
}

RunResult run_problem(const std::string& problem, const EngineConfig& config, Backend& backend) {
    Engine engine(problem, config, backend);
    return engine.execute();
}

}  // namespace emot
