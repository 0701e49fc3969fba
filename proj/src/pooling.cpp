#include "cognate/pooling.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cognate {

std::string visit_action_name(VisitAction a) {
    return a == VisitAction::bind ? "bind" : "tag";
}

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "dot") return GraphFormat::dot;
    if (name == "structured") return GraphFormat::structured;
    throw std::invalid_argument("unknown graph format: " + name);
}

std::vector<DomainChannel> pool_centers(const std::vector<MetaCenter>& centers,
                                        const std::map<std::string, std::string>& node_domains) {
    std::map<std::string, std::vector<std::string>> by_domain;
    for (const auto& center : centers) {
        auto domain = node_domains.find(center.node_id);
        if (domain == node_domains.end()) {
            throw std::invalid_argument("center node has no domain tag: " + center.node_id);
        }
        by_domain[domain->second].push_back(center.node_id);
    }
    std::vector<DomainChannel> channels;
    channels.reserve(by_domain.size());
    for (auto& [label, ids] : by_domain) {
        std::sort(ids.begin(), ids.end());
        channels.push_back(DomainChannel{label, std::move(ids)});
    }
    return channels;
}

std::vector<VisitRecord> traverse(const LinearPointer& pointer, const DomainChannel& channel,
                                  const CenterScorer& scorer) {
    if (pointer.query_profile.tokens.empty()) {
        throw std::invalid_argument("pointer " + pointer.id + " has an empty profile");
    }
    std::vector<VisitRecord> visits;
    visits.reserve(channel.center_ids.size());
    int sequence = 0;
    for (const auto& center_id : channel.center_ids) {
        int score = scorer(pointer, center_id);
        VisitRecord record;
        record.pointer_id = pointer.id;
        record.visited_node_id = center_id;
        record.score = score;
        record.action = score >= pointer.bind_threshold ? VisitAction::bind : VisitAction::tag;
        record.sequence_no = ++sequence;
        visits.push_back(std::move(record));
    }
    return visits;
}

void record_cycle(SearchCycleLog& log, VisitGraph& graph, const std::string& source_space,
                  const std::string& target_space, const std::vector<VisitRecord>& visits) {
    CycleEntry entry;
    entry.cycle_no = log.entries.empty() ? 1 : log.entries.back().cycle_no + 1;
    entry.source_space_id = source_space;
    entry.target_space_id = target_space;
    entry.visits = visits;
    log.entries.push_back(std::move(entry));

    if (visits.empty()) return;
    graph.vertices.insert(visits.front().pointer_id);
    for (const auto& visit : visits) {
        graph.vertices.insert(visit.visited_node_id);
    }
    for (std::size_t i = 0; i + 1 < visits.size(); ++i) {
        graph.edges.push_back(VisitEdge{visits[i].visited_node_id,
                                        visits[i + 1].visited_node_id,
                                        visits[i].pointer_id});
    }
}

namespace {

std::string dot_escape(const std::string& id) {
    std::string out = "\"";
    for (char c : id) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

bool edge_less(const VisitEdge& a, const VisitEdge& b) {
    return std::tie(a.from, a.to, a.pointer_id) < std::tie(b.from, b.to, b.pointer_id);
}

} // namespace

std::string export_graph(const VisitGraph& graph, GraphFormat format) {
    std::vector<VisitEdge> edges = graph.edges;
    std::sort(edges.begin(), edges.end(), edge_less);

    if (format == GraphFormat::dot) {
        std::ostringstream out;
        out << "digraph visit_graph {\n";
        for (const auto& vertex : graph.vertices) {
            out << "  " << dot_escape(vertex) << ";\n";
        }
        for (const auto& edge : edges) {
            out << "  " << dot_escape(edge.from) << " -> " << dot_escape(edge.to)
                << " [label=" << dot_escape(edge.pointer_id) << "];\n";
        }
        out << "}\n";
        return out.str();
    }

    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (const auto& vertex : graph.vertices) doc["vertices"].push_back(vertex);
    doc["edges"] = nlohmann::json::array();
    for (const auto& edge : edges) {
        doc["edges"].push_back({{"from", edge.from},
                                {"to", edge.to},
                                {"pointer_id", edge.pointer_id}});
    }
    return doc.dump(2) + "\n";
}

} // namespace cognate
