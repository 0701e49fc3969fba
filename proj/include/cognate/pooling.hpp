#ifndef COGNATE_POOLING_HPP
#define COGNATE_POOLING_HPP

#include "cognate/centers.hpp"
#include "cognate/mapper.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cognate {

struct DomainChannel {
    std::string domain_label;
    std::vector<std::string> center_ids; // lexicographic

    bool operator==(const DomainChannel&) const = default;
};

struct LinearPointer {
    std::string id;
    TextProfile query_profile;
    int bind_threshold = 80;
};

enum class VisitAction { bind, tag };

std::string visit_action_name(VisitAction a);

struct VisitRecord {
    std::string pointer_id;
    std::string visited_node_id;
    VisitAction action = VisitAction::tag;
    int score = 0;
    int sequence_no = 0;

    bool operator==(const VisitRecord&) const = default;
};

struct VisitEdge {
    std::string from;
    std::string to;
    std::string pointer_id;

    bool operator==(const VisitEdge&) const = default;
};

struct VisitGraph {
    std::set<std::string> vertices;
    std::vector<VisitEdge> edges;

    bool operator==(const VisitGraph&) const = default;
};

struct CycleEntry {
    int cycle_no = 0;
    std::string source_space_id;
    std::string target_space_id;
    std::vector<VisitRecord> visits;

    bool operator==(const CycleEntry&) const = default;
};

struct SearchCycleLog {
    std::vector<CycleEntry> entries;

    bool operator==(const SearchCycleLog&) const = default;
};

enum class GraphFormat { dot, structured };

GraphFormat parse_graph_format(const std::string& name);

/// Scores a pointer's profile against a center node id.
using CenterScorer = std::function<int(const LinearPointer&, const std::string&)>;

/// One channel per distinct domain tag, centers sorted lexicographically
/// within each channel, channels sorted by label.
std::vector<DomainChannel> pool_centers(const std::vector<MetaCenter>& centers,
                                        const std::map<std::string, std::string>& node_domains);

/// Visit every center in channel order; score >= bind_threshold binds,
/// anything lower leaves a reference tag. Sequence numbers run 1..v.
std::vector<VisitRecord> traverse(const LinearPointer& pointer, const DomainChannel& channel,
                                  const CenterScorer& scorer);

/// Append one cycle entry and fold the traversal's vertices and
/// consecutive-visit edges into the graph. Prior entries are never touched.
void record_cycle(SearchCycleLog& log, VisitGraph& graph, const std::string& source_space,
                  const std::string& target_space, const std::vector<VisitRecord>& visits);

/// Deterministic export: vertices and edges sorted lexicographically.
std::string export_graph(const VisitGraph& graph, GraphFormat format);

} // namespace cognate

#endif
