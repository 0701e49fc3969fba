#include "cognate/report.hpp"

#include "cognate/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cognate {

using nlohmann::json;

nlohmann::json manifest_to_json(const Catalog& catalog) {
    json datasets = json::array();
    for (const auto& record : catalog.records()) {
        json columns = json::array();
        for (const auto& column : record.columns) {
            columns.push_back({{"name", column.name},
                               {"type", value_type_name(column.inferred_type)},
                               {"null_fraction", column.null_fraction},
                               {"tokens", column.norm_tokens}});
        }
        json kinds = json::object();
        for (const auto& [kind, entries] : record.kinds) {
            kinds[metadata_kind_name(kind)] = entries;
        }
        datasets.push_back({{"id", record.dataset.id},
                            {"path", record.dataset.path},
                            {"row_count", record.dataset.row_count},
                            {"column_count", record.columns.size()},
                            {"columns", columns},
                            {"kinds", kinds},
                            {"domain_tags", record.domain_tags}});
    }
    return json{{"datasets", datasets}};
}

nlohmann::json triples_to_json(const std::vector<SimilarityTriple>& triples) {
    json doc = json::array();
    for (const auto& triple : triples) {
        doc.push_back({{"source", triple.source_column},
                       {"target", triple.target_column},
                       {"percent", triple.percent}});
    }
    return doc;
}

nlohmann::json evidence_to_json(const ConnectionEvidence& evidence) {
    return json{{"dataset_a", evidence.dataset_a},
                {"dataset_b", evidence.dataset_b},
                {"max_percent", evidence.max_percent},
                {"strong_pairs", evidence.strong_pairs},
                {"connected", evidence.connected}};
}

nlohmann::json evidence_list_to_json(const std::vector<ConnectionEvidence>& evidence) {
    json doc = json::array();
    for (const auto& item : evidence) doc.push_back(evidence_to_json(item));
    return doc;
}

nlohmann::json spaces_to_json(const std::vector<SearchSpace>& spaces) {
    json doc = json::array();
    for (const auto& space : spaces) {
        doc.push_back({{"id", space.id},
                       {"domain_label", space.domain_label},
                       {"members", space.members}});
    }
    return doc;
}

nlohmann::json bulking_to_json(const std::vector<BulkingId>& bulking) {
    json doc = json::array();
    for (const auto& bulk : bulking) {
        doc.push_back({{"value", bulk.value}, {"dataset_ids", bulk.dataset_ids}});
    }
    return doc;
}

nlohmann::json collections_to_json(const std::vector<MetaCollection>& collections) {
    json doc = json::array();
    for (const auto& collection : collections) {
        doc.push_back({{"id", collection.id},
                       {"space_id", collection.space_id},
                       {"members", collection.member_ids}});
    }
    return doc;
}

nlohmann::json centers_to_json(const std::vector<MetaCenter>& centers) {
    json doc = json::array();
    for (const auto& center : centers) {
        doc.push_back({{"collection_id", center.collection_id},
                       {"node_id", center.node_id},
                       {"cost", center.cost},
                       {"method", center.method()}});
    }
    return doc;
}

nlohmann::json channels_to_json(const std::vector<DomainChannel>& channels) {
    json doc = json::array();
    for (const auto& channel : channels) {
        doc.push_back({{"domain_label", channel.domain_label},
                       {"center_ids", channel.center_ids}});
    }
    return doc;
}

nlohmann::json cycle_log_to_json(const SearchCycleLog& log) {
    json entries = json::array();
    for (const auto& entry : log.entries) {
        json visits = json::array();
        for (const auto& visit : entry.visits) {
            visits.push_back({{"pointer_id", visit.pointer_id},
                              {"visited_node_id", visit.visited_node_id},
                              {"action", visit_action_name(visit.action)},
                              {"score", visit.score},
                              {"sequence_no", visit.sequence_no}});
        }
        entries.push_back({{"cycle_no", entry.cycle_no},
                           {"source_space_id", entry.source_space_id},
                           {"target_space_id", entry.target_space_id},
                           {"visits", visits}});
    }
    return json{{"entries", entries}};
}

std::vector<SimilarityTriple> triples_from_json(const nlohmann::json& doc) {
    std::vector<SimilarityTriple> triples;
    for (const auto& item : doc) {
        triples.push_back(SimilarityTriple{item.at("source").get<std::string>(),
                                           item.at("target").get<std::string>(),
                                           item.at("percent").get<int>()});
    }
    return triples;
}

ConnectionEvidence evidence_from_json(const nlohmann::json& doc) {
    ConnectionEvidence evidence;
    evidence.dataset_a = doc.at("dataset_a").get<std::string>();
    evidence.dataset_b = doc.at("dataset_b").get<std::string>();
    evidence.max_percent = doc.at("max_percent").get<int>();
    evidence.strong_pairs = doc.at("strong_pairs").get<std::size_t>();
    evidence.connected = doc.at("connected").get<bool>();
    return evidence;
}

std::vector<ConnectionEvidence> evidence_list_from_json(const nlohmann::json& doc) {
    std::vector<ConnectionEvidence> evidence;
    for (const auto& item : doc) evidence.push_back(evidence_from_json(item));
    return evidence;
}

std::vector<SearchSpace> spaces_from_json(const nlohmann::json& doc) {
    std::vector<SearchSpace> spaces;
    for (const auto& item : doc) {
        SearchSpace space;
        space.id = item.at("id").get<std::string>();
        space.domain_label = item.at("domain_label").get<std::string>();
        space.members = item.at("members").get<std::set<std::string>>();
        spaces.push_back(std::move(space));
    }
    return spaces;
}

std::vector<BulkingId> bulking_from_json(const nlohmann::json& doc) {
    std::vector<BulkingId> bulking;
    for (const auto& item : doc) {
        bulking.push_back(BulkingId{item.at("value").get<std::string>(),
                                    item.at("dataset_ids").get<std::set<std::string>>()});
    }
    return bulking;
}

std::vector<MetaCollection> collections_from_json(const nlohmann::json& doc) {
    std::vector<MetaCollection> collections;
    for (const auto& item : doc) {
        MetaCollection collection;
        collection.id = item.at("id").get<std::string>();
        collection.space_id = item.at("space_id").get<std::string>();
        collection.member_ids = item.at("members").get<std::set<std::string>>();
        collections.push_back(std::move(collection));
    }
    return collections;
}

std::vector<MetaCenter> centers_from_json(const nlohmann::json& doc) {
    std::vector<MetaCenter> centers;
    for (const auto& item : doc) {
        MetaCenter center;
        center.collection_id = item.at("collection_id").get<std::string>();
        center.node_id = item.at("node_id").get<std::string>();
        center.cost = item.at("cost").get<double>();
        center.annealed = item.at("method").get<std::string>() == "annealed";
        centers.push_back(std::move(center));
    }
    return centers;
}

std::vector<DomainChannel> channels_from_json(const nlohmann::json& doc) {
    std::vector<DomainChannel> channels;
    for (const auto& item : doc) {
        channels.push_back(
            DomainChannel{item.at("domain_label").get<std::string>(),
                          item.at("center_ids").get<std::vector<std::string>>()});
    }
    return channels;
}

SearchCycleLog cycle_log_from_json(const nlohmann::json& doc) {
    SearchCycleLog log;
    for (const auto& item : doc.at("entries")) {
        CycleEntry entry;
        entry.cycle_no = item.at("cycle_no").get<int>();
        entry.source_space_id = item.at("source_space_id").get<std::string>();
        entry.target_space_id = item.at("target_space_id").get<std::string>();
        for (const auto& v : item.at("visits")) {
            VisitRecord visit;
            visit.pointer_id = v.at("pointer_id").get<std::string>();
            visit.visited_node_id = v.at("visited_node_id").get<std::string>();
            visit.action = v.at("action").get<std::string>() == "bind" ? VisitAction::bind
                                                                       : VisitAction::tag;
            visit.score = v.at("score").get<int>();
            visit.sequence_no = v.at("sequence_no").get<int>();
            entry.visits.push_back(std::move(visit));
        }
        log.entries.push_back(std::move(entry));
    }
    return log;
}

VisitGraph graph_from_json(const nlohmann::json& doc) {
    VisitGraph graph;
    for (const auto& vertex : doc.at("vertices")) {
        graph.vertices.insert(vertex.get<std::string>());
    }
    for (const auto& edge : doc.at("edges")) {
        graph.edges.push_back(VisitEdge{edge.at("from").get<std::string>(),
                                        edge.at("to").get<std::string>(),
                                        edge.at("pointer_id").get<std::string>()});
    }
    return graph;
}

std::string triples_to_csv(const std::vector<SimilarityTriple>& triples, char separator) {
    std::ostringstream out;
    out << "source" << separator << "target" << separator << "percent\n";
    for (const auto& triple : triples) {
        out << csv_escape(triple.source_column, separator) << separator
            << csv_escape(triple.target_column, separator) << separator << triple.percent
            << '\n';
    }
    return out.str();
}

std::string evidence_list_to_csv(const std::vector<ConnectionEvidence>& evidence,
                                 char separator) {
    std::ostringstream out;
    out << "dataset_a" << separator << "dataset_b" << separator << "max_percent" << separator
        << "strong_pairs" << separator << "connected\n";
    for (const auto& item : evidence) {
        out << csv_escape(item.dataset_a, separator) << separator
            << csv_escape(item.dataset_b, separator) << separator << item.max_percent
            << separator << item.strong_pairs << separator
            << (item.connected ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string match_matrix_csv(const MetadataRecord& a, const MetadataRecord& b,
                             const std::vector<SimilarityTriple>& triples, char separator) {
    if (triples.size() != a.columns.size() * b.columns.size()) {
        throw std::invalid_argument("triple count does not match the column cross product");
    }
    std::ostringstream out;
    for (const auto& column : b.columns) {
        out << separator << csv_escape(qualified_name(column), separator);
    }
    out << '\n';
    for (std::size_t i = 0; i < a.columns.size(); ++i) {
        out << csv_escape(qualified_name(a.columns[i]), separator);
        for (std::size_t j = 0; j < b.columns.size(); ++j) {
            out << separator << triples[i * b.columns.size() + j].percent;
        }
        out << '\n';
    }
    return out.str();
}

std::string matrix_to_csv(const SimilarityMatrix& matrix, char separator) {
    std::ostringstream out;
    write_matrix_csv(out, matrix, separator);
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace cognate
