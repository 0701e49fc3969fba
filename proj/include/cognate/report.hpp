#ifndef COGNATE_REPORT_HPP
#define COGNATE_REPORT_HPP

#include "cognate/catalog.hpp"
#include "cognate/centers.hpp"
#include "cognate/grouping.hpp"
#include "cognate/mapper.hpp"
#include "cognate/partition.hpp"
#include "cognate/pooling.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cognate {

// Structured report payloads. Field names are part of the output contract.
nlohmann::json manifest_to_json(const Catalog& catalog);
nlohmann::json triples_to_json(const std::vector<SimilarityTriple>& triples);
nlohmann::json evidence_to_json(const ConnectionEvidence& evidence);
nlohmann::json evidence_list_to_json(const std::vector<ConnectionEvidence>& evidence);
nlohmann::json spaces_to_json(const std::vector<SearchSpace>& spaces);
nlohmann::json bulking_to_json(const std::vector<BulkingId>& bulking);
nlohmann::json collections_to_json(const std::vector<MetaCollection>& collections);
nlohmann::json centers_to_json(const std::vector<MetaCenter>& centers);
nlohmann::json channels_to_json(const std::vector<DomainChannel>& channels);
nlohmann::json cycle_log_to_json(const SearchCycleLog& log);

// Parsers for the structured outputs that downstream tools consume.
std::vector<SimilarityTriple> triples_from_json(const nlohmann::json& doc);
ConnectionEvidence evidence_from_json(const nlohmann::json& doc);
std::vector<ConnectionEvidence> evidence_list_from_json(const nlohmann::json& doc);
std::vector<SearchSpace> spaces_from_json(const nlohmann::json& doc);
std::vector<BulkingId> bulking_from_json(const nlohmann::json& doc);
std::vector<MetaCollection> collections_from_json(const nlohmann::json& doc);
std::vector<MetaCenter> centers_from_json(const nlohmann::json& doc);
std::vector<DomainChannel> channels_from_json(const nlohmann::json& doc);
SearchCycleLog cycle_log_from_json(const nlohmann::json& doc);
VisitGraph graph_from_json(const nlohmann::json& doc);

// CSV flavors of the tabular reports.
std::string triples_to_csv(const std::vector<SimilarityTriple>& triples, char separator = ',');
std::string evidence_list_to_csv(const std::vector<ConnectionEvidence>& evidence,
                                 char separator = ',');

/// Match-report matrix: rows are the left dataset's columns, columns the
/// right's. Triples must be in pair order (left-major).
std::string match_matrix_csv(const MetadataRecord& a, const MetadataRecord& b,
                             const std::vector<SimilarityTriple>& triples,
                             char separator = ',');

std::string matrix_to_csv(const SimilarityMatrix& matrix, char separator = ',');

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace cognate

#endif
