#ifndef COGNATE_GROUPING_HPP
#define COGNATE_GROUPING_HPP

#include "cognate/catalog.hpp"
#include "cognate/mapper.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cognate {

struct MetaNode {
    enum class Kind { column, text };

    std::string id;
    TextProfile payload;
    Kind kind = Kind::column;
};

/// Symmetric percent matrix over an ordered node-id list, diagonal 100.
class SimilarityMatrix {
public:
    SimilarityMatrix() = default;
    explicit SimilarityMatrix(std::vector<std::string> node_ids);

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& node_ids() const { return ids_; }
    std::optional<std::size_t> index_of(const std::string& id) const;

    int at(std::size_t i, std::size_t j) const;
    int at(const std::string& a, const std::string& b) const;
    void set(std::size_t i, std::size_t j, int percent);

private:
    std::vector<std::string> ids_;
    std::map<std::string, std::size_t> index_;
    std::vector<int> cells_;
};

struct MetaCollection {
    std::string id;
    std::set<std::string> member_ids;
    std::string space_id;

    bool operator==(const MetaCollection&) const = default;
};

/// One column node per column ("datasetId.column"); when requested, one text
/// node per record with a description ("datasetId.desc").
std::vector<MetaNode> collect_nodes(const Catalog& catalog, bool include_text_nodes = true);

/// Score every unordered node pair through the regression similarity.
SimilarityMatrix build_similarity_matrix(const std::vector<MetaNode>& nodes,
                                         const RegressionWeights& w);

/// Connected components of the graph with an edge wherever cell >= tau.
/// Collection ids are canonical: sorted by smallest member, numbered X1..Xn.
std::vector<MetaCollection> threshold_cluster(const SimilarityMatrix& matrix, int tau,
                                              const std::string& space_id = "");

/// Incrementally add one node: it merges every collection holding a member
/// scoring >= tau, otherwise starts a singleton. Scores absent from the row
/// count as 0. The result matches threshold_cluster over the full matrix for
/// any arrival order.
std::vector<MetaCollection> stream_insert(const std::vector<MetaCollection>& collections,
                                          const MetaNode& node,
                                          const std::map<std::string, int>& scores,
                                          int tau, const std::string& space_id = "");

/// Delimited-text matrix report with node ids on both axes.
void write_matrix_csv(std::ostream& out, const SimilarityMatrix& matrix,
                      char separator = ',');

} // namespace cognate

#endif
