#include "cognate/grouping.hpp"

#include "cognate/csv.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cognate {

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> node_ids)
    : ids_(std::move(node_ids)), cells_(ids_.size() * ids_.size(), 0) {
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (!index_.emplace(ids_[i], i).second) {
            throw std::invalid_argument("duplicate node id in matrix: " + ids_[i]);
        }
        cells_[i * ids_.size() + i] = 100;
    }
}

std::optional<std::size_t> SimilarityMatrix::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int SimilarityMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= ids_.size() || j >= ids_.size()) {
        throw std::out_of_range("matrix index out of range");
    }
    return cells_[i * ids_.size() + j];
}

int SimilarityMatrix::at(const std::string& a, const std::string& b) const {
    auto i = index_of(a);
    auto j = index_of(b);
    if (!i || !j) throw std::out_of_range("node id not in matrix: " + (!i ? a : b));
    return at(*i, *j);
}

void SimilarityMatrix::set(std::size_t i, std::size_t j, int percent) {
    if (i >= ids_.size() || j >= ids_.size()) {
        throw std::out_of_range("matrix index out of range");
    }
    if (percent < 0 || percent > 100) {
        throw std::invalid_argument("percent outside 0..100");
    }
    cells_[i * ids_.size() + j] = percent;
    cells_[j * ids_.size() + i] = percent;
}

std::vector<MetaNode> collect_nodes(const Catalog& catalog, bool include_text_nodes) {
    std::vector<MetaNode> nodes;
    for (const auto& record : catalog.records()) {
        for (const auto& column : record.columns) {
            MetaNode node;
            node.id = qualified_name(column);
            node.payload = TextProfile::from_tokens(column.norm_tokens);
            node.kind = MetaNode::Kind::column;
            nodes.push_back(std::move(node));
        }
        if (!include_text_nodes) continue;
        auto descriptions = record.kinds.find(MetadataKind::descriptive);
        if (descriptions == record.kinds.end() || descriptions->second.empty()) continue;
        std::string combined;
        for (const auto& text : descriptions->second) {
            if (!combined.empty()) combined.push_back(' ');
            combined += text;
        }
        MetaNode node;
        node.id = record.dataset.id + ".desc";
        node.payload = TextProfile::from_raw(combined);
        node.kind = MetaNode::Kind::text;
        nodes.push_back(std::move(node));
    }
    return nodes;
}

SimilarityMatrix build_similarity_matrix(const std::vector<MetaNode>& nodes,
                                         const RegressionWeights& w) {
    if (nodes.empty()) throw std::invalid_argument("cannot build matrix over zero nodes");
    w.validate();

    std::vector<std::string> ids;
    ids.reserve(nodes.size());
    for (const auto& node : nodes) ids.push_back(node.id);

    SimilarityMatrix matrix(std::move(ids));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            matrix.set(i, j, score_profiles(nodes[i].payload, nodes[j].payload, w));
        }
    }
    return matrix;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Canonical ids: collections ordered by smallest member, numbered X1..Xn.
std::vector<MetaCollection> label_collections(std::vector<std::set<std::string>> groups,
                                              const std::string& space_id) {
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
    std::vector<MetaCollection> collections;
    collections.reserve(groups.size());
    for (std::size_t k = 0; k < groups.size(); ++k) {
        std::string id = "X" + std::to_string(k + 1);
        if (!space_id.empty()) id = space_id + "." + id;
        collections.push_back(MetaCollection{id, std::move(groups[k]), space_id});
    }
    return collections;
}

} // namespace

std::vector<MetaCollection> threshold_cluster(const SimilarityMatrix& matrix, int tau,
                                              const std::string& space_id) {
    const std::size_t n = matrix.size();
    UnionFind components(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (matrix.at(i, j) >= tau) components.unite(i, j);
        }
    }
    std::map<std::size_t, std::set<std::string>> by_root;
    for (std::size_t i = 0; i < n; ++i) {
        by_root[components.find(i)].insert(matrix.node_ids()[i]);
    }
    std::vector<std::set<std::string>> groups;
    groups.reserve(by_root.size());
    for (auto& [root, members] : by_root) groups.push_back(std::move(members));
    return label_collections(std::move(groups), space_id);
}

std::vector<MetaCollection> stream_insert(const std::vector<MetaCollection>& collections,
                                          const MetaNode& node,
                                          const std::map<std::string, int>& scores,
                                          int tau, const std::string& space_id) {
    std::vector<std::set<std::string>> groups;
    std::set<std::string> merged{node.id};
    for (const auto& collection : collections) {
        if (collection.member_ids.count(node.id)) {
            throw std::invalid_argument("node already clustered: " + node.id);
        }
        bool attach = false;
        for (const auto& member : collection.member_ids) {
            auto score = scores.find(member);
            if (score != scores.end() && score->second >= tau) {
                attach = true;
                break;
            }
        }
        if (attach) {
            merged.insert(collection.member_ids.begin(), collection.member_ids.end());
        } else {
            groups.push_back(collection.member_ids);
        }
    }
    groups.push_back(std::move(merged));
    return label_collections(std::move(groups), space_id);
}

void write_matrix_csv(std::ostream& out, const SimilarityMatrix& matrix, char separator) {
    const auto& ids = matrix.node_ids();
    for (const auto& id : ids) {
        out << separator << csv_escape(id, separator);
    }
    out << '\n';
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out << csv_escape(ids[i], separator);
        for (std::size_t j = 0; j < ids.size(); ++j) {
            out << separator << matrix.at(i, j);
        }
        out << '\n';
    }
}

} // namespace cognate
