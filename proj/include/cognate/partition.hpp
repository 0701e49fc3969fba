#ifndef COGNATE_PARTITION_HPP
#define COGNATE_PARTITION_HPP

#include "cognate/catalog.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace cognate {

struct SearchSpace {
    std::string id;
    std::set<std::string> members;
    std::string domain_label;

    bool operator==(const SearchSpace&) const = default;
};

struct BulkingId {
    std::string value;
    std::set<std::string> dataset_ids;

    bool operator==(const BulkingId&) const = default;
};

/// Domain label -> keyword set. Lookup order is the map's lexicographic order.
using DomainLexicon = std::map<std::string, std::set<std::string>>;

/// Built-in lexicon matching the bundled domains.lex file.
DomainLexicon default_lexicon();

/// Parse "domain: kw1 kw2 ..." lines; '#' starts a comment.
DomainLexicon parse_lexicon(const std::string& text);
DomainLexicon load_lexicon(const std::string& path);

/// Sidecar tags pass through unchanged; otherwise every lexicon domain whose
/// keywords intersect the record's column and description tokens. No match:
/// {"unclassified"}.
std::set<std::string> infer_domain_tags(const MetadataRecord& record,
                                        const DomainLexicon& lexicon);

/// One SearchSpace per distinct primary tag (a node's primary tag is the
/// lexicographically smallest of its tags). Spaces are sorted by id.
std::vector<SearchSpace> divide(const std::set<std::string>& node_ids,
                                const std::map<std::string, std::set<std::string>>& node_tags);

/// A dataset joins the space holding the majority of its column nodes, ties
/// going to the lexicographically smaller space id. One BulkingId per space
/// that received a dataset.
std::vector<BulkingId> assign_bulking_ids(
    const std::vector<SearchSpace>& spaces,
    const std::map<std::string, std::string>& node_dataset);

} // namespace cognate

#endif
