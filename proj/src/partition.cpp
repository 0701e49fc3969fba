#include "cognate/partition.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cognate {

DomainLexicon default_lexicon() {
    return DomainLexicon{
        {"transport",
         {"vehicle", "road", "traffic", "transit", "bus", "rail", "route", "speed",
          "passenger", "transport", "journey", "operator"}},
        {"accidents",
         {"accident", "casualty", "severity", "collision", "injury", "crash",
          "junction", "police", "hazard"}},
        {"labor",
         {"employment", "unemployment", "wage", "salary", "labour", "labor",
          "occupation", "workforce", "sector", "earnings"}},
        {"food",
         {"food", "nutrition", "diet", "calorie", "ingredient", "meal", "recipe",
          "produce"}},
        {"sports",
         {"sport", "team", "player", "score", "league", "season", "stadium",
          "athlete"}},
    };
}

DomainLexicon parse_lexicon(const std::string& text) {
    DomainLexicon lexicon;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<std::string> tokens = normalize_text(line);
        if (tokens.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) {
            throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                                     ": expected \"domain: keywords...\"");
        }
        std::vector<std::string> domain_tokens = normalize_text(line.substr(0, colon));
        if (domain_tokens.size() != 1) {
            throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                                     ": domain must be a single token");
        }
        std::vector<std::string> keywords = normalize_text(line.substr(colon + 1));
        lexicon[domain_tokens[0]].insert(keywords.begin(), keywords.end());
    }
    return lexicon;
}

DomainLexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    DomainLexicon lexicon = parse_lexicon(buffer.str());
    if (lexicon.empty()) throw std::runtime_error("lexicon has no entries: " + path);
    return lexicon;
}

std::set<std::string> infer_domain_tags(const MetadataRecord& record,
                                        const DomainLexicon& lexicon) {
    if (lexicon.empty()) throw std::invalid_argument("lexicon must be nonempty");
    if (!record.domain_tags.empty()) return record.domain_tags;

    std::set<std::string> tokens;
    for (const auto& column : record.columns) {
        tokens.insert(column.norm_tokens.begin(), column.norm_tokens.end());
    }
    auto descriptions = record.kinds.find(MetadataKind::descriptive);
    if (descriptions != record.kinds.end()) {
        for (const auto& text : descriptions->second) {
            std::vector<std::string> words = normalize_text(text);
            tokens.insert(words.begin(), words.end());
        }
    }

    std::set<std::string> tags;
    for (const auto& [domain, keywords] : lexicon) {
        for (const auto& keyword : keywords) {
            if (tokens.count(keyword)) {
                tags.insert(domain);
                break;
            }
        }
    }
    if (tags.empty()) tags.insert("unclassified");
    return tags;
}

std::vector<SearchSpace> divide(const std::set<std::string>& node_ids,
                                const std::map<std::string, std::set<std::string>>& node_tags) {
    std::map<std::string, std::set<std::string>> by_primary;
    for (const auto& node : node_ids) {
        auto tags = node_tags.find(node);
        if (tags == node_tags.end() || tags->second.empty()) {
            throw std::invalid_argument("node has no domain tags: " + node);
        }
        by_primary[*tags->second.begin()].insert(node);
    }
    std::vector<SearchSpace> spaces;
    spaces.reserve(by_primary.size());
    for (auto& [tag, members] : by_primary) {
        spaces.push_back(SearchSpace{tag, std::move(members), tag});
    }
    return spaces;
}

std::vector<BulkingId> assign_bulking_ids(
    const std::vector<SearchSpace>& spaces,
    const std::map<std::string, std::string>& node_dataset) {
    // Per dataset, count its nodes in each space.
    std::map<std::string, std::map<std::string, std::size_t>> counts;
    for (const auto& space : spaces) {
        for (const auto& node : space.members) {
            auto dataset = node_dataset.find(node);
            if (dataset == node_dataset.end()) continue;
            ++counts[dataset->second][space.id];
        }
    }

    std::map<std::string, std::set<std::string>> datasets_by_space;
    for (const auto& [dataset, per_space] : counts) {
        // Ascending space-id iteration, so a tie keeps the smaller id.
        std::string chosen;
        std::size_t best = 0;
        for (const auto& [space_id, count] : per_space) {
            if (count > best) {
                best = count;
                chosen = space_id;
            }
        }
        datasets_by_space[chosen].insert(dataset);
    }

    std::vector<BulkingId> bulking;
    std::size_t ordinal = 0;
    for (const auto& space : spaces) {
        auto datasets = datasets_by_space.find(space.id);
        if (datasets == datasets_by_space.end()) continue;
        ++ordinal;
        bulking.push_back(BulkingId{space.domain_label + "-" + std::to_string(ordinal),
                                    datasets->second});
    }
    return bulking;
}

} // namespace cognate
