#ifndef COGNATE_CATALOG_HPP
#define COGNATE_CATALOG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cognate {

struct DatasetRef {
    std::string id;
    std::string path;
    std::size_t row_count = 0;
};

enum class ValueType { text, integer, decimal, date, boolean, unknown };

std::string value_type_name(ValueType t);

struct ColumnDescriptor {
    std::string dataset_id;
    std::string name;
    std::vector<std::string> norm_tokens;
    ValueType inferred_type = ValueType::unknown;
    double null_fraction = 0.0;
};

enum class MetadataKind { administrative, structural, descriptive };

std::string metadata_kind_name(MetadataKind k);

struct MetadataRecord {
    DatasetRef dataset;
    std::vector<ColumnDescriptor> columns;
    std::map<MetadataKind, std::vector<std::string>> kinds;
    std::set<std::string> domain_tags;
};

/// Lowercase, split on every non-alphanumeric character, drop empty fragments.
std::vector<std::string> normalize_text(std::string_view raw);

/// Tokens joined by single spaces, the string form the trigram/edit features use.
std::string join_tokens(const std::vector<std::string>& tokens);

/// Majority type over non-null cells (tie -> unknown) and the null ratio.
std::pair<ValueType, double> profile_column(const std::vector<std::string>& values);

struct LoadOptions {
    char separator = ',';
    bool strip_stopwords = false;
};

/// Load a delimited text file with a header row into a MetadataRecord.
/// A sidecar document (explicit path, or "<stem>.meta.json" next to the file
/// when none is given) contributes domain_tags, description and
/// administrative entries.
MetadataRecord load_dataset(const std::string& path, const std::string& id,
                            const std::optional<std::string>& sidecar = std::nullopt,
                            const LoadOptions& options = {});

class Catalog {
public:
    void add(MetadataRecord record);
    const MetadataRecord* find(const std::string& id) const;
    const std::vector<MetadataRecord>& records() const { return records_; }
    bool empty() const { return records_.empty(); }
    std::size_t size() const { return records_.size(); }

private:
    std::vector<MetadataRecord> records_;
};

} // namespace cognate

#endif
