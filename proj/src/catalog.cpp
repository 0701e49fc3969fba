#include "cognate/catalog.hpp"

#include "cognate/csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cognate {

namespace {

bool is_ascii_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool parses_as_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    return all_digits(s);
}

bool parses_as_decimal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    std::size_t i = 0;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    }
    if (digits == 0) return false;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t exp_digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++exp_digits; }
        if (exp_digits == 0) return false;
    }
    return i == s.size();
}

// Accepts y-m-d and d-m-y layouts with '-' or '/' separators. Two-digit
// leading fields are read as day/month in either order.
bool parses_as_date(std::string_view s) {
    char sep = 0;
    std::array<std::string, 3> parts;
    std::size_t part = 0;
    for (char c : s) {
        if (c == '-' || c == '/') {
            if (sep == 0) sep = c;
            if (c != sep || part >= 2) return false;
            ++part;
        } else if (c >= '0' && c <= '9') {
            parts[part].push_back(c);
        } else {
            return false;
        }
    }
    if (part != 2) return false;
    for (const auto& p : parts) {
        if (p.empty() || p.size() > 4) return false;
    }
    auto to_int = [](const std::string& p) { return std::stoi(p); };
    auto plausible_day_month = [&](int a, int b) {
        return (a >= 1 && a <= 31 && b >= 1 && b <= 12) ||
               (a >= 1 && a <= 12 && b >= 1 && b <= 31);
    };
    if (parts[0].size() == 4 && parts[1].size() <= 2 && parts[2].size() <= 2) {
        int m = to_int(parts[1]), d = to_int(parts[2]);
        return m >= 1 && m <= 12 && d >= 1 && d <= 31;
    }
    if (parts[2].size() == 4 && parts[0].size() <= 2 && parts[1].size() <= 2) {
        return plausible_day_month(to_int(parts[0]), to_int(parts[1]));
    }
    return false;
}

bool parses_as_boolean(std::string_view s) {
    std::string lower;
    lower.reserve(s.size());
    for (char c : s) lower.push_back(ascii_lower(c));
    return lower == "yes" || lower == "no" || lower == "true" || lower == "false";
}

// Precedence on mixed parses: integer > decimal > date > boolean > text.
ValueType classify_cell(const std::string& cell) {
    if (parses_as_integer(cell)) return ValueType::integer;
    if (parses_as_decimal(cell)) return ValueType::decimal;
    if (parses_as_date(cell)) return ValueType::date;
    if (parses_as_boolean(cell)) return ValueType::boolean;
    return ValueType::text;
}

const std::set<std::string>& stopwords() {
    static const std::set<std::string> words = {
        "a", "an", "and", "for", "in", "of", "on", "or", "the", "to"};
    return words;
}

std::string default_sidecar_path(const std::string& path) {
    std::filesystem::path p(path);
    std::filesystem::path sidecar = p.parent_path() / (p.stem().string() + ".meta.json");
    return sidecar.string();
}

void apply_sidecar(MetadataRecord& record, const std::string& sidecar_path) {
    std::ifstream in(sidecar_path);
    if (!in) throw std::runtime_error("cannot open sidecar: " + sidecar_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw std::runtime_error("invalid sidecar " + sidecar_path + ": " + e.what());
    }
    if (doc.contains("domain_tags")) {
        for (const auto& tag : doc.at("domain_tags")) {
            std::string value = tag.get<std::string>();
            std::string lower;
            for (char c : value) lower.push_back(ascii_lower(c));
            record.domain_tags.insert(lower);
        }
    }
    if (doc.contains("description")) {
        record.kinds[MetadataKind::descriptive].push_back(doc.at("description").get<std::string>());
    }
    if (doc.contains("administrative")) {
        record.kinds[MetadataKind::administrative].push_back(doc.at("administrative").get<std::string>());
    }
}

} // namespace

std::string value_type_name(ValueType t) {
    switch (t) {
        case ValueType::text: return "text";
        case ValueType::integer: return "integer";
        case ValueType::decimal: return "decimal";
        case ValueType::date: return "date";
        case ValueType::boolean: return "boolean";
        case ValueType::unknown: return "unknown";
    }
    return "unknown";
}

std::string metadata_kind_name(MetadataKind k) {
    switch (k) {
        case MetadataKind::administrative: return "administrative";
        case MetadataKind::structural: return "structural";
        case MetadataKind::descriptive: return "descriptive";
    }
    return "descriptive";
}

std::vector<std::string> normalize_text(std::string_view raw) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : raw) {
        if (is_ascii_alnum(c)) {
            current.push_back(ascii_lower(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

std::pair<ValueType, double> profile_column(const std::vector<std::string>& values) {
    if (values.empty()) return {ValueType::unknown, 0.0};

    std::size_t nulls = 0;
    std::map<ValueType, std::size_t> votes;
    for (const auto& raw : values) {
        std::string cell = trim(raw);
        if (cell.empty()) {
            ++nulls;
            continue;
        }
        ++votes[classify_cell(cell)];
    }

    double null_fraction = static_cast<double>(nulls) / static_cast<double>(values.size());
    if (votes.empty()) return {ValueType::unknown, null_fraction};

    std::size_t best = 0;
    for (const auto& [type, count] : votes) best = std::max(best, count);
    ValueType winner = ValueType::unknown;
    std::size_t winners = 0;
    for (const auto& [type, count] : votes) {
        if (count == best) {
            winner = type;
            ++winners;
        }
    }
    if (winners > 1) winner = ValueType::unknown;
    return {winner, null_fraction};
}

MetadataRecord load_dataset(const std::string& path, const std::string& id,
                            const std::optional<std::string>& sidecar,
                            const LoadOptions& options) {
    if (id.empty()) throw std::invalid_argument("dataset id must be nonempty");

    CsvTable table = read_csv(path, options.separator);
    if (table.header.empty() || (table.header.size() == 1 && trim(table.header[0]).empty())) {
        throw std::runtime_error(path + ": empty header row");
    }

    std::map<std::string, std::size_t> seen;
    std::vector<std::string> duplicates;
    for (const auto& name : table.header) {
        if (++seen[name] == 2) duplicates.push_back(name);
    }
    if (!duplicates.empty()) {
        std::ostringstream msg;
        msg << path << ": duplicate column names:";
        for (const auto& d : duplicates) msg << " \"" << d << "\"";
        throw std::runtime_error(msg.str());
    }

    MetadataRecord record;
    record.dataset = DatasetRef{id, path, table.rows.size()};

    for (std::size_t col = 0; col < table.header.size(); ++col) {
        ColumnDescriptor desc;
        desc.dataset_id = id;
        desc.name = table.header[col];
        desc.norm_tokens = normalize_text(desc.name);
        if (options.strip_stopwords) {
            std::erase_if(desc.norm_tokens,
                          [](const std::string& t) { return stopwords().count(t) > 0; });
        }
        std::vector<std::string> values;
        values.reserve(table.rows.size());
        for (const auto& row : table.rows) {
            values.push_back(col < row.size() ? row[col] : std::string());
        }
        auto [type, null_fraction] = profile_column(values);
        desc.inferred_type = type;
        desc.null_fraction = null_fraction;
        record.columns.push_back(std::move(desc));
    }

    std::ostringstream structural;
    structural << "columns=" << record.columns.size() << " rows=" << record.dataset.row_count;
    record.kinds[MetadataKind::structural].push_back(structural.str());

    if (sidecar) {
        apply_sidecar(record, *sidecar);
    } else {
        std::string candidate = default_sidecar_path(path);
        if (std::filesystem::exists(candidate)) apply_sidecar(record, candidate);
    }
    return record;
}

void Catalog::add(MetadataRecord record) {
    if (record.columns.empty()) {
        throw std::invalid_argument("record " + record.dataset.id + " has no columns");
    }
    for (const auto& col : record.columns) {
        if (col.dataset_id != record.dataset.id) {
            throw std::invalid_argument("column " + col.name + " belongs to another dataset");
        }
    }
    if (find(record.dataset.id) != nullptr) {
        throw std::invalid_argument("duplicate dataset id: " + record.dataset.id);
    }
    records_.push_back(std::move(record));
}

const MetadataRecord* Catalog::find(const std::string& id) const {
    for (const auto& record : records_) {
        if (record.dataset.id == id) return &record;
    }
    return nullptr;
}

} // namespace cognate
