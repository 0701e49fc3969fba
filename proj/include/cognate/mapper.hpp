#ifndef COGNATE_MAPPER_HPP
#define COGNATE_MAPPER_HPP

#include "cognate/catalog.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cognate {

/// Normalized token list plus its space-joined form, the unit every string
/// feature scores against.
struct TextProfile {
    std::vector<std::string> tokens;
    std::string joined;

    static TextProfile from_raw(std::string_view raw);
    static TextProfile from_tokens(std::vector<std::string> tokens);
};

struct AttributePair {
    ColumnDescriptor left;
    ColumnDescriptor right;
};

struct FeatureVector {
    double token_jaccard = 0.0;
    double trigram_dice = 0.0;
    double norm_levenshtein = 0.0;
};

struct RegressionWeights {
    double jaccard = 0.4;
    double dice = 0.3;
    double levenshtein = 0.3;

    /// Weights must be nonnegative and sum to 1 (tolerance 1e-9).
    void validate() const;
};

struct SimilarityTriple {
    std::string source_column;
    std::string target_column;
    int percent = 0;

    bool operator==(const SimilarityTriple&) const = default;
};

struct ConnectionEvidence {
    std::string dataset_a;
    std::string dataset_b;
    int max_percent = 0;
    std::size_t strong_pairs = 0;
    bool connected = false;

    bool operator==(const ConnectionEvidence&) const = default;
};

/// |set(t1) n set(t2)| / |set(t1) u set(t2)|; both empty -> 1.
double token_jaccard(const std::vector<std::string>& t1, const std::vector<std::string>& t2);

/// Dice coefficient over the distinct character trigrams of two joined-token
/// strings. Either string shorter than 3 characters: 1 when equal, else 0.
double trigram_dice(const std::string& s1, const std::string& s2);

/// 1 - editDistance(s1, s2) / max(|s1|, |s2|); both empty -> 1.
double normalized_levenshtein(const std::string& s1, const std::string& s2);

FeatureVector compute_features(const TextProfile& a, const TextProfile& b);

/// Weighted linear combination of the three features, as an integer percent
/// (half-up rounding).
int regression_similarity(const FeatureVector& f, const RegressionWeights& w);

/// Convenience: features plus combined score for two profiles.
int score_profiles(const TextProfile& a, const TextProfile& b, const RegressionWeights& w);

/// Full cross product of the two column lists, ordered by
/// (left column index, right column index).
std::vector<AttributePair> generate_pairs(const MetadataRecord& a, const MetadataRecord& b);

std::string qualified_name(const ColumnDescriptor& column);

/// Score every pair and aggregate connection evidence against tau_conn.
std::pair<std::vector<SimilarityTriple>, ConnectionEvidence>
cognate_map(const MetadataRecord& a, const MetadataRecord& b,
            const RegressionWeights& w, int tau_conn);

} // namespace cognate

#endif
