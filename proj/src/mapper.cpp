#include "cognate/mapper.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace cognate {

TextProfile TextProfile::from_raw(std::string_view raw) {
    TextProfile profile;
    profile.tokens = normalize_text(raw);
    profile.joined = join_tokens(profile.tokens);
    return profile;
}

TextProfile TextProfile::from_tokens(std::vector<std::string> tokens) {
    TextProfile profile;
    profile.tokens = std::move(tokens);
    profile.joined = join_tokens(profile.tokens);
    return profile;
}

void RegressionWeights::validate() const {
    if (jaccard < 0.0 || dice < 0.0 || levenshtein < 0.0) {
        throw std::invalid_argument("regression weights must be nonnegative");
    }
    double sum = jaccard + dice + levenshtein;
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("regression weights must sum to 1");
    }
}

double token_jaccard(const std::vector<std::string>& t1, const std::vector<std::string>& t2) {
    std::set<std::string> s1(t1.begin(), t1.end());
    std::set<std::string> s2(t2.begin(), t2.end());
    if (s1.empty() && s2.empty()) return 1.0;
    std::size_t intersection = 0;
    for (const auto& token : s1) intersection += s2.count(token);
    std::size_t unions = s1.size() + s2.size() - intersection;
    return static_cast<double>(intersection) / static_cast<double>(unions);
}

namespace {

std::set<std::string> trigrams(const std::string& s) {
    std::set<std::string> grams;
    for (std::size_t i = 0; i + 3 <= s.size(); ++i) grams.insert(s.substr(i, 3));
    return grams;
}

} // namespace

double trigram_dice(const std::string& s1, const std::string& s2) {
    if (s1.size() < 3 || s2.size() < 3) return s1 == s2 ? 1.0 : 0.0;
    std::set<std::string> g1 = trigrams(s1);
    std::set<std::string> g2 = trigrams(s2);
    std::size_t intersection = 0;
    for (const auto& g : g1) intersection += g2.count(g);
    return 2.0 * static_cast<double>(intersection) /
           static_cast<double>(g1.size() + g2.size());
}

double normalized_levenshtein(const std::string& s1, const std::string& s2) {
    if (s1.empty() && s2.empty()) return 1.0;
    const std::size_t n = s1.size();
    const std::size_t m = s2.size();
    std::vector<std::size_t> previous(m + 1), current(m + 1);
    for (std::size_t j = 0; j <= m; ++j) previous[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        current[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            std::size_t substitution = previous[j - 1] + (s1[i - 1] == s2[j - 1] ? 0 : 1);
            current[j] = std::min({previous[j] + 1, current[j - 1] + 1, substitution});
        }
        std::swap(previous, current);
    }
    double distance = static_cast<double>(previous[m]);
    return 1.0 - distance / static_cast<double>(std::max(n, m));
}

FeatureVector compute_features(const TextProfile& a, const TextProfile& b) {
    FeatureVector f;
    f.token_jaccard = token_jaccard(a.tokens, b.tokens);
    f.trigram_dice = trigram_dice(a.joined, b.joined);
    f.norm_levenshtein = normalized_levenshtein(a.joined, b.joined);
    return f;
}

int regression_similarity(const FeatureVector& f, const RegressionWeights& w) {
    w.validate();
    double raw = 100.0 * (w.jaccard * f.token_jaccard + w.dice * f.trigram_dice +
                          w.levenshtein * f.norm_levenshtein);
    int percent = static_cast<int>(std::floor(raw + 0.5));
    return std::clamp(percent, 0, 100);
}

int score_profiles(const TextProfile& a, const TextProfile& b, const RegressionWeights& w) {
    return regression_similarity(compute_features(a, b), w);
}

std::vector<AttributePair> generate_pairs(const MetadataRecord& a, const MetadataRecord& b) {
    if (a.dataset.id == b.dataset.id) {
        throw std::invalid_argument("cannot pair a dataset with itself: " + a.dataset.id);
    }
    std::vector<AttributePair> pairs;
    pairs.reserve(a.columns.size() * b.columns.size());
    for (const auto& left : a.columns) {
        for (const auto& right : b.columns) {
            pairs.push_back(AttributePair{left, right});
        }
    }
    return pairs;
}

std::string qualified_name(const ColumnDescriptor& column) {
    return column.dataset_id + "." + column.name;
}

std::pair<std::vector<SimilarityTriple>, ConnectionEvidence>
cognate_map(const MetadataRecord& a, const MetadataRecord& b,
            const RegressionWeights& w, int tau_conn) {
    w.validate();
    std::vector<AttributePair> pairs = generate_pairs(a, b);

    std::vector<SimilarityTriple> triples;
    triples.reserve(pairs.size());
    ConnectionEvidence evidence;
    evidence.dataset_a = a.dataset.id;
    evidence.dataset_b = b.dataset.id;

    for (const auto& pair : pairs) {
        TextProfile left = TextProfile::from_tokens(pair.left.norm_tokens);
        TextProfile right = TextProfile::from_tokens(pair.right.norm_tokens);
        int percent = score_profiles(left, right, w);
        triples.push_back(SimilarityTriple{qualified_name(pair.left),
                                           qualified_name(pair.right), percent});
        evidence.max_percent = std::max(evidence.max_percent, percent);
        if (percent >= tau_conn) ++evidence.strong_pairs;
    }
    evidence.connected = evidence.strong_pairs >= 1;
    return {std::move(triples), evidence};
}

} // namespace cognate
