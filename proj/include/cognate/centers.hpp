#ifndef COGNATE_CENTERS_HPP
#define COGNATE_CENTERS_HPP

#include "cognate/grouping.hpp"

#include <cstdint>
#include <string>

namespace cognate {

struct MetaCenter {
    std::string collection_id;
    std::string node_id;
    double cost = 0.0;
    bool annealed = false;

    std::string method() const { return annealed ? "annealed" : "exact"; }

    bool operator==(const MetaCenter&) const = default;
};

struct AnnealingSchedule {
    double initial_temp = 1.0;
    double cooling = 0.995;
    int steps = 2000;
    std::uint64_t seed = 1;

    void validate() const;
};

/// Collections at or below this size are solved exactly.
inline constexpr std::size_t kExactMedoidThreshold = 12;

/// Sum over members of (1 - percent/100) from the candidate. Exact: the
/// distance sum is kept in integer hundredths until the final division.
double center_cost(const std::string& candidate, const MetaCollection& collection,
                   const SimilarityMatrix& matrix);

/// The member minimizing center_cost; ties break to the lexicographically
/// smallest node id. Rejects collections above max_size.
MetaCenter exact_medoid(const MetaCollection& collection, const SimilarityMatrix& matrix,
                        std::size_t max_size = kExactMedoidThreshold);

/// Simulated annealing over the member set with geometric cooling, starting
/// from the lexicographically smallest member and returning the best candidate
/// seen. Delegates to exact_medoid at or below exact_threshold members.
MetaCenter anneal_medoid(const MetaCollection& collection, const SimilarityMatrix& matrix,
                         const AnnealingSchedule& schedule,
                         std::size_t exact_threshold = kExactMedoidThreshold);

} // namespace cognate

#endif
