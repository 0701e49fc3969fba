#include "cognate/centers.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace cognate {

namespace {

// Distance from candidate to all members in integer hundredths, so cost ties
// compare exactly.
long long cost_units(std::size_t candidate, const std::vector<std::size_t>& members,
                     const SimilarityMatrix& matrix) {
    long long units = 0;
    for (std::size_t member : members) {
        units += 100 - matrix.at(candidate, member);
    }
    return units;
}

std::vector<std::size_t> member_indices(const MetaCollection& collection,
                                        const SimilarityMatrix& matrix) {
    std::vector<std::size_t> indices;
    indices.reserve(collection.member_ids.size());
    for (const auto& id : collection.member_ids) {
        auto index = matrix.index_of(id);
        if (!index) throw std::invalid_argument("collection member not in matrix: " + id);
        indices.push_back(*index);
    }
    return indices;
}

// Fixed-width draws so annealing runs reproduce across standard libraries.
std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

} // namespace

void AnnealingSchedule::validate() const {
    if (!(initial_temp > 0.0)) throw std::invalid_argument("initial_temp must be positive");
    if (!(cooling > 0.0 && cooling < 1.0)) {
        throw std::invalid_argument("cooling must be in (0,1)");
    }
    if (steps <= 0) throw std::invalid_argument("steps must be positive");
}

double center_cost(const std::string& candidate, const MetaCollection& collection,
                   const SimilarityMatrix& matrix) {
    if (!collection.member_ids.count(candidate)) {
        throw std::invalid_argument("candidate outside collection: " + candidate);
    }
    auto candidate_index = matrix.index_of(candidate);
    if (!candidate_index) throw std::invalid_argument("candidate not in matrix: " + candidate);
    return static_cast<double>(
               cost_units(*candidate_index, member_indices(collection, matrix), matrix)) /
           100.0;
}

MetaCenter exact_medoid(const MetaCollection& collection, const SimilarityMatrix& matrix,
                        std::size_t max_size) {
    if (collection.member_ids.empty()) {
        throw std::invalid_argument("collection is empty: " + collection.id);
    }
    if (collection.member_ids.size() > max_size) {
        throw std::invalid_argument("collection " + collection.id +
                                    " exceeds the exact-medoid size; use anneal_medoid");
    }
    std::vector<std::size_t> members = member_indices(collection, matrix);

    // member_ids is ordered, so the first strict improvement keeps the
    // lexicographically smallest id on ties.
    const std::string* best_id = nullptr;
    long long best_units = 0;
    for (const auto& id : collection.member_ids) {
        long long units = cost_units(*matrix.index_of(id), members, matrix);
        if (best_id == nullptr || units < best_units) {
            best_id = &id;
            best_units = units;
        }
    }
    return MetaCenter{collection.id, *best_id, static_cast<double>(best_units) / 100.0, false};
}

MetaCenter anneal_medoid(const MetaCollection& collection, const SimilarityMatrix& matrix,
                         const AnnealingSchedule& schedule, std::size_t exact_threshold) {
    schedule.validate();
    if (collection.member_ids.size() <= exact_threshold) {
        return exact_medoid(collection, matrix, exact_threshold);
    }

    std::vector<std::size_t> members = member_indices(collection, matrix);
    const std::size_t n = members.size();
    if (n == 1) {
        return MetaCenter{collection.id, *collection.member_ids.begin(), 0.0, true};
    }

    std::mt19937_64 rng(schedule.seed);

    // Start at the lexicographically smallest member (member_ids is ordered).
    std::size_t current = 0;
    long long current_units = cost_units(members[current], members, matrix);
    std::size_t best = current;
    long long best_units = current_units;

    double temp = schedule.initial_temp;
    for (int step = 0; step < schedule.steps; ++step) {
        std::size_t proposal = draw_index(rng, n - 1);
        if (proposal >= current) ++proposal;
        long long proposal_units = cost_units(members[proposal], members, matrix);
        long long delta = proposal_units - current_units;

        bool accept = delta <= 0;
        if (!accept) {
            double delta_cost = static_cast<double>(delta) / 100.0;
            accept = draw_unit(rng) < std::exp(-delta_cost / temp);
        }
        if (accept) {
            current = proposal;
            current_units = proposal_units;
        }
        if (proposal_units < best_units) {
            best = proposal;
            best_units = proposal_units;
        }
        temp *= schedule.cooling;
    }

    // Recover the id of the best index.
    auto it = collection.member_ids.begin();
    std::advance(it, best);
    return MetaCenter{collection.id, *it, static_cast<double>(best_units) / 100.0, true};
}

} // namespace cognate
