#include <doctest.h>

#include "cognate/centers.hpp"
#include "cognate/report.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

using namespace cognate;

namespace {

SimilarityMatrix random_matrix(std::mt19937& rng, std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) {
        ids.push_back((i < 10 ? "m0" : "m") + std::to_string(i));
    }
    SimilarityMatrix matrix(ids);
    std::uniform_int_distribution<int> percent(0, 100);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) matrix.set(i, j, percent(rng));
    }
    return matrix;
}

MetaCollection whole_matrix_collection(const SimilarityMatrix& matrix, const std::string& id) {
    MetaCollection collection;
    collection.id = id;
    collection.member_ids.insert(matrix.node_ids().begin(), matrix.node_ids().end());
    return collection;
}

// Independent oracle: integer distance sums, smallest id on ties.
std::pair<std::string, long long> brute_force_medoid(const MetaCollection& collection,
                                                     const SimilarityMatrix& matrix) {
    std::string best_id;
    long long best_units = -1;
    for (const auto& candidate : collection.member_ids) {
        long long units = 0;
        for (const auto& member : collection.member_ids) {
            units += 100 - matrix.at(candidate, member);
        }
        if (best_units < 0 || units < best_units ||
            (units == best_units && candidate < best_id)) {
            best_units = units;
            best_id = candidate;
        }
    }
    return {best_id, best_units};
}

} // namespace

TEST_CASE("center cost sums complement distances to all members") {
    SimilarityMatrix matrix(std::vector<std::string>{"a", "b", "c"});
    matrix.set(0, 1, 80);
    matrix.set(0, 2, 60);
    matrix.set(1, 2, 100);
    MetaCollection collection{"X1", {"a", "b", "c"}, ""};

    CHECK(center_cost("a", collection, matrix) == doctest::Approx(0.6));
    CHECK(center_cost("b", collection, matrix) == doctest::Approx(0.2));
    CHECK(center_cost("c", collection, matrix) == doctest::Approx(0.4));

    CHECK_THROWS_WITH(static_cast<void>(center_cost("z", collection, matrix)),
                      doctest::Contains("outside collection"));
    MetaCollection foreign{"X2", {"a", "zz"}, ""};
    CHECK_THROWS_WITH(static_cast<void>(center_cost("a", foreign, matrix)),
                      doctest::Contains("not in matrix"));
}

TEST_CASE("exact medoid minimizes cost with lexicographic ties") {
    SimilarityMatrix matrix(std::vector<std::string>{"a", "b", "c"});
    matrix.set(0, 1, 80);
    matrix.set(0, 2, 60);
    matrix.set(1, 2, 100);
    MetaCollection collection{"X1", {"a", "b", "c"}, ""};

    MetaCenter center = exact_medoid(collection, matrix);
    CHECK(center.collection_id == "X1");
    CHECK(center.node_id == "b");
    CHECK(center.cost == doctest::Approx(0.2));
    CHECK_FALSE(center.annealed);
    CHECK(center.method() == "exact");

    // Fully tied square: every member costs the same, so "a" wins.
    SimilarityMatrix tied(std::vector<std::string>{"a", "b", "c", "d"});
    tied.set(0, 1, 90);
    tied.set(2, 3, 90);
    for (auto [i, j] : {std::pair<int, int>{0, 2}, {0, 3}, {1, 2}, {1, 3}}) {
        tied.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), 50);
    }
    MetaCenter tie_center = exact_medoid(whole_matrix_collection(tied, "T"), tied);
    CHECK(tie_center.node_id == "a");

    MetaCollection empty{"E", {}, ""};
    CHECK_THROWS_WITH(static_cast<void>(exact_medoid(empty, matrix)),
                      doctest::Contains("empty"));

    std::mt19937 rng(1);
    SimilarityMatrix big = random_matrix(rng, 13);
    CHECK_THROWS_WITH(static_cast<void>(exact_medoid(whole_matrix_collection(big, "B"), big)),
                      doctest::Contains("use anneal_medoid"));
}

TEST_CASE("exact medoid equals the brute-force oracle") {
    std::mt19937 rng(314159);
    std::uniform_int_distribution<std::size_t> size(2, 12);
    for (int trial = 0; trial < 100; ++trial) {
        SimilarityMatrix matrix = random_matrix(rng, size(rng));
        MetaCollection collection = whole_matrix_collection(matrix, "C");
        auto [expected_id, expected_units] = brute_force_medoid(collection, matrix);

        MetaCenter center = exact_medoid(collection, matrix);
        CHECK(center.node_id == expected_id);
        CHECK(center.cost == doctest::Approx(static_cast<double>(expected_units) / 100.0));
    }
}

TEST_CASE("annealing delegates to the exact solver at or below the threshold") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<std::size_t> size(2, kExactMedoidThreshold);
    AnnealingSchedule schedule;
    for (int trial = 0; trial < 50; ++trial) {
        SimilarityMatrix matrix = random_matrix(rng, size(rng));
        MetaCollection collection = whole_matrix_collection(matrix, "C");
        MetaCenter annealed = anneal_medoid(collection, matrix, schedule);
        MetaCenter exact = exact_medoid(collection, matrix);
        CHECK(annealed == exact);
        CHECK_FALSE(annealed.annealed);
    }
}

TEST_CASE("annealing on large collections returns a sound, deterministic center") {
    std::mt19937 rng(8675309);
    SimilarityMatrix matrix = random_matrix(rng, 40);
    MetaCollection collection = whole_matrix_collection(matrix, "big");
    AnnealingSchedule schedule;

    MetaCenter first = anneal_medoid(collection, matrix, schedule);
    MetaCenter second = anneal_medoid(collection, matrix, schedule);
    CHECK(first == second); // same seed, same answer
    CHECK(first.annealed);
    CHECK(first.method() == "annealed");
    CHECK(collection.member_ids.count(first.node_id) == 1);
    CHECK(first.cost == doctest::Approx(center_cost(first.node_id, collection, matrix)));

    // Best-so-far can never exceed the starting candidate's cost.
    CHECK(first.cost <= center_cost(*collection.member_ids.begin(), collection, matrix) + 1e-9);

    AnnealingSchedule reseeded = schedule;
    reseeded.seed = 999;
    MetaCenter third = anneal_medoid(collection, matrix, reseeded);
    CHECK(collection.member_ids.count(third.node_id) == 1);
}

TEST_CASE("annealing keeps the exact answer on a planted optimum") {
    // One member close to everyone, the rest mutually distant.
    std::vector<std::string> ids{"hub"};
    for (int i = 0; i < 19; ++i) ids.push_back("spoke" + std::to_string(i));
    SimilarityMatrix matrix(ids);
    for (std::size_t j = 1; j < ids.size(); ++j) matrix.set(0, j, 95);
    for (std::size_t i = 1; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) matrix.set(i, j, 5);
    }
    MetaCollection collection = whole_matrix_collection(matrix, "planted");
    MetaCenter center = anneal_medoid(collection, matrix, AnnealingSchedule{});
    CHECK(center.node_id == "hub");
    CHECK(center.annealed);
}

TEST_CASE("schedule validation rejects degenerate parameters") {
    AnnealingSchedule schedule;
    CHECK_NOTHROW(schedule.validate());
    schedule.initial_temp = 0.0;
    CHECK_THROWS(schedule.validate());
    schedule = AnnealingSchedule{};
    schedule.cooling = 1.0;
    CHECK_THROWS(schedule.validate());
    schedule = AnnealingSchedule{};
    schedule.cooling = 0.0;
    CHECK_THROWS(schedule.validate());
    schedule = AnnealingSchedule{};
    schedule.steps = 0;
    CHECK_THROWS(schedule.validate());
}

TEST_CASE("centers serialize round-trip") {
    std::vector<MetaCenter> centers{{"sp.X1", "a", 0.2, false}, {"sp.X2", "b", 1.75, true}};
    auto doc = centers_to_json(centers);
    CHECK(doc[0]["method"] == "exact");
    CHECK(doc[1]["method"] == "annealed");
    CHECK(centers_from_json(doc) == centers);
}
