#include <doctest.h>

#include "cognate/pooling.hpp"
#include "cognate/report.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

using namespace cognate;

namespace {

LinearPointer pointer_for(const std::string& id, const std::string& text,
                          int bind_threshold = 80) {
    return LinearPointer{id, TextProfile::from_raw(text), bind_threshold};
}

CenterScorer fixed_scorer(std::map<std::string, int> scores) {
    return [scores](const LinearPointer&, const std::string& center_id) {
        auto it = scores.find(center_id);
        return it == scores.end() ? 0 : it->second;
    };
}

} // namespace

TEST_CASE("pool_centers groups sorted centers under sorted labels") {
    std::vector<MetaCenter> centers{
        {"X1", "t.speed", 0.0, false},
        {"X2", "a.casualty", 0.0, false},
        {"X3", "t.route", 0.0, false},
    };
    std::map<std::string, std::string> domains{
        {"t.speed", "transport"}, {"a.casualty", "accidents"}, {"t.route", "transport"}};

    auto channels = pool_centers(centers, domains);
    REQUIRE(channels.size() == 2);
    CHECK(channels[0].domain_label == "accidents");
    CHECK(channels[0].center_ids == std::vector<std::string>{"a.casualty"});
    CHECK(channels[1].domain_label == "transport");
    CHECK(channels[1].center_ids == std::vector<std::string>{"t.route", "t.speed"});

    CHECK_THROWS_WITH(static_cast<void>(pool_centers(centers, {})),
                      doctest::Contains("no domain tag"));
}

TEST_CASE("traversal binds at the threshold and tags below it") {
    DomainChannel channel{"transport", {"c1", "c2", "c3"}};
    LinearPointer pointer = pointer_for("ptr-q", "speed", 80);
    auto visits = traverse(pointer, channel,
                           fixed_scorer({{"c1", 80}, {"c2", 79}, {"c3", 100}}));

    REQUIRE(visits.size() == 3);
    CHECK(visits[0].visited_node_id == "c1");
    CHECK(visits[0].action == VisitAction::bind);
    CHECK(visits[0].score == 80);
    CHECK(visits[0].sequence_no == 1);
    CHECK(visits[1].action == VisitAction::tag);
    CHECK(visits[1].sequence_no == 2);
    CHECK(visits[2].action == VisitAction::bind);
    CHECK(visits[2].sequence_no == 3);
    for (const auto& visit : visits) CHECK(visit.pointer_id == "ptr-q");

    LinearPointer empty{"ptr-empty", TextProfile{}, 80};
    CHECK_THROWS_WITH(static_cast<void>(traverse(empty, channel, fixed_scorer({}))),
                      doctest::Contains("empty profile"));

    DomainChannel no_centers{"empty", {}};
    CHECK(traverse(pointer, no_centers, fixed_scorer({})).empty());
}

TEST_CASE("record_cycle appends numbered entries and consecutive-visit edges") {
    SearchCycleLog log;
    VisitGraph graph;
    DomainChannel channel{"transport", {"c1", "c2", "c3"}};
    LinearPointer pointer = pointer_for("ptr-q", "speed");

    auto visits = traverse(pointer, channel, fixed_scorer({{"c1", 10}, {"c2", 90}}));
    record_cycle(log, graph, "accidents", "transport", visits);

    REQUIRE(log.entries.size() == 1);
    CHECK(log.entries[0].cycle_no == 1);
    CHECK(log.entries[0].source_space_id == "accidents");
    CHECK(log.entries[0].target_space_id == "transport");
    CHECK(log.entries[0].visits == visits);
    CHECK(graph.vertices ==
          std::set<std::string>{"ptr-q", "c1", "c2", "c3"});
    REQUIRE(graph.edges.size() == 2);
    CHECK(graph.edges[0] == VisitEdge{"c1", "c2", "ptr-q"});
    CHECK(graph.edges[1] == VisitEdge{"c2", "c3", "ptr-q"});

    // Recording more cycles never rewrites what is already logged.
    SearchCycleLog snapshot = log;
    record_cycle(log, graph, "transport", "accidents", {});
    CHECK(log.entries.size() == 2);
    CHECK(log.entries[0] == snapshot.entries[0]);
    CHECK(log.entries[1].cycle_no == 2);
    CHECK(log.entries[1].visits.empty());
    CHECK(graph.edges.size() == 2); // empty traversal adds nothing

    auto second = traverse(pointer_for("ptr-r", "route"), channel, fixed_scorer({}));
    record_cycle(log, graph, "labor", "transport", second);
    CHECK(log.entries.size() == 3);
    CHECK(log.entries[2].cycle_no == 3);
    CHECK(graph.edges.size() == 4);
    CHECK(graph.vertices.count("ptr-r") == 1);
}

TEST_CASE("edge count follows the visit-length law over random cycles") {
    std::mt19937 rng(1337);
    SearchCycleLog log;
    VisitGraph graph;
    std::size_t expected_edges = 0;
    std::uniform_int_distribution<int> visit_count(0, 6);

    for (int k = 0; k < 50; ++k) {
        int v = visit_count(rng);
        std::vector<std::string> ids;
        for (int i = 0; i < v; ++i) ids.push_back("n" + std::to_string(rng() % 9));
        DomainChannel channel{"d", ids};
        std::vector<VisitRecord> visits;
        if (v > 0) {
            visits = traverse(pointer_for("ptr-" + std::to_string(k), "query"), channel,
                              fixed_scorer({}));
        }
        record_cycle(log, graph, "s", "t", visits);
        expected_edges += v > 0 ? static_cast<std::size_t>(v) - 1 : 0;

        CHECK(log.entries.size() == static_cast<std::size_t>(k) + 1);
        CHECK(log.entries.back().cycle_no == k + 1);
        CHECK(graph.edges.size() == expected_edges);
    }
}

TEST_CASE("graph export is deterministic and sorted") {
    VisitGraph graph;
    graph.vertices = {"b", "a \"quoted\""};
    graph.edges = {{"b", "a \"quoted\"", "p2"}, {"a \"quoted\"", "b", "p1"}};

    std::string dot = export_graph(graph, GraphFormat::dot);
    CHECK(dot ==
          "digraph visit_graph {\n"
          "  \"a \\\"quoted\\\"\";\n"
          "  \"b\";\n"
          "  \"a \\\"quoted\\\"\" -> \"b\" [label=\"p1\"];\n"
          "  \"b\" -> \"a \\\"quoted\\\"\" [label=\"p2\"];\n"
          "}\n");

    std::string structured = export_graph(graph, GraphFormat::structured);
    VisitGraph parsed = graph_from_json(nlohmann::json::parse(structured));
    CHECK(parsed.vertices == graph.vertices);
    REQUIRE(parsed.edges.size() == 2);
    CHECK(parsed.edges[0] == VisitEdge{"a \"quoted\"", "b", "p1"}); // sorted on export

    CHECK(parse_graph_format("dot") == GraphFormat::dot);
    CHECK(parse_graph_format("structured") == GraphFormat::structured);
    CHECK_THROWS_WITH(static_cast<void>(parse_graph_format("xml")),
                      doctest::Contains("unknown graph format"));
    CHECK(visit_action_name(VisitAction::bind) == "bind");
    CHECK(visit_action_name(VisitAction::tag) == "tag");
}

TEST_CASE("cycle log serializes round-trip") {
    SearchCycleLog log;
    VisitGraph graph;
    DomainChannel channel{"transport", {"c1", "c2"}};
    record_cycle(log, graph, "a", "transport",
                 traverse(pointer_for("ptr-x", "speed limit"), channel,
                          fixed_scorer({{"c1", 95}})));
    record_cycle(log, graph, "transport", "a", {});

    CHECK(cycle_log_from_json(cycle_log_to_json(log)) == log);

    std::vector<DomainChannel> channels{{"a", {"x", "y"}}, {"b", {}}};
    CHECK(channels_from_json(channels_to_json(channels)) == channels);
}
