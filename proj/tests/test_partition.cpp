#include <doctest.h>

#include "cognate/partition.hpp"
#include "cognate/report.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace cognate;

namespace {

MetadataRecord tagged_record(const std::vector<std::string>& column_names,
                             const std::string& description = "") {
    MetadataRecord record;
    record.dataset = DatasetRef{"d", "d.csv", 0};
    for (const auto& name : column_names) {
        ColumnDescriptor column;
        column.dataset_id = "d";
        column.name = name;
        column.norm_tokens = normalize_text(name);
        record.columns.push_back(std::move(column));
    }
    if (!description.empty()) {
        record.kinds[MetadataKind::descriptive].push_back(description);
    }
    return record;
}

} // namespace

TEST_CASE("lexicon parser reads domain lines and comments") {
    DomainLexicon lex = parse_lexicon("# comment\n"
                                      "transport: bus rail\n"
                                      "\n"
                                      "food: meal recipe # trailing note\n");
    REQUIRE(lex.size() == 2);
    CHECK(lex.at("transport") == std::set<std::string>{"bus", "rail"});
    CHECK(lex.at("food") == std::set<std::string>{"meal", "recipe"});

    CHECK_THROWS_WITH(static_cast<void>(parse_lexicon("transport bus rail\n")),
                      doctest::Contains("line 1"));
    CHECK_THROWS_WITH(static_cast<void>(parse_lexicon("# fine\ntwo words: bus\n")),
                      doctest::Contains("line 2"));
    CHECK_THROWS_WITH(static_cast<void>(load_lexicon("data/nothere.lex")),
                      doctest::Contains("cannot open lexicon"));
}

TEST_CASE("bundled lexicon file matches the built-in table") {
    DomainLexicon from_file = load_lexicon("data/domains.lex");
    CHECK(from_file == default_lexicon());
}

TEST_CASE("domain tags pass through or fall back to keyword matches") {
    DomainLexicon lex = default_lexicon();

    MetadataRecord tagged = tagged_record({"anything"});
    tagged.domain_tags = {"food"};
    CHECK(infer_domain_tags(tagged, lex) == std::set<std::string>{"food"});

    MetadataRecord by_columns = tagged_record({"vehicle_count", "road_name"});
    CHECK(infer_domain_tags(by_columns, lex) == std::set<std::string>{"transport"});

    MetadataRecord by_description = tagged_record({"x", "y"}, "weekly meal ingredient totals");
    CHECK(infer_domain_tags(by_description, lex) == std::set<std::string>{"food"});

    MetadataRecord multi = tagged_record({"vehicle_type", "casualty_count"});
    CHECK(infer_domain_tags(multi, lex) ==
          std::set<std::string>{"accidents", "transport"});

    MetadataRecord nothing = tagged_record({"flarg", "blurb"});
    CHECK(infer_domain_tags(nothing, lex) == std::set<std::string>{"unclassified"});

    CHECK_THROWS_WITH(static_cast<void>(infer_domain_tags(nothing, DomainLexicon{})),
                      doctest::Contains("lexicon must be nonempty"));
}

TEST_CASE("divide groups by smallest tag and sorts spaces") {
    std::set<std::string> nodes{"n1", "n2", "n3", "n4"};
    std::map<std::string, std::set<std::string>> tags{
        {"n1", {"transport"}},
        {"n2", {"transport", "accidents"}}, // smallest tag wins: accidents
        {"n3", {"labor"}},
        {"n4", {"accidents"}},
    };
    auto spaces = divide(nodes, tags);
    REQUIRE(spaces.size() == 3);
    CHECK(spaces[0].id == "accidents");
    CHECK(spaces[0].members == std::set<std::string>{"n2", "n4"});
    CHECK(spaces[1].id == "labor");
    CHECK(spaces[2].id == "transport");
    CHECK(spaces[2].members == std::set<std::string>{"n1"});
    for (const auto& space : spaces) CHECK(space.domain_label == space.id);

    CHECK_THROWS_WITH(static_cast<void>(divide({"nx"}, {})),
                      doctest::Contains("no domain tags"));
}

TEST_CASE("divide partitions the node set for random taggings") {
    std::mt19937 rng(99);
    std::vector<std::string> labels{"a", "b", "c", "d"};
    for (int trial = 0; trial < 50; ++trial) {
        std::set<std::string> nodes;
        std::map<std::string, std::set<std::string>> tags;
        std::uniform_int_distribution<int> node_count(1, 30);
        std::uniform_int_distribution<std::size_t> label_pick(0, labels.size() - 1);
        int n = node_count(rng);
        for (int i = 0; i < n; ++i) {
            std::string id = "n" + std::to_string(i);
            nodes.insert(id);
            std::set<std::string> node_tags{labels[label_pick(rng)]};
            if (rng() % 2) node_tags.insert(labels[label_pick(rng)]);
            tags[id] = node_tags;
        }
        auto spaces = divide(nodes, tags);

        std::set<std::string> covered;
        std::size_t total = 0;
        for (const auto& space : spaces) {
            total += space.members.size();
            covered.insert(space.members.begin(), space.members.end());
            for (const auto& member : space.members) {
                // Membership follows the smallest tag.
                CHECK(*tags.at(member).begin() == space.id);
            }
        }
        CHECK(covered == nodes);       // cover
        CHECK(total == nodes.size()); // disjoint
        for (std::size_t i = 1; i < spaces.size(); ++i) {
            CHECK(spaces[i - 1].id < spaces[i].id);
        }
    }
}

TEST_CASE("bulking ids follow the dataset majority with ties to the smaller space") {
    std::vector<SearchSpace> spaces{
        {"alpha", {"d1.a", "d1.b", "d2.a"}, "alpha"},
        {"beta", {"d1.c", "d2.b", "d3.a"}, "beta"},
    };
    std::map<std::string, std::string> node_dataset{
        {"d1.a", "d1"}, {"d1.b", "d1"}, {"d1.c", "d1"},
        {"d2.a", "d2"}, {"d2.b", "d2"}, {"d3.a", "d3"},
    };
    auto bulking = assign_bulking_ids(spaces, node_dataset);
    REQUIRE(bulking.size() == 2);
    // d1: 2 nodes in alpha vs 1 in beta -> alpha. d2: 1-1 tie -> alpha.
    CHECK(bulking[0].value == "alpha-1");
    CHECK(bulking[0].dataset_ids == std::set<std::string>{"d1", "d2"});
    CHECK(bulking[1].value == "beta-2");
    CHECK(bulking[1].dataset_ids == std::set<std::string>{"d3"});
}

TEST_CASE("bulking ordinals are global and skip empty spaces") {
    std::vector<SearchSpace> spaces{
        {"a", {"x.1"}, "a"},
        {"b", {}, "b"},
        {"c", {"y.1"}, "c"},
    };
    std::map<std::string, std::string> node_dataset{{"x.1", "x"}, {"y.1", "y"}};
    auto bulking = assign_bulking_ids(spaces, node_dataset);
    REQUIRE(bulking.size() == 2);
    CHECK(bulking[0].value == "a-1");
    CHECK(bulking[1].value == "c-2");
}

TEST_CASE("spaces and bulking serialize round-trip") {
    std::vector<SearchSpace> spaces{{"alpha", {"n1", "n2"}, "alpha"},
                                    {"beta", {"n3"}, "beta"}};
    CHECK(spaces_from_json(spaces_to_json(spaces)) == spaces);

    std::vector<BulkingId> bulking{{"alpha-1", {"d1", "d2"}}, {"beta-2", {"d3"}}};
    CHECK(bulking_from_json(bulking_to_json(bulking)) == bulking);
}
