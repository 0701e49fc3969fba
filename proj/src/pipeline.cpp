#include "cognate/pipeline.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

namespace cognate {

namespace fs = std::filesystem;
using nlohmann::json;

IngestOutcome ingest_files(const std::vector<std::string>& paths, const LoadOptions& options) {
    IngestOutcome outcome;
    for (const auto& path : paths) {
        try {
            std::string id = fs::path(path).stem().string();
            outcome.catalog.add(load_dataset(path, id, std::nullopt, options));
        } catch (const std::exception& e) {
            outcome.errors.push_back(path + ": " + e.what());
        }
    }
    return outcome;
}

MatchOutcome match_datasets(const Catalog& catalog, const std::string& id_a,
                            const std::string& id_b, const RunConfig& config) {
    const MetadataRecord* a = catalog.find(id_a);
    if (!a) throw std::invalid_argument("unknown dataset id: " + id_a);
    const MetadataRecord* b = catalog.find(id_b);
    if (!b) throw std::invalid_argument("unknown dataset id: " + id_b);
    auto [triples, evidence] = cognate_map(*a, *b, config.weights, config.tau_conn);
    return MatchOutcome{std::move(triples), evidence};
}

namespace {

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

template <typename F>
auto stage_guard(const char* stage, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string(stage) + ": " + e.what());
    }
}

std::optional<TextProfile> description_profile(const MetadataRecord& record) {
    auto entries = record.kinds.find(MetadataKind::descriptive);
    if (entries == record.kinds.end() || entries->second.empty()) return std::nullopt;
    std::string combined;
    for (const auto& text : entries->second) {
        if (!combined.empty()) combined.push_back(' ');
        combined += text;
    }
    return TextProfile::from_raw(combined);
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

void write_report(const std::string& dir, const std::string& name, const std::string& content,
                  std::ostream& out) {
    fs::path path = fs::path(dir) / name;
    write_text_file(path.string(), content);
    out << "wrote " << path.generic_string() << "\n";
}

} // namespace

PipelineResult run_pipeline_stages(const Catalog& catalog, const RunConfig& config) {
    if (catalog.empty()) throw std::invalid_argument("catalog is empty");
    config.validate();

    PipelineResult result;
    auto nodes = collect_nodes(catalog, config.include_text_nodes);
    std::map<std::string, TextProfile> payloads;
    for (const auto& node : nodes) payloads[node.id] = node.payload;

    // Tags are inferred per dataset and shared by all of its nodes.
    std::set<std::string> node_ids;
    std::map<std::string, std::set<std::string>> node_tags;
    std::map<std::string, std::string> node_dataset;
    for (const auto& record : catalog.records()) {
        auto tags = infer_domain_tags(record, config.lexicon);
        auto claim = [&](const std::string& id) {
            node_ids.insert(id);
            node_tags[id] = tags;
            node_dataset[id] = record.dataset.id;
        };
        for (const auto& column : record.columns) claim(qualified_name(column));
        std::string text_id = record.dataset.id + ".desc";
        if (payloads.count(text_id)) claim(text_id);
    }

    stage_guard("divide", [&] {
        result.spaces = divide(node_ids, node_tags);
        result.bulking = assign_bulking_ids(result.spaces, node_dataset);
        return 0;
    });

    stage_guard("cluster", [&] {
        for (const auto& space : result.spaces) {
            std::vector<MetaNode> space_nodes;
            space_nodes.reserve(space.members.size());
            for (const auto& member : space.members) {
                space_nodes.push_back(MetaNode{member, payloads.at(member)});
            }
            auto matrix = build_similarity_matrix(space_nodes, config.weights);
            auto collections = threshold_cluster(matrix, config.tau, space.id);
            result.space_matrices.emplace(space.id, std::move(matrix));
            result.collections.insert(result.collections.end(), collections.begin(),
                                      collections.end());
        }
        return 0;
    });

    stage_guard("centers", [&] {
        for (const auto& collection : result.collections) {
            const auto& matrix = result.space_matrices.at(collection.space_id);
            // Seed per collection so results do not depend on visit order.
            AnnealingSchedule schedule = config.schedule;
            schedule.seed = config.schedule.seed ^ fnv1a(collection.id);
            result.centers.push_back(anneal_medoid(collection, matrix, schedule));
        }
        return 0;
    });

    stage_guard("pool", [&] {
        std::map<std::string, std::string> space_domain;
        for (const auto& space : result.spaces) space_domain[space.id] = space.domain_label;
        std::map<std::string, std::string> collection_space;
        for (const auto& collection : result.collections) {
            collection_space[collection.id] = collection.space_id;
        }
        for (const auto& center : result.centers) {
            result.node_domains[center.node_id] =
                space_domain.at(collection_space.at(center.collection_id));
        }
        result.channels = pool_centers(result.centers, result.node_domains);
        return 0;
    });

    stage_guard("traverse", [&] {
        // Every center sends a pointer across every foreign channel.
        CenterScorer scorer = [&](const LinearPointer& pointer, const std::string& center_id) {
            return score_profiles(pointer.query_profile, payloads.at(center_id),
                                  config.weights);
        };
        for (const auto& center : result.centers) {
            const std::string& home = result.node_domains.at(center.node_id);
            LinearPointer pointer{"ptr-" + center.node_id, payloads.at(center.node_id),
                                  config.bind_threshold};
            for (const auto& channel : result.channels) {
                if (channel.domain_label == home) continue;
                auto visits = traverse(pointer, channel, scorer);
                record_cycle(result.log, result.graph, home, channel.domain_label, visits);
            }
        }
        return 0;
    });

    return result;
}

int cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        if (config.inputs.empty()) throw std::invalid_argument("no input files");
        auto outcome = ingest_files(config.inputs, config.load_options());
        for (const auto& error : outcome.errors) err << "error: " << error << "\n";
        fs::create_directories(config.out_dir);
        write_report(config.out_dir, "manifest.json", dump_json(manifest_to_json(outcome.catalog)),
                     out);
        out << "ingested " << outcome.catalog.size() << " of " << config.inputs.size()
            << " inputs\n";
        return outcome.errors.empty() ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_match(const RunConfig& config, const std::string& id_a, const std::string& id_b,
              std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        auto outcome = ingest_files(config.inputs, config.load_options());
        for (const auto& error : outcome.errors) err << "error: " << error << "\n";

        auto match = match_datasets(outcome.catalog, id_a, id_b, config);
        const MetadataRecord* a = outcome.catalog.find(id_a);
        const MetadataRecord* b = outcome.catalog.find(id_b);

        auto triples = match.triples;
        if (config.include_descriptions) {
            auto desc_a = description_profile(*a);
            auto desc_b = description_profile(*b);
            if (desc_a && desc_b) {
                triples.push_back(SimilarityTriple{
                    id_a + ".desc", id_b + ".desc",
                    score_profiles(*desc_a, *desc_b, config.weights)});
            }
        }

        fs::create_directories(config.out_dir);
        if (config.format == ReportFormat::csv) {
            write_report(config.out_dir, "triples.csv", triples_to_csv(triples, config.separator),
                         out);
            write_report(config.out_dir, "evidence.csv",
                         evidence_list_to_csv({match.evidence}, config.separator), out);
        } else {
            write_report(config.out_dir, "triples.json", dump_json(triples_to_json(triples)), out);
            write_report(config.out_dir, "evidence.json", dump_json(evidence_to_json(match.evidence)),
                         out);
        }
        write_report(config.out_dir, "matrix-" + id_a + "-" + id_b + ".csv",
                     match_matrix_csv(*a, *b, match.triples, config.separator), out);

        const auto& evidence = match.evidence;
        out << id_a << " <-> " << id_b << ": max " << evidence.max_percent << "%, strong pairs "
            << evidence.strong_pairs << ", "
            << (evidence.connected ? "connected" : "not connected") << "\n";
        return outcome.errors.empty() ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        auto outcome = ingest_files(config.inputs, config.load_options());
        for (const auto& error : outcome.errors) err << "error: " << error << "\n";
        const auto& records = outcome.catalog.records();
        if (records.size() < 2) throw std::invalid_argument("need at least two datasets");

        fs::create_directories(config.out_dir);
        std::vector<ConnectionEvidence> evidence;
        std::size_t connected = 0;
        for (std::size_t i = 0; i < records.size(); ++i) {
            for (std::size_t j = i + 1; j < records.size(); ++j) {
                auto [triples, pair_evidence] =
                    cognate_map(records[i], records[j], config.weights, config.tau_conn);
                write_report(config.out_dir,
                             "matrix-" + records[i].dataset.id + "-" + records[j].dataset.id +
                                 ".csv",
                             match_matrix_csv(records[i], records[j], triples, config.separator),
                             out);
                connected += pair_evidence.connected ? 1 : 0;
                evidence.push_back(std::move(pair_evidence));
            }
        }
        if (config.format == ReportFormat::csv) {
            write_report(config.out_dir, "evidence.csv",
                         evidence_list_to_csv(evidence, config.separator), out);
        } else {
            write_report(config.out_dir, "evidence.json",
                         dump_json(evidence_list_to_json(evidence)), out);
        }
        out << "compared " << records.size() << " datasets across " << evidence.size()
            << " pairs (" << connected << " connected)\n";
        return outcome.errors.empty() ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_pipeline(const RunConfig& config, PipelineStage stage, std::ostream& out,
                 std::ostream& err) {
    try {
        config.validate();
        if (config.inputs.empty()) throw std::invalid_argument("no input files");
        auto outcome = ingest_files(config.inputs, config.load_options());
        for (const auto& error : outcome.errors) err << "error: ingest: " << error << "\n";
        if (!outcome.errors.empty()) return 1;

        auto result = run_pipeline_stages(outcome.catalog, config);

        fs::create_directories(config.out_dir);
        write_report(config.out_dir, "manifest.json", dump_json(manifest_to_json(outcome.catalog)),
                     out);
        write_report(config.out_dir, "spaces.json", dump_json(spaces_to_json(result.spaces)), out);
        write_report(config.out_dir, "bulking.json", dump_json(bulking_to_json(result.bulking)),
                     out);
        write_report(config.out_dir, "collections.json",
                     dump_json(collections_to_json(result.collections)), out);
        for (const auto& [space_id, matrix] : result.space_matrices) {
            write_report(config.out_dir, "matrix-" + space_id + ".csv",
                         matrix_to_csv(matrix, config.separator), out);
        }
        out << "spaces: " << result.spaces.size() << ", collections: "
            << result.collections.size() << "\n";
        if (stage == PipelineStage::cluster) return 0;

        write_report(config.out_dir, "centers.json", dump_json(centers_to_json(result.centers)),
                     out);
        out << "centers: " << result.centers.size() << "\n";
        if (stage == PipelineStage::centers) return 0;

        write_report(config.out_dir, "channels.json", dump_json(channels_to_json(result.channels)),
                     out);
        out << "channels: " << result.channels.size() << "\n";
        if (stage == PipelineStage::pool) return 0;

        write_report(config.out_dir, "cycles.json", dump_json(cycle_log_to_json(result.log)), out);
        if (config.format == ReportFormat::structured) {
            write_report(config.out_dir, "graph.json",
                         export_graph(result.graph, GraphFormat::structured), out);
        } else {
            write_report(config.out_dir, "graph.dot", export_graph(result.graph, GraphFormat::dot),
                         out);
        }
        out << "cycles: " << result.log.entries.size() << ", edges: "
            << result.graph.edges.size() << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cognate
