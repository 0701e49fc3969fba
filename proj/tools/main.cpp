#include "cognate/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

cognate::RegressionWeights parse_weights(const std::string& text) {
    std::istringstream in(text);
    std::string part;
    std::vector<double> values;
    while (std::getline(in, part, ',')) {
        try {
            values.push_back(std::stod(part));
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid weight value: " + part);
        }
    }
    if (values.size() != 3) {
        throw std::invalid_argument("expected three weights: jaccard,dice,levenshtein");
    }
    return cognate::RegressionWeights{values[0], values[1], values[2]};
}

char parse_separator(const std::string& text) {
    if (text == "\\t") return '\t';
    if (text.size() != 1) throw std::invalid_argument("separator must be a single character");
    return text[0];
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Profile tabular datasets, score cross-dataset column similarity, cluster the "
                 "metadata, and pool the cluster centers into domain channels."};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Defaults file; explicit flags win on conflict");

    cognate::RunConfig config;
    std::string weights_text;
    std::string format_text = "structured";
    std::string separator_text = ",";
    std::string lexicon_path;
    bool no_text_nodes = false;

    app.add_option("--weights", weights_text,
                   "Feature weights as jaccard,dice,levenshtein (default 0.4,0.3,0.3)");
    app.add_option("--tau", config.tau, "Clustering threshold percent (default 75)");
    app.add_option("--tau-conn", config.tau_conn,
                   "Connection-evidence threshold percent (default 70)");
    app.add_option("--bind-threshold", config.bind_threshold,
                   "Pointer bind threshold percent (default 80)");
    app.add_option("--seed", config.schedule.seed, "Annealing seed (default 1)");
    app.add_option("--steps", config.schedule.steps, "Annealing steps (default 2000)");
    app.add_option("--out", config.out_dir, "Output directory (default out)");
    app.add_option("--format", format_text, "Report format: structured, csv or dot")
        ->check(CLI::IsMember({"structured", "csv", "dot"}));
    app.add_option("--separator", separator_text, "Field separator, e.g. ';' or '\\t'");
    app.add_flag("--strip-stopwords", config.strip_stopwords,
                 "Drop common English stopwords from name tokens");
    app.add_flag("--no-text-nodes", no_text_nodes, "Cluster column nodes only");
    app.add_flag("--include-descriptions", config.include_descriptions,
                 "Score dataset descriptions as an extra match triple");
    app.add_option("--lexicon", lexicon_path,
                   "Domain lexicon file (\"domain: keyword ...\" lines)");

    std::vector<std::string> inputs;
    std::string left;
    std::string right;

    auto* ingest = app.add_subcommand("ingest", "Profile input files into a catalog manifest");
    ingest->add_option("inputs", inputs, "Delimited text files")->required();

    auto* match = app.add_subcommand("match", "Score every column pair of two datasets");
    match->add_option("left", left, "Source dataset id")->required();
    match->add_option("right", right, "Target dataset id")->required();
    match->add_option("inputs", inputs, "Delimited text files")->required();

    auto* cluster = app.add_subcommand("cluster", "Divide into search spaces and cluster");
    cluster->add_option("inputs", inputs, "Delimited text files")->required();

    auto* centers = app.add_subcommand("centers", "Cluster and pick collection centers");
    centers->add_option("inputs", inputs, "Delimited text files")->required();

    auto* pool = app.add_subcommand("pool", "Cluster, pick centers, pool domain channels");
    pool->add_option("inputs", inputs, "Delimited text files")->required();

    auto* report = app.add_subcommand("report", "Pairwise connection evidence and matrices");
    report->add_option("inputs", inputs, "Delimited text files")->required();

    auto* run = app.add_subcommand("run", "Full pipeline through traversal logging");
    run->add_option("inputs", inputs, "Delimited text files")->required();

    for (auto* sub : {ingest, match, cluster, centers, pool, report, run}) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (!weights_text.empty()) config.weights = parse_weights(weights_text);
        config.separator = parse_separator(separator_text);
        config.format = cognate::parse_report_format(format_text);
        config.include_text_nodes = !no_text_nodes;
        if (!lexicon_path.empty()) config.lexicon = cognate::load_lexicon(lexicon_path);
        config.inputs = inputs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (ingest->parsed()) return cognate::cmd_ingest(config, std::cout, std::cerr);
    if (match->parsed()) return cognate::cmd_match(config, left, right, std::cout, std::cerr);
    if (cluster->parsed()) {
        return cognate::cmd_pipeline(config, cognate::PipelineStage::cluster, std::cout,
                                     std::cerr);
    }
    if (centers->parsed()) {
        return cognate::cmd_pipeline(config, cognate::PipelineStage::centers, std::cout,
                                     std::cerr);
    }
    if (pool->parsed()) {
        return cognate::cmd_pipeline(config, cognate::PipelineStage::pool, std::cout, std::cerr);
    }
    if (report->parsed()) return cognate::cmd_report(config, std::cout, std::cerr);
    if (run->parsed()) {
        return cognate::cmd_pipeline(config, cognate::PipelineStage::full, std::cout, std::cerr);
    }
    return 1;
}
