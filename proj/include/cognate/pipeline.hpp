#ifndef COGNATE_PIPELINE_HPP
#define COGNATE_PIPELINE_HPP

#include "cognate/config.hpp"
#include "cognate/report.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cognate {

struct IngestOutcome {
    Catalog catalog;
    std::vector<std::string> errors; // one "<path>: <reason>" line per failed file
};

/// Load every input; dataset ids default to the file stem. Failures are
/// collected, not fatal.
IngestOutcome ingest_files(const std::vector<std::string>& paths, const LoadOptions& options);

struct MatchOutcome {
    std::vector<SimilarityTriple> triples;
    ConnectionEvidence evidence;
};

MatchOutcome match_datasets(const Catalog& catalog, const std::string& id_a,
                            const std::string& id_b, const RunConfig& config);

/// Everything the full run computes, stage by stage.
struct PipelineResult {
    std::vector<SearchSpace> spaces;
    std::vector<BulkingId> bulking;
    std::map<std::string, SimilarityMatrix> space_matrices;
    std::vector<MetaCollection> collections;
    std::vector<MetaCenter> centers;
    std::vector<DomainChannel> channels;
    std::map<std::string, std::string> node_domains;
    SearchCycleLog log;
    VisitGraph graph;
};

/// divide -> cluster -> centers -> pool -> traverse. Deterministic for a
/// fixed catalog and config.
PipelineResult run_pipeline_stages(const Catalog& catalog, const RunConfig& config);

/// How far the pipeline command runs and reports.
enum class PipelineStage { cluster, centers, pool, full };

// CLI entry points. Each writes its report files under config.out_dir and
// returns a process exit status (0 only when no stage reported an error).
int cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_match(const RunConfig& config, const std::string& id_a, const std::string& id_b,
              std::ostream& out, std::ostream& err);
int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_pipeline(const RunConfig& config, PipelineStage stage, std::ostream& out,
                 std::ostream& err);

} // namespace cognate

#endif
