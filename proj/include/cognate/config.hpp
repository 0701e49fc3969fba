#ifndef COGNATE_CONFIG_HPP
#define COGNATE_CONFIG_HPP

#include "cognate/centers.hpp"
#include "cognate/mapper.hpp"
#include "cognate/partition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cognate {

enum class ReportFormat { structured, csv, dot };

ReportFormat parse_report_format(const std::string& name);

struct RunConfig {
    std::vector<std::string> inputs;
    RegressionWeights weights;
    int tau = 75;
    int tau_conn = 70;
    int bind_threshold = 80;
    AnnealingSchedule schedule;
    std::string out_dir = "out";
    char separator = ',';
    bool strip_stopwords = false;
    bool include_text_nodes = true;
    bool include_descriptions = false;
    ReportFormat format = ReportFormat::structured;
    DomainLexicon lexicon = default_lexicon();

    LoadOptions load_options() const { return LoadOptions{separator, strip_stopwords}; }
    void validate() const;
};

} // namespace cognate

#endif
