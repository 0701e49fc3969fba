#include "cognate/config.hpp"

#include <stdexcept>

namespace cognate {

ReportFormat parse_report_format(const std::string& name) {
    if (name == "structured") return ReportFormat::structured;
    if (name == "csv") return ReportFormat::csv;
    if (name == "dot") return ReportFormat::dot;
    throw std::invalid_argument("unknown report format: " + name);
}

namespace {

void check_percent(const char* what, int value) {
    if (value < 0 || value > 100) {
        throw std::invalid_argument(std::string(what) + " must be in 0..100");
    }
}

} // namespace

void RunConfig::validate() const {
    weights.validate();
    schedule.validate();
    check_percent("tau", tau);
    check_percent("tau_conn", tau_conn);
    check_percent("bind_threshold", bind_threshold);
    if (out_dir.empty()) throw std::invalid_argument("output directory must not be empty");
}

} // namespace cognate
