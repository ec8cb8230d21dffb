#pragma once

#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "lnmeans/simulation.hpp"

namespace lnmeans {

// Two-group observations parsed from a "group,value" CSV. Group 1 is the
// label seen first in the file.
struct DataFile {
    std::string label1;
    std::string label2;
    std::vector<double> group1;
    std::vector<double> group2;
};

// Parse a data CSV: header "group,value", then rows of
// <label>,<strictly positive real>. Exactly two distinct labels.
// Throws ParseError naming the offending row.
DataFile parse_data_csv(std::istream& in);

// Parse a scenario CSV: header "n1,n2,mu1,mu2,s1sq,s2sq", one scenario
// per row. Throws ParseError naming the offending row.
std::vector<Scenario> parse_scenario_csv(std::istream& in);

// Locale-independent decimal formatting, 6 significant digits by default.
std::string format_double(double value, int significant_digits = 6);

// Serialize experiment results to the simulate CSV schema:
// "n1,n2,mu1,mu2,s1sq,s2sq,method,reps,rejections,rate,se", one row per
// (scenario, method), LF line endings.
std::string results_to_csv(std::span<const ExperimentResult> results);

// Write content to path atomically: temp file in the same directory,
// then rename. On failure nothing is left at path.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace lnmeans
