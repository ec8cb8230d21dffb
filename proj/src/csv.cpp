#include "lnmeans/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <system_error>

#include "lnmeans/errors.hpp"

namespace lnmeans {

namespace {

std::string trim(std::string_view s) {
    const char* ws = " \t\r";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(ws);
    return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(std::string_view(line).substr(start)));
            break;
        }
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

double parse_real(const std::string& field, int row, const char* name) {
    double value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || field.empty() || !std::isfinite(value))
        throw ParseError("row " + std::to_string(row) + ": field '" + name +
                         "' is not a finite number: '" + field + "'");
    return value;
}

int parse_count(const std::string& field, int row, const char* name) {
    int value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || field.empty())
        throw ParseError("row " + std::to_string(row) + ": field '" + name +
                         "' is not an integer: '" + field + "'");
    return value;
}

void require_header(std::istream& in, const std::string& expected, const char* kind) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(std::string(kind) + ": empty input, expected header '" +
                         expected + "'");
    if (trim(line) != expected)
        throw ParseError(std::string(kind) + ": row 1: expected header '" + expected +
                         "', got '" + trim(line) + "'");
}

}  // namespace

DataFile parse_data_csv(std::istream& in) {
    require_header(in, "group,value", "data file");

    DataFile data;
    std::string line;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 2)
            throw ParseError("row " + std::to_string(row) +
                             ": expected 'group,value', got " +
                             std::to_string(fields.size()) + " fields");
        const std::string& label = fields[0];
        if (label.empty())
            throw ParseError("row " + std::to_string(row) + ": empty group label");
        const double value = parse_real(fields[1], row, "value");
        if (!(value > 0.0))
            throw ParseError("row " + std::to_string(row) +
                             ": value must be strictly positive, got '" + fields[1] + "'");

        if (data.label1.empty() || label == data.label1) {
            data.label1 = label;
            data.group1.push_back(value);
        } else if (data.label2.empty() || label == data.label2) {
            data.label2 = label;
            data.group2.push_back(value);
        } else {
            throw ParseError("row " + std::to_string(row) + ": third group label '" +
                             label + "' (only two groups are supported)");
        }
    }
    if (data.label2.empty())
        throw ParseError("data file: expected exactly two distinct group labels, got " +
                         std::string(data.label1.empty() ? "0" : "1"));
    return data;
}

std::vector<Scenario> parse_scenario_csv(std::istream& in) {
    require_header(in, "n1,n2,mu1,mu2,s1sq,s2sq", "scenario file");

    std::vector<Scenario> scenarios;
    std::string line;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 6)
            throw ParseError("row " + std::to_string(row) + ": expected 6 fields, got " +
                             std::to_string(fields.size()));
        Scenario s;
        s.n1 = parse_count(fields[0], row, "n1");
        s.n2 = parse_count(fields[1], row, "n2");
        s.mu1 = parse_real(fields[2], row, "mu1");
        s.mu2 = parse_real(fields[3], row, "mu2");
        s.sigma1_sq = parse_real(fields[4], row, "s1sq");
        s.sigma2_sq = parse_real(fields[5], row, "s2sq");
        if (s.n1 < 2 || s.n2 < 2)
            throw ParseError("row " + std::to_string(row) + ": sample sizes must be >= 2");
        if (!(s.sigma1_sq > 0.0) || !(s.sigma2_sq > 0.0))
            throw ParseError("row " + std::to_string(row) +
                             ": variances must be strictly positive");
        scenarios.push_back(s);
    }
    return scenarios;
}

std::string format_double(double value, int significant_digits) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value,
                                      std::chars_format::general, significant_digits);
    return std::string(buffer, result.ptr);
}

std::string results_to_csv(std::span<const ExperimentResult> results) {
    std::string out = "n1,n2,mu1,mu2,s1sq,s2sq,method,reps,rejections,rate,se\n";
    for (const auto& result : results) {
        const Scenario& s = result.scenario;
        const std::string prefix =
            std::to_string(s.n1) + ',' + std::to_string(s.n2) + ',' +
            format_double(s.mu1) + ',' + format_double(s.mu2) + ',' +
            format_double(s.sigma1_sq) + ',' + format_double(s.sigma2_sq) + ',';
        for (const auto& outcome : result.outcomes) {
            out += prefix;
            out += to_string(outcome.method);
            out += ',';
            out += std::to_string(result.reps);
            out += ',';
            out += std::to_string(outcome.rejections);
            out += ',';
            out += format_double(outcome.rate);
            out += ',';
            out += format_double(outcome.binom_se);
            out += '\n';
        }
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");

    std::random_device rd;
    const fs::path tmp =
        dir / (path.filename().string() + ".tmp" + std::to_string(rd() % 1000000));

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot open temporary file " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Error("failed writing " + tmp.string());
        }
    }

    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignore;
        fs::remove(tmp, ignore);
        throw Error("failed to move " + tmp.string() + " to " + path.string() + ": " +
                    ec.message());
    }
}

}  // namespace lnmeans
