#include "microgrid/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace microgrid {

HourlySeries::HourlySeries() : values_(kHoursPerYear, 0.0) {}

HourlySeries::HourlySeries(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() != kHoursPerYear) {
        throw std::invalid_argument("HourlySeries requires exactly " +
                                    std::to_string(kHoursPerYear) + " values, got " +
                                    std::to_string(values_.size()));
    }
    for (std::size_t t = 0; t < values_.size(); ++t) {
        if (!std::isfinite(values_[t])) {
            throw std::invalid_argument("HourlySeries value at hour " + std::to_string(t) +
                                        " is not finite");
        }
    }
}

double HourlySeries::sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double HourlySeries::max() const {
    return *std::max_element(values_.begin(), values_.end());
}

double HourlySeries::min() const {
    return *std::min_element(values_.begin(), values_.end());
}

double HourlySeries::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::fabs(v));
    return m;
}

namespace {

bool parse_value(const std::string& token, double& out) {
    const char* s = token.c_str();
    char* end = nullptr;
    out = std::strtod(s, &end);
    if (end == s) return false;
    while (*end == ' ' || *end == '\t') ++end;
    return *end == '\0';
}

std::string strip(const std::string& line) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = line.find_last_not_of(" \t\r");
    return line.substr(b, e - b + 1);
}

}  // namespace

HourlySeries load_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open profile file: " + path);
    }
    std::vector<double> values;
    values.reserve(kHoursPerYear);
    std::string line;
    std::size_t row = 0;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        ++row;
        std::string token = strip(line);
        if (token.empty()) continue;
        double v = 0.0;
        if (!parse_value(token, v)) {
            // A single non-numeric first line is treated as a header.
            if (first_data_line) {
                first_data_line = false;
                continue;
            }
            throw std::runtime_error(path + ": cannot parse value at row " +
                                     std::to_string(row) + ": '" + token + "'");
        }
        first_data_line = false;
        if (v < 0.0) {
            throw std::runtime_error(path + ": negative value at row " + std::to_string(row));
        }
        values.push_back(v);
    }
    if (values.size() == 8784) {
        throw std::runtime_error(path + ": has 8784 rows (leap year); truncate to " +
                                 std::to_string(kHoursPerYear) + " rows");
    }
    if (values.size() != kHoursPerYear) {
        throw std::runtime_error(path + ": expected " + std::to_string(kHoursPerYear) +
                                 " rows, got " + std::to_string(values.size()));
    }
    return HourlySeries(std::move(values));
}

void write_profile_csv(const std::string& path, const HourlySeries& series) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    for (double v : series) {
        out << format_double(v) << '\n';
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace microgrid
