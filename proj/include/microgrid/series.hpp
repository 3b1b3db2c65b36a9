#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace microgrid {

inline constexpr std::size_t kHoursPerYear = 8760;

/// Fixed-length hourly signal covering one year (8760 samples).
/// Values are kW for power series; summed over an hour they read as kWh.
class HourlySeries {
public:
    HourlySeries();
    explicit HourlySeries(std::vector<double> values);

    static HourlySeries zeros() { return HourlySeries(); }

    double operator[](std::size_t t) const { return values_[t]; }
    double& operator[](std::size_t t) { return values_[t]; }

    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    double sum() const;
    double mean() const { return sum() / static_cast<double>(kHoursPerYear); }
    double max() const;
    double min() const;
    double max_abs() const;

private:
    std::vector<double> values_;
};

/// Reads one value per row, optional non-numeric header line, exactly 8760 rows.
HourlySeries load_profile_csv(const std::string& path);

/// One value per line, round-trip exact with load_profile_csv.
void write_profile_csv(const std::string& path, const HourlySeries& series);

/// Full-precision decimal formatting shared by all CSV writers.
std::string format_double(double v);

}  // namespace microgrid
