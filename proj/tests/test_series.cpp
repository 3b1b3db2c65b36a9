#include <stdexcept>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>

#include "doctest.h"
#include "microgrid/series.hpp"

using namespace microgrid;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / name;
}

void write_lines(const fs::path& p, const std::vector<std::string>& lines) {
    std::ofstream out(p);
    for (const auto& l : lines) out << l << '\n';
}

}  // namespace

TEST_CASE("HourlySeries enforces its invariants") {
    CHECK_THROWS_AS(HourlySeries(std::vector<double>(100, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(HourlySeries(std::vector<double>(8761, 0.0)), std::invalid_argument);

    std::vector<double> v(kHoursPerYear, 0.0);
    v[17] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(HourlySeries(std::move(v)), std::invalid_argument);

    CHECK(HourlySeries::zeros().sum() == 0.0);
}

TEST_CASE("load_profile_csv parses a plain file") {
    auto p = temp_file("series_zeros.csv");
    {
        std::ofstream out(p);
        for (std::size_t i = 0; i < kHoursPerYear; ++i) out << "0\n";
    }
    HourlySeries s = load_profile_csv(p.string());
    CHECK(s.sum() == 0.0);
}

TEST_CASE("load_profile_csv skips a single header line") {
    auto p = temp_file("series_header.csv");
    {
        std::ofstream out(p);
        out << "power_kw\n";
        for (std::size_t i = 0; i < kHoursPerYear; ++i) out << "1.5\n";
    }
    HourlySeries s = load_profile_csv(p.string());
    CHECK(s[0] == 1.5);
}

TEST_CASE("load_profile_csv reports row counts and parse errors") {
    auto short_file = temp_file("series_short.csv");
    {
        std::ofstream out(short_file);
        for (std::size_t i = 0; i < kHoursPerYear - 1; ++i) out << "1\n";
    }
    CHECK_THROWS_WITH_AS(load_profile_csv(short_file.string()),
                         doctest::Contains("8760"), std::runtime_error);

    auto bad = temp_file("series_bad.csv");
    {
        std::ofstream out(bad);
        for (int i = 1; i <= 6; ++i) out << "1\n";
        out << "abc\n";
        for (std::size_t i = 7; i < kHoursPerYear; ++i) out << "1\n";
    }
    CHECK_THROWS_WITH_AS(load_profile_csv(bad.string()), doctest::Contains("row 7"),
                         std::runtime_error);

    auto neg = temp_file("series_neg.csv");
    {
        std::ofstream out(neg);
        out << "-1\n";
        for (std::size_t i = 1; i < kHoursPerYear; ++i) out << "1\n";
    }
    CHECK_THROWS_WITH_AS(load_profile_csv(neg.string()), doctest::Contains("row 1"),
                         std::runtime_error);

    auto leap = temp_file("series_leap.csv");
    {
        std::ofstream out(leap);
        for (int i = 0; i < 8784; ++i) out << "1\n";
    }
    CHECK_THROWS_WITH_AS(load_profile_csv(leap.string()), doctest::Contains("truncate"),
                         std::runtime_error);
}

TEST_CASE("csv write then load is the identity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 1e4);
    std::vector<double> v(kHoursPerYear);
    for (double& x : v) x = dist(rng);
    HourlySeries original{std::move(v)};

    auto p = temp_file("series_roundtrip.csv");
    write_profile_csv(p.string(), original);
    HourlySeries reloaded = load_profile_csv(p.string());
    for (std::size_t t = 0; t < kHoursPerYear; ++t) {
        CHECK(reloaded[t] == original[t]);
    }
}
