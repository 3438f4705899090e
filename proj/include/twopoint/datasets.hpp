#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twopoint/lottery.hpp"
#include "twopoint/prospect.hpp"

namespace twopoint {

struct TableRefs {
    int table2_row = 0;
    int table3_row = 0;
    std::optional<int> table4_row;
    // Looked up with the prospects' roles exchanged (printed as '*').
    bool swapped = false;

    friend bool operator==(const TableRefs&, const TableRefs&) = default;
};

struct ExperimentRow {
    int id = 0;
    Prospect prospect1{0, 0, 1};
    Prospect prospect2{0, 0, 1};
    std::optional<double> f1_observed;
    std::optional<int> voters;
    std::string source;
    TableRefs refs;
    bool low_confidence = false;

    friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

// Rows whose amounts are converted tour costs; to be weighted down.
bool is_low_confidence(int experiment_id);

struct JackpotHistoryRow {
    std::chrono::year_month_day date;
    double amount_millions = 0.0;
    int winners = 1;
    bool starred = false;

    friend bool operator==(const JackpotHistoryRow&, const JackpotHistoryRow&) = default;
};

struct JackpotGrowthRow {
    std::chrono::year_month_day date;
    double t_years = 0.0;
    double jackpot = 0.0;

    friend bool operator==(const JackpotGrowthRow&, const JackpotGrowthRow&) = default;
};

struct PopulationEntry {
    std::string region;
    std::int64_t population;
};

const std::vector<ExperimentRow>& load_experiments();
const std::vector<JackpotHistoryRow>& load_jackpot_history();
const std::vector<JackpotGrowthRow>& load_jackpot_growth_rows();
std::vector<JackpotPoint> load_jackpot_growth();
const std::vector<PopulationEntry>& census_population();

inline constexpr double kAdultShare = 0.76;
std::int64_t total_population();
// round(factor * total_population())
std::int64_t adult_population(double factor = kAdultShare);

// "2015-03-27" or "3/27/2015".
std::chrono::year_month_day parse_date(std::string_view text);
std::string format_date(std::chrono::year_month_day date);
// Days between the dates over a 365-day year.
double years_between(std::chrono::year_month_day from, std::chrono::year_month_day to);

void export_experiments_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> import_experiments_csv(std::istream& in);
void export_growth_csv(std::ostream& out, const std::vector<JackpotGrowthRow>& rows);
std::vector<JackpotGrowthRow> import_growth_csv(std::istream& in);
void export_history_csv(std::ostream& out, const std::vector<JackpotHistoryRow>& rows);
std::vector<JackpotHistoryRow> import_history_csv(std::istream& in);
void export_census_csv(std::ostream& out, const std::vector<PopulationEntry>& rows);

// Interval, probability and decision tables.
void export_combination_tables_csv(std::ostream& table2, std::ostream& table3, std::ostream& table4);

// Writes every dataset and table as CSV plus configs/<name>.lottery; returns the paths written.
std::vector<std::string> export_all(const std::string& directory);

}  // namespace twopoint
