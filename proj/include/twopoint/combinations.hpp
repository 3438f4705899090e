#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twopoint {

// Interval endpoints of two prospects; the enum order is the canonical priority.
enum class Symbol { Min1 = 0, Max1 = 1, Min2 = 2, Max2 = 3 };
enum class Relation { Less, Equal };
enum class IntervalClass { Disjoint, Adjacent, Overlapping, Point };

// Entry of the f1 column for outcome-interval patterns.
enum class IntervalVerdict { Zero, One, ZeroOrUndefined, OneOrUndefined, Undefined, Open };
// Entry of the f1 column once probabilities are also fixed.
enum class CellVerdict { Zero, One, Undefined, Open };

std::string_view to_string(Symbol s);
std::string_view to_string(IntervalClass c);
std::string_view to_string(IntervalVerdict v);
std::string_view to_string(CellVerdict v);

// Sorted endpoints joined by '<' or '='; runs of '=' are ordered by priority.
struct CanonicalCombination {
    std::array<Symbol, 4> ordering{};
    std::array<Relation, 3> relations{};

    std::string to_string() const;
    IntervalClass interval_class() const;
    // min1 not after max1 and min2 not after max2.
    bool admissible() const;

    friend bool operator==(const CanonicalCombination&, const CanonicalCombination&) = default;
};

CanonicalCombination canonicalize(std::array<Symbol, 4> ordering, std::array<Relation, 3> relations);

// Exchange the roles of prospect 1 and prospect 2, then re-canonicalize.
CanonicalCombination swap_indices(const CanonicalCombination& c);

struct Enumeration {
    std::size_t raw_count = 0;
    std::vector<CanonicalCombination> canonical;
    // Ordered by rendered string, which is the reference table's row order.
    std::vector<CanonicalCombination> admissible;
};

Enumeration enumerate_canonical_combinations();

struct IntervalRow {
    int row;
    std::string_view condition;
    IntervalClass cls;
    IntervalVerdict f1;
    int swap_partner;
};

struct ProbabilityRow {
    int row;
    std::string_view condition;
    int swap_partner;
};

struct DecisionRow {
    int row;
    int interval_row;
    int probability_row;
    CellVerdict f1;
};

const std::array<IntervalRow, 26>& interval_table();
const std::array<ProbabilityRow, 11>& probability_table();
const std::array<DecisionRow, 42>& decision_table();

// 1-based row of the interval table whose condition renders as `c`, if any.
std::optional<int> interval_row_of(const CanonicalCombination& c);

// Decision-table row for (interval_row, probability_row), if the pair is tabulated.
std::optional<int> decision_row_of(int interval_row, int probability_row);

}  // namespace twopoint
