#include "twopoint/combinations.hpp"

#include <algorithm>

namespace twopoint {

std::string_view to_string(Symbol s)
{
    switch (s) {
    case Symbol::Min1: return "min1";
    case Symbol::Max1: return "max1";
    case Symbol::Min2: return "min2";
    case Symbol::Max2: return "max2";
    }
    return "?";
}

std::string_view to_string(IntervalClass c)
{
    switch (c) {
    case IntervalClass::Disjoint: return "disjoint";
    case IntervalClass::Adjacent: return "adjacent";
    case IntervalClass::Overlapping: return "overlapping";
    case IntervalClass::Point: return "point";
    }
    return "?";
}

std::string_view to_string(IntervalVerdict v)
{
    switch (v) {
    case IntervalVerdict::Zero: return "0";
    case IntervalVerdict::One: return "1";
    case IntervalVerdict::ZeroOrUndefined: return "0|undefined";
    case IntervalVerdict::OneOrUndefined: return "1|undefined";
    case IntervalVerdict::Undefined: return "undefined";
    case IntervalVerdict::Open: return "model";
    }
    return "?";
}

std::string_view to_string(CellVerdict v)
{
    switch (v) {
    case CellVerdict::Zero: return "0";
    case CellVerdict::One: return "1";
    case CellVerdict::Undefined: return "undefined";
    case CellVerdict::Open: return "model";
    }
    return "?";
}

namespace {

std::array<int, 4> run_index(const CanonicalCombination& c)
{
    std::array<int, 4> idx{};
    int run = 0;
    for (int i = 0; i < 4; ++i) {
        if (i > 0 && c.relations[i - 1] == Relation::Less)
            ++run;
        idx[static_cast<int>(c.ordering[i])] = run;
    }
    return idx;
}

Symbol partner(Symbol s) { return static_cast<Symbol>(static_cast<int>(s) ^ 2); }

}  // namespace

std::string CanonicalCombination::to_string() const
{
    std::string s(twopoint::to_string(ordering[0]));
    for (int i = 0; i < 3; ++i) {
        s += relations[i] == Relation::Less ? '<' : '=';
        s += twopoint::to_string(ordering[i + 1]);
    }
    return s;
}

IntervalClass CanonicalCombination::interval_class() const
{
    const auto idx = run_index(*this);
    const int min1 = idx[0], max1 = idx[1], min2 = idx[2], max2 = idx[3];
    if (min1 == max1 && max1 == min2 && min2 == max2)
        return IntervalClass::Point;
    if (max1 < min2 || max2 < min1)
        return IntervalClass::Disjoint;
    if (max1 == min2 || max2 == min1)
        return IntervalClass::Adjacent;
    return IntervalClass::Overlapping;
}

bool CanonicalCombination::admissible() const
{
    const auto idx = run_index(*this);
    return idx[0] <= idx[1] && idx[2] <= idx[3];
}

CanonicalCombination canonicalize(std::array<Symbol, 4> ordering, std::array<Relation, 3> relations)
{
    int start = 0;
    for (int i = 1; i <= 4; ++i) {
        if (i == 4 || relations[i - 1] == Relation::Less) {
            std::sort(ordering.begin() + start, ordering.begin() + i);
            start = i;
        }
    }
    return {ordering, relations};
}

CanonicalCombination swap_indices(const CanonicalCombination& c)
{
    auto ordering = c.ordering;
    for (auto& s : ordering)
        s = partner(s);
    return canonicalize(ordering, c.relations);
}

Enumeration enumerate_canonical_combinations()
{
    Enumeration e;
    std::array<Symbol, 4> perm{Symbol::Min1, Symbol::Max1, Symbol::Min2, Symbol::Max2};
    do {
        for (int mask = 0; mask < 8; ++mask) {
            std::array<Relation, 3> rel{};
            for (int i = 0; i < 3; ++i)
                rel[i] = (mask >> i) & 1 ? Relation::Equal : Relation::Less;
            ++e.raw_count;
            const auto c = canonicalize(perm, rel);
            if (std::find(e.canonical.begin(), e.canonical.end(), c) == e.canonical.end())
                e.canonical.push_back(c);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto& c : e.canonical)
        if (c.admissible())
            e.admissible.push_back(c);
    std::sort(e.admissible.begin(), e.admissible.end(),
              [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
    return e;
}

const std::array<IntervalRow, 26>& interval_table()
{
    using C = IntervalClass;
    using V = IntervalVerdict;
    static const std::array<IntervalRow, 26> rows{{
        {1, "min1<max1<min2<max2", C::Disjoint, V::Zero, 17},
        {2, "min1<max1<min2=max2", C::Disjoint, V::Zero, 18},
        {3, "min1<max1=min2<max2", C::Adjacent, V::ZeroOrUndefined, 24},
        {4, "min1<max1=min2=max2", C::Adjacent, V::ZeroOrUndefined, 23},
        {5, "min1<min2<max1<max2", C::Overlapping, V::Open, 21},
        {6, "min1<min2<max1=max2", C::Overlapping, V::Open, 20},
        {7, "min1<min2<max2<max1", C::Overlapping, V::Open, 19},
        {8, "min1<min2=max2<max1", C::Overlapping, V::Open, 22},
        {9, "min1=max1<min2<max2", C::Disjoint, V::Zero, 25},
        {10, "min1=max1<min2=max2", C::Disjoint, V::Zero, 26},
        {11, "min1=max1=min2<max2", C::Adjacent, V::ZeroOrUndefined, 16},
        {12, "min1=max1=min2=max2", C::Point, V::Undefined, 12},
        {13, "min1=min2<max1<max2", C::Overlapping, V::Open, 15},
        {14, "min1=min2<max1=max2", C::Overlapping, V::Open, 14},
        {15, "min1=min2<max2<max1", C::Overlapping, V::Open, 13},
        {16, "min1=min2=max2<max1", C::Adjacent, V::OneOrUndefined, 11},
        {17, "min2<max2<min1<max1", C::Disjoint, V::One, 1},
        {18, "min2<max2<min1=max1", C::Disjoint, V::One, 2},
        {19, "min2<min1<max1<max2", C::Overlapping, V::Open, 7},
        {20, "min2<min1<max1=max2", C::Overlapping, V::Open, 6},
        {21, "min2<min1<max2<max1", C::Overlapping, V::Open, 5},
        {22, "min2<min1=max1<max2", C::Overlapping, V::Open, 8},
        {23, "min2<min1=max1=max2", C::Adjacent, V::OneOrUndefined, 4},
        {24, "min2<min1=max2<max1", C::Adjacent, V::OneOrUndefined, 3},
        {25, "min2=max2<min1<max1", C::Disjoint, V::One, 9},
        {26, "min2=max2<min1=max1", C::Disjoint, V::One, 10},
    }};
    return rows;
}

const std::array<ProbabilityRow, 11>& probability_table()
{
    static const std::array<ProbabilityRow, 11> rows{{
        {1, "p1=0,p2=0", 1},
        {2, "p1=0<p2<1", 4},
        {3, "p1=0,p2=1", 7},
        {4, "0<p1<1,p2=0", 2},
        {5, "0<p1=p2<1", 5},
        {6, "0<p1<1,p2=1", 8},
        {7, "p1=1,p2=0", 3},
        {8, "p1=1,0<p2<1", 6},
        {9, "p1=1,p2=1", 9},
        {10, "0<p1<p2<1", 11},
        {11, "0<p2<p1<1", 10},
    }};
    return rows;
}

const std::array<DecisionRow, 42>& decision_table()
{
    static const std::array<DecisionRow, 42> rows = [] {
        constexpr int interval_rows[6] = {5, 6, 7, 8, 13, 14};
        constexpr int probability_rows[7] = {2, 4, 5, 6, 8, 10, 11};
        using V = CellVerdict;
        constexpr V Z = V::Zero, O = V::One, U = V::Undefined, Q = V::Open;
        constexpr V cells[6][7] = {
            {Z, Q, Z, Z, Q, Q, Q},
            {Z, Q, Z, Z, O, Z, Q},
            {Z, Q, Q, Q, O, Q, Q},
            {Z, Q, Q, Q, O, Q, Q},
            {Z, O, Z, Z, Q, Z, Q},
            {Z, O, U, Z, O, Z, O},
        };
        std::array<DecisionRow, 42> out{};
        int n = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 7; ++j, ++n)
                out[n] = {n + 1, interval_rows[i], probability_rows[j], cells[i][j]};
        return out;
    }();
    return rows;
}

std::optional<int> interval_row_of(const CanonicalCombination& c)
{
    const std::string s = c.to_string();
    for (const auto& r : interval_table())
        if (r.condition == s)
            return r.row;
    return std::nullopt;
}

std::optional<int> decision_row_of(int interval_row, int probability_row)
{
    for (const auto& r : decision_table())
        if (r.interval_row == interval_row && r.probability_row == probability_row)
            return r.row;
    return std::nullopt;
}

}  // namespace twopoint
