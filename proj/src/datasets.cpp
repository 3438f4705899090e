#include "twopoint/datasets.hpp"

#include "twopoint/combinations.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twopoint {

namespace {

using std::nullopt;

struct RawExperiment {
    int id;
    double ap1, aq1, p1, ap2, aq2, p2;
    std::optional<double> f1;
    std::optional<int> voters;
    const char* source;
    int t2, t3;
    std::optional<int> t4;
    bool swapped;
};

// clang-format off
const RawExperiment kExperiments[] = {
    {1, 2500, 0, 0.33, 2400, 0, 0.34, 0.83, 72, "kahneman1979", 15, 10, std::nullopt, true},
    {2, 4000, 0, 0.80, 3000, 3000, 1, 0.20, 95, "kahneman1979", 8, 6, 25, false},
    {3, 4000, 0, 0.20, 3000, 0, 0.25, 0.65, 95, "kahneman1979", 15, 10, std::nullopt, true},
    {4, 6000, 0, 0.45, 3000, 0, 0.90, 0.14, 66, "kahneman1979", 15, 10, std::nullopt, true},
    {5, 6000, 0, 0.001, 3000, 0, 0.002, 0.73, 66, "kahneman1979", 15, 10, std::nullopt, true},
    {6, 0, -4000, 0.20, -3000, -3000, 1, 0.92, 95, "kahneman1979", 8, 6, 25, false},
    {7, 0, -4000, 0.80, 0, -3000, 0.75, 0.42, 95, "kahneman1979", 6, 11, 14, false},
    {8, 0, -6000, 0.55, 0, -3000, 0.10, 0.92, 66, "kahneman1979", 6, 11, 14, false},
    {9, 0, -6000, 0.999, 0, -3000, 0.998, 0.30, 66, "kahneman1979", 6, 11, 14, false},
    {10, 1000, 0, 0.50, 500, 500, 1, 0.16, 70, "kahneman1979", 8, 6, 25, false},
    {11, 0, -1000, 0.50, -500, -500, 1, 0.69, 68, "kahneman1979", 8, 6, 25, false},
    {12, 5000, 0, 0.001, 5, 5, 1, 0.72, 72, "kahneman1979", 8, 6, 25, false},
    {13, 0, -5000, 0.999, -5, -5, 1, 0.17, 72, "kahneman1979", 8, 6, 25, false},
    {14, 1260, 1260, 1, 3394, 0, 0.50, 0.78, 72, "kahneman1979", 22, 8, std::nullopt, true},
    {15, 1260, 0, 0.10, 3394, 0, 0.05, 0.33, 72, "kahneman1979", 13, 11, 35, false},
    {16, 9, 9, 1, 50, 0, 0.10, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {17, 21, 21, 1, 50, 0, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {18, 37, 37, 1, 50, 0, 0.90, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {19, -8, -8, 1, 0, -50, 0.90, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {20, -21, -21, 1, 0, -50, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {21, -39, -39, 1, 0, -50, 0.10, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {22, 14, 14, 1, 100, 0, 0.05, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {23, 25, 25, 1, 100, 0, 0.25, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {24, 36, 36, 1, 100, 0, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {25, 52, 52, 1, 100, 0, 0.75, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {26, 78, 78, 1, 100, 0, 0.95, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {27, -8, -8, 1, 0, -100, 0.95, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {28, -23.5, -23.5, 1, 0, -100, 0.75, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {29, -42, -42, 1, 0, -100, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {30, -63, -63, 1, 0, -100, 0.25, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {31, -84, -84, 1, 0, -100, 0.05, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {32, 10, 10, 1, 200, 0, 0.01, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {33, 20, 20, 1, 200, 0, 0.10, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {34, 76, 76, 1, 200, 0, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {35, 131, 131, 1, 200, 0, 0.90, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {36, 188, 188, 1, 200, 0, 0.99, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {37, -3, -3, 1, 0, -200, 0.99, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {38, -23, -23, 1, 0, -200, 0.90, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {39, -89, -89, 1, 0, -200, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {40, -155, -155, 1, 0, -200, 0.10, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {41, -190, -190, 1, 0, -200, 0.01, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {42, 12, 12, 1, 400, 0, 0.01, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {43, 377, 377, 1, 400, 0, 0.99, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {44, -14, -14, 1, 0, -400, 0.99, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {45, -380, -380, 1, 0, -400, 0.01, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {46, 59, 59, 1, 100, 50, 0.10, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {47, 71, 71, 1, 100, 50, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {48, 83, 83, 1, 100, 50, 0.90, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {49, -59, -59, 1, -50, -100, 0.90, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {50, -71, -71, 1, -50, -100, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {51, -85, -85, 1, -50, -100, 0.10, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {52, 64, 64, 1, 150, 50, 0.05, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {53, 72.5, 72.5, 1, 150, 50, 0.25, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {54, 86, 86, 1, 150, 50, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {55, 102, 102, 1, 150, 50, 0.75, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {56, 128, 128, 1, 150, 50, 0.95, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {57, -60, -60, 1, -50, -150, 0.95, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {58, -71, -71, 1, -50, -150, 0.75, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {59, -92, -92, 1, -50, -150, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {60, -113, -113, 1, -50, -150, 0.25, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {61, -132, -132, 1, -50, -150, 0.05, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {62, 118, 118, 1, 200, 100, 0.05, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {63, 130, 130, 1, 200, 100, 0.25, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {64, 141, 141, 1, 200, 100, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {65, 162, 162, 1, 200, 100, 0.75, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {66, 178, 178, 1, 200, 100, 0.95, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {67, -112, -112, 1, -100, -200, 0.95, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {68, -121, -121, 1, -100, -200, 0.75, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {69, -142, -142, 1, -100, -200, 0.50, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {70, -158, -158, 1, -100, -200, 0.25, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {71, -179, -179, 1, -100, -200, 0.05, std::nullopt, 25, "tversky1992", 22, 8, std::nullopt, true},
    {72, 100, -100, 0.65, 0, 0, 1, 0.50, std::nullopt, "williams1966", 8, 6, 25, false},
    {73, 0, -200, 0.20, -100, -100, 1, 0.50, std::nullopt, "williams1966", 8, 6, 25, false},
};

struct RawHistory {
    const char* date;
    int amount;
    int winners;
    bool starred;
};

// Newest first.
const RawHistory kHistory[] = {
    {"1/3/2014", 61, 1, false},
    {"12/17/2013", 648, 2, true},
    {"10/1/2013", 189, 1, false},
    {"7/26/2013", 19, 1, false},
    {"7/16/2013", 20, 1, false},
    {"7/5/2013", 80, 1, false},
    {"5/31/2013", 30, 1, false},
    {"5/17/2013", 198, 2, false},
    {"3/12/2013", 41, 1, false},
    {"2/19/2013", 26, 1, false},
    {"2/5/2013", 19, 1, false},
    {"1/25/2013", 89, 1, false},
    {"12/14/2012", 35, 1, false},
    {"11/27/2012", 50, 1, false},
    {"11/2/2012", 33, 1, false},
    {"10/16/2012", 61, 2, false},
    {"9/18/2012", 14, 1, false},
    {"9/11/2012", 120, 1, false},
    {"7/27/2012", 52, 1, false},
    {"7/3/2012", 85, 1, false},
    {"5/29/2012", 32, 1, false},
    {"5/15/2012", 25, 1, false},
    {"5/4/2012", 118, 1, false},
    {"3/30/2012", 656, 3, true},
    {"1/24/2012", 72, 1, false},
    {"12/27/2011", 208, 1, false},
    {"11/1/2011", 78, 1, false},
    {"9/30/2011", 113, 2, false},
    {"8/19/2011", 32, 1, false},
    {"8/5/2011", 99, 1, false},
    {"7/1/2011", 107, 1, false},
    {"5/27/2011", 35, 1, false},
    {"5/13/2011", 27, 1, false},
    {"5/3/2011", 51, 1, false},
    {"4/15/2011", 72, 1, false},
    {"3/25/2011", 319, 1, false},
    {"2/1/2011", 93, 2, false},
    {"1/4/2011", 380, 2, true},
    {"11/9/2010", 25, 1, false},
    {"10/29/2010", 141, 1, false},
    {"9/17/2010", 54, 1, false},
    {"8/27/2010", 135, 1, false},
    {"7/16/2010", 64, 1, false},
    {"6/22/2010", 26, 1, false},
    {"6/11/2010", 36, 1, false},
    {"5/28/2010", 12, 1, false},
    {"5/25/2010", 64, 1, false},
    {"5/4/2010", 266, 1, false},
    {"3/12/2010", 20, 1, false},
    {"3/5/2010", 134, 1, false},
    {"1/29/2010", 144, 1, false},
    {"12/22/2009", 165, 1, false},
    {"11/10/2009", 77, 2, false},
    {"10/16/2009", 200, 1, false},
    {"9/1/2009", 12, 1, false},
    {"8/28/2009", 336, 2, false},
    {"7/7/2009", 133, 1, false},
    {"5/29/2009", 35, 1, false},
    {"5/15/2009", 38, 2, false},
    {"5/1/2009", 227, 3, false},
    {"3/13/2009", 26, 1, false},
    {"3/3/2009", 216, 1, false},
    {"1/13/2009", 22, 1, false},
    {"1/2/2009", 47, 1, false},
    {"12/12/2008", 207, 1, false},
    {"10/21/2008", 42, 1, false},
    {"10/3/2008", 42, 1, false},
    {"9/16/2008", 15, 1, false},
    {"9/9/2008", 24, 1, false},
    {"8/29/2008", 133, 1, false},
    {"7/22/2008", 126, 1, false},
    {"6/13/2008", 57, 1, false},
    {"5/23/2008", 17, 2, false},
    {"5/16/2008", 196, 1, false},
    {"4/1/2008", 136, 1, false},
    {"2/22/2008", 275, 1, false},
    {"1/1/2008", 33, 1, false},
    {"12/18/2007", 163, 2, false},
    {"11/2/2007", 75, 1, false},
    {"10/5/2007", 27, 1, false},
    {"9/25/2007", 12, 1, false},
    {"9/21/2007", 61, 1, false},
    {"8/31/2007", 330, 4, false},
    {"7/6/2007", 128, 1, false},
    {"5/29/2007", 44, 1, false},
    {"5/11/2007", 113, 1, false},
    {"4/6/2007", 105, 1, false},
    {"3/6/2007", 390, 2, true},
    {"1/9/2007", 125, 1, false},
    {"12/1/2006", 40, 1, false},
    {"11/14/2006", 75, 1, false},
    {"10/17/2006", 55, 1, false},
    {"9/26/2006", 15, 1, false},
    {"9/19/2006", 12, 1, false},
    {"9/15/2006", 163, 1, false},
    {"8/1/2006", 31, 1, false},
    {"7/18/2006", 49, 1, false},
    {"6/27/2006", 24, 1, false},
    {"6/16/2006", 35, 1, false},
    {"6/2/2006", 47, 1, false},
    {"5/16/2006", 94, 1, false},
    {"4/18/2006", 265, 1, false},
    {"2/28/2006", 270, 1, false},
    {"1/6/2006", 15, 1, false},
    {"12/30/2005", 88, 1, false},
    {"11/29/2005", 35, 2, false},
    {"11/15/2005", 315, 1, false},
    {"9/16/2005", 258, 1, false},
    {"7/22/2005", 170, 1, false},
    {"6/3/2005", 106, 1, false},
    {"4/22/2005", 208, 1, false},
    {"3/1/2005", 115, 1, false},
    {"1/18/2005", 131, 1, false},
    {"12/3/2004", 25, 1, false},
    {"11/19/2004", 149, 1, false},
    {"10/1/2004", 106, 1, false},
    {"8/20/2004", 52, 1, false},
    {"7/27/2004", 10, 1, false},
    {"7/23/2004", 47, 1, false},
    {"7/2/2004", 294, 1, true},
    {"5/7/2004", 67, 1, false},
    {"4/9/2004", 109, 1, false},
    {"3/2/2004", 21, 1, false},
    {"2/20/2004", 239, 1, false},
    {"12/30/2003", 162, 1, false},
    {"11/11/2003", 70, 3, false},
    {"10/7/2003", 12, 1, false},
    {"9/30/2003", 150, 1, false},
    {"8/8/2003", 50, 1, false},
    {"7/11/2003", 34, 1, false},
    {"6/20/2003", 183, 1, false},
    {"4/25/2003", 46, 1, false},
    {"3/28/2003", 20, 1, false},
    {"3/14/2003", 43, 1, false},
    {"2/18/2003", 12, 1, false},
    {"2/11/2003", 128, 1, false},
    {"12/24/2002", 68, 1, false},
    {"11/19/2002", 16, 1, false},
    {"11/8/2002", 93, 1, false},
    {"9/27/2002", 37, 1, false},
    {"9/6/2002", 17, 1, false},
    {"8/27/2002", 108, 1, false},
    {"7/16/2002", 165, 1, false},
    {"5/24/2002", 12, 1, false},
    {"5/17/2002", 28, 1, false},
};

struct RawGrowth {
    const char* date;
    double jackpot;
};

const RawGrowth kGrowth[] = {
    {"3/27/2015", 15000000},
    {"3/31/2015", 20000000},
    {"4/3/2015", 25000000},
    {"4/7/2015", 30000000},
    {"4/10/2015", 39000000},
    {"4/14/2015", 47000000},
    {"4/17/2015", 55000000},
    {"4/21/2015", 65000000},
    {"4/24/2015", 74000000},
    {"4/28/2015", 85000000},
    {"5/1/2015", 96000000},
    {"5/5/2015", 110000000},
    {"5/8/2015", 126000000},
    {"5/12/2015", 140000000},
    {"5/15/2015", 159000000},
    {"5/19/2015", 173000000},
    {"5/22/2015", 194000000},
    {"5/26/2015", 214000000},
    {"5/29/2015", 233000000},
    {"6/2/2015", 260000000},
};

const PopulationEntry kCensus[] = {
    {"AR", 2966369},
    {"AZ", 6731484},
    {"CA", 38802500},
    {"CO", 5355866},
    {"CT", 3596677},
    {"DE", 935614},
    {"FL", 19893297},
    {"GA", 10097343},
    {"IA", 3107124},
    {"ID", 1634464},
    {"IL", 12880580},
    {"IN", 6596855},
    {"KS", 2904021},
    {"KY", 4413457},
    {"LA", 4649676},
    {"MA", 6745408},
    {"MD", 5976407},
    {"ME", 1330089},
    {"MI", 9909877},
    {"MN", 5458333},
    {"MO", 6063589},
    {"MT", 1023579},
    {"NC", 9943964},
    {"ND", 739482},
    {"NE", 1881503},
    {"NH", 87137},
    {"NJ", 8938175},
    {"NM", 2085572},
    {"NY", 19746227},
    {"OH", 11594163},
    {"OK", 3878051},
    {"OR", 3970239},
    {"PA", 12787209},
    {"RI", 1055173},
    {"SC", 4832482},
    {"SD", 853175},
    {"TN", 6549352},
    {"TX", 27695284},
    {"VA", 8326289},
    {"VT", 626562},
    {"WA", 7061530},
    {"WI", 5757564},
    {"WV", 1850326},
    {"WY", 584153},
    {"DC", 658893},
    {"VI", 106405},
};
// clang-format on

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

std::string strip_cr(std::string s)
{
    if (!s.empty() && s.back() == '\r')
        s.pop_back();
    return s;
}

template <class Row, class Parse>
std::vector<Row> read_csv(std::istream& in, const std::string& header, std::size_t columns, Parse parse)
{
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != header)
        throw std::invalid_argument("expected CSV header '" + header + "'");
    std::vector<Row> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty())
            continue;
        const auto cells = split_csv(line);
        if (cells.size() != columns)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(columns) + " columns");
        try {
            rows.push_back(parse(cells));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return rows;
}

int parse_int(const std::string& s)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

bool parse_bool(const std::string& s)
{
    if (s == "1" || s == "true")
        return true;
    if (s == "0" || s == "false")
        return false;
    throw std::invalid_argument("not a boolean: '" + s + "'");
}

}  // namespace

bool is_low_confidence(int experiment_id)
{
    return experiment_id == 14 || experiment_id == 15;
}

const std::vector<ExperimentRow>& load_experiments()
{
    static const std::vector<ExperimentRow> rows = [] {
        std::vector<ExperimentRow> out;
        for (const auto& r : kExperiments)
            out.push_back({r.id, Prospect(r.ap1, r.aq1, r.p1), Prospect(r.ap2, r.aq2, r.p2), r.f1,
                           r.voters, r.source, {r.t2, r.t3, r.t4, r.swapped},
                           is_low_confidence(r.id)});
        return out;
    }();
    return rows;
}

const std::vector<JackpotHistoryRow>& load_jackpot_history()
{
    static const std::vector<JackpotHistoryRow> rows = [] {
        std::vector<JackpotHistoryRow> out;
        for (const auto& r : kHistory)
            out.push_back({parse_date(r.date), double(r.amount), r.winners, r.starred});
        return out;
    }();
    return rows;
}

const std::vector<JackpotGrowthRow>& load_jackpot_growth_rows()
{
    static const std::vector<JackpotGrowthRow> rows = [] {
        std::vector<JackpotGrowthRow> out;
        const auto start = parse_date(kGrowth[0].date);
        for (const auto& r : kGrowth) {
            const auto d = parse_date(r.date);
            out.push_back({d, years_between(start, d), r.jackpot});
        }
        return out;
    }();
    return rows;
}

std::vector<JackpotPoint> load_jackpot_growth()
{
    std::vector<JackpotPoint> out;
    for (const auto& r : load_jackpot_growth_rows())
        out.push_back({r.t_years, r.jackpot});
    return out;
}

const std::vector<PopulationEntry>& census_population()
{
    static const std::vector<PopulationEntry> rows(std::begin(kCensus), std::end(kCensus));
    return rows;
}

std::int64_t total_population()
{
    std::int64_t sum = 0;
    for (const auto& e : census_population())
        sum += e.population;
    return sum;
}

std::int64_t adult_population(double factor)
{
    if (!(factor > 0.0 && factor <= 1.0))
        throw std::invalid_argument("adult share must lie in (0, 1]");
    return std::llround(factor * double(total_population()));
}

std::chrono::year_month_day parse_date(std::string_view text)
{
    const std::string s(text);
    auto fail = [&]() -> std::chrono::year_month_day {
        throw std::invalid_argument("unrecognised date '" + s + "'");
    };
    std::vector<std::string> parts;
    char sep = s.find('-') != std::string::npos ? '-' : '/';
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, sep))
        parts.push_back(part);
    if (parts.size() != 3)
        return fail();
    int y, m, d;
    try {
        if (sep == '-') {
            y = parse_int(parts[0]), m = parse_int(parts[1]), d = parse_int(parts[2]);
            if (parts[0].size() != 4)
                return fail();
        } else {
            m = parse_int(parts[0]), d = parse_int(parts[1]), y = parse_int(parts[2]);
            if (parts[2].size() != 4)
                return fail();
        }
    } catch (const std::invalid_argument&) {
        return fail();
    }
    const std::chrono::year_month_day ymd{std::chrono::year(y), std::chrono::month(unsigned(m)),
                                          std::chrono::day(unsigned(d))};
    if (m < 1 || d < 1 || !ymd.ok())
        return fail();
    return ymd;
}

std::string format_date(std::chrono::year_month_day date)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(date.year()), unsigned(date.month()),
                  unsigned(date.day()));
    return buf;
}

double years_between(std::chrono::year_month_day from, std::chrono::year_month_day to)
{
    const auto days = (std::chrono::sys_days(to) - std::chrono::sys_days(from)).count();
    return double(days) / 365.0;
}

void export_experiments_csv(std::ostream& out, const std::vector<ExperimentRow>& rows)
{
    out << "id,ap1,aq1,p1,ap2,aq2,p2,f1,voters,source,t2,t3,t4\n";
    for (const auto& r : rows) {
        out << r.id << ',' << format_number(r.prospect1.a_p()) << ',' << format_number(r.prospect1.a_q())
            << ',' << format_number(r.prospect1.p()) << ',' << format_number(r.prospect2.a_p()) << ','
            << format_number(r.prospect2.a_q()) << ',' << format_number(r.prospect2.p()) << ','
            << (r.f1_observed ? format_number(*r.f1_observed) : "") << ','
            << (r.voters ? std::to_string(*r.voters) : "") << ',' << r.source << ','
            << r.refs.table2_row << ',' << r.refs.table3_row << ',';
        if (r.refs.swapped)
            out << '*';
        else if (r.refs.table4_row)
            out << *r.refs.table4_row;
        out << '\n';
    }
}

std::vector<ExperimentRow> import_experiments_csv(std::istream& in)
{
    return read_csv<ExperimentRow>(
        in, "id,ap1,aq1,p1,ap2,aq2,p2,f1,voters,source,t2,t3,t4", 13, [](const auto& c) {
            ExperimentRow r;
            r.id = parse_int(c[0]);
            r.prospect1 = Prospect(parse_number(c[1]), parse_number(c[2]), parse_number(c[3]));
            r.prospect2 = Prospect(parse_number(c[4]), parse_number(c[5]), parse_number(c[6]));
            if (!c[7].empty())
                r.f1_observed = parse_number(c[7]);
            if (!c[8].empty())
                r.voters = parse_int(c[8]);
            r.source = c[9];
            r.refs.table2_row = parse_int(c[10]);
            r.refs.table3_row = parse_int(c[11]);
            if (c[12] == "*")
                r.refs.swapped = true;
            else if (!c[12].empty())
                r.refs.table4_row = parse_int(c[12]);
            r.low_confidence = is_low_confidence(r.id);
            return r;
        });
}

void export_growth_csv(std::ostream& out, const std::vector<JackpotGrowthRow>& rows)
{
    out << "date,t_years,jackpot\n";
    for (const auto& r : rows)
        out << format_date(r.date) << ',' << format_number(r.t_years) << ','
            << format_number(r.jackpot) << '\n';
}

std::vector<JackpotGrowthRow> import_growth_csv(std::istream& in)
{
    return read_csv<JackpotGrowthRow>(in, "date,t_years,jackpot", 3, [](const auto& c) {
        return JackpotGrowthRow{parse_date(c[0]), parse_number(c[1]), parse_number(c[2])};
    });
}

void export_history_csv(std::ostream& out, const std::vector<JackpotHistoryRow>& rows)
{
    out << "date,amount_millions,winners,starred\n";
    for (const auto& r : rows)
        out << format_date(r.date) << ',' << format_number(r.amount_millions) << ',' << r.winners
            << ',' << (r.starred ? 1 : 0) << '\n';
}

std::vector<JackpotHistoryRow> import_history_csv(std::istream& in)
{
    return read_csv<JackpotHistoryRow>(in, "date,amount_millions,winners,starred", 4, [](const auto& c) {
        JackpotHistoryRow r{parse_date(c[0]), parse_number(c[1]), parse_int(c[2]), parse_bool(c[3])};
        if (r.winners < 1)
            throw std::invalid_argument("winner count must be at least 1");
        return r;
    });
}

void export_census_csv(std::ostream& out, const std::vector<PopulationEntry>& rows)
{
    out << "region,population\n";
    for (const auto& r : rows)
        out << r.region << ',' << r.population << '\n';
}

void export_combination_tables_csv(std::ostream& table2, std::ostream& table3, std::ostream& table4)
{
    table2 << "row,condition,class,f1,swap_partner\n";
    for (const auto& r : interval_table())
        table2 << r.row << ',' << r.condition << ',' << to_string(r.cls) << ',' << to_string(r.f1) << ','
               << r.swap_partner << '\n';
    table3 << "row,condition,swap_partner\n";
    for (const auto& r : probability_table())
        table3 << r.row << ",\"" << r.condition << "\"," << r.swap_partner << '\n';
    table4 << "row,interval_row,probability_row,f1\n";
    for (const auto& r : decision_table())
        table4 << r.row << ',' << r.interval_row << ',' << r.probability_row << ',' << to_string(r.f1) << '\n';
}

std::vector<std::string> export_all(const std::string& directory)
{
    namespace fs = std::filesystem;
    const fs::path dir(directory);
    fs::create_directories(dir / "configs");
    std::vector<std::string> written;
    auto write = [&](const fs::path& p, auto&& body) {
        std::ofstream out(p, std::ios::binary);
        if (!out)
            throw std::invalid_argument("cannot write '" + p.string() + "'");
        body(out);
        written.push_back(p.string());
    };
    write(dir / "experiments.csv", [](std::ostream& o) { export_experiments_csv(o, load_experiments()); });
    write(dir / "jackpot_growth.csv", [](std::ostream& o) { export_growth_csv(o, load_jackpot_growth_rows()); });
    write(dir / "jackpot_history.csv", [](std::ostream& o) { export_history_csv(o, load_jackpot_history()); });
    write(dir / "census.csv", [](std::ostream& o) { export_census_csv(o, census_population()); });
    {
        std::ostringstream t2, t3, t4;
        export_combination_tables_csv(t2, t3, t4);
        write(dir / "table_intervals.csv", [&](std::ostream& o) { o << t2.str(); });
        write(dir / "table_probabilities.csv", [&](std::ostream& o) { o << t3.str(); });
        write(dir / "table_decisions.csv", [&](std::ostream& o) { o << t4.str(); });
    }
    for (const auto& name : builtin_config_names())
        write(dir / "configs" / (name + ".lottery"),
              [&](std::ostream& o) { o << format_config(builtin_config(name)); });
    return written;
}

}  // namespace twopoint
