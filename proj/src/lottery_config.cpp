#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "twopoint/lottery.hpp"

namespace twopoint {

namespace {

constexpr const char* kFormatTag = "lottery-config/1";

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        out.push_back(trim(item));
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

int parse_int(const std::string& s)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (used != s.size())
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

MatchVector parse_match(const std::string& s)
{
    MatchVector m;
    for (const auto& part : split(s, ','))
        m.push_back(parse_int(part));
    return m;
}

std::string format_match(const MatchVector& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(m[i]);
    }
    return s;
}

Prize prize(MatchVector m, double amount, bool taxable = false)
{
    return Prize{std::move(m), amount, false, taxable};
}

Prize jackpot_prize(MatchVector m)
{
    return Prize{std::move(m), 0.0, true, false};
}

}  // namespace

void LotteryConfig::validate() const
{
    if (name.empty() || name.find_first_of("#\n\r") != std::string::npos)
        throw std::invalid_argument("lottery name must be non-empty without '#' or newlines");
    if (!(price >= 0.0) || !std::isfinite(price))
        throw std::invalid_argument("ticket price must be finite and non-negative");
    if (fields.empty())
        throw std::invalid_argument("lottery needs at least one field");
    for (const auto& f : fields)
        if (f.picked < 1 || f.picked > f.total)
            throw std::invalid_argument("field must satisfy 1 <= picked <= total");
    int jackpots = 0;
    std::set<MatchVector> seen;
    for (const auto& p : prizes) {
        if (p.match.size() != fields.size())
            throw std::invalid_argument("prize match vector length differs from field count");
        for (std::size_t i = 0; i < fields.size(); ++i)
            if (p.match[i] < 0 || p.match[i] > fields[i].picked)
                throw std::invalid_argument("prize match count out of range");
        if (!seen.insert(p.match).second)
            throw std::invalid_argument("duplicate prize tier " + format_match(p.match));
        if (!std::isfinite(p.amount))
            throw std::invalid_argument("prize amount must be finite");
        jackpots += p.jackpot;
    }
    if (jackpots != 1)
        throw std::invalid_argument("exactly one jackpot tier required");
}

const Prize& LotteryConfig::jackpot() const
{
    const auto it = std::find_if(prizes.begin(), prizes.end(), [](const Prize& p) { return p.jackpot; });
    if (it == prizes.end())
        throw std::invalid_argument("config has no jackpot tier");
    return *it;
}

std::vector<std::string> builtin_config_names()
{
    return {"megamillions-2013", "megamillions-2002", "megamillions-2005", "powerball"};
}

LotteryConfig builtin_config(const std::string& name)
{
    LotteryConfig c;
    c.name = name;
    if (name == "megamillions-2013") {
        c.price = 1.0;
        c.fields = {{75, 5}, {15, 1}};
        c.prizes = {jackpot_prize({5, 1}), prize({5, 0}, 1000000, true), prize({4, 1}, 5000, true),
                    prize({4, 0}, 500),    prize({3, 1}, 50),          prize({3, 0}, 5),
                    prize({2, 1}, 5),      prize({1, 1}, 2),           prize({0, 1}, 1)};
    } else if (name == "megamillions-2002" || name == "megamillions-2005") {
        c.price = 1.0;
        c.fields = name == "megamillions-2002" ? std::vector<FieldSpec>{{52, 5}, {52, 1}}
                                               : std::vector<FieldSpec>{{56, 5}, {46, 1}};
        c.prizes = {jackpot_prize({5, 1}), prize({5, 0}, 250000, true), prize({4, 1}, 10000, true),
                    prize({4, 0}, 150),    prize({3, 1}, 150),         prize({3, 0}, 7),
                    prize({2, 1}, 10),     prize({1, 1}, 3),           prize({0, 1}, 2)};
    } else if (name == "powerball") {
        c.price = 2.0;
        c.fields = {{59, 5}, {35, 1}};
        c.prizes = {jackpot_prize({5, 1}), prize({5, 0}, 1000000, true), prize({4, 1}, 10000, true),
                    prize({4, 0}, 100),    prize({3, 1}, 100),          prize({3, 0}, 7),
                    prize({2, 1}, 7),      prize({1, 1}, 4),            prize({0, 1}, 4)};
    } else {
        throw std::invalid_argument("unknown lottery '" + name + "'");
    }
    return c;
}

std::string format_config(const LotteryConfig& config)
{
    config.validate();
    std::ostringstream out;
    out << "format = " << kFormatTag << '\n';
    out << "name = " << config.name << '\n';
    out << "price = " << format_number(config.price) << '\n';
    out << "fields = ";
    for (std::size_t i = 0; i < config.fields.size(); ++i)
        out << (i ? ", " : "") << config.fields[i].total << '/' << config.fields[i].picked;
    out << "\n[prizes]\n";
    for (const auto& p : config.prizes) {
        out << format_match(p.match) << ' ';
        if (p.jackpot)
            out << "jackpot";
        else
            out << format_number(p.amount);
        if (p.taxable)
            out << " taxable";
        out << '\n';
    }
    return out.str();
}

LotteryConfig parse_config(const std::string& text)
{
    LotteryConfig c;
    bool have_format = false, have_name = false, have_price = false, have_fields = false;
    bool in_prizes = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (line == "[prizes]") {
            in_prizes = true;
            continue;
        }
        if (!in_prizes) {
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument(where + "expected key = value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key == "format") {
                if (value != kFormatTag)
                    throw std::invalid_argument(where + "unsupported format '" + value + "'");
                have_format = true;
            } else if (key == "name") {
                c.name = value;
                have_name = true;
            } else if (key == "price") {
                c.price = parse_number(value);
                have_price = true;
            } else if (key == "fields") {
                for (const auto& f : split(value, ',')) {
                    const auto slash = f.find('/');
                    if (slash == std::string::npos)
                        throw std::invalid_argument(where + "field must be total/picked");
                    c.fields.push_back({parse_int(trim(f.substr(0, slash))),
                                        parse_int(trim(f.substr(slash + 1)))});
                }
                have_fields = true;
            } else {
                throw std::invalid_argument(where + "unknown key '" + key + "'");
            }
            continue;
        }
        std::istringstream words(line);
        std::string match, amount, flag, extra;
        words >> match >> amount >> flag >> extra;
        if (amount.empty() || !extra.empty() || (!flag.empty() && flag != "taxable"))
            throw std::invalid_argument(where + "expected '<match> <amount|jackpot> [taxable]'");
        Prize p;
        p.match = parse_match(match);
        p.taxable = !flag.empty();
        if (amount == "jackpot")
            p.jackpot = true;
        else
            p.amount = parse_number(amount);
        c.prizes.push_back(std::move(p));
    }
    if (!have_format || !have_name || !have_price || !have_fields)
        throw std::invalid_argument("config must define format, name, price and fields");
    c.validate();
    return c;
}

LotteryConfig load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open lottery config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace twopoint
