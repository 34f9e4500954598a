#include "dhj/oracle_table.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace dhj {

std::string dhj_key(int k, const Rational& delta)
{
    return "dhj(" + std::to_string(k) + ", " + to_string(delta) + ")";
}

std::string mdhj_key(int k, const BigQuantity& m, const Rational& delta)
{
    return "mdhj(" + std::to_string(k) + ", " + m.operand() + ", " + to_string(delta) + ")";
}

std::string mdhj_star_key(int k, const BigQuantity& m, const Rational& delta)
{
    return "mdhj*(" + std::to_string(k) + ", " + m.operand() + ", " + to_string(delta) + ")";
}

std::string gr_key(int k, const BigQuantity& m)
{
    return "gr(" + std::to_string(k) + ", " + m.operand() + ")";
}

void OracleTable::set_dhj(int k, const Rational& delta, const BigInt& value)
{
    dhj_[{k, 1, delta}] = value;
}

void OracleTable::set_mdhj(int k, int m, const Rational& delta, const BigInt& value)
{
    mdhj_[{k, m, delta}] = value;
}

void OracleTable::set_mdhj_star(int k, int m, const Rational& delta, const BigInt& value)
{
    mdhj_star_[{k, m, delta}] = value;
}

void OracleTable::set_gr(int k, int m, const BigInt& value)
{
    gr_[{k, m}] = value;
}

void OracleTable::set_dhj_default(int k, const BigInt& value)
{
    dhj_default_[k] = value;
}

void OracleTable::set_gr_rule(int k, std::function<BigQuantity(const BigQuantity&)> rule)
{
    gr_rule_[k] = std::move(rule);
}

std::optional<BigInt> OracleTable::dhj(int k, const Rational& delta) const
{
    auto it = dhj_.find({k, 1, delta});
    if (it != dhj_.end())
        return it->second;
    auto d = dhj_default_.find(k);
    if (d != dhj_default_.end())
        return d->second;
    return std::nullopt;
}

std::optional<BigInt> OracleTable::mdhj(int k, int m, const Rational& delta) const
{
    auto it = mdhj_.find({k, m, delta});
    if (it == mdhj_.end())
        return std::nullopt;
    return it->second;
}

std::optional<BigInt> OracleTable::mdhj_star(int k, int m, const Rational& delta) const
{
    auto it = mdhj_star_.find({k, m, delta});
    if (it == mdhj_star_.end())
        return std::nullopt;
    return it->second;
}

std::optional<BigQuantity> OracleTable::gr(int k, const BigQuantity& m) const
{
    if (m.is_exact() && m.is_integer() && m.integer().fits_sint_p()) {
        auto it = gr_.find({k, static_cast<int>(m.integer().get_si())});
        if (it != gr_.end())
            return BigQuantity(Rational(it->second));
    }
    auto r = gr_rule_.find(k);
    if (r != gr_rule_.end())
        return r->second(m);
    return std::nullopt;
}

std::optional<BigInt> OracleTable::dhj_constant(int k) const
{
    for (const auto& [key, value] : dhj_)
        if (key.k == k)
            return std::nullopt;
    auto d = dhj_default_.find(k);
    if (d == dhj_default_.end())
        return std::nullopt;
    return d->second;
}

BigInt OracleTable::require_dhj(int k, const Rational& delta) const
{
    auto v = dhj(k, delta);
    if (!v)
        throw MissingOracleValue(dhj_key(k, delta));
    return *v;
}

bool OracleTable::empty() const
{
    return dhj_.empty() && mdhj_.empty() && mdhj_star_.empty() && gr_.empty() && dhj_default_.empty() &&
           gr_rule_.empty();
}

namespace {

int parse_int(const std::string& s, int lineno)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size())
        throw std::invalid_argument("oracle table line " + std::to_string(lineno) + ": bad integer '" + s + "'");
    return v;
}

BigInt parse_value(const std::string& s, int lineno)
{
    Rational r = parse_rational(s);
    if (r.get_den() != 1 || r < 1)
        throw std::invalid_argument("oracle table line " + std::to_string(lineno) + ": value must be a positive integer");
    return BigInt(r.get_num());
}

} // namespace

OracleTable OracleTable::parse(std::istream& in)
{
    OracleTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto eq = line.find('=');
        std::istringstream lhs(line.substr(0, eq));
        std::vector<std::string> tok;
        for (std::string s; lhs >> s;)
            tok.push_back(s);
        if (tok.empty() && eq == std::string::npos)
            continue;
        if (eq == std::string::npos || tok.empty())
            throw std::invalid_argument("oracle table line " + std::to_string(lineno) + ": expected '<name> <args> = <value>'");
        std::string rhs = line.substr(eq + 1);
        std::istringstream rs(rhs);
        std::string value_text, extra;
        if (!(rs >> value_text) || (rs >> extra))
            throw std::invalid_argument("oracle table line " + std::to_string(lineno) + ": expected one value");
        BigInt value = parse_value(value_text, lineno);
        const std::string& name = tok[0];
        auto need = [&](std::size_t args) {
            if (tok.size() != args + 1)
                throw std::invalid_argument("oracle table line " + std::to_string(lineno) + ": '" + name + "' takes " +
                                            std::to_string(args) + " arguments");
        };
        if (name == "dhj") {
            need(2);
            int k = parse_int(tok[1], lineno);
            if (tok[2] == "*")
                t.set_dhj_default(k, value);
            else
                t.set_dhj(k, parse_rational(tok[2]), value);
        } else if (name == "mdhj") {
            need(3);
            t.set_mdhj(parse_int(tok[1], lineno), parse_int(tok[2], lineno), parse_rational(tok[3]), value);
        } else if (name == "mdhj*") {
            need(3);
            t.set_mdhj_star(parse_int(tok[1], lineno), parse_int(tok[2], lineno), parse_rational(tok[3]), value);
        } else if (name == "gr") {
            need(2);
            t.set_gr(parse_int(tok[1], lineno), parse_int(tok[2], lineno), value);
        } else {
            throw std::invalid_argument("oracle table line " + std::to_string(lineno) + ": unknown entry '" + name + "'");
        }
    }
    return t;
}

OracleTable OracleTable::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open oracle table: " + path);
    return parse(in);
}

} // namespace dhj
