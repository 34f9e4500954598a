#include "dhj/params.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace dhj {

bool ParameterOverrides::empty() const
{
    return names().empty();
}

std::vector<std::string> ParameterOverrides::names() const
{
    std::vector<std::string> out;
    if (m0)
        out.push_back("m0");
    if (theta)
        out.push_back("theta");
    if (eta)
        out.push_back("eta");
    if (gamma)
        out.push_back("gamma");
    if (M0)
        out.push_back("M0");
    if (beta)
        out.push_back("beta");
    if (!gr.empty())
        out.push_back("gr");
    if (!M1.empty())
        out.push_back("M1");
    if (!F.empty())
        out.push_back("F");
    if (!block.empty())
        out.push_back("block");
    if (!lift.empty())
        out.push_back("lift");
    return out;
}

namespace {

int to_int(const std::string& s, int lineno)
{
    Rational r = parse_rational(s);
    if (r.get_den() != 1 || !r.get_num().fits_sint_p() || r < 0)
        throw std::invalid_argument("parameter line " + std::to_string(lineno) + ": expected a non-negative integer, got '" + s + "'");
    return static_cast<int>(r.get_num().get_si());
}

} // namespace

ParameterOverrides parse_overrides(std::istream& in)
{
    ParameterOverrides o;
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
            throw std::invalid_argument("parameter line " + std::to_string(lineno) + ": expected 'name [arg] = value'");
        std::istringstream rs(line.substr(eq + 1));
        std::string value, extra;
        if (!(rs >> value) || (rs >> extra))
            throw std::invalid_argument("parameter line " + std::to_string(lineno) + ": expected one value");
        const std::string& name = tok[0];
        bool keyed = name == "gr" || name == "M1" || name == "F" || name == "block" || name == "lift";
        if (tok.size() != (keyed ? 2u : 1u))
            throw std::invalid_argument("parameter line " + std::to_string(lineno) + ": wrong arity for '" + name + "'");
        if (name == "m0")
            o.m0 = to_int(value, lineno);
        else if (name == "theta")
            o.theta = parse_rational(value);
        else if (name == "eta")
            o.eta = parse_rational(value);
        else if (name == "gamma")
            o.gamma = parse_rational(value);
        else if (name == "M0")
            o.M0 = to_int(value, lineno);
        else if (name == "beta")
            o.beta = parse_rational(value);
        else if (name == "gr")
            o.gr[to_int(tok[1], lineno)] = to_int(value, lineno);
        else if (name == "M1")
            o.M1[to_int(tok[1], lineno)] = to_int(value, lineno);
        else if (name == "F")
            o.F[to_int(tok[1], lineno)] = to_int(value, lineno);
        else if (name == "block")
            o.block[to_int(tok[1], lineno)] = to_int(value, lineno);
        else if (name == "lift")
            o.lift[to_int(tok[1], lineno)] = to_int(value, lineno);
        else
            throw std::invalid_argument("parameter line " + std::to_string(lineno) + ": unknown parameter '" + name + "'");
    }
    return o;
}

ParameterOverrides load_overrides(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open parameter file: " + path);
    return parse_overrides(in);
}

int least_lambda_power(int k, const Rational& eta)
{
    if (eta <= 0)
        throw std::invalid_argument("eta must be positive");
    // lambda^t >= 1/eta  <=>  (k+1)^t * num(eta) >= k^t * den(eta)
    BigInt num(eta.get_num()), den(eta.get_den());
    BigInt a = 1, b = 1;
    int t = 0;
    while (a * num < b * den) {
        a *= k + 1;
        b *= k;
        ++t;
    }
    return t;
}

ProofParameters ProofParameters::build(int k, const Rational& delta, int m0, const ParameterOverrides& over)
{
    if (k < 2)
        throw std::invalid_argument("proof parameters need k >= 2");
    if (delta <= 0 || delta > 1)
        throw std::invalid_argument("proof parameters need 0 < delta <= 1");
    ProofParameters p;
    p.k = k;
    p.delta = delta;
    p.m0 = over.m0.value_or(m0);
    if (p.m0 < 1)
        throw std::invalid_argument("m0 must be >= 1");
    BigInt lines = pow(BigInt(k + 1), p.m0) - pow(BigInt(k), p.m0);
    p.theta = over.theta.value_or(Rational(delta / 4) / Rational(lines));
    p.eta = over.eta.value_or(Rational(delta * p.theta / 48));
    p.gamma = over.gamma.value_or(Rational(delta * p.eta * p.eta / k));
    p.lambda = Rational(k + 1, k);
    p.lambda.canonicalize();
    p.M0 = over.M0.value_or(std::max(p.m0, least_lambda_power(k, p.eta)));
    for (const auto& name : over.names())
        if (name == "m0" || name == "theta" || name == "eta" || name == "gamma" || name == "M0")
            p.overridden.push_back(name);
    p.toy = !p.overridden.empty();
    if (p.theta <= 0 || p.eta <= 0 || p.gamma <= 0)
        throw std::invalid_argument("theta, eta and gamma must be positive");
    if (!p.toy) {
        if (!(p.theta * lines == delta / 4))
            throw std::logic_error("internal check failed: theta does not invert its definition");
        if (!p.margins_hold())
            throw std::logic_error("internal check failed: eta < theta/2 or eta^2/2 >= gamma fails");
    }
    return p;
}

Rational ProofParameters::beta() const
{
    Rational b = gamma * gamma / (4 * k);
    b.canonicalize();
    return b;
}

bool ProofParameters::margins_hold() const
{
    return eta < theta / 2 && eta * eta / 2 >= gamma;
}

TilingParameters TilingParameters::make(int k, const Rational& beta, int m, int M1)
{
    if (beta <= 0 || beta > 1)
        throw std::invalid_argument("tiling needs 0 < beta <= 1");
    if (m < 1 || M1 < m)
        throw std::invalid_argument("tiling needs 1 <= m <= M1");
    TilingParameters t;
    t.k = k;
    t.beta = beta;
    t.m = m;
    t.M1 = M1;
    t.Theta = beta / Rational(pow(BigInt(k + 1 + m), M1)) / Rational(pow(BigInt(k + 1), M1 - m));
    t.Theta.canonicalize();
    return t;
}

TilingParameters TilingPlan::at(int m) const
{
    auto it = M1.find(m);
    if (it == M1.end())
        throw std::out_of_range("tiling plan has no block dimension M1 for m = " + std::to_string(m));
    return TilingParameters::make(k, beta, m, it->second);
}

int TilingPlan::F_of(int m) const
{
    auto it = F.find(m);
    if (it == F.end())
        throw std::out_of_range("tiling plan has no value F(" + std::to_string(m) + ")");
    return it->second;
}

int TilingPlan::F_iter(int r, int m) const
{
    for (int i = 0; i < r; ++i)
        m = F_of(m);
    return m;
}

} // namespace dhj
