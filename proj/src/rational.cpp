#include "dhj/rational.hpp"

#include <limits>
#include <stdexcept>

namespace dhj {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = trim(text.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw std::invalid_argument("not an exact rational (expected p/q): '" + std::string(text) + "'");
    BigInt p(std::string(num[0] == '+' ? num.substr(1) : num));
    BigInt q(std::string(den[0] == '+' ? den.substr(1) : den));
    if (q == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

std::string to_string(const BigInt& value)
{
    return value.get_str();
}

BigInt pow(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, long exponent)
{
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    Rational r(pow(BigInt(base.get_num()), e), pow(BigInt(base.get_den()), e));
    r.canonicalize();
    if (exponent < 0) {
        if (r == 0)
            throw std::domain_error("negative power of zero");
        r = 1 / r;
    }
    return r;
}

BigInt ceil(const Rational& value)
{
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return r;
}

BigInt floor(const Rational& value)
{
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return r;
}

std::uint64_t to_u64(const BigInt& value)
{
    if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64)
        throw std::overflow_error("value does not fit in 64 bits: " + value.get_str());
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, -1, sizeof(out), 0, 0, value.get_mpz_t());
    return out;
}

} // namespace dhj
