#include "dhj/big_quantity.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>

namespace dhj {

namespace {

std::atomic<std::size_t> g_digit_cap{20000};

constexpr double kHuge = 1e300;
constexpr double kLevel = 300.0;
const double kLevelLog = std::log10(kLevel);

// Canonical ranges: height 0 holds |top| <= 1e300; height 1 holds
// top >= 300 (huge) or top <= -300 (tiny); height h >= 2 holds
// top in [log10 300, 1e300]. Heights >= 1 describe positive values.
Magnitude normalize(Magnitude m)
{
    for (;;) {
        if (!std::isfinite(m.top))
            throw std::overflow_error("magnitude estimate left the representable range");
        if (m.height == 0 && std::fabs(m.top) > kHuge) {
            if (m.top < 0)
                throw std::overflow_error("magnitude estimate of a huge negative value");
            m = {1, std::log10(m.top)};
        } else if (m.height >= 1 && m.top > kHuge) {
            m = {m.height + 1, std::log10(m.top)};
        } else if (m.height == 1 && m.top > -kLevel && m.top < kLevel) {
            m = {0, std::pow(10.0, m.top)};
        } else if (m.height >= 2 && m.top < kLevelLog) {
            m = {m.height - 1, std::pow(10.0, m.top)};
        } else {
            return m;
        }
    }
}

// Signed log10 of a positive magnitude.
Magnitude log10m(const Magnitude& m)
{
    if (m.height == 0) {
        if (m.top <= 0)
            throw std::domain_error("logarithm of a non-positive magnitude");
        return {0, std::log10(m.top)};
    }
    return normalize({m.height - 1, m.top});
}

Magnitude exp10m(const Magnitude& m)
{
    if (m.height == 0) {
        if (m.top < kLevel && m.top > -kLevel)
            return {0, std::pow(10.0, m.top)};
        if (m.top <= -kHuge)
            throw std::underflow_error("magnitude estimate below the representable range");
        return normalize({1, m.top});
    }
    return normalize({m.height + 1, m.top});
}

bool is_tiny(const Magnitude& m) { return m.height == 1 && m.top < 0; }

// Ordering key: compares positive magnitudes; ties within relative 1e-9 are
// reported as undecidable.
int cmp_mag(const Magnitude& a, const Magnitude& b)
{
    auto rank = [](const Magnitude& m) { return is_tiny(m) ? -1 : m.height; };
    int ra = rank(a), rb = rank(b);
    if (ra != rb)
        return ra < rb ? -1 : 1;
    double scale = std::max({1.0, std::fabs(a.top), std::fabs(b.top)});
    if (std::fabs(a.top - b.top) <= 1e-9 * scale)
        return 0;
    return a.top < b.top ? -1 : 1;
}

// Signed sum of two log-type magnitudes (heights >= 1 must be positive).
Magnitude add_signed(const Magnitude& a, const Magnitude& b)
{
    if (a.height == 0 && b.height == 0)
        return normalize({0, a.top + b.top});
    const Magnitude& hi = cmp_mag(a, b) >= 0 ? a : b;
    return hi;
}

Magnitude mul_mag(const Magnitude& a, const Magnitude& b)
{
    if (a.height == 0 && b.height == 0) {
        double p = a.top * b.top;
        if (std::isfinite(p) && std::fabs(p) <= kHuge && (p == 0 || std::fabs(p) >= 1e-300))
            return normalize({0, p});
    }
    if ((a.height == 0 && a.top < 0) || (b.height == 0 && b.top < 0))
        throw std::domain_error("magnitude estimate of a negative huge product");
    if ((a.height == 0 && a.top == 0) || (b.height == 0 && b.top == 0))
        return {0, 0.0};
    return exp10m(add_signed(log10m(a), log10m(b)));
}

Magnitude add_mag(const Magnitude& a, const Magnitude& b)
{
    if (a.height == 0 && b.height == 0)
        return normalize({0, a.top + b.top});
    if (is_tiny(a))
        return b;
    if (is_tiny(b))
        return a;
    Magnitude la = log10m(a), lb = log10m(b);
    if (la.height == 0 && lb.height == 0) {
        double hi = std::max(la.top, lb.top), lo = std::min(la.top, lb.top);
        return exp10m({0, hi + std::log10(1.0 + std::pow(10.0, lo - hi))});
    }
    return cmp_mag(a, b) >= 0 ? a : b;
}

Magnitude inverse_mag(const Magnitude& m)
{
    if (m.height == 0) {
        if (m.top == 0)
            throw std::domain_error("division by zero");
        return normalize({0, 1.0 / m.top});
    }
    if (m.height == 1)
        return normalize({1, -m.top});
    throw std::domain_error("reciprocal of a tower beyond height 1 is not representable");
}

std::size_t digits_of(const BigInt& v)
{
    return mpz_sizeinbase(v.get_mpz_t(), 10);
}

std::size_t digits_of(const Rational& v)
{
    return digits_of(BigInt(v.get_num())) + digits_of(BigInt(v.get_den()));
}

double log10_abs(const BigInt& v)
{
    if (v == 0)
        return -std::numeric_limits<double>::infinity();
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log10(std::fabs(mant)) + static_cast<double>(exp) * std::log10(2.0);
}

std::string wrap(const std::string& s)
{
    for (char c : s)
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == ' ')
            return "(" + s + ")";
    return s;
}

} // namespace

std::size_t materialize_digit_cap()
{
    return g_digit_cap.load();
}

void set_materialize_digit_cap(std::size_t digits)
{
    g_digit_cap.store(digits);
}

Magnitude magnitude_of(const Rational& value)
{
    if (value == 0)
        return {0, 0.0};
    double l = log10_abs(BigInt(value.get_num())) - log10_abs(BigInt(value.get_den()));
    if (l < kLevel && l > -kLevel)
        return {0, value.get_d()};
    if (value < 0)
        throw std::overflow_error("magnitude estimate of a huge negative value");
    return normalize({1, l});
}

BigQuantity::BigQuantity(const Rational& value)
  : exact_(value), magnitude_(magnitude_of(value))
{
}

BigQuantity BigQuantity::symbolic(std::string expression, Magnitude magnitude)
{
    BigQuantity q;
    q.expression_ = std::move(expression);
    q.magnitude_ = normalize(magnitude);
    q.integral_ = true;
    return q;
}

const Rational& BigQuantity::value() const
{
    if (!exact_)
        throw std::logic_error("quantity " + expression_ + " is too large to materialize");
    return *exact_;
}

BigInt BigQuantity::integer() const
{
    const Rational& v = value();
    if (v.get_den() != 1)
        throw std::logic_error("quantity " + to_string(v) + " is not an integer");
    return BigInt(v.get_num());
}

bool BigQuantity::is_integral() const
{
    return exact_ ? exact_->get_den() == 1 : integral_;
}

std::string BigQuantity::operand() const
{
    if (!label_.empty())
        return label_;
    if (exact_ && digits_of(*exact_) <= 48)
        return wrap(to_string(*exact_));
    if (!expression_.empty())
        return "(" + expression_ + ")";
    return wrap(to_string(*exact_));
}

std::string BigQuantity::expression() const
{
    return exact_ ? to_string(*exact_) : expression_;
}

std::string BigQuantity::formula() const
{
    return expression_.empty() ? expression() : expression_;
}

std::string BigQuantity::preview() const
{
    if (exact_ && digits_of(*exact_) <= 30)
        return to_string(*exact_);
    char buf[64];
    const Magnitude& m = magnitude_;
    if (m.height == 0) {
        std::snprintf(buf, sizeof buf, "%.6g", m.top);
        return buf;
    }
    std::string out;
    for (int h = 0; h < m.height; ++h)
        out += "10^";
    std::snprintf(buf, sizeof buf, "%.6g", m.top);
    return out + buf;
}

BigQuantity& BigQuantity::label(std::string name)
{
    label_ = std::move(name);
    return *this;
}

namespace {

BigQuantity combine(const BigQuantity& a, const BigQuantity& b, const std::string& op, Magnitude mag,
                    bool integral)
{
    BigQuantity q = BigQuantity::symbolic(a.operand() + " " + op + " " + b.operand(), mag);
    q.set_integral(integral);
    return q;
}

BigQuantity with_formula(Rational v, std::string formula)
{
    BigQuantity q(v);
    q.set_formula(std::move(formula));
    return q;
}

} // namespace

void BigQuantity::set_integral(bool integral)
{
    integral_ = integral;
}

void BigQuantity::set_formula(std::string formula)
{
    expression_ = std::move(formula);
}

BigQuantity operator*(const BigQuantity& a, const BigQuantity& b)
{
    if (a.is_exact() && b.is_exact() &&
        digits_of(a.value()) + digits_of(b.value()) <= materialize_digit_cap())
        return with_formula(a.value() * b.value(), a.operand() + " * " + b.operand());
    return combine(a, b, "*", mul_mag(a.magnitude(), b.magnitude()), a.is_integral() && b.is_integral());
}

BigQuantity operator+(const BigQuantity& a, const BigQuantity& b)
{
    if (a.is_exact() && b.is_exact())
        return with_formula(a.value() + b.value(), a.operand() + " + " + b.operand());
    return combine(a, b, "+", add_mag(a.magnitude(), b.magnitude()), a.is_integral() && b.is_integral());
}

BigQuantity operator-(const BigQuantity& a, const BigQuantity& b)
{
    if (a.is_exact() && b.is_exact())
        return with_formula(a.value() - b.value(), a.operand() + " - " + b.operand());
    // Only the case of a far larger minuend is representable.
    Magnitude la = a.magnitude(), lb = b.magnitude();
    bool dominant = a.is_exact() ? false : (b.is_exact() || cmp_mag(log10m(la), log10m(lb)) > 0);
    if (!dominant || is_tiny(la))
        throw UndecidableComparison("cannot estimate " + a.operand() + " - " + b.operand());
    return combine(a, b, "-", la, a.is_integral() && b.is_integral());
}

BigQuantity operator/(const BigQuantity& a, const BigQuantity& b)
{
    if (b.is_exact() && b.value() == 0)
        throw std::domain_error("division by zero");
    if (a.is_exact() && b.is_exact() &&
        digits_of(a.value()) + digits_of(b.value()) <= materialize_digit_cap())
        return with_formula(a.value() / b.value(), a.operand() + " / " + b.operand());
    return combine(a, b, "/", mul_mag(a.magnitude(), inverse_mag(b.magnitude())), false);
}

int compare(const BigQuantity& a, const BigQuantity& b)
{
    if (a.is_exact() && b.is_exact())
        return cmp(a.value(), b.value()) < 0 ? -1 : (cmp(a.value(), b.value()) > 0 ? 1 : 0);
    // A symbolic side is either beyond the digit cap (huge) or below its
    // reciprocal (tiny), so an exact side compares against its direction.
    if (a.is_exact() != b.is_exact()) {
        const BigQuantity& sym = a.is_exact() ? b : a;
        const BigQuantity& ex = a.is_exact() ? a : b;
        int sym_vs_exact;
        if (is_tiny(sym.magnitude()))
            sym_vs_exact = ex.value() > 0 ? -1 : 1;
        else
            sym_vs_exact = 1;
        if (digits_of(ex.value()) > materialize_digit_cap() / 2) {
            int c = cmp_mag(sym.magnitude(), ex.magnitude());
            if (c == 0)
                throw UndecidableComparison("cannot separate " + sym.operand() + " from an exact value");
            sym_vs_exact = c;
        }
        return a.is_exact() ? -sym_vs_exact : sym_vs_exact;
    }
    int c = cmp_mag(a.magnitude(), b.magnitude());
    if (c == 0)
        throw UndecidableComparison("cannot separate " + a.operand() + " from " + b.operand());
    return c;
}

BigQuantity pow(const BigQuantity& base, const BigQuantity& exponent)
{
    if (!exponent.is_integral())
        throw std::domain_error("pow needs an integral exponent, got " + exponent.operand());
    std::string text = base.operand() + "^" + exponent.operand();
    if (base.is_exact() && exponent.is_exact()) {
        const Rational& b = base.value();
        BigInt e = exponent.integer();
        if (b == 0 || b == 1)
            return with_formula(e == 0 ? Rational(1) : b, text);
        BigInt abs_e = abs(e);
        if (abs_e.fits_slong_p()) {
            double digits = static_cast<double>(abs_e.get_si()) * static_cast<double>(digits_of(b));
            if (digits <= static_cast<double>(materialize_digit_cap()))
                return with_formula(pow(b, e.get_si()), text);
        }
    }
    if (base.is_exact() && base.value() <= 0)
        throw std::domain_error("symbolic power of a non-positive base");
    Magnitude lb = log10m(base.magnitude());
    Magnitude em = exponent.magnitude();
    Magnitude log_result;
    if (em.height == 0 && lb.height == 0) {
        double p = em.top * lb.top;
        log_result = (std::isfinite(p) && std::fabs(p) <= kHuge) ? Magnitude{0, p} : Magnitude{0, 0};
        if (!(std::isfinite(p) && std::fabs(p) <= kHuge)) {
            if ((em.top < 0) != (lb.top < 0))
                throw std::underflow_error("power far below the representable range");
            log_result = exp10m({0, std::log10(std::fabs(em.top)) + std::log10(std::fabs(lb.top))});
        }
    } else {
        if ((em.height == 0 && em.top < 0) || (lb.height == 0 && lb.top < 0))
            throw std::underflow_error("power far below the representable range");
        log_result = mul_mag(em, lb);
    }
    BigQuantity q = BigQuantity::symbolic(text, exp10m(log_result));
    q.set_integral(base.is_integral() && !(exponent.is_exact() && exponent.value() < 0));
    return q;
}

BigQuantity ceil(const BigQuantity& x)
{
    if (x.is_exact())
        return with_formula(Rational(ceil(x.value())), "ceil(" + x.formula() + ")");
    if (x.is_integral())
        return x;
    if (is_tiny(x.magnitude()) || (x.magnitude().height == 0 && x.magnitude().top > 0 && x.magnitude().top < 0.5))
        return with_formula(Rational(1), "ceil(" + x.formula() + ")");
    BigQuantity q = BigQuantity::symbolic("ceil(" + x.formula() + ")", x.magnitude());
    q.set_integral(true);
    return q;
}

BigQuantity max(const BigQuantity& a, const BigQuantity& b)
{
    return compare(a, b) >= 0 ? a : b;
}

} // namespace dhj
