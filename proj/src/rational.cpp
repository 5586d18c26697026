#include "sicrank/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sicrank {

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::from_double(double value)
{
    if (!std::isfinite(value))
        throw std::domain_error("Rational::from_double: non-finite value");
    mpq_class q;
    q = value; // exact conversion
    return Rational(q);
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: malformed fraction '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    return Rational(q);
}

Rational Rational::ceil() const
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(mpq_class(r));
}

Rational Rational::floor() const
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(mpq_class(r));
}

std::int64_t Rational::to_int64() const
{
    if (!is_integer())
        throw std::domain_error("Rational::to_int64: not an integer: " + to_string());
    const mpz_class& n = q_.get_num();
    if (!n.fits_slong_p())
        throw std::overflow_error("Rational::to_int64: out of range: " + to_string());
    return n.get_si();
}

Rational Rational::reciprocal() const
{
    if (sign() == 0)
        throw std::domain_error("Rational::reciprocal of zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.sign() == 0)
        throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

} // namespace sicrank
