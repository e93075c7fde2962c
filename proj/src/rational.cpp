#include "cantor/rational.hpp"

#include <cmath>
#include <cstddef>

namespace cantor {

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw DomainError("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [](std::string_view s) -> Int {
        if (s.empty()) throw DomainError("rational: empty integer field");
        Int z;
        if (mpz_set_str(z.get_mpz_t(), std::string(s).c_str(), 10) != 0)
            throw DomainError("rational: malformed integer '" + std::string(s) + "'");
        return z;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("rational: inverse of zero");
    return Rational(den(), num());
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

std::string Rational::str() const {
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal(std::size_t significant_digits) const {
    if (is_zero()) return "0";
    if (significant_digits == 0) significant_digits = 1;
    mpf_class f(0, static_cast<mp_bitcnt_t>(significant_digits * 4 + 64));
    f = mpq_class(num(), den());
    mp_exp_t exp10 = 0;
    std::string mant = f.get_str(exp10, 10, significant_digits);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // value = 0.mant * 10^exp10
    std::string out;
    if (exp10 > 0 && exp10 <= static_cast<mp_exp_t>(significant_digits + 3)) {
        if (static_cast<std::size_t>(exp10) >= mant.size()) {
            out = mant + std::string(static_cast<std::size_t>(exp10) - mant.size(), '0');
        } else {
            out = mant.substr(0, static_cast<std::size_t>(exp10)) + "." + mant.substr(static_cast<std::size_t>(exp10));
        }
    } else if (exp10 <= 0 && exp10 > -4) {
        out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mant;
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(static_cast<long>(exp10 - 1));
    }
    return sign + out;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational pow2_inverse(std::size_t j) {
    Int d(1);
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), j);
    return Rational(Int(1), d);
}

double log_approx(const Int& positive) {
    if (sgn(positive) <= 0) throw DomainError("log of non-positive integer");
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, positive.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double log_approx(const Rational& positive) {
    if (positive.sign() <= 0) throw DomainError("log of non-positive rational");
    return log_approx(positive.num()) - log_approx(positive.den());
}

} // namespace cantor
