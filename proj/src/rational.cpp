#include "svf/rational.hpp"

#include "svf/errors.hpp"

#include <cctype>

namespace svf {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view body = trim(text);
    std::string_view num = body;
    std::string_view den = "1";
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        num = trim(body.substr(0, slash));
        den = trim(body.substr(slash + 1));
    }
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
        num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
        throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    std::string num_str(num);
    if (num_str.front() == '+') num_str.erase(0, 1);
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(mpz_class(num_str, 10), d);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

mpz_class common_denominator(const std::vector<Rational>& values) {
    mpz_class l = 1;
    for (const auto& v : values) {
        mpz_class d = v.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(Rational::parse(t));
    return out;
}

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace svf
