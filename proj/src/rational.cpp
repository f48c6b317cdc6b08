#include "ppg/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace ppg {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void malformed(std::string_view text) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : value_(numerator, denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);

    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    mpz_class num;
    mpz_class den = 1;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto top = body.substr(0, slash);
        const auto bottom = body.substr(slash + 1);
        if (!all_digits(top) || !all_digits(bottom)) malformed(text);
        num.set_str(std::string(top), 10);
        den.set_str(std::string(bottom), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        const auto whole = body.substr(0, dot);
        const auto frac = body.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) malformed(text);
        num.set_str(std::string(whole) + std::string(frac), 10);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    } else {
        if (!all_digits(body)) malformed(text);
        num.set_str(std::string(body), 10);
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ppg
