#include "skbounds/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace skbounds {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by at least one digit.
bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = numerator;
  value_ /= mpq_class(denominator);
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string original(text);

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_text(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction '" + original + "'");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) throw std::domain_error("zero denominator in '" + original + "'");
    mpq_class q(to_mpz(num), d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    const bool whole_ok = whole.empty() || all_digits(whole);
    const bool frac_ok = frac.empty() || all_digits(frac);
    if (!whole_ok || !frac_ok || (whole.empty() && frac.empty())) {
      throw std::invalid_argument("malformed decimal '" + original + "'");
    }
    // d.ddd -> dddd / 10^k
    const std::string digits = std::string(whole) + std::string(frac);
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpq_class q(negative ? mpz_class(-num) : num, scale);
    q.canonicalize();
    return Rational(std::move(q));
  }

  if (!is_integer_text(text)) throw std::invalid_argument("malformed number '" + original + "'");
  return Rational(mpq_class(to_mpz(text)));
}

std::string Rational::to_string() const {
  // mpq_class::get_str prints "a" for integers and "a/b" otherwise.
  return value_.get_str();
}

std::optional<std::pair<long, long>> Rational::small_parts() const {
  if (!value_.get_num().fits_slong_p() || !value_.get_den().fits_slong_p()) return std::nullopt;
  return std::pair{value_.get_num().get_si(), value_.get_den().get_si()};
}

bool Rational::is_canonical() const {
  if (sgn(value_.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return g == 1;
}

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

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace skbounds
