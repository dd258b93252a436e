#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace galtrop {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// num/den reduced to lowest terms; throws MalformedInput when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "a", "-a" or "a/b" (whitespace not allowed).
Rational parse_rational(std::string_view text);

/// Canonical text form: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

/// Element of Q ∪ {∞}, ordered with ∞ on top. Min-plus valuations live here.
class Valuation {
 public:
  Valuation() = default;  // ∞
  Valuation(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)

  static Valuation infinity() { return {}; }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const Valuation& a, const Valuation& b);
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend Valuation operator+(const Valuation& a, const Valuation& b);

 private:
  std::optional<Rational> value_;
};

/// "inf" or the canonical rational text.
std::string to_string(const Valuation& v);
std::ostream& operator<<(std::ostream& os, const Valuation& v);

RationalVector to_rational_vector(const std::vector<long>& v);

}  // namespace galtrop
