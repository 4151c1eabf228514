#pragma once

// Exact integer Laurent polynomials in one variable q.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtangle {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
  return out;
}

}  // namespace detail

/// An element of Z[q, q^-1]. Zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(0, constant);
  }

  static LaurentPoly monomial(Coeff c, int exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exponent, c);
    return p;
  }
  static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Coeff coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }
  int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  /// Adds c*q^e in place.
  void add_term(Coeff c, int exponent) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(c, e);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(-c, e);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (auto [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [ea, ca] : a.terms_)
      for (auto [eb, cb] : b.terms_) r.add_term(detail::checked_mul(ca, cb), ea + eb);
    return r;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  /// The involution q -> q^-1.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// Exact division; empty when `divisor` does not divide this polynomial.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlead = divisor.max_degree();
    const Coeff dcoef = divisor.terms_.rbegin()->second;
    const int span = divisor.max_degree() - divisor.min_degree();
    while (!rem.is_zero()) {
      if (rem.max_degree() - rem.min_degree() < span) return std::nullopt;
      const auto [e, c] = *rem.terms_.rbegin();
      if (c % dcoef != 0) return std::nullopt;
      LaurentPoly t = monomial(c / dcoef, e - dlead);
      quot += t;
      rem -= t * divisor;
    }
    return quot;
  }

  /// Ascending terms: "-q^-2 + 3 - 2*q^3"; zero prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto [e, c] : terms_) {
      const Coeff mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) out += '-';
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += std::to_string(mag);
        continue;
      }
      if (mag != 1) out += std::to_string(mag) + "*";
      out += 'q';
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  /// Inverse of to_string(); whitespace is insignificant.
  static LaurentPoly parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
    LaurentPoly out;
    std::size_t pos = 0;
    auto fail = [&](const char* why) {
      throw std::invalid_argument("bad Laurent polynomial '" + std::string(text) + "': " + why);
    };
    auto read_int = [&](std::int64_t& value) {
      const std::size_t start = pos;
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      const std::string digits = s.substr(start, pos - start);
      if (digits.empty() || digits == "-" || digits == "+") fail("expected integer");
      value = std::stoll(digits);
    };
    bool first = true;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      std::int64_t coef = 1;
      bool has_coef = false;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        read_int(coef);
        has_coef = true;
      }
      int exponent = 0;
      if (pos < s.size() && s[pos] == '*') {
        if (!has_coef) fail("'*' without coefficient");
        ++pos;
        if (pos >= s.size() || s[pos] != 'q') fail("expected 'q' after '*'");
      }
      if (pos < s.size() && s[pos] == 'q') {
        ++pos;
        exponent = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          std::int64_t e;
          read_int(e);
          exponent = static_cast<int>(e);
        }
      } else if (!has_coef) {
        fail("expected coefficient or 'q'");
      }
      out.add_term(sign * coef, exponent);
    }
    return out;
  }

 private:
  Terms terms_;
};

/// -(q + q^-1): the value of a closed circle under both decategorified models.
inline LaurentPoly circle_value() { return -(LaurentPoly::q(1) + LaurentPoly::q(-1)); }

}  // namespace qtangle
