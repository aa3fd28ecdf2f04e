#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jd3 {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.  Zero is stored as 0/1.
class BigRational {
public:
  BigRational() = default;
  BigRational(int v) : q_(static_cast<long>(v)) {}
  BigRational(unsigned v) : q_(static_cast<unsigned long>(v)) {}
  BigRational(long v) : q_(v) {}
  BigRational(unsigned long v) : q_(v) {}
  BigRational(const BigInt& v) : q_(v) {}

  BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p", "-p" or "p/q".
  static BigRational parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return BigRational(BigInt(std::string(text)));
      return BigRational(BigInt(std::string(text.substr(0, slash))),
                         BigInt(std::string(text.substr(slash + 1))));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("BigRational: cannot parse '" + std::string(text) + "'");
    }
  }

  [[nodiscard]] const mpq_class& raw() const noexcept { return q_; }
  [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
  [[nodiscard]] bool is_zero() const noexcept { return sgn(q_) == 0; }
  [[nodiscard]] bool is_integer() const noexcept { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const noexcept { return sgn(q_); }

  [[nodiscard]] std::string to_string() const { return q_.get_str(); }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(BigRational a) { a.q_ = -a.q_; return a; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

private:
  mpq_class q_;
};

inline BigRational unit_like(const BigRational&) { return BigRational(1); }
inline BigInt unit_like(const BigInt&) { return BigInt(1); }

inline BigRational pow(const BigRational& base, unsigned e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  return BigRational(mpq_class(num, den));  // already coprime
}

inline BigInt pow(const BigInt& base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace jd3
