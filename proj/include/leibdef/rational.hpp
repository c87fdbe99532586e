#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace leibdef {

/* Exact rational scalar backed by GMP. Every value is kept canonical:
   gcd(num, den) = 1, den > 0, zero is 0/1. All arithmetic is exact;
   division by zero throws. */
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /* Accepts "p/q" or a plain integer, base 10. Rejects empty input,
     zero denominators and trailing garbage. */
  static Rational parse(std::string_view s) {
    mpq_class q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
      throw std::invalid_argument("bad rational literal: \"" + std::string(s) + "\"");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
      throw std::invalid_argument("bad rational literal (zero denominator): \"" + std::string(s) + "\"");
    q.canonicalize();
    return Rational(raw_tag{}, std::move(q));
  }

  std::string str() const { return v_.get_str(); }  // "p/q", or "p" when den = 1

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(raw_tag{}, a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(raw_tag{}, a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(raw_tag{}, a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(raw_tag{}, a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(raw_tag{}, -v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(raw_tag{}, 1 / v_);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  struct raw_tag {};
  /* mpq arithmetic preserves canonical form, so results skip re-canonicalizing. */
  Rational(raw_tag, mpq_class q) : v_(std::move(q)) {}

  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace leibdef
