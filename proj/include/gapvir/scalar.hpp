#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace gapvir {

/// Exact rational number. All arithmetic is exact; values are kept in
/// lowest terms with a positive denominator. This is the single scalar
/// abstraction point of the library: everything numeric goes through it.
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(long n) : q_(n) {}  // NOLINT: implicit by design
  Scalar(long n, long d);
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "a/b" or "a". Throws std::invalid_argument on malformed input
  /// or zero denominator.
  static Scalar parse(const std::string& text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// The value as a machine integer. Requires is_integer() and that the
  /// value fits in a long.
  long to_long() const;

  std::string str() const;

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.q_ != b.q_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class q_;
};

/// Exact binomial coefficient C(n, k); zero for k < 0 or k > n.
Scalar binomial(long n, long k);

}  // namespace gapvir
