#include "gapvir/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace gapvir {

Scalar::Scalar(long n, long d) {
  if (d == 0) throw std::invalid_argument("Scalar: zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Scalar Scalar::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Scalar: empty string");
  // mpq_class accepts "a/b" and "a" but also tolerates whitespace and
  // leading '+'; restrict to the serialized grammar.
  auto valid = [](const std::string& s) {
    std::size_t i = 0;
    auto digits = [&](std::size_t& k) {
      std::size_t start = k;
      while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
      return k > start;
    };
    if (s[i] == '-') ++i;
    if (!digits(i)) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    return digits(i) && i == s.size();
  };
  if (!valid(text)) throw std::invalid_argument("Scalar: malformed '" + text + "'");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("Scalar: malformed '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Scalar: zero denominator");
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::invalid_argument("Scalar: division by zero");
  q_ /= o.q_;
  return *this;
}

long Scalar::to_long() const {
  if (!is_integer()) throw std::invalid_argument("Scalar: not an integer");
  if (!q_.get_num().fits_slong_p())
    throw std::overflow_error("Scalar: integer does not fit in long");
  return q_.get_num().get_si();
}

std::string Scalar::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.q_;
}

Scalar binomial(long n, long k) {
  if (k < 0 || k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Scalar(mpq_class(r));
}

}  // namespace gapvir
