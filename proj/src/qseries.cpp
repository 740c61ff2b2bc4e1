#include "arcv/qseries.hpp"

#include <sstream>

#include "arcv/errors.hpp"

namespace arcv {

QSeries::QSeries(int qmax) : qmax_(qmax) {
  if (qmax < 0) throw UsageError("QSeries: qmax must be nonnegative");
  coeffs_.assign(static_cast<size_t>(qmax) + 1, Rational(0));
}

QSeries::QSeries(int qmax, std::vector<Rational> coeffs) : QSeries(qmax) {
  for (size_t k = 0; k < coeffs.size() && k <= static_cast<size_t>(qmax); ++k)
    coeffs_[k] = std::move(coeffs[k]);
}

QSeries::QSeries(int qmax, std::initializer_list<long> coeffs) : QSeries(qmax) {
  size_t k = 0;
  for (long c : coeffs) {
    if (k > static_cast<size_t>(qmax)) break;
    coeffs_[k++] = c;
  }
}

QSeries QSeries::one(int qmax) { return monomial(qmax, 0, 1); }

QSeries QSeries::monomial(int qmax, int degree, const Rational& c) {
  QSeries s(qmax);
  if (degree < 0) throw UsageError("QSeries: negative exponent");
  if (degree <= qmax) s.coeffs_[degree] = c;
  return s;
}

void QSeries::add_to(int k, const Rational& c) {
  if (k < 0) throw UsageError("QSeries: negative exponent");
  if (k <= qmax_) coeffs_[k] += c;
}

bool QSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

int QSeries::top_degree() const {
  for (int k = qmax_; k >= 0; --k)
    if (coeffs_[k] != 0) return k;
  return -1;
}

Rational QSeries::at_one() const {
  Rational s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool QSeries::has_integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

bool QSeries::has_nonnegative_coeffs() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

void QSeries::require_same_order(const QSeries& o) const {
  if (o.qmax_ != qmax_)
    throw UsageError("QSeries: mismatched truncation orders " +
                     std::to_string(qmax_) + " and " + std::to_string(o.qmax_));
}

QSeries& QSeries::operator+=(const QSeries& o) {
  require_same_order(o);
  for (int k = 0; k <= qmax_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  require_same_order(o);
  for (int k = 0; k <= qmax_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
  require_same_order(o);
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (int i = 0; i <= qmax_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= qmax_; ++j) {
      if (o.coeffs_[j] == 0) continue;
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries QSeries::shifted(int k) const {
  if (k < 0) throw UsageError("QSeries: negative shift");
  QSeries s(qmax_);
  for (int i = 0; i + k <= qmax_; ++i) s.coeffs_[i + k] = coeffs_[i];
  return s;
}

QSeries QSeries::retruncated(int qmax) const {
  QSeries s(qmax);
  for (int i = 0; i <= qmax && i <= qmax_; ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.qmax_ == b.qmax_ && a.coeffs_ == b.coeffs_;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= qmax_; ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  os << " + O(q^" << qmax_ + 1 << ")";
  return os.str();
}

QSeries qseries_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries qseries_inverse(const QSeries& a) {
  if (a[0] == 0) throw SingularError("qseries_inverse: zero constant term");
  const int qmax = a.qmax();
  std::vector<Rational> inv(static_cast<size_t>(qmax) + 1, Rational(0));
  const Rational c0inv = 1 / a[0];
  inv[0] = c0inv;
  for (int k = 1; k <= qmax; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i)
      if (a[i] != 0) s += a[i] * inv[k - i];
    inv[k] = -s * c0inv;
  }
  return QSeries(qmax, std::move(inv));
}

QSeries q_pochhammer(int m, int qmax) {
  QSeries out = QSeries::one(qmax);
  for (int i = 1; i <= m; ++i) {
    QSeries factor = QSeries::one(qmax);
    factor.add_to(i, -1);
    out *= factor;
  }
  return out;
}

}  // namespace arcv
