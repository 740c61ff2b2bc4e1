#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "arcv/rational.hpp"

namespace arcv {

/// Power series in q with rational coefficients, truncated after q^qmax.
/// Every arithmetic result is exact through degree qmax.
class QSeries {
 public:
  explicit QSeries(int qmax);
  QSeries(int qmax, std::vector<Rational> coeffs);
  QSeries(int qmax, std::initializer_list<long> coeffs);

  static QSeries zero(int qmax) { return QSeries(qmax); }
  static QSeries one(int qmax);
  /// c * q^degree (zero if degree > qmax).
  static QSeries monomial(int qmax, int degree, const Rational& c = 1);

  int qmax() const { return qmax_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  void set(int k, const Rational& c) { coeffs_.at(k) = c; }
  void add_to(int k, const Rational& c);

  bool is_zero() const;
  /// Largest k with a nonzero coefficient, -1 for the zero series.
  int top_degree() const;
  /// Value at q = 1 of the truncated polynomial.
  Rational at_one() const;
  bool has_integer_coeffs() const;
  bool has_nonnegative_coeffs() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  /// Multiply by q^k, dropping what falls past qmax.
  QSeries shifted(int k) const;
  /// Same coefficients re-truncated at a different order (padding with zeros).
  QSeries retruncated(int qmax) const;

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const QSeries& a, const QSeries& b);

  std::string to_string() const;

 private:
  void require_same_order(const QSeries& o) const;

  int qmax_;
  std::vector<Rational> coeffs_;
};

/// Exact truncated product; throws UsageError on mismatched qmax.
QSeries qseries_mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse through qmax; throws SingularError if a[0] == 0.
QSeries qseries_inverse(const QSeries& a);

/// (q)_m = (1-q)(1-q^2)...(1-q^m), truncated.
QSeries q_pochhammer(int m, int qmax);

}  // namespace arcv
