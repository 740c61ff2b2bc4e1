#pragma once

#include <map>
#include <string>
#include <vector>

#include "arcv/qseries.hpp"

namespace arcv {

/// Finitely supported map from sl2-weight a (coefficient of omega) to a
/// q-series. Absent weights are zero; every stored series shares qmax.
class LaurentCharacter {
 public:
  explicit LaurentCharacter(int qmax) : qmax_(qmax) {}

  /// The unit character e^0 * 1.
  static LaurentCharacter unit(int qmax);

  int qmax() const { return qmax_; }
  const std::map<int, QSeries>& terms() const { return terms_; }

  /// Series at weight a (zero series when absent).
  QSeries at(int weight) const;
  Rational coefficient(int weight, int qdeg) const;

  void add(int weight, const QSeries& s);
  void add(int weight, int qdeg, const Rational& c);

  LaurentCharacter& operator+=(const LaurentCharacter& o);
  LaurentCharacter& operator*=(const QSeries& s);
  friend LaurentCharacter operator*(LaurentCharacter c, const QSeries& s) { return c *= s; }

  /// Coefficientwise equality through qmax; zero series count as absent.
  friend bool operator==(const LaurentCharacter& a, const LaurentCharacter& b);
  /// True when every coefficient of a is <= the matching one of b.
  friend bool dominated_by(const LaurentCharacter& a, const LaurentCharacter& b);

  /// Weights with a nonzero series, ascending.
  std::vector<int> support() const;
  /// Sum over weights of the value at q = 1.
  Rational total_at_one() const;
  int top_degree() const;

  std::string to_string() const;

 private:
  int qmax_;
  std::map<int, QSeries> terms_;
};

}  // namespace arcv
