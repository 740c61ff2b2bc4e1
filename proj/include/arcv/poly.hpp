#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcv/rational.hpp"

namespace arcv {

/// Variable families, in the order used for the monomial ordering.
///   X: jet coordinates x_j^{(i)} (outer = j, inner = i)
///   U, Z: module generators u_j, z_j (outer = tensor slot j >= 1)
///   A, B: series coefficients a^{(i)}, b^{(i)} (inner = i)
///   P: power-sum symbols p_i (outer = i >= 1)
enum class Family : std::uint8_t { X = 0, U = 1, Z = 2, A = 3, B = 4, P = 5 };

struct Variable {
  Family family;
  int outer;
  int inner;

  static Variable x(int j, int i);
  static Variable u(int slot);
  static Variable z(int slot);
  static Variable a(int i);
  static Variable b(int i);
  static Variable p(int i);

  /// Packed (family, outer, inner); integer order is the variable order.
  std::uint32_t key() const;
  static Variable from_key(std::uint32_t key);

  std::string name() const;

  friend bool operator==(const Variable& l, const Variable& r) { return l.key() == r.key(); }
};

/// Sparse exponent vector, factors sorted by variable key, all exponents > 0.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (variable key, exponent)

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(const Variable& v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(const Variable& v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  /// Internal storage order (lexicographic on factors), not the monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors_ < b.factors_; }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic order on the concatenated exponent vector,
/// variables ordered by (family, outer, inner). Returns true iff a > b.
bool grevlex_greater(const Monomial& a, const Monomial& b);

/// Imposes v^(max_exponent + 1) = 0 for every variable of one family.
struct NilpotentMask {
  Family family;
  std::uint32_t max_exponent;
  bool kills(const Monomial& m) const;
};

using Term = std::pair<Monomial, Rational>;

/// Exact sparse polynomial. Terms are kept in the storage order of Monomial,
/// without zero coefficients.
class SparsePoly {
 public:
  SparsePoly() = default;
  SparsePoly(long c);  // NOLINT: constants convert implicitly
  SparsePoly(const Rational& c);  // NOLINT
  explicit SparsePoly(const Variable& v);
  explicit SparsePoly(const Monomial& m, const Rational& c = 1);
  /// Builds from arbitrary terms, merging duplicates and dropping zeros.
  static SparsePoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  /// Terms sorted leading-first under grevlex.
  std::vector<Term> sorted_terms() const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  SparsePoly operator-() const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator*(SparsePoly a, long c) { return a *= Rational(c); }
  friend SparsePoly operator*(long c, SparsePoly a) { return a *= Rational(c); }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return multiply(a, b); }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  friend SparsePoly multiply(const SparsePoly& a, const SparsePoly& b,
                             const NilpotentMask* mask);
  friend SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
    return multiply(a, b, nullptr);
  }

  /// Monomial times polynomial.
  SparsePoly times(const Monomial& m, const NilpotentMask* mask = nullptr) const;
  SparsePoly pow(unsigned e, const NilpotentMask* mask = nullptr) const;
  /// Drops every term killed by the mask.
  SparsePoly masked(const NilpotentMask& mask) const;
  /// Partial derivative with respect to v.
  SparsePoly derivative(const Variable& v) const;

  /// Canonical text: grevlex leading-first, explicit rational coefficients.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Formal series sum_k coeffs[k] t^k known through t^tmax.
class TSeries {
 public:
  explicit TSeries(std::vector<SparsePoly> coeffs);
  static TSeries constant(const SparsePoly& c, int tmax);

  int tmax() const { return static_cast<int>(coeffs_.size()) - 1; }
  const SparsePoly& operator[](int k) const { return coeffs_.at(k); }
  const std::vector<SparsePoly>& coeffs() const { return coeffs_; }

 private:
  std::vector<SparsePoly> coeffs_;
};

/// x_j(t) = sum_i x_j^{(i)} t^i through tmax.
TSeries x_series(int j, int tmax);
TSeries a_series(int tmax);
TSeries b_series(int tmax);

/// Cauchy product, exact through min(f.tmax, g.tmax).
TSeries tseries_mul(const TSeries& f, const TSeries& g);
TSeries tseries_add(const TSeries& f, const TSeries& g);
TSeries tseries_scale(const TSeries& f, const Rational& c);
/// w-th formal derivative; bound drops to tmax - w. Throws UsageError if w > tmax.
TSeries tseries_derivative(const TSeries& f, int w);

/// Image of a variable under a substitution, or nullopt if undefined there.
using Substitution = std::function<std::optional<SparsePoly>(const Variable&)>;

/// Ring homomorphism applied termwise. Throws UsageError on an undefined variable.
SparsePoly substitute(const SparsePoly& p, const Substitution& sigma,
                      const NilpotentMask* mask = nullptr);

struct MultiDegree {
  int deg1 = 0;       // x-degree (u-degree for module elements)
  int deg2 = 0;       // q-degree
  int deg3 = 0;       // sl2-weight
  int deg_prime = 0;  // sum of j^2 over x-factors
  std::vector<int> deg_by_var;  // per-j x-degree, size l + 1

  // Homogeneity is judged on (deg1, deg2, deg3) only.
  bool same_grading(const MultiDegree& o) const {
    return deg1 == o.deg1 && deg2 == o.deg2 && deg3 == o.deg3;
  }
  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
};

/// Multidegree of a single monomial for Veronese degree l. Weight conventions:
/// x_j contributes 2j - l, u contributes -2, a contributes -1, b contributes +1.
MultiDegree monomial_degree(const Monomial& m, int l);

/// Multidegree of the first term, nullopt if p is inhomogeneous in
/// (deg1, deg2, deg3). The zero
/// polynomial and constants report the all-zero degree.
std::optional<MultiDegree> multidegree(const SparsePoly& p, int l);

}  // namespace arcv
