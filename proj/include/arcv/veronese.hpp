#pragma once

#include <array>
#include <string>
#include <vector>

#include "arcv/character.hpp"
#include "arcv/poly.hpp"

namespace arcv {

/// Finite slice of the jet coordinate ring C[x_0^{(i)}, ..., x_l^{(i)}]:
/// x-degree n, q-degrees 0..qmax, generator series through t^tmax.
struct JetRingSpec {
  int l = 1;
  int n = 0;
  int qmax = 0;
  int tmax = 0;

  /// Spec with tmax = qmax, the smallest bound that certifies every piece.
  static JetRingSpec make(int l, int n, int qmax) { return {l, n, qmax, qmax}; }
  void validate() const;
};

enum class GeneratorKind { Q, Qprime };
enum class IdealKind { Q, Qprime, KernelNu };

/// t^k-coefficient of one generating series, indexed by (s, r, w).
struct Generator {
  int s;
  int r;
  int w;
  int k;
  SparsePoly poly;
};

struct IdealGens {
  GeneratorKind kind;
  std::vector<Generator> gens;
};

/// Q_{s,r,w}(t) = sum_{u=s}^{r-1} (-1)^u C(r-s-1, u-s) x_u^{(w)}(t) x_{r+s-u}(t).
TSeries q_series(int s, int r, int w, int tmax);
/// Q'_{s,r,w}(t) = x_s^{(w)}(t) x_r(t).
TSeries qprime_series(int s, int r, int w, int tmax);

/// Admissible (s, r, w): 0 <= s, r <= l, r - s >= 2, 0 <= w <= r - s - 2.
std::vector<std::array<int, 3>> generator_indices(int l);

IdealGens build_Q(const JetRingSpec& spec);
IdealGens build_Qprime(const JetRingSpec& spec);

/// deg'-highest component (deg' x_j^{(i)} = j^2).
SparsePoly leading_component_prime(const SparsePoly& p, int l);

/// The substitution x_j(t) -> a(t)^{l-j} b(t)^j, precomputed through a t-order.
class VeroneseMap {
 public:
  VeroneseMap(int l, int order);

  int l() const { return l_; }
  int order() const { return order_; }
  /// nu_l(x_j^{(i)}); throws TruncationError if i exceeds the order.
  const SparsePoly& image(int j, int i) const;
  SparsePoly apply(const SparsePoly& p) const;

 private:
  int l_;
  int order_;
  std::vector<TSeries> images_;  // images_[j] = a^{l-j} b^j
};

/// True iff nu_l(p) == 0. Throws TruncationError if p involves jet indices
/// beyond `order`.
bool kernel_membership(const SparsePoly& p, int l, int order);

/// Monomials in x_j^{(i)} (0 <= j <= l) with the given x-degree, q-degree and
/// weight, sorted grevlex leading-first.
std::vector<Monomial> jet_monomials(int l, int degree, int qdeg, int weight);

/// Dimension data for one (weight, q-degree) piece of S_n / ideal.
struct PieceDims {
  int weight;
  int qdeg;
  long ambient;
  long rank;  // rank of the ideal piece, or of the nu-image for KernelNu
  long quotient;
};

struct QuotientResult {
  LaurentCharacter character;
  std::vector<PieceDims> pieces;
};

/// Graded character of (S / ideal)_n through qmax by exact linear algebra.
QuotientResult quotient_pieces(const JetRingSpec& spec, IdealKind ideal, int workers = 1);
LaurentCharacter quotient_character(const JetRingSpec& spec, IdealKind ideal, int workers = 1);

struct CoefficientComparison {
  int n;
  int weight;
  int qdeg;
  Rational q_quotient;
  Rational kernel_quotient;
  Rational global_demazure;
  Rational leading_sum;
  Rational qprime_quotient;
  bool ok;
};

struct ReducedReport {
  int l;
  int nmax;
  int qmax;
  bool passed = true;
  std::vector<CoefficientComparison> rows;
  std::vector<std::string> failures;
};

/// For each n <= nmax compares the Q-quotient, the kernel quotient, the
/// global Demazure character and the composition sum coefficientwise, and
/// checks the leading-term inequality ch(S/I') >= ch(S/I).
ReducedReport verify_reduced(int l, int nmax, int qmax, int workers = 1);

}  // namespace arcv
