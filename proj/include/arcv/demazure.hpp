#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcv/character.hpp"
#include "arcv/echelon.hpp"
#include "arcv/poly.hpp"

namespace arcv {

/// Slice of C[u_1..u_n, z_1..z_n]/(u_j^{l+1}) up to z-degree qmax. A monomial
/// with total u-degree k has weight l*n - 2k and q-degree equal to its z-degree.
struct ModuleSpec {
  int l = 1;
  int n = 1;
  int qmax = 0;
  void validate() const;
};

NilpotentMask module_mask(int l);

/// g_i = u_1 z_1^i + ... + u_n z_n^i, the image of f t^i acting on 1.
SparsePoly module_g(int i, int n);

/// Monomials of u-degree k (each u-exponent <= l) and z-degree d, grevlex order.
std::vector<Monomial> module_monomials(int l, int n, int k, int d);

enum class OperatorKind { F, H, E };

/// x t^i for x in {f, h, e}.
struct CurrentOperator {
  OperatorKind kind;
  int tpower;
};

/// Action on the ring realization: F t^i multiplies by g_i; H t^i and E t^i act
/// slot by slot, u^a z^b -> (l - 2a) u^a z^{b+i} and u^a z^b -> a(l-a+1) u^{a-1} z^{b+i}.
SparsePoly apply_operator(const CurrentOperator& op, const SparsePoly& m, int l, int n);

/// Basis of one (u-degree, q-degree) piece of the global Demazure module.
struct ModulePiece {
  int ucount = 0;
  int qdeg = 0;
  std::vector<SparsePoly> basis;
  std::shared_ptr<GradedPieceMatrix<Monomial, MonomialHash>> matrix;
};

/// The materialized submodule: one echelonized piece per (u-degree, q-degree).
class GradedBasis {
 public:
  GradedBasis(ModuleSpec spec);

  const ModuleSpec& spec() const { return spec_; }
  int weight_of(int ucount) const { return spec_.l * spec_.n - 2 * ucount; }
  int max_ucount() const { return spec_.l * spec_.n; }

  const ModulePiece& piece(int ucount, int qdeg) const;
  ModulePiece& piece(int ucount, int qdeg);
  long dim(int ucount, int qdeg) const;
  bool contains(int ucount, int qdeg, const SparsePoly& p) const;

  LaurentCharacter character() const;

 private:
  ModuleSpec spec_;
  std::vector<ModulePiece> pieces_;  // index ucount * (qmax + 1) + qdeg
};

/// Closure of {1} under multiplication by p_i = sum z_j^i (i >= 1) and g_i
/// (i >= 0), truncated at q-degree qmax.
GradedBasis build_global_demazure(const ModuleSpec& spec);

struct ClosureReport {
  bool passed = true;
  long checked = 0;
  std::vector<std::string> failures;
};

/// Applies F t^i, H t^i and E t^i to every basis element and checks the
/// result stays inside the materialized span (where the target piece exists).
ClosureReport check_current_closure(const GradedBasis& basis);

enum class FiberStatus { Ok, Inconclusive };

struct FiberResult {
  FiberStatus status = FiberStatus::Ok;
  long dimension = 0;                   // at q-bound qmax
  long previous_dimension = 0;          // at q-bound qmax - 1
  std::map<int, long> by_weight;        // weight -> fiber dimension at qmax
  std::map<int, long> previous_by_weight;
  bool higher_power_sums_in_span = true;  // runtime check of p_{n+1} redundancy
  /// q-character of the fiber when the point is 0 (the quotient is graded then).
  std::optional<LaurentCharacter> graded_character;
};

/// dim M / span{(p_i - p_i(c)) m} with p_1..p_n, computed per weight on the
/// q-degree <= qmax truncation and compared with qmax - 1 for stabilization.
FiberResult fiber_dimension(const ModuleSpec& spec, const std::vector<Rational>& point,
                            int workers = 1);

/// Top q-degree of demazure_character(l, n); the fiber stabilizes from there.
int demazure_top_degree(int l, int n);

/// Associated graded character of the tensor product of evaluation modules
/// V_{l_i omega}(c_i) for the t-degree filtration generated from the tensor
/// product of highest weight vectors.
LaurentCharacter fusion_character(const std::vector<int>& levels,
                                  const std::vector<Rational>& points, int qmax);

struct RelationReport {
  bool passed = true;
  std::vector<std::pair<std::string, bool>> checks;
  /// Expansion of g_n - sum_j (-1)^{j+1} g_{n-j} e_j(z) (expected 0) and of g_n.
  std::string newton_residual;
  std::string g_n_expansion;
  /// Coefficient of g_{n-1}^{l+1} in the multinomial identity.
  Rational top_coefficient;
};

/// Verifies the two vanishing identities used to show D_{l,n omega} relations
/// in the ring realization, plus their power-sum rewritings.
RelationReport demazure_relation_check(int l, int n);

}  // namespace arcv
