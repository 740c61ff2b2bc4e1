#include "arcv/symfunc.hpp"

#include <functional>
#include <stdexcept>

#include "arcv/errors.hpp"

namespace arcv {

SparsePoly elementary_z(int k, int n, int omit) {
  if (k < 0 || n < 0) throw UsageError("elementary_z: negative index");
  std::vector<int> slots;
  for (int j = 1; j <= n; ++j)
    if (j != omit) slots.push_back(j);
  if (k == 0) return SparsePoly(1);
  if (k > static_cast<int>(slots.size())) return SparsePoly();
  std::vector<Term> terms;
  std::vector<Monomial::Factor> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      terms.emplace_back(Monomial(cur), Rational(1));
      return;
    }
    for (std::size_t i = start; i + left <= slots.size(); ++i) {
      cur.emplace_back(Variable::z(slots[i]).key(), 1);
      rec(i + 1, left - 1);
      cur.pop_back();
    }
  };
  rec(0, k);
  return SparsePoly::from_terms(std::move(terms));
}

SparsePoly power_sum_z(int i, int n) {
  if (i < 0) throw UsageError("power_sum_z: negative index");
  if (i == 0) return SparsePoly(static_cast<long>(n));
  SparsePoly out;
  for (int j = 1; j <= n; ++j) out += SparsePoly(Monomial::of(Variable::z(j), i));
  return out;
}

SparsePoly newton_to_elementary(int j, int n) {
  if (j < 0 || j > n) throw UsageError("newton_to_elementary: need 0 <= j <= n");
  std::vector<SparsePoly> E{SparsePoly(1)};
  for (int m = 1; m <= j; ++m) {
    SparsePoly acc;
    for (int i = 1; i <= m; ++i) {
      SparsePoly term = E[m - i] * SparsePoly(Variable::p(i));
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    E.push_back(acc * Rational(1, m));
  }
  return E[j];
}

SparsePoly expand_power_sums(const SparsePoly& in_p, int n) {
  return substitute(in_p, [n](const Variable& v) -> std::optional<SparsePoly> {
    if (v.family != Family::P) return SparsePoly(v);
    return power_sum_z(v.outer, n);
  });
}

namespace {

std::vector<int> z_exponents(const Monomial& m, int n) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (const auto& [key, ex] : m.factors()) {
    const Variable v = Variable::from_key(key);
    if (v.family != Family::Z || v.outer < 1 || v.outer > n)
      throw UsageError("symmetric function: unexpected variable " + v.name());
    e[v.outer - 1] = static_cast<int>(ex);
  }
  return e;
}

}  // namespace

SparsePoly symmetric_to_power_sums(const SparsePoly& sym, int n) {
  std::vector<SparsePoly> E_in_p;
  for (int k = 0; k <= n; ++k) E_in_p.push_back(newton_to_elementary(k, n));
  std::vector<SparsePoly> e_in_z;
  for (int k = 0; k <= n; ++k) e_in_z.push_back(elementary_z(k, n));

  SparsePoly rest = sym;
  SparsePoly result;
  while (!rest.is_zero()) {
    // Lex-leading monomial, z_1 > z_2 > ... > z_n.
    const Term* lead = nullptr;
    std::vector<int> lead_exp;
    for (const auto& t : rest.terms()) {
      auto e = z_exponents(t.first, n);
      if (!lead || e > lead_exp) {
        lead = &t;
        lead_exp = std::move(e);
      }
    }
    for (int k = 0; k + 1 < n; ++k)
      if (lead_exp[k] < lead_exp[k + 1])
        throw std::logic_error("symmetric_to_power_sums: input is not symmetric");
    const Rational c = lead->second;
    SparsePoly in_z(c);
    SparsePoly in_p(c);
    for (int k = 1; k <= n; ++k) {
      const int mult = lead_exp[k - 1] - (k < n ? lead_exp[k] : 0);
      if (mult == 0) continue;
      in_z = in_z * e_in_z[k].pow(mult);
      in_p = in_p * E_in_p[k].pow(mult);
    }
    rest -= in_z;
    result += in_p;
  }
  return result;
}

SparsePoly q_mu_in_z(const std::vector<int>& mu, int n) {
  if (static_cast<int>(mu.size()) != n) throw UsageError("q_mu: composition must have n parts");
  SparsePoly total;
  for (int i = 1; i <= n; ++i) {
    SparsePoly prod(1);
    for (int k = 1; k <= n; ++k) {
      if (mu[k - 1] < 0) throw UsageError("q_mu: negative part");
      if (mu[k - 1] > 0) prod = prod * elementary_z(n - k, n, i).pow(mu[k - 1]);
    }
    total += prod;
  }
  return total;
}

SparsePoly q_mu_polynomial(const std::vector<int>& mu, int n) {
  return symmetric_to_power_sums(q_mu_in_z(mu, n), n);
}

bool is_symmetric_in_z(const SparsePoly& p, int n) {
  for (int a = 1; a < n; ++a) {
    SparsePoly swapped = substitute(p, [a](const Variable& v) -> std::optional<SparsePoly> {
      if (v.family == Family::Z && v.outer == a) return SparsePoly(Variable::z(a + 1));
      if (v.family == Family::Z && v.outer == a + 1) return SparsePoly(Variable::z(a));
      return SparsePoly(v);
    });
    if (!(swapped == p)) return false;
  }
  return true;
}

}  // namespace arcv
