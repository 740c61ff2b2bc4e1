#include "arcv/demazure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "arcv/errors.hpp"
#include "arcv/parallel.hpp"
#include "arcv/qchar.hpp"
#include "arcv/symfunc.hpp"

namespace arcv {

void ModuleSpec::validate() const {
  if (l < 1) throw UsageError("ModuleSpec: l must be >= 1");
  if (n < 1) throw UsageError("ModuleSpec: n must be >= 1");
  if (qmax < 0) throw UsageError("ModuleSpec: qmax must be >= 0");
}

NilpotentMask module_mask(int l) { return {Family::U, static_cast<std::uint32_t>(l)}; }

SparsePoly module_g(int i, int n) {
  SparsePoly out;
  for (int j = 1; j <= n; ++j) {
    Monomial m = Monomial::of(Variable::u(j)) * Monomial::of(Variable::z(j), i);
    out += SparsePoly(m);
  }
  return out;
}

namespace {

// All exponent vectors of length n with sum total and entries <= cap.
std::vector<std::vector<int>> bounded_vectors(int n, int total, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == n - 1) {
      if (left <= cap) {
        cur[idx] = left;
        out.push_back(cur);
      }
      return;
    }
    for (int v = std::min(left, cap); v >= 0; --v) {
      cur[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  if (n > 0) rec(0, total);
  return out;
}

}  // namespace

std::vector<Monomial> module_monomials(int l, int n, int k, int d) {
  std::vector<Monomial> out;
  if (k < 0 || d < 0 || k > l * n) return out;
  const auto us = bounded_vectors(n, k, l);
  const auto zs = bounded_vectors(n, d, d);
  for (const auto& ue : us) {
    for (const auto& ze : zs) {
      std::vector<Monomial::Factor> f;
      for (int j = 1; j <= n; ++j) {
        if (ue[j - 1] > 0) f.emplace_back(Variable::u(j).key(), ue[j - 1]);
        if (ze[j - 1] > 0) f.emplace_back(Variable::z(j).key(), ze[j - 1]);
      }
      out.emplace_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& x, const Monomial& y) { return grevlex_greater(x, y); });
  return out;
}

SparsePoly apply_operator(const CurrentOperator& op, const SparsePoly& m, int l, int n) {
  if (op.tpower < 0) throw UsageError("apply_operator: negative t-power");
  if (op.kind == OperatorKind::F) {
    const NilpotentMask mask = module_mask(l);
    return multiply(module_g(op.tpower, n), m, &mask);
  }
  std::vector<Term> out;
  for (const auto& [mono, c] : m.terms()) {
    for (int j = 1; j <= n; ++j) {
      const int a = static_cast<int>(mono.exponent(Variable::u(j)));
      const Monomial zshift = Monomial::of(Variable::z(j), op.tpower);
      if (op.kind == OperatorKind::H) {
        if (l - 2 * a != 0) out.emplace_back(mono * zshift, c * (l - 2 * a));
      } else if (a > 0) {
        std::vector<Monomial::Factor> f = mono.factors();
        const auto key = Variable::u(j).key();
        for (auto& x : f)
          if (x.first == key) --x.second;
        std::erase_if(f, [](const auto& x) { return x.second == 0; });
        out.emplace_back(Monomial(std::move(f)) * zshift, c * (a * (l - a + 1)));
      }
    }
  }
  return SparsePoly::from_terms(std::move(out));
}

// ---- GradedBasis ----

GradedBasis::GradedBasis(ModuleSpec spec) : spec_(spec) {
  spec_.validate();
  pieces_.resize(static_cast<std::size_t>(max_ucount() + 1) * (spec_.qmax + 1));
  for (int k = 0; k <= max_ucount(); ++k) {
    for (int d = 0; d <= spec_.qmax; ++d) {
      ModulePiece& p = piece(k, d);
      p.ucount = k;
      p.qdeg = d;
      p.matrix = std::make_shared<GradedPieceMatrix<Monomial, MonomialHash>>(
          module_monomials(spec_.l, spec_.n, k, d));
    }
  }
}

const ModulePiece& GradedBasis::piece(int ucount, int qdeg) const {
  if (ucount < 0 || ucount > max_ucount() || qdeg < 0 || qdeg > spec_.qmax)
    throw UsageError("GradedBasis: piece out of range");
  return pieces_[static_cast<std::size_t>(ucount) * (spec_.qmax + 1) + qdeg];
}

ModulePiece& GradedBasis::piece(int ucount, int qdeg) {
  return const_cast<ModulePiece&>(std::as_const(*this).piece(ucount, qdeg));
}

long GradedBasis::dim(int ucount, int qdeg) const {
  return static_cast<long>(piece(ucount, qdeg).basis.size());
}

bool GradedBasis::contains(int ucount, int qdeg, const SparsePoly& p) const {
  return piece(ucount, qdeg).matrix->contains(p.terms());
}

LaurentCharacter GradedBasis::character() const {
  LaurentCharacter ch(spec_.qmax);
  for (int k = 0; k <= max_ucount(); ++k)
    for (int d = 0; d <= spec_.qmax; ++d) ch.add(weight_of(k), d, dim(k, d));
  return ch;
}

GradedBasis build_global_demazure(const ModuleSpec& spec) {
  GradedBasis basis(spec);
  const NilpotentMask mask = module_mask(spec.l);
  std::vector<SparsePoly> g, p;
  for (int i = 0; i <= spec.qmax; ++i) {
    g.push_back(module_g(i, spec.n));
    p.push_back(power_sum_z(i, spec.n));
  }
  auto offer = [&](ModulePiece& piece, SparsePoly candidate) {
    if (candidate.is_zero()) return;
    if (piece.matrix->insert(candidate.terms())) piece.basis.push_back(std::move(candidate));
  };
  for (int d = 0; d <= spec.qmax; ++d) {
    for (int k = 0; k <= basis.max_ucount(); ++k) {
      ModulePiece& piece = basis.piece(k, d);
      if (k == 0 && d == 0) offer(piece, SparsePoly(1));
      if (k >= 1)
        for (int i = 0; i <= d; ++i)
          for (const auto& b : basis.piece(k - 1, d - i).basis) offer(piece, multiply(g[i], b, &mask));
      for (int i = 1; i <= d; ++i)
        for (const auto& b : basis.piece(k, d - i).basis) offer(piece, multiply(p[i], b, &mask));
    }
  }
  return basis;
}

ClosureReport check_current_closure(const GradedBasis& basis) {
  ClosureReport rep;
  const auto& spec = basis.spec();
  for (int k = 0; k <= basis.max_ucount(); ++k) {
    for (int d = 0; d <= spec.qmax; ++d) {
      for (const auto& b : basis.piece(k, d).basis) {
        for (int i = 0; d + i <= spec.qmax; ++i) {
          struct Target {
            OperatorKind kind;
            int ucount;
            const char* name;
          };
          const Target targets[] = {{OperatorKind::F, k + 1, "F"},
                                    {OperatorKind::H, k, "H"},
                                    {OperatorKind::E, k - 1, "E"}};
          for (const auto& t : targets) {
            const SparsePoly img = apply_operator({t.kind, i}, b, spec.l, spec.n);
            ++rep.checked;
            bool ok;
            if (t.ucount < 0 || t.ucount > basis.max_ucount())
              ok = img.is_zero();
            else
              ok = basis.contains(t.ucount, d + i, img);
            if (!ok) {
              rep.passed = false;
              std::ostringstream os;
              os << t.name << "t^" << i << " applied to " << b.to_string() << " (piece u=" << k
                 << ", q=" << d << ") leaves the span";
              rep.failures.push_back(os.str());
            }
          }
        }
      }
    }
  }
  return rep;
}

// ---- fibers ----

int demazure_top_degree(int l, int n) {
  const int bound = l * n * n + n * n + 1;
  return demazure_character(l, n, bound).top_degree();
}

namespace {

struct WeightFiber {
  long at_qmax = 0;
  long at_previous = 0;
  bool higher_ok = true;
};

// Quotient of M_{<=D} (fixed u-degree k) by span{(p_i - p_i(c)) m}.
long fiber_piece(const GradedBasis& basis, int k, int D, const std::vector<SparsePoly>& shifted,
                 bool* higher_ok) {
  const auto& spec = basis.spec();
  std::vector<Monomial> cols;
  long dim_m = 0;
  for (int d = 0; d <= D; ++d) {
    auto part = module_monomials(spec.l, spec.n, k, d);
    cols.insert(cols.end(), part.begin(), part.end());
    dim_m += basis.dim(k, d);
  }
  GradedPieceMatrix<Monomial, MonomialHash> mat(std::move(cols));
  const NilpotentMask mask = module_mask(spec.l);
  for (int i = 1; i <= spec.n; ++i)
    for (int d = 0; d + i <= D; ++d)
      for (const auto& b : basis.piece(k, d).basis) mat.insert(multiply(shifted[i], b, &mask).terms());
  if (higher_ok) {
    const int i = spec.n + 1;
    if (i < static_cast<int>(shifted.size()))
      for (int d = 0; d + i <= D; ++d)
        for (const auto& b : basis.piece(k, d).basis)
          if (!mat.contains(multiply(shifted[i], b, &mask).terms())) *higher_ok = false;
  }
  return dim_m - static_cast<long>(mat.rank());
}

}  // namespace

FiberResult fiber_dimension(const ModuleSpec& spec, const std::vector<Rational>& point,
                            int workers) {
  spec.validate();
  if (static_cast<int>(point.size()) != spec.n)
    throw UsageError("fiber_dimension: point must have n coordinates");
  if (spec.qmax < 1) throw UsageError("fiber_dimension: qmax must be >= 1");
  const GradedBasis basis = build_global_demazure(spec);

  std::vector<SparsePoly> shifted;  // p_i - p_i(c), i = 0 .. n+1
  for (int i = 0; i <= spec.n + 1; ++i) {
    Rational value = 0;
    for (const auto& c : point) {
      Rational pw = 1;
      for (int e = 0; e < i; ++e) pw *= c;
      value += pw;
    }
    shifted.push_back(power_sum_z(i, spec.n) - SparsePoly(value));
  }

  std::vector<WeightFiber> per(static_cast<std::size_t>(basis.max_ucount()) + 1);
  parallel_for(per.size(), workers, [&](std::size_t k) {
    per[k].at_qmax = fiber_piece(basis, static_cast<int>(k), spec.qmax, shifted, &per[k].higher_ok);
    per[k].at_previous = fiber_piece(basis, static_cast<int>(k), spec.qmax - 1, shifted, nullptr);
  });

  FiberResult res;
  for (std::size_t k = 0; k < per.size(); ++k) {
    const int w = basis.weight_of(static_cast<int>(k));
    res.by_weight[w] = per[k].at_qmax;
    res.previous_by_weight[w] = per[k].at_previous;
    res.dimension += per[k].at_qmax;
    res.previous_dimension += per[k].at_previous;
    res.higher_power_sums_in_span = res.higher_power_sums_in_span && per[k].higher_ok;
  }
  if (res.by_weight != res.previous_by_weight) res.status = FiberStatus::Inconclusive;

  const bool at_zero = std::all_of(point.begin(), point.end(), [](const Rational& c) { return c == 0; });
  if (at_zero) {
    LaurentCharacter ch(spec.qmax);
    const NilpotentMask mask = module_mask(spec.l);
    for (int k = 0; k <= basis.max_ucount(); ++k) {
      for (int d = 0; d <= spec.qmax; ++d) {
        GradedPieceMatrix<Monomial, MonomialHash> mat(module_monomials(spec.l, spec.n, k, d));
        for (int i = 1; i <= std::min(spec.n, d); ++i)
          for (const auto& b : basis.piece(k, d - i).basis)
            mat.insert(multiply(shifted[i], b, &mask).terms());
        ch.add(basis.weight_of(k), d, basis.dim(k, d) - static_cast<long>(mat.rank()));
      }
    }
    res.graded_character = std::move(ch);
  }
  return res;
}

// ---- fusion ----

LaurentCharacter fusion_character(const std::vector<int>& levels,
                                  const std::vector<Rational>& points, int qmax) {
  const int n = static_cast<int>(levels.size());
  if (n == 0) throw UsageError("fusion_character: need at least one factor");
  if (static_cast<int>(points.size()) != n)
    throw UsageError("fusion_character: one point per factor required");
  for (int l : levels)
    if (l < 1) throw UsageError("fusion_character: levels must be >= 1");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i] == points[j]) throw UsageError("fusion_character: points must be distinct");
  if (qmax < 0) throw UsageError("fusion_character: qmax must be >= 0");

  // powers[i][j] = c_j^i, for i = 0..n.
  std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(n) + 1,
                                            std::vector<Rational>(n, Rational(1)));
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < n; ++j) powers[i][j] = powers[i - 1][j] * points[j];
  {
    // f t^n must be a combination of f t^0 .. f t^{n-1}.
    RowEchelon vander(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      SparseRow row;
      for (int j = 0; j < n; ++j) row.emplace_back(j, powers[i][j]);
      vander.insert(row);
    }
    SparseRow top;
    for (int j = 0; j < n; ++j) top.emplace_back(j, powers[n][j]);
    if (vander.rank() != static_cast<std::size_t>(n) || !vander.contains(top))
      throw std::logic_error("fusion_character: evaluation vectors are not a basis");
  }

  // Tensor basis indexed by (a_1..a_n), a_j in [0, l_j]; mixed radix.
  std::vector<std::uint32_t> stride(static_cast<std::size_t>(n), 1);
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) {
    stride[j] = static_cast<std::uint32_t>(total);
    total *= static_cast<std::size_t>(levels[j]) + 1;
  }
  auto digit = [&](std::uint32_t idx, int j) {
    return static_cast<int>((idx / stride[j]) % (levels[j] + 1));
  };
  // f t^i acting by sum_j c_j^i f_j, with f v_a = v_{a+1}.
  auto apply_f = [&](const SparseRow& v, int i) {
    SparseRow out;
    for (const auto& [idx, c] : v)
      for (int j = 0; j < n; ++j)
        if (digit(idx, j) < levels[j] && powers[i][j] != 0)
          out.emplace_back(idx + stride[j], c * powers[i][j]);
    return normalize_row(std::move(out));
  };

  int top_weight = 0;
  for (int l : levels) top_weight += l;
  LaurentCharacter ch(qmax);
  for (int r = 0; r <= top_weight; ++r) {
    // Multisets {i_1 <= ... <= i_r} from 0..n-1, grouped by t-degree.
    std::map<int, std::vector<std::vector<int>>> by_degree;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int start, int left) {
      if (left == 0) {
        int deg = 0;
        for (int x : cur) deg += x;
        by_degree[deg].push_back(cur);
        return;
      }
      for (int i = start; i < n; ++i) {
        cur.push_back(i);
        rec(i, left - 1);
        cur.pop_back();
      }
    };
    rec(0, r);
    RowEchelon filt(total);
    for (const auto& [deg, sets] : by_degree) {
      long fresh = 0;
      for (const auto& s : sets) {
        SparseRow v{{0u, Rational(1)}};
        for (int i : s) v = apply_f(v, i);
        if (filt.insert(v)) ++fresh;
      }
      ch.add(top_weight - 2 * r, deg, fresh);
    }
  }
  return ch;
}

// ---- symmetric-function identities ----

RelationReport demazure_relation_check(int l, int n) {
  if (l < 1 || n < 1) throw UsageError("demazure_relation_check: need l, n >= 1");
  RelationReport rep;
  const NilpotentMask mask = module_mask(l);
  auto record = [&](const std::string& name, bool ok) {
    rep.checks.emplace_back(name, ok);
    rep.passed = rep.passed && ok;
  };

  std::vector<SparsePoly> g;
  for (int i = 0; i <= n; ++i) g.push_back(module_g(i, n));

  // g_n = sum_{j=1}^n (-1)^{j+1} g_{n-j} e_j(z)
  SparsePoly residual = g[n];
  SparsePoly residual_p = g[n];
  for (int j = 1; j <= n; ++j) {
    SparsePoly t = g[n - j] * elementary_z(j, n);
    SparsePoly tp = g[n - j] * expand_power_sums(newton_to_elementary(j, n), n);
    if (j % 2 == 1) {
      residual -= t;
      residual_p -= tp;
    } else {
      residual += t;
      residual_p += tp;
    }
  }
  residual = residual.masked(mask);
  residual_p = residual_p.masked(mask);
  rep.newton_residual = residual.to_string();
  rep.g_n_expansion = g[n].to_string();
  record("ft^n lies in the symmetric ideal (e_j form)", residual.is_zero());
  record("ft^n lies in the symmetric ideal (E_j(p) form)", residual_p.is_zero());

  bool roundtrip = true;
  for (int j = 0; j <= n; ++j)
    roundtrip = roundtrip && expand_power_sums(newton_to_elementary(j, n), n) == elementary_z(j, n);
  record("E_j(p_1..p_j) expands to e_j", roundtrip);

  // sum_mu (-1)^{sum k mu_k} multinom(l+1; mu) prod_k g_{k-1}^{mu_k} * coefficient_mu(z)
  SparsePoly total, total_p;
  bool others_ok = true;
  bool qmu_roundtrip = true;
  const Integer fact = factorial(l + 1);
  for (const auto& mu : compositions(l + 1, n)) {
    long sign_exp = 0;
    Integer denom = 1;
    for (int k = 1; k <= n; ++k) {
      sign_exp += static_cast<long>(k) * mu[k - 1];
      denom *= factorial(mu[k - 1]);
    }
    Rational coeff(fact / denom);
    if (sign_exp % 2 != 0) coeff = -coeff;
    SparsePoly gprod(1);
    for (int k = 1; k <= n; ++k)
      if (mu[k - 1] > 0) gprod = multiply(gprod, g[k - 1].pow(mu[k - 1], &mask), &mask);
    const SparsePoly zcoeff = q_mu_in_z(mu, n) * coeff;
    const SparsePoly in_p = q_mu_polynomial(mu, n);
    const SparsePoly expanded = expand_power_sums(in_p, n);
    qmu_roundtrip = qmu_roundtrip && expanded == q_mu_in_z(mu, n);
    total += multiply(gprod, zcoeff, &mask);
    total_p += multiply(gprod, expanded * coeff, &mask);
    if (mu[n - 1] == l + 1) {
      rep.top_coefficient = zcoeff.coefficient(Monomial());
      const Rational expected = ((static_cast<long>(n) * (l + 1)) % 2 == 0) ? n : -n;
      record("coefficient of (ft^{n-1})^{l+1} is (-1)^{n(l+1)} n",
             zcoeff == SparsePoly(expected));
    } else {
      others_ok = others_ok && is_symmetric_in_z(zcoeff, n) &&
                  zcoeff.coefficient(Monomial()) == 0;
    }
  }
  record("multinomial power identity vanishes", total.is_zero());
  record("multinomial power identity vanishes (Q_mu(p) form)", total_p.is_zero());
  record("remaining coefficients are symmetric without constant term", others_ok);
  record("Q_mu(p_1..p_n) expands to its defining symmetric polynomial", qmu_roundtrip);
  return rep;
}

}  // namespace arcv
