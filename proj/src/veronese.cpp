#include "arcv/veronese.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "arcv/echelon.hpp"
#include "arcv/errors.hpp"
#include "arcv/parallel.hpp"
#include "arcv/qchar.hpp"

namespace arcv {

void JetRingSpec::validate() const {
  if (l < 1) throw UsageError("JetRingSpec: l must be >= 1");
  if (n < 0) throw UsageError("JetRingSpec: n must be >= 0");
  if (qmax < 0) throw UsageError("JetRingSpec: qmax must be >= 0");
  if (tmax < 0) throw UsageError("JetRingSpec: tmax must be >= 0");
}

TSeries q_series(int s, int r, int w, int tmax) {
  if (r - s < 2 || w < 0 || w > r - s - 2)
    throw UsageError("q_series: inadmissible (s, r, w)");
  TSeries total = TSeries::constant(SparsePoly(), tmax);
  for (int u = s; u <= r - 1; ++u) {
    const Integer c = binomial(r - s - 1, u - s);
    const Rational sign = (u % 2 == 0) ? Rational(c) : Rational(-c);
    TSeries d = tseries_derivative(x_series(u, tmax + w), w);
    total = tseries_add(total, tseries_scale(tseries_mul(d, x_series(r + s - u, tmax)), sign));
  }
  return total;
}

TSeries qprime_series(int s, int r, int w, int tmax) {
  if (r - s < 2 || w < 0 || w > r - s - 2)
    throw UsageError("qprime_series: inadmissible (s, r, w)");
  return tseries_mul(tseries_derivative(x_series(s, tmax + w), w), x_series(r, tmax));
}

std::vector<std::array<int, 3>> generator_indices(int l) {
  std::vector<std::array<int, 3>> out;
  for (int s = 0; s <= l; ++s)
    for (int r = s + 2; r <= l; ++r)
      for (int w = 0; w <= r - s - 2; ++w) out.push_back({s, r, w});
  return out;
}

namespace {

IdealGens build_generators(const JetRingSpec& spec, GeneratorKind kind) {
  spec.validate();
  IdealGens out{kind, {}};
  for (const auto& [s, r, w] : generator_indices(spec.l)) {
    TSeries series = kind == GeneratorKind::Q ? q_series(s, r, w, spec.tmax)
                                              : qprime_series(s, r, w, spec.tmax);
    for (int k = 0; k <= spec.tmax; ++k) out.gens.push_back({s, r, w, k, series[k]});
  }
  return out;
}

}  // namespace

IdealGens build_Q(const JetRingSpec& spec) { return build_generators(spec, GeneratorKind::Q); }
IdealGens build_Qprime(const JetRingSpec& spec) {
  return build_generators(spec, GeneratorKind::Qprime);
}

SparsePoly leading_component_prime(const SparsePoly& p, int l) {
  int best = -1;
  for (const auto& t : p.terms()) best = std::max(best, monomial_degree(t.first, l).deg_prime);
  std::vector<Term> keep;
  for (const auto& t : p.terms())
    if (monomial_degree(t.first, l).deg_prime == best) keep.push_back(t);
  return SparsePoly::from_terms(std::move(keep));
}

// ---- nu_l ----

VeroneseMap::VeroneseMap(int l, int order) : l_(l), order_(order) {
  if (l < 1) throw UsageError("VeroneseMap: l must be >= 1");
  if (order < 0) throw UsageError("VeroneseMap: negative order");
  const TSeries a = a_series(order), b = b_series(order);
  const TSeries one = TSeries::constant(SparsePoly(1), order);
  for (int j = 0; j <= l; ++j) {
    TSeries s = one;
    for (int m = 0; m < l - j; ++m) s = tseries_mul(s, a);
    for (int m = 0; m < j; ++m) s = tseries_mul(s, b);
    images_.push_back(std::move(s));
  }
}

const SparsePoly& VeroneseMap::image(int j, int i) const {
  if (j < 0 || j > l_) throw UsageError("VeroneseMap: x index out of range");
  if (i > order_)
    throw TruncationError("VeroneseMap: jet index " + std::to_string(i) +
                              " exceeds precomputed order " + std::to_string(order_),
                          i);
  return images_[j][i];
}

SparsePoly VeroneseMap::apply(const SparsePoly& p) const {
  return substitute(p, [this](const Variable& v) -> std::optional<SparsePoly> {
    if (v.family != Family::X || v.outer > l_) return std::nullopt;
    return image(v.outer, v.inner);
  });
}

namespace {

int max_jet_index(const SparsePoly& p) {
  int top = 0;
  for (const auto& t : p.terms())
    for (const auto& f : t.first.factors()) top = std::max(top, Variable::from_key(f.first).inner);
  return top;
}

}  // namespace

bool kernel_membership(const SparsePoly& p, int l, int order) {
  const int needed = max_jet_index(p);
  if (needed > order)
    throw TruncationError("kernel_membership: polynomial needs a/b through order " +
                              std::to_string(needed),
                          needed);
  return VeroneseMap(l, order).apply(p).is_zero();
}

// ---- monomial enumeration ----

std::vector<Monomial> jet_monomials(int l, int degree, int qdeg, int weight) {
  std::vector<Monomial> out;
  if (degree < 0 || qdeg < 0) return out;
  struct Var {
    int j, i;
    std::uint32_t key;
  };
  std::vector<Var> vars;
  for (int j = 0; j <= l; ++j)
    for (int i = 0; i <= qdeg; ++i) vars.push_back({j, i, Variable::x(j, i).key()});
  std::vector<Monomial::Factor> cur;
  auto feasible = [l](int count, int w) {
    return std::abs(w) <= l * count && ((w - l * count) % 2 == 0);
  };
  if (!feasible(degree, weight)) return out;
  std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t idx, int deg_left,
                                                            int q_left, int w_left) {
    if (deg_left == 0) {
      if (q_left == 0 && w_left == 0) out.emplace_back(cur);
      return;
    }
    if (idx == vars.size()) return;
    const Var& v = vars[idx];
    int emax = deg_left;
    if (v.i > 0) emax = std::min(emax, q_left / v.i);
    for (int e = emax; e >= 0; --e) {
      const int wl = w_left - e * (2 * v.j - l);
      if (!feasible(deg_left - e, wl)) continue;
      if (e > 0) cur.emplace_back(v.key, static_cast<std::uint32_t>(e));
      rec(idx + 1, deg_left - e, q_left - e * v.i, wl);
      if (e > 0) cur.pop_back();
    }
  };
  rec(0, degree, qdeg, weight);
  std::sort(out.begin(), out.end(),
            [](const Monomial& x, const Monomial& y) { return grevlex_greater(x, y); });
  return out;
}

// ---- quotient characters ----

namespace {

struct GradedGenerator {
  const SparsePoly* poly;
  int qdeg;
  int weight;
};

long piece_rank_ideal(const JetRingSpec& spec, const std::vector<GradedGenerator>& gens,
                      const std::vector<Monomial>& ambient, int qdeg, int weight) {
  if (spec.n < 2 || ambient.empty()) return 0;
  GradedPieceMatrix<Monomial, MonomialHash> m(ambient);
  for (const auto& g : gens) {
    if (g.qdeg > qdeg) continue;
    for (const auto& mult : jet_monomials(spec.l, spec.n - 2, qdeg - g.qdeg, weight - g.weight)) {
      if (m.rank() == m.ncols()) return static_cast<long>(m.rank());
      m.insert(g.poly->times(mult).terms());
    }
  }
  return static_cast<long>(m.rank());
}

long piece_rank_image(const VeroneseMap& nu, const std::vector<Monomial>& ambient) {
  if (ambient.empty()) return 0;
  std::vector<SparsePoly> images;
  images.reserve(ambient.size());
  std::set<Monomial> cols;
  for (const auto& mono : ambient) {
    images.push_back(nu.apply(SparsePoly(mono)));
    for (const auto& t : images.back().terms()) cols.insert(t.first);
  }
  std::vector<Monomial> column_index(cols.begin(), cols.end());
  std::sort(column_index.begin(), column_index.end(),
            [](const Monomial& x, const Monomial& y) { return grevlex_greater(x, y); });
  GradedPieceMatrix<Monomial, MonomialHash> m(std::move(column_index));
  for (const auto& img : images) m.insert(img.terms());
  return static_cast<long>(m.rank());
}

}  // namespace

QuotientResult quotient_pieces(const JetRingSpec& spec, IdealKind ideal, int workers) {
  spec.validate();
  QuotientResult result{LaurentCharacter(spec.qmax), {}};
  if (spec.n == 0) {
    result.character = LaurentCharacter::unit(spec.qmax);
    result.pieces.push_back({0, 0, 1, 0, 1});
    return result;
  }
  if (ideal != IdealKind::KernelNu && spec.n >= 2 && spec.tmax < spec.qmax)
    throw TruncationError("quotient_character: generator series known through t^" +
                              std::to_string(spec.tmax) + " but q-degree " +
                              std::to_string(spec.qmax) + " needs order " +
                              std::to_string(spec.qmax),
                          spec.qmax);

  IdealGens gens{GeneratorKind::Q, {}};
  std::vector<GradedGenerator> graded;
  if (ideal != IdealKind::KernelNu) {
    JetRingSpec gspec = spec;
    gspec.tmax = std::min(spec.tmax, spec.qmax);
    gens = ideal == IdealKind::Q ? build_Q(gspec) : build_Qprime(gspec);
    for (const auto& g : gens.gens) {
      if (g.poly.is_zero()) continue;
      auto d = multidegree(g.poly, spec.l);
      if (!d || d->deg1 != 2)
        throw std::logic_error("quotient_character: inhomogeneous generator");
      if (d->deg2 <= spec.qmax) graded.push_back({&g.poly, d->deg2, d->deg3});
    }
  }
  std::unique_ptr<VeroneseMap> nu;
  if (ideal == IdealKind::KernelNu) nu = std::make_unique<VeroneseMap>(spec.l, spec.qmax);

  std::vector<std::pair<int, int>> keys;  // (qdeg, weight)
  for (int k = 0; k <= spec.qmax; ++k)
    for (int a = -spec.l * spec.n; a <= spec.l * spec.n; a += 2) keys.emplace_back(k, a);
  std::vector<PieceDims> pieces(keys.size());
  parallel_for(keys.size(), workers, [&](std::size_t idx) {
    const auto [k, a] = keys[idx];
    const auto ambient = jet_monomials(spec.l, spec.n, k, a);
    long rank = 0;
    long quotient = 0;
    if (ideal == IdealKind::KernelNu) {
      rank = piece_rank_image(*nu, ambient);
      quotient = rank;
    } else {
      rank = piece_rank_ideal(spec, graded, ambient, k, a);
      quotient = static_cast<long>(ambient.size()) - rank;
    }
    pieces[idx] = {a, k, static_cast<long>(ambient.size()), rank, quotient};
  });
  for (const auto& p : pieces) result.character.add(p.weight, p.qdeg, p.quotient);
  result.pieces = std::move(pieces);
  return result;
}

LaurentCharacter quotient_character(const JetRingSpec& spec, IdealKind ideal, int workers) {
  return quotient_pieces(spec, ideal, workers).character;
}

ReducedReport verify_reduced(int l, int nmax, int qmax, int workers) {
  ReducedReport rep{l, nmax, qmax, true, {}, {}};
  for (int n = 0; n <= nmax; ++n) {
    const JetRingSpec spec = JetRingSpec::make(l, n, qmax);
    const auto chq = quotient_character(spec, IdealKind::Q, workers);
    const auto chp = quotient_character(spec, IdealKind::Qprime, workers);
    const auto chk = quotient_character(spec, IdealKind::KernelNu, workers);
    const auto chg = global_demazure_character(l, n, qmax);
    const auto chh = hilbert_leading_quotient(l, n, qmax);
    for (int a = -l * n; a <= l * n; a += 2) {
      for (int k = 0; k <= qmax; ++k) {
        CoefficientComparison c{n,
                                a,
                                k,
                                chq.coefficient(a, k),
                                chk.coefficient(a, k),
                                chg.coefficient(a, k),
                                chh.coefficient(a, k),
                                chp.coefficient(a, k),
                                true};
        c.ok = c.q_quotient == c.kernel_quotient && c.kernel_quotient == c.global_demazure &&
               c.global_demazure == c.leading_sum && c.qprime_quotient >= c.q_quotient;
        if (!c.ok) {
          rep.passed = false;
          std::ostringstream os;
          os << "mismatch at n=" << n << " a=" << a << " k=" << k << ": S/I=" << c.q_quotient
             << " S/ker=" << c.kernel_quotient << " global=" << c.global_demazure
             << " composition=" << c.leading_sum << " S/I'=" << c.qprime_quotient;
          rep.failures.push_back(os.str());
        }
        rep.rows.push_back(std::move(c));
      }
    }
  }
  return rep;
}

}  // namespace arcv
