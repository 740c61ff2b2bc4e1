#include "arcv/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "arcv/demazure.hpp"
#include "arcv/errors.hpp"
#include "arcv/qchar.hpp"
#include "arcv/symfunc.hpp"
#include "arcv/veronese.hpp"

namespace arcv {

Profile parse_profile(const std::string& name) {
  if (name == "desk") return Profile::Desk;
  if (name == "quick") return Profile::Quick;
  if (name == "stretch") return Profile::Stretch;
  throw UsageError("unknown profile '" + name + "' (expected desk, quick or stretch)");
}

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  long checks = 0;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (passed) detail << "first failure: " << what;
      passed = false;
    }
  }
};

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::string grid(const char* name, int lo, int hi) {
  return std::string(name) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// 1. S/I == S/ker nu == global Demazure == composition sum.
void reducedness(Outcome& o, Profile profile, int workers) {
  const int qmax = profile == Profile::Quick ? 4 : 6;
  const int nmax = profile == Profile::Quick ? 2 : 3;
  std::vector<std::pair<int, int>> runs = {{2, nmax}, {3, nmax}};
  if (profile == Profile::Stretch) runs.emplace_back(4, 2);
  long coeffs = 0;
  for (auto [l, nm] : runs) {
    const auto rep = verify_reduced(l, nm, qmax, workers);
    coeffs += static_cast<long>(rep.rows.size());
    o.require(rep.passed, rep.failures.empty() ? "l=" + std::to_string(l) : rep.failures.front());
  }
  o.detail << coeffs << " coefficients compared, qmax=" << qmax;
}

// 2. Every Q_{s,r,w} coefficient through t^8 lies in ker nu_l.
void kernel_membership_all(Outcome& o) {
  const int tmax = 8;
  long count = 0;
  for (int l = 1; l <= 4; ++l) {
    const VeroneseMap nu(l, tmax + l);  // derivatives reach jet index tmax + w
    for (const auto& g : build_Q({l, 2, tmax, tmax}).gens) {
      ++count;
      o.require(nu.apply(g.poly).is_zero(),
                "Q_{" + std::to_string(g.s) + "," + std::to_string(g.r) + "," +
                    std::to_string(g.w) + "} t^" + std::to_string(g.k) + " at l=" +
                    std::to_string(l));
    }
  }
  if (o.passed) o.detail << count << " generator coefficients map to 0 (l<=4, t-order<=8)";
}

std::vector<std::vector<Rational>> fiber_points(int n, std::mt19937& rng) {
  std::vector<std::vector<Rational>> pts;
  pts.emplace_back(n, Rational(0));
  std::vector<Rational> seq, random, collision(n, Rational(1));
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int j = 0; j < n; ++j) {
    seq.emplace_back(j);
    random.push_back(make_rational(num(rng), den(rng)));
  }
  pts.push_back(seq);
  pts.push_back(random);
  pts.push_back(collision);
  return pts;
}

std::string point_text(const std::vector<Rational>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + to_string(c[i]);
  return s + ")";
}

// sl2 weight multiplicities of V_{l omega}^{tensor n}.
std::map<int, long> tensor_power_weights(int l, int n) {
  std::map<int, long> w{{0, 1}};
  for (int f = 0; f < n; ++f) {
    std::map<int, long> next;
    for (auto [a, m] : w)
      for (int b = -l; b <= l; b += 2) next[a + b] += m;
    w = std::move(next);
  }
  return w;
}

// 3. Fiber dimension (l+1)^n at several points.
void fiber_dimensions(Outcome& o, Profile profile, int workers) {
  std::mt19937 rng(20240607);
  const int lmax = 3, nmax = profile == Profile::Quick ? 2 : 3;
  long runs = 0;
  for (int l = 1; l <= lmax; ++l) {
    for (int n = 1; n <= nmax; ++n) {
      const int qmax = demazure_top_degree(l, n) + 1;
      const long expected = ipow(l + 1, n);
      for (const auto& c : fiber_points(n, rng)) {
        ++runs;
        const auto res = fiber_dimension({l, n, qmax}, c, workers);
        const std::string tag =
            "l=" + std::to_string(l) + " n=" + std::to_string(n) + " c=" + point_text(c);
        o.require(res.status == FiberStatus::Ok, tag + " inconclusive truncation");
        o.require(res.dimension == expected,
                  tag + " dim " + std::to_string(res.dimension) + " != " + std::to_string(expected));
        o.require(res.higher_power_sums_in_span, tag + " p_{n+1} not redundant");
        std::map<int, long> nonzero;
        for (auto [w, d] : res.by_weight)
          if (d) nonzero[w] = d;
        o.require(nonzero == tensor_power_weights(l, n), tag + " weight multiplicities");
        if (res.graded_character)
          o.require(*res.graded_character == demazure_character(l, n, qmax),
                    tag + " graded fiber differs from the Demazure character");
      }
    }
  }
  if (o.passed) o.detail << runs << " fibers, l<=3, " << grid("n", 1, nmax) << ", 4 points each";
}

// 4. ch of the materialized module == (1/(q)_n) ch D.
void character_factorization(Outcome& o, Profile profile) {
  const int qmax = profile == Profile::Quick ? 4 : 6;
  const int nmax = profile == Profile::Quick ? 2 : 3;
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= nmax; ++n) {
      const auto basis = build_global_demazure({l, n, qmax});
      const auto expected =
          demazure_character(l, n, qmax) * qseries_inverse(q_pochhammer(n, qmax));
      o.require(basis.character() == expected,
                "l=" + std::to_string(l) + " n=" + std::to_string(n));
    }
  if (o.passed) o.detail << "l<=3, " << grid("n", 1, nmax) << ", qmax=" << qmax;
}

// 5. Supernomial dimension and support.
void supernomial_dimension(Outcome& o) {
  for (int l = 1; l <= 4; ++l) {
    for (int n = 0; n <= 4; ++n) {
      const int qmax = l * n * n + n * n + 1;
      const auto L = demazure_L(l, n);
      Rational total = 0;
      for (int a = -l * n - 4; a <= l * n + 4; ++a) {
        const QSeries s = supernomial({L, a}, qmax);
        const bool in_support = std::abs(a) <= l * n && (a - l * n) % 2 == 0;
        if (!in_support) o.require(s.is_zero(), "nonzero outside support at a=" + std::to_string(a));
        o.require(s.has_integer_coeffs() && s.has_nonnegative_coeffs(), "non-integral coefficients");
        o.require(s.top_degree() < qmax, "truncation too small");
        total += s.at_one();
      }
      o.require(total == ipow(l + 1, n), "l=" + std::to_string(l) + " n=" + std::to_string(n) +
                                             " total " + to_string(total));
    }
  }
  if (o.passed) o.detail << "l<=4, n<=4";
}

// 6. Composition sum == global Demazure character.
void hilbert_identity(Outcome& o) {
  for (int l = 1; l <= 4; ++l)
    for (int n = 0; n <= 4; ++n)
      o.require(hilbert_leading_quotient(l, n, 8) == global_demazure_character(l, n, 8),
                "l=" + std::to_string(l) + " n=" + std::to_string(n));
  if (o.passed) o.detail << "l<=4, n<=4, qmax=8";
}

// 7. Fusion of n level-l evaluation modules == Demazure character.
void fusion_coincidence(Outcome& o) {
  const std::vector<std::vector<Rational>> pools = {
      {Rational(0), Rational(1), Rational(2)},
      {Rational(-1), make_rational(1, 2), Rational(3)},
      {make_rational(2, 3), Rational(-5), make_rational(7, 4)},
  };
  long runs = 0;
  for (int l = 1; l <= 2; ++l)
    for (int n = 1; n <= 3; ++n) {
      const int qmax = demazure_top_degree(l, n) + 1;
      const auto expected = demazure_character(l, n, qmax);
      for (const auto& pool : pools) {
        ++runs;
        std::vector<Rational> pts(pool.begin(), pool.begin() + n);
        o.require(fusion_character(std::vector<int>(n, l), pts, qmax) == expected,
                  "l=" + std::to_string(l) + " n=" + std::to_string(n) + " c=" + point_text(pts));
      }
    }
  if (o.passed) o.detail << runs << " fusion products, l<=2, n<=3, 3 point sets";
}

// 8. Symmetric-function identities.
void symmetric_identities(Outcome& o) {
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= 4; ++n) {
      const auto rep = demazure_relation_check(l, n);
      for (const auto& [name, ok] : rep.checks)
        o.require(ok, "l=" + std::to_string(l) + " n=" + std::to_string(n) + ": " + name);
    }
  if (o.passed) o.detail << "l<=3, n<=4";
}

SparsePoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), var(0, 2), jet(0, 2);
  std::vector<Term> terms;
  for (int t = 0; t < 3; ++t) {
    Monomial m = Monomial::of(Variable::x(var(rng), jet(rng))) * Monomial::of(Variable::x(var(rng), jet(rng)));
    terms.emplace_back(m, Rational(coef(rng)));
  }
  return SparsePoly::from_terms(std::move(terms));
}

// 9. Structural invariants.
void structural(Outcome& o, Profile profile, int workers) {
  // current-algebra closure of the materialized module
  const int cq = profile == Profile::Quick ? 3 : 4;
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= 3; ++n) {
      const auto rep = check_current_closure(build_global_demazure({l, n, cq}));
      o.require(rep.passed, rep.failures.empty() ? "closure" : rep.failures.front());
    }

  // Leibniz rule for the formal t-derivative
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SparsePoly> fc, gc;
    for (int k = 0; k <= 4; ++k) {
      fc.push_back(random_poly(rng));
      gc.push_back(random_poly(rng));
    }
    const TSeries f(fc), g(gc);
    const TSeries lhs = tseries_derivative(tseries_mul(f, g), 1);
    const TSeries rhs =
        tseries_add(tseries_mul(tseries_derivative(f, 1), g), tseries_mul(f, tseries_derivative(g, 1)));
    for (int k = 0; k <= lhs.tmax(); ++k) o.require(lhs[k] == rhs[k], "Leibniz rule");
  }

  // h t^i on products of g's: [h t^i, f t^j] = -2 f t^{i+j}, h t^i . 1 = l p_i
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= 3; ++n) {
      const NilpotentMask mask = module_mask(l);
      std::uniform_int_distribution<int> idx(0, 2), count(0, 3);
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<int> is(count(rng));
        for (auto& x : is) x = idx(rng);
        const int i = idx(rng);
        SparsePoly prod(1);
        for (int x : is) prod = multiply(prod, module_g(x, n), &mask);
        SparsePoly expected = multiply(power_sum_z(i, n) * Rational(l), prod, &mask);
        for (std::size_t s = 0; s < is.size(); ++s) {
          SparsePoly alt(1);
          for (std::size_t r = 0; r < is.size(); ++r)
            alt = multiply(alt, module_g(is[r] + (r == s ? i : 0), n), &mask);
          expected -= alt * Rational(2);
        }
        o.require(apply_operator({OperatorKind::H, i}, prod, l, n) == expected,
                  "h t^i derivation property");
      }
    }

  // leading-term inequality per piece
  const int qmax = profile == Profile::Quick ? 4 : 6;
  for (int l = 2; l <= 3; ++l)
    for (int n = 1; n <= 3; ++n) {
      const auto spec = JetRingSpec::make(l, n, qmax);
      const auto pq = quotient_pieces(spec, IdealKind::Q, workers).pieces;
      const auto pp = quotient_pieces(spec, IdealKind::Qprime, workers).pieces;
      for (std::size_t i = 0; i < pq.size(); ++i)
        o.require(pp[i].quotient >= pq[i].quotient, "ch(S/I') >= ch(S/I) at l=" +
                                                       std::to_string(l) + " n=" + std::to_string(n));
    }
  if (o.passed) o.detail << o.checks << " structural checks";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts, const std::function<void(const CriterionResult&)>& on_result) {
  struct Entry {
    int id;
    const char* name;
    std::function<void(Outcome&)> body;
  };
  const Profile p = opts.profile;
  const int w = opts.workers;
  const std::vector<Entry> entries = {
      {1, "reducedness at truncation", [&](Outcome& o) { reducedness(o, p, w); }},
      {2, "kernel membership of Q generators", [&](Outcome& o) { kernel_membership_all(o); }},
      {3, "Demazure fiber dimensions", [&](Outcome& o) { fiber_dimensions(o, p, w); }},
      {4, "global character factorization", [&](Outcome& o) { character_factorization(o, p); }},
      {5, "supernomial dimension and support", [&](Outcome& o) { supernomial_dimension(o); }},
      {6, "leading-term Hilbert series identity", [&](Outcome& o) { hilbert_identity(o); }},
      {7, "fusion coincidence", [&](Outcome& o) { fusion_coincidence(o); }},
      {8, "symmetric-function identities", [&](Outcome& o) { symmetric_identities(o); }},
      {9, "structural invariants", [&](Outcome& o) { structural(o, p, w); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.body(o);
    } catch (const std::exception& ex) {
      o.passed = false;
      o.detail << " exception: " << ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back({e.id, e.name, o.passed, o.detail.str(), secs});
    if (on_result) on_result(results.back());
  }
  return results;
}

}  // namespace arcv
