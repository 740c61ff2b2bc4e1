#include "arcv/qchar.hpp"

#include <functional>

#include "arcv/errors.hpp"

namespace arcv {

QSeries qbinom(int m, int k, int qmax) {
  if (k < 0 || m < 0 || k > m) return QSeries::zero(qmax);
  // q-Pascal: [m,k] = [m-1,k-1] + q^k [m-1,k], filled row by row.
  std::vector<QSeries> row(static_cast<std::size_t>(m) + 1, QSeries::zero(qmax));
  row[0] = QSeries::one(qmax);
  for (int r = 1; r <= m; ++r) {
    for (int c = std::min(r, k); c >= 1; --c) {
      QSeries next = row[c - 1];
      if (c < r) next += row[c].shifted(c);
      row[c] = std::move(next);
    }
  }
  return row[k];
}

long supernomial_shift(const std::vector<int>& L) {
  const long N = static_cast<long>(L.size());
  long s = 0;
  for (long j = 1; j <= N; ++j) s += std::min(N, j) * L[j - 1];
  return s;
}

QSeries supernomial(const SupernomialParams& p, int qmax) {
  const auto& L = p.L;
  const int N = static_cast<int>(L.size());
  for (int v : L)
    if (v < 0) throw UsageError("supernomial: L entries must be nonnegative");
  QSeries total = QSeries::zero(qmax);
  if (N == 0) {
    if (p.a == 0) total = QSeries::one(qmax);
    return total;
  }
  const long twice = p.a + supernomial_shift(L);
  if (twice < 0 || twice % 2 != 0) return total;
  const long target = twice / 2;

  // suffix[k] = L_k + ... + L_N (1-based k), suffix[N+1] = 0.
  std::vector<long> suffix(static_cast<std::size_t>(N) + 2, 0);
  for (int k = N; k >= 1; --k) suffix[k] = suffix[k + 1] + L[k - 1];

  std::vector<int> j(static_cast<std::size_t>(N) + 1, 0);  // 1-based
  // Choose j_N, j_{N-1}, ..., j_1 with j_k <= L_k + j_{k+1} (j_{N+1} := 0).
  std::function<void(int, long, const QSeries&)> rec = [&](int k, long remaining,
                                                           const QSeries& prod) {
    if (k == 0) {
      if (remaining != 0) return;
      long expo = 0;
      for (int m = 2; m <= N; ++m) expo += static_cast<long>(j[m - 1]) * (suffix[m] - j[m]);
      if (expo < 0) throw UsageError("supernomial: negative q-exponent for this L");
      if (expo > qmax) return;
      total += prod.shifted(static_cast<int>(expo));
      return;
    }
    const int upper = L[k - 1] + (k < N ? j[k + 1] : 0);
    for (int v = 0; v <= upper && v <= remaining; ++v) {
      j[k] = v;
      QSeries b = qbinom(upper, v, qmax);
      if (b.is_zero()) continue;
      rec(k - 1, remaining - v, prod * b);
    }
  };
  rec(N, target, QSeries::one(qmax));
  return total;
}

std::vector<int> demazure_L(int l, int n) {
  if (l < 1) throw UsageError("level l must be >= 1");
  if (n < 0) throw UsageError("n must be >= 0");
  std::vector<int> L(static_cast<std::size_t>(l), 0);
  L.back() = n;
  return L;
}

LaurentCharacter demazure_character(int l, int n, int qmax) {
  const auto L = demazure_L(l, n);
  LaurentCharacter ch(qmax);
  for (int a = -l * n; a <= l * n; a += 2) ch.add(a, supernomial({L, a}, qmax));
  return ch;
}

LaurentCharacter global_demazure_character(int l, int n, int qmax) {
  return demazure_character(l, n, qmax) * qseries_inverse(q_pochhammer(n, qmax));
}

std::vector<std::vector<int>> compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      cur[idx] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, n);
  return out;
}

LaurentCharacter hilbert_leading_quotient(int l, int n, int qmax) {
  if (l < 1) throw UsageError("level l must be >= 1");
  if (n < 0) throw UsageError("n must be >= 0");
  std::vector<QSeries> inv_poch;
  for (int m = 0; m <= n; ++m) inv_poch.push_back(qseries_inverse(q_pochhammer(m, qmax)));
  LaurentCharacter ch(qmax);
  for (const auto& parts : compositions(n, l + 1)) {
    int weight = 0;
    for (int i = 0; i <= l; ++i) weight += parts[i] * (2 * i - l);
    long expo = 0;
    for (int s = 0; s <= l; ++s)
      for (int r = s + 2; r <= l; ++r) expo += static_cast<long>(parts[s]) * parts[r] * (r - s - 1);
    if (expo > qmax) continue;
    QSeries term = QSeries::monomial(qmax, static_cast<int>(expo));
    for (int v : parts) term *= inv_poch[v];
    ch.add(weight, term);
  }
  return ch;
}

}  // namespace arcv
