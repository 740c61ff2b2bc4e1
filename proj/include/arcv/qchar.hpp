#pragma once

#include <vector>

#include "arcv/character.hpp"
#include "arcv/qseries.hpp"

namespace arcv {

/// Gaussian binomial [m choose k]_q truncated at qmax; zero unless 0 <= k <= m.
QSeries qbinom(int m, int k, int qmax);

/// Parameters of a q-supernomial coefficient: L in Z_{>=0}^N and a weight a.
struct SupernomialParams {
  std::vector<int> L;
  int a = 0;
};

/// L'_N = sum_j min(N, j) L_j, the last entry of the min-matrix image of L.
long supernomial_shift(const std::vector<int>& L);

/// q-supernomial coefficient by direct enumeration of (j_1..j_N) with
/// sum j_k = (a + L'_N) / 2. Zero when the parity fails.
QSeries supernomial(const SupernomialParams& p, int qmax);

/// L = (0, ..., 0, n) of length l.
std::vector<int> demazure_L(int l, int n);

/// Level-l Demazure character for sl2 and highest weight n*omega.
LaurentCharacter demazure_character(int l, int n, int qmax);

/// demazure_character(l, n) / (q)_n.
LaurentCharacter global_demazure_character(int l, int n, int qmax);

/// Composition sum over n_0 + ... + n_l = n of
///   e^{sum n_i (2i - l)} q^{sum_{r-s>=2} n_s n_r (r-s-1)} / prod (q)_{n_i}.
LaurentCharacter hilbert_leading_quotient(int l, int n, int qmax);

/// Enumerate all compositions of n into parts nonnegative parts.
std::vector<std::vector<int>> compositions(int n, int parts);

}  // namespace arcv
