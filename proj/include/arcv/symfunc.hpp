#pragma once

#include <vector>

#include "arcv/poly.hpp"

namespace arcv {

// Symmetric polynomials in z_1..z_n and their expression through power
// sums, written as polynomials in the P-family symbols p_1, p_2, ...

/// e_k(z_1..z_n); with omit = i in 1..n, the same in the n-1 variables z_j, j != i.
SparsePoly elementary_z(int k, int n, int omit = 0);

/// p_i(z) = z_1^i + ... + z_n^i, with p_0 = n.
SparsePoly power_sum_z(int i, int n);

/// E_j in p_1..p_j with E_j(p_1(z), ..., p_j(z)) = e_j(z), via
/// j E_j = sum_{i=1}^j (-1)^{i-1} E_{j-i} p_i.
SparsePoly newton_to_elementary(int j, int n);

/// Replaces each symbol p_i by p_i(z_1..z_n).
SparsePoly expand_power_sums(const SparsePoly& in_p, int n);

/// Writes a symmetric polynomial in z_1..z_n as a polynomial in p_1..p_n.
/// Throws std::logic_error if the input is not symmetric.
SparsePoly symmetric_to_power_sums(const SparsePoly& sym, int n);

/// sum_{i=1}^n prod_{k=1}^n (e^{(i)}_{n-k}(z))^{mu_k}, as a polynomial in z.
SparsePoly q_mu_in_z(const std::vector<int>& mu, int n);

/// Q_mu: the same symmetric polynomial rewritten in power sums.
SparsePoly q_mu_polynomial(const std::vector<int>& mu, int n);

/// True iff p is invariant under every transposition of z_1..z_n.
bool is_symmetric_in_z(const SparsePoly& p, int n);

}  // namespace arcv
