#pragma once

#include <vector>

#include "richardson/laurent.hpp"
#include "richardson/shapes.hpp"

namespace rich {

enum class DecompositionKind { Gauss, Deodhar };

/// One part of a decomposition, isomorphic to (Gm)^alpha x A^beta.
struct StratumDescriptor {
    Permutation w;
    int alpha = 0;
    int beta = 0;
    DecompositionKind kind = DecompositionKind::Gauss;
};

/// One descriptor per w in wle_set(sh), with
///   alpha = #{k : i_{w(k)} != j_k},  beta = ell(J) - ell(I) - alpha - l(w).
std::vector<StratumDescriptor> gauss_strata(const Shape& sh);

/// One descriptor per w in weq_set(sh), with alpha = d - |I cap J| and
///   beta = ell(J) - ell(I) - alpha - #{(k,k') : i_k < j_{k'} < j_{w^-1(k)}} + l(w).
std::vector<StratumDescriptor> deodhar_strata(const Shape& sh);

/// Sum over strata of (q t^2 + t)^alpha (q t^2)^beta; at t = -1 this is the
/// number of F_q-points.
BiLaurent point_count_poly(const std::vector<StratumDescriptor>& strata);

/// Rank of the base change vector bundle R(I,J) -> B(I,J):
///   #{(k,l) : l not in I cup J, i_k < l < j_k}.
int basechange_rank(const Shape& sh);

struct DisjointifyResult {
    Shape shape;     // I' cap J' empty, relabeled ambient
    int total_rank;  // sum of the per-removal ranks k - k'
};

/// Iteratively removes each i_k = j_{k'} in I cap J (relabeling ambient
/// columns), accumulating rank k - k' per removal. Dimension bookkeeping:
/// ell(J) - ell(I) = ell(J') - ell(I') + total_rank.
DisjointifyResult disjointify(const Shape& sh);

/// Remove-order variant for order-independence checks: removal_order lists
/// positions into the current I cap J at each step.
DisjointifyResult disjointify_with_order(const Shape& sh, const std::vector<int>& removal_order);

/// Restriction map weq_set(I,J) -> weq_set(I',J') from dropping the matched
/// pairs of a common column and renumbering.
Permutation restrict_weq_element(const Shape& sh, const Permutation& w);

/// The affine shift rho of the cohomology model: for every w in weq_set,
/// (alpha + beta_w) - l(restrict(w)) - d'(d'+1)/2 (constant across w).
int model_shift(const Shape& sh);

}  // namespace rich
