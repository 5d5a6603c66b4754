#pragma once

#include <cstdint>
#include <map>

#include "richardson/perm.hpp"
#include "richardson/shapes.hpp"

namespace rich {

/// Arithmetic in F_p for small primes.
struct PrimeField {
    int p;
    explicit PrimeField(int prime);
    int add(int a, int b) const { return (a + b) % p; }
    int sub(int a, int b) const { return (a - b % p + p) % p; }
    int mul(int a, int b) const { return (a * b) % p; }
    int neg(int a) const { return (p - a % p) % p; }
    int inv(int a) const;
};

using FpMatrix = std::vector<std::vector<int>>;  // entries reduced mod p

/// Inverse of a square matrix over F_p; empty when singular.
FpMatrix fp_inverse(const FpMatrix& a, const PrimeField& f);

/// Number of F_p-points of the open Richardson variety: matrices X in
/// M_I^- with det X_{[d] x J} != 0 and (X_{[d] x J})^-1 X in M_J^+. The
/// ambient is clamped to max(i_d, j_d); enumeration refuses more than 20
/// free entries. Not I <= J counts zero.
long long count_points(const Shape& sh, int p);

/// The unique w with A in B w B for the upper-triangular Borel, recovered
/// greedily from the rank pattern r(i,j) = rank A[{i..d} x {1..j}].
Permutation bruhat_cell_of(const FpMatrix& a, const PrimeField& f);

/// Point counts classified by the Bruhat cell of the base change matrix
/// X_{[d] x J}. Keys outside weq_set(sh) raise a consistency failure.
std::map<Permutation, long long> count_by_stratum(const Shape& sh, int p);

}  // namespace rich
