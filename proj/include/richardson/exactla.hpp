#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace rich {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;  // row major

/// Fraction-free (Bareiss) row echelon form with row pivoting and column
/// skipping. Returns the rank; pivot_cols receives the pivot column of each
/// echelon row. The divisions by the previous pivot are exact.
int bareiss_echelon(IntMat& m, std::vector<int>* pivot_cols = nullptr);

int rank_of(IntMat m);

/// Primitive integer basis of the kernel of m (ncols = number of columns,
/// needed when m has no rows). One vector per free column, in ascending
/// free-column order; each vector has content 1 and positive first entry.
std::vector<IntVec> integer_kernel(IntMat m, int ncols);

/// Echelonizes the span of the given vectors choosing pivots as the LAST
/// nonzero coordinate, processing coordinates right to left. Output rows
/// have pairwise distinct last-nonzero positions (descending), content 1
/// and positive first entry. The pivot positions of a subspace under this
/// rule are matroid-theoretic, so for W inside V the pivot set of W is
/// contained in the pivot set of V.
std::vector<IntVec> right_echelon(std::vector<IntVec> rows);

/// Last nonzero index of v, or -1.
int right_pivot(const IntVec& v);

}  // namespace rich
