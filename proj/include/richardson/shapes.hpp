#pragma once

#include <vector>

#include "richardson/perm.hpp"

namespace rich {

using Subset = std::vector<int>;  // strictly increasing values in [n]

/// ell(I) = sum(i_k - k), the length of min_rep_for_subset(I).
int ell(const Subset& I);

/// Componentwise order on d-subsets: I <= J iff i_k <= j_k for all k.
bool subset_leq(const Subset& I, const Subset& J);

/// All d-subsets of [n] in lexicographic order.
std::vector<Subset> all_subsets(int n, int d);

/// Pair (I, J) of d-subsets of [n] indexing a Richardson variety.
struct Shape {
    int n = 0;
    int d = 0;
    Subset I, J;

    Shape() = default;
    Shape(int n_, Subset I_, Subset J_);

    bool comparable() const { return subset_leq(I, J); }
    /// ell(J) - ell(I), the dimension of the Richardson variety when I <= J.
    int dimension() const { return ell(J) - ell(I); }
};

/// The monotonicity set: all w in S_d with i_{w(k)} <= j_k for every k.
/// Empty iff not I <= J.
std::vector<Permutation> wle_set(const Shape& sh);

/// The subset of wle_set with the forced matchings w(k') = k whenever
/// i_k = j_{k'} lies in I cap J.
std::vector<Permutation> weq_set(const Shape& sh);

/// Same set as weq_set, computed by the three-case recursion on
/// s = (l, l+1) with l+1 in J, l not in J (smallest such l), base I = J.
std::vector<Permutation> weq_recursive(const Shape& sh);

/// Distinguished subexpression of a reduced word [t_L,...,t_1], stored
/// leftmost letter first. choices[i] tells whether position word[i] was
/// taken. Prefix products gamma^i = gamma_i ... gamma_1 build from the
/// right end and stay inside the minimal coset representatives W^P.
struct DistSubexpression {
    std::vector<int> word;      // simple reflection indices, leftmost first
    std::vector<bool> choices;  // aligned with word
    int n1 = 0, n2 = 0, m = 0;

    bool operator==(const DistSubexpression& o) const {
        return word == o.word && choices == o.choices;
    }
    bool operator<(const DistSubexpression& o) const {
        return choices < o.choices;
    }
    std::string to_string() const;
};

/// All distinguished subexpressions of the given reduced word evaluating
/// to x. Both x and the word's product must be minimal coset representatives
/// on the WP side for S_d x S_{n-d}. Computed twice, by direct filtering and
/// by the strip-one-letter recursion; the two must agree.
std::vector<DistSubexpression> dist_set(const Permutation& x, const std::vector<int>& word,
                                        int d, int n);

/// (alpha, beta) = (n1, m + n2): the Gm- and A1-exponents of the Deodhar
/// cell attached to gamma.
std::pair<int, int> deodhar_cell_size(const DistSubexpression& gamma);

struct ComparisonEntry {
    DistSubexpression gamma;
    Permutation sigma;  // element of weq_set(sh) in S_d
};

struct ComparisonResult {
    std::vector<int> word;  // the common reduced word of min_rep(J) used
    std::vector<ComparisonEntry> entries;
};

/// The unique bijection dist(x,[y]) <-> weq_set(I,J) obtained by running
/// the D- and W-recursions in lockstep, where x, y are the WP-minimal
/// representatives of I, J.
ComparisonResult comparison_bijection(const Shape& sh);

}  // namespace rich
