#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "richardson/exactla.hpp"
#include "richardson/laurent.hpp"
#include "richardson/perm.hpp"
#include "richardson/shapes.hpp"

namespace rich {

/// Monomial c * delta~_w y_S in the exterior nil-Coxeter algebra of S_d.
/// yset is a bitmask, bit i-1 for the generator y_i; the ascending wedge
/// order is implicit.
struct NilCoxTerm {
    Permutation w;
    uint32_t yset = 0;
    long long coeff = 0;
};

/// Canonical finite sum of terms: merged, zero-pruned, ordered by
/// (one-line notation, yset).
class NilCoxElement {
public:
    NilCoxElement() = default;
    static NilCoxElement zero() { return {}; }
    static NilCoxElement term(const Permutation& w, uint32_t yset, long long coeff);

    const std::vector<NilCoxTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int rank() const { return terms_.empty() ? -1 : terms_.front().w.size(); }

    NilCoxElement& operator+=(const NilCoxElement& o);
    friend NilCoxElement operator+(NilCoxElement a, const NilCoxElement& b) { return a += b; }
    NilCoxElement operator*(long long c) const;
    bool operator==(const NilCoxElement& o) const;

    /// "delta~_w y_{i<j}" sums; basis_name defaults to the delta~ symbol.
    std::string to_string(const std::string& basis_name = "d~") const;

private:
    std::vector<NilCoxTerm> terms_;  // canonical order, nonzero coeffs
};

/// Product with the nil-Coxeter rule (vanishes unless lengths add) and the
/// commutation rule Y d~_w = d~_w w^-1(Y), Koszul signs from sorting.
NilCoxElement nc_mul(const NilCoxElement& a, const NilCoxElement& b);

/// d(d~_w y_S) = sum over reflections t with l(wt) = l(w) - 1 of
/// d~_{wt} (alpha_t^vee wedge y_S), extended linearly.
NilCoxElement nc_differential(const NilCoxElement& a);

/// Relabels w -> w_0 w (an involution): rewrites between the d~ basis and
/// the Poincare dual basis with del_w = d~_{w_0 w}.
NilCoxElement to_dual_basis(const NilCoxElement& a);

enum class NcBasis { Delta, Partial };

/// Bidegree (p, q) of a basis monomial with k = |yset|:
///   del_w y_S : (2(l(w) + dim B) - k, l(w) + dim B - k)
///   d~_w y_S  : (2(dim G - l(w)) - k, dim G - l(w) - k)
/// plus (2 shift, shift).
std::pair<int, int> bidegree(const NilCoxTerm& t, NcBasis basis, int shift);

/// Subquotient complex on an interval-closed set of del-basis labels.
class GradedComplex {
public:
    struct BasisElem {
        Permutation x;  // del-basis label
        uint32_t yset = 0;
    };

    GradedComplex(std::vector<Permutation> interval_closed_set, int d, int shift);

    int d() const { return d_; }
    int shift() const { return shift_; }
    const std::vector<BasisElem>& basis() const { return basis_; }
    const std::vector<Permutation>& labels() const { return labels_; }

    /// Indices of basis elements in bidegree (p, q), in canonical order.
    const std::map<std::pair<int, int>, std::vector<int>>& blocks() const { return blocks_; }

    /// Matrix of d : block(p,q) -> block(p+1,q); rows index the target block.
    IntMat block_matrix(int p, int q) const;

    /// Differential of a single basis element, as coefficients on the basis.
    std::map<int, long long> differential_of(int basis_index) const;

    struct Cohomology {
        std::map<std::pair<int, int>, int> dims;  // nonzero only
        /// Representative cocycles per bidegree: kernel echelon vectors (last
        /// nonzero coordinate as pivot) whose pivot is not hit by the image.
        std::map<std::pair<int, int>, std::vector<NilCoxElement>> representatives;
        BiLaurent mixpol() const;
    };
    Cohomology cohomology() const;

    /// Bigraded Poincare polynomial of the underlying module (the E1 page).
    BiLaurent e1_mixpol() const;

private:
    int d_ = 0;
    int shift_ = 0;
    std::vector<Permutation> labels_;
    std::vector<BasisElem> basis_;
    std::map<std::pair<int, int>, std::vector<int>> blocks_;
    std::map<std::vector<int>, int> index_;  // (one-line, yset) -> basis index
};

bool is_interval_closed(const std::vector<Permutation>& set, int d);

/// The cohomology model of the open Richardson variety of sh: disjointify,
/// take the Weyl set of the disjoint shape as interval-closed label set and
/// the dimension bookkeeping shift of the original shape.
GradedComplex model(const Shape& sh);

/// Multiplication Model(H,I) x Model(I,J) -> Model(H,J) in the ambient
/// exterior nil-Coxeter algebra: nc_mul followed by projection to the
/// del-basis span of weq_set(H,J). Requires H and J disjoint; factors must
/// be supported on the respective Weyl sets (in del-basis labels).
NilCoxElement model_multiply(const Subset& H, const Subset& I, const Subset& J, int n,
                             const NilCoxElement& a, const NilCoxElement& b);

}  // namespace rich
