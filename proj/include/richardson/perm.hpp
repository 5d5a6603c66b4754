#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace rich {

/// Transposition (k,l) with 1 <= k < l <= n.
struct Reflection {
    int k = 1, l = 2;
    Reflection() = default;
    Reflection(int k_, int l_);
    auto operator<=>(const Reflection&) const = default;
};

/// Element of S_n in one-line notation, 1-based: w(k) = images[k-1].
/// Composition is the left action, (u*v)(k) = u(v(k)).
class Permutation {
public:
    Permutation() = default;  // S_0 identity
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation simple(int i, int n);       // s_i = (i, i+1)
    static Permutation transposition(int k, int l, int n);
    static Permutation longest(int n);             // w_0
    /// Longest element of the parabolic S_d x S_{n-d}.
    static Permutation longest_parabolic(int d, int n);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[static_cast<size_t>(k) - 1]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& u, const Permutation& v);

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }  // lex, for containers

    bool is_identity() const;
    std::string to_string() const;  // "[2,1,3]"

private:
    std::vector<int> img_;
};

/// Inversion count.
int length(const Permutation& w);

/// Bruhat order via the dominance criterion: u <= w iff for every k the
/// sorted set u({1..k}) is entrywise <= sorted w({1..k}).
bool bruhat_leq(const Permutation& u, const Permutation& w);
inline bool bruhat_lt(const Permutation& u, const Permutation& w) {
    return u != w && bruhat_leq(u, w);
}

enum class CoverDirection { Up, Down };

/// All reflections t with length(w*t) = length(w) +- 1.
std::set<Reflection> covering_reflections(const Permutation& w, CoverDirection dir);

/// The unique w with w({1..d}) = I, increasing on {1..d} and {d+1..n}.
Permutation min_rep_for_subset(const std::vector<int>& I, int n);

enum class CosetSide { WP, PW };

/// Minimal coset representative test for W_P = S_d x S_{n-d}: WP side tests
/// w increasing on both blocks, PW side tests the inverse.
bool is_min_coset_rep(const Permutation& w, CosetSide side, int d);

/// Right descents: i with w(i) > w(i+1), ascending.
std::vector<int> right_descents(const Permutation& w);

/// Some reduced word of w as simple reflection indices, leftmost factor first.
std::vector<int> reduced_word(const Permutation& w);

/// Every element of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// Image of a sorted subset, returned sorted.
std::vector<int> apply_to_subset(const Permutation& w, const std::vector<int>& S);

}  // namespace rich
