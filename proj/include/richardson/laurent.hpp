#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace rich {

/// Exact Laurent polynomial in two commuting variables with integer
/// coefficients. The first variable is the weight variable (q or v or u),
/// the second the cohomological one (t). Terms are kept in a canonical
/// sorted map with no zero coefficients, so operator== is structural
/// equality of polynomials.
class BiLaurent {
public:
    using Exponents = std::pair<int, int>;  // (e1, e2)

    BiLaurent() = default;

    static BiLaurent zero() { return BiLaurent{}; }
    static BiLaurent one() { return monomial(1, 0, 0); }

    static BiLaurent monomial(long long coeff, int e1, int e2) {
        BiLaurent p;
        if (coeff != 0) p.terms_[{e1, e2}] = coeff;
        return p;
    }

    const std::map<Exponents, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coeff(int e1, int e2) const {
        auto it = terms_.find({e1, e2});
        return it == terms_.end() ? 0 : it->second;
    }

    BiLaurent& operator+=(const BiLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    BiLaurent& operator-=(const BiLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
    friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }

    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
        BiLaurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    BiLaurent& operator*=(const BiLaurent& o) { return *this = *this * o; }

    BiLaurent operator-() const {
        BiLaurent r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    bool operator==(const BiLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiLaurent& o) const { return !(*this == o); }

    BiLaurent pow(int k) const {
        if (k < 0) throw std::invalid_argument("BiLaurent::pow: negative exponent");
        BiLaurent r = one();
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /// Substitute an integer for the second variable. Result lives in the
    /// first variable only (all second exponents zero). Negative exponents
    /// of the second variable are only exact for t0 = +-1.
    BiLaurent eval_t(long long t0) const;

    /// Substitute var (1 or 2) by the monomial coeff * x^a y^b.
    BiLaurent substitute(int var, long long coeff, int a, int b) const;

    /// Full integer evaluation; requires nonnegative exponents unless the
    /// corresponding value is +-1.
    long long eval(long long x1, long long x2) const;

    /// Canonical text, terms in descending lex order on (e1, e2),
    /// e.g. "q^4 t^8 + 2 q^3 t^7 - t".
    std::string to_string(const std::string& var1 = "q",
                          const std::string& var2 = "t") const;

private:
    void add_term(int e1, int e2, long long c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Exponents, long long> terms_;
};

}  // namespace rich
