#include "richardson/laurent.hpp"

#include <vector>

namespace rich {

namespace {

long long ipow(long long base, int e) {
    // e < 0 is exact only for units.
    if (e < 0) {
        if (base == 1) return 1;
        if (base == -1) return (e % 2 == 0) ? 1 : -1;
        if (base == 0) throw std::invalid_argument("BiLaurent: zero to a negative power");
        throw std::invalid_argument("BiLaurent: inexact negative power of non-unit");
    }
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

BiLaurent BiLaurent::eval_t(long long t0) const {
    BiLaurent r;
    for (const auto& [e, c] : terms_) {
        if (e.second < 0 && t0 == 0)
            throw std::invalid_argument("BiLaurent::eval_t: division by zero at t=0");
        r += monomial(c * ipow(t0, e.second), e.first, 0);
    }
    return r;
}

BiLaurent BiLaurent::substitute(int var, long long coeff, int a, int b) const {
    if (var != 1 && var != 2) throw std::invalid_argument("BiLaurent::substitute: var must be 1 or 2");
    if (coeff == 0) throw std::invalid_argument("BiLaurent::substitute: rule must be a monomial");
    BiLaurent r;
    for (const auto& [e, c] : terms_) {
        int k = (var == 1) ? e.first : e.second;
        long long cc = c * ipow(coeff, k);
        if (var == 1)
            r += monomial(cc, a * k, b * k + e.second);
        else
            r += monomial(cc, e.first + a * k, b * k);
    }
    return r;
}

long long BiLaurent::eval(long long x1, long long x2) const {
    long long r = 0;
    for (const auto& [e, c] : terms_) r += c * ipow(x1, e.first) * ipow(x2, e.second);
    return r;
}

std::string BiLaurent::to_string(const std::string& var1, const std::string& var2) const {
    if (terms_.empty()) return "0";
    // map is ascending; we print in descending lex order.
    std::vector<std::pair<Exponents, long long>> ts(terms_.rbegin(), terms_.rend());
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ts) {
        long long a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        auto app = [&mono](const std::string& v, int ex) {
            if (ex == 0) return;
            if (!mono.empty()) mono += " ";
            mono += v;
            if (ex != 1) mono += "^" + std::to_string(ex);
        };
        app(var1, e.first);
        app(var2, e.second);
        if (mono.empty()) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a) + " ";
            out += mono;
        }
    }
    return out;
}

}  // namespace rich
