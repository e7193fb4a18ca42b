#include "superyang/poly.hpp"

#include <sstream>

namespace superyang {

namespace {

/// Positive divisors of |n| by trial division (n != 0), unsorted.
std::vector<Int> divisors(const Int& n) {
    Int a = abs(n);
    std::vector<Int> out;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
        }
    }
    return out;
}

/// Content-free integer coefficients of a rational polynomial.
std::vector<Int> integerized(const Poly1& p) {
    Int lcm_den = 1;
    for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, c.get_den());
    std::vector<Int> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (lcm_den / c.get_den()));
    Int g = 0;
    for (const auto& z : out) g = gcd(g, z);
    if (g > 1)
        for (auto& z : out) z /= g;
    return out;
}

}  // namespace

RootList rational_roots(const Poly1& p) {
    if (p.is_zero()) throw DomainError("root extraction from the zero polynomial");
    RootList result;
    Poly1 rest = p;

    // Factor out the root 0 first so the trailing coefficient is nonzero.
    int zero_mult = 0;
    while (!rest.is_zero() && ScalarTraits<Rational>::is_zero(rest.coeff(0)) && rest.degree() > 0) {
        rest = poly_exact_div(rest, Poly1::variable());
        ++zero_mult;
    }

    if (rest.degree() > 0) {
        const std::vector<Int> ic = integerized(rest);
        std::vector<Rational> candidates;
        for (const Int& pn : divisors(ic.front()))
            for (const Int& qd : divisors(ic.back())) {
                Rational r(pn, qd);
                r.canonicalize();
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const Rational& r : candidates) {
            int mult = 0;
            const Poly1 lin(std::vector<Rational>{-r, Rational(1)});
            while (rest.degree() > 0 && ScalarTraits<Rational>::is_zero(rest.eval(r))) {
                rest = poly_exact_div(rest, lin);
                ++mult;
            }
            if (mult > 0) result.roots.emplace_back(r, mult);
        }
    }

    if (zero_mult > 0) {
        result.roots.emplace_back(Rational(0), zero_mult);
        std::sort(result.roots.begin(), result.roots.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    result.remainder = rest;
    return result;
}

Poly1 poly_parse(const std::string& text) {
    std::vector<Rational> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(rat_parse(item));
    if (coeffs.empty()) throw DomainError("empty polynomial literal");
    return Poly1(std::move(coeffs));
}

std::string poly_str(const Poly1& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (ScalarTraits<Rational>::is_zero(c)) continue;
        std::string term;
        const Rational a = abs(c);
        if (k == 0 || a != 1) term += rat_str(a);
        if (k > 0) {
            if (!term.empty()) term += "*";
            term += var;
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (out.empty())
            out = (sgn(c) < 0 ? "-" : "") + term;
        else
            out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace superyang
