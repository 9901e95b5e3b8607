#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace homvec {

/// Sparse exact polynomial in one (x) or two (x, y) variables. Zero
/// coefficients are never stored.
class Polynomial {
public:
    using Exponent = std::array<unsigned, 2>;

    explicit Polynomial(unsigned arity = 1) : arity_(arity) {
        if (arity != 1 && arity != 2) throw ValidationError("polynomial arity must be 1 or 2");
    }

    static Polynomial constant(const Rational& c, unsigned arity = 1) {
        Polynomial p(arity);
        p.add_term({0, 0}, c);
        return p;
    }
    static Polynomial x(unsigned arity = 1) {
        Polynomial p(arity);
        p.add_term({1, 0}, 1);
        return p;
    }
    static Polynomial y() {
        Polynomial p(2);
        p.add_term({0, 1}, 1);
        return p;
    }
    /// Univariate from ascending coefficients.
    static Polynomial from_coefficients(const std::vector<Rational>& ascending) {
        Polynomial p(1);
        for (unsigned i = 0; i < ascending.size(); ++i) p.add_term({i, 0}, ascending[i]);
        return p;
    }

    unsigned arity() const { return arity_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(unsigned i, unsigned j = 0) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[0] + e[1]));
        return d;
    }

    /// Coefficient of x^degree for univariate polynomials.
    Rational leading_coefficient() const {
        if (arity_ != 1) throw ValidationError("leading coefficient is defined for univariate polynomials");
        return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
    }

    void add_term(Exponent e, const Rational& c) {
        if (arity_ == 1 && e[1] != 0) throw ValidationError("y exponent in univariate polynomial");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational eval(std::span<const Rational> point) const {
        if (point.size() != arity_)
            throw ValidationError("evaluation point has " + std::to_string(point.size()) + " coordinates, polynomial arity is " +
                                  std::to_string(arity_));
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (unsigned v = 0; v < arity_; ++v)
                for (unsigned k = 0; k < e[v]; ++k) term *= point[v];
            sum += term;
        }
        return sum;
    }
    Rational eval(const Rational& x) const { return eval(std::span<const Rational>(&x, 1)); }
    Rational eval(const Rational& x, const Rational& y) const {
        std::array<Rational, 2> pt{x, y};
        return eval(std::span<const Rational>(pt));
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_arity(b);
        Polynomial r(a.arity_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
        return r;
    }
    Polynomial pow(unsigned k) const {
        Polynomial r = constant(1, arity_);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    /// Univariate: ascending powers of x. Bivariate: ascending total degree,
    /// then descending power of x.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
        std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
            unsigned da = a.first[0] + a.first[1], db = b.first[0] + b.first[1];
            if (da != db) return da < db;
            return a.first[0] > b.first[0];
        });
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : ordered) {
            std::string mono;
            auto append = [&mono](const char* var, unsigned k) {
                if (k == 0) return;
                if (!mono.empty()) mono += '*';
                mono += var;
                if (k > 1) mono += '^' + std::to_string(k);
            };
            append("x", e[0]);
            append("y", e[1]);
            Rational mag = c < 0 ? Rational(-c) : c;
            std::string body = mono.empty() ? format_rational(mag)
                               : mag == 1   ? mono
                                            : format_rational(mag) + "*" + mono;
            if (first) {
                out << (c < 0 ? "-" : "") << body;
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ") << body;
            }
        }
        return out.str();
    }

private:
    void check_arity(const Polynomial& o) const {
        if (o.arity_ != arity_) throw ValidationError("polynomial arity mismatch");
    }

    unsigned arity_;
    std::map<Exponent, Rational> terms_;
};

/// x(x-1)...(x-n+1)
inline Polynomial falling_factorial(unsigned n) {
    Polynomial p = Polynomial::constant(1);
    for (unsigned i = 0; i < n; ++i) p = p * (Polynomial::x() - Polynomial::constant(i));
    return p;
}

/// Unique interpolant of degree <= `degree` through exactly degree+1 points
/// with distinct abscissae (Newton divided differences).
inline Polynomial poly_interpolate(const std::vector<std::pair<Rational, Rational>>& points, unsigned degree) {
    if (points.size() != degree + 1)
        throw ValidationError("interpolation of degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) +
                              " points, got " + std::to_string(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw ValidationError("duplicate abscissa " + format_rational(points[i].first));

    std::vector<Rational> coef;
    for (const auto& pt : points) coef.push_back(pt.second);
    for (std::size_t level = 1; level < points.size(); ++level)
        for (std::size_t i = points.size() - 1; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (points[i].first - points[i - level].first);

    Polynomial result(1);
    Polynomial basis = Polynomial::constant(1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        result += basis * Polynomial::constant(coef[i]);
        basis = basis * (Polynomial::x() - Polynomial::constant(points[i].first));
    }
    return result;
}

}  // namespace homvec
