#pragma once

#include <concepts>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace homvec {

/// A commutative-addition semiring whose elements can be obtained from
/// rational weights. `embed` throws ValidationError for weights outside the
/// carrier.
template <class S>
concept Semiring = requires(const S& s, const typename S::value_type& a, const Rational& w) {
    typename S::value_type;
    { s.zero() } -> std::convertible_to<typename S::value_type>;
    { s.one() } -> std::convertible_to<typename S::value_type>;
    { s.add(a, a) } -> std::convertible_to<typename S::value_type>;
    { s.mul(a, a) } -> std::convertible_to<typename S::value_type>;
    { s.equal(a, a) } -> std::convertible_to<bool>;
    { s.embed(w) } -> std::convertible_to<typename S::value_type>;
};

struct NaturalSemiring {
    using value_type = BigCount;
    BigCount zero() const { return 0; }
    BigCount one() const { return 1; }
    BigCount add(const BigCount& a, const BigCount& b) const { return a + b; }
    BigCount mul(const BigCount& a, const BigCount& b) const { return a * b; }
    bool equal(const BigCount& a, const BigCount& b) const { return a == b; }
    BigCount embed(const Rational& w) const {
        if (!is_integer(w) || w < 0) throw ValidationError("weight " + format_rational(w) + " is not a natural number");
        return boost::multiprecision::numerator(w);
    }
};

struct BooleanSemiring {
    using value_type = bool;
    bool zero() const { return false; }
    bool one() const { return true; }
    bool add(bool a, bool b) const { return a || b; }
    bool mul(bool a, bool b) const { return a && b; }
    bool equal(bool a, bool b) const { return a == b; }
    bool embed(const Rational& w) const {
        if (w != 0 && w != 1) throw ValidationError("weight " + format_rational(w) + " is not boolean");
        return w == 1;
    }
};

struct RationalSemiring {
    using value_type = Rational;
    Rational zero() const { return 0; }
    Rational one() const { return 1; }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    bool equal(const Rational& a, const Rational& b) const { return a == b; }
    Rational embed(const Rational& w) const { return w; }
};

/// Runtime semiring with every element represented as a Rational. This is
/// what the named instances and user-supplied operation tables resolve to.
class SemiringSpec {
public:
    using value_type = Rational;
    using BinaryOp = std::function<Rational(const Rational&, const Rational&)>;

    SemiringSpec(std::string name, BinaryOp add, BinaryOp mul, Rational zero, Rational one,
                 std::function<bool(const Rational&)> contains)
        : name_(std::move(name)), add_(std::move(add)), mul_(std::move(mul)), zero_(std::move(zero)),
          one_(std::move(one)), contains_(std::move(contains)) {}

    /// Finite carrier {0, ..., size-1} with operation tables indexed [a][b].
    static SemiringSpec from_tables(std::string name, std::vector<std::vector<unsigned>> add_table,
                                    std::vector<std::vector<unsigned>> mul_table, unsigned zero, unsigned one) {
        std::size_t size = add_table.size();
        auto square = [size](const std::vector<std::vector<unsigned>>& t) {
            if (t.size() != size) return false;
            for (const auto& row : t) {
                if (row.size() != size) return false;
                for (unsigned v : row)
                    if (v >= size) return false;
            }
            return true;
        };
        if (size == 0 || !square(add_table) || !square(mul_table) || zero >= size || one >= size)
            throw ValidationError("semiring tables must be square over {0..size-1}");
        auto lookup = [](std::vector<std::vector<unsigned>> table) {
            return [table = std::move(table)](const Rational& a, const Rational& b) {
                auto i = static_cast<std::size_t>(boost::multiprecision::numerator(a));
                auto j = static_cast<std::size_t>(boost::multiprecision::numerator(b));
                return Rational(table[i][j]);
            };
        };
        auto contains = [size](const Rational& w) { return is_integer(w) && w >= 0 && w < static_cast<long>(size); };
        return SemiringSpec(std::move(name), lookup(std::move(add_table)), lookup(std::move(mul_table)), Rational(zero),
                            Rational(one), contains);
    }

    const std::string& name() const { return name_; }
    Rational zero() const { return zero_; }
    Rational one() const { return one_; }
    Rational add(const Rational& a, const Rational& b) const { return add_(a, b); }
    Rational mul(const Rational& a, const Rational& b) const { return mul_(a, b); }
    bool equal(const Rational& a, const Rational& b) const { return a == b; }
    bool contains(const Rational& w) const { return contains_(w); }
    Rational embed(const Rational& w) const {
        if (!contains_(w)) throw ValidationError("weight " + format_rational(w) + " outside carrier of " + name_);
        return w;
    }

private:
    std::string name_;
    BinaryOp add_;
    BinaryOp mul_;
    Rational zero_;
    Rational one_;
    std::function<bool(const Rational&)> contains_;
};

/// naturals | boolean | rationals
inline SemiringSpec semiring_instance(const std::string& name) {
    if (name == "naturals") {
        return SemiringSpec(
            "naturals", std::plus<Rational>{}, std::multiplies<Rational>{}, 0, 1,
            [](const Rational& w) { return is_integer(w) && w >= 0; });
    }
    if (name == "boolean") {
        return SemiringSpec(
            "boolean", [](const Rational& a, const Rational& b) { return Rational(a == 1 || b == 1 ? 1 : 0); },
            [](const Rational& a, const Rational& b) { return Rational(a == 1 && b == 1 ? 1 : 0); }, 0, 1,
            [](const Rational& w) { return w == 0 || w == 1; });
    }
    if (name == "rationals") {
        return SemiringSpec("rationals", std::plus<Rational>{}, std::multiplies<Rational>{}, 0, 1,
                            [](const Rational&) { return true; });
    }
    throw ValidationError("unknown semiring '" + name + "'");
}

/// Checks the semiring axioms on every triple drawn from `elements`.
template <Semiring S>
bool satisfies_semiring_laws(const S& s, const std::vector<typename S::value_type>& elements) {
    auto eq = [&](const auto& a, const auto& b) { return s.equal(a, b); };
    for (const auto& a : elements) {
        if (!eq(s.add(a, s.zero()), a) || !eq(s.mul(a, s.one()), a) || !eq(s.mul(s.one(), a), a)) return false;
        if (!eq(s.mul(a, s.zero()), s.zero()) || !eq(s.mul(s.zero(), a), s.zero())) return false;
        for (const auto& b : elements) {
            if (!eq(s.add(a, b), s.add(b, a))) return false;
            for (const auto& c : elements) {
                if (!eq(s.add(s.add(a, b), c), s.add(a, s.add(b, c)))) return false;
                if (!eq(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)))) return false;
                if (!eq(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c)))) return false;
                if (!eq(s.mul(s.add(a, b), c), s.add(s.mul(a, c), s.mul(b, c)))) return false;
            }
        }
    }
    return true;
}

/// Exhaustive law check for a table-driven semiring of the given size.
inline bool satisfies_table_laws(const SemiringSpec& s, unsigned carrier_size) {
    std::vector<Rational> all;
    for (unsigned i = 0; i < carrier_size; ++i) all.emplace_back(i);
    return satisfies_semiring_laws<SemiringSpec>(s, all);
}

}  // namespace homvec
