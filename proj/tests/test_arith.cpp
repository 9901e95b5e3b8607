#include <gtest/gtest.h>

#include <random>

#include <homvec/homvec.hpp>

using namespace homvec;

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("5/6"), make_rational(5, 6));
    EXPECT_EQ(parse_rational("-4/6"), make_rational(-2, 3));
    EXPECT_EQ(parse_rational("+7"), Rational(7));
    EXPECT_EQ(format_rational(make_rational(10, 4)), "5/2");
    EXPECT_EQ(format_rational(make_rational(-3, 1)), "-3");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(make_rational(1, 0), ValidationError);
}

TEST(Rational, ParseErrorsCarryOffset) {
    try {
        parse_rational("12/x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 3u);
    }
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("1/2/3"), ParseError);
}

TEST(Rational, MatchesIntegerCrossMultiplication) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000000);
    for (int i = 0; i < 1000; ++i) {
        long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational sum = make_rational(a, b) + make_rational(c, d);
        Rational product = make_rational(a, b) * make_rational(c, d);
        BigCount sa = BigCount(a) * d + BigCount(c) * b, sb = BigCount(b) * d;
        EXPECT_EQ(boost::multiprecision::numerator(sum) * sb, sa * boost::multiprecision::denominator(sum));
        EXPECT_EQ(boost::multiprecision::numerator(product) * sb, BigCount(a) * c * boost::multiprecision::denominator(product));
        EXPECT_GT(boost::multiprecision::denominator(sum), 0);
        EXPECT_EQ(boost::multiprecision::gcd(boost::multiprecision::numerator(sum), boost::multiprecision::denominator(sum)) == 1 ||
                      boost::multiprecision::numerator(sum) == 0,
                  true);
    }
}

TEST(Semiring, NamedInstances) {
    EXPECT_EQ(semiring_instance("boolean").add(1, 1), 1);
    EXPECT_EQ(semiring_instance("naturals").mul(3, 4), 12);
    EXPECT_EQ(semiring_instance("rationals").add(make_rational(1, 2), make_rational(1, 3)), make_rational(5, 6));
    EXPECT_THROW(semiring_instance("tropical"), ValidationError);
    EXPECT_THROW(semiring_instance("boolean").embed(2), ValidationError);
    EXPECT_THROW(semiring_instance("naturals").embed(make_rational(1, 2)), ValidationError);
}

TEST(Semiring, LawsOnSampledTriples) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> num(-20, 20), den(1, 9), nat(0, 50);
    std::vector<Rational> q;
    std::vector<BigCount> n;
    for (int i = 0; i < 5; ++i) {
        q.push_back(make_rational(num(rng), den(rng)));
        n.push_back(nat(rng));
    }
    // 5^3 = 125 triples each
    EXPECT_TRUE(satisfies_semiring_laws(RationalSemiring{}, q));
    EXPECT_TRUE(satisfies_semiring_laws(NaturalSemiring{}, n));
    EXPECT_TRUE(satisfies_semiring_laws(BooleanSemiring{}, {false, true}));
    EXPECT_TRUE(satisfies_semiring_laws(semiring_instance("rationals"), q));
    EXPECT_TRUE(satisfies_semiring_laws(semiring_instance("boolean"), {Rational(0), Rational(1)}));
}

TEST(Semiring, TableDriven) {
    // max-min semiring on {0,1,2}
    std::vector<std::vector<unsigned>> add(3, std::vector<unsigned>(3)), mul = add, bad = add;
    for (unsigned a = 0; a < 3; ++a)
        for (unsigned b = 0; b < 3; ++b) {
            add[a][b] = std::max(a, b);
            mul[a][b] = std::min(a, b);
            bad[a][b] = (a + b) % 3;
        }
    EXPECT_TRUE(satisfies_table_laws(SemiringSpec::from_tables("maxmin", add, mul, 0, 2), 3));
    EXPECT_FALSE(satisfies_table_laws(SemiringSpec::from_tables("broken", bad, bad, 0, 1), 3));
    EXPECT_THROW(SemiringSpec::from_tables("ragged", {{0, 1}}, mul, 0, 1), ValidationError);
}

TEST(Polynomial, EvalAndArity) {
    Polynomial k3 = falling_factorial(3);
    EXPECT_EQ(k3.eval(Rational(3)), 6);
    EXPECT_THROW(k3.eval(Rational(1), Rational(2)), ValidationError);
    Polynomial p = Polynomial::constant(7) + Polynomial::x().pow(3);
    EXPECT_EQ(p.eval(Rational(0)), 7);
    Polynomial b = Polynomial::x(2) * Polynomial::y() + Polynomial::constant(-2, 2);
    EXPECT_EQ(b.eval(Rational(0), Rational(0)), -2);
    EXPECT_THROW(b.eval(Rational(1)), ValidationError);
}

TEST(Polynomial, ZeroCoefficientsAreNotStored) {
    Polynomial p = Polynomial::x() - Polynomial::x();
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.degree(), -1);
    EXPECT_EQ(p.to_string(), "0");
}

TEST(Polynomial, TextForm) {
    Polynomial u = Polynomial::from_coefficients({1, -2, 0, make_rational(3, 4)});
    EXPECT_EQ(u.to_string(), "1 - 2*x + 3/4*x^3");
    Polynomial b = Polynomial::x(2).pow(2) + Polynomial::x(2) * Polynomial::y();
    EXPECT_EQ(b.to_string(), "x^2 + x*y");
}

TEST(Polynomial, InterpolationRecoversCubic) {
    std::vector<std::pair<Rational, Rational>> pts{{0, 0}, {1, 0}, {2, 2}, {3, 12}};
    Polynomial xm1 = Polynomial::x() - Polynomial::constant(1);
    EXPECT_EQ(poly_interpolate(pts, 3), Polynomial::x() * xm1 * xm1);
    Polynomial line = poly_interpolate({{1, 3}, {3, 7}}, 1);
    EXPECT_EQ(line, Polynomial::constant(1) + Polynomial::constant(2) * Polynomial::x());
    EXPECT_THROW(poly_interpolate({{1, 3}, {1, 4}}, 1), ValidationError);
}

TEST(Polynomial, InterpolationOfC8ChromaticSamples) {
    Polynomial xm1 = Polynomial::x() - Polynomial::constant(1);
    Polynomial target = xm1.pow(8) + xm1;
    std::vector<std::pair<Rational, Rational>> pts;
    for (int x = 0; x <= 8; ++x) pts.emplace_back(x, target.eval(Rational(x)));
    Polynomial p = poly_interpolate(pts, 8);
    EXPECT_EQ(p, target);
    for (const auto& [x, y] : pts) EXPECT_EQ(p.eval(x), y);
}

TEST(Polynomial, InterpolationPassesThroughRandomPoints) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> num(-30, 30), den(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (int i = 0; i < 6; ++i) pts.emplace_back(Rational(i * 2 - 5), make_rational(num(rng), den(rng)));
        Polynomial p = poly_interpolate(pts, 5);
        for (const auto& [x, y] : pts) EXPECT_EQ(p.eval(x), y);
    }
}
