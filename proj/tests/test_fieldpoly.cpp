#include "cyclocode/fieldpoly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cyclo;

namespace {

Polynomial P(std::vector<Coeff> c) { return Polynomial(std::move(c)); }

Polynomial schoolbook(const GaloisField& F, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    return P(c);
}

Polynomial random_poly(const GaloisField& F, int deg, std::mt19937_64& rng) {
    std::vector<Coeff> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<Coeff>(rng() % static_cast<std::uint64_t>(F.q()));
    if (c.back() == 0) c.back() = 1;
    return P(c);
}

const std::vector<std::array<i64, 3>> kFamilies = {{2, 1, 1}, {2, 3, 1}, {3, 3, 2}, {5, 2, 2}, {4, 2, 3}, {4, 3, 1},
                                                   {8, 2, 7}, {9, 2, 4}, {9, 2, 8}, {7, 2, 6}, {3, 4, 2}, {2, 5, 1}};

}  // namespace

TEST(GaloisField, Axioms) {
    std::mt19937_64 rng(7);
    for (i64 q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81}) {
        GaloisField F(q);
        for (int i = 0; i < 2000; ++i) {
            Coeff a = rng() % q, b = rng() % q, c = rng() % q;
            ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))) << q;
            ASSERT_EQ(F.mul(a, F.mul(b, c)), F.mul(F.mul(a, b), c)) << q;
            ASSERT_EQ(F.add(a, F.neg(a)), 0u);
            if (a) {
                ASSERT_EQ(F.mul(a, F.inv(a)), 1u) << q;
                ASSERT_EQ(F.pow(a, static_cast<std::uint64_t>(q - 1)), 1u) << q;
            }
        }
    }
    EXPECT_THROW(GaloisField(6), std::invalid_argument);
    EXPECT_THROW(GaloisField(5).inv(0), std::domain_error);
}

TEST(Irreducible, SmallestIsIrreducibleAndSmallest) {
    for (auto [p, d] : std::vector<std::pair<i64, int>>{{2, 2}, {2, 4}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}}) {
        GaloisField F(p);
        Polynomial f = smallest_irreducible(p, d);
        EXPECT_EQ(f.degree(), d);
        EXPECT_EQ(f.lead(), 1u);
        EXPECT_TRUE(is_irreducible(F, f));
        // every monic candidate of lower encoding is reducible
        i64 code = 0, w = 1;
        for (int i = 0; i < d; ++i, w *= p) code += f.coeffs[i] * w;
        for (i64 k = 0; k < code; ++k) {
            std::vector<Coeff> c(static_cast<std::size_t>(d) + 1, 0);
            i64 r = k;
            for (int i = 0; i < d; ++i, r /= p) c[i] = static_cast<Coeff>(r % p);
            c[d] = 1;
            EXPECT_FALSE(is_irreducible(F, P(c))) << p << ' ' << d << ' ' << k;
        }
    }
    EXPECT_EQ(smallest_irreducible(3, 6), P({2, 1, 0, 0, 0, 0, 1}));
    EXPECT_EQ(smallest_irreducible(2, 8), P({1, 1, 0, 1, 1, 0, 0, 0, 1}));
}

TEST(Polynomial, ArithmeticProperties) {
    std::mt19937_64 rng(11);
    for (i64 q : {2, 3, 4, 9}) {
        GaloisField F(q);
        for (int i = 0; i < 30; ++i) {
            auto a = random_poly(F, static_cast<int>(rng() % 150), rng);
            auto b = random_poly(F, 1 + static_cast<int>(rng() % 120), rng);
            EXPECT_EQ(poly_mul(F, a, b), schoolbook(F, a, b));
            auto [qq, r] = poly_divmod(F, a, b);
            EXPECT_LT(r.degree(), b.degree());
            EXPECT_EQ(poly_add(F, poly_mul(F, qq, b), r), a);
            auto g = poly_gcd(F, a, b);
            EXPECT_TRUE(poly_mod(F, a, g).is_zero());
            EXPECT_TRUE(poly_mod(F, b, g).is_zero());
            EXPECT_EQ(poly_sub(F, a, a), Polynomial{});
        }
    }
    GaloisField F3(3);
    EXPECT_THROW(poly_divmod(F3, P({1, 1}), Polynomial{}), std::domain_error);
}

TEST(Polynomial, PowmodMatchesRepeatedMultiplication) {
    GaloisField F(5);
    auto mod = P({2, 0, 1, 3, 1});
    auto base = P({1, 4, 2});
    Polynomial acc = P({1});
    for (int k = 0; k < 40; ++k) {
        EXPECT_EQ(poly_powmod(F, base, k, mod), acc);
        acc = poly_mod(F, poly_mul(F, acc, base), mod);
    }
}

TEST(Polynomial, ProductAndXnMinus1) {
    GaloisField F(2);
    EXPECT_EQ(xn_minus_1(F, 3), P({1, 0, 0, 1}));
    EXPECT_EQ(poly_product(F, {P({1, 1}), P({1, 1, 1})}), P({1, 0, 0, 1}));
    EXPECT_EQ(poly_product(F, {}), P({1}));
    EXPECT_EQ(monomial(3, 1), P({0, 0, 0, 1}));
}

TEST(Reciprocal, Values) {
    GaloisField F(3);
    EXPECT_EQ(reciprocal(F, P({1, 1})), P({1, 1}));
    EXPECT_EQ(reciprocal(F, P({2, 2, 1})), P({2, 1, 1}));
    EXPECT_EQ(reciprocal(F, P({2, 1})), P({2, 1}));
    EXPECT_TRUE(is_self_reciprocal(F, P({2, 1})));
    EXPECT_THROW(reciprocal(F, P({0, 1})), std::invalid_argument);
}

TEST(Extension, RootOfUnityHasExactOrder) {
    for (auto [q, m, lam] : kFamilies) {
        auto fp = FamilyParams::make(q, m, lam);
        FieldContext ctx(fp);
        EXPECT_EQ(ctx.ext().degree(), prime_power(q).e * 2 * m);
        const auto one = ctx.ext().one();
        EXPECT_EQ(ctx.ext().pow(ctx.zeta(), static_cast<std::uint64_t>(fp.n)), one);
        for (i64 l : prime_factors(fp.n))
            EXPECT_NE(ctx.ext().pow(ctx.zeta(), static_cast<std::uint64_t>(fp.n / l)), one) << q << ' ' << m << ' ' << l;
        for (i64 k : {i64{0}, i64{1}, i64{5}, fp.n - 1}) EXPECT_EQ(ctx.zeta_pow(k), ctx.ext().pow(ctx.zeta(), static_cast<std::uint64_t>(k)));
    }
}

TEST(Extension, EmbeddingIsAFieldHomomorphism) {
    for (i64 q : {4, 8, 9}) {
        auto fp = FamilyParams::make(q, 1, 1);
        FieldContext ctx(fp);
        const auto& F = ctx.base();
        for (Coeff a = 0; a < q; ++a) {
            EXPECT_EQ(ctx.to_base(ctx.embed(a)), a);
            EXPECT_TRUE(ctx.frobenius_fixed(ctx.embed(a)));
            for (Coeff b = 0; b < q; ++b) {
                EXPECT_EQ(ctx.ext().add(ctx.embed(a), ctx.embed(b)), ctx.embed(F.add(a, b)));
                EXPECT_EQ(ctx.ext().mul(ctx.embed(a), ctx.embed(b)), ctx.embed(F.mul(a, b)));
            }
        }
        EXPECT_FALSE(ctx.to_base(ctx.zeta()));
    }
}

TEST(MinimalPoly, Values) {
    auto fp = FamilyParams::make(3, 3, 2);
    FieldContext ctx(fp);
    EXPECT_EQ(ctx.minimal_poly(0), P({2, 1}));
    EXPECT_EQ(ctx.minimal_poly(28), P({1, 1}));
    const Polynomial f1 = ctx.minimal_poly(1);
    EXPECT_EQ(f1, P({2, 0, 1, 2, 2, 0, 1}));
    EXPECT_EQ(f1.degree(), 6);
    EXPECT_TRUE(is_self_reciprocal(ctx.base(), ctx.minimal_poly(2)));
    EXPECT_FALSE(is_self_reciprocal(ctx.base(), f1));
    // f_1(zeta) = 0
    auto acc = ctx.ext().zero();
    for (int i = f1.degree(); i >= 0; --i) acc = ctx.ext().add(ctx.ext().mul(acc, ctx.zeta()), ctx.embed(f1.coeffs[i]));
    EXPECT_TRUE(ctx.ext().is_zero(acc));
}

TEST(MinimalPoly, NonPrimeBaseField) {
    FieldContext ctx(FamilyParams::make(4, 2, 3));
    EXPECT_EQ(ctx.minimal_poly(1), P({3, 1, 3, 3, 1}));
}

TEST(Factorization, CountsAndSmallCase) {
    EXPECT_EQ(factor_xn_minus_1(FamilyParams::make(3, 3, 2)).size(), 13u);
    EXPECT_EQ(factor_xn_minus_1(FamilyParams::make(5, 2, 2)).size(), 16u);
    auto f = factor_xn_minus_1(FamilyParams::make(2, 1, 1));
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0].poly, P({1, 1}));
    EXPECT_EQ(f[1].poly, P({1, 1, 1}));
}

TEST(Factorization, IdentitiesOnFamilies) {
    for (auto [q, m, lam] : kFamilies) {
        auto fp = FamilyParams::make(q, m, lam);
        FieldContext ctx(fp);
        CosetPartition part(fp);
        const auto& F = ctx.base();
        auto fs = factor_xn_minus_1(ctx, part);
        std::vector<Polynomial> polys;
        for (const auto& f : fs) {
            polys.push_back(f.poly);
            EXPECT_EQ(f.poly.degree(), part.coset_of(f.leader).size);
            EXPECT_EQ(f.poly.lead(), 1u);
            const auto r = reciprocal(F, f.poly);
            EXPECT_EQ(r.degree(), f.poly.degree());
            EXPECT_EQ(reciprocal(F, r), f.poly);
            EXPECT_EQ(is_self_reciprocal(F, f.poly), negation_in_same_coset(part, f.leader))
                << q << ' ' << m << ' ' << lam << " gamma=" << f.leader;
            for (const auto& c : ctx.minimal_poly_ext(f.leader)) EXPECT_TRUE(ctx.frobenius_fixed(c));
            const auto& other = fs[part.index_of((fp.n - f.leader) % fp.n)].poly;
            EXPECT_TRUE(is_self_reciprocal(F, poly_lcm(F, f.poly, other)));
            EXPECT_EQ(reciprocal(F, f.poly), other);
        }
        EXPECT_EQ(poly_product(F, polys), xn_minus_1(F, fp.n));
    }
}
