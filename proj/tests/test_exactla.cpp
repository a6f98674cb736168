#include <gtest/gtest.h>

#include <random>

#include "operadkit/error.hpp"
#include "operadkit/exactla.hpp"
#include "operadkit/rational.hpp"

using namespace operadkit;

TEST(Rational, NormalizesSignAndGcd) {
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational(0, 7).str(), "0");
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
}

TEST(Rational, ParseRejectsGarbage) {
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("abc"), Error);
    EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, OverflowPromotesToBigIntegers) {
    Rational big = Rational(INT64_MAX) * Rational(INT64_MAX);
    EXPECT_EQ(big.str(), "85070591730234615847396907784232501249");
    EXPECT_EQ(big / Rational(INT64_MAX), Rational(INT64_MAX));
    Rational r = Rational(1, INT64_MAX) + Rational(1, INT64_MAX - 1);
    EXPECT_EQ(r * Rational(INT64_MAX) * Rational(INT64_MAX - 1), Rational(INT64_MAX) + Rational(INT64_MAX - 1));
}

TEST(Rational, AgreesWithGmpOnRandomArithmetic) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-(1LL << 40), 1LL << 40);
    Rational acc(1);
    mpq_class ref(1);
    for (int i = 0; i < 200; ++i) {
        std::int64_t p = dist(rng), q = dist(rng);
        if (q == 0) q = 1;
        Rational x(p, q);
        mpq_class y(mpz_class(std::to_string(p)), mpz_class(std::to_string(q)));
        y.canonicalize();
        switch (i % 4) {
            case 0: acc += x; ref += y; break;
            case 1: acc -= x; ref -= y; break;
            case 2: acc *= x; ref *= y; break;
            default: if (!x.is_zero()) { acc /= x; ref /= y; } break;
        }
        ASSERT_EQ(acc.to_mpq(), ref) << "step " << i;
    }
}

TEST(Rational, DivisionByZeroIsADomainError) {
    try {
        Rational(1) / Rational(0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Domain);
    }
}

TEST(Rref, KnownMatrix) {
    MatrixQ m = MatrixQ::from_rows(3, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    RrefResult r = rref(m);
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r.matrix.row_vector(0), (VectorQ{1, 0, 1}));
    EXPECT_EQ(r.matrix.row_vector(1), (VectorQ{0, 1, 1}));
}

TEST(Rref, KernelIsAnnihilated) {
    MatrixQ m = MatrixQ::from_rows(4, {{1, 2, 0, -1}, {0, 1, 1, 1}, {1, 3, 1, 0}});
    auto k = kernel(m);
    EXPECT_EQ(k.size(), 2u);
    for (const auto& v : k)
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Rational s;
            for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
            EXPECT_TRUE(s.is_zero());
        }
}

TEST(Subspace, EqualityIsOrderIndependent) {
    Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
    Subspace b = Subspace::span(3, {{1, 2, 1}, {1, 0, -1}});
    EXPECT_EQ(a, b);
    EXPECT_TRUE(a.contains(VectorQ{2, 3, 1}));
    EXPECT_FALSE(a.contains(VectorQ{1, 0, 0}));
}

TEST(Subspace, OrthComplementUnderDotProduct) {
    Subspace s = Subspace::span(3, {{1, 1, 1}});
    Subspace c = orth_complement(s, MatrixQ::identity(3));
    EXPECT_EQ(c.dim(), 2u);
    EXPECT_TRUE(c.contains(VectorQ{1, -1, 0}));
    EXPECT_TRUE(c.contains(VectorQ{0, 1, -1}));
}

TEST(EchelonBuilder, MatchesDenseRrefForRandomRows) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3), pick(0, 3);
    const std::size_t n = 12;
    EchelonBuilder eb(n);
    std::vector<VectorQ> rows;
    for (int i = 0; i < 20; ++i) {
        VectorQ v(n);
        for (auto& x : v)
            if (pick(rng) == 0) x = coef(rng);
        rows.push_back(v);
        eb.insert(to_sparse(v));
    }
    Subspace dense = Subspace::span(n, rows);
    ASSERT_EQ(eb.rank(), dense.dim());
    auto sparse_rows = eb.rows_by_pivot();
    for (std::size_t r = 0; r < sparse_rows.size(); ++r)
        EXPECT_EQ(to_dense(sparse_rows[r], n), dense.basis().row_vector(r));
}

TEST(EchelonBuilder, InsertReportsDependence) {
    EchelonBuilder eb(3);
    EXPECT_TRUE(eb.insert(to_sparse(VectorQ{1, 2, 0})));
    EXPECT_FALSE(eb.insert(to_sparse(VectorQ{2, 4, 0})));
    EXPECT_TRUE(eb.reduce(to_sparse(VectorQ{3, 6, 0})).empty());
    EXPECT_EQ(eb.free_columns(), (std::vector<std::size_t>{1, 2}));
}
