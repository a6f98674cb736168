#include <gtest/gtest.h>

#include <functional>

#include "operadkit/algebras.hpp"
#include "operadkit/error.hpp"

using namespace operadkit;

namespace {

int mobius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

// Dimension of the degree-d part of the free Lie algebra on k generators.
std::uint64_t witt(std::int64_t k, int d) {
    std::int64_t s = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        std::int64_t p = 1;
        for (int i = 0; i < d / e; ++i) p *= k;
        s += mobius(e) * p;
    }
    return static_cast<std::uint64_t>(s / d);
}

AlgebraTable cross_product() {
    AlgebraTable a({"i", "j", "k"});
    a.add_op("br");
    auto e = [&](std::size_t i) { return a.unit(i); };
    SparseVector minus_i = {{0, Rational(-1)}}, minus_j = {{1, Rational(-1)}}, minus_k = {{2, Rational(-1)}};
    a.set_product("br", 0, 1, e(2));
    a.set_product("br", 1, 0, minus_k);
    a.set_product("br", 1, 2, e(0));
    a.set_product("br", 2, 1, minus_i);
    a.set_product("br", 2, 0, e(1));
    a.set_product("br", 0, 2, minus_j);
    return a;
}

}  // namespace

TEST(AlgebraJson, RoundTrip) {
    AlgebraTable a = free_sdiass(2, 2);
    AlgebraTable b = parse_algebra_json(format_algebra_json(a));
    EXPECT_EQ(a.basis(), b.basis());
    EXPECT_EQ(a.degrees(), b.degrees());
    EXPECT_EQ(a.truncation(), b.truncation());
    for (const auto& op : a.op_names())
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) EXPECT_EQ(a.product(op, i, j), b.product(op, i, j));
}

TEST(AlgebraJson, MalformedInput) {
    EXPECT_THROW(parse_algebra_json("{"), Error);
    EXPECT_THROW(parse_algebra_json(R"({"dim": 2, "basis": ["a"], "ops": {}})"), Error);
    EXPECT_THROW(parse_algebra_json(R"({"dim": 1, "basis": ["a"], "ops": {"m": [[["x"]]]}})"), Error);
}

TEST(Identities, CrossProductIsLieButNotAssociative) {
    AlgebraTable a = cross_product();
    IdentityReport lie = check_identities(a, "Lie");
    EXPECT_TRUE(lie.pass) << lie.message;
    EXPECT_EQ(lie.checked, 27u);
    IdentityReport ass = check_identities(a, "Ass", {{"mul", "br"}});
    EXPECT_FALSE(ass.pass);
    ASSERT_TRUE(ass.violation.has_value());
    EXPECT_EQ(ass.violation->arguments.size(), 3u);
}

TEST(Identities, SymmetryIsChecked) {
    AlgebraTable a({"e"});
    a.add_op("br");
    a.set_product("br", 0, 0, a.unit(0));
    IdentityReport r = check_identities(a, "Lie");
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.violation->arguments, (std::vector<std::string>{"e", "e"}));
}

TEST(Identities, BindingErrors) {
    AlgebraTable a = cross_product();
    try {
        check_identities(a, "DiAss");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownName);
    }
    EXPECT_THROW(check_identities(a, "Lie", {{"br", "nope"}}), Error);
}

TEST(Identities, TruncatedTriplesAreSkipped) {
    AlgebraTable a = free_associative(2, 2);
    IdentityReport r = check_identities(a, "Ass");
    EXPECT_TRUE(r.pass) << r.message;
    // only degree 3 > 2 can appear among triples, and every triple has degree >= 3
    EXPECT_EQ(r.checked, 0u);
    EXPECT_EQ(r.skipped, 6u * 6u * 6u);
}

TEST(FreeAlgebras, LieMatchesWittNumbers) {
    for (std::int64_t k : {2, 3}) {
        int top = k == 2 ? 6 : 4;
        AlgebraTable lie = free_lie(static_cast<std::size_t>(k), top);
        for (int d = 1; d <= top; ++d) EXPECT_EQ(lie.component(d).size(), witt(k, d)) << "k=" << k << " d=" << d;
    }
    EXPECT_EQ(lyndon_words(2, 3).size(), 2u + 1u + 2u);
}

TEST(FreeAlgebras, PassTheirOwnIdentities) {
    for (const auto& type : free_algebra_types()) {
        AlgebraTable a = free_algebra(type, 2, 3);
        IdentityReport r = check_identities(a, type);
        EXPECT_TRUE(r.pass) << type << ": " << r.message;
    }
}

TEST(FreeAlgebras, FreeLieIsNotAssociative) {
    EXPECT_FALSE(check_identities(free_lie(2, 3), "Ass", {{"mul", "br"}}).pass);
    EXPECT_FALSE(check_identities(free_sleib(2, 3), "lPerm").pass);
}

TEST(FreeAlgebras, SizeLimit) {
    FreeLimits small;
    small.max_dim = 10;
    try {
        free_associative(3, 3, small);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Capacity);
    }
    small.allow_large = true;
    EXPECT_EQ(free_associative(3, 3, small).dim(), 3u + 9u + 27u);
}

TEST(FreeAlgebras, MultilinearPartsMatchOperadDimensions) {
    auto fact = [](std::uint64_t n) {
        std::uint64_t f = 1;
        for (std::uint64_t i = 2; i <= n; ++i) f *= i;
        return f;
    };
    // dim P(n) from the generating series of each type
    const std::map<std::string, std::function<std::uint64_t(std::uint64_t)>> oracle = {
        {"Lie", [&](auto n) { return fact(n - 1); }},
        {"sLeib", [&](auto n) { return fact(n - 1) + (n == 2); }},
        {"sDiAss", [&](auto n) { return fact(n) + 2 * (n == 2); }},
        {"sPerm", [&](auto n) { return n == 2 ? 2 : 1; }},
        {"Ass", [&](auto n) { return fact(n); }},
        {"DiAss", [&](auto n) { return n * fact(n); }},
        {"lZinb", [&](auto n) { return fact(n); }},
    };
    for (const auto& [type, dim] : oracle)
        for (std::size_t n = 1; n <= 4; ++n) {
            AlgebraTable f = free_algebra(type, n, static_cast<int>(n));
            EXPECT_EQ(multilinear_basis(f, n).size(), dim(n)) << type << " n=" << n;
            EXPECT_EQ(multilinear_rank(f, catalog(type), n), dim(n)) << type << " n=" << n;
        }
}

TEST(Functors, CommutatorOfAssociativeIsLie) {
    AlgebraTable lie = apply_functor(free_associative(2, 3), "commutator");
    EXPECT_EQ(lie.op_names(), (std::vector<std::string>{"br"}));
    EXPECT_TRUE(check_identities(lie, "Lie").pass);
}

TEST(Functors, EveryFunctorLandsInItsTarget) {
    std::map<std::string, AlgebraTable> sources = {
        {"Ass", free_associative(2, 3)},
        {"DiAss", free_dialgebra(2, 3)},
        {"sDiAss", free_sdiass(2, 3)},
        {"lZinb", free_zinbiel(2, 3)},
    };
    for (const auto& f : functors()) {
        auto it = sources.find(f.source_type);
        if (it == sources.end()) continue;
        AlgebraTable out = apply_functor(it->second, f.name);
        IdentityReport r = check_identities(out, f.target_type);
        EXPECT_TRUE(r.pass) << f.name << ": " << r.message;
    }
    AlgebraTable leib = apply_functor(free_sdiass(2, 3), "dialg_to_leibniz");
    EXPECT_TRUE(check_identities(leib, "sLeib").pass);
    EXPECT_THROW(apply_functor(cross_product(), "commutator"), Error);
    EXPECT_THROW(apply_functor(cross_product(), "no-such-functor"), Error);
}

TEST(Quotients, IdealClosure) {
    // in the free associative algebra on x1, x2 truncated at 2, the ideal of x1 is x1, x1x1, x1x2, x2x1
    AlgebraTable a = free_associative(2, 2);
    QuotientResult q = quotient_by_ideal(a, {a.unit(0)});
    EXPECT_EQ(q.ideal_dim, 4u);
    EXPECT_EQ(q.quotient.dim(), 2u);
    EXPECT_TRUE(check_identities(q.quotient, "Ass").pass);
}

TEST(Quotients, ConstructionsOnTheSeededCorpus) {
    for (const auto& c : constructions()) {
        auto corpus = random_corpus(c.source_type, 5);
        ASSERT_EQ(corpus.size(), 5u);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            EXPECT_TRUE(check_identities(corpus[i], c.source_type).pass) << c.name << " #" << i;
            IdentityReport r = check_identities(apply_construction(corpus[i], c.name).quotient, c.target_type);
            EXPECT_TRUE(r.pass) << c.name << " #" << i << ": " << r.message;
        }
    }
}

TEST(Quotients, CorpusIsDeterministic) {
    EXPECT_EQ(random_corpus("Ass", 3), random_corpus("Ass", 3));
    EXPECT_EQ(random_corpus("Ass", 3, 7), random_corpus("Ass", 3, 7));
}

TEST(Format, ElementsPrintWithSigns) {
    AlgebraTable a({"e1", "e2", "e3"});
    EXPECT_EQ(format_element(a, {{0, Rational(2)}, {2, Rational(-1, 3)}}), "2 e1 - 1/3 e3");
    EXPECT_EQ(format_element(a, {}), "0");
}
