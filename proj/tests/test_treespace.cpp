#include <gtest/gtest.h>

#include <set>

#include "operadkit/error.hpp"
#include "operadkit/treespace.hpp"

using namespace operadkit;

namespace {

GeneratorSet gens_of(std::vector<Symmetry> s) {
    std::vector<GeneratorSymbol> g;
    for (std::size_t i = 0; i < s.size(); ++i) g.push_back({"g" + std::to_string(i), s[i]});
    return GeneratorSet(g);
}

// Unordered binary trees on an n-set with d decorations per vertex, by
// splitting off the block that contains the smallest leaf.
std::uint64_t count_trees(std::size_t n, std::uint64_t d) {
    if (n == 1) return 1;
    std::uint64_t total = 0;
    // the block of the smallest leaf has size k and takes k-1 of the other n-1 leaves
    for (std::size_t k = 1; k < n; ++k) {
        std::uint64_t choose = 1;
        for (std::size_t i = 0; i < k - 1; ++i) choose = choose * (n - 1 - i) / (i + 1);
        total += choose * count_trees(k, d) * count_trees(n - k, d) * d;
    }
    return total;
}

}  // namespace

TEST(GeneratorSet, PlainGeneratorsContributeTwoSymbols) {
    GeneratorSet g = gens_of({Symmetry::Plain, Symmetry::Sym, Symmetry::Antisym});
    EXPECT_EQ(g.degree(), 4u);
    std::size_t s = g.symbol(0, false), t = g.symbol(0, true);
    EXPECT_EQ(g.transpose(s).symbol, t);
    EXPECT_EQ(g.transpose(s).sign, 1);
    EXPECT_EQ(g.transpose(g.symbol(1)).sign, 1);
    EXPECT_EQ(g.transpose(g.symbol(2)).sign, -1);
    EXPECT_EQ(g.find("g2"), 2);
    EXPECT_EQ(g.find("nope"), -1);
}

TEST(FreeComponent, SizesMatchTreeCount) {
    for (std::size_t d = 1; d <= 4; ++d) {
        std::vector<Symmetry> s(d, Symmetry::Sym);
        GeneratorSet g = gens_of(s);
        for (std::size_t n = 1; n <= 5; ++n) {
            EXPECT_EQ(enumerate(g, n).size(), count_trees(n, d)) << "d=" << d << " n=" << n;
            EXPECT_EQ(free_dimension(d, n), count_trees(n, d));
        }
    }
    GeneratorSet plain = gens_of({Symmetry::Plain, Symmetry::Plain});
    EXPECT_EQ(enumerate(plain, 3).size(), 48u);
    EXPECT_EQ(enumerate(plain, 4).size(), 15u * 64u);
}

TEST(FreeComponent, BasisIsCanonicalAndDistinct) {
    GeneratorSet g = gens_of({Symmetry::Plain, Symmetry::Antisym});
    FreeComponent c = enumerate(g, 4);
    std::set<std::string> codes;
    for (const auto& m : c.basis()) {
        codes.insert(m.code());
        SignedMonomial again = canonicalize(g, m.nodes());
        EXPECT_EQ(again.monomial, m);
        EXPECT_EQ(again.sign, 1);
        EXPECT_EQ(c.index(m), c.index(again.monomial));
    }
    EXPECT_EQ(codes.size(), c.size());
}

TEST(FreeComponent, ArityAboveCeilingIsACapacityError) {
    GeneratorSet g = gens_of({Symmetry::Sym});
    try {
        enumerate(g, 8, 6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Capacity);
    }
}

TEST(TreeMonomial, AntisymmetricSwapFlipsSign) {
    GeneratorSet g = gens_of({Symmetry::Antisym});
    SignedMonomial a = TreeMonomial::join(g, 0, TreeMonomial::leaf(2), TreeMonomial::leaf(1));
    SignedMonomial b = TreeMonomial::join(g, 0, TreeMonomial::leaf(1), TreeMonomial::leaf(2));
    EXPECT_EQ(a.monomial, b.monomial);
    EXPECT_EQ(a.sign, -b.sign);
}

TEST(TreeMonomial, PlainSwapUsesTranspose) {
    GeneratorSet g = gens_of({Symmetry::Plain});
    SignedMonomial a = TreeMonomial::join(g, g.symbol(0), TreeMonomial::leaf(2), TreeMonomial::leaf(1));
    SignedMonomial b = TreeMonomial::join(g, g.symbol(0, true), TreeMonomial::leaf(1), TreeMonomial::leaf(2));
    EXPECT_EQ(a.monomial, b.monomial);
    EXPECT_EQ(a.sign, 1);
}

TEST(Permutations, ActionIsAGroupAction) {
    GeneratorSet g = gens_of({Symmetry::Plain, Symmetry::Antisym});
    FreeComponent c = enumerate(g, 4);
    auto perms = all_permutations(4);
    EXPECT_EQ(perms.size(), 24u);
    const std::vector<int> s = {2, 3, 1, 4}, t = {4, 1, 2, 3};
    for (const auto& m : c.basis()) {
        SignedMonomial tm = act(g, t, m);
        SignedMonomial stm = act(g, s, tm.monomial);
        SignedMonomial direct = act(g, compose(s, t), m);
        EXPECT_EQ(stm.monomial, direct.monomial);
        EXPECT_EQ(stm.sign * tm.sign, direct.sign);
    }
    EXPECT_EQ(permutation_sign({2, 1, 3}), -1);
    EXPECT_EQ(permutation_sign({2, 3, 1}), 1);
}

TEST(Graft, ComposesArities) {
    GeneratorSet g = gens_of({Symmetry::Sym});
    FreeComponent two = enumerate(g, 2), three = enumerate(g, 3);
    SignedMonomial m = graft(g, two[0], 1, two[0]);
    EXPECT_EQ(m.monomial.arity(), 3u);
    EXPECT_TRUE(three.contains(m.monomial));
}

TEST(PlanarDecorations, CountsShapesTimesDecorations) {
    GeneratorSet g = gens_of({Symmetry::Plain, Symmetry::Sym});
    // Catalan(3) = 5 planar shapes with 4 leaves, each of 3 vertices decorated by d = 3 symbols
    auto shapes = planar_decorations(g, 4);
    ASSERT_EQ(shapes.size(), 5u);
    for (const auto& s : shapes) EXPECT_EQ(s.size(), 27u);
}
