#include <gtest/gtest.h>

#include "operadkit/error.hpp"
#include "operadkit/presentations.hpp"

using namespace operadkit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Domain;
}

Subspace span_of_both(const Subspace& a, const Subspace& b) {
    std::vector<VectorQ> rows;
    for (std::size_t r = 0; r < a.dim(); ++r) rows.push_back(a.basis().row_vector(r));
    for (std::size_t r = 0; r < b.dim(); ++r) rows.push_back(b.basis().row_vector(r));
    return Subspace::span(a.ambient_dim(), rows);
}

}  // namespace

TEST(Parser, EqualityChainsGiveOneTemplatePerEquals) {
    auto t = parse_identity("m(m(x1,x2),x3) = m(x1,m(x2,x3)) = m(x2,m(x1,x3))");
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0].terms.size(), 2u);
    EXPECT_EQ(t[0].terms[1].coeff, Rational(-1));
}

TEST(Parser, CoefficientsAndZeroRightHandSide) {
    auto t = parse_identity("2 m(x1,x2) - 1/3 m(x2,x1) = 0");
    ASSERT_EQ(t.size(), 1u);
    ASSERT_EQ(t[0].terms.size(), 2u);
    EXPECT_EQ(t[0].terms[0].coeff, Rational(2));
    EXPECT_EQ(t[0].terms[1].coeff, Rational(-1, 3));
    EXPECT_EQ(kind_of([] { parse_identity("0 = 0"); }), ErrorKind::Parse);
}

TEST(Parser, MalformedPresentations) {
    EXPECT_EQ(kind_of([] { parse_presentation("operad X {\n gen m plain\n rel m(x1,x2\n}"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_presentation("operad X {\n gen m fancy\n}"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_presentation("operad X {\n gen m plain\n rel m(m(x1,x2),x2)\n}"); }),
              ErrorKind::Parse);
    EXPECT_THROW(parse_presentation("operad X {\n gen m plain\n rel q(q(x1,x2),x3)\n}"), Error);
}

TEST(Parser, RelationSpaceIsSymmetricGroupStable) {
    Presentation p = parse_presentation("operad A {\n gen m plain\n rel m(m(x1,x2),x3) = m(x1,m(x2,x3))\n}");
    EXPECT_EQ(p.ambient().size(), 12u);
    EXPECT_EQ(p.relations().dim(), 6u);
    EXPECT_EQ(p.relations(), catalog("Ass").relations());
}

TEST(Parser, FormatRoundTrips) {
    for (const auto& name : catalog_names()) {
        Presentation p = catalog(name);
        Presentation q = parse_presentation(format_presentation(p));
        EXPECT_EQ(q.relations(), p.relations()) << name;
        EXPECT_EQ(q.gens(), p.gens()) << name;
    }
}

TEST(Catalog, RelationCounts) {
    // dim R inside F(V)(3) = 3 * d^2
    const std::vector<std::tuple<std::string, std::size_t, std::size_t>> expected = {
        {"Lie", 3, 1},     {"Com", 3, 2},     {"Ass", 12, 6},     {"lLeib", 12, 6},   {"sLeib", 12, 10},
        {"DiAss", 48, 30}, {"sDiAss", 48, 42}, {"lPerm", 12, 9},   {"sPerm", 12, 11},  {"PreLie", 12, 3},
        {"Dend", 48, 18},  {"lZinb", 12, 6},  {"LieAdm", 12, 1},  {"ComAdm", 12, 2},  {"AssAdm", 48, 6},
    };
    for (const auto& [name, ambient, rels] : expected) {
        Presentation p = catalog(name);
        EXPECT_EQ(p.ambient().size(), ambient) << name;
        EXPECT_EQ(p.relations().dim(), rels) << name;
    }
}

TEST(Catalog, AliasesAndUnknownNames) {
    EXPECT_EQ(canonical_name("Leib"), "lLeib");
    EXPECT_EQ(canonical_name("Zinb"), "lZinb");
    EXPECT_EQ(canonical_name("Perm"), "lPerm");
    EXPECT_EQ(kind_of([] { catalog("NoSuchOperad"); }), ErrorKind::UnknownName);
    EXPECT_EQ(kind_of([] { resolve_presentation("NoSuchOperad"); }), ErrorKind::UnknownName);
}

TEST(Catalog, VariantsAreChangesOfGenerators) {
    const std::string to_bd = "map mul = br(x1,x2) + di(x1,x2)";
    GenMap f = parse_genmap(to_bd, catalog("sLeib").gens(), catalog("sLeib.bd").gens());
    Presentation moved = change_generators(catalog("sLeib"), f);
    EXPECT_EQ(moved.relations(), catalog("sLeib.bd").relations());
}

TEST(Catalog, SymmetricLeibnizIsTheSumOfLeftAndRight) {
    Subspace l = catalog("lLeib").relations(), r = catalog("rLeib").relations();
    EXPECT_EQ(span_of_both(l, r), catalog("sLeib").relations());
}

TEST(Morphisms, AcceptedAndRejectedMaps) {
    Presentation lie = catalog("Lie"), ass = catalog("Ass");
    MorphismResult good = morphism_check(lie, ass, parse_genmap("map br = mul(x1,x2) - mul(x2,x1)", lie.gens(), ass.gens()));
    EXPECT_TRUE(good.ok) << good.message;
    Presentation com = catalog("Com");
    MorphismResult zero =
        morphism_check(catalog("ComMag"), lie, parse_genmap("map cm = 0", com.gens(), lie.gens()));
    EXPECT_TRUE(zero.ok);
    MorphismResult fail = morphism_check(
        ass, catalog("lLeib"), parse_genmap("map mul = mul(x1,x2)", ass.gens(), catalog("lLeib").gens()));
    EXPECT_FALSE(fail.ok);
    EXPECT_FALSE(fail.witness.empty());
}

TEST(Morphisms, CompositionAndIdentity) {
    Presentation lie = catalog("Lie"), ass = catalog("Ass"), com = catalog("Com");
    GenMap a = parse_genmap("map br = mul(x1,x2) - mul(x2,x1)", lie.gens(), ass.gens());
    GenMap b = parse_genmap("map mul = cm(x1,x2)", ass.gens(), com.gens());
    EXPECT_EQ(compose(identity_map(lie.gens()), a), a);
    EXPECT_EQ(compose(a, identity_map(ass.gens())), a);
    // the commutator of a commutative product vanishes
    GenMap ab = compose(a, b);
    for (const auto& q : ab.weight_one_matrix().row_vector(0)) EXPECT_TRUE(q.is_zero());
}

TEST(Diagram, AllArrowsAndSquares) {
    DiagramReport r = check_diagram();
    EXPECT_EQ(r.arrows.size(), 22u);
    EXPECT_EQ(r.squares.size(), 8u);
    for (const auto& a : r.arrows) EXPECT_TRUE(a.result.ok) << a.arrow.source << " -> " << a.arrow.target;
    EXPECT_TRUE(r.ok());
}
