#include <gtest/gtest.h>

#include "operadkit/koszul.hpp"
#include "operadkit/presentations.hpp"

using namespace operadkit;

TEST(Dual, NamedPairs) {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"sLeib", "ComAdm"}, {"sDiAss", "AssAdm"}, {"sPerm", "LieAdm"}, {"Lie", "Com"},   {"Ass", "Ass"},
        {"lLeib", "lZinb"},  {"rLeib", "rZinb"},   {"DiAss", "Dend"},   {"lPerm", "PreLie"},
    };
    for (const auto& [p, q] : pairs) {
        DualResult d = dual(catalog(p));
        EXPECT_EQ(d.catalog_match, q) << p;
        EXPECT_EQ(d.presentation.relations(), catalog(q).relations()) << p;
        DualResult back = dual(catalog(q));
        EXPECT_EQ(back.presentation.relations(), catalog(p).relations()) << q;
    }
}

TEST(Dual, ComplementaryDimensions) {
    for (const auto& name : catalog_names()) {
        Presentation p = catalog(name);
        Presentation d = dual_presentation(p);
        EXPECT_EQ(p.relations().dim() + d.relations().dim(), p.ambient().size()) << name;
    }
}

TEST(Dual, IsAnInvolution) {
    for (const auto& name : catalog_names()) {
        Presentation p = catalog(name);
        EXPECT_EQ(dual_presentation(dual_presentation(p)).relations(), p.relations()) << name;
    }
}

TEST(Dual, UnmatchedDualGetsABangName) {
    Presentation p = parse_presentation("operad Nil {\n gen m plain\n rel m(m(x1,x2),x3)\n}");
    DualResult d = dual(p);
    EXPECT_EQ(d.catalog_match, "");
    EXPECT_EQ(d.presentation.name(), "Nil!");
}

TEST(Pairing, IsNondegenerate) {
    for (const auto& name : catalog_names()) {
        Presentation p = catalog(name);
        RrefResult r = rref(pairing(p.gens()));
        EXPECT_EQ(r.rank, p.ambient().size()) << name;
    }
}

TEST(DualityTable, EveryRowHolds) {
    auto rows = duality_table();
    EXPECT_FALSE(rows.empty());
    for (const auto& r : rows) EXPECT_TRUE(r.ok) << r.primal << ": " << r.detail;
}

TEST(Dual, IntersectionOfZinbielsIsComAdm) {
    Subspace l = catalog("lZinb").relations(), r = catalog("rZinb").relations();
    // intersection = complement of (l^perp + r^perp) under the standard inner product
    MatrixQ id = MatrixQ::identity(l.ambient_dim());
    Subspace lp = orth_complement(l, id), rp = orth_complement(r, id);
    std::vector<VectorQ> rows;
    for (std::size_t i = 0; i < lp.dim(); ++i) rows.push_back(lp.basis().row_vector(i));
    for (std::size_t i = 0; i < rp.dim(); ++i) rows.push_back(rp.basis().row_vector(i));
    Subspace meet = orth_complement(Subspace::span(l.ambient_dim(), rows), id);
    EXPECT_EQ(meet, catalog("ComAdm").relations());
}
