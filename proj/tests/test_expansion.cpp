#include <gtest/gtest.h>

#include <cstdlib>
#include <functional>

#include "operadkit/error.hpp"
#include "operadkit/expansion.hpp"

using namespace operadkit;

namespace {

std::uint64_t fact(std::uint64_t n) { return n <= 1 ? 1 : n * fact(n - 1); }
std::uint64_t catalan(std::uint64_t n) { return fact(2 * n) / (fact(n) * fact(n + 1)); }
std::uint64_t power(std::uint64_t b, std::uint64_t e) { return e == 0 ? 1 : b * power(b, e - 1); }

std::vector<std::uint64_t> table(std::size_t n_max, const std::function<std::uint64_t(std::uint64_t)>& f) {
    std::vector<std::uint64_t> v;
    for (std::uint64_t n = 1; n <= n_max; ++n) v.push_back(f(n));
    return v;
}

}  // namespace

struct ClosedForm {
    std::string name;
    std::size_t n_max;
    std::function<std::uint64_t(std::uint64_t)> dim;
};

void PrintTo(const ClosedForm& c, std::ostream* os) { *os << c.name; }

class KnownDimensions : public ::testing::TestWithParam<ClosedForm> {};

TEST_P(KnownDimensions, MatchClosedForm) {
    const auto& c = GetParam();
    EXPECT_EQ(dims(catalog(c.name), c.n_max), table(c.n_max, c.dim));
}

INSTANTIATE_TEST_SUITE_P(
    Catalog, KnownDimensions,
    ::testing::Values(
        ClosedForm{"Lie", 6, [](auto n) { return fact(n - 1); }},
        ClosedForm{"Com", 6, [](auto) { return 1; }},
        ClosedForm{"ComMag", 6, [](auto n) { return n == 1 ? 1 : fact(2 * n - 2) / (fact(n - 1) << (n - 1)); }},
        ClosedForm{"Ass", 5, [](auto n) { return fact(n); }},
        ClosedForm{"lLeib", 5, [](auto n) { return fact(n); }},
        ClosedForm{"lZinb", 5, [](auto n) { return fact(n); }},
        ClosedForm{"lPerm", 5, [](auto n) { return n; }},
        ClosedForm{"PreLie", 5, [](auto n) { return power(n, n - 1); }},
        ClosedForm{"sLeib", 5, [](auto n) { return fact(n - 1) + (n == 2 ? 1 : 0); }},
        ClosedForm{"sPerm", 5, [](auto n) { return n == 2 ? 2 : 1; }},
        ClosedForm{"sDiAss", 4, [](auto n) { return fact(n) + (n == 2 ? 2 : 0); }},
        ClosedForm{"DiAss", 4, [](auto n) { return n * fact(n); }},
        ClosedForm{"Dend", 4, [](auto n) { return fact(n) * catalan(n); }}),
    [](const auto& info) { return info.param.name; });

TEST(Expansion, ComponentProjectionKillsTheIdeal) {
    Expansion e(catalog("sLeib"));
    const ArityComponent& c = e.component(4);
    EXPECT_EQ(c.dim() + c.ideal_dim(), c.ambient().size());
    for (const auto& row : c.ideal_basis()) {
        VectorQ p = c.project(row);
        for (const auto& q : p) EXPECT_TRUE(q.is_zero());
    }
    for (std::size_t i = 0; i < c.representatives().size(); ++i) {
        VectorQ p = c.project_monomial(c.representatives()[i]);
        for (std::size_t j = 0; j < p.size(); ++j) EXPECT_EQ(p[j], Rational(i == j ? 1 : 0));
    }
}

TEST(Expansion, ChangeOfGeneratorsPreservesDimensions) {
    EXPECT_EQ(dims(catalog("sLeib.bd"), 5), dims(catalog("sLeib"), 5));
    EXPECT_EQ(dims(catalog("sPerm.bd"), 5), dims(catalog("sPerm"), 5));
    EXPECT_EQ(dims(catalog("sDiAss.sw"), 4), dims(catalog("sDiAss"), 4));
}

TEST(Capacity, DefaultCeilings) {
    EXPECT_EQ(default_max_arity(1), 6u);
    EXPECT_EQ(default_max_arity(2), 6u);
    EXPECT_EQ(default_max_arity(4), 5u);
    EXPECT_EQ(default_max_arity(8), 4u);
    CapacityPolicy p;
    p.max_arity = 3;
    EXPECT_EQ(effective_max_arity(2, p), 3u);
}

TEST(Capacity, AboveTheCeilingIsRefused) {
    CapacityPolicy p;
    p.max_arity = 3;
    try {
        dims(catalog("Ass"), 4, p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Capacity);
    }
    p.allow_large = true;
    EXPECT_EQ(dims(catalog("Ass"), 4, p).back(), 24u);
}

TEST(Capacity, EnvironmentOverride) {
    ::setenv("OPERADKIT_MAX_ARITY", "3", 1);
    CapacityPolicy p = CapacityPolicy::from_environment();
    ::unsetenv("OPERADKIT_MAX_ARITY");
    EXPECT_EQ(p.max_arity, 3u);
    EXPECT_EQ(CapacityPolicy::from_environment().max_arity, 0u);
}

TEST(Hadamard, ProductsWithSymmetricPerm) {
    EXPECT_EQ(hadamard_dims(catalog("Lie"), catalog("sPerm"), 5), dims(catalog("sLeib"), 5));
    EXPECT_EQ(hadamard_dims(catalog("Ass"), catalog("sPerm"), 5), dims(catalog("sDiAss"), 5));
    EXPECT_EQ(hadamard_dims(catalog("Ass"), catalog("Com"), 5), table(5, [](auto n) { return fact(n); }));
}

TEST(WhiteCondition, PassesAndFails) {
    for (const auto& w : white_condition(catalog("sPerm"), 5)) EXPECT_TRUE(w.pass) << "sPerm n=" << w.arity;
    for (const auto& w : white_condition(catalog("Com"), 5)) EXPECT_TRUE(w.pass) << "Com n=" << w.arity;
    auto lie = white_condition(catalog("Lie"), 3);
    ASSERT_EQ(lie.size(), 1u);
    EXPECT_FALSE(lie[0].pass);
    EXPECT_EQ(lie[0].dim, 2u);
    EXPECT_EQ(lie[0].min_rank, 1u);
}
