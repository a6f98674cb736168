#include <gtest/gtest.h>

#include "operadkit/error.hpp"
#include "operadkit/presentations.hpp"
#include "operadkit/series.hpp"
#include "operadkit/verify.hpp"

using namespace operadkit;

namespace {

std::vector<Rational> ints(const std::vector<std::string>& v) {
    std::vector<Rational> out;
    for (const auto& s : v) out.push_back(Rational::parse(s));
    return out;
}

std::vector<std::string> strs(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& q : v) out.push_back(q.str());
    return out;
}

// Presentation text of sLeib in the bracket/diamond basis, minus its first
// relation (the Jacobi identity). What remains is spanned by monomials.
std::string without_jacobi() {
    std::string src = format_presentation(catalog("sLeib.bd"));
    auto rel = src.find("  rel ");
    auto end = src.find('\n', rel);
    return src.substr(0, rel) + src.substr(end + 1);
}

}  // namespace

TEST(Series, ToStringAndCoefficients) {
    EGF f = EGF::from_dims(std::vector<std::uint64_t>{1, 1, 2});
    EXPECT_EQ(f.to_string(), "x + 1/2 x^2 + 1/3 x^3 + O(x^4)");
    EXPECT_EQ(f.coeff(3), Rational(1, 3));
    EXPECT_TRUE(f.coeff(4).is_zero());
    EXPECT_EQ(strs(f.dims()), (std::vector<std::string>{"1", "1", "2"}));
}

TEST(Series, ExpAndLogAreInverse) {
    // g(-f(x)) = -x with f = e^x - 1 gives g = -log(1 - x)
    EXPECT_EQ(invert(closed_form("Com", 12), 12), closed_form("Lie", 12));
    EXPECT_EQ(invert(closed_form("Lie", 12), 12), closed_form("Com", 12));
    EXPECT_EQ(invert(closed_form("Ass", 12), 12), closed_form("Ass", 12));
}

TEST(Series, InverseComposesToMinusIdentity) {
    for (const auto& name : closed_form_names()) {
        EGF f = closed_form(name, 10);
        EGF g = invert(f, 10);
        EGF lhs = compose(g, -f, 10);
        std::vector<Rational> expect(10);
        expect[0] = -1;
        EXPECT_EQ(lhs, EGF(expect)) << name;
    }
}

TEST(Series, InvertNeedsUnitLinearTerm) {
    try {
        invert(EGF(std::vector<Rational>{2, 1}), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Domain);
    }
    EXPECT_THROW(closed_form("Dend", 3), Error);
}

TEST(Series, TenTermTables) {
    EXPECT_EQ(invert(closed_form("sLeib", 10), 10).dims(),
              ints({"1", "2", "10", "86", "1036", "16052", "304060", "6807656", "175881016", "5150163272"}));
    EXPECT_EQ(invert(closed_form("sDiAss", 10), 10).dims(),
              ints({"1", "4", "42", "744", "18480", "590400", "23058000", "1064367360", "56693831040",
                    "3422589811200"}));
    EXPECT_EQ(invert(closed_form("sPerm", 10), 10).dims(),
              ints({"1", "2", "11", "101", "1299", "21484", "434314", "10376729", "286071990", "8938291341"}));
}

TEST(Series, AssAdmMatchesSaturationWhereComputable) {
    EGF f = invert(closed_form("sDiAss", 10), 10);
    std::vector<Rational> predicted = f.dims();
    auto computed = dims(catalog("AssAdm"), 4);
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(predicted[n - 1], Rational(static_cast<std::int64_t>(computed[n - 1])));
    EXPECT_EQ(predicted[3], Rational(744));
    for (const auto& q : predicted) EXPECT_TRUE(q.is_integer() && q.sign() > 0);
}

TEST(Series, ClosedFormsAgreeWithSaturation) {
    for (const auto& name : closed_form_names()) {
        std::size_t n = name == "sDiAss" ? 4 : 5;
        std::vector<Rational> computed;
        for (auto d : dims(catalog(name), n)) computed.push_back(Rational(static_cast<std::int64_t>(d)));
        EXPECT_EQ(closed_form(name, n).dims(), computed) << name;
    }
}

TEST(Evidence, KoszulOperadsPass) {
    for (const std::string name : {"Lie", "Com", "Ass", "sLeib", "sPerm", "lLeib", "lPerm"}) {
        EvidenceReport r = koszul_evidence(catalog(name), 5);
        EXPECT_TRUE(r.pass) << name << ": " << r.message;
        EXPECT_EQ(r.first_failure, 0u);
    }
}

TEST(Evidence, MonomialRelationsPass) {
    Presentation p = parse_presentation(without_jacobi());
    EXPECT_EQ(p.relations().dim(), 9u);
    EvidenceReport r = koszul_evidence(p, 5);
    EXPECT_TRUE(r.pass) << r.message;
}

TEST(Evidence, AntiAssociativeFails) {
    Presentation p = parse_presentation("operad AntiAss {\n gen m plain\n rel m(m(x1,x2),x3) + m(x1,m(x2,x3))\n}");
    EvidenceReport r = koszul_evidence(p, 5);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.first_failure, 5u);
    EXPECT_EQ(r.predicted[4], Rational(-480));
    EXPECT_NE(r.message.find("(negative)"), std::string::npos) << r.message;
}

TEST(Evidence, MutilatedSymmetricLeibnizFails) {
    EvidenceReport r = koszul_evidence(mutilated_sleib(), 5);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.first_failure, 5u);
    EXPECT_EQ(r.predicted[4], Rational(310));
    EXPECT_EQ(r.dual_dims[4], 315u);
}
