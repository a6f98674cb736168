#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "operadkit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = operadkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

}  // namespace

TEST(Cli, DualOfSymmetricLeibniz) {
    Outcome r = run({"dual", "sLeib"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("dual of sLeib: ComAdm"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("operad ComAdm {"), std::string::npos);
}

TEST(Cli, InvertedSeriesListsTenDimensions) {
    Outcome r = run({"series", "sLeib", "--invert", "--terms", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("dimensions of ComAdm = sLeib!"), std::string::npos);
    EXPECT_NE(r.out.find("\n3: 10\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n10: 5150163272\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("EGF: x + x^2 + 5/3 x^3"), std::string::npos);
}

TEST(Cli, DimsPrintsOneLinePerArity) {
    Outcome r = run({"dims", "Lie", "--max-arity", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "dimensions of Lie\n1: 1\n2: 1\n3: 2\n4: 6\nEGF: x + 1/2 x^2 + 1/3 x^3 + 1/4 x^4 + O(x^5)\n");
}

TEST(Cli, OutputIsDeterministic) {
    EXPECT_EQ(run({"koszul-evidence", "sPerm", "--max-arity", "4"}).out,
              run({"koszul-evidence", "sPerm", "--max-arity", "4"}).out);
}

TEST(Cli, DiagramPasses) {
    Outcome r = run({"diagram"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS 22/22 arrows, 8/8 squares commute"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("note: "), std::string::npos);
}

TEST(Cli, FailedChecksExitWithOne) {
    EXPECT_EQ(run({"white-condition", "Lie", "--max-arity", "3"}).code, 1);
    EXPECT_EQ(run({"white-condition", "Com", "--max-arity", "4"}).code, 0);
}

TEST(Cli, InputErrorsExitWithTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"dims", "Lie", "--bogus-flag"}).code, 2);
    Outcome unknown = run({"dims", "NoSuchOperad"});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_NE(unknown.err.find("NoSuchOperad"), std::string::npos);
    EXPECT_EQ(run({"series", "Lie", "--terms", "0"}).code, 2);
}

TEST(Cli, CapacityNeedsAllowLarge) {
    Outcome r = run({"dims", "Lie", "--max-arity", "8"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--allow-large"), std::string::npos) << r.err;
    EXPECT_EQ(run({"--allow-large", "dims", "Lie", "--max-arity", "7"}).code, 0);
}

TEST(Cli, MorphismFromFile) {
    std::string path = temp_path("commutator.map");
    std::ofstream(path) << "map br = mul(x1,x2) - mul(x2,x1)\n";
    EXPECT_EQ(run({"morphism", "Lie", "Ass", "--map", path}).code, 0);
    std::ofstream(path) << "map br = 0\n";
    EXPECT_EQ(run({"morphism", "Lie", "Ass", "--map", path}).code, 0);
    std::string wrong = temp_path("identity.map");
    std::ofstream(wrong) << "map mul = mul(x1,x2)\n";
    Outcome r = run({"morphism", "Ass", "lLeib", "--map", wrong});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("witness"), std::string::npos) << r.out;
}

TEST(Cli, FreeFunctorQuotientAndCheck) {
    std::string sd = temp_path("sdiass.json"), lb = temp_path("leib.json"), q = temp_path("quot.json");
    Outcome f = run({"free", "sDiAss", "--gens", "2", "--degree", "3", "--check", "--emit", sd});
    EXPECT_EQ(f.code, 0) << f.err;
    EXPECT_NE(f.out.find("PASS sDiAss"), std::string::npos) << f.out;
    EXPECT_EQ(run({"functor", "dialg_to_leibniz", sd, "--emit", lb}).code, 0);
    EXPECT_EQ(run({"check", lb, "--type", "sLeib"}).code, 0);
    EXPECT_EQ(run({"check", lb, "--type", "Lie", "--bind", "br=mul"}).code, 1);
    EXPECT_EQ(run({"check", lb, "--type", "Lie", "--bind", "br"}).code, 2);
    EXPECT_EQ(run({"quotient", lb, "--construction", "squares", "--emit", q}).code, 0);
    EXPECT_EQ(run({"check", q, "--type", "Lie", "--bind", "br=br"}).code, 0);
    Outcome json = run({"functor", "dialg_to_leibniz", sd});
    EXPECT_EQ(json.out.rfind("{", 0), 0u);
    EXPECT_EQ(run({"quotient", lb, "--construction", "nope"}).code, 2);
}

TEST(Cli, VerifyAliasIsRegistered) {
    Outcome r = run({"verify-paper", "--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("acceptance"), std::string::npos) << r.out;
}
