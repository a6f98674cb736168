#include "operadkit/verify.hpp"

#include <chrono>
#include <cstdint>

#include "operadkit/algebras.hpp"
#include "operadkit/expansion.hpp"
#include "operadkit/koszul.hpp"
#include "operadkit/series.hpp"

namespace operadkit {

namespace {

// dimension tables of the admissible operads, ten terms each
const std::vector<std::string> kComAdmTable = {"1",      "2",       "10",         "86",           "1036",
                                               "16052",  "304060",  "6807656",    "175881016",    "5150163272"};
const std::vector<std::string> kAssAdmTable = {"1",        "4",        "42",         "744",         "18480",
                                               "590400",   "23058000", "1064367360", "56693831040", "3422589811200"};
const std::vector<std::string> kLieAdmTable = {"1",      "2",       "11",         "101",          "1299",
                                               "21484",  "434314",  "10376729",   "286071990",    "8938291341"};

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
    return s;
}

std::vector<std::uint64_t> prefix(const std::vector<std::string>& table, std::size_t n) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::stoull(table[i]));
    return out;
}

struct Recorder {
    CheckResult& r;
    void operator()(bool ok, const std::string& line) {
        r.details.push_back((ok ? "ok    " : "FAIL  ") + line);
        if (!ok) r.pass = false;
    }
};

// (1/d) sum_{e | d} mu(d/e) k^e
std::uint64_t witt(std::uint64_t k, std::uint64_t d) {
    auto mobius = [](std::uint64_t n) {
        int mu = 1;
        for (std::uint64_t p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
        return n > 1 ? -mu : mu;
    };
    std::int64_t sum = 0;
    for (std::uint64_t e = 1; e <= d; ++e) {
        if (d % e) continue;
        std::int64_t pw = 1;
        for (std::uint64_t i = 0; i < e; ++i) pw *= static_cast<std::int64_t>(k);
        sum += mobius(d / e) * pw;
    }
    return static_cast<std::uint64_t>(sum) / d;
}

void check_duality(Recorder& rec) {
    for (const auto& c : duality_table()) {
        if (c.primal == c.expected_dual && c.detail.rfind("dual of the dual", 0) == 0)
            rec(c.ok, "(" + c.primal + "!)! = " + c.primal);
        else
            rec(c.ok, c.primal + "! = " + c.expected_dual);
    }
}

void check_arity_three(Recorder& rec) {
    for (auto [name, ambient, rel, perp] : {std::tuple{"sLeib", 12u, 10u, 2u}, std::tuple{"sDiAss", 48u, 42u, 6u}}) {
        Presentation p = catalog(name);
        Presentation d = dual_presentation(p);
        const std::size_t a = p.ambient().size(), r = p.relations().dim(), q = d.relations().dim();
        rec(a == ambient && r == rel && q == perp,
            std::string(name) + ": ambient " + std::to_string(a) + ", relations " + std::to_string(r) +
                ", orthogonal complement " + std::to_string(q) +
                (p.gens().all_plain() && a % 6 == 0 && r % 6 == 0 && q % 6 == 0 && r > 6
                     ? " (" + std::to_string(a / 6) + "/" + std::to_string(r / 6) + "/" + std::to_string(q / 6) +
                           " per leaf labelling)"
                     : ""));
    }
}

void check_series(Recorder& rec) {
    for (const auto& [primal, dual, table] : {std::tuple{"sLeib", "ComAdm", &kComAdmTable},
                                              std::tuple{"sDiAss", "AssAdm", &kAssAdmTable},
                                              std::tuple{"sPerm", "LieAdm", &kLieAdmTable}}) {
        std::vector<std::string> got;
        for (const auto& q : invert(closed_form(primal, 10), 10).dims()) got.push_back(q.str());
        rec(got == *table, std::string("invert(f^") + primal + ") = " + dual + ": " + join(got));
    }
}

void check_saturation(Recorder& rec) {
    for (const auto& [name, n, table] : {std::tuple{"ComAdm", 5u, &kComAdmTable}, std::tuple{"LieAdm", 5u, &kLieAdmTable},
                                         std::tuple{"AssAdm", 4u, &kAssAdmTable}}) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<std::uint64_t> got = dims(catalog(name), n);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rec(got == prefix(*table, n) && s < 300,
            std::string(name) + " through arity " + std::to_string(n) + ": " + join(got) +
                (s < 300 ? "" : " (over the 300 s budget)"));
    }
}

void check_evidence(Recorder& rec) {
    for (const char* name : {"sLeib", "sDiAss", "sPerm", "Lie", "Ass", "Com", "lLeib", "lPerm", "DiAss"}) {
        Presentation p = catalog(name);
        const std::size_t n = effective_max_arity(p.gens().degree(), {});
        EvidenceReport e = koszul_evidence(p, n);
        rec(e.pass, std::string(name) + " through arity " + std::to_string(n) + ": " + e.message);
    }
    EvidenceReport bad = koszul_evidence(mutilated_sleib(), 5);
    rec(!bad.pass, "negative control " + bad.name + " is rejected: " + bad.message);
}

void check_diagram_all(Recorder& rec) {
    DiagramReport d = check_diagram();
    std::size_t arrows_ok = 0, squares_ok = 0;
    for (const auto& a : d.arrows) {
        if (a.result.ok) ++arrows_ok;
        else rec(false, "arrow " + a.arrow.source + " -> " + a.arrow.target + ": " + a.result.message);
    }
    for (const auto& s : d.squares) {
        if (s.commutes) ++squares_ok;
        else rec(false, "square " + join(s.right_then_down) + " / " + join(s.down_then_right) + " does not commute");
    }
    rec(arrows_ok == d.arrows.size(),
        std::to_string(arrows_ok) + "/" + std::to_string(d.arrows.size()) + " arrows are operad morphisms");
    rec(squares_ok == d.squares.size(),
        std::to_string(squares_ok) + "/" + std::to_string(d.squares.size()) + " squares commute on generators");
    rec(sum(catalog("lLeib").relations(), catalog("rLeib").relations()) == catalog("sLeib").relations(),
        "R(lLeib) + R(rLeib) = R(sLeib)");
    rec(intersect(catalog("lZinb").relations(), catalog("rZinb").relations()) == catalog("ComAdm").relations(),
        "R(lZinb) meet R(rZinb) = R(ComAdm)");
}

void check_hadamard(Recorder& rec) {
    for (const auto& [a, target] : {std::pair{"Lie", "sLeib"}, std::pair{"Ass", "sDiAss"}}) {
        auto h = hadamard_dims(catalog(a), catalog("sPerm"), 5);
        auto t = dims(catalog(target), 5);
        rec(h == t, std::string(a) + " (x)_H sPerm: " + join(h) + "; " + target + ": " + join(t));
    }
    for (const char* name : {"sPerm", "Com"}) {
        bool all = true;
        for (const auto& w : white_condition(catalog(name), 5)) all = all && w.pass;
        rec(all, std::string(name) + " satisfies the surjectivity criterion for arities 3..5");
    }
    auto lie = white_condition(catalog("Lie"), 3);
    rec(!lie.empty() && !lie[0].pass, "Lie fails the surjectivity criterion at arity 3 (rank " +
                                          std::to_string(lie.empty() ? 0 : lie[0].min_rank) + " of " +
                                          std::to_string(lie.empty() ? 0 : lie[0].dim) + ")");
}

void check_algebras(Recorder& rec) {
    auto report = [&](const AlgebraTable& a, const std::string& type, const std::string& what) {
        IdentityReport r = check_identities(a, type);
        rec(r.pass, what + ": " + r.message);
    };
    report(free_sperm(2, 3), "sPerm", "free sPerm algebra (k=2, D=3)");
    report(free_sdiass(2, 3), "sDiAss", "free sDiAss algebra (k=2, D=3)");
    report(free_sleib(2, 3), "sLeib", "free sLeib algebra (k=2, D=3)");
    report(apply_functor(free_sdiass(2, 3), "dialg_to_leibniz"), "sLeib", "dialg_to_leibniz of the free sDiAss algebra");

    for (const auto& c : constructions()) {
        std::size_t ok = 0;
        std::string first_failure;
        auto corpus = random_corpus(c.source_type, 5);
        for (const auto& t : corpus) {
            IdentityReport in = check_identities(t, c.source_type);
            IdentityReport out = check_identities(apply_construction(t, c.name).quotient, c.target_type);
            if (in.pass && out.pass) ++ok;
            else if (first_failure.empty()) first_failure = in.pass ? out.message : in.message;
        }
        rec(ok == corpus.size(), c.name + " quotient: " + std::to_string(ok) + "/" + std::to_string(corpus.size()) +
                                     " random " + c.source_type + " tables give " + c.target_type + " algebras" +
                                     (first_failure.empty() ? "" : " (" + first_failure + ")"));
    }

    AlgebraTable lie = free_lie(2, 6);
    std::vector<std::uint64_t> got, expected;
    for (int d = 1; d <= 6; ++d) {
        got.push_back(lie.component(d).size());
        expected.push_back(witt(2, static_cast<std::uint64_t>(d)));
    }
    rec(got == expected, "free Lie algebra on 2 generators, degrees 1..6: " + join(got) + " (Witt: " + join(expected) + ")");

    for (const char* type : {"Lie", "sLeib", "sDiAss", "sPerm"}) {
        Presentation p = catalog(type);
        std::vector<std::uint64_t> oracle = dims(p, 4), basis, rank;
        for (std::size_t n = 1; n <= 4; ++n) {
            AlgebraTable f = free_algebra(type, n, static_cast<int>(n));
            basis.push_back(multilinear_basis(f, n).size());
            rank.push_back(multilinear_rank(f, p, n));
        }
        rec(basis == oracle && rank == oracle, std::string("multilinear parts of free ") + type +
                                                   " algebras: " + join(basis) + " (oracle " + join(oracle) + ")");
    }
}

}  // namespace

Presentation mutilated_sleib() {
    return parse_presentation(R"(operad sLeib.mutilated {
  gen br antisym
  gen di sym
  rel di(di(x1,x2),x3) + di(di(x2,x3),x1) + di(di(x3,x1),x2)
  rel di(br(x1,x2),x3)
  rel br(di(x1,x2),x3)
})");
}

std::vector<CheckResult> run_acceptance(const std::function<void(const CheckResult&)>& on_result) {
    struct CheckDef {
        std::string title;
        double budget;
        void (*run)(Recorder&);
    };
    const std::vector<CheckDef> checks = {
        {"Koszul duals match the catalog; dualizing twice is the identity", 5, check_duality},
        {"arity-3 counts: ambient, relations and orthogonal complement", 0, check_arity_three},
        {"series inversion reproduces the ten-term admissible tables", 1, check_series},
        {"saturation dimensions agree with the admissible tables", 900, check_saturation},
        {"series evidence for Koszulness, with a failing negative control", 0, check_evidence},
        {"morphism diagram, commuting squares and relation-space identities", 0, check_diagram_all},
        {"Hadamard products with sPerm and the surjectivity criterion", 0, check_hadamard},
        {"free algebras, functors, quotient constructions and multilinear parts", 0, check_algebras},
    };
    std::vector<CheckResult> out;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CheckResult r;
        r.id = static_cast<int>(i + 1);
        r.title = checks[i].title;
        r.pass = true;
        r.budget_seconds = checks[i].budget;
        Recorder rec{r};
        auto t0 = std::chrono::steady_clock::now();
        try {
            checks[i].run(rec);
        } catch (const std::exception& e) {
            rec(false, std::string("error: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.budget_seconds > 0 && r.seconds > r.budget_seconds)
            rec(false, "took longer than the " + std::to_string(static_cast<int>(r.budget_seconds)) + " s budget");
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace operadkit
