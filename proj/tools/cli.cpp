#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "operadkit/algebras.hpp"
#include "operadkit/error.hpp"
#include "operadkit/expansion.hpp"
#include "operadkit/koszul.hpp"
#include "operadkit/presentations.hpp"
#include "operadkit/series.hpp"
#include "operadkit/verify.hpp"

namespace operadkit::cli {
namespace {

struct Globals {
    bool allow_large = false;
    bool verbose = false;
};

CapacityPolicy policy_from(const Globals& g) {
    CapacityPolicy p = CapacityPolicy::from_environment();
    p.allow_large = g.allow_large;
    return p;
}

Rational to_rational(std::uint64_t d) { return Rational(mpq_class(mpz_class(std::to_string(d)))); }

void print_dims(std::ostream& out, const std::vector<Rational>& dims) {
    for (std::size_t n = 1; n <= dims.size(); ++n) out << n << ": " << dims[n - 1].str() << "\n";
    out << "EGF: " << EGF::from_dims(dims).to_string() << "\n";
}

void print_dims(std::ostream& out, const std::vector<std::uint64_t>& dims) {
    std::vector<Rational> q;
    for (auto d : dims) q.push_back(to_rational(d));
    print_dims(out, q);
}

std::size_t arity_or_default(std::size_t requested, const Presentation& p, const CapacityPolicy& policy) {
    return requested ? requested : effective_max_arity(p.gens().degree(), policy);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::Parse, "cannot write " + path);
    f << text;
}

Binding parse_bindings(const std::vector<std::string>& items) {
    Binding b;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw Error(ErrorKind::Parse, "--bind expects GEN=OP, got '" + item + "'");
        b[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return b;
}

void print_identity_report(std::ostream& out, const IdentityReport& r) {
    out << (r.pass ? "PASS " : "FAIL ") << r.message << "\n";
    if (!r.violation) return;
    const auto& v = *r.violation;
    out << "  identity: " << v.identity << "\n  arguments:";
    for (std::size_t i = 0; i < v.arguments.size(); ++i) out << " x" << i + 1 << "=" << v.arguments[i];
    out << "\n  value: " << v.value << "\n";
}

// ---------------------------------------------------------------------------

int cmd_catalog(std::ostream& out, const std::string& name) {
    if (!name.empty()) {
        out << format_presentation(catalog(name));
        return kExitOk;
    }
    auto row = [&](const std::string& n) {
        Presentation p = catalog(n);
        out << n << ":";
        for (const auto& g : p.gens().generators()) out << " " << g.name << "(" << to_string(g.symmetry) << ")";
        out << ", " << p.relations().dim() << " relations in " << p.ambient().size() << "\n";
    };
    for (const auto& n : catalog_names()) row(n);
    out << "variants:\n";
    for (const auto& n : catalog_variants()) row(n);
    return kExitOk;
}

int cmd_dual(std::ostream& out, const std::string& name) {
    Presentation p = resolve_presentation(name);
    DualResult d = dual(p);
    out << "dual of " << p.name() << ": " << d.presentation.name();
    if (!d.catalog_match.empty()) out << " (relation space equals catalog " << d.catalog_match << ")";
    out << "\n";
    out << "relations " << d.presentation.relations().dim() << " of " << d.presentation.ambient().size()
        << " (primal " << p.relations().dim() << ")\n";
    out << format_presentation(d.presentation);
    return kExitOk;
}

int cmd_dims(std::ostream& out, const Globals& g, const std::string& name, std::size_t max_arity) {
    CapacityPolicy policy = policy_from(g);
    Presentation p = resolve_presentation(name);
    auto dims = Expansion(p, policy).dims(arity_or_default(max_arity, p, policy));
    out << "dimensions of " << p.name() << "\n";
    print_dims(out, dims);
    return kExitOk;
}

int cmd_series(std::ostream& out, const Globals& g, const std::string& name, bool do_invert, std::size_t terms) {
    EGF f;
    std::string label = canonical_name(name);
    bool closed = false;
    for (const auto& c : closed_form_names()) closed = closed || c == label;
    if (closed) {
        f = closed_form(label, terms);
        out << "series of " << label << " (closed form)\n";
    } else {
        CapacityPolicy policy = policy_from(g);
        Presentation p = resolve_presentation(name);
        label = p.name();
        f = EGF::from_dims(Expansion(p, policy).dims(terms));
        out << "series of " << label << " (saturation)\n";
    }
    if (do_invert) {
        f = invert(f, terms);
        std::string dual_name = label + "!";
        if (in_catalog(label)) dual_name = dual(catalog(label)).presentation.name() + " = " + label + "!";
        out << "inverse series: dimensions of " << dual_name << "\n";
    }
    print_dims(out, f.dims());
    return kExitOk;
}

int cmd_evidence(std::ostream& out, const Globals& g, const std::string& name, std::size_t max_arity) {
    CapacityPolicy policy = policy_from(g);
    Presentation p = resolve_presentation(name);
    EvidenceReport r = koszul_evidence(p, arity_or_default(max_arity, p, policy), policy);
    out << "n: dim " << r.name << ", dim " << r.dual_name << ", predicted\n";
    for (std::size_t n = 1; n <= r.dims.size(); ++n)
        out << n << ": " << r.dims[n - 1] << ", " << r.dual_dims[n - 1] << ", " << r.predicted[n - 1].str() << "\n";
    out << (r.pass ? "PASS " : "FAIL ") << r.message << "\n";
    return r.pass ? kExitOk : kExitCheckFailed;
}

int cmd_morphism(std::ostream& out, const std::string& src_name, const std::string& tgt_name,
                 const std::string& map_path) {
    Presentation src = resolve_presentation(src_name);
    Presentation tgt = resolve_presentation(tgt_name);
    GenMap f = load_genmap(map_path, src.gens(), tgt.gens());
    for (const auto& a : diagram_arrows())
        if (a.source == src.name() && a.target == tgt.name() && !a.note.empty() && arrow_map(a) == f)
            out << "note: " << a.note << "\n";
    MorphismResult r = morphism_check(src, tgt, f);
    out << (r.ok ? "PASS " : "FAIL ") << src.name() << " -> " << tgt.name() << ": " << r.message << "\n";
    if (!r.ok && !r.witness.empty()) out << "  witness: " << format_vector(src.ambient(), r.witness) << "\n";
    return r.ok ? kExitOk : kExitCheckFailed;
}

int cmd_diagram(std::ostream& out) {
    DiagramReport r = check_diagram();
    out << "arrows\n";
    for (const auto& a : r.arrows) {
        out << (a.result.ok ? "  ok    " : "  FAIL  ") << a.arrow.source << " -> " << a.arrow.target << "\n";
        if (!a.arrow.note.empty()) out << "        note: " << a.arrow.note << "\n";
        if (!a.result.ok) out << "        " << a.result.message << "\n";
    }
    out << "squares\n";
    for (const auto& s : r.squares) {
        auto path = [](const std::vector<std::string>& v) { return v[0] + " -> " + v[1] + " -> " + v[2]; };
        out << (s.commutes ? "  ok    " : "  FAIL  ") << path(s.right_then_down) << " = " << path(s.down_then_right)
            << "\n";
    }
    std::size_t good_arrows = 0, good_squares = 0;
    for (const auto& a : r.arrows) good_arrows += a.result.ok;
    for (const auto& s : r.squares) good_squares += s.commutes;
    out << (r.ok() ? "PASS " : "FAIL ") << good_arrows << "/" << r.arrows.size() << " arrows, " << good_squares << "/"
        << r.squares.size() << " squares commute\n";
    return r.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_hadamard(std::ostream& out, const Globals& g, const std::string& a_name, const std::string& b_name,
                 std::size_t max_arity) {
    CapacityPolicy policy = policy_from(g);
    Presentation a = resolve_presentation(a_name);
    Presentation b = resolve_presentation(b_name);
    std::size_t n = max_arity ? max_arity
                              : std::min(effective_max_arity(a.gens().degree(), policy),
                                         effective_max_arity(b.gens().degree(), policy));
    auto dims = hadamard_dims(a, b, n, policy);
    out << "dimensions of " << a.name() << " (x)H " << b.name() << "\n";
    print_dims(out, dims);
    return kExitOk;
}

int cmd_white(std::ostream& out, const Globals& g, const std::string& name, std::size_t max_arity) {
    CapacityPolicy policy = policy_from(g);
    Presentation p = resolve_presentation(name);
    auto rows = white_condition(p, arity_or_default(max_arity, p, policy), policy);
    bool pass = true;
    for (const auto& w : rows) {
        out << w.arity << ": dim " << w.dim << ", " << w.shapes << " shapes, min rank " << w.min_rank
            << (w.pass ? ", ok" : ", FAIL") << "\n";
        pass = pass && w.pass;
    }
    out << (pass ? "PASS " : "FAIL ") << p.name() << (pass ? ": every tree shape spans" : ": some tree shape fails to span")
        << " P(n)\n";
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_check(std::ostream& out, const std::string& path, const std::string& type,
              const std::vector<std::string>& binds) {
    AlgebraTable a = load_algebra(path);
    IdentityReport r = check_identities(a, resolve_presentation(type), parse_bindings(binds));
    print_identity_report(out, r);
    return r.pass ? kExitOk : kExitCheckFailed;
}

int cmd_free(std::ostream& out, const Globals& g, const std::string& type, std::size_t gens, int degree, bool check,
             const std::string& emit) {
    FreeLimits limits;
    limits.allow_large = g.allow_large;
    AlgebraTable a = free_algebra(type, gens, degree, limits);
    out << "free " << canonical_name(type) << " algebra on " << gens << " generators, truncated above degree "
        << degree << "\n";
    for (int d = 1; d <= degree; ++d) out << d << ": " << a.component(d).size() << "\n";
    out << "total: " << a.dim() << "\n";
    int code = kExitOk;
    if (check) {
        IdentityReport r = check_identities(a, type);
        print_identity_report(out, r);
        if (!r.pass) code = kExitCheckFailed;
    }
    if (!emit.empty()) {
        write_file(emit, format_algebra_json(a));
        out << "wrote " << emit << "\n";
    }
    return code;
}

int cmd_functor(std::ostream& out, const std::string& name, const std::string& path, const std::string& emit) {
    AlgebraTable a = load_algebra(path);
    AlgebraTable b = apply_functor(a, name);
    if (emit.empty()) {
        out << format_algebra_json(b);
        return kExitOk;
    }
    for (const auto& f : functors())
        if (f.name == name) out << f.source_type << " -> " << f.target_type << ": " << f.formula << "\n";
    write_file(emit, format_algebra_json(b));
    out << "wrote " << emit << "\n";
    return kExitOk;
}

int cmd_quotient(std::ostream& out, const std::string& path, const std::string& construction,
                 const std::string& emit) {
    AlgebraTable a = load_algebra(path);
    QuotientResult q = apply_construction(a, construction);
    if (emit.empty()) {
        out << format_algebra_json(q.quotient);
        return kExitOk;
    }
    for (const auto& c : constructions())
        if (c.name == construction)
            out << c.source_type << " -> " << c.target_type << ": quotient by the ideal " << c.ideal << "\n";
    out << "ideal dimension " << q.ideal_dim << ", quotient dimension " << q.quotient.dim() << "\n";
    write_file(emit, format_algebra_json(q.quotient));
    out << "wrote " << emit << "\n";
    return kExitOk;
}

int cmd_verify(std::ostream& out, std::ostream& err, const Globals& g) {
    bool all = true;
    run_acceptance([&](const CheckResult& r) {
        out << (r.pass ? "PASS " : "FAIL ") << r.id << ". " << r.title << "\n";
        for (const auto& d : r.details) out << "  " << d << "\n";
        out.flush();
        if (g.verbose) err << "check " << r.id << ": " << r.seconds << " s\n";
        all = all && r.pass;
    });
    return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binary quadratic operads over Q: duals, dimensions, series and algebras", "operadkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--allow-large", g.allow_large, "Lift the arity ceiling and the work limits");
    app.add_flag("-v,--verbose", g.verbose, "Print timing to stderr");

    std::function<int()> action;
    std::string name, name2, file, type, emit, construction;
    std::size_t max_arity = 0, terms = 10, gens = 2;
    int degree = 3;
    bool flag = false;
    std::vector<std::string> binds;

    auto max_arity_opt = [&](CLI::App* sub) {
        sub->add_option("--max-arity", max_arity, "Largest arity (default: the capacity ceiling)")
            ->check(CLI::Range(1, 64));
    };

    auto* s = app.add_subcommand("catalog", "List catalog entries, or print one presentation");
    s->add_option("name", name, "Catalog entry");
    s->callback([&] { action = [&] { return cmd_catalog(out, name); }; });

    s = app.add_subcommand("dual", "Koszul dual presentation");
    s->add_option("operad", name, "Catalog name or presentation file")->required();
    s->callback([&] { action = [&] { return cmd_dual(out, name); }; });

    s = app.add_subcommand("dims", "Dimensions dim P(n) by saturation");
    s->add_option("operad", name, "Catalog name or presentation file")->required();
    max_arity_opt(s);
    s->callback([&] { action = [&] { return cmd_dims(out, g, name, max_arity); }; });

    s = app.add_subcommand("series", "Generating series, optionally inverted");
    s->add_option("operad", name, "Catalog name or presentation file")->required();
    s->add_flag("--invert", flag, "Print the series g with g(-f(x)) = -x");
    s->add_option("--terms", terms, "Number of terms")->check(CLI::Range(1, 200));
    s->callback([&] { action = [&] { return cmd_series(out, g, name, flag, terms); }; });

    s = app.add_subcommand("koszul-evidence", "Series test for Koszulness on computed dimensions");
    s->add_option("operad", name, "Catalog name or presentation file")->required();
    max_arity_opt(s);
    s->callback([&] { action = [&] { return cmd_evidence(out, g, name, max_arity); }; });

    s = app.add_subcommand("morphism", "Check that a generator map is an operad morphism");
    s->add_option("source", name, "Source operad")->required();
    s->add_option("target", name2, "Target operad")->required();
    s->add_option("--map", file, "File of `map GEN = ...` lines")->required()->check(CLI::ExistingFile);
    s->callback([&] { action = [&] { return cmd_morphism(out, name, name2, file); }; });

    s = app.add_subcommand("diagram", "Check every arrow and square of the operad diagram");
    s->callback([&] { action = [&] { return cmd_diagram(out); }; });

    s = app.add_subcommand("hadamard", "Dimensions of the Hadamard product");
    s->add_option("a", name, "First operad")->required();
    s->add_option("b", name2, "Second operad")->required();
    max_arity_opt(s);
    s->callback([&] { action = [&] { return cmd_hadamard(out, g, name, name2, max_arity); }; });

    s = app.add_subcommand("white-condition", "Whether every tree shape spans P(n)");
    s->add_option("operad", name, "Catalog name or presentation file")->required();
    max_arity_opt(s);
    s->callback([&] { action = [&] { return cmd_white(out, g, name, max_arity); }; });

    s = app.add_subcommand("check", "Check an algebra table against the identities of a type");
    s->add_option("algebra", file, "Algebra JSON")->required()->check(CLI::ExistingFile);
    s->add_option("--type", type, "Catalog name or presentation file")->required();
    s->add_option("--bind", binds, "GEN=OP, binding a type generator to a table operation");
    s->callback([&] { action = [&] { return cmd_check(out, file, type, binds); }; });

    s = app.add_subcommand("free", "Truncated free algebra");
    s->add_option("type", type, "Lie, sLeib, sDiAss, sPerm, Ass, DiAss or lZinb")->required();
    s->add_option("--gens", gens, "Number of generators")->check(CLI::Range(1, 16));
    s->add_option("--degree", degree, "Truncation degree")->check(CLI::Range(1, 32));
    s->add_flag("--check", flag, "Check the identities of the type on the result");
    s->add_option("--emit", emit, "Write the table as JSON");
    s->callback([&] { action = [&] { return cmd_free(out, g, type, gens, degree, flag, emit); }; });

    s = app.add_subcommand("functor", "Apply a functor between algebra types");
    s->add_option("functor", name, "Functor name")->required();
    s->add_option("algebra", file, "Algebra JSON")->required()->check(CLI::ExistingFile);
    s->add_option("--emit", emit, "Write the result to a file instead of stdout");
    s->callback([&] { action = [&] { return cmd_functor(out, name, file, emit); }; });

    s = app.add_subcommand("quotient", "Quotient of an algebra by a canonical ideal");
    s->add_option("algebra", file, "Algebra JSON")->required()->check(CLI::ExistingFile);
    s->add_option("--construction", construction, "squares, leibniz-defect, diperm or abelianize")->required();
    s->add_option("--emit", emit, "Write the result to a file instead of stdout");
    s->callback([&] { action = [&] { return cmd_quotient(out, file, construction, emit); }; });

    s = app.add_subcommand("verify", "Run the acceptance checks");
    s->alias("verify-paper");
    s->callback([&] { action = [&] { return cmd_verify(out, err, g); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    }

    try {
        auto start = std::chrono::steady_clock::now();
        int code = action();
        if (g.verbose) {
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            err << "elapsed " << dt.count() << " s\n";
        }
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace operadkit::cli
