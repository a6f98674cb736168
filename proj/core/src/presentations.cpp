#include "operadkit/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "operadkit/error.hpp"

namespace operadkit {

std::string Expr::to_string() const {
    if (var > 0) return "x" + std::to_string(var);
    std::string s = op + "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i].to_string();
    return s + ")";
}

namespace {

std::string normalize_text(std::string text) {
    // accept the unicode minus sign
    const std::string minus = "\xE2\x88\x92";
    for (std::size_t p = text.find(minus); p != std::string::npos; p = text.find(minus, p))
        text.replace(p, minus.size(), "-");
    return text;
}

class ExprParser {
public:
    explicit ExprParser(std::string text) : s_(std::move(text)) {}

    std::vector<Term> combination() {
        std::vector<Term> terms;
        skip();
        if (s_.find_first_not_of(" \t\r\n", pos_) == s_.find_last_not_of(" \t\r\n") && peek() == '0')
            return terms;  // a literal 0 side
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip();
            } else if (!first) {
                break;
            }
            Term t = term();
            if (sign < 0) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            first = false;
            skip();
            if (at_end()) break;
        }
        skip();
        if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
        if (terms.empty()) fail("empty expression");
        return terms;
    }

private:
    Term term() {
        Term t{Rational(1), {}};
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num;
            while (std::isdigit(static_cast<unsigned char>(peek()))) num += get();
            if (peek() == '/') {
                num += get();
                while (std::isdigit(static_cast<unsigned char>(peek()))) num += get();
            }
            t.coeff = Rational::parse(num);
            skip();
            if (peek() == '*') {
                get();
                skip();
            }
        }
        t.expr = expr();
        return t;
    }

    Expr expr() {
        skip();
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '.') name += get();
        if (name.empty()) fail("expected a generator name or variable");
        if (peek() == '\'') name += get();
        skip();
        if (peek() != '(') {
            if (name.size() >= 2 && name[0] == 'x' &&
                std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                Expr e;
                e.var = std::stoi(name.substr(1));
                if (e.var < 1) fail("variables are numbered from x1");
                return e;
            }
            fail("expected '(' after '" + name + "'");
        }
        get();
        Expr e;
        e.op = name;
        e.args.push_back(expr());
        skip();
        if (get() != ',') fail("expected ',' in application of '" + name + "'");
        e.args.push_back(expr());
        skip();
        if (get() != ')') fail("expected ')' closing application of '" + name + "'");
        return e;
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return at_end() ? '\0' : s_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::Parse, what + " at column " + std::to_string(pos_ + 1) + " in '" + s_ + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

SignedMonomial compile_expr(const Expr& e, const GeneratorSet& gens, std::vector<int>& seen) {
    if (e.var > 0) {
        if (static_cast<std::size_t>(e.var) > seen.size())
            throw Error(ErrorKind::Parse, "variable x" + std::to_string(e.var) + " exceeds the arity " +
                                              std::to_string(seen.size()));
        if (seen[e.var - 1]++)
            throw Error(ErrorKind::Parse, "variable x" + std::to_string(e.var) + " used twice");
        return {1, TreeMonomial::leaf(e.var)};
    }
    std::string name = e.op;
    bool quoted = !name.empty() && name.back() == '\'';
    if (quoted) name.pop_back();
    int g = gens.find(name);
    if (g < 0) throw Error(ErrorKind::UnknownName, "unknown generator '" + name + "'");
    SignedSymbol s{1, gens.symbol(static_cast<std::size_t>(g))};
    if (quoted) s = gens.transpose(s.symbol);
    SignedMonomial l = compile_expr(e.args[0], gens, seen);
    SignedMonomial r = compile_expr(e.args[1], gens, seen);
    SignedMonomial j = TreeMonomial::join(gens, s.symbol, l.monomial, r.monomial);
    j.sign *= s.sign * l.sign * r.sign;
    return j;
}

}  // namespace

std::vector<IdentityTemplate> parse_identity(const std::string& text) {
    std::string t = normalize_text(text);
    std::vector<std::string> pieces;
    std::size_t start = 0;
    for (std::size_t p = t.find('='); p != std::string::npos; p = t.find('=', start)) {
        pieces.push_back(t.substr(start, p - start));
        start = p + 1;
    }
    pieces.push_back(t.substr(start));
    std::vector<std::vector<Term>> combos;
    for (const auto& piece : pieces) combos.push_back(ExprParser(piece).combination());
    std::vector<IdentityTemplate> out;
    if (std::all_of(combos.begin(), combos.end(), [](const auto& c) { return c.empty(); }))
        throw Error(ErrorKind::Parse, "identity '" + text + "' has no terms");
    if (combos.size() == 1) {
        out.push_back({combos[0]});
        return out;
    }
    for (std::size_t i = 0; i + 1 < combos.size(); ++i) {
        IdentityTemplate it{combos[i]};
        for (auto term : combos[i + 1]) {
            term.coeff = -term.coeff;
            it.terms.push_back(std::move(term));
        }
        out.push_back(std::move(it));
    }
    return out;
}

VectorQ compile(const IdentityTemplate& t, const FreeComponent& component) {
    VectorQ v(component.size());
    for (const auto& term : t.terms) {
        std::vector<int> seen(component.arity(), 0);
        SignedMonomial m = compile_expr(term.expr, component.gens(), seen);
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i])
                throw Error(ErrorKind::Parse, "term " + term.expr.to_string() + " does not use x" + std::to_string(i + 1));
        Rational c = term.coeff;
        if (m.sign < 0) c = -c;
        v[component.index(m.monomial)] += c;
    }
    return v;
}

VectorQ act_vector(const FreeComponent& component, const std::vector<int>& perm, std::span<const Rational> v) {
    VectorQ out(component.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        SignedMonomial m = act(component.gens(), perm, component[i]);
        std::size_t j = component.index(m.monomial);
        if (m.sign > 0) out[j] += v[i];
        else out[j] -= v[i];
    }
    return out;
}

Presentation::Presentation(std::string name, GeneratorSet gens, Subspace relations)
    : name_(std::move(name)), gens_(std::move(gens)), ambient_(enumerate(gens_, 3)), relations_(std::move(relations)) {
    if (relations_.ambient_dim() != ambient_.size())
        throw Error(ErrorKind::DimensionMismatch, "relation space of " + name_ + " does not live in F(V)(3)");
}

Presentation Presentation::renamed(std::string name) const {
    Presentation p = *this;
    p.name_ = std::move(name);
    return p;
}

Subspace relation_space(const std::vector<IdentityTemplate>& templates, const GeneratorSet& gens) {
    FreeComponent comp = enumerate(gens, 3);
    std::vector<VectorQ> rows;
    const auto perms = all_permutations(3);
    for (const auto& t : templates) {
        VectorQ v = compile(t, comp);
        for (const auto& p : perms) rows.push_back(act_vector(comp, p, v));
    }
    return Subspace::span(comp.size(), rows);
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line, name;
    bool open = false, closed = false;
    std::vector<GeneratorSymbol> gens;
    std::vector<std::string> rel_lines;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (closed) fail("text after the closing brace");
        if (!open) {
            std::istringstream ls(line);
            std::string kw, brace;
            ls >> kw >> name >> brace;
            if (kw != "operad" || name.empty()) fail("expected 'operad NAME {'");
            if (!name.empty() && name.back() == '{') {
                name.pop_back();
                brace = "{";
            }
            if (brace != "{") fail("expected '{' after the operad name");
            open = true;
            continue;
        }
        if (line == "}") {
            closed = true;
            continue;
        }
        std::string kw = line.substr(0, line.find_first_of(" \t"));
        std::string rest = trim(line.substr(kw.size()));
        if (kw == "gen") {
            std::istringstream ls(rest);
            std::string gname, sym, extra;
            ls >> gname >> sym >> extra;
            if (gname.empty() || sym.empty() || !extra.empty()) fail("expected 'gen NAME sym|antisym|plain'");
            if (!std::isalpha(static_cast<unsigned char>(gname[0]))) fail("generator names start with a letter");
            gens.push_back({gname, parse_symmetry(sym)});
        } else if (kw == "rel") {
            if (rest.empty()) fail("empty relation");
            rel_lines.push_back(rest);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (!open) throw Error(ErrorKind::Parse, "no operad definition found");
    if (!closed) throw Error(ErrorKind::Parse, "missing closing brace");
    if (gens.empty()) throw Error(ErrorKind::Parse, "operad " + name + " has no generators");
    GeneratorSet gs(gens);
    std::vector<IdentityTemplate> templates;
    for (const auto& r : rel_lines) {
        auto ts = parse_identity(r);
        templates.insert(templates.end(), ts.begin(), ts.end());
    }
    return Presentation(name, gs, relation_space(templates, gs));
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::UnknownName, "cannot open presentation file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

std::string format_vector(const FreeComponent& component, std::span<const Rational> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        Rational c = v[i];
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (c.sign() < 0) c = -c;
        if (!c.is_one()) out += c.str() + " ";
        out += component[i].to_string(component.gens());
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> format_relations(const Presentation& p) {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < p.relations().dim(); ++r)
        out.push_back(format_vector(p.ambient(), p.relations().basis().row(r)));
    return out;
}

std::string format_presentation(const Presentation& p) {
    std::string s = "operad " + p.name() + " {\n";
    for (const auto& g : p.gens().generators()) s += "  gen " + g.name + " " + to_string(g.symmetry) + "\n";
    for (const auto& r : format_relations(p)) s += "  rel " + r + "\n";
    return s + "}\n";
}

// ---------------------------------------------------------------------------

namespace {

struct CatalogEntry {
    std::string name;
    std::string source;
};

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> table = {
        {"Lie", R"(operad Lie {
  gen br antisym
  rel br(br(x1,x2),x3) + br(br(x2,x3),x1) + br(br(x3,x1),x2)
})"},
        {"Com", R"(operad Com {
  gen cm sym
  rel cm(cm(x1,x2),x3) = cm(x1,cm(x2,x3))
})"},
        {"ComMag", R"(operad ComMag {
  gen cm sym
})"},
        {"Ass", R"(operad Ass {
  gen mul plain
  rel mul(mul(x1,x2),x3) = mul(x1,mul(x2,x3))
})"},
        {"lLeib", R"(operad lLeib {
  gen mul plain
  rel mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3) + mul(x2,mul(x1,x3))
})"},
        {"rLeib", R"(operad rLeib {
  gen mul plain
  rel mul(mul(x1,x2),x3) = mul(x1,mul(x2,x3)) + mul(mul(x1,x3),x2)
})"},
        {"sLeib", R"(operad sLeib {
  gen mul plain
  rel mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3) + mul(x2,mul(x1,x3))
  rel mul(mul(x1,x2),x3) = mul(x1,mul(x2,x3)) + mul(mul(x1,x3),x2)
})"},
        {"DiAss", R"(operad DiAss {
  gen vdash plain
  gen dashv plain
  rel vdash(vdash(x1,x2),x3) = vdash(x1,vdash(x2,x3))
  rel dashv(dashv(x1,x2),x3) = dashv(x1,dashv(x2,x3))
  rel dashv(vdash(x1,x2),x3) = vdash(x1,dashv(x2,x3))
  rel dashv(x1,vdash(x2,x3)) = dashv(dashv(x1,x2),x3)
  rel vdash(dashv(x1,x2),x3) = vdash(vdash(x1,x2),x3)
})"},
        {"sDiAss", R"(operad sDiAss {
  gen vdash plain
  gen dashv plain
  rel vdash(vdash(x1,x2),x3) = vdash(dashv(x1,x2),x3) = dashv(vdash(x1,x2),x3) = dashv(dashv(x1,x2),x3) = vdash(x1,vdash(x2,x3)) = vdash(x1,dashv(x2,x3)) = dashv(x1,vdash(x2,x3)) = dashv(x1,dashv(x2,x3))
})"},
        {"lPerm", R"(operad lPerm {
  gen mul plain
  rel mul(mul(x1,x2),x3) = mul(x1,mul(x2,x3))
  rel mul(mul(x1,x2),x3) = mul(mul(x2,x1),x3)
})"},
        {"sPerm", R"(operad sPerm {
  gen mul plain
  rel mul(mul(x1,x2),x3) = mul(x1,mul(x2,x3))
  rel mul(mul(x1,x2),x3) = mul(mul(x1,x3),x2) = mul(mul(x2,x1),x3)
})"},
        {"PreLie", R"(operad PreLie {
  gen mul plain
  rel mul(mul(x1,x2),x3) - mul(x1,mul(x2,x3)) = mul(mul(x2,x1),x3) - mul(x2,mul(x1,x3))
})"},
        {"Dend", R"(operad Dend {
  gen succ plain
  gen prec plain
  rel prec(prec(x1,x2),x3) = prec(x1,prec(x2,x3)) + prec(x1,succ(x2,x3))
  rel prec(succ(x1,x2),x3) = succ(x1,prec(x2,x3))
  rel succ(x1,succ(x2,x3)) = succ(succ(x1,x2),x3) + succ(prec(x1,x2),x3)
})"},
        {"lZinb", R"(operad lZinb {
  gen mul plain
  rel mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3) + mul(mul(x2,x1),x3)
})"},
        {"rZinb", R"(operad rZinb {
  gen mul plain
  rel mul(mul(x1,x2),x3) = mul(x1,mul(x2,x3)) + mul(x1,mul(x3,x2))
})"},
        {"LieAdm", R"(operad LieAdm {
  gen mul plain
  # Jacobi identity for [a,b] = mul(a,b) - mul(b,a)
  rel mul(mul(x1,x2),x3) - mul(mul(x2,x1),x3) - mul(x3,mul(x1,x2)) + mul(x3,mul(x2,x1)) + mul(mul(x2,x3),x1) - mul(mul(x3,x2),x1) - mul(x1,mul(x2,x3)) + mul(x1,mul(x3,x2)) + mul(mul(x3,x1),x2) - mul(mul(x1,x3),x2) - mul(x2,mul(x3,x1)) + mul(x2,mul(x1,x3))
})"},
        {"ComAdm", R"(operad ComAdm {
  gen mul plain
  # a<>b = mul(a,b) + mul(b,a) is associative
  rel mul(mul(x1,x2),x3) + mul(mul(x2,x1),x3) + mul(x3,mul(x1,x2)) + mul(x3,mul(x2,x1)) = mul(x1,mul(x2,x3)) + mul(x1,mul(x3,x2)) + mul(mul(x2,x3),x1) + mul(mul(x3,x2),x1)
})"},
        {"AssAdm", R"(operad AssAdm {
  gen succ plain
  gen prec plain
  # a*b = succ(a,b) + prec(a,b) is associative
  rel succ(succ(x1,x2),x3) + succ(prec(x1,x2),x3) + prec(succ(x1,x2),x3) + prec(prec(x1,x2),x3) = succ(x1,succ(x2,x3)) + succ(x1,prec(x2,x3)) + prec(x1,succ(x2,x3)) + prec(x1,prec(x2,x3))
})"},
    };
    return table;
}

const std::vector<CatalogEntry>& variant_entries() {
    static const std::vector<CatalogEntry> table = {
        {"sLeib.bd", R"(operad sLeib.bd {
  gen br antisym
  gen di sym
  rel br(br(x1,x2),x3) + br(br(x2,x3),x1) + br(br(x3,x1),x2)
  rel di(di(x1,x2),x3)
  rel di(br(x1,x2),x3)
  rel br(di(x1,x2),x3)
})"},
        {"sDiAss.sw", R"(operad sDiAss.sw {
  gen star plain
  gen wedge plain
  rel star(star(x1,x2),x3) = star(x1,star(x2,x3))
  rel wedge(wedge(x1,x2),x3)
  rel wedge(x1,wedge(x2,x3))
  rel star(x1,wedge(x2,x3))
  rel star(wedge(x1,x2),x3)
  rel wedge(star(x1,x2),x3)
  rel wedge(x1,star(x2,x3))
})"},
        {"LieAdm.bd", R"(operad LieAdm.bd {
  gen br antisym
  gen di sym
  rel br(br(x1,x2),x3) + br(br(x2,x3),x1) + br(br(x3,x1),x2)
})"},
        {"ComAdm.bd", R"(operad ComAdm.bd {
  gen br antisym
  gen di sym
  rel di(di(x1,x2),x3) = di(x1,di(x2,x3))
})"},
        {"sPerm.bd", R"(operad sPerm.bd {
  gen br antisym
  gen di sym
  rel di(di(x1,x2),x3) = di(x1,di(x2,x3))
  rel br(br(x1,x2),x3)
  rel br(di(x1,x2),x3)
  rel di(br(x1,x2),x3)
})"},
    };
    return table;
}

const std::map<std::string, std::string>& aliases() {
    static const std::map<std::string, std::string> table = {
        {"Zinb", "lZinb"}, {"Leib", "lLeib"}, {"Perm", "lPerm"}};
    return table;
}

const CatalogEntry* find_entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return &e;
    for (const auto& e : variant_entries())
        if (e.name == name) return &e;
    return nullptr;
}

std::string available_list() {
    std::string s;
    for (const auto& e : entries()) s += (s.empty() ? "" : ", ") + e.name;
    for (const auto& [a, t] : aliases()) s += ", " + a;
    for (const auto& e : variant_entries()) s += ", " + e.name;
    return s;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : entries()) v.push_back(e.name);
        return v;
    }();
    return names;
}

const std::vector<std::string>& catalog_variants() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : variant_entries()) v.push_back(e.name);
        return v;
    }();
    return names;
}

std::string canonical_name(const std::string& name) {
    auto it = aliases().find(name);
    return it == aliases().end() ? name : it->second;
}

bool in_catalog(const std::string& name) { return find_entry(canonical_name(name)) != nullptr; }

const std::string& catalog_source(const std::string& name) {
    const CatalogEntry* e = find_entry(canonical_name(name));
    if (!e) throw Error(ErrorKind::UnknownName, "unknown operad '" + name + "'; available: " + available_list());
    return e->source;
}

Presentation catalog(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, Presentation> cache;
    const std::string canon = canonical_name(name);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(canon);
        if (it != cache.end()) return it->second;
    }
    Presentation p = parse_presentation(catalog_source(canon));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(canon, p);
    return p;
}

Presentation resolve_presentation(const std::string& name_or_path) {
    if (in_catalog(name_or_path)) return catalog(name_or_path);
    if (std::filesystem::exists(name_or_path)) return load_presentation(name_or_path);
    throw Error(ErrorKind::UnknownName,
                "'" + name_or_path + "' is neither a catalog entry nor a file; available: " + available_list());
}

// ---------------------------------------------------------------------------

namespace {

VectorQ transpose_image(const GeneratorSet& gens, const VectorQ& v) {
    VectorQ out(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t].is_zero()) continue;
        SignedSymbol ts = gens.transpose(t);
        if (ts.sign > 0) out[ts.symbol] += v[t];
        else out[ts.symbol] -= v[t];
    }
    return out;
}

VectorQ negated(VectorQ v) {
    for (auto& q : v) q = -q;
    return v;
}

}  // namespace

GenMap::GenMap(GeneratorSet source, GeneratorSet target, std::vector<VectorQ> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.generator_count())
        throw Error(ErrorKind::DimensionMismatch, "generator map needs one image per source generator");
    for (std::size_t g = 0; g < images_.size(); ++g) {
        if (images_[g].size() != target_.degree())
            throw Error(ErrorKind::DimensionMismatch, "generator image has the wrong length");
        const auto& gen = source_.generators()[g];
        if (gen.symmetry == Symmetry::Plain) continue;
        VectorQ t = transpose_image(target_, images_[g]);
        VectorQ expected = gen.symmetry == Symmetry::Sym ? images_[g] : negated(images_[g]);
        if (t != expected)
            throw Error(ErrorKind::Domain, "image of " + std::string(operadkit::to_string(gen.symmetry)) + " generator '" +
                                               gen.name + "' does not have the same symmetry");
    }
}

VectorQ GenMap::symbol_image(std::size_t symbol) const {
    const VectorQ& v = images_[source_.generator_of(symbol)];
    return source_.is_transposed(symbol) ? transpose_image(target_, v) : v;
}

MatrixQ GenMap::weight_one_matrix() const {
    MatrixQ m(target_.degree(), source_.degree());
    for (std::size_t s = 0; s < source_.degree(); ++s) {
        VectorQ v = symbol_image(s);
        for (std::size_t t = 0; t < v.size(); ++t) m(t, s) = v[t];
    }
    return m;
}

SparseVector GenMap::apply(const TreeMonomial& m, const FreeComponent& target_component) const {
    std::vector<TreeNode> nodes = m.nodes();
    std::vector<std::size_t> vertices;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> options;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].symbol < 0) continue;
        vertices.push_back(i);
        VectorQ img = symbol_image(static_cast<std::size_t>(nodes[i].symbol));
        std::vector<std::pair<std::size_t, Rational>> opts;
        for (std::size_t t = 0; t < img.size(); ++t)
            if (!img[t].is_zero()) opts.emplace_back(t, img[t]);
        if (opts.empty()) return {};
        options.push_back(std::move(opts));
    }
    std::map<std::size_t, Rational> acc;
    std::vector<std::size_t> choice(vertices.size(), 0);
    while (true) {
        Rational c(1);
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            nodes[vertices[v]].symbol = static_cast<int>(options[v][choice[v]].first);
            c *= options[v][choice[v]].second;
        }
        SignedMonomial sm = canonicalize(target_, nodes);
        if (sm.sign < 0) c = -c;
        acc[target_component.index(sm.monomial)] += c;
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == options[pos].size()) choice[pos++] = 0;
        if (pos == choice.size()) break;
    }
    SparseVector out;
    for (auto& [i, q] : acc)
        if (!q.is_zero()) out.emplace_back(i, q);
    return out;
}

VectorQ GenMap::apply(const FreeComponent& source_component, std::span<const Rational> v,
                      const FreeComponent& target_component) const {
    VectorQ out(target_component.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (const auto& [j, q] : apply(source_component[i], target_component)) out[j] += v[i] * q;
    }
    return out;
}

std::string GenMap::to_string() const {
    FreeComponent two = enumerate(target_, 2);
    std::string s;
    for (std::size_t g = 0; g < images_.size(); ++g) {
        VectorQ coords(two.size());
        for (std::size_t i = 0; i < two.size(); ++i) {
            int sym = -static_cast<signed char>(two[i].code()[0]) - 1;
            coords[i] = images_[g][static_cast<std::size_t>(sym)];
        }
        s += "map " + source_.generators()[g].name + " = " + format_vector(two, coords) + "\n";
    }
    return s;
}

GenMap parse_genmap(const std::string& text, const GeneratorSet& source, const GeneratorSet& target) {
    FreeComponent two = enumerate(target, 2);
    std::vector<std::optional<VectorQ>> images(source.generator_count());
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto fail = [&](const std::string& what) {
            throw Error(ErrorKind::Parse, "map line " + std::to_string(lineno) + ": " + what);
        };
        if (line.rfind("map", 0) != 0) fail("expected 'map <gen> = <expression>'");
        std::string rest = trim(line.substr(3));
        auto eq = rest.find('=');
        if (eq == std::string::npos) fail("missing '='");
        std::string gname = trim(rest.substr(0, eq));
        int g = source.find(gname);
        if (g < 0) throw Error(ErrorKind::UnknownName, "unknown source generator '" + gname + "'");
        if (images[g]) fail("generator '" + gname + "' mapped twice");
        const std::string image = trim(rest.substr(eq + 1));
        if (image == "0") {
            images[g] = VectorQ(target.degree());
            continue;
        }
        auto ts = parse_identity(image);
        if (ts.size() != 1) fail("one expression per generator");
        VectorQ coords = compile(ts[0], two);
        VectorQ img(target.degree());
        for (std::size_t i = 0; i < two.size(); ++i) {
            int sym = -static_cast<signed char>(two[i].code()[0]) - 1;
            img[static_cast<std::size_t>(sym)] += coords[i];
        }
        images[g] = std::move(img);
    }
    std::vector<VectorQ> out;
    for (std::size_t g = 0; g < images.size(); ++g) {
        if (!images[g])
            throw Error(ErrorKind::Parse, "no image given for generator '" + source.generators()[g].name + "'");
        out.push_back(*images[g]);
    }
    return GenMap(source, target, std::move(out));
}

GenMap load_genmap(const std::string& path, const GeneratorSet& source, const GeneratorSet& target) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::UnknownName, "cannot open map file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_genmap(ss.str(), source, target);
}

GenMap identity_map(const GeneratorSet& gens) {
    std::vector<VectorQ> images;
    for (std::size_t g = 0; g < gens.generator_count(); ++g) {
        VectorQ v(gens.degree());
        v[gens.symbol(g)] = 1;
        images.push_back(std::move(v));
    }
    return GenMap(gens, gens, std::move(images));
}

GenMap compose(const GenMap& first, const GenMap& second) {
    if (!(first.target() == second.source()))
        throw Error(ErrorKind::DimensionMismatch, "maps are not composable");
    std::vector<VectorQ> images;
    for (const auto& v : first.images()) {
        VectorQ out(second.target().degree());
        for (std::size_t t = 0; t < v.size(); ++t) {
            if (v[t].is_zero()) continue;
            VectorQ w = second.symbol_image(t);
            for (std::size_t u = 0; u < w.size(); ++u) out[u] += v[t] * w[u];
        }
        images.push_back(std::move(out));
    }
    return GenMap(first.source(), second.target(), std::move(images));
}

bool operator==(const GenMap& a, const GenMap& b) {
    return a.source() == b.source() && a.target() == b.target() && a.images() == b.images();
}

Presentation change_generators(const Presentation& p, const GenMap& map, std::string name) {
    if (!(map.source() == p.gens()))
        throw Error(ErrorKind::DimensionMismatch, "map source differs from the generators of " + p.name());
    MatrixQ w = map.weight_one_matrix();
    if (w.rows() != w.cols() || rref(w).rank != w.cols())
        throw Error(ErrorKind::NotInvertible, "change of generators is not invertible on the weight-one space");
    FreeComponent target = enumerate(map.target(), 3);
    std::vector<VectorQ> rows;
    for (std::size_t r = 0; r < p.relations().dim(); ++r)
        rows.push_back(map.apply(p.ambient(), p.relations().basis().row(r), target));
    return Presentation(name.empty() ? p.name() : std::move(name), map.target(),
                        Subspace::span(target.size(), rows));
}

MorphismResult morphism_check(const Presentation& src, const Presentation& tgt, const GenMap& f) {
    if (!(f.source() == src.gens()) || !(f.target() == tgt.gens()))
        throw Error(ErrorKind::DimensionMismatch, "map does not go from " + src.name() + " to " + tgt.name());
    MorphismResult res;
    for (std::size_t r = 0; r < src.relations().dim(); ++r) {
        auto row = src.relations().basis().row(r);
        VectorQ img = f.apply(src.ambient(), row, tgt.ambient());
        if (!tgt.relations().contains(img)) {
            res.ok = false;
            res.witness.assign(row.begin(), row.end());
            res.message = "relation " + format_vector(src.ambient(), row) + " maps to " +
                          format_vector(tgt.ambient(), img) + ", which is not a relation of " + tgt.name();
            return res;
        }
    }
    return res;
}

namespace {

std::optional<GenMap> align_at(const Presentation& a, const Presentation& b, int level) {
    const auto& ga = a.gens().generators();
    const auto& gb = b.gens().generators();
    const std::size_t k = ga.size();
    std::vector<int> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
    const std::uint32_t sign_bits = level >= 2 ? 1u : 0u;
    const std::uint32_t mirror_bits = level >= 3 ? 1u : 0u;
    do {
        bool types_match = true;
        for (std::size_t i = 0; i < k; ++i)
            if (ga[i].symmetry != gb[perm[i]].symmetry) types_match = false;
        if (!types_match) continue;
        // bit 2i: negate generator i; bit 2i+1: use the transpose (plain only)
        for (std::uint32_t flags = 0; flags < (1u << (2 * k)); ++flags) {
            bool valid = true;
            std::vector<VectorQ> images;
            for (std::size_t i = 0; i < k && valid; ++i) {
                bool neg = (flags >> (2 * i)) & 1u;
                bool tr = (flags >> (2 * i + 1)) & 1u;
                if ((neg && !sign_bits) || (tr && !mirror_bits)) valid = false;
                if (tr && gb[perm[i]].symmetry != Symmetry::Plain) valid = false;
                if (!valid) break;
                VectorQ v(b.gens().degree());
                v[b.gens().symbol(static_cast<std::size_t>(perm[i]), tr)] = neg ? -1 : 1;
                images.push_back(std::move(v));
            }
            if (!valid) continue;
            GenMap m(a.gens(), b.gens(), std::move(images));
            if (change_generators(a, m).relations() == b.relations()) return m;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace

std::optional<GenMap> find_alignment(const Presentation& a, const Presentation& b, Alignment max_level) {
    if (a.gens().generator_count() != b.gens().generator_count() || a.ambient().size() != b.ambient().size() ||
        a.relations().dim() != b.relations().dim())
        return std::nullopt;
    for (int level = 1; level <= static_cast<int>(max_level); ++level)
        if (auto m = align_at(a, b, level)) return m;
    return std::nullopt;
}

bool equivalent(const Presentation& a, const Presentation& b, Alignment max_level) {
    return find_alignment(a, b, max_level).has_value();
}

// ---------------------------------------------------------------------------

const std::vector<std::vector<std::string>>& diagram_grid() {
    static const std::vector<std::vector<std::string>> grid = {
        {"lLeib", "DiAss", "lPerm"},
        {"sLeib", "sDiAss", "sPerm"},
        {"Lie", "Ass", "Com"},
        {"LieAdm", "AssAdm", "ComAdm"},
        {"PreLie", "Dend", "lZinb"},
    };
    return grid;
}

std::vector<DiagramArrow> diagram_arrows() {
    const std::string leib_to_di = "map mul = vdash(x1,x2) - dashv(x2,x1)";
    const std::string di_to_perm = "map vdash = mul(x1,x2)\nmap dashv = mul(x2,x1)";
    const std::string commutator_adm = "map mul = succ(x1,x2) - prec(x2,x1)";
    const std::string adm_to_zinb = "map succ = mul(x1,x2)\nmap prec = mul(x2,x1)";
    return {
        {"lLeib", "DiAss", leib_to_di, ""},
        {"DiAss", "lPerm", di_to_perm, ""},
        {"sLeib", "sDiAss", leib_to_di, ""},
        {"sDiAss", "sPerm", di_to_perm, ""},
        {"Lie", "Ass", "map br = mul(x1,x2) - mul(x2,x1)", ""},
        {"Ass", "Com", "map mul = cm(x1,x2)", ""},
        {"LieAdm", "AssAdm", commutator_adm, ""},
        {"AssAdm", "ComAdm", adm_to_zinb,
         "the displayed rule a>b = b<a = a.a is read as a.b; only a.b gives a well-typed map"},
        {"PreLie", "Dend", commutator_adm, ""},
        {"Dend", "lZinb", adm_to_zinb, ""},
        {"lLeib", "sLeib", "map mul = mul(x1,x2)", ""},
        {"sLeib", "Lie", "map mul = br(x1,x2)", ""},
        {"Lie", "LieAdm", "map br = mul(x1,x2) - mul(x2,x1)", ""},
        {"LieAdm", "PreLie", "map mul = mul(x1,x2)", ""},
        {"DiAss", "sDiAss", "map vdash = vdash(x1,x2)\nmap dashv = dashv(x1,x2)", ""},
        {"sDiAss", "Ass", "map vdash = mul(x1,x2)\nmap dashv = mul(x1,x2)", ""},
        {"Ass", "AssAdm", "map mul = succ(x1,x2) + prec(x1,x2)", ""},
        {"AssAdm", "Dend", "map succ = succ(x1,x2)\nmap prec = prec(x1,x2)", ""},
        {"lPerm", "sPerm", "map mul = mul(x1,x2)", ""},
        {"sPerm", "Com", "map mul = cm(x1,x2)", ""},
        {"Com", "ComAdm", "map cm = mul(x1,x2) + mul(x2,x1)", ""},
        {"ComAdm", "lZinb", "map mul = mul(x1,x2)", ""},
    };
}

GenMap arrow_map(const DiagramArrow& arrow) {
    return parse_genmap(arrow.map_text, catalog(arrow.source).gens(), catalog(arrow.target).gens());
}

bool DiagramReport::ok() const {
    return std::all_of(arrows.begin(), arrows.end(), [](const ArrowReport& a) { return a.result.ok; }) &&
           std::all_of(squares.begin(), squares.end(), [](const SquareReport& s) { return s.commutes; });
}

DiagramReport check_diagram() {
    DiagramReport rep;
    auto arrows = diagram_arrows();
    for (const auto& a : arrows)
        rep.arrows.push_back({a, morphism_check(catalog(a.source), catalog(a.target), arrow_map(a))});
    auto find = [&](const std::string& s, const std::string& t) -> GenMap {
        for (const auto& a : arrows)
            if (a.source == s && a.target == t) return arrow_map(a);
        throw Error(ErrorKind::UnknownName, "no arrow " + s + " -> " + t);
    };
    const auto& grid = diagram_grid();
    for (std::size_t r = 0; r + 1 < grid.size(); ++r)
        for (std::size_t c = 0; c + 1 < grid[r].size(); ++c) {
            const std::string &tl = grid[r][c], &tr = grid[r][c + 1], &bl = grid[r + 1][c], &br = grid[r + 1][c + 1];
            SquareReport sq;
            sq.right_then_down = {tl, tr, br};
            sq.down_then_right = {tl, bl, br};
            sq.commutes = compose(find(tl, tr), find(tr, br)) == compose(find(tl, bl), find(bl, br));
            rep.squares.push_back(std::move(sq));
        }
    return rep;
}

}  // namespace operadkit
