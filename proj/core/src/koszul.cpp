#include "operadkit/koszul.hpp"

#include "operadkit/error.hpp"

namespace operadkit {

GeneratorSet dual_generators(const GeneratorSet& gens) {
    std::vector<GeneratorSymbol> out;
    for (auto g : gens.generators()) {
        if (g.symmetry == Symmetry::Sym) g.symmetry = Symmetry::Antisym;
        else if (g.symmetry == Symmetry::Antisym) g.symmetry = Symmetry::Sym;
        out.push_back(g);
    }
    return GeneratorSet(out);
}

namespace {

int decode(char c) { return static_cast<signed char>(c); }

int symbol_pairing(const GeneratorSet& gens, int code) {
    return gens.is_transposed(static_cast<std::size_t>(-code - 1)) ? -1 : 1;
}

}  // namespace

MatrixQ pairing(const GeneratorSet& gens) {
    GeneratorSet dual = dual_generators(gens);
    FreeComponent primal = enumerate(gens, 3);
    FreeComponent dualc = enumerate(dual, 3);
    MatrixQ f(dualc.size(), primal.size());
    for (std::size_t i = 0; i < dualc.size(); ++i) {
        const std::string& code = dualc[i].code();
        // the symbol numbering of V and its dual agree, so the codes match
        std::size_t j = primal.index(TreeMonomial::from_code(code));
        int shape;
        if (decode(code[1]) < 0) shape = decode(code[3]) == 2 ? 1 : -1;
        else shape = -1;
        int inner = decode(code[1]) < 0 ? decode(code[1]) : decode(code[2]);
        f(i, j) = shape * symbol_pairing(gens, decode(code[0])) * symbol_pairing(gens, inner);
    }
    return f;
}

Presentation dual_presentation(const Presentation& p) {
    GeneratorSet dual = dual_generators(p.gens());
    Subspace perp = orth_complement(p.relations(), pairing(p.gens()), true);
    return Presentation(p.name() + "!", dual, perp);
}

std::string catalog_match(const Presentation& p) {
    for (Alignment level : {Alignment::Rename, Alignment::Signs, Alignment::Mirror})
        for (const auto& name : catalog_names())
            if (find_alignment(p, catalog(name), level)) return name;
    return {};
}

DualResult dual(const Presentation& p) {
    Presentation d = dual_presentation(p);
    std::string match = catalog_match(d);
    if (!match.empty()) d = d.renamed(match);
    return {d, match};
}

std::vector<std::pair<std::string, std::string>> duality_pairs() {
    return {
        {"Lie", "Com"},      {"Ass", "Ass"},        {"lLeib", "lZinb"},   {"rLeib", "rZinb"},
        {"DiAss", "Dend"},   {"lPerm", "PreLie"},   {"sLeib", "ComAdm"},  {"sDiAss", "AssAdm"},
        {"sPerm", "LieAdm"},
    };
}

std::vector<DualityCheck> duality_table() {
    std::vector<DualityCheck> out;
    for (const auto& [a, b] : duality_pairs()) {
        DualityCheck c{a, b, false, {}};
        Presentation d = dual_presentation(catalog(a));
        auto align = find_alignment(d, catalog(b), Alignment::Rename);
        c.ok = align.has_value();
        if (c.ok) {
            c.detail = "aligned by\n" + align->to_string();
        } else {
            c.detail = "dual relations:\n" + format_presentation(d) + "expected:\n" + format_presentation(catalog(b));
        }
        out.push_back(std::move(c));
    }
    for (const auto& name : catalog_names()) {
        Presentation p = catalog(name);
        Presentation dd = dual_presentation(dual_presentation(p));
        DualityCheck c{name, name, false, {}};
        c.ok = dd.gens() == p.gens() && dd.relations() == p.relations();
        c.detail = c.ok ? "dual of the dual equals the original" : "dual of the dual differs:\n" + format_presentation(dd);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace operadkit
