#pragma once

#include <optional>
#include <string>
#include <vector>

#include "operadkit/exactla.hpp"
#include "operadkit/treespace.hpp"

namespace operadkit {

/// A nested application of generator names to variables x1, x2, ...
struct Expr {
    int var = 0;     // > 0 for a variable
    std::string op;  // generator name; a trailing quote selects the transpose
    std::vector<Expr> args;

    std::string to_string() const;
};

struct Term {
    Rational coeff;
    Expr expr;
};

/// A linear combination of expressions, read as "= 0".
struct IdentityTemplate {
    std::vector<Term> terms;
};

/// Parses a linear combination. An equality chain a = b = c yields the
/// templates a - b and b - c.
std::vector<IdentityTemplate> parse_identity(const std::string& text);

/// Expands a template into coordinates over `component`. Every variable
/// x1..xn (n = arity) must occur exactly once in each term.
VectorQ compile(const IdentityTemplate& t, const FreeComponent& component);

/// sigma acting on a vector of F(V)(n).
VectorQ act_vector(const FreeComponent& component, const std::vector<int>& perm, std::span<const Rational> v);

/// Quadratic presentation: generators and an S_3-stable subspace of F(V)(3).
class Presentation {
public:
    Presentation() = default;
    Presentation(std::string name, GeneratorSet gens, Subspace relations);

    const std::string& name() const { return name_; }
    const GeneratorSet& gens() const { return gens_; }
    const Subspace& relations() const { return relations_; }
    const FreeComponent& ambient() const { return ambient_; }

    Presentation renamed(std::string name) const;

private:
    std::string name_;
    GeneratorSet gens_;
    FreeComponent ambient_;
    Subspace relations_;
};

/// S_3-stable span of the compiled templates and all their permutations.
Subspace relation_space(const std::vector<IdentityTemplate>& templates, const GeneratorSet& gens);

/// Reads the `operad NAME { gen ...; rel ... }` format.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);

/// Presentation text in the same format; relations are the echelon basis.
std::string format_presentation(const Presentation& p);

/// Relations of the presentation as readable linear combinations.
std::vector<std::string> format_relations(const Presentation& p);
std::string format_vector(const FreeComponent& component, std::span<const Rational> v);

// ---------------------------------------------------------------------------
// Catalog

/// Canonical catalog names, in display order.
const std::vector<std::string>& catalog_names();

/// Alternative presentations in other generator bases (e.g. "sLeib.bd").
const std::vector<std::string>& catalog_variants();

/// Resolves aliases (Zinb, Leib, Perm); returns the name unchanged otherwise.
std::string canonical_name(const std::string& name);

bool in_catalog(const std::string& name);

/// Throws ErrorKind::UnknownName listing the available entries.
Presentation catalog(const std::string& name);

/// Source text of a catalog entry.
const std::string& catalog_source(const std::string& name);

/// Catalog name, or a presentation file path.
Presentation resolve_presentation(const std::string& name_or_path);

// ---------------------------------------------------------------------------
// Maps on generators

/// A linear map V_source -> V_target given on generators. images[g] holds
/// coordinates over the target's weight-one symbols.
class GenMap {
public:
    GenMap() = default;
    GenMap(GeneratorSet source, GeneratorSet target, std::vector<VectorQ> images);

    const GeneratorSet& source() const { return source_; }
    const GeneratorSet& target() const { return target_; }
    const std::vector<VectorQ>& images() const { return images_; }

    /// Image of any source symbol, transposes included.
    VectorQ symbol_image(std::size_t symbol) const;

    /// The d_target x d_source matrix on weight-one symbols.
    MatrixQ weight_one_matrix() const;

    /// Induced map on a tree monomial, as coordinates over `target_component`.
    SparseVector apply(const TreeMonomial& m, const FreeComponent& target_component) const;
    /// Induced map F(V_source)(n) -> F(V_target)(n) applied to a vector.
    VectorQ apply(const FreeComponent& source_component, std::span<const Rational> v,
                  const FreeComponent& target_component) const;

    std::string to_string() const;

private:
    GeneratorSet source_;
    GeneratorSet target_;
    std::vector<VectorQ> images_;
};

/// Parses lines `map <gen> = <combination in x1, x2>`.
GenMap parse_genmap(const std::string& text, const GeneratorSet& source, const GeneratorSet& target);
GenMap load_genmap(const std::string& path, const GeneratorSet& source, const GeneratorSet& target);

GenMap identity_map(const GeneratorSet& gens);

/// second o first.
GenMap compose(const GenMap& first, const GenMap& second);

bool operator==(const GenMap& a, const GenMap& b);

/// Transports the relations along an invertible map of weight-one spaces.
Presentation change_generators(const Presentation& p, const GenMap& map, std::string name = {});

struct MorphismResult {
    bool ok = true;
    VectorQ witness;  // a source relation whose image leaves the target relations
    std::string message;
};

MorphismResult morphism_check(const Presentation& src, const Presentation& tgt, const GenMap& f);

/// How far find_alignment may go when matching generators.
enum class Alignment {
    Rename = 1,  // bijection between generators of the same symmetry
    Signs = 2,   // ... and generators may change sign
    Mirror = 3,  // ... and plain generators may be replaced by their transposes
};

/// Relation-space equality up to a relabelling of the generators. Tries the
/// levels in order and returns the first aligning map found.
std::optional<GenMap> find_alignment(const Presentation& a, const Presentation& b,
                                     Alignment max_level = Alignment::Mirror);
bool equivalent(const Presentation& a, const Presentation& b, Alignment max_level = Alignment::Mirror);

// ---------------------------------------------------------------------------
// The diagram of operad morphisms

struct DiagramArrow {
    std::string source;
    std::string target;
    std::string map_text;  // in the `map` format
    std::string note;
};

/// Grid rows, top to bottom, three entries each.
const std::vector<std::vector<std::string>>& diagram_grid();
std::vector<DiagramArrow> diagram_arrows();
GenMap arrow_map(const DiagramArrow& arrow);

struct ArrowReport {
    DiagramArrow arrow;
    MorphismResult result;
};

struct SquareReport {
    std::vector<std::string> right_then_down;
    std::vector<std::string> down_then_right;
    bool commutes = false;
};

struct DiagramReport {
    std::vector<ArrowReport> arrows;
    std::vector<SquareReport> squares;
    bool ok() const;
};

DiagramReport check_diagram();

}  // namespace operadkit
