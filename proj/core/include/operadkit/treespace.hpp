#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace operadkit {

enum class Symmetry { Sym, Antisym, Plain };

const char* to_string(Symmetry s);
Symmetry parse_symmetry(const std::string& text);

/// A binary generating operation of a presentation.
struct GeneratorSymbol {
    std::string name;
    Symmetry symmetry = Symmetry::Plain;

    friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// Result of moving a basis symbol across the transposition (12).
struct SignedSymbol {
    int sign;
    std::size_t symbol;
};

/// The weight-one space V spanned by the generators, as an S_2-module.
///
/// Sym and antisym generators contribute one basis symbol each; a plain
/// generator g contributes two, g and its transpose g' = g.(12).
class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<GeneratorSymbol> gens);

    const std::vector<GeneratorSymbol>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }

    /// Number of weight-one basis symbols (d).
    std::size_t degree() const { return symbol_gen_.size(); }

    std::size_t generator_of(std::size_t symbol) const { return symbol_gen_[symbol]; }
    bool is_transposed(std::size_t symbol) const { return symbol_transposed_[symbol]; }
    std::size_t symbol(std::size_t gen, bool transposed = false) const;

    /// Action of (12): s(b, a) = sign * t(a, b).
    SignedSymbol transpose(std::size_t symbol) const;

    /// Name of the symbol; transposes are printed with a trailing quote.
    std::string symbol_name(std::size_t symbol) const;

    /// Index of a generator by name, or -1.
    int find(const std::string& name) const;

    /// true when every generator is plain.
    bool all_plain() const;

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) { return a.gens_ == b.gens_; }

private:
    std::vector<GeneratorSymbol> gens_;
    std::vector<std::size_t> symbol_gen_;
    std::vector<bool> symbol_transposed_;
    std::vector<std::size_t> first_symbol_;
};

/// One vertex or leaf of a parsed tree monomial (preorder; root at 0).
struct TreeNode {
    int symbol = -1;  // -1 for leaves
    int leaf = 0;     // label 1..n for leaves
    int left = -1;
    int right = -1;
};

class TreeMonomial;

struct SignedMonomial;

/// Leaf-labelled binary tree with generator-labelled vertices.
///
/// Stored as a preorder code: a leaf is its label (>0), a vertex is
/// -(symbol + 1). Canonical form puts, at every vertex, the child whose
/// minimal leaf label is smaller on the left; the symbol absorbs the swap
/// (sign for antisym, transpose for plain).
class TreeMonomial {
public:
    TreeMonomial() = default;

    static TreeMonomial leaf(int label);
    /// Builds symbol(left, right) and canonicalizes it.
    static SignedMonomial join(const GeneratorSet& gens, std::size_t symbol, const TreeMonomial& left,
                               const TreeMonomial& right);

    const std::string& code() const { return code_; }
    std::size_t arity() const;
    bool is_leaf() const { return code_.size() == 1; }
    std::vector<TreeNode> nodes() const;
    int min_leaf() const;

    /// Leaf labels in planar order, reading g' vertices right-to-left.
    std::vector<int> planar_reading(const GeneratorSet& gens) const;
    /// Number of vertices carrying each generator.
    std::vector<int> content(const GeneratorSet& gens) const;

    std::string to_string(const GeneratorSet& gens) const;

    friend bool operator==(const TreeMonomial& a, const TreeMonomial& b) { return a.code_ == b.code_; }
    friend bool operator<(const TreeMonomial& a, const TreeMonomial& b) { return a.code_ < b.code_; }

    static TreeMonomial from_code(std::string code) {
        TreeMonomial m;
        m.code_ = std::move(code);
        return m;
    }

private:
    std::string code_;
};

struct SignedMonomial {
    int sign = 1;
    TreeMonomial monomial;
};

struct TreeMonomialHash {
    std::size_t operator()(const TreeMonomial& m) const { return std::hash<std::string>()(m.code()); }
};

/// Re-canonicalize an arbitrary (possibly non-canonical) tree.
SignedMonomial canonicalize(const GeneratorSet& gens, const std::vector<TreeNode>& nodes);

/// Applies a leaf relabelling (old label -> map[old - 1]) and canonicalizes.
SignedMonomial relabel(const GeneratorSet& gens, const TreeMonomial& m, const std::vector<int>& map);

/// The canonical basis of F(V)(n).
class FreeComponent {
public:
    FreeComponent() = default;
    FreeComponent(GeneratorSet gens, std::size_t arity, std::vector<TreeMonomial> basis);

    const GeneratorSet& gens() const { return gens_; }
    std::size_t arity() const { return arity_; }
    std::size_t size() const { return basis_.size(); }
    const std::vector<TreeMonomial>& basis() const { return basis_; }
    const TreeMonomial& operator[](std::size_t i) const { return basis_[i]; }

    /// Position of a canonical monomial; throws if it is not in the basis.
    std::size_t index(const TreeMonomial& m) const;
    bool contains(const TreeMonomial& m) const { return index_.count(m) != 0; }

private:
    GeneratorSet gens_;
    std::size_t arity_ = 0;
    std::vector<TreeMonomial> basis_;
    std::unordered_map<TreeMonomial, std::size_t, TreeMonomialHash> index_;
};

/// Default maximum arity for enumeration.
inline constexpr std::size_t kDefaultMaxArity = 6;

/// (2n-3)!! * d^(n-1).
std::uint64_t free_dimension(std::size_t degree, std::size_t arity);

FreeComponent enumerate(const GeneratorSet& gens, std::size_t arity, std::size_t max_arity = kDefaultMaxArity);

/// sigma.m where perm[i-1] = sigma(i): relabel leaves, then canonicalize.
SignedMonomial act(const GeneratorSet& gens, const std::vector<int>& perm, const TreeMonomial& m);

/// Partial composition outer o_slot inner with order-preserving relabelling.
SignedMonomial graft(const GeneratorSet& gens, const TreeMonomial& outer, std::size_t slot,
                     const TreeMonomial& inner);

/// All planar binary trees with `arity` leaves labelled 1..n left to right,
/// with every vertex decorated by every weight-one symbol. Used for the
/// surjectivity criterion; canonicalized with signs.
std::vector<std::vector<SignedMonomial>> planar_decorations(const GeneratorSet& gens, std::size_t arity);

// Permutation helpers (one-line notation, values 1..n).
std::vector<std::vector<int>> all_permutations(std::size_t n);
std::vector<int> compose(const std::vector<int>& sigma, const std::vector<int>& tau);  // sigma o tau
int permutation_sign(const std::vector<int>& perm);

}  // namespace operadkit
