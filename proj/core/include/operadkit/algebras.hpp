#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "operadkit/exactla.hpp"
#include "operadkit/expansion.hpp"
#include "operadkit/presentations.hpp"

namespace operadkit {

/// A finite-dimensional algebra given by structure constants: for every
/// named operation, the product of basis elements i and j as a sparse vector.
///
/// Graded tables carry a degree per basis element. A truncated table has
/// dropped every product of degree above `truncation()`.
class AlgebraTable {
public:
    AlgebraTable() = default;
    explicit AlgebraTable(std::vector<std::string> basis, std::vector<int> degrees = {}, int truncation = 0);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<int>& degrees() const { return degrees_; }
    bool graded() const { return !degrees_.empty(); }
    int truncation() const { return truncation_; }
    bool truncated() const { return truncation_ > 0; }

    /// Generator content of each basis element (free algebras only; empty otherwise).
    const std::vector<std::vector<int>>& multidegrees() const { return multidegrees_; }
    void set_multidegrees(std::vector<std::vector<int>> m);

    /// Basis indices of one homogeneous component.
    std::vector<std::size_t> component(int degree) const;

    std::vector<std::string> op_names() const;
    bool has_op(const std::string& name) const { return ops_.count(name) != 0; }
    /// Adds a zero operation (or clears an existing one).
    void add_op(const std::string& name);
    void remove_op(const std::string& name);

    const SparseVector& product(const std::string& op, std::size_t i, std::size_t j) const;
    void set_product(const std::string& op, std::size_t i, std::size_t j, SparseVector value);

    SparseVector multiply(const std::string& op, const SparseVector& a, const SparseVector& b) const;
    VectorQ multiply(const std::string& op, const VectorQ& a, const VectorQ& b) const;

    SparseVector unit(std::size_t i) const { return {{i, Rational(1)}}; }

    friend bool operator==(const AlgebraTable& a, const AlgebraTable& b);

private:
    const std::vector<SparseVector>& op(const std::string& name) const;

    std::vector<std::string> basis_;
    std::vector<int> degrees_;
    int truncation_ = 0;
    std::vector<std::vector<int>> multidegrees_;
    std::map<std::string, std::vector<SparseVector>> ops_;  // row-major dim x dim
};

/// `{"dim": n, "basis": [...], "ops": {"mul": [[[c as "p/q"]]]}}` with
/// ops[op][i][j][k] the coefficient of basis k in e_i op e_j. Optional
/// "degrees" and "truncation" fields carry the grading.
AlgebraTable parse_algebra_json(const std::string& text);
AlgebraTable load_algebra(const std::string& path);
std::string format_algebra_json(const AlgebraTable& a);

/// "2 e1 - 1/3 e4"
std::string format_element(const AlgebraTable& a, const SparseVector& v);

// ---------------------------------------------------------------------------
// Identities

/// Type generator name -> table operation name.
using Binding = std::map<std::string, std::string>;

/// Unlisted generators bind to the operation of the same name; a type with
/// one generator binds to the only operation of a one-operation table.
/// Throws ErrorKind::UnknownName for an unbound or missing operation.
Binding resolve_binding(const AlgebraTable& a, const Presentation& type, const Binding& binding = {});

struct IdentityViolation {
    std::string identity;                // the failing relation, in x1..x3
    std::vector<std::string> arguments;  // basis elements substituted for x1, x2, ...
    std::string value;                   // the nonzero result
};

struct IdentityReport {
    std::string type;
    bool pass = true;
    std::size_t identities = 0;  // relation basis rows plus symmetry conditions
    std::size_t checked = 0;     // basis tuples evaluated
    std::size_t skipped = 0;     // tuples above the truncation degree
    std::optional<IdentityViolation> violation;
    std::string message;
};

/// Evaluates the symmetry of every sym/antisym generator on all basis pairs
/// and every basis vector of the relation space on all basis triples.
/// Tuples whose total degree exceeds the truncation are skipped: every
/// product among them is already zero.
IdentityReport check_identities(const AlgebraTable& a, const Presentation& type, const Binding& binding = {});
IdentityReport check_identities(const AlgebraTable& a, const std::string& type_name, const Binding& binding = {});

/// Value of a tree monomial with leaf i replaced by args[i-1].
SparseVector evaluate(const AlgebraTable& a, const GeneratorSet& gens, const Binding& binding,
                      const TreeMonomial& m, const std::vector<SparseVector>& args);

// ---------------------------------------------------------------------------
// Functors between algebra types

struct FunctorInfo {
    std::string name;
    std::string source_type;
    std::string target_type;
    std::string formula;
};

const std::vector<FunctorInfo>& functors();

/// New table carrying only the derived operation(s); throws
/// ErrorKind::UnknownName when a required operation is missing.
AlgebraTable apply_functor(const AlgebraTable& a, const std::string& name);

// ---------------------------------------------------------------------------
// Ideals and quotients

struct QuotientResult {
    AlgebraTable quotient;
    std::size_t ideal_dim = 0;
    std::vector<std::size_t> kept;  // basis elements of `a` forming the quotient basis
};

/// Two-sided ideal generated by `seeds` under every operation, and the
/// quotient on the complementary basis elements.
QuotientResult quotient_by_ideal(const AlgebraTable& a, const std::vector<SparseVector>& seeds);

struct ConstructionInfo {
    std::string name;
    std::string source_type;
    std::string target_type;
    std::string ideal;
};

/// squares, leibniz-defect, diperm, abelianize.
const std::vector<ConstructionInfo>& constructions();
QuotientResult apply_construction(const AlgebraTable& a, const std::string& name);

// ---------------------------------------------------------------------------
// Truncated free algebras on generators x1..xk (basis elements 0..k-1)

struct FreeLimits {
    int max_degree = 6;
    std::size_t max_dim = 4000;
    bool allow_large = false;
};

/// Lyndon words over k letters up to length D, ordered by length then lexicographically.
std::vector<std::vector<int>> lyndon_words(std::size_t k, int max_degree);

/// Lyndon basis with standard bracketing; operation "br".
AlgebraTable free_lie(std::size_t k, int max_degree, const FreeLimits& limits = {});
/// Lie(V) + S^2 V; operations "mul" = br + di, "br", "di".
AlgebraTable free_sleib(std::size_t k, int max_degree, const FreeLimits& limits = {});
/// Reduced tensor algebra + V(x)V; operations "vdash", "dashv", "star", "wedge".
AlgebraTable free_sdiass(std::size_t k, int max_degree, const FreeLimits& limits = {});
/// SV + Lambda^2 V; operations "mul" = di + br, "di", "br".
AlgebraTable free_sperm(std::size_t k, int max_degree, const FreeLimits& limits = {});

/// Reduced tensor algebra, operation "mul".
AlgebraTable free_associative(std::size_t k, int max_degree, const FreeLimits& limits = {});
/// Words with one marked letter; x |- y keeps the mark of y, x -| y that of x.
AlgebraTable free_dialgebra(std::size_t k, int max_degree, const FreeLimits& limits = {});
/// Words under the half shuffle u.v = (u sh v') b for v = v'b; operation "mul".
AlgebraTable free_zinbiel(std::size_t k, int max_degree, const FreeLimits& limits = {});

/// Dispatch by type name: Lie, sLeib, sDiAss, sPerm, Ass, DiAss, lZinb.
AlgebraTable free_algebra(const std::string& type, std::size_t k, int max_degree, const FreeLimits& limits = {});
const std::vector<std::string>& free_algebra_types();

/// Basis elements using each of x1..xn exactly once.
std::vector<std::size_t> multilinear_basis(const AlgebraTable& a, std::size_t n);

/// Rank of the values of all tree monomials of F(V)(n) on x1..xn.
std::size_t multilinear_rank(const AlgebraTable& a, const Presentation& type, std::size_t n,
                             const Binding& binding = {});

// ---------------------------------------------------------------------------
// Seeded test corpus

inline constexpr std::uint32_t kCorpusSeed = 1729;

/// Random quotients of small free algebras of the given type (Ass, DiAss,
/// lLeib, lZinb) by one or two random inhomogeneous seeds.
std::vector<AlgebraTable> random_corpus(const std::string& type, std::size_t count, std::uint32_t seed = kCorpusSeed);

}  // namespace operadkit
