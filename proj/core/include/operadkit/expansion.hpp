#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "operadkit/exactla.hpp"
#include "operadkit/presentations.hpp"
#include "operadkit/treespace.hpp"

namespace operadkit {

/// Limits on saturation work.
struct CapacityPolicy {
    std::size_t max_arity = 0;     // 0: default ceiling by number of weight-one symbols
    bool allow_large = false;      // lifts both the arity ceiling and the ambient limit
    std::size_t max_ambient = 40000;

    /// Reads OPERADKIT_MAX_ARITY when it is set.
    static CapacityPolicy from_environment();
};

/// 6 for d <= 2, 5 for d = 3..4, 4 above.
std::size_t default_max_arity(std::size_t degree);
std::size_t effective_max_arity(std::size_t degree, const CapacityPolicy& policy);

/// P(n) = F(V)(n) / I(n), with the ideal held in reduced echelon form.
class ArityComponent {
public:
    ArityComponent(std::string name, std::shared_ptr<const FreeComponent> ambient,
                   std::shared_ptr<const EchelonBuilder> ideal);

    const std::string& name() const { return name_; }
    std::size_t arity() const { return ambient_->arity(); }
    const FreeComponent& ambient() const { return *ambient_; }
    std::size_t ideal_dim() const { return ideal_->rank(); }
    std::size_t dim() const { return representatives_.size(); }

    /// Ambient positions whose monomials project to a basis of P(n).
    const std::vector<std::size_t>& representatives() const { return representatives_; }
    std::vector<TreeMonomial> representative_monomials() const;

    /// Coordinates over the representatives; the kernel is exactly the ideal.
    VectorQ project(const SparseVector& v) const;
    VectorQ project_monomial(std::size_t index) const;

    bool in_ideal(const SparseVector& v) const { return ideal_->reduce(v).empty(); }
    std::vector<SparseVector> ideal_basis() const { return ideal_->rows_by_pivot(); }
    const EchelonBuilder& ideal() const { return *ideal_; }

private:
    std::string name_;
    std::shared_ptr<const FreeComponent> ambient_;
    std::shared_ptr<const EchelonBuilder> ideal_;
    std::vector<std::size_t> representatives_;
    std::vector<std::size_t> position_;  // ambient column -> representative slot
};

/// The chain P(1), P(2), ... of one presentation, computed on demand.
class Expansion {
public:
    explicit Expansion(Presentation p, CapacityPolicy policy = {});

    const Presentation& presentation() const { return p_; }
    const ArityComponent& component(std::size_t n);
    std::vector<std::uint64_t> dims(std::size_t n_max);

    /// Whether the relations split along generator content and, for
    /// presentations with only plain generators, the planar reading order.
    bool graded_by_content() const { return by_content_; }
    bool graded_by_reading() const { return by_reading_; }

private:
    std::vector<int> grading_key(const TreeMonomial& m) const;
    void check_capacity(std::size_t n, const FreeComponent& ambient) const;
    std::shared_ptr<const EchelonBuilder> saturate_next(std::size_t n, const FreeComponent& ambient);

    Presentation p_;
    CapacityPolicy policy_;
    bool by_content_ = false;
    bool by_reading_ = false;
    std::vector<std::unique_ptr<ArityComponent>> components_;  // index n - 1
};

ArityComponent saturate(const Presentation& p, std::size_t n, const CapacityPolicy& policy = {});
std::vector<std::uint64_t> dims(const Presentation& p, std::size_t n_max, const CapacityPolicy& policy = {});
std::vector<std::uint64_t> hadamard_dims(const Presentation& a, const Presentation& b, std::size_t n_max,
                                         const CapacityPolicy& policy = {});

struct WhiteArity {
    std::size_t arity = 0;
    std::size_t dim = 0;
    std::size_t shapes = 0;
    std::size_t min_rank = 0;  // smallest image rank over the tree shapes
    bool pass = false;
};

/// For each arity 3..n_max and each planar tree shape, whether all
/// decorations of the shape span P(n) after projection.
std::vector<WhiteArity> white_condition(const Presentation& p, std::size_t n_max, const CapacityPolicy& policy = {});

/// Rank of the projected decorations of one shape, with leaves relabelled by
/// `labeling` (perm[i-1] = new label of leaf i).
std::size_t shape_image_rank(const ArityComponent& c, const std::vector<SignedMonomial>& decorations,
                             const std::vector<int>& labeling);

}  // namespace operadkit
