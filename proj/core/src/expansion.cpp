#include "operadkit/expansion.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "operadkit/error.hpp"

namespace operadkit {

CapacityPolicy CapacityPolicy::from_environment() {
    CapacityPolicy p;
    if (const char* env = std::getenv("OPERADKIT_MAX_ARITY")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw Error(ErrorKind::Parse, std::string("OPERADKIT_MAX_ARITY must be a positive integer, got '") + env + "'");
        p.max_arity = static_cast<std::size_t>(v);
    }
    return p;
}

std::size_t default_max_arity(std::size_t degree) {
    if (degree <= 2) return 6;
    if (degree <= 4) return 5;
    return 4;
}

std::size_t effective_max_arity(std::size_t degree, const CapacityPolicy& policy) {
    return policy.max_arity ? policy.max_arity : default_max_arity(degree);
}

ArityComponent::ArityComponent(std::string name, std::shared_ptr<const FreeComponent> ambient,
                               std::shared_ptr<const EchelonBuilder> ideal)
    : name_(std::move(name)), ambient_(std::move(ambient)), ideal_(std::move(ideal)) {
    representatives_ = ideal_->free_columns();
    position_.assign(ambient_->size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < representatives_.size(); ++i) position_[representatives_[i]] = i;
}

std::vector<TreeMonomial> ArityComponent::representative_monomials() const {
    std::vector<TreeMonomial> out;
    for (auto i : representatives_) out.push_back((*ambient_)[i]);
    return out;
}

VectorQ ArityComponent::project(const SparseVector& v) const {
    VectorQ out(dim());
    for (auto& [c, q] : ideal_->reduce(v)) out[position_[c]] = q;
    return out;
}

VectorQ ArityComponent::project_monomial(std::size_t index) const {
    return project(SparseVector{{index, Rational(1)}});
}

Expansion::Expansion(Presentation p, CapacityPolicy policy) : p_(std::move(p)), policy_(policy) {
    const FreeComponent& amb = p_.ambient();
    const Subspace& r = p_.relations();
    auto split_dim = [&](bool content, bool reading) {
        std::vector<VectorQ> pieces;
        for (std::size_t row = 0; row < r.dim(); ++row) {
            std::map<std::vector<int>, VectorQ> parts;
            for (std::size_t c = 0; c < amb.size(); ++c) {
                const Rational& q = r.basis()(row, c);
                if (q.is_zero()) continue;
                std::vector<int> key;
                if (content) key = amb[c].content(p_.gens());
                if (reading) {
                    auto rd = amb[c].planar_reading(p_.gens());
                    key.insert(key.end(), rd.begin(), rd.end());
                }
                auto& v = parts[key];
                if (v.empty()) v.resize(amb.size());
                v[c] = q;
            }
            for (auto& [k, v] : parts) pieces.push_back(std::move(v));
        }
        return Subspace::span(amb.size(), pieces).dim();
    };
    if (r.dim() > 0) {
        by_content_ = p_.gens().generator_count() > 1 && split_dim(true, false) == r.dim();
        by_reading_ = p_.gens().all_plain() && split_dim(false, true) == r.dim();
    }
}

std::vector<int> Expansion::grading_key(const TreeMonomial& m) const {
    std::vector<int> key;
    if (by_content_) key = m.content(p_.gens());
    if (by_reading_) {
        auto rd = m.planar_reading(p_.gens());
        key.insert(key.end(), rd.begin(), rd.end());
    }
    return key;
}

void Expansion::check_capacity(std::size_t n, const FreeComponent& ambient) const {
    if (policy_.allow_large || ambient.size() <= policy_.max_ambient) return;
    throw Error(ErrorKind::Capacity, p_.name() + " at arity " + std::to_string(n) + ": ambient dimension " +
                                         std::to_string(ambient.size()) + " exceeds the limit " +
                                         std::to_string(policy_.max_ambient) + " (use --allow-large)");
}

namespace {

struct SignedIndex {
    int sign;
    std::size_t index;
};

// leaf label l of an (n-1)-ary monomial goes to map[l-1]
SignedMonomial graft_at_root(const GeneratorSet& gens, const TreeMonomial& m, const std::vector<int>& map,
                             std::size_t symbol, int new_leaf) {
    auto nodes = m.nodes();
    std::vector<TreeNode> out;
    out.reserve(nodes.size() + 2);
    out.push_back(TreeNode{static_cast<int>(symbol), 0, 1, static_cast<int>(nodes.size() + 1)});
    for (auto n : nodes) {
        if (n.symbol >= 0) {
            n.left += 1;
            n.right += 1;
        } else {
            n.leaf = map[n.leaf - 1];
        }
        out.push_back(n);
    }
    out.push_back(TreeNode{-1, new_leaf, -1, -1});
    return canonicalize(gens, out);
}

SignedMonomial expand_leaf(const GeneratorSet& gens, const TreeMonomial& m, const std::vector<int>& map,
                           int expanded, std::size_t symbol, int a, int b) {
    auto nodes = m.nodes();
    const int base = static_cast<int>(nodes.size());
    for (auto& n : nodes) {
        if (n.symbol >= 0) continue;
        if (n.leaf == expanded) {
            n.symbol = static_cast<int>(symbol);
            n.leaf = 0;
            n.left = base;
            n.right = base + 1;
        } else {
            n.leaf = map[n.leaf - 1];
        }
    }
    nodes.push_back(TreeNode{-1, a, -1, -1});
    nodes.push_back(TreeNode{-1, b, -1, -1});
    return canonicalize(gens, nodes);
}

}  // namespace

std::shared_ptr<const EchelonBuilder> Expansion::saturate_next(std::size_t n, const FreeComponent& ambient) {
    const GeneratorSet& gens = p_.gens();
    const ArityComponent& prev = *components_[n - 2];
    const FreeComponent& small = prev.ambient();
    const int ni = static_cast<int>(n);

    // One table per elementary extension I(n-1) -> I(n): graft a generator at
    // the root next to a new leaf k, or expand the leaf n-1 into s(x_a, x_b).
    std::vector<std::vector<SignedIndex>> tables;
    auto record = [&](auto&& make) {
        std::vector<SignedIndex> t(small.size());
        for (std::size_t j = 0; j < small.size(); ++j) {
            SignedMonomial sm = make(small[j]);
            t[j] = {sm.sign, ambient.index(sm.monomial)};
        }
        tables.push_back(std::move(t));
    };
    for (std::size_t s = 0; s < gens.degree(); ++s) {
        for (int k = 1; k <= ni; ++k) {
            std::vector<int> map(n - 1);
            for (int l = 1; l < ni; ++l) map[l - 1] = l < k ? l : l + 1;
            record([&](const TreeMonomial& m) { return graft_at_root(gens, m, map, s, k); });
        }
        for (int a = 1; a <= ni; ++a)
            for (int b = a + 1; b <= ni; ++b) {
                std::vector<int> map(n - 1, 0);
                int next = 1;
                for (int l = 1; l <= ni - 2; ++l) {
                    while (next == a || next == b) ++next;
                    map[l - 1] = next++;
                }
                record([&](const TreeMonomial& m) { return expand_leaf(gens, m, map, ni - 1, s, a, b); });
            }
    }

    auto ideal = std::make_shared<EchelonBuilder>(ambient.size());
    SparseVector img;
    for (const auto& row : prev.ideal_basis()) {
        for (const auto& table : tables) {
            img.clear();
            for (const auto& [j, q] : row) {
                const SignedIndex& si = table[j];
                img.emplace_back(si.index, si.sign > 0 ? q : -q);
            }
            std::sort(img.begin(), img.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            ideal->insert(img);
            if (ideal->rank() == ambient.size()) return ideal;
        }
    }
    return ideal;
}

const ArityComponent& Expansion::component(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::Domain, "arity must be at least 1");
    const std::size_t ceiling = effective_max_arity(p_.gens().degree(), policy_);
    if (n > ceiling && !policy_.allow_large)
        throw Error(ErrorKind::Capacity, p_.name() + ": arity " + std::to_string(n) + " is above the ceiling " +
                                             std::to_string(ceiling) + " for " + std::to_string(p_.gens().degree()) +
                                             " weight-one symbols (use --allow-large or OPERADKIT_MAX_ARITY)");
    while (components_.size() < n) {
        const std::size_t k = components_.size() + 1;
        auto ambient = std::make_shared<const FreeComponent>(enumerate(p_.gens(), k, static_cast<std::size_t>(-1)));
        std::shared_ptr<const EchelonBuilder> ideal;
        if (k <= 2) {
            ideal = std::make_shared<const EchelonBuilder>(ambient->size());
        } else if (k == 3) {
            auto b = std::make_shared<EchelonBuilder>(ambient->size());
            const Subspace& r = p_.relations();
            for (std::size_t row = 0; row < r.dim(); ++row) {
                if (!by_content_ && !by_reading_) {
                    b->insert(to_sparse(r.basis().row(row)));
                    continue;
                }
                std::map<std::vector<int>, SparseVector> parts;
                for (std::size_t c = 0; c < ambient->size(); ++c) {
                    const Rational& q = r.basis()(row, c);
                    if (!q.is_zero()) parts[grading_key((*ambient)[c])].emplace_back(c, q);
                }
                for (const auto& [key, v] : parts) b->insert(v);
            }
            ideal = b;
        } else {
            check_capacity(k, *ambient);
            ideal = saturate_next(k, *ambient);
        }
        components_.push_back(std::make_unique<ArityComponent>(p_.name(), ambient, ideal));
    }
    return *components_[n - 1];
}

std::vector<std::uint64_t> Expansion::dims(std::size_t n_max) {
    std::vector<std::uint64_t> out;
    for (std::size_t n = 1; n <= n_max; ++n) out.push_back(component(n).dim());
    return out;
}

ArityComponent saturate(const Presentation& p, std::size_t n, const CapacityPolicy& policy) {
    if (n < 3) throw Error(ErrorKind::Domain, "saturation starts at arity 3");
    Expansion e(p, policy);
    return e.component(n);
}

std::vector<std::uint64_t> dims(const Presentation& p, std::size_t n_max, const CapacityPolicy& policy) {
    Expansion e(p, policy);
    return e.dims(n_max);
}

std::vector<std::uint64_t> hadamard_dims(const Presentation& a, const Presentation& b, std::size_t n_max,
                                         const CapacityPolicy& policy) {
    auto da = dims(a, n_max, policy);
    auto db = dims(b, n_max, policy);
    std::vector<std::uint64_t> out(n_max);
    for (std::size_t i = 0; i < n_max; ++i) out[i] = da[i] * db[i];
    return out;
}

std::size_t shape_image_rank(const ArityComponent& c, const std::vector<SignedMonomial>& decorations,
                             const std::vector<int>& labeling) {
    const GeneratorSet& gens = c.ambient().gens();
    EchelonBuilder span(c.dim());
    for (const auto& d : decorations) {
        SignedMonomial m = act(gens, labeling, d.monomial);
        VectorQ coords = c.project_monomial(c.ambient().index(m.monomial));
        SparseVector v = to_sparse(coords);
        if (d.sign * m.sign < 0)
            for (auto& e : v) e.second = -e.second;
        span.insert(v);
        if (span.rank() == c.dim()) break;
    }
    return span.rank();
}

std::vector<WhiteArity> white_condition(const Presentation& p, std::size_t n_max, const CapacityPolicy& policy) {
    Expansion e(p, policy);
    std::vector<WhiteArity> out;
    for (std::size_t n = 3; n <= n_max; ++n) {
        const ArityComponent& c = e.component(n);
        std::vector<int> identity(n);
        std::iota(identity.begin(), identity.end(), 1);
        WhiteArity w;
        w.arity = n;
        w.dim = c.dim();
        w.min_rank = c.dim();
        for (const auto& shape : planar_decorations(p.gens(), n)) {
            ++w.shapes;
            w.min_rank = std::min(w.min_rank, shape_image_rank(c, shape, identity));
        }
        w.pass = w.min_rank == w.dim;
        out.push_back(w);
    }
    return out;
}

}  // namespace operadkit
