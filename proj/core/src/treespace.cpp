#include "operadkit/treespace.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "operadkit/error.hpp"

namespace operadkit {

const char* to_string(Symmetry s) {
    switch (s) {
        case Symmetry::Sym: return "sym";
        case Symmetry::Antisym: return "antisym";
        case Symmetry::Plain: return "plain";
    }
    return "?";
}

Symmetry parse_symmetry(const std::string& text) {
    if (text == "sym") return Symmetry::Sym;
    if (text == "antisym") return Symmetry::Antisym;
    if (text == "plain") return Symmetry::Plain;
    throw Error(ErrorKind::Parse, "unknown symmetry '" + text + "' (expected sym, antisym or plain)");
}

GeneratorSet::GeneratorSet(std::vector<GeneratorSymbol> gens) : gens_(std::move(gens)) {
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        for (std::size_t h = 0; h < g; ++h)
            if (gens_[h].name == gens_[g].name)
                throw Error(ErrorKind::Parse, "duplicate generator name '" + gens_[g].name + "'");
        first_symbol_.push_back(symbol_gen_.size());
        symbol_gen_.push_back(g);
        symbol_transposed_.push_back(false);
        if (gens_[g].symmetry == Symmetry::Plain) {
            symbol_gen_.push_back(g);
            symbol_transposed_.push_back(true);
        }
    }
}

std::size_t GeneratorSet::symbol(std::size_t gen, bool transposed) const {
    if (gen >= gens_.size()) throw Error(ErrorKind::UnknownName, "generator index out of range");
    if (transposed && gens_[gen].symmetry != Symmetry::Plain)
        throw Error(ErrorKind::Domain, "only plain generators have a transpose symbol");
    return first_symbol_[gen] + (transposed ? 1 : 0);
}

SignedSymbol GeneratorSet::transpose(std::size_t symbol) const {
    const auto& g = gens_[symbol_gen_[symbol]];
    switch (g.symmetry) {
        case Symmetry::Sym: return {1, symbol};
        case Symmetry::Antisym: return {-1, symbol};
        case Symmetry::Plain: return {1, symbol_transposed_[symbol] ? symbol - 1 : symbol + 1};
    }
    return {1, symbol};
}

std::string GeneratorSet::symbol_name(std::size_t symbol) const {
    std::string n = gens_[symbol_gen_[symbol]].name;
    if (symbol_transposed_[symbol]) n += "'";
    return n;
}

int GeneratorSet::find(const std::string& name) const {
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (gens_[g].name == name) return static_cast<int>(g);
    return -1;
}

bool GeneratorSet::all_plain() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const GeneratorSymbol& g) { return g.symmetry == Symmetry::Plain; });
}

namespace {

char vertex_char(std::size_t symbol) { return static_cast<char>(static_cast<signed char>(-(int(symbol) + 1))); }
char leaf_char(int label) { return static_cast<char>(static_cast<signed char>(label)); }
int decode(char c) { return static_cast<signed char>(c); }

struct Canon {
    std::string code;
    int min_leaf;
    int sign;
};

Canon canon_rec(const GeneratorSet& gens, const std::vector<TreeNode>& nodes, int idx) {
    const TreeNode& n = nodes[idx];
    if (n.symbol < 0) return {std::string(1, leaf_char(n.leaf)), n.leaf, 1};
    Canon l = canon_rec(gens, nodes, n.left);
    Canon r = canon_rec(gens, nodes, n.right);
    int sign = l.sign * r.sign;
    std::size_t sym = static_cast<std::size_t>(n.symbol);
    if (l.min_leaf > r.min_leaf) {
        SignedSymbol t = gens.transpose(sym);
        sign *= t.sign;
        sym = t.symbol;
        std::swap(l, r);
    }
    Canon out;
    out.code.reserve(1 + l.code.size() + r.code.size());
    out.code.push_back(vertex_char(sym));
    out.code += l.code;
    out.code += r.code;
    out.min_leaf = l.min_leaf;
    out.sign = sign;
    return out;
}

}  // namespace

TreeMonomial TreeMonomial::leaf(int label) { return from_code(std::string(1, leaf_char(label))); }

SignedMonomial TreeMonomial::join(const GeneratorSet& gens, std::size_t symbol, const TreeMonomial& left,
                                  const TreeMonomial& right) {
    SignedMonomial out;
    const TreeMonomial* a = &left;
    const TreeMonomial* b = &right;
    if (left.min_leaf() > right.min_leaf()) {
        SignedSymbol t = gens.transpose(symbol);
        out.sign = t.sign;
        symbol = t.symbol;
        std::swap(a, b);
    }
    std::string code;
    code.reserve(1 + a->code_.size() + b->code_.size());
    code.push_back(vertex_char(symbol));
    code += a->code_;
    code += b->code_;
    out.monomial = from_code(std::move(code));
    return out;
}

std::size_t TreeMonomial::arity() const {
    return static_cast<std::size_t>(std::count_if(code_.begin(), code_.end(), [](char c) { return decode(c) > 0; }));
}

int TreeMonomial::min_leaf() const {
    int m = 1 << 20;
    for (char c : code_)
        if (decode(c) > 0) m = std::min(m, decode(c));
    return m;
}

std::vector<TreeNode> TreeMonomial::nodes() const {
    std::vector<TreeNode> out;
    out.reserve(code_.size());
    std::size_t pos = 0;
    std::function<int()> parse = [&]() -> int {
        if (pos >= code_.size()) throw Error(ErrorKind::Parse, "truncated tree code");
        int v = decode(code_[pos++]);
        int idx = static_cast<int>(out.size());
        out.push_back({});
        if (v > 0) {
            out[idx].leaf = v;
            return idx;
        }
        out[idx].symbol = -v - 1;
        int l = parse();
        int r = parse();
        out[idx].left = l;
        out[idx].right = r;
        return idx;
    };
    parse();
    return out;
}

std::vector<int> TreeMonomial::planar_reading(const GeneratorSet& gens) const {
    auto ns = nodes();
    std::vector<int> out;
    std::function<void(int)> walk = [&](int i) {
        const TreeNode& n = ns[i];
        if (n.symbol < 0) {
            out.push_back(n.leaf);
            return;
        }
        if (gens.is_transposed(n.symbol)) {
            walk(n.right);
            walk(n.left);
        } else {
            walk(n.left);
            walk(n.right);
        }
    };
    walk(0);
    return out;
}

std::vector<int> TreeMonomial::content(const GeneratorSet& gens) const {
    std::vector<int> out(gens.generator_count(), 0);
    for (char c : code_)
        if (decode(c) < 0) ++out[gens.generator_of(static_cast<std::size_t>(-decode(c) - 1))];
    return out;
}

std::string TreeMonomial::to_string(const GeneratorSet& gens) const {
    auto ns = nodes();
    std::function<std::string(int)> show = [&](int i) -> std::string {
        const TreeNode& n = ns[i];
        if (n.symbol < 0) return "x" + std::to_string(n.leaf);
        const auto& g = gens.generators()[gens.generator_of(n.symbol)];
        if (gens.is_transposed(n.symbol)) return g.name + "(" + show(n.right) + "," + show(n.left) + ")";
        return g.name + "(" + show(n.left) + "," + show(n.right) + ")";
    };
    return show(0);
}

SignedMonomial canonicalize(const GeneratorSet& gens, const std::vector<TreeNode>& nodes) {
    Canon c = canon_rec(gens, nodes, 0);
    return {c.sign, TreeMonomial::from_code(std::move(c.code))};
}

SignedMonomial relabel(const GeneratorSet& gens, const TreeMonomial& m, const std::vector<int>& map) {
    auto ns = m.nodes();
    for (auto& n : ns)
        if (n.symbol < 0) {
            if (n.leaf < 1 || static_cast<std::size_t>(n.leaf) > map.size())
                throw Error(ErrorKind::DimensionMismatch, "relabelling map too short");
            n.leaf = map[n.leaf - 1];
        }
    return canonicalize(gens, ns);
}

FreeComponent::FreeComponent(GeneratorSet gens, std::size_t arity, std::vector<TreeMonomial> basis)
    : gens_(std::move(gens)), arity_(arity), basis_(std::move(basis)) {
    index_.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::size_t FreeComponent::index(const TreeMonomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end())
        throw Error(ErrorKind::DimensionMismatch, "monomial " + m.to_string(gens_) + " is not in F(V)(" +
                                                      std::to_string(arity_) + ")");
    return it->second;
}

std::uint64_t free_dimension(std::size_t degree, std::size_t arity) {
    if (arity == 0) return 0;
    std::uint64_t r = 1;
    for (std::size_t k = 3; k + 1 <= 2 * arity - 2; k += 2) r *= k;  // (2n-3)!!
    for (std::size_t i = 1; i < arity; ++i) r *= degree;
    return r;
}

namespace {

void trees_on(const GeneratorSet& gens, const std::vector<int>& labels, std::vector<std::string>& out) {
    if (labels.size() == 1) {
        out.push_back(std::string(1, leaf_char(labels[0])));
        return;
    }
    const std::size_t k = labels.size();
    // the left part always holds labels[0], the minimum
    for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<int> left{labels[0]}, right;
        for (std::size_t i = 1; i < k; ++i) ((mask >> (i - 1)) & 1u ? left : right).push_back(labels[i]);
        if (right.empty()) continue;
        std::vector<std::string> lt, rt;
        trees_on(gens, left, lt);
        trees_on(gens, right, rt);
        for (const auto& a : lt)
            for (const auto& b : rt)
                for (std::size_t s = 0; s < gens.degree(); ++s) {
                    std::string code;
                    code.push_back(vertex_char(s));
                    code += a;
                    code += b;
                    out.push_back(std::move(code));
                }
    }
}

}  // namespace

FreeComponent enumerate(const GeneratorSet& gens, std::size_t arity, std::size_t max_arity) {
    if (arity < 1) throw Error(ErrorKind::Domain, "arity must be at least 1");
    if (arity > max_arity)
        throw Error(ErrorKind::Capacity, "arity " + std::to_string(arity) + " exceeds the maximum " +
                                             std::to_string(max_arity));
    if (gens.degree() == 0 && arity > 1) return FreeComponent(gens, arity, {});
    std::vector<int> labels(arity);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<std::string> codes;
    trees_on(gens, labels, codes);
    std::vector<TreeMonomial> basis;
    basis.reserve(codes.size());
    for (auto& c : codes) basis.push_back(TreeMonomial::from_code(std::move(c)));
    return FreeComponent(gens, arity, std::move(basis));
}

SignedMonomial act(const GeneratorSet& gens, const std::vector<int>& perm, const TreeMonomial& m) {
    if (perm.size() != m.arity())
        throw Error(ErrorKind::DimensionMismatch, "permutation size " + std::to_string(perm.size()) +
                                                      " differs from arity " + std::to_string(m.arity()));
    return relabel(gens, m, perm);
}

SignedMonomial graft(const GeneratorSet& gens, const TreeMonomial& outer, std::size_t slot,
                     const TreeMonomial& inner) {
    const std::size_t k = outer.arity(), m = inner.arity();
    if (slot < 1 || slot > k) throw Error(ErrorKind::Domain, "graft slot out of range");
    const int s = static_cast<int>(slot);
    const int shift = static_cast<int>(m) - 1;
    std::string code;
    code.reserve(outer.code().size() + inner.code().size());
    for (char c : outer.code()) {
        int v = decode(c);
        if (v < 0) {
            code.push_back(c);
        } else if (v == s) {
            for (char ic : inner.code()) {
                int iv = decode(ic);
                code.push_back(iv < 0 ? ic : leaf_char(iv + s - 1));
            }
        } else {
            code.push_back(leaf_char(v > s ? v + shift : v));
        }
    }
    return canonicalize(gens, TreeMonomial::from_code(std::move(code)).nodes());
}

namespace {

// planar shapes on leaves [lo, hi], as trees with placeholder symbol 0
void planar_shapes(int lo, int hi, std::vector<std::vector<TreeNode>>& out) {
    if (lo == hi) {
        out.push_back({TreeNode{-1, lo, -1, -1}});
        return;
    }
    for (int split = lo; split < hi; ++split) {
        std::vector<std::vector<TreeNode>> ls, rs;
        planar_shapes(lo, split, ls);
        planar_shapes(split + 1, hi, rs);
        for (const auto& l : ls)
            for (const auto& r : rs) {
                std::vector<TreeNode> t;
                t.push_back(TreeNode{0, 0, 1, static_cast<int>(1 + l.size())});
                for (auto n : l) {
                    if (n.symbol >= 0) {
                        n.left += 1;
                        n.right += 1;
                    }
                    t.push_back(n);
                }
                for (auto n : r) {
                    if (n.symbol >= 0) {
                        n.left += static_cast<int>(1 + l.size());
                        n.right += static_cast<int>(1 + l.size());
                    }
                    t.push_back(n);
                }
                out.push_back(std::move(t));
            }
    }
}

}  // namespace

std::vector<std::vector<SignedMonomial>> planar_decorations(const GeneratorSet& gens, std::size_t arity) {
    std::vector<std::vector<TreeNode>> shapes;
    planar_shapes(1, static_cast<int>(arity), shapes);
    std::vector<std::vector<SignedMonomial>> out;
    const std::size_t d = gens.degree();
    for (const auto& shape : shapes) {
        std::vector<int> vertices;
        for (std::size_t i = 0; i < shape.size(); ++i)
            if (shape[i].symbol >= 0) vertices.push_back(static_cast<int>(i));
        std::vector<SignedMonomial> decorated;
        std::vector<std::size_t> choice(vertices.size(), 0);
        while (true) {
            auto t = shape;
            for (std::size_t v = 0; v < vertices.size(); ++v) t[vertices[v]].symbol = static_cast<int>(choice[v]);
            decorated.push_back(canonicalize(gens, t));
            std::size_t pos = 0;
            while (pos < choice.size() && ++choice[pos] == d) choice[pos++] = 0;
            if (pos == choice.size()) break;
        }
        out.push_back(std::move(decorated));
    }
    return out;
}

std::vector<std::vector<int>> all_permutations(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> compose(const std::vector<int>& sigma, const std::vector<int>& tau) {
    if (sigma.size() != tau.size()) throw Error(ErrorKind::DimensionMismatch, "permutation sizes differ");
    std::vector<int> out(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) out[i] = sigma[tau[i] - 1];
    return out;
}

int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j] - 1)) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace operadkit
