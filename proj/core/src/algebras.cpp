#include "operadkit/algebras.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "operadkit/error.hpp"

namespace operadkit {

namespace {

SparseVector normalize(std::vector<std::pair<std::size_t, Rational>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    for (auto& [i, c] : terms) {
        if (!out.empty() && out.back().first == i) out.back().second += c;
        else out.emplace_back(i, std::move(c));
        if (out.back().second.is_zero()) out.pop_back();
    }
    return out;
}

// y += c x
void axpy(SparseVector& y, const Rational& c, const SparseVector& x) {
    if (c.is_zero() || x.empty()) return;
    SparseVector out;
    out.reserve(y.size() + x.size());
    std::size_t a = 0, b = 0;
    while (a < y.size() || b < x.size()) {
        if (b == x.size() || (a < y.size() && y[a].first < x[b].first)) {
            out.push_back(std::move(y[a++]));
        } else if (a == y.size() || x[b].first < y[a].first) {
            out.emplace_back(x[b].first, c * x[b].second);
            ++b;
        } else {
            Rational s = y[a].second + c * x[b].second;
            if (!s.is_zero()) out.emplace_back(y[a].first, std::move(s));
            ++a;
            ++b;
        }
    }
    y = std::move(out);
}

void check_index(std::size_t i, std::size_t dim) {
    if (i >= dim)
        throw Error(ErrorKind::DimensionMismatch,
                    "basis index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim));
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraTable

AlgebraTable::AlgebraTable(std::vector<std::string> basis, std::vector<int> degrees, int truncation)
    : basis_(std::move(basis)), degrees_(std::move(degrees)), truncation_(truncation) {
    if (!degrees_.empty() && degrees_.size() != basis_.size())
        throw Error(ErrorKind::DimensionMismatch, "one degree per basis element is required");
    if (truncation_ > 0 && degrees_.empty())
        throw Error(ErrorKind::Domain, "a truncated table needs degrees");
}

void AlgebraTable::set_multidegrees(std::vector<std::vector<int>> m) {
    if (!m.empty() && m.size() != basis_.size())
        throw Error(ErrorKind::DimensionMismatch, "one multidegree per basis element is required");
    multidegrees_ = std::move(m);
}

std::vector<std::size_t> AlgebraTable::component(int degree) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        if (degrees_[i] == degree) out.push_back(i);
    return out;
}

std::vector<std::string> AlgebraTable::op_names() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : ops_) out.push_back(name);
    return out;
}

void AlgebraTable::add_op(const std::string& name) {
    if (name.empty()) throw Error(ErrorKind::Parse, "empty operation name");
    ops_[name].assign(dim() * dim(), SparseVector{});
}

void AlgebraTable::remove_op(const std::string& name) { ops_.erase(name); }

const std::vector<SparseVector>& AlgebraTable::op(const std::string& name) const {
    auto it = ops_.find(name);
    if (it == ops_.end()) {
        std::string list;
        for (const auto& [n, _] : ops_) list += (list.empty() ? "" : ", ") + n;
        throw Error(ErrorKind::UnknownName, "no operation '" + name + "' in the table (has: " + list + ")");
    }
    return it->second;
}

const SparseVector& AlgebraTable::product(const std::string& name, std::size_t i, std::size_t j) const {
    check_index(i, dim());
    check_index(j, dim());
    return op(name)[i * dim() + j];
}

void AlgebraTable::set_product(const std::string& name, std::size_t i, std::size_t j, SparseVector value) {
    check_index(i, dim());
    check_index(j, dim());
    for (const auto& [k, _] : value) check_index(k, dim());
    op(name);
    ops_[name][i * dim() + j] = normalize(std::move(value));
}

SparseVector AlgebraTable::multiply(const std::string& name, const SparseVector& a, const SparseVector& b) const {
    const auto& table = op(name);
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) {
            Rational c = ca * cb;
            for (const auto& [k, ck] : table[i * dim() + j]) terms.emplace_back(k, c * ck);
        }
    return normalize(std::move(terms));
}

VectorQ AlgebraTable::multiply(const std::string& name, const VectorQ& a, const VectorQ& b) const {
    if (a.size() != dim() || b.size() != dim())
        throw Error(ErrorKind::DimensionMismatch, "element length differs from the table dimension");
    return to_dense(multiply(name, to_sparse(a), to_sparse(b)), dim());
}

bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
    return a.basis_ == b.basis_ && a.degrees_ == b.degrees_ && a.truncation_ == b.truncation_ && a.ops_ == b.ops_;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

Rational json_rational(const nlohmann::json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    throw Error(ErrorKind::Parse, "structure constants must be integers or \"p/q\" strings");
}

}  // namespace

AlgebraTable parse_algebra_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("ops"))
        throw Error(ErrorKind::Parse, "an algebra needs \"dim\" and \"ops\"");
    if (!j["dim"].is_number_unsigned()) throw Error(ErrorKind::Parse, "\"dim\" must be a nonnegative integer");
    const std::size_t n = j["dim"].get<std::size_t>();
    std::vector<std::string> basis;
    if (j.contains("basis")) {
        for (const auto& b : j["basis"]) basis.push_back(b.get<std::string>());
        if (basis.size() != n) throw Error(ErrorKind::Parse, "\"basis\" has " + std::to_string(basis.size()) +
                                                                  " names for dimension " + std::to_string(n));
    } else {
        for (std::size_t i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i + 1));
    }
    std::vector<int> degrees;
    if (j.contains("degrees"))
        for (const auto& d : j["degrees"]) degrees.push_back(d.get<int>());
    int truncation = j.value("truncation", 0);
    AlgebraTable a(std::move(basis), std::move(degrees), truncation);
    if (!j["ops"].is_object()) throw Error(ErrorKind::Parse, "\"ops\" must be an object");
    for (const auto& [name, grid] : j["ops"].items()) {
        a.add_op(name);
        if (!grid.is_array() || grid.size() != n)
            throw Error(ErrorKind::Parse, "operation '" + name + "' must have " + std::to_string(n) + " rows");
        for (std::size_t r = 0; r < n; ++r) {
            if (!grid[r].is_array() || grid[r].size() != n)
                throw Error(ErrorKind::Parse, "operation '" + name + "' row " + std::to_string(r) + " must have " +
                                                  std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c) {
                const auto& v = grid[r][c];
                if (!v.is_array() || v.size() != n)
                    throw Error(ErrorKind::Parse, "structure constant vector " + name + "[" + std::to_string(r) + "][" +
                                                      std::to_string(c) + "] must have length " + std::to_string(n));
                VectorQ dense;
                for (const auto& x : v) dense.push_back(json_rational(x));
                a.set_product(name, r, c, to_sparse(dense));
            }
        }
    }
    return a;
}

AlgebraTable load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read algebra file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_json(ss.str());
}

std::string format_algebra_json(const AlgebraTable& a) {
    nlohmann::ordered_json j;
    j["dim"] = a.dim();
    j["basis"] = a.basis();
    if (a.graded()) j["degrees"] = a.degrees();
    if (a.truncated()) j["truncation"] = a.truncation();
    nlohmann::ordered_json ops = nlohmann::ordered_json::object();
    for (const auto& name : a.op_names()) {
        nlohmann::ordered_json grid = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < a.dim(); ++k) {
                nlohmann::ordered_json v = nlohmann::ordered_json::array();
                for (const auto& q : to_dense(a.product(name, i, k), a.dim())) v.push_back(q.str());
                row.push_back(std::move(v));
            }
            grid.push_back(std::move(row));
        }
        ops[name] = std::move(grid);
    }
    j["ops"] = std::move(ops);
    return j.dump(1) + "\n";
}

std::string format_element(const AlgebraTable& a, const SparseVector& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : v) {
        Rational m = c.sign() < 0 ? -c : c;
        if (s.empty()) s += c.sign() < 0 ? "-" : "";
        else s += c.sign() < 0 ? " - " : " + ";
        s += (m.is_one() ? "" : m.str() + " ") + a.basis()[i];
    }
    return s;
}

// ---------------------------------------------------------------------------
// Identities

Binding resolve_binding(const AlgebraTable& a, const Presentation& type, const Binding& binding) {
    Binding out;
    const auto& gens = type.gens().generators();
    for (const auto& [g, op] : binding) {
        if (type.gens().find(g) < 0)
            throw Error(ErrorKind::UnknownName, "'" + g + "' is not an operation of " + type.name());
        if (!a.has_op(op)) throw Error(ErrorKind::UnknownName, "binding " + g + "=" + op + ": no operation '" + op + "'");
    }
    for (const auto& g : gens) {
        auto it = binding.find(g.name);
        if (it != binding.end()) out[g.name] = it->second;
        else if (a.has_op(g.name)) out[g.name] = g.name;
        else if (gens.size() == 1 && a.op_names().size() == 1) out[g.name] = a.op_names().front();
        else throw Error(ErrorKind::UnknownName, "operation '" + g.name + "' of " + type.name() + " is unbound");
    }
    return out;
}

SparseVector evaluate(const AlgebraTable& a, const GeneratorSet& gens, const Binding& binding,
                      const TreeMonomial& m, const std::vector<SparseVector>& args) {
    const std::vector<TreeNode> nodes = m.nodes();
    auto rec = [&](auto&& self, int at) -> SparseVector {
        const TreeNode& n = nodes[static_cast<std::size_t>(at)];
        if (n.symbol < 0) return args.at(static_cast<std::size_t>(n.leaf - 1));
        const auto s = static_cast<std::size_t>(n.symbol);
        const std::string& op = binding.at(gens.generators()[gens.generator_of(s)].name);
        SparseVector l = self(self, n.left);
        SparseVector r = self(self, n.right);
        return gens.is_transposed(s) ? a.multiply(op, r, l) : a.multiply(op, l, r);
    };
    return rec(rec, 0);
}

IdentityReport check_identities(const AlgebraTable& a, const Presentation& type, const Binding& binding) {
    IdentityReport rep;
    rep.type = type.name();
    Binding bind = resolve_binding(a, type, binding);
    const GeneratorSet& gens = type.gens();
    const FreeComponent& ambient = type.ambient();
    const MatrixQ& rel = type.relations().basis();
    const std::size_t n = a.dim();
    auto too_deep = [&](std::initializer_list<std::size_t> idx) {
        if (!a.truncated()) return false;
        int d = 0;
        for (auto i : idx) d += a.degrees()[i];
        return d > a.truncation();
    };
    auto fail = [&](std::string identity, std::vector<std::size_t> args, const SparseVector& value) {
        rep.pass = false;
        IdentityViolation v{std::move(identity), {}, format_element(a, value)};
        for (auto i : args) v.arguments.push_back(a.basis()[i]);
        std::string at;
        for (std::size_t t = 0; t < v.arguments.size(); ++t)
            at += (t ? ", " : "") + std::string("x") + std::to_string(t + 1) + " = " + v.arguments[t];
        rep.message = type.name() + ": " + v.identity + " fails at " + at + " (value " + v.value + ")";
        rep.violation = std::move(v);
    };

    for (const auto& g : gens.generators()) {
        if (g.symmetry == Symmetry::Plain) continue;
        ++rep.identities;
        const bool anti = g.symmetry == Symmetry::Antisym;
        const std::string& op = bind.at(g.name);
        for (std::size_t i = 0; i < n && rep.pass; ++i)
            for (std::size_t j = anti ? i : i + 1; j < n; ++j) {
                if (too_deep({i, j})) continue;
                SparseVector v = a.product(op, i, j);
                axpy(v, anti ? Rational(1) : Rational(-1), a.product(op, j, i));
                if (!v.empty()) {
                    fail(g.name + "(x1,x2) " + (anti ? "+" : "-") + " " + g.name + "(x2,x1)", {i, j}, v);
                    break;
                }
            }
        if (!rep.pass) return rep;
    }

    rep.identities += rel.rows();
    std::vector<SparseVector> args(3);
    std::vector<SparseVector> values(ambient.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (too_deep({i, j, k})) {
                    ++rep.skipped;
                    continue;
                }
                ++rep.checked;
                if (rel.rows() == 0) continue;
                args[0] = a.unit(i);
                args[1] = a.unit(j);
                args[2] = a.unit(k);
                for (std::size_t m = 0; m < ambient.size(); ++m) values[m] = evaluate(a, gens, bind, ambient[m], args);
                for (std::size_t r = 0; r < rel.rows(); ++r) {
                    SparseVector acc;
                    for (std::size_t m = 0; m < ambient.size(); ++m) axpy(acc, rel(r, m), values[m]);
                    if (!acc.empty()) {
                        fail(format_vector(ambient, rel.row(r)), {i, j, k}, acc);
                        return rep;
                    }
                }
            }
    rep.message = type.name() + ": " + std::to_string(rep.identities) + " identities hold on " +
                  std::to_string(rep.checked) + " basis triples";
    if (rep.skipped)
        rep.message += " (" + std::to_string(rep.skipped) + " above degree " + std::to_string(a.truncation()) +
                       " skipped)";
    return rep;
}

IdentityReport check_identities(const AlgebraTable& a, const std::string& type_name, const Binding& binding) {
    return check_identities(a, resolve_presentation(type_name), binding);
}

// ---------------------------------------------------------------------------
// Functors

namespace {

struct Piece {
    Rational coeff;
    std::string op;
    bool swapped;  // op(b, a) instead of op(a, b)
};

struct FunctorDef {
    FunctorInfo info;
    std::vector<std::pair<std::string, std::vector<Piece>>> outputs;
};

const std::vector<FunctorDef>& functor_defs() {
    static const std::vector<FunctorDef> defs = {
        {{"commutator", "Ass", "Lie", "br(a,b) = mul(a,b) - mul(b,a)"},
         {{"br", {{1, "mul", false}, {-1, "mul", true}}}}},
        {{"anticommutator", "ComAdm", "Com", "cm(a,b) = mul(a,b) + mul(b,a)"},
         {{"cm", {{1, "mul", false}, {1, "mul", true}}}}},
        {{"dialg_to_leibniz", "DiAss", "lLeib", "mul(a,b) = vdash(a,b) - dashv(b,a)"},
         {{"mul", {{1, "vdash", false}, {-1, "dashv", true}}}}},
        {{"star_wedge", "sDiAss", "sDiAss.sw", "star = vdash + dashv, wedge = vdash - dashv"},
         {{"star", {{1, "vdash", false}, {1, "dashv", false}}}, {"wedge", {{1, "vdash", false}, {-1, "dashv", false}}}}},
        {{"dend_to_prelie", "Dend", "PreLie", "mul(a,b) = succ(a,b) - prec(b,a)"},
         {{"mul", {{1, "succ", false}, {-1, "prec", true}}}}},
        {{"dend_to_assoc", "Dend", "Ass", "mul(a,b) = succ(a,b) + prec(a,b)"},
         {{"mul", {{1, "succ", false}, {1, "prec", false}}}}},
        {{"zinbiel_symmetrize", "lZinb", "Com", "cm(a,b) = mul(a,b) + mul(b,a)"},
         {{"cm", {{1, "mul", false}, {1, "mul", true}}}}},
        {{"assadm_to_lieadm", "AssAdm", "LieAdm", "mul(a,b) = succ(a,b) - prec(b,a)"},
         {{"mul", {{1, "succ", false}, {-1, "prec", true}}}}},
        {{"comadm_to_assadm", "ComAdm", "AssAdm", "succ(a,b) = mul(a,b), prec(a,b) = mul(b,a)"},
         {{"succ", {{1, "mul", false}}}, {"prec", {{1, "mul", true}}}}},
    };
    return defs;
}

AlgebraTable same_basis(const AlgebraTable& a) {
    AlgebraTable out(a.basis(), a.degrees(), a.truncation());
    out.set_multidegrees(a.multidegrees());
    return out;
}

}  // namespace

const std::vector<FunctorInfo>& functors() {
    static const std::vector<FunctorInfo> infos = [] {
        std::vector<FunctorInfo> v;
        for (const auto& d : functor_defs()) v.push_back(d.info);
        return v;
    }();
    return infos;
}

AlgebraTable apply_functor(const AlgebraTable& a, const std::string& name) {
    auto it = std::find_if(functor_defs().begin(), functor_defs().end(),
                           [&](const FunctorDef& d) { return d.info.name == name; });
    if (it == functor_defs().end()) {
        std::string list;
        for (const auto& d : functor_defs()) list += (list.empty() ? "" : ", ") + d.info.name;
        throw Error(ErrorKind::UnknownName, "unknown functor '" + name + "'; available: " + list);
    }
    for (const auto& [_, pieces] : it->outputs)
        for (const auto& p : pieces)
            if (!a.has_op(p.op))
                throw Error(ErrorKind::UnknownName, "functor " + name + " needs an operation '" + p.op + "'");
    AlgebraTable out = same_basis(a);
    for (const auto& [op, pieces] : it->outputs) {
        out.add_op(op);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                SparseVector v;
                for (const auto& p : pieces) axpy(v, p.coeff, p.swapped ? a.product(p.op, j, i) : a.product(p.op, i, j));
                out.set_product(op, i, j, std::move(v));
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quotients

namespace {

bool homogeneous(const std::vector<SparseVector>& rows, const std::vector<int>& grade) {
    for (const auto& r : rows)
        for (const auto& [k, _] : r)
            if (grade[k] != grade[r.front().first]) return false;
    return true;
}

}  // namespace

QuotientResult quotient_by_ideal(const AlgebraTable& a, const std::vector<SparseVector>& seeds) {
    const std::size_t n = a.dim();
    EchelonBuilder ideal(n);
    std::vector<SparseVector> queue;
    auto add = [&](const SparseVector& v) {
        for (const auto& [k, _] : v) check_index(k, n);
        SparseVector r = ideal.reduce(normalize(v));
        if (r.empty()) return;
        ideal.insert(r);
        queue.push_back(std::move(r));
    };
    for (const auto& s : seeds) add(s);
    const std::vector<std::string> ops = a.op_names();
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const SparseVector v = queue[q];
        for (const auto& op : ops)
            for (std::size_t j = 0; j < n; ++j) {
                add(a.multiply(op, v, a.unit(j)));
                add(a.multiply(op, a.unit(j), v));
            }
    }

    QuotientResult res;
    res.ideal_dim = ideal.rank();
    res.kept = ideal.free_columns();
    std::vector<std::size_t> position(n, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < res.kept.size(); ++i) position[res.kept[i]] = i;

    const std::vector<SparseVector> rows = ideal.rows_by_pivot();
    std::vector<std::string> basis;
    for (auto k : res.kept) basis.push_back(a.basis()[k]);
    std::vector<int> degrees;
    int truncation = 0;
    if (a.graded() && homogeneous(rows, a.degrees())) {
        for (auto k : res.kept) degrees.push_back(a.degrees()[k]);
        truncation = a.truncation();
    }
    res.quotient = AlgebraTable(std::move(basis), std::move(degrees), truncation);
    for (const auto& op : ops) {
        res.quotient.add_op(op);
        for (std::size_t i = 0; i < res.kept.size(); ++i)
            for (std::size_t j = 0; j < res.kept.size(); ++j) {
                SparseVector v = ideal.reduce(a.product(op, res.kept[i], res.kept[j]));
                for (auto& [k, _] : v) k = position[k];
                res.quotient.set_product(op, i, j, std::move(v));
            }
    }
    return res;
}

const std::vector<ConstructionInfo>& constructions() {
    static const std::vector<ConstructionInfo> infos = {
        {"squares", "lLeib", "Lie", "generated by x.x"},
        {"leibniz-defect", "lLeib", "sLeib", "generated by (x.y).z - x.(y.z) - (x.z).y"},
        {"diperm", "DiAss", "lPerm", "generated by x |- y - y -| x (the induced Leibniz products)"},
        {"abelianize", "Ass", "Com", "generated by x.y - y.x"},
    };
    return infos;
}

namespace {

AlgebraTable restrict_ops(const AlgebraTable& a, const std::vector<std::string>& keep, const std::string& purpose) {
    AlgebraTable out = same_basis(a);
    for (const auto& op : keep) {
        if (!a.has_op(op)) throw Error(ErrorKind::UnknownName, purpose + " needs an operation '" + op + "'");
        out.add_op(op);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) out.set_product(op, i, j, a.product(op, i, j));
    }
    return out;
}

AlgebraTable rename_op(const AlgebraTable& a, const std::string& from, const std::string& to) {
    AlgebraTable out = same_basis(a);
    out.add_op(to);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out.set_product(to, i, j, a.product(from, i, j));
    return out;
}

}  // namespace

QuotientResult apply_construction(const AlgebraTable& a, const std::string& name) {
    const std::size_t n = a.dim();
    std::vector<SparseVector> seeds;
    QuotientResult res;
    if (name == "squares" || name == "abelianize") {
        AlgebraTable src = restrict_ops(a, {"mul"}, name);
        const bool squares = name == "squares";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                SparseVector v = a.product("mul", i, j);
                axpy(v, squares ? Rational(1) : Rational(-1), a.product("mul", j, i));
                seeds.push_back(std::move(v));
            }
        res = quotient_by_ideal(src, seeds);
        res.quotient = rename_op(res.quotient, "mul", squares ? "br" : "cm");
    } else if (name == "leibniz-defect") {
        AlgebraTable src = restrict_ops(a, {"mul"}, name);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    SparseVector v = a.multiply("mul", a.product("mul", i, j), a.unit(k));
                    axpy(v, Rational(-1), a.multiply("mul", a.unit(i), a.product("mul", j, k)));
                    axpy(v, Rational(-1), a.multiply("mul", a.product("mul", i, k), a.unit(j)));
                    seeds.push_back(std::move(v));
                }
        res = quotient_by_ideal(src, seeds);
    } else if (name == "diperm") {
        AlgebraTable src = restrict_ops(a, {"vdash", "dashv"}, name);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                SparseVector v = a.product("vdash", i, j);
                axpy(v, Rational(-1), a.product("dashv", j, i));
                seeds.push_back(std::move(v));
            }
        res = quotient_by_ideal(src, seeds);
        res.quotient = rename_op(res.quotient, "vdash", "mul");
    } else {
        std::string list;
        for (const auto& c : constructions()) list += (list.empty() ? "" : ", ") + c.name;
        throw Error(ErrorKind::UnknownName, "unknown construction '" + name + "'; available: " + list);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Free algebras

namespace {

using Word = std::vector<int>;

std::string letter(int i) { return "x" + std::to_string(i + 1); }

std::string word_name(const Word& w) {
    std::string s;
    for (int c : w) s += letter(c);
    return s;
}

std::vector<int> content_of(const Word& w, std::size_t k) {
    std::vector<int> c(k, 0);
    for (int x : w) ++c[static_cast<std::size_t>(x)];
    return c;
}

void check_limits(std::size_t k, int max_degree, std::size_t dim, const FreeLimits& limits, const char* what) {
    if (k == 0 || max_degree < 1) throw Error(ErrorKind::Domain, std::string(what) + " needs k >= 1 and D >= 1");
    if (limits.allow_large) return;
    if (max_degree > limits.max_degree)
        throw Error(ErrorKind::Capacity, std::string(what) + ": degree " + std::to_string(max_degree) +
                                             " exceeds the bound " + std::to_string(limits.max_degree) +
                                             " (use --allow-large)");
    if (dim > limits.max_dim)
        throw Error(ErrorKind::Capacity, std::string(what) + ": dimension " + std::to_string(dim) +
                                             " exceeds the bound " + std::to_string(limits.max_dim) +
                                             " (use --allow-large)");
}

std::size_t word_count(std::size_t k, int max_degree) {
    std::size_t total = 0, p = 1;
    for (int d = 1; d <= max_degree; ++d) total += (p *= k);
    return total;
}

// all words of length 1..D, by length then lexicographically
std::vector<Word> all_words(std::size_t k, int max_degree) {
    std::vector<Word> out;
    std::vector<Word> layer = {Word{}};
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (std::size_t c = 0; c < k; ++c) {
                Word v = w;
                v.push_back(static_cast<int>(c));
                next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

struct WordIndex {
    std::map<Word, std::size_t> index;
    std::size_t at(const Word& w) const {
        auto it = index.find(w);
        if (it == index.end()) throw Error(ErrorKind::Domain, "word " + word_name(w) + " is not a basis word");
        return it->second;
    }
};

using Poly = std::map<Word, Rational>;

void add_to(Poly& p, const Word& w, const Rational& c) {
    auto [it, fresh] = p.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

Poly lie_bracket(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            Word uv = u, vu = v;
            uv.insert(uv.end(), v.begin(), v.end());
            vu.insert(vu.end(), u.begin(), u.end());
            add_to(out, uv, cu * cv);
            add_to(out, vu, -(cu * cv));
        }
    return out;
}

Poly shuffle(const Word& u, const Word& v) {
    Poly out;
    if (u.empty()) return out[v] = 1, out;
    if (v.empty()) return out[u] = 1, out;
    Word u1(u.begin(), u.end() - 1), v1(v.begin(), v.end() - 1);
    for (const auto& [w, c] : shuffle(u1, v)) {
        Word x = w;
        x.push_back(u.back());
        add_to(out, x, c);
    }
    for (const auto& [w, c] : shuffle(u, v1)) {
        Word x = w;
        x.push_back(v.back());
        add_to(out, x, c);
    }
    return out;
}

struct LieBasis {
    std::vector<Word> words;
    std::vector<Poly> polys;  // standard bracketing expanded in the tensor algebra
    std::vector<std::string> names;
    WordIndex index;
};

LieBasis lie_basis(std::size_t k, int max_degree) {
    LieBasis b;
    b.words = lyndon_words(k, max_degree);
    for (std::size_t i = 0; i < b.words.size(); ++i) b.index.index[b.words[i]] = i;
    for (const auto& w : b.words) {
        if (w.size() == 1) {
            Poly p;
            p[w] = 1;
            b.polys.push_back(std::move(p));
            b.names.push_back(letter(w[0]));
            continue;
        }
        // standard factorization: the longest proper suffix that is a Lyndon word
        for (std::size_t s = 1; s < w.size(); ++s) {
            Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
            Word v(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
            if (!b.index.index.count(v)) continue;
            std::size_t iu = b.index.at(u), iv = b.index.at(v);
            b.polys.push_back(lie_bracket(b.polys[iu], b.polys[iv]));
            b.names.push_back("[" + b.names[iu] + "," + b.names[iv] + "]");
            break;
        }
    }
    return b;
}

// coordinates of a Lie polynomial over the bracketed Lyndon basis; the
// smallest word of a bracketed Lyndon word is the word itself
SparseVector lie_coordinates(const LieBasis& b, Poly p) {
    std::vector<std::pair<std::size_t, Rational>> out;
    while (!p.empty()) {
        auto [w, c] = *p.begin();
        auto it = b.index.index.find(w);
        if (it == b.index.index.end())
            throw Error(ErrorKind::Domain, "not a Lie polynomial: leading word " + word_name(w) + " is not Lyndon");
        out.emplace_back(it->second, c);
        for (const auto& [u, cu] : b.polys[it->second]) add_to(p, u, -(c * cu));
    }
    return normalize(std::move(out));
}

void fill_lie(AlgebraTable& t, const LieBasis& lb, int max_degree, const std::string& op) {
    for (std::size_t i = 0; i < lb.words.size(); ++i)
        for (std::size_t j = 0; j < lb.words.size(); ++j)
            if (static_cast<int>(lb.words[i].size() + lb.words[j].size()) <= max_degree)
                t.set_product(op, i, j, lie_coordinates(lb, lie_bracket(lb.polys[i], lb.polys[j])));
}

// the elements of an extra summand spanned by pairs of generators
struct PairSummand {
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, std::size_t> index;
};

PairSummand pair_summand(std::size_t k, bool ordered, bool diagonal) {
    PairSummand s;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = ordered ? 0 : i; j < k; ++j) {
            if (i == j && !diagonal) continue;
            s.index[{static_cast<int>(i), static_cast<int>(j)}] = s.pairs.size();
            s.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return s;
}

std::vector<int> pair_content(std::size_t k, std::pair<int, int> p) {
    std::vector<int> c(k, 0);
    ++c[static_cast<std::size_t>(p.first)];
    ++c[static_cast<std::size_t>(p.second)];
    return c;
}

}  // namespace

std::vector<std::vector<int>> lyndon_words(std::size_t k, int max_degree) {
    std::vector<Word> out;
    if (k == 0 || max_degree < 1) return out;
    // Duval's generation in lexicographic order
    Word w = {0};
    while (!w.empty()) {
        out.push_back(w);
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < max_degree) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == static_cast<int>(k) - 1) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return out;
}

AlgebraTable free_lie(std::size_t k, int max_degree, const FreeLimits& limits) {
    check_limits(k, max_degree, 0, limits, "free Lie algebra");
    LieBasis lb = lie_basis(k, max_degree);
    check_limits(k, max_degree, lb.words.size(), limits, "free Lie algebra");
    std::vector<int> degrees;
    std::vector<std::vector<int>> contents;
    for (const auto& w : lb.words) {
        degrees.push_back(static_cast<int>(w.size()));
        contents.push_back(content_of(w, k));
    }
    AlgebraTable t(lb.names, degrees, max_degree);
    t.set_multidegrees(contents);
    t.add_op("br");
    fill_lie(t, lb, max_degree, "br");
    return t;
}

AlgebraTable free_sleib(std::size_t k, int max_degree, const FreeLimits& limits) {
    check_limits(k, max_degree, 0, limits, "free sLeib algebra");
    LieBasis lb = lie_basis(k, max_degree);
    PairSummand sq = max_degree >= 2 ? pair_summand(k, false, true) : PairSummand{};
    std::vector<std::string> names = lb.names;
    std::vector<int> degrees;
    std::vector<std::vector<int>> contents;
    for (const auto& w : lb.words) {
        degrees.push_back(static_cast<int>(w.size()));
        contents.push_back(content_of(w, k));
    }
    const std::size_t offset = names.size();
    for (auto p : sq.pairs) {
        names.push_back(letter(p.first) + "<>" + letter(p.second));
        degrees.push_back(2);
        contents.push_back(pair_content(k, p));
    }
    check_limits(k, max_degree, names.size(), limits, "free sLeib algebra");
    AlgebraTable t(names, degrees, max_degree);
    t.set_multidegrees(contents);
    t.add_op("br");
    t.add_op("di");
    t.add_op("mul");
    fill_lie(t, lb, max_degree, "br");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!sq.pairs.empty()) {
                const int lo = static_cast<int>(std::min(i, j)), hi = static_cast<int>(std::max(i, j));
                t.set_product("di", i, j, {{offset + sq.index.at({lo, hi}), Rational(1)}});
            }
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j) {
            SparseVector v = t.product("br", i, j);
            axpy(v, Rational(1), t.product("di", i, j));
            t.set_product("mul", i, j, std::move(v));
        }
    return t;
}

AlgebraTable free_sdiass(std::size_t k, int max_degree, const FreeLimits& limits) {
    check_limits(k, max_degree, word_count(k, max_degree), limits, "free sDiAss algebra");
    std::vector<Word> words = all_words(k, max_degree);
    WordIndex wi;
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<std::vector<int>> contents;
    for (std::size_t i = 0; i < words.size(); ++i) {
        wi.index[words[i]] = i;
        names.push_back(word_name(words[i]));
        degrees.push_back(static_cast<int>(words[i].size()));
        contents.push_back(content_of(words[i], k));
    }
    PairSummand extra = max_degree >= 2 ? pair_summand(k, true, true) : PairSummand{};
    const std::size_t offset = names.size();
    for (auto p : extra.pairs) {
        names.push_back(letter(p.first) + "^" + letter(p.second));
        degrees.push_back(2);
        contents.push_back(pair_content(k, p));
    }
    check_limits(k, max_degree, names.size(), limits, "free sDiAss algebra");
    AlgebraTable t(names, degrees, max_degree);
    t.set_multidegrees(contents);
    for (const char* op : {"vdash", "dashv", "star", "wedge"}) t.add_op(op);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (static_cast<int>(words[i].size() + words[j].size()) > max_degree) continue;
            Word uv = words[i];
            uv.insert(uv.end(), words[j].begin(), words[j].end());
            const std::size_t c = wi.at(uv);
            if (words[i].size() == 1 && words[j].size() == 1) {
                const std::size_t w = offset + extra.index.at({words[i][0], words[j][0]});
                t.set_product("vdash", i, j, {{c, Rational(1)}, {w, Rational(1)}});
                t.set_product("dashv", i, j, {{c, Rational(1)}, {w, Rational(-1)}});
                t.set_product("star", i, j, {{c, Rational(2)}});
                t.set_product("wedge", i, j, {{w, Rational(2)}});
            } else {
                t.set_product("vdash", i, j, {{c, Rational(1)}});
                t.set_product("dashv", i, j, {{c, Rational(1)}});
                t.set_product("star", i, j, {{c, Rational(2)}});
            }
        }
    return t;
}

AlgebraTable free_sperm(std::size_t k, int max_degree, const FreeLimits& limits) {
    check_limits(k, max_degree, 0, limits, "free sPerm algebra");
    // monomials of SV as nondecreasing words
    std::vector<Word> monos;
    for (const auto& w : all_words(k, max_degree))
        if (std::is_sorted(w.begin(), w.end())) monos.push_back(w);
    WordIndex wi;
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<std::vector<int>> contents;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        wi.index[monos[i]] = i;
        names.push_back(word_name(monos[i]));
        degrees.push_back(static_cast<int>(monos[i].size()));
        contents.push_back(content_of(monos[i], k));
    }
    PairSummand wedge = max_degree >= 2 ? pair_summand(k, false, false) : PairSummand{};
    const std::size_t offset = names.size();
    for (auto p : wedge.pairs) {
        names.push_back(letter(p.first) + "^" + letter(p.second));
        degrees.push_back(2);
        contents.push_back(pair_content(k, p));
    }
    check_limits(k, max_degree, names.size(), limits, "free sPerm algebra");
    AlgebraTable t(names, degrees, max_degree);
    t.set_multidegrees(contents);
    for (const char* op : {"mul", "di", "br"}) t.add_op(op);
    for (std::size_t i = 0; i < monos.size(); ++i)
        for (std::size_t j = 0; j < monos.size(); ++j) {
            if (static_cast<int>(monos[i].size() + monos[j].size()) > max_degree) continue;
            Word uv = monos[i];
            uv.insert(uv.end(), monos[j].begin(), monos[j].end());
            std::sort(uv.begin(), uv.end());
            SparseVector sym = {{wi.at(uv), Rational(1)}};
            SparseVector anti;
            if (monos[i].size() == 1 && monos[j].size() == 1 && monos[i][0] != monos[j][0]) {
                const int a = monos[i][0], b = monos[j][0];
                anti = {{offset + wedge.index.at({std::min(a, b), std::max(a, b)}), Rational(a < b ? 1 : -1)}};
            }
            SparseVector both = sym;
            axpy(both, Rational(1), anti);
            t.set_product("di", i, j, sym);
            t.set_product("br", i, j, anti);
            t.set_product("mul", i, j, both);
        }
    return t;
}

AlgebraTable free_associative(std::size_t k, int max_degree, const FreeLimits& limits) {
    check_limits(k, max_degree, word_count(k, max_degree), limits, "free associative algebra");
    std::vector<Word> words = all_words(k, max_degree);
    WordIndex wi;
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<std::vector<int>> contents;
    for (std::size_t i = 0; i < words.size(); ++i) {
        wi.index[words[i]] = i;
        names.push_back(word_name(words[i]));
        degrees.push_back(static_cast<int>(words[i].size()));
        contents.push_back(content_of(words[i], k));
    }
    AlgebraTable t(names, degrees, max_degree);
    t.set_multidegrees(contents);
    t.add_op("mul");
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (static_cast<int>(words[i].size() + words[j].size()) > max_degree) continue;
            Word uv = words[i];
            uv.insert(uv.end(), words[j].begin(), words[j].end());
            t.set_product("mul", i, j, {{wi.at(uv), Rational(1)}});
        }
    return t;
}

AlgebraTable free_dialgebra(std::size_t k, int max_degree, const FreeLimits& limits) {
    std::size_t dim = 0, p = 1;
    for (int d = 1; d <= max_degree; ++d) dim += static_cast<std::size_t>(d) * (p *= k);
    check_limits(k, max_degree, dim, limits, "free dialgebra");
    std::vector<std::pair<Word, std::size_t>> marked;
    std::map<std::pair<Word, std::size_t>, std::size_t> index;
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<std::vector<int>> contents;
    for (const auto& w : all_words(k, max_degree))
        for (std::size_t m = 0; m < w.size(); ++m) {
            index[{w, m}] = marked.size();
            marked.emplace_back(w, m);
            std::string s;
            for (std::size_t c = 0; c < w.size(); ++c)
                s += c == m ? "[" + letter(w[c]) + "]" : letter(w[c]);
            names.push_back(s);
            degrees.push_back(static_cast<int>(w.size()));
            contents.push_back(content_of(w, k));
        }
    AlgebraTable t(names, degrees, max_degree);
    t.set_multidegrees(contents);
    t.add_op("vdash");
    t.add_op("dashv");
    for (std::size_t i = 0; i < marked.size(); ++i)
        for (std::size_t j = 0; j < marked.size(); ++j) {
            const auto& [u, mu] = marked[i];
            const auto& [v, mv] = marked[j];
            if (static_cast<int>(u.size() + v.size()) > max_degree) continue;
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            t.set_product("vdash", i, j, {{index.at({uv, u.size() + mv}), Rational(1)}});
            t.set_product("dashv", i, j, {{index.at({uv, mu}), Rational(1)}});
        }
    return t;
}

AlgebraTable free_zinbiel(std::size_t k, int max_degree, const FreeLimits& limits) {
    AlgebraTable t = free_associative(k, max_degree, limits);
    std::vector<Word> words = all_words(k, max_degree);
    WordIndex wi;
    for (std::size_t i = 0; i < words.size(); ++i) wi.index[words[i]] = i;
    t.add_op("mul");
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (static_cast<int>(words[i].size() + words[j].size()) > max_degree) continue;
            Word head(words[j].begin(), words[j].end() - 1);
            std::vector<std::pair<std::size_t, Rational>> terms;
            for (const auto& [s, c] : shuffle(words[i], head)) {
                Word w = s;
                w.push_back(words[j].back());
                terms.emplace_back(wi.at(w), c);
            }
            t.set_product("mul", i, j, normalize(std::move(terms)));
        }
    return t;
}

const std::vector<std::string>& free_algebra_types() {
    static const std::vector<std::string> types = {"Lie", "sLeib", "sDiAss", "sPerm", "Ass", "DiAss", "lZinb"};
    return types;
}

AlgebraTable free_algebra(const std::string& type, std::size_t k, int max_degree, const FreeLimits& limits) {
    const std::string t = canonical_name(type);
    if (t == "Lie") return free_lie(k, max_degree, limits);
    if (t == "sLeib") return free_sleib(k, max_degree, limits);
    if (t == "sDiAss") return free_sdiass(k, max_degree, limits);
    if (t == "sPerm") return free_sperm(k, max_degree, limits);
    if (t == "Ass") return free_associative(k, max_degree, limits);
    if (t == "DiAss") return free_dialgebra(k, max_degree, limits);
    if (t == "lZinb") return free_zinbiel(k, max_degree, limits);
    std::string list;
    for (const auto& n : free_algebra_types()) list += (list.empty() ? "" : ", ") + n;
    throw Error(ErrorKind::UnknownName, "no free algebra construction for '" + type + "'; available: " + list);
}

std::vector<std::size_t> multilinear_basis(const AlgebraTable& a, std::size_t n) {
    if (a.multidegrees().empty()) throw Error(ErrorKind::Domain, "the table carries no generator content");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto& c = a.multidegrees()[i];
        bool ok = c.size() >= n;
        for (std::size_t g = 0; g < c.size() && ok; ++g) ok = c[g] == (g < n ? 1 : 0);
        if (ok) out.push_back(i);
    }
    return out;
}

std::size_t multilinear_rank(const AlgebraTable& a, const Presentation& type, std::size_t n, const Binding& binding) {
    if (n > a.dim()) throw Error(ErrorKind::Domain, "fewer basis elements than variables");
    Binding bind = resolve_binding(a, type, binding);
    std::vector<SparseVector> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back(a.unit(i));
    EchelonBuilder span(a.dim());
    if (n == 1) {
        span.insert(args[0]);
        return span.rank();
    }
    FreeComponent comp = enumerate(type.gens(), n);
    for (const auto& m : comp.basis()) span.insert(evaluate(a, type.gens(), bind, m, args));
    return span.rank();
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<AlgebraTable> random_corpus(const std::string& type, std::size_t count, std::uint32_t seed) {
    const std::string t = canonical_name(type);
    AlgebraTable base;
    if (t == "Ass") base = free_associative(2, 3);
    else if (t == "DiAss" || t == "lLeib") base = free_dialgebra(2, 3);
    else if (t == "lZinb") base = free_zinbiel(2, 3);
    else throw Error(ErrorKind::UnknownName, "no random corpus for '" + type + "'; available: Ass, DiAss, lLeib, lZinb");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, base.dim() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> how_many(1, 2);
    std::uniform_int_distribution<int> terms(1, 3);
    std::vector<AlgebraTable> out;
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<SparseVector> seeds;
        for (int s = how_many(rng); s > 0; --s) {
            std::vector<std::pair<std::size_t, Rational>> v;
            for (int k = terms(rng); k > 0; --k) {
                int x = coeff(rng);
                v.emplace_back(pick(rng), Rational(x == 0 ? 1 : x, 1 + (k % 2)));
            }
            seeds.push_back(normalize(std::move(v)));
        }
        AlgebraTable q = quotient_by_ideal(base, seeds).quotient;
        out.push_back(t == "lLeib" ? apply_functor(q, "dialg_to_leibniz") : q);
    }
    return out;
}

}  // namespace operadkit
