#include "operadkit/series.hpp"

#include "operadkit/error.hpp"
#include "operadkit/koszul.hpp"

namespace operadkit {

Rational factorial(std::size_t n) {
    mpz_class f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return Rational(mpq_class(f));
}

EGF EGF::from_dims(const std::vector<Rational>& dims) {
    std::vector<Rational> a;
    for (std::size_t i = 0; i < dims.size(); ++i) a.push_back(dims[i] / factorial(i + 1));
    return EGF(std::move(a));
}

EGF EGF::from_dims(const std::vector<std::uint64_t>& dims) {
    std::vector<Rational> q;
    for (auto d : dims) q.push_back(Rational(mpq_class(mpz_class(std::to_string(d)))));
    return from_dims(q);
}

Rational EGF::coeff(std::size_t n) const {
    if (n == 0 || n > a_.size()) return Rational();
    return a_[n - 1];
}

std::vector<Rational> EGF::dims() const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < a_.size(); ++i) out.push_back(a_[i] * factorial(i + 1));
    return out;
}

EGF EGF::operator-() const {
    std::vector<Rational> a;
    for (const auto& q : a_) a.push_back(-q);
    return EGF(std::move(a));
}

std::string EGF::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        const Rational& q = a_[i];
        if (q.is_zero()) continue;
        Rational m = q.sign() < 0 ? -q : q;
        if (s.empty()) s += q.sign() < 0 ? "-" : "";
        else s += q.sign() < 0 ? " - " : " + ";
        std::string mono = i == 0 ? "x" : "x^" + std::to_string(i + 1);
        s += m.is_one() ? mono : m.str() + " " + mono;
    }
    return (s.empty() ? "0" : s) + " + O(x^" + std::to_string(a_.size() + 1) + ")";
}

const std::vector<std::string>& closed_form_names() {
    static const std::vector<std::string> names = {"Lie", "Com", "Ass", "sLeib", "sDiAss", "sPerm"};
    return names;
}

EGF closed_form(const std::string& name, std::size_t order) {
    std::vector<Rational> a(order);
    const std::string n = canonical_name(name);
    for (std::size_t k = 1; k <= order; ++k) {
        if (n == "Lie" || n == "sLeib") a[k - 1] = Rational(1, static_cast<std::int64_t>(k));  // -log(1-x)
        else if (n == "Com" || n == "sPerm") a[k - 1] = Rational(1) / factorial(k);            // e^x - 1
        else if (n == "Ass" || n == "sDiAss") a[k - 1] = Rational(1);                          // x/(1-x)
        else {
            std::string list;
            for (const auto& c : closed_form_names()) list += (list.empty() ? "" : ", ") + c;
            throw Error(ErrorKind::UnknownName, "no closed form for '" + name + "'; available: " + list);
        }
    }
    if (order >= 2) {
        if (n == "sLeib" || n == "sPerm") a[1] += Rational(1, 2);  // + x^2/2
        if (n == "sDiAss") a[1] += Rational(1);                     // + x^2
    }
    return EGF(std::move(a));
}

namespace {

// truncated product of coefficient vectors indexed by power (index 0 = x^0)
std::vector<Rational> mul(const std::vector<Rational>& p, const std::vector<Rational>& q, std::size_t order) {
    std::vector<Rational> r(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (p[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            if (!q[j].is_zero()) r[i + j] += p[i] * q[j];
    }
    return r;
}

std::vector<Rational> dense(const EGF& f, std::size_t order) {
    std::vector<Rational> v(order + 1);
    for (std::size_t n = 1; n <= order; ++n) v[n] = f.coeff(n);
    return v;
}

}  // namespace

EGF compose(const EGF& g, const EGF& h, std::size_t order) {
    std::vector<Rational> hv = dense(h, order);
    std::vector<Rational> power(order + 1);
    power[0] = 1;
    std::vector<Rational> out(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        power = mul(power, hv, order);
        Rational gk = g.coeff(k);
        if (gk.is_zero()) continue;
        for (std::size_t n = 0; n <= order; ++n)
            if (!power[n].is_zero()) out[n] += gk * power[n];
    }
    return EGF(std::vector<Rational>(out.begin() + 1, out.end()));
}

EGF invert(const EGF& f, std::size_t order) {
    if (!f.coeff(1).is_one())
        throw Error(ErrorKind::Domain, "series inversion needs the coefficient of x to be 1");
    std::vector<Rational> h = dense(-f, order);
    // powers[k] = h^k truncated
    std::vector<std::vector<Rational>> powers(order + 1);
    powers[0].assign(order + 1, Rational());
    powers[0][0] = 1;
    for (std::size_t k = 1; k <= order; ++k) powers[k] = mul(powers[k - 1], h, order);
    std::vector<Rational> g(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational rhs = n == 1 ? Rational(-1) : Rational();
        for (std::size_t k = 1; k < n; ++k) rhs -= g[k] * powers[k][n];
        g[n] = rhs / powers[n][n];
    }
    return EGF(std::vector<Rational>(g.begin() + 1, g.end()));
}

EvidenceReport koszul_evidence(const Presentation& p, std::size_t n_max, const CapacityPolicy& policy) {
    EvidenceReport rep;
    rep.name = p.name();
    DualResult d = dual(p);
    rep.dual_name = d.presentation.name();
    rep.dims = Expansion(p, policy).dims(n_max);
    rep.dual_dims = Expansion(d.presentation, policy).dims(n_max);
    rep.predicted = invert(EGF::from_dims(rep.dims), n_max).dims();
    rep.pass = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational computed(mpq_class(mpz_class(std::to_string(rep.dual_dims[n - 1]))));
        if (rep.predicted[n - 1] == computed) continue;
        rep.pass = false;
        rep.first_failure = n;
        const Rational& q = rep.predicted[n - 1];
        std::string kind = q.sign() < 0 ? " (negative)" : (!q.is_integer() ? " (not an integer)" : "");
        rep.message = "arity " + std::to_string(n) + ": series inversion predicts " + q.str() + kind + " for " +
                      rep.dual_name + ", saturation gives " + computed.str();
        break;
    }
    if (rep.pass)
        rep.message = "f^" + rep.dual_name + "(-f^" + rep.name + "(x)) = -x holds through x^" + std::to_string(n_max) +
                      " (evidence, not a proof of Koszulness)";
    return rep;
}

}  // namespace operadkit
