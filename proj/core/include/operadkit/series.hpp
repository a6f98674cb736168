#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "operadkit/expansion.hpp"
#include "operadkit/rational.hpp"

namespace operadkit {

/// Truncated exponential generating series f(x) = sum_{n=1}^N a_n x^n with
/// a_n = dim P(n) / n!.
class EGF {
public:
    EGF() = default;
    /// coeffs[i] is the coefficient of x^(i+1).
    explicit EGF(std::vector<Rational> coeffs) : a_(std::move(coeffs)) {}
    static EGF from_dims(const std::vector<Rational>& dims);
    static EGF from_dims(const std::vector<std::uint64_t>& dims);

    std::size_t order() const { return a_.size(); }
    /// Coefficient of x^n (zero beyond the truncation order).
    Rational coeff(std::size_t n) const;
    const std::vector<Rational>& coeffs() const { return a_; }

    /// n! a_n for n = 1..N.
    std::vector<Rational> dims() const;

    EGF operator-() const;

    /// "x + x^2 + 5/3 x^3 + ..."
    std::string to_string() const;

    friend bool operator==(const EGF& a, const EGF& b) { return a.a_ == b.a_; }

private:
    std::vector<Rational> a_;
};

Rational factorial(std::size_t n);

/// Names with a known closed form: Lie, Com, Ass, sLeib, sDiAss, sPerm.
const std::vector<std::string>& closed_form_names();
EGF closed_form(const std::string& name, std::size_t order);

/// g(h(x)) through `order`; h must have no constant term.
EGF compose(const EGF& g, const EGF& h, std::size_t order);

/// The unique g with g(-f(x)) = -x through `order`; needs a_1 = 1.
EGF invert(const EGF& f, std::size_t order);

struct EvidenceReport {
    std::string name;
    std::string dual_name;
    std::vector<std::uint64_t> dims;
    std::vector<std::uint64_t> dual_dims;
    std::vector<Rational> predicted;  // dual dimensions inferred from `dims`
    bool pass = false;
    std::size_t first_failure = 0;    // arity of the first mismatch, 0 when passing
    std::string message;
};

/// Checks f^{P!}(-f^P(x)) = -x on independently computed dimensions of P
/// and of its dual through n_max. A necessary condition for Koszulness only.
EvidenceReport koszul_evidence(const Presentation& p, std::size_t n_max, const CapacityPolicy& policy = {});

}  // namespace operadkit
