#pragma once

#include <string>
#include <vector>

#include "operadkit/exactla.hpp"
#include "operadkit/presentations.hpp"

namespace operadkit {

/// Generators of the dual: same names, sym and antisym exchanged.
GeneratorSet dual_generators(const GeneratorSet& gens);

/// Pairing between F(V^v)(3) (rows) and F(V)(3) (columns).
///
/// Entries are nonzero only between monomials with the same shape and
/// labels. For a canonical monomial root(inner(..), ..) the entry is
/// shape * <root> * <inner>, where shape is +1 for root(inner(x1,x2),x3) and
/// -1 for root(inner(x1,x3),x2) and root(x1,inner(x2,x3)), and a symbol pairs
/// to +1 with its dual except a plain transpose g', which pairs to -1.
MatrixQ pairing(const GeneratorSet& gens);

struct DualResult {
    Presentation presentation;
    std::string catalog_match;  // empty when no catalog entry has this relation space
};

/// Relations of P^! = orthogonal complement of R. The result is named after
/// the matching catalog entry when there is one, otherwise NAME!.
DualResult dual(const Presentation& p);

/// The dual presentation without catalog matching (name NAME!).
Presentation dual_presentation(const Presentation& p);

/// First catalog entry (canonical names only) with an equivalent relation space.
std::string catalog_match(const Presentation& p);

struct DualityCheck {
    std::string primal;
    std::string expected_dual;
    bool ok = false;
    std::string detail;
};

/// The dual pairs of the catalog, plus involutivity for every entry.
std::vector<std::pair<std::string, std::string>> duality_pairs();
std::vector<DualityCheck> duality_table();

}  // namespace operadkit
