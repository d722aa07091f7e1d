#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "folia/ring.hpp"

namespace folia {

// Finitely generated homogeneous ideal.
struct Ideal {
    WeightedRing ring;
    std::vector<Poly> generators; // zero generators are dropped on construction

    Ideal() = default;
    Ideal(const WeightedRing& r, std::vector<Poly> gens);
};

// Computation budgets. The engine fails loudly (ResourceLimitError) instead
// of hanging on adversarial input.
struct Budgets {
    long max_pairs = 50000;
    long max_degree = 60;
    // Wall-clock soft cap in milliseconds; 0 disables. Checked between
    // pair reductions.
    long max_millis = 0;
};

class GroebnerBasis {
public:
    GroebnerBasis() = default;

    const WeightedRing& ring() const { return ring_; }
    const std::vector<Poly>& basis() const { return basis_; }

    friend GroebnerBasis buchberger(const Ideal& I, const Budgets& budgets);

private:
    WeightedRing ring_;
    std::vector<Poly> basis_; // reduced, monic, sorted by leading term
};

// Reduced Groebner basis in grevlex; normal pair-selection strategy (lcm
// degree, then index order). Deterministic.
GroebnerBasis buchberger(const Ideal& I, const Budgets& budgets = {});

// Remainder of multivariate division by the basis.
Poly normal_form(const Poly& p, const GroebnerBasis& G);

bool membership(const Poly& p, const GroebnerBasis& G);
bool membership(const Poly& p, const Ideal& I, const Budgets& budgets = {});

// Krull dimension of V(I) inside the affine cone, via maximal variable
// sets independent modulo the leading-term ideal. V(<1>) reports -1.
int cone_dimension(const GroebnerBasis& G);
int cone_dimension(const Ideal& I, const Budgets& budgets = {});

// nvars - cone_dimension.
int codimension(const Ideal& I, const Budgets& budgets = {});

struct KupkaReport {
    int codim_sing = 0;
    int codim_sing_plus_domega = 0;
    bool generically_kupka = false;
    // The dimension-drop criterion certifies Kupka-genericity on
    // top-dimensional components only; on a non-equidimensional singular
    // locus lower-dimensional components are not covered.
    bool top_dimensional_only = true;
};

// J = given singular ideal, J' = J + coefficients of domega;
// generically_kupka iff codim(J') > codim(J).
KupkaReport kupka_report(const Ideal& sing, const class DiffForm& domega, const Budgets& budgets = {});

} // namespace folia
