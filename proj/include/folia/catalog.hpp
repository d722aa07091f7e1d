#pragma once

#include <string>
#include <vector>

#include "folia/exterior.hpp"
#include "folia/foliation.hpp"

namespace folia {

struct WeightVector {
    std::vector<int> e;

    explicit WeightVector(std::vector<int> weights);
    int gcd() const;
    long sum() const;
};

// k * delta under Cl(P^m(e)) ~ Z.
long pullback_degree(long delta, long k);

struct GoodDegrees {
    std::vector<long> degrees;  // admissible degrees in the requested range
    long period = 0;            // e_0*e_1*e_2; goodness is closed under +period
};

// Degrees delta >= e_0+e_1+e_2 in [lo, hi] such that for every i some j has
// e_i | delta - (e_0+e_1+e_2) + e_j. Requires m = 2 (three weights).
GoodDegrees good_degrees(const WeightVector& e, long lo, long hi);

struct BracketExpectation {
    int lhs, rhs;                 // generator indices
    std::vector<Rat> in_basis;    // expected bracket, as coordinates in the generator basis
};

struct LieAlgebraSpec {
    std::string name;
    int m = 0;                               // fields live on P^m
    std::vector<VectorField> generators;     // dimension m-1
    std::vector<BracketExpectation> brackets; // full expected table, i < j
};

// Families: "aff" (P^3), "g(m)" for m >= 3, "g6" (P^6), "g7" (P^7).
// Construction recomputes every bracket symbolically and throws
// BracketMismatchError on disagreement.
LieAlgebraSpec lie_family(const std::string& name, int m = 0);

// omega(g) = i_{X_1} ... i_{X_{m-1}} i_R dx_0 ^ ... ^ dx_m for the family's
// generators; degree m+1, annihilated by every generator.
Foliation lie_foliation(const LieAlgebraSpec& spec);

struct CensusRow {
    std::string family;
    int n_min = 0;
    long k = 1;
    long degree = 0;       // evaluated degree formula
    std::string status;    // "ok" when construction and degree checks pass
    std::string generic_element;
};

// Degree arithmetic and construction checks for the catalog families at a
// given (n, k). Throws AmbientError when n is below the family bound.
std::vector<CensusRow> component_census(int n, long k);
std::vector<CensusRow> component_census(int n, long k, const std::string& family);

} // namespace folia
