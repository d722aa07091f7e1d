#pragma once

#include <optional>
#include <vector>

#include "folia/exterior.hpp"
#include "folia/groebner.hpp"

namespace folia {

// Homogeneous lift (F_0,...,F_m) of a rational map P^n --> P^m(e), with
// deg F_i = k*e_i.
struct RationalMapLift {
    WeightedRing source; // weights all 1
    WeightedRing target;
    std::vector<Poly> polys;
    long k = 1;

    RationalMapLift() = default;
    // Validates degrees and infers k. Throws DegreeMismatchError.
    RationalMapLift(const WeightedRing& source, const WeightedRing& target,
                    std::vector<Poly> polys);
};

// Validated integrable descending 1-form.
struct Foliation {
    WeightedRing ring;
    DiffForm omega;
    long delta = 0;
};

// Pullback presentation omega = F^*alpha = sum A_i(F) dF_i with the
// composed coefficients and the dF_i cached.
struct PullbackPresentation {
    RationalMapLift F;
    Foliation alpha;
    std::vector<Poly> a_of_f;   // A_i(F)
    std::vector<DiffForm> df;   // dF_i
    DiffForm omega;             // sum A_i(F) dF_i
    long delta_omega = 0;       // k * deg(alpha)
};

// Checks descent and integrability. Throws ZeroFormError,
// NotDescendingError, NotIntegrableError.
Foliation make_foliation(const DiffForm& u);

// w = sum_i lambda_i (prod_{j!=i} f_j) df_i, requires sum lambda_i e_i = 0
// where e_i = deg f_i. Throws ResonanceError.
Foliation logarithmic_form(const std::vector<Poly>& f, const std::vector<Rat>& lambda);

// alpha = i_{X_1} ... i_{X_{m-1}} i_R dx_0^...^dx_m together with its
// coefficient tuple. Throws DegenerateFamilyError if the contraction
// vanishes.
struct SplitPresentation {
    Foliation fol;
    std::vector<Poly> coeffs; // A_i
    std::vector<VectorField> fields;
};
SplitPresentation split_form_from_fields(const std::vector<VectorField>& fields);

PullbackPresentation make_pullback(const RationalMapLift& F, const Foliation& alpha);

DiffForm pullback(const RationalMapLift& F, const DiffForm& u);

// eta_2 = sum A_i(F) dG_i + sum_i (sum_j dA_i/dx_j(F) G_j) dF_i.
// G entries may be zero; nonzero entries must have degree k*e_i.
DiffForm special_unfolding(const PullbackPresentation& pres, const std::vector<Poly>& G);

// omega = F^*alpha, eta = F^*beta + special_unfolding(G). Matches the
// coefficientwise epsilon-expansion of (F+eG)^*(alpha+e beta) over the
// dual numbers.
struct FirstOrderPullback {
    DiffForm omega;
    DiffForm eta;
};
FirstOrderPullback first_order_pullback(const RationalMapLift& F, const std::vector<Poly>& G,
                                        const Foliation& alpha, const DiffForm& beta);

// Relation and minor checks for a split presentation composed with F:
// sum e_i F_i A_i(F) = 0, sum B^j_i(F) A_i(F) = 0, and the maximal minors
// of the matrix M (rows e_i F_i ; B^j(F)) reproduce +-A_i(F) up to one
// global scalar.
struct JacobianRelationsReport {
    bool euler_relation_ok = false;
    std::vector<bool> field_relation_ok;
    bool minors_match = false;
    Rat minor_scalar; // the global scalar lambda with (-1)^i minor_i = lambda*A_i(F)
};
JacobianRelationsReport jacobian_relations_check(const PullbackPresentation& pres,
                                                 const std::vector<VectorField>& fields);

// Ideal of all coefficients of omega.
Ideal singular_ideal(const Foliation& fol);

// K_0 = <A_0(F),...,A_m(F)>, B(F) = <F_0,...,F_m>, K_r = K_0 * B(F)^r.
Ideal k0_ideal(const PullbackPresentation& pres);
Ideal map_base_ideal(const RationalMapLift& F);
Ideal kr_ideal(const PullbackPresentation& pres, int r);

} // namespace folia
