#pragma once

#include <string>
#include <vector>

#include "folia/foliation.hpp"
#include "folia/linalg.hpp"

namespace folia {

// Explicit coordinatization of the space of homogeneous p-forms
// { sum B_T dx_T : B_T in S_{delta - sum of dx weights} } together with the
// subspace cut out by i_R = 0. Column order: index tuples lexicographic,
// monomials in descending grevlex within each tuple.
class FormCoordinates {
public:
    FormCoordinates() = default;
    FormCoordinates(const WeightedRing& ring, long delta, int p);

    const WeightedRing& ring() const { return ring_; }
    long delta() const { return delta_; }
    int form_degree() const { return p_; }
    int ambient_dim() const { return static_cast<int>(manifest_.size()); }

    // Exact round trip between forms and coordinate vectors.
    std::vector<Rat> coords(const DiffForm& u) const;
    DiffForm form_from_coords(const std::vector<Rat>& v) const;

    // Kernel of contraction with the radial field (the descending forms).
    const Subspace& euler_kernel() const { return euler_kernel_; }

    struct Slot {
        IndexTuple idx;
        Expvec exps;
    };
    const std::vector<Slot>& manifest() const { return manifest_; }

private:
    WeightedRing ring_;
    long delta_ = 0;
    int p_ = 1;
    std::vector<Slot> manifest_;
    Subspace euler_kernel_;
};

FormCoordinates form_space(const WeightedRing& ring, long delta);

// Matrix of beta |-> omega ^ d(beta) + d(omega) ^ beta, from the
// euler-kernel basis of degree-delta 1-forms to full 3-form coordinates of
// degree 2*delta.
RatMatrix deformation_matrix(const Foliation& fol);

// Kernel of the deformation matrix inside the descending coordinates,
// reported in the full 1-form coordinate ambient.
Subspace tangent_space(const Foliation& fol);

// Span of F^*(beta) over a basis beta of tangent_space(alpha), in the
// source 1-form coordinates of degree k*delta.
Subspace pullback_subspace(const RationalMapLift& F, const Foliation& alpha);

// Span of the special unfoldings over the monomial-tuple basis of the
// G-parameter space.
Subspace unfolding_subspace(const PullbackPresentation& pres);

struct HypothesisCertificates {
    bool ambient_ok = false;          // n >= m+2 (hard precondition, always true in a report)
    int codim_sing_alpha = 0;         // on the target
    int codim_dalpha = 0;             // V(coeffs of d alpha) on the target
    int codim_sing_omega = 0;         // on the source
    KupkaReport kupka_k0;             // Kupka report on K_0
    bool nonpositive_splitting_ok = false; // for m=2: delta >= e_0+e_1+e_2
    bool all_pass() const;
};

struct MainTheoremReport {
    int dim_T_omega = 0;
    int dim_pullback = 0;
    int dim_unfolding = 0;
    int dim_sum = 0;
    bool decomposes = false;
    bool hypotheses_met = false;
    HypothesisCertificates certificates;
};

// Verifies equal(T_omega, F^*T_alpha + Unf). Hypothesis certification is
// non-blocking: failures mark the report "hypotheses unmet" but the
// subspace comparison still runs. Throws AmbientError if n < m+2.
MainTheoremReport verify_main_theorem(const RationalMapLift& F, const Foliation& alpha,
                                      const Budgets& budgets = {});

} // namespace folia
