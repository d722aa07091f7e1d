#include "folia/tangent.hpp"

#include <algorithm>

namespace folia {

// Increasing index tuples of length p in lexicographic order.
static void tuples_rec(int nvars, int p, int from, IndexTuple& cur,
                       std::vector<IndexTuple>& out) {
    if (static_cast<int>(cur.size()) == p) {
        out.push_back(cur);
        return;
    }
    for (int i = from; i < nvars; ++i) {
        cur.push_back(i);
        tuples_rec(nvars, p, i + 1, cur, out);
        cur.pop_back();
    }
}

static std::vector<FormCoordinates::Slot> build_manifest(const WeightedRing& ring, long delta,
                                                         int p) {
    std::vector<FormCoordinates::Slot> manifest;
    std::vector<IndexTuple> tuples;
    IndexTuple cur;
    tuples_rec(ring.nvars(), p, 0, cur, tuples);
    for (const IndexTuple& t : tuples) {
        long d = delta;
        for (int i : t) d -= ring.weights[i];
        for (const Expvec& e : monomials_of_degree(ring, d))
            manifest.push_back({t, e});
    }
    return manifest;
}

FormCoordinates::FormCoordinates(const WeightedRing& ring, long delta, int p)
    : ring_(ring), delta_(delta), p_(p) {
    if (p < 0 || p > ring.nvars()) throw DegreeMismatchError("form degree out of range");
    manifest_ = build_manifest(ring, delta, p);
    const int amb = static_cast<int>(manifest_.size());
    if (p == 0) {
        // i_R of a 0-form is zero; every coordinate vector descends.
        std::vector<std::vector<Rat>> id(amb, std::vector<Rat>(amb, Rat(0)));
        for (int i = 0; i < amb; ++i) id[i][i] = 1;
        euler_kernel_ = Subspace::from_vectors(amb, id);
        return;
    }
    // Matrix of contraction with the radial field into (p-1)-form slots.
    const auto target = build_manifest(ring, delta, p - 1);
    std::map<std::pair<IndexTuple, Expvec>, int> pos;
    for (int r = 0; r < static_cast<int>(target.size()); ++r)
        pos.emplace(std::make_pair(target[r].idx, target[r].exps), r);
    RatMatrix M(static_cast<int>(target.size()), amb);
    const VectorField R = radial_field(ring);
    for (int c = 0; c < amb; ++c) {
        DiffForm u(ring, p);
        u.add_term(manifest_[c].idx, monomial(ring, manifest_[c].exps));
        const DiffForm v = contract(R, u);
        for (const auto& [idx, poly] : v.components())
            for (const auto& [exps, coef] : poly.terms())
                M.set(pos.at({idx, exps}), c, coef);
    }
    euler_kernel_ = kernel_basis(M);
}

std::vector<Rat> FormCoordinates::coords(const DiffForm& u) const {
    if (u.ring() != ring_) throw RingMismatchError("form coordinates ring");
    std::vector<Rat> v(manifest_.size(), Rat(0));
    if (u.is_zero()) return v;
    if (u.form_degree() != p_) throw DegreeMismatchError("form degree");
    std::map<std::pair<IndexTuple, Expvec>, int> pos;
    for (int c = 0; c < static_cast<int>(manifest_.size()); ++c)
        pos.emplace(std::make_pair(manifest_[c].idx, manifest_[c].exps), c);
    for (const auto& [idx, poly] : u.components())
        for (const auto& [exps, coef] : poly.terms()) {
            auto it = pos.find({idx, exps});
            if (it == pos.end()) throw DegreeMismatchError("form not in this graded piece");
            v[it->second] = coef;
        }
    return v;
}

DiffForm FormCoordinates::form_from_coords(const std::vector<Rat>& v) const {
    if (v.size() != manifest_.size()) throw AmbientMismatchError("coordinate length");
    DiffForm u(ring_, p_);
    for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c] != 0) u.add_term(manifest_[c].idx, monomial(ring_, manifest_[c].exps, v[c]));
    return u;
}

FormCoordinates form_space(const WeightedRing& ring, long delta) {
    return FormCoordinates(ring, delta, 1);
}

RatMatrix deformation_matrix(const Foliation& fol) {
    const FormCoordinates fc1(fol.ring, fol.delta, 1);
    const FormCoordinates fc3(fol.ring, 2 * fol.delta, 3);
    const DiffForm domega = exterior_derivative(fol.omega);
    const auto& kb = fc1.euler_kernel().basis();
    RatMatrix M(fc3.ambient_dim(), static_cast<int>(kb.size()));
    for (int j = 0; j < static_cast<int>(kb.size()); ++j) {
        const DiffForm beta = fc1.form_from_coords(kb[j]);
        const DiffForm image = wedge(fol.omega, exterior_derivative(beta)) + wedge(domega, beta);
        const std::vector<Rat> col = fc3.coords(image);
        for (int r = 0; r < fc3.ambient_dim(); ++r)
            if (col[r] != 0) M.set(r, j, col[r]);
    }
    return M;
}

Subspace tangent_space(const Foliation& fol) {
    const FormCoordinates fc1(fol.ring, fol.delta, 1);
    const auto& kb = fc1.euler_kernel().basis();
    const RatMatrix M = deformation_matrix(fol);
    const Subspace ker = kernel_basis(M);
    std::vector<std::vector<Rat>> lifted;
    for (const auto& c : ker.basis()) {
        std::vector<Rat> v(fc1.ambient_dim(), Rat(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            for (int r = 0; r < fc1.ambient_dim(); ++r)
                if (kb[i][r] != 0) v[r] += c[i] * kb[i][r];
        }
        lifted.push_back(std::move(v));
    }
    return Subspace::from_vectors(fc1.ambient_dim(), lifted);
}

Subspace pullback_subspace(const RationalMapLift& F, const Foliation& alpha) {
    const FormCoordinates tgt(F.target, alpha.delta, 1);
    const FormCoordinates src(F.source, F.k * alpha.delta, 1);
    const Subspace T_alpha = tangent_space(alpha);
    std::vector<std::vector<Rat>> vecs;
    for (const auto& b : T_alpha.basis()) {
        const DiffForm beta = tgt.form_from_coords(b);
        vecs.push_back(src.coords(pullback(F, beta)));
    }
    return Subspace::from_vectors(src.ambient_dim(), vecs);
}

Subspace unfolding_subspace(const PullbackPresentation& pres) {
    const RationalMapLift& F = pres.F;
    const FormCoordinates src(F.source, pres.delta_omega, 1);
    std::vector<std::vector<Rat>> vecs;
    for (int i = 0; i < F.target.nvars(); ++i) {
        const long d = F.k * F.target.weights[i];
        for (const Expvec& e : monomials_of_degree(F.source, d)) {
            std::vector<Poly> G(F.target.nvars(), Poly(F.source));
            G[i] = monomial(F.source, e);
            const DiffForm eta = special_unfolding(pres, G);
            if (!eta.is_zero()) vecs.push_back(src.coords(eta));
        }
    }
    return Subspace::from_vectors(src.ambient_dim(), vecs);
}

bool HypothesisCertificates::all_pass() const {
    return ambient_ok && codim_sing_alpha >= 2 && codim_sing_omega >= 2 &&
           kupka_k0.generically_kupka && nonpositive_splitting_ok;
}

MainTheoremReport verify_main_theorem(const RationalMapLift& F, const Foliation& alpha,
                                      const Budgets& budgets) {
    const int n = F.source.nvars() - 1;
    const int m = F.target.nvars() - 1;
    if (n < m + 2) throw AmbientError("need source dimension >= target dimension + 2");

    PullbackPresentation pres = make_pullback(F, alpha);
    const Foliation omega = make_foliation(pres.omega);

    MainTheoremReport rep;
    const Subspace T_omega = tangent_space(omega);
    const Subspace P = pullback_subspace(F, alpha);
    const Subspace U = unfolding_subspace(pres);
    const Subspace S = span_sum(P, U);
    rep.dim_T_omega = T_omega.dim();
    rep.dim_pullback = P.dim();
    rep.dim_unfolding = U.dim();
    rep.dim_sum = S.dim();
    rep.decomposes = (S == T_omega);

    HypothesisCertificates& c = rep.certificates;
    c.ambient_ok = true;
    c.codim_sing_alpha = codimension(singular_ideal(alpha), budgets);
    {
        const DiffForm dalpha = exterior_derivative(alpha.omega);
        std::vector<Poly> gens;
        for (const auto& [idx, comp] : dalpha.components()) gens.push_back(comp);
        c.codim_dalpha = codimension(Ideal(alpha.ring, std::move(gens)), budgets);
    }
    c.codim_sing_omega = codimension(singular_ideal(omega), budgets);
    c.kupka_k0 = kupka_report(k0_ideal(pres), exterior_derivative(pres.omega), budgets);
    long wsum = 0;
    for (int w : F.target.weights) wsum += w;
    c.nonpositive_splitting_ok = (m != 2) || (alpha.delta >= wsum);
    rep.hypotheses_met = c.all_pass();
    return rep;
}

} // namespace folia
