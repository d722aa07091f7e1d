#include "folia/foliation.hpp"

#include <algorithm>
#include <numeric>

namespace folia {

RationalMapLift::RationalMapLift(const WeightedRing& src, const WeightedRing& tgt,
                                 std::vector<Poly> ps)
    : source(src), target(tgt), polys(std::move(ps)) {
    for (int w : source.weights)
        if (w != 1) throw DegreeMismatchError("map source must be unweighted");
    if (static_cast<int>(polys.size()) != target.nvars())
        throw ArityError("map component count");
    std::optional<long> common_k;
    for (int i = 0; i < target.nvars(); ++i) {
        if (polys[i].ring() != source) throw RingMismatchError("map component ring");
        if (polys[i].is_zero()) throw ZeroPolynomialError("map component");
        const long d = polys[i].weighted_degree();
        if (d % target.weights[i] != 0) throw DegreeMismatchError("component degree not divisible by weight");
        const long ki = d / target.weights[i];
        if (common_k && *common_k != ki) throw DegreeMismatchError("inconsistent map degree");
        common_k = ki;
    }
    k = *common_k;
    if (k < 1) throw DegreeMismatchError("map degree must be positive");
}

Foliation make_foliation(const DiffForm& u) {
    if (u.is_zero()) throw ZeroFormError("foliation form");
    if (u.form_degree() != 1) throw DegreeMismatchError("foliation form degree");
    if (!u.is_homogeneous()) throw InhomogeneousError("foliation form");
    if (!descends(u)) throw NotDescendingError("foliation form");
    const DiffForm integ = wedge(u, exterior_derivative(u));
    if (!integ.is_zero()) throw NotIntegrableError("omega ^ domega != 0");
    Foliation fol;
    fol.ring = u.ring();
    fol.omega = u;
    fol.delta = u.total_degree();
    return fol;
}

Foliation logarithmic_form(const std::vector<Poly>& f, const std::vector<Rat>& lambda) {
    if (f.empty() || f.size() != lambda.size()) throw ArityError("logarithmic data");
    const WeightedRing R = f[0].ring();
    Rat resonance = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].ring() != R) throw RingMismatchError("logarithmic factor ring");
        if (f[i].is_zero()) throw ZeroPolynomialError("logarithmic factor");
        resonance += lambda[i] * f[i].weighted_degree();
    }
    if (resonance != 0) throw ResonanceError("sum lambda_i deg f_i != 0");
    DiffForm w(R, 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        Poly cof(R, Rat(1));
        for (std::size_t j = 0; j < f.size(); ++j)
            if (j != i) cof = cof * f[j];
        DiffForm term = exterior_derivative(f[i]) * (cof * lambda[i]);
        w = w + term;
    }
    return make_foliation(w);
}

SplitPresentation split_form_from_fields(const std::vector<VectorField>& fields) {
    if (fields.empty()) throw ArityError("split fields");
    const WeightedRing R = fields[0].ring;
    const int m = R.nvars() - 1;
    if (static_cast<int>(fields.size()) != m - 1) throw ArityError("need nvars-2 fields");
    DiffForm u = contract(radial_field(R), volume_form(R));
    for (const VectorField& X : fields) {
        if (X.ring != R) throw RingMismatchError("split field ring");
        u = contract(X, u);
    }
    if (u.is_zero()) throw DegenerateFamilyError("contraction vanishes");
    SplitPresentation pres;
    pres.fol = make_foliation(u);
    pres.fields = fields;
    pres.coeffs.resize(R.nvars(), Poly(R));
    for (int i = 0; i < R.nvars(); ++i) pres.coeffs[i] = u.component({i});
    return pres;
}

DiffForm pullback(const RationalMapLift& F, const DiffForm& u) {
    return pullback(std::span<const Poly>(F.polys), F.target, u);
}

PullbackPresentation make_pullback(const RationalMapLift& F, const Foliation& alpha) {
    if (alpha.ring != F.target) throw RingMismatchError("pullback target ring");
    PullbackPresentation pres;
    pres.F = F;
    pres.alpha = alpha;
    pres.a_of_f.resize(F.target.nvars(), Poly(F.source));
    pres.df.resize(F.target.nvars());
    pres.omega = DiffForm(F.source, 1);
    const std::span<const Poly> fs(F.polys);
    for (int i = 0; i < F.target.nvars(); ++i) {
        const Poly ai = alpha.omega.component({i});
        if (!ai.is_zero()) pres.a_of_f[i] = ai.substitute(fs);
        pres.df[i] = exterior_derivative(F.polys[i]);
        if (!pres.a_of_f[i].is_zero())
            pres.omega = pres.omega + pres.df[i] * pres.a_of_f[i];
    }
    if (pres.omega.is_zero()) throw DegenerateFamilyError("pullback form vanishes");
    pres.delta_omega = F.k * alpha.delta;
    return pres;
}

DiffForm special_unfolding(const PullbackPresentation& pres, const std::vector<Poly>& G) {
    const RationalMapLift& F = pres.F;
    if (static_cast<int>(G.size()) != F.target.nvars()) throw ArityError("unfolding tuple");
    for (int i = 0; i < F.target.nvars(); ++i) {
        if (G[i].is_zero()) continue;
        if (G[i].ring() != F.source) throw RingMismatchError("unfolding entry ring");
        if (G[i].weighted_degree() != F.k * F.target.weights[i])
            throw DegreeMismatchError("unfolding entry degree");
    }
    const std::span<const Poly> fs(F.polys);
    DiffForm eta(F.source, 1);
    for (int i = 0; i < F.target.nvars(); ++i) {
        if (!pres.a_of_f[i].is_zero() && !G[i].is_zero())
            eta = eta + exterior_derivative(G[i]) * pres.a_of_f[i];
        const Poly ai = pres.alpha.omega.component({i});
        if (ai.is_zero()) continue;
        Poly scale(F.source);
        for (int j = 0; j < F.target.nvars(); ++j) {
            if (G[j].is_zero()) continue;
            const Poly dij = ai.partial(j);
            if (dij.is_zero()) continue;
            scale = scale + dij.substitute(fs) * G[j];
        }
        if (!scale.is_zero()) eta = eta + pres.df[i] * scale;
    }
    return eta;
}

FirstOrderPullback first_order_pullback(const RationalMapLift& F, const std::vector<Poly>& G,
                                        const Foliation& alpha, const DiffForm& beta) {
    if (!beta.is_zero()) {
        if (beta.ring() != F.target) throw RingMismatchError("deformation form ring");
        if (beta.form_degree() != 1) throw DegreeMismatchError("deformation form degree");
    }
    PullbackPresentation pres = make_pullback(F, alpha);
    FirstOrderPullback out;
    out.omega = pres.omega;
    out.eta = special_unfolding(pres, G);
    if (!beta.is_zero()) out.eta = out.eta + pullback(F, beta);
    return out;
}

// ---------------------------------------------------------------------------
// relation checks

static Poly minor_det(const std::vector<std::vector<Poly>>& rows, const std::vector<int>& cols,
                      const WeightedRing& R) {
    // Laplace expansion along the first row; fine at the sizes used here.
    const int n = static_cast<int>(cols.size());
    if (n == 0) return Poly(R, Rat(1));
    if (n == 1) return rows[0][cols[0]];
    Poly det(R);
    for (int j = 0; j < n; ++j) {
        const Poly& e = rows[0][cols[j]];
        if (e.is_zero()) continue;
        std::vector<int> sub;
        for (int l = 0; l < n; ++l)
            if (l != j) sub.push_back(cols[l]);
        std::vector<std::vector<Poly>> tail(rows.begin() + 1, rows.end());
        Poly m = minor_det(tail, sub, R);
        det = (j % 2 == 0) ? det + e * m : det - e * m;
    }
    return det;
}

JacobianRelationsReport jacobian_relations_check(const PullbackPresentation& pres,
                                                 const std::vector<VectorField>& fields) {
    const RationalMapLift& F = pres.F;
    const WeightedRing& S = F.source;
    const int m1 = F.target.nvars(); // m+1 columns
    JacobianRelationsReport rep;

    // Row 0: e_i F_i. Rows 1..m-1: B^j_i(F) where X_j = sum_i B^j_i d/dz_i.
    std::vector<std::vector<Poly>> M;
    {
        std::vector<Poly> row0;
        for (int i = 0; i < m1; ++i)
            row0.push_back(F.polys[i] * Rat(F.target.weights[i]));
        M.push_back(std::move(row0));
    }
    const std::span<const Poly> fs(F.polys);
    for (const VectorField& X : fields) {
        if (X.ring != F.target) throw RingMismatchError("field ring");
        std::vector<Poly> row;
        for (int i = 0; i < m1; ++i)
            row.push_back(X.coeffs[i].is_zero() ? Poly(S) : X.coeffs[i].substitute(fs));
        M.push_back(std::move(row));
    }

    auto pairing_zero = [&](const std::vector<Poly>& row) {
        Poly s(S);
        for (int i = 0; i < m1; ++i) s = s + row[i] * pres.a_of_f[i];
        return s.is_zero();
    };
    rep.euler_relation_ok = pairing_zero(M[0]);
    for (std::size_t j = 1; j < M.size(); ++j)
        rep.field_relation_ok.push_back(pairing_zero(M[j]));

    // Maximal minors vs coefficients: (-1)^i det(M with column i removed)
    // should equal lambda * A_i(F) for one scalar lambda.
    if (static_cast<int>(M.size()) == m1 - 1) {
        std::optional<Rat> lambda;
        bool ok = true;
        for (int i = 0; i < m1 && ok; ++i) {
            std::vector<int> cols;
            for (int c = 0; c < m1; ++c)
                if (c != i) cols.push_back(c);
            Poly mi = minor_det(M, cols, S);
            if (i % 2 == 1) mi = -mi;
            const Poly& ai = pres.a_of_f[i];
            if (ai.is_zero()) {
                if (!mi.is_zero()) ok = false;
                continue;
            }
            if (mi.is_zero()) {
                if (lambda && *lambda != 0) ok = false;
                lambda = lambda.value_or(Rat(0));
                continue;
            }
            const Rat ratio = mi.leading_coef() / ai.leading_coef();
            if (mi != ai * ratio || (lambda && *lambda != ratio)) ok = false;
            lambda = ratio;
        }
        rep.minors_match = ok && lambda.has_value();
        if (rep.minors_match) rep.minor_scalar = *lambda;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// ideals

Ideal singular_ideal(const Foliation& fol) {
    std::vector<Poly> gens;
    for (const auto& [idx, comp] : fol.omega.components()) gens.push_back(comp);
    return Ideal(fol.ring, std::move(gens));
}

Ideal k0_ideal(const PullbackPresentation& pres) {
    return Ideal(pres.F.source, pres.a_of_f);
}

Ideal map_base_ideal(const RationalMapLift& F) {
    return Ideal(F.source, F.polys);
}

Ideal kr_ideal(const PullbackPresentation& pres, int r) {
    if (r < 0) throw IndexError("negative power");
    std::vector<Poly> gens = pres.a_of_f;
    for (int step = 0; step < r; ++step) {
        std::vector<Poly> next;
        for (const Poly& g : gens)
            for (const Poly& f : pres.F.polys) next.push_back(g * f);
        gens = std::move(next);
    }
    return Ideal(pres.F.source, std::move(gens));
}

} // namespace folia
