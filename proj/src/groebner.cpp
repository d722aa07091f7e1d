#include "folia/groebner.hpp"

#include <algorithm>
#include <chrono>

#include "folia/exterior.hpp"

namespace folia {

Ideal::Ideal(const WeightedRing& r, std::vector<Poly> gens) : ring(r) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != r) throw RingMismatchError("ideal generator ring");
        generators.push_back(std::move(g));
    }
}

// ---------------------------------------------------------------------------
// division helpers

static bool divides(const Expvec& a, const Expvec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

static Expvec exp_quotient(const Expvec& b, const Expvec& a) {
    Expvec q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

static Expvec exp_lcm(const Expvec& a, const Expvec& b) {
    Expvec l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

static Poly reduce(const Poly& p, const std::vector<Poly>& basis) {
    Poly rem(p.ring());
    Poly cur = p;
    while (!cur.is_zero()) {
        const Expvec& lt = cur.leading_exps();
        bool reduced = false;
        for (const Poly& g : basis) {
            if (!divides(g.leading_exps(), lt)) continue;
            const Rat c = cur.leading_coef() / g.leading_coef();
            Poly mult = monomial(p.ring(), exp_quotient(lt, g.leading_exps()), c);
            cur = cur - g * mult;
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lt, cur.leading_coef());
            Poly head = monomial(p.ring(), lt, cur.leading_coef());
            cur = cur - head;
        }
    }
    return rem;
}

static Poly s_polynomial(const Poly& f, const Poly& g) {
    const Expvec l = exp_lcm(f.leading_exps(), g.leading_exps());
    Poly mf = monomial(f.ring(), exp_quotient(l, f.leading_exps()), Rat(1) / f.leading_coef());
    Poly mg = monomial(f.ring(), exp_quotient(l, g.leading_exps()), Rat(1) / g.leading_coef());
    return f * mf - g * mg;
}

GroebnerBasis buchberger(const Ideal& I, const Budgets& budgets) {
    GroebnerBasis G;
    G.ring_ = I.ring;
    const WeightedRing& R = I.ring;

    std::vector<Poly> basis;
    for (const Poly& g : I.generators) basis.push_back(g * (Rat(1) / g.leading_coef()));

    struct Pair {
        long deg;
        int i, j;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    auto pair_of = [&](int i, int j) {
        const Expvec l = exp_lcm(basis[i].leading_exps(), basis[j].leading_exps());
        return Pair{weighted_degree_of(R, l), i, j};
    };
    std::vector<Pair> pairs;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(basis.size()); ++j)
            pairs.push_back(pair_of(i, j));

    const auto start = std::chrono::steady_clock::now();
    long processed = 0;
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end());
        Pair pr = *it;
        pairs.erase(it);

        if (++processed > budgets.max_pairs)
            throw ResourceLimitError("pair budget exhausted");
        if (pr.deg > budgets.max_degree)
            throw ResourceLimitError("degree budget exhausted");
        if (budgets.max_millis > 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            if (ms > budgets.max_millis) throw ResourceLimitError("time budget exhausted");
        }

        // Buchberger's first criterion: coprime leading terms.
        {
            const Expvec &a = basis[pr.i].leading_exps(), &b = basis[pr.j].leading_exps();
            bool coprime = true;
            for (std::size_t v = 0; v < a.size(); ++v)
                if (a[v] > 0 && b[v] > 0) {
                    coprime = false;
                    break;
                }
            if (coprime) continue;
        }

        Poly r = reduce(s_polynomial(basis[pr.i], basis[pr.j]), basis);
        if (r.is_zero()) continue;
        r = r * (Rat(1) / r.leading_coef());
        const int k = static_cast<int>(basis.size());
        basis.push_back(std::move(r));
        for (int i = 0; i < k; ++i) pairs.push_back(pair_of(i, k));
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (!divides(basis[j].leading_exps(), basis[i].leading_exps())) continue;
            // Ties (equal leading terms) keep the earlier element.
            if (basis[j].leading_exps() == basis[i].leading_exps() && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Fully reduce each element against the others.
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = reduce(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r * (Rat(1) / r.leading_coef()));
    }
    std::sort(reduced.begin(), reduced.end(), [&R](const Poly& a, const Poly& b) {
        return GrevlexDesc{R.weights}(a.leading_exps(), b.leading_exps());
    });
    G.basis_ = std::move(reduced);
    return G;
}

Poly normal_form(const Poly& p, const GroebnerBasis& G) {
    if (p.ring() != G.ring()) throw RingMismatchError("normal_form ring");
    return reduce(p, G.basis());
}

bool membership(const Poly& p, const GroebnerBasis& G) {
    return normal_form(p, G).is_zero();
}

bool membership(const Poly& p, const Ideal& I, const Budgets& budgets) {
    return membership(p, buchberger(I, budgets));
}

// ---------------------------------------------------------------------------
// dimension

// True iff no leading term of G is supported entirely on the variable set S.
static bool independent(const std::vector<Poly>& basis, const std::vector<bool>& in_set) {
    for (const Poly& g : basis) {
        const Expvec& lt = g.leading_exps();
        bool inside = true;
        for (std::size_t v = 0; v < lt.size(); ++v)
            if (lt[v] > 0 && !in_set[v]) {
                inside = false;
                break;
            }
        if (inside) return false;
    }
    return true;
}

static int max_independent(const std::vector<Poly>& basis, std::vector<bool>& in_set, int from, int n) {
    int best = 0;
    for (std::size_t v = 0; v < in_set.size(); ++v)
        if (in_set[v]) ++best;
    for (int v = from; v < n; ++v) {
        in_set[v] = true;
        if (independent(basis, in_set)) {
            int cand = max_independent(basis, in_set, v + 1, n);
            if (cand > best) best = cand;
        }
        in_set[v] = false;
    }
    return best;
}

int cone_dimension(const GroebnerBasis& G) {
    const int n = G.ring().nvars();
    if (G.basis().empty()) return n;
    // Unit ideal: some basis element is a nonzero constant.
    for (const Poly& g : G.basis())
        if (weighted_degree_of(G.ring(), g.leading_exps()) == 0) return -1;
    std::vector<bool> in_set(n, false);
    return max_independent(G.basis(), in_set, 0, n);
}

int cone_dimension(const Ideal& I, const Budgets& budgets) {
    return cone_dimension(buchberger(I, budgets));
}

int codimension(const Ideal& I, const Budgets& budgets) {
    const int dim = cone_dimension(I, budgets);
    if (dim < 0) return I.ring.nvars();
    return I.ring.nvars() - dim;
}

KupkaReport kupka_report(const Ideal& sing, const DiffForm& domega, const Budgets& budgets) {
    if (domega.ring() != sing.ring) throw RingMismatchError("kupka ring");
    KupkaReport rep;
    rep.codim_sing = codimension(sing, budgets);
    std::vector<Poly> gens = sing.generators;
    for (const auto& [idx, comp] : domega.components()) gens.push_back(comp);
    rep.codim_sing_plus_domega = codimension(Ideal(sing.ring, std::move(gens)), budgets);
    rep.generically_kupka = rep.codim_sing_plus_domega > rep.codim_sing;
    return rep;
}

} // namespace folia
