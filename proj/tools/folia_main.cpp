#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "folia/catalog.hpp"
#include "folia/foliation.hpp"
#include "folia/json_io.hpp"
#include "folia/report.hpp"
#include "folia/rng.hpp"
#include "folia/tangent.hpp"

namespace {

using namespace folia;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitAmbient = 4;

struct CommonOpts {
    std::uint64_t seed = 0;
    long coef_bound = 9;
    long gb_pair_budget = 50000;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "random seed (default 0)");
    cmd->add_option("--coef-bound", opts.coef_bound, "coefficient bound for random choices");
    cmd->add_option("--gb-pair-budget", opts.gb_pair_budget, "Groebner pair budget");
    cmd->add_option("--format", opts.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out, "write the report to this path instead of stdout");
}

Budgets budgets_from(const CommonOpts& opts) {
    Budgets b;
    b.max_pairs = opts.gb_pair_budget;
    if (const char* ms = std::getenv("FOLIA_BUDGET_MS")) b.max_millis = std::atol(ms);
    return b;
}

void emit(const Report& rep, const CommonOpts& opts) {
    const std::string bytes = opts.format == "csv" ? rep.emit_csv() : rep.emit_json();
    if (opts.out.empty())
        std::cout << bytes;
    else
        write_file(opts.out, bytes);
}

std::vector<int> parse_weights(const std::string& csv) {
    std::vector<int> w;
    std::istringstream is(csv);
    std::string part;
    while (std::getline(is, part, ',')) w.push_back(std::stoi(part));
    if (w.empty()) throw ParseError("empty weight list");
    return w;
}

nlohmann::json certificates_json(const HypothesisCertificates& c) {
    nlohmann::json j;
    j["ambient_ok"] = c.ambient_ok;
    j["codim_sing_alpha"] = c.codim_sing_alpha;
    j["codim_dalpha"] = c.codim_dalpha;
    j["codim_sing_omega"] = c.codim_sing_omega;
    j["kupka_k0"] = {{"codim_sing", c.kupka_k0.codim_sing},
                     {"codim_sing_plus_domega", c.kupka_k0.codim_sing_plus_domega},
                     {"generically_kupka", c.kupka_k0.generically_kupka},
                     {"top_dimensional_only", c.kupka_k0.top_dimensional_only}};
    j["nonpositive_splitting_ok"] = c.nonpositive_splitting_ok;
    return j;
}

// Random descending 1-form of degree delta on a 3-variable target; on three
// variables every descending 1-form is integrable.
Foliation random_target_foliation(const WeightedRing& ring, long delta, Rng& rng, long bound) {
    const FormCoordinates fc(ring, delta, 1);
    const auto& kb = fc.euler_kernel().basis();
    if (kb.empty()) throw DegenerateFamilyError("no descending forms in this degree");
    std::vector<Rat> v(fc.ambient_dim(), Rat(0));
    for (const auto& b : kb) {
        const long c = rng.nonzero(bound);
        for (int i = 0; i < fc.ambient_dim(); ++i) v[i] += b[i] * Rat(c);
    }
    return make_foliation(fc.form_from_coords(v));
}

RationalMapLift random_map(int n, const WeightedRing& target, long k, Rng& rng, long bound) {
    const WeightedRing source = projective_ring(n + 1);
    std::vector<Poly> polys;
    for (int i = 0; i < target.nvars(); ++i)
        polys.push_back(random_homogeneous(source, k * target.weights[i], rng, bound));
    return RationalMapLift(source, target, polys);
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& path, const CommonOpts& opts) {
    Report rep("check", opts.seed);
    const nlohmann::json input = load_json_file(path);
    rep.set_inputs(input);
    const DiffForm u = form_from_json(input);
    bool pass = true;
    rep.body()["descends"] = descends(u);
    pass = pass && descends(u);
    const DiffForm du = exterior_derivative(u);
    const bool integrable = wedge(u, du).is_zero();
    rep.body()["integrable"] = integrable;
    pass = pass && integrable;
    if (pass) {
        const Foliation fol = make_foliation(u);
        rep.body()["delta"] = fol.delta;
        const Budgets b = budgets_from(opts);
        const int codim = codimension(singular_ideal(fol), b);
        rep.body()["codim_sing"] = codim;
        pass = pass && codim >= 2;
        const KupkaReport kr = kupka_report(singular_ideal(fol), du, b);
        rep.body()["kupka"] = {{"codim_sing", kr.codim_sing},
                               {"codim_sing_plus_domega", kr.codim_sing_plus_domega},
                               {"generically_kupka", kr.generically_kupka},
                               {"top_dimensional_only", kr.top_dimensional_only}};
    }
    rep.body()["pass"] = pass;
    emit(rep, opts);
    return pass ? kExitOk : kExitVerdictFalse;
}

int cmd_pullback(const std::string& map_path, const std::string& form_path,
                 const CommonOpts& opts) {
    const RationalMapLift F = map_from_json(load_json_file(map_path));
    const Foliation alpha = foliation_from_json(load_json_file(form_path));
    const PullbackPresentation pres = make_pullback(F, alpha);
    nlohmann::json out = form_to_json(pres.omega);
    out["delta"] = pres.delta_omega;
    out["k"] = F.k;
    out["delta_alpha"] = alpha.delta;
    const std::string bytes = out.dump(2) + "\n";
    if (opts.out.empty())
        std::cout << bytes;
    else
        write_file(opts.out, bytes);
    return kExitOk;
}

int cmd_tangent_dim(const std::string& path, const CommonOpts& opts) {
    Report rep("tangent-dim", opts.seed);
    const nlohmann::json input = load_json_file(path);
    rep.set_inputs(input);
    const Foliation fol = foliation_from_json(input);
    const Subspace T = tangent_space(fol);
    rep.body()["delta"] = fol.delta;
    rep.body()["dim_cone"] = T.dim();
    rep.body()["dim_projective"] = T.dim() - 1;
    emit(rep, opts);
    return kExitOk;
}

int cmd_verify_main(CLI::App* cmd, const CommonOpts& opts, int n, int m,
                    const std::string& weights_csv, long delta, long k,
                    const std::string& family, const std::string& map_path,
                    const std::string& form_path) {
    Report rep("verify-main", opts.seed);
    const Budgets b = budgets_from(opts);
    RationalMapLift F;
    Foliation alpha;
    if (!map_path.empty() || !form_path.empty()) {
        if (map_path.empty() || form_path.empty())
            throw ParseError("--map and --form must be given together");
        F = map_from_json(load_json_file(map_path));
        alpha = foliation_from_json(load_json_file(form_path));
        rep.set_inputs({{"map", map_to_json(F)}, {"form", foliation_to_json(alpha)}});
    } else {
        Rng rng(opts.seed, "verify-main");
        if (!family.empty()) {
            const LieAlgebraSpec spec =
                lie_family(family, family == "g(m)" ? m : 0);
            alpha = lie_foliation(spec);
        } else {
            if (m != 2) throw ParseError("random targets require --m 2 (or use --family)");
            std::vector<int> w =
                weights_csv.empty() ? std::vector<int>{1, 1, 1} : parse_weights(weights_csv);
            if (w.size() != 3) throw ParseError("need three target weights");
            if (delta <= 0) throw ParseError("need --delta > 0");
            alpha = random_target_foliation(WeightedRing(w), delta, rng, opts.coef_bound);
        }
        if (n <= 0) throw ParseError("need --n");
        if (n < alpha.ring.nvars() + 1)
            throw AmbientError("need n >= m+2");
        F = random_map(n, alpha.ring, k, rng, opts.coef_bound);
        rep.set_inputs({{"n", n},
                        {"k", k},
                        {"family", family},
                        {"target_weights", alpha.ring.weights},
                        {"delta", alpha.delta},
                        {"coef_bound", opts.coef_bound}});
    }
    (void)cmd;
    const MainTheoremReport mt = verify_main_theorem(F, alpha, b);
    rep.body()["dims"] = {{"T_omega", mt.dim_T_omega},
                          {"pullback", mt.dim_pullback},
                          {"unfolding", mt.dim_unfolding},
                          {"sum", mt.dim_sum}};
    rep.body()["dims_projective"] = {{"T_omega", mt.dim_T_omega - 1}, {"sum", mt.dim_sum - 1}};
    rep.body()["decomposes"] = mt.decomposes;
    rep.body()["hypotheses_met"] = mt.hypotheses_met;
    rep.body()["certificates"] = certificates_json(mt.certificates);
    emit(rep, opts);
    return mt.decomposes ? kExitOk : kExitVerdictFalse;
}

int cmd_good_degrees(const std::string& weights_csv, long lo, long hi, const CommonOpts& opts) {
    Report rep("good-degrees", opts.seed);
    const WeightVector e(parse_weights(weights_csv));
    rep.set_inputs({{"weights", e.e}, {"min", lo}, {"max", hi}});
    const GoodDegrees gd = good_degrees(e, lo, hi);
    rep.body()["degrees"] = gd.degrees;
    rep.body()["period"] = gd.period;
    nlohmann::json rows = nlohmann::json::array();
    for (long d : gd.degrees) rows.push_back({{"degree", d}});
    rep.body()["rows"] = rows;
    emit(rep, opts);
    return kExitOk;
}

int cmd_census(int n, long k, const std::string& family, const CommonOpts& opts) {
    Report rep("census", opts.seed);
    rep.set_inputs({{"n", n}, {"k", k}, {"family", family}});
    const std::vector<CensusRow> rows =
        family.empty() ? component_census(n, k) : component_census(n, k, family);
    nlohmann::json jrows = nlohmann::json::array();
    for (const CensusRow& r : rows)
        jrows.push_back({{"family", r.family},
                         {"n_min", r.n_min},
                         {"k", r.k},
                         {"degree", r.degree},
                         {"status", r.status},
                         {"generic_element", r.generic_element}});
    rep.body()["rows"] = jrows;
    emit(rep, opts);
    return kExitOk;
}

int cmd_kupka(const std::string& path, const CommonOpts& opts) {
    Report rep("kupka", opts.seed);
    const nlohmann::json input = load_json_file(path);
    rep.set_inputs(input);
    const Foliation fol = foliation_from_json(input);
    const KupkaReport kr =
        kupka_report(singular_ideal(fol), exterior_derivative(fol.omega), budgets_from(opts));
    rep.body()["codim_sing"] = kr.codim_sing;
    rep.body()["codim_sing_plus_domega"] = kr.codim_sing_plus_domega;
    rep.body()["generically_kupka"] = kr.generically_kupka;
    rep.body()["top_dimensional_only"] = kr.top_dimensional_only;
    emit(rep, opts);
    return kr.generically_kupka ? kExitOk : kExitVerdictFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for foliations on weighted projective spaces"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string form_path, map_path, weights_csv, family;
    int n = 0, m = 0;
    long delta = 0, k = 1, lo = 0, hi = 0;

    auto* check = app.add_subcommand("check", "validate a 1-form as a foliation");
    check->add_option("form", form_path, "form JSON file")->required();
    add_common(check, opts);

    auto* pb = app.add_subcommand("pullback", "compute the pullback form F^*(alpha)");
    pb->add_option("map", map_path, "map JSON file")->required();
    pb->add_option("form", form_path, "foliation JSON file")->required();
    add_common(pb, opts);

    auto* td = app.add_subcommand("tangent-dim", "dimension of the tangent space at a foliation");
    td->add_option("form", form_path, "foliation JSON file")->required();
    add_common(td, opts);

    auto* vm = app.add_subcommand("verify-main", "verify the pullback + unfolding decomposition");
    vm->add_option("--n", n, "source projective dimension");
    vm->add_option("--m", m, "target projective dimension");
    vm->add_option("--weights", weights_csv, "target weights, comma separated");
    vm->add_option("--delta", delta, "target foliation degree");
    vm->add_option("--k", k, "map degree");
    vm->add_option("--family", family, "Lie family target: aff, g(m), g6, g7");
    vm->add_option("--map", map_path, "explicit map JSON file");
    vm->add_option("--form", form_path, "explicit target foliation JSON file");
    add_common(vm, opts);

    auto* gd = app.add_subcommand("good-degrees", "admissible degrees for three weights");
    gd->add_option("--weights", weights_csv, "three weights, comma separated")->required();
    gd->add_option("--min", lo, "lower bound");
    gd->add_option("--max", hi, "upper bound")->required();
    add_common(gd, opts);

    auto* cs = app.add_subcommand("census", "catalog of component families at (n, k)");
    cs->add_option("--n", n, "ambient projective dimension")->required();
    cs->add_option("--k", k, "map degree");
    cs->add_option("--family", family, "restrict to one family");
    add_common(cs, opts);

    auto* ku = app.add_subcommand("kupka", "Kupka criterion report for a foliation");
    ku->add_option("form", form_path, "foliation JSON file")->required();
    add_common(ku, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (check->parsed()) return cmd_check(form_path, opts);
        if (pb->parsed()) return cmd_pullback(map_path, form_path, opts);
        if (td->parsed()) return cmd_tangent_dim(form_path, opts);
        if (vm->parsed())
            return cmd_verify_main(vm, opts, n, m, weights_csv, delta, k, family, map_path,
                                   form_path);
        if (gd->parsed()) return cmd_good_degrees(weights_csv, lo, hi, opts);
        if (cs->parsed()) return cmd_census(n, k, family, opts);
        if (ku->parsed()) return cmd_kupka(form_path, opts);
    } catch (const folia::AmbientError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAmbient;
    } catch (const folia::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const folia::NotDescendingError& e) {
        std::cerr << "verdict: " << e.what() << "\n";
        return kExitVerdictFalse;
    } catch (const folia::NotIntegrableError& e) {
        std::cerr << "verdict: " << e.what() << "\n";
        return kExitVerdictFalse;
    } catch (const folia::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
