#include "arrcohom/charvar.hpp"
#include "arrcohom/exactlin.hpp"
#include "arrcohom/io.hpp"
#include "arrcohom/orbitconfig.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace arrcohom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

ordered_json json_int(const Integer& v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

ordered_json json_poly(const IntegerPoly& p)
{
    ordered_json coeffs = ordered_json::array();
    for (const Integer& c : p.coefficients()) coeffs.push_back(json_int(c));
    return ordered_json{{"text", p.to_string()}, {"coefficients", coeffs}};
}

ordered_json json_character(const Character& rho)
{
    ordered_json out = ordered_json::array();
    for (auto v : rho.values) out.push_back(v);
    return out;
}

void emit(const ordered_json& report, const std::string& output,
          const std::vector<std::string>& table_lines)
{
    if (output == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        for (const std::string& line : table_lines) std::cout << line << "\n";
    }
}

std::string join_labels(const Arrangement& a, const std::vector<Index>& hyperplanes)
{
    std::string out;
    for (Index h : hyperplanes) {
        if (!out.empty()) out += " ";
        out += a.label(h);
    }
    return out.empty() ? "{}" : out;
}

struct SweepOptions {
    long prime = 0;
    bool exhaustive = false;
    long samples = 0;
    unsigned long long seed = 0;
};

void add_sweep_flags(CLI::App* cmd, SweepOptions& o)
{
    cmd->add_option("--prime", o.prime, "odd prime modulus for character values")->required();
    auto* ex = cmd->add_flag("--exhaustive", o.exhaustive, "sweep every character tuple");
    auto* sa = cmd->add_option("--samples", o.samples, "number of sampled characters");
    auto* se = cmd->add_option("--seed", o.seed, "seed for sampled sweeps");
    sa->needs(se);
    se->needs(sa);
    ex->excludes(sa);
    ex->excludes(se);
}

SweepPlan plan_of(const SweepOptions& o)
{
    if (!is_prime(o.prime) || o.prime < 3)
        throw std::invalid_argument("--prime must be an odd prime");
    if (!o.exhaustive && o.samples <= 0)
        throw std::invalid_argument("choose --exhaustive or --samples N --seed S");
    SweepPlan plan;
    plan.prime = o.prime;
    plan.exhaustive = o.exhaustive;
    plan.samples = o.samples;
    plan.seed = o.seed;
    return plan;
}

ordered_json sweep_config(const SweepPlan& plan)
{
    ordered_json c{{"prime", plan.prime},
                   {"mode", plan.exhaustive ? "exhaustive" : "sample"}};
    if (!plan.exhaustive) {
        c["samples"] = plan.samples;
        c["seed"] = plan.seed;
    }
    return c;
}

std::string sweep_summary(const SweepPlan& plan)
{
    if (plan.exhaustive) return "exhaustive mod " + std::to_string(plan.prime);
    return "sampled " + std::to_string(plan.samples) + " mod " + std::to_string(plan.prime) +
           " (seed " + std::to_string(plan.seed) + ")";
}

int run_flats(const std::string& input, const std::string& output)
{
    Arrangement a = load_arrangement(input);
    FlatPoset p = build_flat_poset(a);
    IntegerPoly poin = whitney_poincare(p);

    ordered_json flats = ordered_json::array();
    std::vector<std::string> lines;
    lines.push_back("arrangement " + input + ": dim " + std::to_string(a.ambient_dim()) +
                    ", " + std::to_string(a.size()) + " hyperplanes, " +
                    std::to_string(p.size()) + " flats, corank " + std::to_string(corank(p)));
    for (Index i = 0; i < p.size(); ++i) {
        const Flat& f = p.flat(i);
        ordered_json labels = ordered_json::array();
        for (Index h : f.hyperplanes) labels.push_back(a.label(h));
        flats.push_back(ordered_json{{"index", i},
                                     {"rank", p.rank(i)},
                                     {"mobius", json_int(p.mobius(i))},
                                     {"hyperplanes", labels}});
        lines.push_back("flat " + std::to_string(i) + ": rank " + std::to_string(p.rank(i)) +
                        "  mobius " + p.mobius(i).get_str() + "  " +
                        join_labels(a, f.hyperplanes));
    }
    lines.push_back("poincare: " + poin.to_string());
    lines.push_back("euler: " + euler_characteristic(p).get_str());

    ordered_json report{{"schema", 1},
                        {"command", "flats"},
                        {"input", input},
                        {"ambient_dim", a.ambient_dim()},
                        {"hyperplanes", a.size()},
                        {"corank", corank(p)},
                        {"flats", flats},
                        {"poincare", json_poly(poin)},
                        {"euler", json_int(euler_characteristic(p))}};
    emit(report, output, lines);
    return kExitOk;
}

int run_poincare(const std::string& input, const std::string& output)
{
    Arrangement a = load_arrangement(input);
    FlatPoset p = build_flat_poset(a);
    IntegerPoly poin = whitney_poincare(p);
    ordered_json report{{"schema", 1},
                        {"command", "poincare"},
                        {"input", input},
                        {"poincare", json_poly(poin)},
                        {"euler", json_int(euler_characteristic(p))}};
    emit(report, output, {poin.to_string()});
    return kExitOk;
}

BuildingFlavor flavor_of(const std::string& building)
{
    return building == "maximal" ? BuildingFlavor::maximal : BuildingFlavor::minimal;
}

int run_nested(const std::string& input, const std::string& building,
               const std::string& output)
{
    Arrangement a = load_arrangement(input);
    FlatPoset p = build_flat_poset(a);
    BuildingSet g = flavor_of(building) == BuildingFlavor::maximal ? maximal_building_set(p)
                                                                   : minimal_building_set(a, p);
    NestedSetComplex complex = nested_set_complex(a, p, g);

    ordered_json members = ordered_json::array();
    std::vector<std::string> lines;
    lines.push_back("building (" + building + "): " + std::to_string(g.members.size()) +
                    " members");
    for (Index m : g.members) {
        ordered_json labels = ordered_json::array();
        for (Index h : p.flat(m).hyperplanes) labels.push_back(a.label(h));
        members.push_back(
            ordered_json{{"flat", m}, {"rank", p.rank(m)}, {"hyperplanes", labels}});
        lines.push_back("member flat " + std::to_string(m) + ": rank " +
                        std::to_string(p.rank(m)) + "  " +
                        join_labels(a, p.flat(m).hyperplanes));
    }
    ordered_json faces = ordered_json::array();
    for (const auto& face : complex.faces) {
        ordered_json f = ordered_json::array();
        for (Index m : face) f.push_back(m);
        faces.push_back(f);
    }
    std::string fvec;
    for (long v : complex.f_vector) fvec += (fvec.empty() ? "" : " ") + std::to_string(v);
    lines.push_back("f-vector: " + fvec);
    lines.push_back("faces: " + std::to_string(complex.faces.size()));

    ordered_json report{{"schema", 1},
                        {"command", "nested"},
                        {"input", input},
                        {"building", building},
                        {"members", members},
                        {"f_vector", complex.f_vector},
                        {"faces", faces}};
    emit(report, output, lines);
    return kExitOk;
}

int run_gamma(const std::string& input, const std::string& building,
              const std::string& output)
{
    Arrangement a = load_arrangement(input);
    FlatPoset p = build_flat_poset(a);
    std::vector<IntegerVector> classes = all_gamma_classes(a, p, flavor_of(building));

    ordered_json rows = ordered_json::array();
    std::vector<std::string> lines;
    lines.push_back("gamma classes (" + building + " building): " +
                    std::to_string(classes.size()));
    for (const IntegerVector& v : classes) {
        ordered_json row = ordered_json::array();
        std::string text;
        for (Index j = 0; j < v.size(); ++j) {
            row.push_back(json_int(v(j)));
            text += (j ? " " : "") + v(j).get_str();
        }
        rows.push_back(row);
        lines.push_back(text);
    }
    ordered_json report{{"schema", 1},
                        {"command", "gamma"},
                        {"input", input},
                        {"building", building},
                        {"classes", rows}};
    emit(report, output, lines);
    return kExitOk;
}

int run_betti(const std::string& input, long prime, const std::string& output)
{
    if (!is_prime(prime) || prime < 3)
        throw std::invalid_argument("--prime must be an odd prime");
    Arrangement a = load_arrangement(input);
    FacePoset fp = enumerate_faces(a);
    CWModel model = build_cw_model(fp);
    std::vector<long> betti = twisted_betti(model, trivial_character(prime, a.size()));
    IntegerPoly poin = whitney_poincare(fp.flats());

    std::string cells, bs;
    for (long c : model.cell_counts()) cells += (cells.empty() ? "" : " ") + std::to_string(c);
    for (long b : betti) bs += (bs.empty() ? "" : " ") + std::to_string(b);

    ordered_json report{{"schema", 1},
                        {"command", "betti"},
                        {"input", input},
                        {"prime", prime},
                        {"cells", model.cell_counts()},
                        {"euler", json_int(model.euler_characteristic())},
                        {"betti", betti},
                        {"poincare", json_poly(poin)}};
    emit(report, output, {"cells per dimension: " + cells,
                          "betti (trivial character mod " + std::to_string(prime) + "): " + bs,
                          "euler: " + model.euler_characteristic().get_str(),
                          "poincare: " + poin.to_string()});
    return kExitOk;
}

int run_charvar(const std::string& input, const SweepOptions& o, int degree,
                const std::string& output)
{
    SweepPlan plan = plan_of(o);
    Arrangement a = load_arrangement(input);
    std::vector<Character> hits =
        plan.exhaustive
            ? characteristic_variety(a, plan.prime, degree)
            : characteristic_variety_sampled(a, plan.prime, degree, plan.samples, plan.seed);

    ordered_json rows = ordered_json::array();
    std::vector<std::string> lines;
    lines.push_back("characteristic variety, degree " + std::to_string(degree) + ", " +
                    sweep_summary(plan) + ": " + std::to_string(hits.size()) + " characters");
    for (const Character& rho : hits) {
        rows.push_back(json_character(rho));
        std::string text;
        for (std::size_t j = 0; j < rho.values.size(); ++j)
            text += (j ? " " : "") + std::to_string(rho.values[j]);
        lines.push_back(text);
    }
    ordered_json report{{"schema", 1},
                        {"command", "charvar"},
                        {"input", input},
                        {"config", sweep_config(plan)},
                        {"degree", degree},
                        {"count", hits.size()},
                        {"characters", rows}};
    emit(report, output, lines);
    return kExitOk;
}

int run_propagate(const std::string& input, const SweepOptions& o, const std::string& output)
{
    SweepPlan plan = plan_of(o);
    Arrangement a = load_arrangement(input);
    PropagationReport r = check_propagation(a, plan);

    ordered_json violations = ordered_json::array();
    for (const PropagationViolation& v : r.violations)
        violations.push_back(ordered_json{{"character", json_character(v.character)},
                                          {"populated", v.populated},
                                          {"vanishing", v.vanishing},
                                          {"betti", v.betti}});
    ordered_json histogram = ordered_json::array();
    for (const auto& [betti, count] : r.betti_histogram)
        histogram.push_back(ordered_json{{"betti", betti}, {"count", count}});

    std::vector<std::string> lines;
    lines.push_back("propagation, " + sweep_summary(plan) + ": swept " +
                    std::to_string(r.swept) + ", n_eff " + std::to_string(r.n_eff));
    lines.push_back(std::string("V0 trivial only: ") + (r.v0_is_trivial_only ? "yes" : "no"));
    lines.push_back("violations: " + std::to_string(r.violations.size()));
    lines.push_back(std::string("pass: ") + (r.pass() ? "yes" : "no"));

    ordered_json report{{"schema", 1},
                        {"command", "propagate"},
                        {"input", input},
                        {"config", sweep_config(plan)},
                        {"n_eff", r.n_eff},
                        {"swept", r.swept},
                        {"v0_trivial_only", r.v0_is_trivial_only},
                        {"violations", violations},
                        {"betti_histogram", histogram},
                        {"pass", r.pass()}};
    emit(report, output, lines);
    return r.pass() ? kExitOk : kExitViolation;
}

int run_generic_vanish(const std::string& input, const SweepOptions& o,
                       const std::string& output)
{
    SweepPlan plan = plan_of(o);
    Arrangement a = load_arrangement(input);
    GenericVanishingReport r = check_generic_vanishing(a, plan);

    ordered_json failures = ordered_json::array();
    for (const GenericVanishingFailure& f : r.failures)
        failures.push_back(ordered_json{{"character", json_character(f.character)},
                                        {"betti", f.betti}});

    std::vector<std::string> lines;
    lines.push_back("generic vanishing, " + sweep_summary(plan) + ": swept " +
                    std::to_string(r.swept) + ", nonresonant " +
                    std::to_string(r.nonresonant_count));
    lines.push_back("n_eff " + std::to_string(r.n_eff) + ", expected top betti " +
                    r.expected_top.get_str());
    lines.push_back("failures: " + std::to_string(r.failures.size()));
    lines.push_back(std::string("pass: ") + (r.pass() ? "yes" : "no"));

    ordered_json report{{"schema", 1},
                        {"command", "generic-vanish"},
                        {"input", input},
                        {"config", sweep_config(plan)},
                        {"n_eff", r.n_eff},
                        {"expected_top", json_int(r.expected_top)},
                        {"swept", r.swept},
                        {"nonresonant", r.nonresonant_count},
                        {"failures", failures},
                        {"pass", r.pass()}};
    emit(report, output, lines);
    return r.pass() ? kExitOk : kExitViolation;
}

int run_toric(const std::string& input, const std::string& output)
{
    ToricArrangement t = load_toric(input);
    LayerPoset p = build_layer_poset(t);
    IntegerPoly poin = toric_poincare(p);
    ToricDualityReport duality = toric_duality_check(t);

    ordered_json layers = ordered_json::array();
    std::vector<std::string> lines;
    lines.push_back("toric arrangement " + input + ": dim " +
                    std::to_string(t.ambient_dim()) + ", " + std::to_string(t.size()) +
                    " hypersurfaces, " + std::to_string(p.size()) + " layers");
    for (Index i = 0; i < p.size(); ++i) {
        ordered_json hs = ordered_json::array();
        std::string text;
        for (Index h : p.layer(i).hypersurfaces) {
            hs.push_back(h);
            text += (text.empty() ? "" : " ") + std::to_string(h);
        }
        layers.push_back(
            ordered_json{{"rank", p.rank(i)}, {"mobius", json_int(p.mobius(i))},
                         {"hypersurfaces", hs}});
        lines.push_back("layer " + std::to_string(i) + ": rank " + std::to_string(p.rank(i)) +
                        "  mobius " + p.mobius(i).get_str() + "  on {" + text + "}");
    }
    lines.push_back("poincare: " + poin.to_string());
    lines.push_back("euler: " + duality.euler.get_str() + "  corank: " +
                    std::to_string(duality.corank));
    lines.push_back(std::string("duality constraints: betti positive ") +
                    (duality.constraints.betti_positive ? "yes" : "no") + ", b1 >= dim " +
                    (duality.constraints.b1_at_least_d ? "yes" : "no") + ", signed euler " +
                    (duality.constraints.signed_euler_ok ? "yes" : "no"));

    ordered_json report{{"schema", 1},
                        {"command", "toric"},
                        {"input", input},
                        {"ambient_dim", t.ambient_dim()},
                        {"hypersurfaces", t.size()},
                        {"layers", layers},
                        {"poincare", json_poly(poin)},
                        {"euler", json_int(duality.euler)},
                        {"corank", duality.corank},
                        {"duality",
                         ordered_json{{"betti_positive", duality.constraints.betti_positive},
                                      {"b1_at_least_d", duality.constraints.b1_at_least_d},
                                      {"signed_euler_ok", duality.constraints.signed_euler_ok},
                                      {"all", duality.constraints.all()}}}};
    emit(report, output, lines);
    return kExitOk;
}

int run_orbit(const OrbitConfigSpec& spec, bool cyclic, const std::string& output)
{
    validate_spec(spec);
    Integer euler = euler_orbit_config(spec);
    DualityClassification c = classify_duality(spec);
    SignedEulerReport consistency = signed_euler_consistency(spec);

    bool countable = spec.points <= kMaxOrbitPoints && spec.group_order <= kMaxGroupOrder &&
                     spec.punctures <= kMaxPunctures;
    ordered_json strata = nullptr;
    if (countable) strata = json_int(count_strata(spec));

    ordered_json report{
        {"schema", 1},
        {"command", "orbit"},
        {"spec",
         ordered_json{{"genus", spec.genus},
                      {"punctures", spec.punctures},
                      {"points", spec.points},
                      {"group_order", spec.group_order},
                      {"group", cyclic ? "cyclic" : "abstract"}}},
        {"strata", strata},
        {"euler", json_int(euler)},
        {"classification",
         ordered_json{{"duality", to_string(c.is_duality)},
                      {"abelian_duality", to_string(c.is_abelian_duality)},
                      {"dimension", c.dimension ? ordered_json(*c.dimension) : nullptr},
                      {"reason", c.reason}}},
        {"consistency",
         ordered_json{{"abelian_checked", consistency.abelian_checked},
                      {"abelian_sign_ok", consistency.abelian_sign_ok},
                      {"witness_checked", consistency.witness_checked},
                      {"witness_ok", consistency.witness_ok},
                      {"consistent", consistency.consistent()}}}};

    std::vector<std::string> lines;
    lines.push_back("orbit configuration: genus " + std::to_string(spec.genus) +
                    ", punctures " + std::to_string(spec.punctures) + ", points " +
                    std::to_string(spec.points) + ", group order " +
                    std::to_string(spec.group_order) + (cyclic ? " (cyclic)" : ""));
    lines.push_back("strata: " + (countable ? count_strata(spec).get_str()
                                            : std::string("not enumerated at this size")));
    lines.push_back("euler: " + euler.get_str());
    lines.push_back("duality: " + to_string(c.is_duality) + ", abelian: " +
                    to_string(c.is_abelian_duality) + ", dimension: " +
                    (c.dimension ? std::to_string(*c.dimension) : std::string("none")));
    lines.push_back("reason: " + c.reason);
    lines.push_back(std::string("consistent: ") +
                    (consistency.consistent() ? "yes" : "no"));
    emit(report, output, lines);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"combinatorial and cohomological invariants of arrangement complements"};
    app.require_subcommand(1);

    std::string input, output = "table", building = "minimal";
    SweepOptions sweep;
    long betti_prime = 101;
    int degree = 0;
    OrbitConfigSpec spec;
    bool cyclic = false;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", output, "report format")
            ->check(CLI::IsMember({"table", "json"}));
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "arrangement file")->required();
    };
    auto add_building = [&](CLI::App* cmd) {
        cmd->add_option("--building", building, "building set flavor")
            ->check(CLI::IsMember({"minimal", "maximal"}));
    };

    CLI::App* flats = app.add_subcommand("flats", "intersection poset and Moebius data");
    add_input(flats);
    add_output(flats);

    CLI::App* poincare = app.add_subcommand("poincare", "Poincare polynomial of the complement");
    add_input(poincare);
    add_output(poincare);

    CLI::App* nested = app.add_subcommand("nested", "nested set complex of a building set");
    add_input(nested);
    add_building(nested);
    add_output(nested);

    CLI::App* gamma = app.add_subcommand("gamma", "meridian classes of the building set divisors");
    add_input(gamma);
    add_building(gamma);
    add_output(gamma);

    CLI::App* betti = app.add_subcommand("betti", "untwisted Betti numbers from the CW model");
    add_input(betti);
    betti->add_option("--prime", betti_prime, "coefficient field modulus");
    add_output(betti);

    CLI::App* charvar =
        app.add_subcommand("charvar", "characteristic variety in a fixed degree");
    add_input(charvar);
    add_sweep_flags(charvar, sweep);
    charvar->add_option("--degree", degree, "cohomological degree")->required();
    add_output(charvar);

    CLI::App* propagate =
        app.add_subcommand("propagate", "check propagation of characteristic varieties");
    add_input(propagate);
    add_sweep_flags(propagate, sweep);
    add_output(propagate);

    CLI::App* vanish =
        app.add_subcommand("generic-vanish", "check vanishing for nonresonant characters");
    add_input(vanish);
    add_sweep_flags(vanish, sweep);
    add_output(vanish);

    CLI::App* toric = app.add_subcommand("toric", "layer poset and duality report");
    add_input(toric);
    add_output(toric);

    CLI::App* orbit = app.add_subcommand("orbit", "orbit configuration space report");
    orbit->add_option("--g", spec.genus, "genus")->required();
    orbit->add_option("--k", spec.punctures, "punctures")->required();
    orbit->add_option("--n", spec.points, "points")->required();
    orbit->add_option("--gamma", spec.group_order, "group order")->required();
    orbit->add_flag("--cyclic", cyclic, "interpret labels in the cyclic group");
    add_output(orbit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (flats->parsed()) return run_flats(input, output);
        if (poincare->parsed()) return run_poincare(input, output);
        if (nested->parsed()) return run_nested(input, building, output);
        if (gamma->parsed()) return run_gamma(input, building, output);
        if (betti->parsed()) return run_betti(input, betti_prime, output);
        if (charvar->parsed()) return run_charvar(input, sweep, degree, output);
        if (propagate->parsed()) return run_propagate(input, sweep, output);
        if (vanish->parsed()) return run_generic_vanish(input, sweep, output);
        if (toric->parsed()) return run_toric(input, output);
        if (orbit->parsed()) return run_orbit(spec, cyclic, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << input << (input.empty() ? "" : ": ") << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
