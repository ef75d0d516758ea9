#include "runner.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <sstream>

#include "examples.hpp"
#include "pstrata/weyl.hpp"

namespace pstrata::cli {

namespace {

struct Globals {
    std::string input;
    std::string output;
    std::string format = "json";
    long degree_bound = 6;
    int max_iters = 32;
    int headroom = 4;
    long budget = 1'000'000;
    long budget_degree = 40;
    int threads = 1;
    unsigned seed = 1;
};

Json load_input(const Globals& g, const std::optional<Json>& inline_input) {
    if (inline_input) return *inline_input;
    if (g.input.empty())
        throw Error(ErrCode::domain, "this command needs --input (or inline example input)");
    std::ifstream in(g.input);
    if (!in) throw Error(ErrCode::domain, "cannot open input file '" + g.input + "'");
    Json j;
    in >> j;
    return j;
}

Json fiber_invariants_json(const FiberInvariants& inv) {
    return Json{{"total", inv.total},
                {"center", inv.center},
                {"radical", inv.radical},
                {"semisimple", inv.semisimple}};
}

Json validation_json(const ValidationReport& rep) {
    return Json{{"valid", rep.valid()},
                {"skew_ok", rep.skew_ok},
                {"jacobi_ok", rep.jacobi_ok},
                {"relations_stable", rep.relations_stable},
                {"issues", rep.issues}};
}

std::vector<WordToken> parse_word(const std::string& text, const RingPtr& letters) {
    std::vector<WordToken> word;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        int idx = letters->variable_index(cur);
        if (idx < 0) throw Error(ErrCode::unknown_variable, "unknown letter '" + cur + "'");
        word.push_back({true, idx});
        cur.clear();
    };
    for (char c : text) {
        if (c == '*' || std::isspace(static_cast<unsigned char>(c))) flush();
        else cur += c;
    }
    flush();
    return word;
}

std::shared_ptr<SRAEngine> engine_from(const Globals& g, const std::optional<Json>& inline_input,
                                       const std::string& group_name, const std::string& t_str,
                                       const std::string& c_str, bool corrupt,
                                       std::shared_ptr<SRAEngine>* formal_out = nullptr) {
    SraSpec spec;
    if (!group_name.empty()) {
        spec.group = builtin_group(group_name);
        const FieldPtr& f = spec.group->field();
        if (t_str == "formal" || t_str == "T")
            spec.t = std::nullopt;
        else
            spec.t = parse_field_elem(t_str.empty() ? "0" : t_str, f);
        auto refl = symplectic_reflections(*spec.group);
        FieldElem cval = parse_field_elem(c_str.empty() ? "0" : c_str, f);
        for (size_t cls = 0; cls < refl.classes.size(); ++cls)
            spec.c[static_cast<int>(cls)] = cval;
    } else {
        spec = sra_from_json(load_input(g, inline_input));
    }
    if (formal_out)
        *formal_out = SRAEngine::build(spec.group, std::nullopt, spec.c, corrupt);
    return SRAEngine::build(spec.group, spec.t, spec.c, corrupt);
}

Json strata_json(const InvariantPresentation& pres, const std::vector<Stratum>& strata) {
    Json arr = Json::array();
    for (const auto& s : strata) {
        arr.push_back(Json{{"subgroup_order", s.subgroup.representative.size()},
                           {"class_size", s.subgroup.class_size},
                           {"dim_fixed_space", s.dim_fixed},
                           {"IH", ideal_json(s.IH)},
                           {"JH", ideal_json(s.JH)}});
    }
    return Json{{"presentation",
                 Json{{"variables", pres.pres_ring->variables()},
                      {"generators", poly_list_json(pres.generators)},
                      {"relations", ideal_json(pres.relations)}}},
                {"strata", arr}};
}

} // namespace

RunResult run_tool(const std::vector<std::string>& args, const std::optional<Json>& inline_input) {
    RunResult rr;
    Globals g;

    CLI::App app{"exact Poisson-order toolkit"};
    app.require_subcommand(0);
    app.fallthrough();
    app.add_option("--input", g.input, "input JSON file");
    app.add_option("--output", g.output, "write the report here instead of stdout");
    app.add_option("--format", g.format, "json|md|csv")->check(CLI::IsMember({"json", "md", "csv"}));
    app.add_option("--degree-bound", g.degree_bound, "degree bound for searches");
    app.add_option("--max-iters", g.max_iters, "poisson core iteration cap");
    app.add_option("--headroom", g.headroom, "poisson core truncation headroom");
    app.add_option("--budget", g.budget, "Groebner reduction budget");
    app.add_option("--budget-degree", g.budget_degree, "Groebner degree budget");
    app.add_option("--threads", g.threads, "worker threads (results are thread-count independent)");
    app.add_option("--seed", g.seed, "seed for sample-point selection");

    // ---- poisson
    auto* poisson = app.add_subcommand("poisson", "Poisson structures on presented algebras");
    std::string opt_point, opt_point2, opt_f, opt_g, opt_ideal;
    auto* p_validate = poisson->add_subcommand("validate", "skew/Jacobi/stability report");
    p_validate->add_option("--ideal", opt_ideal, "also test this ideal (comma-separated generators)");
    auto* p_bracket = poisson->add_subcommand("bracket", "{f,g} reduced modulo relations");
    p_bracket->add_option("--f", opt_f)->required();
    p_bracket->add_option("--g", opt_g)->required();
    auto* p_core = poisson->add_subcommand("core", "Poisson core of the maximal ideal at a point");
    p_core->add_option("--point", opt_point)->required();
    auto* p_casimirs = poisson->add_subcommand("casimirs", "degree-bounded Casimir basis");
    auto* p_rank = poisson->add_subcommand("rank", "bracket-matrix rank at a point");
    p_rank->add_option("--point", opt_point)->required();
    auto* p_strata = poisson->add_subcommand("strata", "rank stratum ideals");
    auto* p_same = poisson->add_subcommand("same-core", "do two points share a Poisson core");
    p_same->add_option("--point", opt_point)->required();
    p_same->add_option("--point2", opt_point2)->required();

    // ---- group
    auto* group = app.add_subcommand("group", "finite matrix groups");
    long opt_cap = 10000;
    auto* g_closure = group->add_subcommand("closure", "orbit closure of the generators");
    g_closure->add_option("--cap", opt_cap);
    auto* g_refl = group->add_subcommand("reflections", "symplectic reflections and classes");
    auto* g_inv = group->add_subcommand("invariants", "invariant ring presentation");
    auto* g_subs = group->add_subcommand("subgroups", "subgroup conjugacy classes");
    g_subs->add_option("--cap", opt_cap);

    // ---- vgamma
    auto* vg = app.add_subcommand("vgamma", "stratification of V/Gamma");
    int opt_samples = 5;
    bool opt_no_cores = false, opt_fibers = false;
    auto* v_strata = vg->add_subcommand("strata", "stabilizer strata, I(H), J(H)");
    auto* v_verify = vg->add_subcommand("verify", "leaf claims at sampled points");
    v_verify->add_option("--samples", opt_samples);
    v_verify->add_flag("--no-cores", opt_no_cores, "skip the Poisson core comparisons");
    v_verify->add_flag("--fibers", opt_fibers,
                       "also record skew-fiber invariant tuples at the sampled points");
    auto* v_fiber = vg->add_subcommand("fiber", "skew group algebra fiber at pi(point)");
    v_fiber->add_option("--point", opt_point)->required();

    // ---- weyl
    auto* weyl = app.add_subcommand("weyl", "Weyl group censuses");
    std::string opt_type;
    int opt_rank = 0;
    auto* w_census = weyl->add_subcommand("census", "parabolic vs eigenvalue census");
    w_census->add_option("--type", opt_type, "A|B|C|D|G2|F4 or a full label like A2xA1")
        ->required();
    w_census->add_option("--rank", opt_rank);

    // ---- sra
    auto* sra = app.add_subcommand("sra", "symplectic reflection algebras");
    std::string opt_group, opt_t = "0", opt_c = "0", opt_z1, opt_z2;
    int opt_degree = 2;
    bool opt_corrupt = false;
    sra->add_option("--group", opt_group, "builtin group name (1, z2..z6, weylA2, ...)");
    sra->add_option("--t", opt_t, "0|1|rational|formal");
    sra->add_option("--c", opt_c, "scalar class function value");
    auto* s_pbw = sra->add_subcommand("pbw", "PBW dimension/confluence certification");
    s_pbw->add_option("--degree", opt_degree)->required();
    s_pbw->add_flag("--corrupt", opt_corrupt, "negative control: sign-corrupted rewriting");
    auto* s_center = sra->add_subcommand("center", "degree-bounded centre basis");
    s_center->add_option("--degree", opt_degree)->required();
    auto* s_qb = sra->add_subcommand("qbracket", "quantized bracket of two central words");
    s_qb->add_option("--z1", opt_z1)->required();
    s_qb->add_option("--z2", opt_z2)->required();
    auto* s_pres = sra->add_subcommand("presentation", "centre presentation with brackets");
    s_pres->add_option("--degree", opt_degree)->required();
    auto* s_fiber = sra->add_subcommand("fiber", "fiber of A_c at a centre point");
    s_fiber->add_option("--degree", opt_degree)->required();
    s_fiber->add_option("--point", opt_point)->required();

    // ---- examples
    auto* ex = app.add_subcommand("examples", "built-in worked examples");
    std::string opt_name;
    auto* e_list = ex->add_subcommand("list", "registered example names");
    auto* e_run = ex->add_subcommand("run", "run one example and diff the expectation");
    e_run->add_option("name", opt_name)->required();
    auto* e_all = ex->add_subcommand("run-all", "run every example");

    std::vector<std::string> argv = args;
    std::vector<const char*> cargv;
    cargv.push_back("pstrata");
    for (const auto& a : argv) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        rr.report = Json{{"schema", kSchema}, {"help", app.help()}};
        rr.exit_code = 0;
        return rr;
    } catch (const CLI::ParseError& e) {
        rr.report = Json{{"schema", kSchema},
                         {"error", Json{{"code", "usage"}, {"message", e.what()}}}};
        rr.exit_code = 2;
        return rr;
    }

    rr.format = g.format;
    rr.output_path = g.output;
    set_default_budget({g.budget, g.budget_degree});

    Json result;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (p_validate->parsed()) {
            PoissonStructure P = poisson_from_json(load_input(g, inline_input));
            result = validation_json(P.validate());
            if (!opt_ideal.empty()) {
                std::vector<Poly> gens;
                std::string cur;
                for (char c : opt_ideal + ",") {
                    if (c == ',') {
                        if (!cur.empty()) gens.push_back(parse_poly(cur, P.ring()));
                        cur.clear();
                    } else
                        cur += c;
                }
                result["ideal_poisson"] = is_poisson_ideal(P, Ideal(P.ring(), gens));
            }
        } else if (p_bracket->parsed()) {
            PoissonStructure P = poisson_from_json(load_input(g, inline_input));
            P.ensure_valid();
            result = Json{{"bracket",
                           P.bracket(parse_poly(opt_f, P.ring()), parse_poly(opt_g, P.ring())).str()}};
        } else if (p_core->parsed()) {
            PoissonStructure P = poisson_from_json(load_input(g, inline_input));
            P.ensure_valid();
            auto pt = point_from_string(opt_point, P.ring()->field());
            CoreResult res = poisson_core(P, P.point_ideal(pt), g.max_iters, g.headroom);
            result = Json{{"core", ideal_json(res.core)},
                          {"certified", res.certified},
                          {"iterations", res.iterations}};
        } else if (p_casimirs->parsed()) {
            PoissonStructure P = poisson_from_json(load_input(g, inline_input));
            P.ensure_valid();
            result = Json{{"degree_bound", g.degree_bound},
                          {"basis", poly_list_json(casimirs(P, g.degree_bound))}};
        } else if (p_rank->parsed()) {
            PoissonStructure P = poisson_from_json(load_input(g, inline_input));
            P.ensure_valid();
            auto pt = point_from_string(opt_point, P.ring()->field());
            result = Json{{"rank", rank_at_point(P, pt)}};
        } else if (p_strata->parsed()) {
            PoissonStructure P = poisson_from_json(load_input(g, inline_input));
            P.ensure_valid();
            Json arr = Json::array();
            for (const auto& [j, ideal] : rank_stratum_ideals(P))
                arr.push_back(Json{{"rank", j}, {"ideal", ideal_json(ideal)}});
            result = Json{{"strata", arr}};
        } else if (p_same->parsed()) {
            PoissonStructure P = poisson_from_json(load_input(g, inline_input));
            P.ensure_valid();
            auto p1 = point_from_string(opt_point, P.ring()->field());
            auto p2 = point_from_string(opt_point2, P.ring()->field());
            Tri r = same_core(P, p1, p2, g.max_iters, g.headroom);
            result = Json{{"same_core", r == Tri::yes          ? "true"
                                        : r == Tri::no         ? "false"
                                                               : "indeterminate"}};
        } else if (g_closure->parsed()) {
            auto G = group_from_json(load_input(g, inline_input));
            result = Json{{"order", G->order()}, {"dimension", G->dim()}};
            if (G->order() <= 64) {
                Json elems = Json::array();
                for (const auto& e : G->elements()) elems.push_back(matrix_to_json(e));
                result["elements"] = elems;
            }
        } else if (g_refl->parsed()) {
            auto G = group_from_json(load_input(g, inline_input));
            auto data = symplectic_reflections(*G);
            Json refl = Json::array();
            for (const auto& r : data.reflections)
                refl.push_back(Json{{"element", r.elem},
                                    {"class", r.conj_class},
                                    {"omega_s", matrix_to_json(r.omega_s)}});
            result = Json{{"count", data.reflections.size()},
                          {"classes", data.classes},
                          {"reflections", refl}};
        } else if (g_inv->parsed()) {
            auto G = group_from_json(load_input(g, inline_input));
            auto pres = invariant_generators(*G);
            Json molien = Json::array();
            for (const auto& q : pres.molien) molien.push_back(rat_str(q));
            result = Json{{"variables", pres.pres_ring->variables()},
                          {"generators", poly_list_json(pres.generators)},
                          {"degrees", pres.degrees},
                          {"relations", ideal_json(pres.relations)},
                          {"molien", molien}};
        } else if (g_subs->parsed()) {
            auto G = group_from_json(load_input(g, inline_input));
            Json arr = Json::array();
            for (const auto& c : subgroup_conjugacy_classes(*G, opt_cap))
                arr.push_back(Json{{"order", c.representative.size()},
                                   {"class_size", c.class_size},
                                   {"representative", c.representative}});
            result = Json{{"classes", arr}};
        } else if (v_strata->parsed()) {
            auto G = group_from_json(load_input(g, inline_input));
            auto pres = invariant_generators(*G);
            result = strata_json(pres, stabilizer_strata(*G, pres));
        } else if (v_verify->parsed()) {
            auto G = group_from_json(load_input(g, inline_input));
            auto pres = invariant_generators(*G);
            auto strata = stabilizer_strata(*G, pres);
            auto rep = verify_leaf_claims(*G, pres, strata, opt_samples, g.seed, !opt_no_cores,
                                          g.threads, opt_fibers);
            Json arr = Json::array();
            for (size_t i = 0; i < rep.strata.size(); ++i) {
                const auto& c = rep.strata[i];
                Json e{{"subgroup", c.subgroup_label},
                       {"dim_fixed_space", c.dim_fixed},
                       {"IH", ideal_json(strata[i].IH)},
                       {"JH", ideal_json(strata[i].JH)},
                       {"j_poisson", c.j_poisson},
                       {"ranks", c.ranks},
                       {"rank_ok", c.rank_ok}};
                if (rep.cores_checked)
                    e["cores_within"] = c.cores_within == Tri::yes          ? "true"
                                        : c.cores_within == Tri::no         ? "false"
                                                                            : "indeterminate";
                if (opt_fibers) {
                    Json fp = Json::array();
                    for (const auto& inv : c.fiber_profiles)
                        fp.push_back(fiber_invariants_json(inv));
                    e["fiber_invariants"] = fp;
                    e["fibers_constant"] = c.fibers_constant;
                }
                arr.push_back(std::move(e));
            }
            result = Json{{"strata", arr},
                          {"cores_checked", rep.cores_checked},
                          {"cross_cores_ok", rep.cross_cores_ok},
                          {"indeterminate_pairs", rep.indeterminate_pairs},
                          {"all_ok", rep.all_ok}};
        } else if (v_fiber->parsed()) {
            auto G = group_from_json(load_input(g, inline_input));
            auto pres = invariant_generators(*G);
            auto pt = point_from_string(opt_point, G->field());
            auto F = skew_fiber(*G, pres, pt);
            result = Json{{"dimension", F.dim},
                          {"associative", F.is_associative()},
                          {"unital", F.has_unit()},
                          {"invariants", fiber_invariants_json(fiber_invariants(F))}};
        } else if (w_census->parsed()) {
            std::string label = opt_type;
            if (opt_rank > 0 && label.size() == 1) label += std::to_string(opt_rank);
            auto W = build_weyl(root_system(label));
            auto tab = compare_census(W);
            Json rows = Json::array();
            for (const auto& r : tab.rows)
                rows.push_back(Json{{"k", r.k},
                                    {"eigenvalue_one_multiplicity", tab.rank - r.k},
                                    {"p_k", r.parabolic_classes},
                                    {"e_k", r.element_classes},
                                    {"equal", r.equal}});
            result = Json{{"type", tab.label},
                          {"rank", tab.rank},
                          {"order", W.group.order()},
                          {"table", rows},
                          {"agree", tab.agree},
                          {"parabolic_classes_total", tab.total_parabolic_classes},
                          {"element_classes_total", tab.total_element_classes}};
        } else if (s_pbw->parsed()) {
            auto E = engine_from(g, inline_input, opt_group, opt_t, opt_c, opt_corrupt);
            auto rep = pbw_dimension_check(*E, opt_degree);
            Json rows = Json::array();
            std::vector<long> dims;
            for (const auto& r : rep.rows) {
                rows.push_back(Json{{"degree", r.degree},
                                    {"expected", r.expected},
                                    {"dim", r.dim},
                                    {"consistent", r.consistent}});
                dims.push_back(r.dim);
            }
            result = Json{{"dims", dims},
                          {"rows", rows},
                          {"pass", rep.pass},
                          {"first_failure_degree", rep.first_failure_degree}};
        } else if (s_center->parsed()) {
            auto E = engine_from(g, inline_input, opt_group, opt_t, opt_c, false);
            auto cb = center_basis(*E, opt_degree);
            Json arr = Json::array();
            for (const auto& z : cb) arr.push_back(E->describe(z));
            result = Json{{"degree", opt_degree}, {"dimension", cb.size()}, {"basis", arr}};
        } else if (s_qb->parsed()) {
            std::shared_ptr<SRAEngine> formal;
            auto E = engine_from(g, inline_input, opt_group, "0", opt_c, false, &formal);
            RingPtr letters = default_ov_ring(E->group());
            auto z1 = E->normal_form(parse_word(opt_z1, letters));
            auto z2 = E->normal_form(parse_word(opt_z2, letters));
            auto qb = quantized_bracket(*formal, *E, z1, z2);
            result = Json{{"bracket", E->describe(qb.value)},
                          {"central_certified", qb.central_certified}};
        } else if (s_pres->parsed()) {
            std::shared_ptr<SRAEngine> formal;
            auto E = engine_from(g, inline_input, opt_group, "0", opt_c, false, &formal);
            auto cp = center_presentation(*E, *formal, opt_degree);
            Json gens = Json::array();
            for (const auto& ge : cp.generators) gens.push_back(E->describe(ge));
            Json brackets = Json::array();
            int k = static_cast<int>(cp.generators.size());
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    brackets.push_back(Json{{"i", i}, {"j", j},
                                            {"bracket", cp.bracket_matrix[i][j].str()}});
            auto st = cp.structure();
            result = Json{{"variables", cp.pres_ring->variables()},
                          {"generators", gens},
                          {"symbols", poly_list_json(cp.symbols)},
                          {"relations", ideal_json(cp.relations)},
                          {"brackets", brackets},
                          {"generation_certified", cp.generation_certified},
                          {"structure_valid", st.validate().valid()}};
        } else if (s_fiber->parsed()) {
            std::shared_ptr<SRAEngine> formal;
            auto E = engine_from(g, inline_input, opt_group, "0", opt_c, false, &formal);
            auto cp = center_presentation(*E, *formal, opt_degree);
            auto pt = point_from_string(opt_point, E->field());
            auto F = sra_fiber(*E, cp, pt);
            result = Json{{"dimension", F.dim},
                          {"invariants", fiber_invariants_json(fiber_invariants(F))}};
        } else if (e_list->parsed()) {
            Json arr = Json::array();
            for (const auto& e : example_registry())
                arr.push_back(Json{{"name", e.name}, {"about", e.about}});
            result = Json{{"count", arr.size()}, {"examples", arr}};
        } else if (e_run->parsed()) {
            result = run_example(opt_name);
            if (!result.value("pass", false)) rr.exit_code = 1;
        } else if (e_all->parsed()) {
            Json arr = Json::array();
            bool all = true;
            for (const auto& e : example_registry()) {
                Json r = run_example(e.name);
                if (!r.value("pass", false)) all = false;
                arr.push_back(std::move(r));
            }
            result = Json{{"all_pass", all}, {"runs", arr}};
            if (!all) rr.exit_code = 1;
        } else {
            rr.report = Json{{"schema", kSchema}, {"help", app.help()}};
            rr.exit_code = 2;
            return rr;
        }
    } catch (const Error& e) {
        Json err{{"code", err_code_name(e.code())}, {"message", e.what()}};
        if (e.position() >= 0) err["position"] = e.position();
        rr.report = Json{{"schema", kSchema}, {"command", args}, {"error", err}};
        rr.exit_code = 1;
        return rr;
    } catch (const std::exception& e) {
        rr.report = Json{{"schema", kSchema}, {"command", args},
                         {"error", Json{{"code", "internal"}, {"message", e.what()}}}};
        rr.exit_code = 1;
        return rr;
    }
    auto t1 = std::chrono::steady_clock::now();

    rr.report = Json{{"schema", kSchema},
                     {"version", kVersion},
                     {"command", args},
                     {"seed", g.seed},
                     {"threads", g.threads},
                     {"result", result},
                     {"timing", Json{{"seconds", std::chrono::duration<double>(t1 - t0).count()}}}};
    return rr;
}

namespace {

void render_md(const Json& j, std::ostream& os, int depth) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_array() && !it.value().empty() && it.value()[0].is_object()) {
                // table
                os << std::string(depth, '#') << (depth ? " " : "") << it.key() << "\n\n";
                const Json& first = it.value()[0];
                os << "|";
                for (auto c = first.begin(); c != first.end(); ++c) os << " " << c.key() << " |";
                os << "\n|";
                for (auto c = first.begin(); c != first.end(); ++c) os << "---|";
                os << "\n";
                for (const auto& row : it.value()) {
                    os << "|";
                    for (auto c = row.begin(); c != row.end(); ++c)
                        os << " " << (c.value().is_string() ? c.value().get<std::string>()
                                                            : c.value().dump())
                           << " |";
                    os << "\n";
                }
                os << "\n";
            } else if (it.value().is_object()) {
                os << "- " << it.key() << ":\n";
                render_md(it.value(), os, depth + 1);
            } else {
                os << "- " << it.key() << ": "
                   << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                   << "\n";
            }
        }
    } else {
        os << j.dump() << "\n";
    }
}

void render_csv(const Json& j, std::ostream& os) {
    // first array-of-objects member becomes the CSV body
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_array() && !it.value().empty() && it.value()[0].is_object()) {
            const Json& first = it.value()[0];
            bool head = false;
            for (auto c = first.begin(); c != first.end(); ++c) {
                if (head) os << ",";
                os << c.key();
                head = true;
            }
            os << "\n";
            for (const auto& row : it.value()) {
                bool cell = false;
                for (auto c = row.begin(); c != row.end(); ++c) {
                    if (cell) os << ",";
                    os << (c.value().is_string() ? c.value().get<std::string>() : c.value().dump());
                    cell = true;
                }
                os << "\n";
            }
            return;
        }
    }
    throw Error(ErrCode::domain, "csv output needs a tabular result");
}

} // namespace

std::string render_report(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    std::ostringstream os;
    if (report.contains("error")) {
        os << "error: " << report["error"].dump(2) << "\n";
        return os.str();
    }
    const Json& body = report.contains("result") ? report["result"] : report;
    if (format == "md") {
        render_md(body, os, 0);
        return os.str();
    }
    render_csv(body, os);
    return os.str();
}

} // namespace pstrata::cli
