#include "examples.hpp"

#include "runner.hpp"

namespace pstrata::cli {

namespace {

Json dm_structure() {
    // C[x,y,z] with {x,y} = 0, {x,z} = x, {y,z} = y
    return Json{{"field", "Q"},
                {"variables", {"x", "y", "z"}},
                {"relations", Json::array()},
                {"bracket", Json::array({Json::array({"0", "x"}), Json::array({"y"}),
                                         Json::array()})}};
}

Json alpha_structure() {
    // the alpha = -1 member of the family {x,z} = alpha*x, {y,z} = y
    return Json{{"field", "Q"},
                {"variables", {"x", "y", "z"}},
                {"relations", Json::array()},
                {"bracket", Json::array({Json::array({"0", "-x"}), Json::array({"y"}),
                                         Json::array()})}};
}

Json z2_group() {
    return Json{{"field", "Q"},
                {"dimension", 2},
                {"generators", Json::array({Json::array(
                                   {Json::array({-1, 0}), Json::array({0, -1})})})}};
}

std::vector<ExampleRecord> build_registry() {
    std::vector<ExampleRecord> ex;

    ex.push_back({"dixmier-moeglin-remark",
                  "Poisson-prime membership for C[x,y,z] with {x,z}=x, {y,z}=y: the pencil "
                  "ideal <x - 2y> is Poisson",
                  {"poisson", "validate", "--ideal", "x - 2*y"},
                  dm_structure(),
                  Json{{"valid", true}, {"ideal_poisson", true}}});

    ex.push_back({"dixmier-moeglin-casimirs",
                  "the same structure has no non-scalar Casimirs up to degree 6",
                  {"poisson", "casimirs", "--degree-bound", "6"},
                  dm_structure(),
                  Json{{"basis", Json::array({"1"})}}});

    ex.push_back({"poisson-core-remark",
                  "certified Poisson core <x - y> of the maximal ideal at (1,1,0)",
                  {"poisson", "core", "--point", "1,1,0"},
                  dm_structure(),
                  Json{{"core", Json::array({"x - y"})}, {"certified", true}}});

    ex.push_back({"alpha-leaves-rational",
                  "alpha = -1 leaf family x*y = C: certified core <x*y - 6> at (2,3,1)",
                  {"poisson", "core", "--point", "2,3,1"},
                  alpha_structure(),
                  Json{{"core", Json::array({"x*y - 6"})}, {"certified", true}}});

    ex.push_back({"alpha-casimir",
                  "alpha = -1: x*y is a degree-2 Casimir",
                  {"poisson", "casimirs", "--degree-bound", "2"},
                  alpha_structure(),
                  Json{{"basis", Json::array({"1", "x*y"})}}});

    ex.push_back({"kleinian-z2-strata",
                  "V/{+-1} on C^2: invariants A=x^2, B=xy, C=y^2 cut the Kleinian cone; two "
                  "stabilizer strata with J(Gamma) the irrelevant ideal",
                  {"vgamma", "strata"},
                  z2_group(),
                  Json{{"presentation",
                        Json{{"generators", Json::array({"x^2", "x*y", "y^2"})},
                             {"relations", Json::array({"B^2 - A*C"})}}},
                       {"strata",
                        Json::array(
                            {Json{{"subgroup_order", 1},
                                  {"dim_fixed_space", 2},
                                  {"JH", Json::array({"B^2 - A*C"})}},
                             Json{{"subgroup_order", 2},
                                  {"dim_fixed_space", 0},
                                  {"JH", Json::array({"C", "B", "A"})}}})}}});

    ex.push_back({"kleinian-z2-fiber-generic",
                  "skew group algebra fiber over a smooth point of the cone: a 2x2 matrix "
                  "algebra profile",
                  {"vgamma", "fiber", "--point", "1,2"},
                  z2_group(),
                  Json{{"dimension", 4},
                       {"invariants", Json{{"total", 4}, {"center", 1}, {"radical", 0},
                                           {"semisimple", 4}}}}});

    ex.push_back({"kleinian-z2-fiber-origin",
                  "fiber at the cone point: dimension 6 with radical of dimension 4",
                  {"vgamma", "fiber", "--point", "0,0"},
                  z2_group(),
                  Json{{"dimension", 6},
                       {"invariants", Json{{"total", 6}, {"center", 1}, {"radical", 4},
                                           {"semisimple", 2}}}}});

    ex.push_back({"weyl-census-a2",
                  "type A2: parabolic census equals the eigenvalue census",
                  {"weyl", "census", "--type", "A", "--rank", "2"},
                  std::nullopt,
                  Json{{"agree", true},
                       {"table", Json::array({Json{{"k", 0}, {"p_k", 1}, {"e_k", 1}},
                                              Json{{"k", 1}, {"p_k", 1}, {"e_k", 1}},
                                              Json{{"k", 2}, {"p_k", 1}, {"e_k", 1}}})}}});

    ex.push_back({"weyl-census-b2",
                  "type B2: the censuses disagree exactly at k = 2 (p=1, e=2)",
                  {"weyl", "census", "--type", "B", "--rank", "2"},
                  std::nullopt,
                  Json{{"agree", false},
                       {"table", Json::array({Json{{"k", 0}, {"p_k", 1}, {"e_k", 1}},
                                              Json{{"k", 1}, {"p_k", 2}, {"e_k", 2}},
                                              Json{{"k", 2}, {"p_k", 1}, {"e_k", 2}}})}}});

    ex.push_back({"sra-pbw-z2",
                  "PBW dimension table for the Z/2 algebra at t=0, c=1",
                  {"sra", "pbw", "--group", "z2", "--t", "0", "--c", "1", "--degree", "2"},
                  std::nullopt,
                  Json{{"dims", Json::array({2, 6, 12})}, {"pass", true}}});

    ex.push_back({"sra-weyl-center",
                  "the Weyl algebra (t=1) has trivial centre through degree 4",
                  {"sra", "center", "--group", "1", "--t", "1", "--degree", "4"},
                  std::nullopt,
                  Json{{"dimension", 1}, {"basis", Json::array({"(1)"})}}});

    ex.push_back({"sra-quantized-weyl",
                  "quantized bracket recovers the symplectic form: {x,y} = 1",
                  {"sra", "qbracket", "--group", "1", "--z1", "x", "--z2", "y"},
                  std::nullopt,
                  Json{{"bracket", "(1)"}, {"central_certified", true}}});

    ex.push_back({"sra-deformed-center-z2",
                  "centre presentation of the deformed Kleinian cone: C^2 - 4AB - c^2 = 0 "
                  "at c = 1, with a valid degree -2 Poisson structure",
                  {"sra", "presentation", "--group", "z2", "--c", "1", "--degree", "2"},
                  std::nullopt,
                  Json{{"relations", Json::array({"A*B - 1/4*C^2 + 1/4"})},
                       {"generation_certified", true},
                       {"structure_valid", true}}});

    ex.push_back({"sra-deformed-center-z4",
                  "the Z/4 family over Q(zeta_4): deformed A3 cone "
                  "A^4 - 10A^2 - 16BC + 9 = 0 with generators xy+yx (plus group "
                  "corrections), x^4, y^4",
                  {"sra", "presentation", "--group", "z4", "--c", "1", "--degree", "4"},
                  std::nullopt,
                  Json{{"symbols", Json::array({"2*x*y", "x^4", "y^4"})},
                       {"relations", Json::array({"A^4 - 10*A^2 - 16*B*C + 9"})},
                       {"generation_certified", true},
                       {"structure_valid", true}}});

    ex.push_back({"sra-pbw-negative-control",
                  "a sign-corrupted rewriting rule collapses the PBW dimension table at "
                  "degree 3",
                  {"sra", "pbw", "--group", "z2", "--t", "0", "--c", "1", "--degree", "3",
                   "--corrupt"},
                  std::nullopt,
                  Json{{"pass", false}, {"first_failure_degree", 3}}});

    return ex;
}

// every leaf of `expected` must match `actual` exactly
void diff_fragment(const Json& expected, const Json& actual, const std::string& path,
                   std::vector<std::string>& out) {
    if (expected.is_object()) {
        if (!actual.is_object()) {
            out.push_back(path + ": expected an object, got " + actual.dump());
            return;
        }
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            if (!actual.contains(it.key())) {
                out.push_back(path + "/" + it.key() + ": missing");
                continue;
            }
            diff_fragment(it.value(), actual.at(it.key()), path + "/" + it.key(), out);
        }
        return;
    }
    if (expected.is_array()) {
        if (!actual.is_array() || actual.size() != expected.size()) {
            out.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
            return;
        }
        for (size_t i = 0; i < expected.size(); ++i)
            diff_fragment(expected[i], actual[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    if (expected != actual)
        out.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
}

} // namespace

const std::vector<ExampleRecord>& example_registry() {
    static const std::vector<ExampleRecord> registry = build_registry();
    return registry;
}

Json run_example(const std::string& name) {
    const ExampleRecord* rec = nullptr;
    for (const auto& e : example_registry())
        if (e.name == name) rec = &e;
    if (!rec) throw Error(ErrCode::domain, "no example named '" + name + "'");

    RunResult rr = run_tool(rec->args, rec->input);
    Json out{{"name", rec->name}, {"about", rec->about}};
    std::vector<std::string> mismatches;
    if (rr.report.contains("error")) {
        mismatches.push_back("command failed: " + rr.report["error"].dump());
        out["result"] = rr.report["error"];
    } else {
        diff_fragment(rec->expected, rr.report["result"], "", mismatches);
        out["result"] = rr.report["result"];
    }
    out["pass"] = mismatches.empty();
    out["mismatches"] = mismatches;
    return out;
}

} // namespace pstrata::cli
