#include "pstrata/json_io.hpp"

#include "pstrata/weyl.hpp"

namespace pstrata {

FieldPtr field_from_json(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Q" || s == "rationals") return ExactField::rationals();
        throw Error(ErrCode::domain, "unknown field '" + s + "'");
    }
    if (j.is_object() && j.contains("cyclotomic"))
        return ExactField::cyclotomic(j.at("cyclotomic").get<int>());
    throw Error(ErrCode::domain, "field must be \"Q\" or {\"cyclotomic\": n}");
}

Json field_to_json(const FieldPtr& f) {
    if (f->is_rational()) return "Q";
    return Json{{"cyclotomic", f->cyclotomic_order()}};
}

namespace {

FieldElem entry_from_json(const Json& j, const FieldPtr& f) {
    if (j.is_number_integer()) return FieldElem(f, Rat(j.get<long>()));
    if (j.is_string()) return parse_field_elem(j.get<std::string>(), f);
    throw Error(ErrCode::domain, "matrix entries must be integers or strings");
}

} // namespace

Mat matrix_from_json(const Json& rows, const FieldPtr& f) {
    if (!rows.is_array() || rows.empty())
        throw Error(ErrCode::domain, "matrix must be a nonempty array of rows");
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw Error(ErrCode::domain, "ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = entry_from_json(rows[i][j], f);
    }
    return m;
}

Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

PoissonStructure poisson_from_json(const Json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    RingPtr ring = PolyRing::make(f, vars);
    std::vector<Poly> rel;
    if (j.contains("relations"))
        for (const auto& s : j.at("relations")) rel.push_back(parse_poly(s.get<std::string>(), ring));
    int m = ring->nvars();
    const Json& br = j.at("bracket");
    std::vector<std::vector<Poly>> b(m, std::vector<Poly>(m, Poly(ring)));
    if (!br.is_array() || static_cast<int>(br.size()) != m)
        throw Error(ErrCode::domain, "bracket must have one row per variable");
    for (int i = 0; i < m; ++i) {
        const Json& row = br[i];
        // full row, or the strict upper triangle (m - 1 - i entries)
        if (static_cast<int>(row.size()) == m) {
            for (int k = 0; k < m; ++k) b[i][k] = parse_poly(row[k].get<std::string>(), ring);
        } else if (static_cast<int>(row.size()) == m - 1 - i) {
            for (int k = i + 1; k < m; ++k)
                b[i][k] = parse_poly(row[k - i - 1].get<std::string>(), ring);
        } else {
            throw Error(ErrCode::domain, "bracket row " + std::to_string(i) +
                                             " must have m or m-1-i entries");
        }
    }
    return PoissonStructure::make(ring, Ideal(ring, std::move(rel)), std::move(b));
}

std::shared_ptr<MatrixGroup> group_from_json(const Json& j) {
    if (j.is_string()) return builtin_group(j.get<std::string>());
    FieldPtr f = field_from_json(j.at("field"));
    int dim = j.at("dimension").get<int>();
    std::vector<Mat> gens;
    for (const auto& g : j.at("generators")) {
        Mat m = matrix_from_json(g, f);
        if (m.rows() != dim || m.cols() != dim)
            throw Error(ErrCode::domain, "generator has wrong dimension");
        gens.push_back(std::move(m));
    }
    long cap = j.value("cap", 10000L);
    auto G = std::make_shared<MatrixGroup>(MatrixGroup::closure(gens, cap));
    if (j.contains("symplectic_form")) {
        G->set_symplectic_form(matrix_from_json(j.at("symplectic_form"), f));
        if (!G->preserves_form())
            throw Error(ErrCode::domain, "group does not preserve the given symplectic form");
    } else if (dim % 2 == 0) {
        G->set_standard_symplectic_form();
        if (!G->preserves_form()) {
            // group is not symplectic for the default form; leave it unset
            *G = MatrixGroup::closure(gens, cap);
        }
    }
    return G;
}

std::shared_ptr<MatrixGroup> builtin_group(const std::string& name) {
    auto Q = ExactField::rationals();
    auto standard = [](std::shared_ptr<MatrixGroup> G) {
        G->set_standard_symplectic_form();
        if (!G->preserves_form())
            throw Error(ErrCode::internal, "builtin group is not symplectic");
        return G;
    };
    if (name == "1" || name == "trivial") {
        return standard(std::make_shared<MatrixGroup>(MatrixGroup::closure({Mat::identity(Q, 2)})));
    }
    if (name.size() == 2 && name[0] == 'z' && std::isdigit(static_cast<unsigned char>(name[1]))) {
        int l = name[1] - '0';
        if (l < 2 || l > 6)
            throw Error(ErrCode::domain, "builtin cyclic groups: z2..z6");
        if (l == 2) {
            Mat neg(Q, 2, 2);
            neg.at(0, 0) = -FieldElem::one(Q);
            neg.at(1, 1) = -FieldElem::one(Q);
            return standard(std::make_shared<MatrixGroup>(MatrixGroup::closure({neg})));
        }
        FieldPtr f = ExactField::cyclotomic(l);
        FieldElem z = FieldElem::zeta(f);
        Mat g(f, 2, 2);
        g.at(0, 0) = z;
        g.at(1, 1) = z.inverse();
        return standard(std::make_shared<MatrixGroup>(MatrixGroup::closure({g})));
    }
    if (name.rfind("weyl", 0) == 0) {
        // Weyl group acting diagonally on h + h*: block diag(w, (w^-1)^T)
        std::string label = name.substr(4);
        if (!label.empty() && (label[0] == ':' || label[0] == '-')) label = label.substr(1);
        auto W = build_weyl(root_system(label));
        int n = W.spec.rank;
        std::vector<Mat> gens;
        for (const auto& s : W.spec.simple_reflections) {
            Mat g(Q, 2 * n, 2 * n);
            Mat st = s.transpose(); // s is an involution, so (s^-1)^T = s^T
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    g.at(i, j) = s.at(i, j);
                    g.at(n + i, n + j) = st.at(i, j);
                }
            gens.push_back(std::move(g));
        }
        return standard(std::make_shared<MatrixGroup>(MatrixGroup::closure(gens)));
    }
    throw Error(ErrCode::domain, "unknown builtin group '" + name + "'");
}

SraSpec sra_from_json(const Json& j) {
    SraSpec spec;
    spec.group = group_from_json(j.at("group"));
    if (!spec.group->has_symplectic_form())
        throw Error(ErrCode::domain, "sra needs a symplectic group");
    const FieldPtr& f = spec.group->field();
    std::string t = j.value("t", "0");
    if (t == "formal" || t == "T")
        spec.t = std::nullopt;
    else
        spec.t = parse_field_elem(t, f);
    if (j.contains("c")) {
        for (auto it = j.at("c").begin(); it != j.at("c").end(); ++it) {
            int cls = std::stoi(it.key());
            spec.c[cls] = it.value().is_number_integer()
                              ? FieldElem(f, Rat(it.value().get<long>()))
                              : parse_field_elem(it.value().get<std::string>(), f);
        }
    }
    return spec;
}

std::vector<FieldElem> point_from_string(const std::string& text, const FieldPtr& f) {
    std::vector<FieldElem> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw Error(ErrCode::parse, "empty coordinate in point");
        out.push_back(parse_field_elem(cur, f));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    return out;
}

Json poly_list_json(const std::vector<Poly>& polys) {
    Json a = Json::array();
    for (const auto& p : polys) a.push_back(p.str());
    return a;
}

Json ideal_json(const Ideal& I) { return poly_list_json(I.groebner()); }

} // namespace pstrata
