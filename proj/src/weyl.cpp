#include "pstrata/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace pstrata {

namespace {

std::vector<std::vector<Rat>> cartan_matrix(char type, int n) {
    auto C = std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) C[i][i] = 2;
    auto chain = [&]() {
        for (int i = 0; i + 1 < n; ++i) {
            C[i][i + 1] = -1;
            C[i + 1][i] = -1;
        }
    };
    switch (type) {
    case 'A':
        chain();
        break;
    case 'B': // last simple root short
        if (n < 2) throw Error(ErrCode::domain, "B needs rank >= 2");
        chain();
        C[n - 2][n - 1] = -2;
        break;
    case 'C':
        if (n < 2) throw Error(ErrCode::domain, "C needs rank >= 2");
        chain();
        C[n - 1][n - 2] = -2;
        break;
    case 'D':
        if (n < 3) throw Error(ErrCode::domain, "D needs rank >= 3");
        for (int i = 0; i + 1 < n - 1; ++i) {
            C[i][i + 1] = -1;
            C[i + 1][i] = -1;
        }
        C[n - 3][n - 1] = -1;
        C[n - 1][n - 3] = -1;
        break;
    case 'G':
        if (n != 2) throw Error(ErrCode::domain, "G has rank 2");
        C[0][1] = -1;
        C[1][0] = -3;
        break;
    case 'F':
        if (n != 4) throw Error(ErrCode::domain, "F has rank 4");
        chain();
        C[1][2] = -2;
        C[2][1] = -1;
        break;
    default:
        throw Error(ErrCode::domain, std::string("unknown type '") + type + "'");
    }
    return C;
}

RootSystemSpec simple_spec(char type, int n) {
    RootSystemSpec spec;
    spec.label = std::string(1, type) + std::to_string(n);
    spec.rank = n;
    spec.cartan = cartan_matrix(type, n);
    auto Q = ExactField::rationals();
    for (int i = 0; i < n; ++i) {
        // s_i(alpha_j) = alpha_j - C[i][j] alpha_i  (C[i][j] = <alpha_j, alpha_i^v>)
        Mat M = Mat::identity(Q, n);
        for (int j = 0; j < n; ++j)
            M.at(i, j) = M.at(i, j) - FieldElem(Q, spec.cartan[i][j]);
        spec.simple_reflections.push_back(std::move(M));
    }
    return spec;
}

RootSystemSpec direct_sum(const RootSystemSpec& a, const RootSystemSpec& b) {
    RootSystemSpec s;
    s.label = a.label + "x" + b.label;
    s.rank = a.rank + b.rank;
    auto Q = ExactField::rationals();
    s.cartan.assign(s.rank, std::vector<Rat>(s.rank, Rat(0)));
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) s.cartan[i][j] = a.cartan[i][j];
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) s.cartan[a.rank + i][a.rank + j] = b.cartan[i][j];
    auto embed = [&](const Mat& m, int offset, int dim) {
        Mat M = Mat::identity(Q, s.rank);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) M.at(offset + i, offset + j) = m.at(i, j);
        return M;
    };
    for (const auto& m : a.simple_reflections) s.simple_reflections.push_back(embed(m, 0, a.rank));
    for (const auto& m : b.simple_reflections)
        s.simple_reflections.push_back(embed(m, a.rank, b.rank));
    return s;
}

} // namespace

RootSystemSpec root_system(const std::string& label) {
    // split on 'x' for reducible types
    std::vector<std::string> parts;
    std::string cur;
    for (char c : label) {
        if (c == 'x' || c == 'X' || c == '+') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    if (parts.empty()) throw Error(ErrCode::domain, "empty root system label");

    std::vector<RootSystemSpec> specs;
    for (const auto& p : parts) {
        if (p.size() < 2 || !std::isalpha(static_cast<unsigned char>(p[0])))
            throw Error(ErrCode::domain, "bad root system label '" + p + "'");
        char type = static_cast<char>(std::toupper(static_cast<unsigned char>(p[0])));
        int n = 0;
        for (size_t i = 1; i < p.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(p[i])))
                throw Error(ErrCode::domain, "bad root system label '" + p + "'");
            n = n * 10 + (p[i] - '0');
        }
        if (n < 1) throw Error(ErrCode::domain, "rank must be positive");
        specs.push_back(simple_spec(type, n));
    }
    RootSystemSpec out = specs[0];
    for (size_t i = 1; i < specs.size(); ++i) out = direct_sum(out, specs[i]);
    out.label = label;
    return out;
}

WeylGroup build_weyl(const RootSystemSpec& spec, long cap) {
    for (const auto& s : spec.simple_reflections)
        if (!(s * s).is_identity())
            throw Error(ErrCode::invalid_structure, "simple reflection is not an involution");
    WeylGroup W{spec, MatrixGroup::closure(spec.simple_reflections, cap), {}};
    for (const auto& s : spec.simple_reflections)
        W.simple_indices.push_back(W.group.index_of(s));
    return W;
}

std::vector<long> parabolic_census(const WeylGroup& W) {
    int n = W.spec.rank;
    const MatrixGroup& G = W.group;

    // standard parabolics W_J over all J subsets of the simple reflections
    std::vector<std::vector<int>> parabolics;
    std::vector<int> ranks;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> seed;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) seed.push_back(W.simple_indices[i]);
        std::vector<int> sub =
            seed.empty() ? std::vector<int>{G.identity_index()} : subgroup_closure(G, seed);
        int k = n - static_cast<int>(fixed_space(G, sub).size());
        parabolics.push_back(std::move(sub));
        ranks.push_back(k);
    }

    // classify up to W-conjugacy (brute force)
    std::vector<long> counts(n + 1, 0);
    std::set<std::vector<int>> seen;
    for (size_t p = 0; p < parabolics.size(); ++p) {
        std::vector<int> sorted = parabolics[p];
        std::sort(sorted.begin(), sorted.end());
        if (seen.count(sorted)) continue;
        std::set<std::vector<int>> orbit;
        for (int g = 0; g < G.order(); ++g) orbit.insert(conjugate_subgroup(G, sorted, g));
        bool fresh = true;
        for (const auto& c : orbit)
            if (seen.count(c)) { fresh = false; break; }
        // conjugates outside the standard-parabolic list don't matter; mark
        // every conjugate so later standard parabolics in this class are skipped
        for (const auto& c : orbit) seen.insert(c);
        if (fresh) counts[ranks[p]] += 1;
    }
    return counts;
}

std::vector<long> eigen_multiplicity_census(const WeylGroup& W) {
    int n = W.spec.rank;
    const MatrixGroup& G = W.group;
    std::vector<long> counts(n + 1, 0);
    for (const auto& cls : conjugacy_classes(G)) {
        int w = cls.front();
        int k = n - static_cast<int>(fixed_space(G, {w}).size());
        counts[k] += 1;
    }
    return counts;
}

CensusTable compare_census(const WeylGroup& W) {
    CensusTable tab;
    tab.label = W.spec.label;
    tab.rank = W.spec.rank;
    auto p = parabolic_census(W);
    auto e = eigen_multiplicity_census(W);
    tab.agree = true;
    for (int k = 0; k <= W.spec.rank; ++k) {
        CensusRow row;
        row.k = k;
        row.parabolic_classes = p[k];
        row.element_classes = e[k];
        row.equal = (p[k] == e[k]);
        if (!row.equal) tab.agree = false;
        tab.total_parabolic_classes += p[k];
        tab.total_element_classes += e[k];
        tab.rows.push_back(row);
    }
    return tab;
}

} // namespace pstrata
