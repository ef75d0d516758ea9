#include "pstrata/strata.hpp"

#include <algorithm>
#include <set>

#include "pstrata/parallel.hpp"

namespace pstrata {

namespace {

std::string subgroup_label(const SubgroupClass& c) {
    return "H(order " + std::to_string(c.representative.size()) + ", class size " +
           std::to_string(c.class_size) + ")";
}

} // namespace

std::vector<Stratum> stabilizer_strata(const MatrixGroup& G, const InvariantPresentation& pres,
                                       long cap) {
    const FieldPtr& f = G.field();
    auto subs = all_subgroups(G, cap);
    auto classes = subgroup_conjugacy_classes(G, cap);

    // fixed-space dimensions for every subgroup
    std::map<std::vector<int>, int> fixdim;
    for (const auto& s : subs)
        fixdim[s] = static_cast<int>(fixed_space(G, s).size());

    std::vector<Stratum> out;
    for (const auto& cls : classes) {
        const auto& H = cls.representative;
        int dH = fixdim.at(H);
        // V^o_H nonempty iff every strictly larger subgroup fixes strictly less
        bool stab = true;
        std::set<int> hset(H.begin(), H.end());
        for (const auto& K : subs) {
            if (K.size() <= H.size()) continue;
            bool contains = true;
            for (int h : H)
                if (!std::binary_search(K.begin(), K.end(), h)) { contains = false; break; }
            if (!contains) continue;
            if (fixdim.at(K) >= dH) { stab = false; break; }
        }
        if (!stab) continue;

        Stratum s;
        s.subgroup = cls;
        s.dim_fixed = dH;
        // I(H): row space of the stacked (h - 1), as linear forms
        int n = G.dim();
        Mat id = Mat::identity(f, n);
        RowSpan rows(f, n);
        std::vector<Poly> forms;
        for (int h : H) {
            Mat d = G.elem(h) - id;
            for (int r = 0; r < n; ++r) {
                std::vector<FieldElem> row(n, FieldElem::zero(f));
                for (int c = 0; c < n; ++c) row[c] = d.at(r, c);
                rows.add(std::move(row));
            }
        }
        for (const auto& row : rows.rows()) {
            Poly form(pres.poly_ring);
            for (int c = 0; c < n; ++c)
                if (!row[c].is_zero())
                    form += Poly::variable(pres.poly_ring, c).scaled(row[c]);
            forms.push_back(std::move(form));
        }
        s.IH = Ideal(pres.poly_ring, forms);
        s.JH = pres.contract(forms);
        s.is_stabilizer = true;
        out.push_back(std::move(s));
    }
    // deterministic: decreasing fixed-space dimension, then subgroup order
    std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
        if (a.dim_fixed != b.dim_fixed) return a.dim_fixed > b.dim_fixed;
        return a.subgroup.representative < b.subgroup.representative;
    });
    return out;
}

PoissonStructure symplectic_poisson(const MatrixGroup& G, const RingPtr& ov_ring) {
    const Mat& w = G.symplectic_form();
    int n = G.dim();
    std::vector<std::vector<Poly>> b(n, std::vector<Poly>(n, Poly(ov_ring)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b[i][j] = Poly::constant(ov_ring, w.at(i, j));
    return PoissonStructure::make(ov_ring, Ideal::zero(ov_ring), std::move(b));
}

PoissonStructure induced_poisson(const MatrixGroup& G, const InvariantPresentation& pres) {
    PoissonStructure ov = symplectic_poisson(G, pres.poly_ring);
    int k = pres.ngens();
    std::vector<std::vector<Poly>> b(k, std::vector<Poly>(k, Poly(pres.pres_ring)));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Poly h = ov.bracket(pres.generators[i], pres.generators[j]);
            b[i][j] = pres.rewrite(h);
            b[j][i] = -b[i][j];
        }
    return PoissonStructure::make(pres.pres_ring, pres.relations, std::move(b));
}

std::vector<FieldElem> sample_stratum_point(const MatrixGroup& G, const Stratum& s,
                                            std::mt19937& rng) {
    const FieldPtr& f = G.field();
    auto basis = fixed_space(G, s.subgroup.representative);
    if (basis.empty())
        return std::vector<FieldElem>(G.dim(), FieldElem::zero(f));
    std::uniform_int_distribution<int> num(-9, 9);
    std::set<int> hset(s.subgroup.representative.begin(), s.subgroup.representative.end());
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<FieldElem> v(G.dim(), FieldElem::zero(f));
        for (const auto& bvec : basis) {
            Rat q(num(rng));
            if (q == 0) q = 1;
            FieldElem c(f, q);
            for (int i = 0; i < G.dim(); ++i) v[i] += c * bvec[i];
        }
        auto st = stabilizer(G, v);
        if (std::set<int>(st.begin(), st.end()) == hset) return v;
    }
    throw Error(ErrCode::internal, "failed to sample a stratum point (stabilizer never exact)");
}

LeafReport verify_leaf_claims(const MatrixGroup& G, const InvariantPresentation& pres,
                              const std::vector<Stratum>& strata, int samples, unsigned seed,
                              bool with_cores, int threads, bool with_fibers) {
    LeafReport rep;
    rep.cores_checked = with_cores;
    PoissonStructure induced = induced_poisson(G, pres);
    std::mt19937 rng(seed);

    // sample all points up front (sequential draws keep the rng stream
    // independent of the thread count)
    std::vector<std::vector<std::vector<FieldElem>>> v_points(strata.size());
    std::vector<std::vector<std::vector<FieldElem>>> proj_points(strata.size());
    for (size_t si = 0; si < strata.size(); ++si)
        for (int t = 0; t < samples; ++t) {
            auto v = sample_stratum_point(G, strata[si], rng);
            proj_points[si].push_back(pres.project_point(v));
            v_points[si].push_back(std::move(v));
        }

    std::vector<std::vector<CoreResult>> cores(strata.size());
    if (with_cores) {
        std::vector<std::pair<size_t, size_t>> jobs;
        for (size_t si = 0; si < strata.size(); ++si) {
            cores[si].resize(proj_points[si].size());
            for (size_t t = 0; t < proj_points[si].size(); ++t) jobs.emplace_back(si, t);
        }
        parallel_for(static_cast<long>(jobs.size()), threads, [&](long k) {
            auto [si, t] = jobs[static_cast<size_t>(k)];
            cores[si][t] = poisson_core(induced, induced.point_ideal(proj_points[si][t]));
        });
    }
    auto compare_cores = [&](size_t sa, size_t ta, size_t sb, size_t tb) {
        const CoreResult& a = cores[sa][ta];
        const CoreResult& b = cores[sb][tb];
        if (!a.certified || !b.certified) return Tri::indeterminate;
        return equal_ideals(a.core, b.core) ? Tri::yes : Tri::no;
    };
    for (size_t si = 0; si < strata.size(); ++si) {
        const Stratum& s = strata[si];
        StratumCheck chk;
        chk.subgroup_label = subgroup_label(s.subgroup);
        chk.dim_fixed = s.dim_fixed;

        std::vector<Poly> jh_plus = s.JH.gens();
        for (const auto& r : pres.relations.gens()) jh_plus.push_back(r);
        chk.j_poisson = is_poisson_ideal(induced, Ideal(pres.pres_ring, jh_plus));

        chk.rank_ok = true;
        for (int t = 0; t < samples; ++t) {
            int rk = rank_at_point(induced, proj_points[si][t]);
            chk.ranks.push_back(rk);
            if (rk != s.dim_fixed) chk.rank_ok = false;
        }

        if (with_cores && proj_points[si].size() >= 2) {
            chk.cores_within = Tri::yes;
            for (size_t t = 1; t < proj_points[si].size(); ++t) {
                Tri r = compare_cores(si, 0, si, t);
                if (r == Tri::indeterminate) {
                    ++rep.indeterminate_pairs;
                    chk.cores_within = Tri::indeterminate;
                    break;
                }
                if (r == Tri::no) { chk.cores_within = Tri::no; break; }
            }
        }
        if (with_fibers) {
            for (const auto& v : v_points[si])
                chk.fiber_profiles.push_back(fiber_invariants(skew_fiber(G, pres, v)));
            for (const auto& fp : chk.fiber_profiles)
                if (!(fp == chk.fiber_profiles.front())) chk.fibers_constant = false;
        }
        rep.strata.push_back(std::move(chk));
    }

    if (with_cores) {
        for (size_t a = 0; a < strata.size(); ++a)
            for (size_t b = a + 1; b < strata.size(); ++b) {
                if (proj_points[a].empty() || proj_points[b].empty()) continue;
                Tri r = compare_cores(a, 0, b, 0);
                if (r == Tri::indeterminate) ++rep.indeterminate_pairs;
                else if (r == Tri::yes) rep.cross_cores_ok = false;
            }
    }

    rep.all_ok = rep.cross_cores_ok && rep.indeterminate_pairs == 0;
    for (const auto& c : rep.strata) {
        if (!c.j_poisson || !c.rank_ok || !c.fibers_constant) rep.all_ok = false;
        if (with_cores && c.cores_within == Tri::no) rep.all_ok = false;
        if (with_cores && c.ranks.size() >= 2 && c.cores_within == Tri::indeterminate)
            rep.all_ok = false;
    }
    return rep;
}

FiberAlgebra skew_fiber(const MatrixGroup& G, const InvariantPresentation& pres,
                        const std::vector<FieldElem>& v) {
    const FieldPtr& f = G.field();
    const RingPtr& R = pres.poly_ring;
    if (static_cast<int>(v.size()) != G.dim())
        throw Error(ErrCode::dimension_mismatch, "point length != dim V");

    std::vector<Poly> gens;
    for (const auto& g : pres.generators)
        gens.push_back(g - Poly::constant(R, g.evaluate(v)));
    Ideal Iv(R, std::move(gens));
    auto dim = krull_dim(Iv);
    if (!dim || *dim != 0)
        throw Error(ErrCode::internal, "fiber ideal is not zero-dimensional");
    const auto& gb = Iv.groebner();

    // standard monomials: not divisible by any leading monomial
    std::vector<Monomial> std_monos;
    {
        std::set<std::vector<int>> seen;
        std::vector<Monomial> frontier{Monomial(R->nvars())};
        seen.insert(frontier[0].exps());
        while (!frontier.empty()) {
            Monomial m = frontier.back();
            frontier.pop_back();
            bool divisible = false;
            for (const auto& g : gb)
                if (g.leading_monomial().divides(m)) { divisible = true; break; }
            if (divisible) continue;
            std_monos.push_back(m);
            for (int i = 0; i < R->nvars(); ++i) {
                Monomial next = m;
                next[i] += 1;
                if (seen.insert(next.exps()).second) frontier.push_back(std::move(next));
            }
        }
        std::sort(std_monos.begin(), std_monos.end(), [&](const Monomial& a, const Monomial& b) {
            return R->order().cmp(a, b) < 0;
        });
    }

    int q = static_cast<int>(std_monos.size());
    long ord = G.order();
    int N = static_cast<int>(q * ord);
    std::map<std::vector<int>, int> mono_idx;
    for (int i = 0; i < q; ++i) mono_idx[std_monos[i].exps()] = i;

    FiberAlgebra F;
    F.field = f;
    F.dim = N;
    auto slot = [&](int mono, int g) { return mono * static_cast<int>(ord) + g; };
    for (int i = 0; i < q; ++i)
        for (int g = 0; g < ord; ++g) {
            Poly pm = Poly::monomial(R, std_monos[i], FieldElem::one(f));
            F.labels.push_back(pm.str() + " * g" + std::to_string(g));
        }

    // alpha_gamma(f) = f o gamma^{-1}
    std::vector<Mat> inv_mats;
    for (int g = 0; g < ord; ++g) inv_mats.push_back(G.elem(G.inv(g)));

    F.table.assign(N, std::vector<std::vector<FieldElem>>(
                          N, std::vector<FieldElem>(N, FieldElem::zero(f))));
    for (int a = 0; a < q; ++a)
        for (int ga = 0; ga < ord; ++ga) {
            for (int b = 0; b < q; ++b) {
                // m_a * alpha_{ga}(m_b), reduced
                Poly mb = Poly::monomial(R, std_monos[b], FieldElem::one(f));
                Poly prod = Poly::monomial(R, std_monos[a], FieldElem::one(f)) *
                            act_on_poly(inv_mats[ga], mb);
                Poly nf = normal_form(prod, gb);
                for (int gb2 = 0; gb2 < ord; ++gb2) {
                    int lhs = slot(a, ga), rhs = slot(b, gb2);
                    int gprod = G.mul(ga, gb2);
                    auto& row = F.table[lhs][rhs];
                    for (const auto& t : nf.terms()) {
                        auto it = mono_idx.find(t.mono.exps());
                        if (it == mono_idx.end())
                            throw Error(ErrCode::internal, "normal form left the standard basis");
                        row[slot(it->second, gprod)] = t.coeff;
                    }
                }
            }
        }
    return F;
}

} // namespace pstrata
