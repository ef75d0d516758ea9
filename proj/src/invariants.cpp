#include "pstrata/invariants.hpp"

#include <algorithm>
#include <functional>

#include "pstrata/poisson.hpp"

namespace pstrata {

Poly map_vars(const Poly& f, const RingPtr& target, const std::vector<int>& var_map) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        std::vector<int> e(target->nvars(), 0);
        for (int i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            e[var_map[i]] = t.mono[i];
        }
        ts.push_back({Monomial(std::move(e)),
                      FieldElem::from_coords(target->field(), t.coeff.coords())});
    }
    return Poly(target, std::move(ts));
}

RingPtr default_ov_ring(const MatrixGroup& G) {
    std::vector<std::string> names;
    if (G.dim() == 2) {
        names = {"x", "y"};
    } else if (G.dim() % 2 == 0) {
        int n = G.dim() / 2;
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    } else {
        for (int i = 1; i <= G.dim(); ++i) names.push_back("v" + std::to_string(i));
    }
    return PolyRing::make(G.field(), names);
}

namespace {

std::vector<std::string> pres_names(int k) {
    std::vector<std::string> names;
    if (k <= 26) {
        for (int i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
    } else {
        for (int i = 1; i <= k; ++i) names.push_back("g" + std::to_string(i));
    }
    return names;
}

// monomials of exact total degree d, descending in the ring order
std::vector<Monomial> exact_degree_monomials(const RingPtr& ring, long d) {
    std::vector<Monomial> out;
    for (auto& m : monomials_up_to(ring->nvars(), d))
        if (m.total_degree() == d) out.push_back(std::move(m));
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ring->order().cmp(a, b) > 0; });
    return out;
}

} // namespace

InvariantPresentation invariant_generators(const MatrixGroup& G, long cap, RingPtr poly_ring) {
    if (G.order() > cap)
        throw Error(ErrCode::cap_exceeded,
                    "invariant generators: group order exceeds cap " + std::to_string(cap));
    InvariantPresentation pres;
    pres.poly_ring = poly_ring ? poly_ring : default_ov_ring(G);
    if (pres.poly_ring->nvars() != G.dim())
        throw Error(ErrCode::dimension_mismatch, "ring has wrong variable count for the group");
    const RingPtr& R = pres.poly_ring;
    const FieldPtr& f = R->field();

    long bound = G.order(); // Noether bound, char 0
    pres.molien = molien_series(G, bound);

    for (long d = 1; d <= bound; ++d) {
        long target = pres.molien[d].get_num().get_si();
        if (pres.molien[d] != target)
            throw Error(ErrCode::internal, "non-integral Molien coefficient");
        if (target == 0) continue;

        auto degd = exact_degree_monomials(R, d);
        std::map<std::vector<int>, int> idx;
        for (size_t i = 0; i < degd.size(); ++i) idx[degd[i].exps()] = static_cast<int>(i);
        auto to_vec = [&](const Poly& p) {
            std::vector<FieldElem> v(degd.size(), FieldElem::zero(f));
            for (const auto& t : p.terms()) v[idx.at(t.mono.exps())] = t.coeff;
            return v;
        };

        RowSpan span(f, static_cast<int>(degd.size()));
        // subalgebra slice: products of chosen generators of weighted degree d
        std::function<void(size_t, long, const Poly&)> walk = [&](size_t i, long left, const Poly& acc) {
            if (left == 0) {
                span.add(to_vec(acc));
                return;
            }
            if (i >= pres.generators.size()) return;
            walk(i + 1, left, acc);
            if (pres.degrees[i] <= left)
                walk(i, left - pres.degrees[i], acc * pres.generators[i]);
        };
        walk(0, d, Poly::constant(R, Rat(1)));

        if (span.dim() > target)
            throw Error(ErrCode::internal, "Molien mismatch: subalgebra exceeds invariant count");
        if (span.dim() == target) continue;

        for (const auto& m : degd) {
            if (span.dim() == target) break;
            Poly r = reynolds(G, Poly::monomial(R, m, FieldElem::one(f)));
            if (r.is_zero()) continue;
            // reduce against the subalgebra slice so generators stay sparse
            // (e.g. S_2 yields x*y rather than x^2 + y^2)
            std::vector<FieldElem> w = span.reduce(to_vec(r));
            bool nonzero = false;
            for (const auto& x : w)
                if (!x.is_zero()) { nonzero = true; break; }
            if (!nonzero) continue;
            std::vector<Term> terms;
            for (size_t i = 0; i < degd.size(); ++i)
                if (!w[i].is_zero()) terms.push_back({degd[i], w[i]});
            Poly gen(R, std::move(terms));
            span.add(std::move(w));
            pres.generators.push_back(gen.scaled(gen.leading_coeff().inverse()));
            pres.degrees.push_back(d);
        }
        if (span.dim() != target)
            throw Error(ErrCode::internal, "Molien mismatch: Reynolds images do not reach the count");
    }

    // presentation ring and the elimination machinery
    int k = pres.ngens();
    auto names = pres_names(k);
    pres.pres_ring = PolyRing::make(f, names);

    std::vector<std::string> all_names = R->variables();
    for (const auto& n : names) all_names.push_back(n);
    std::vector<int> perm;
    for (int i = 0; i < static_cast<int>(all_names.size()); ++i) perm.push_back(i);
    pres.combined = PolyRing::make(f, all_names,
                                   MonomialOrder::elimination(perm, R->nvars()));

    std::vector<Poly> map_gens;
    for (int i = 0; i < k; ++i) {
        Poly ai = Poly::variable(pres.combined, R->nvars() + i);
        map_gens.push_back(ai - pres.lift_to_combined(pres.generators[i]));
    }
    pres.combined_gb = groebner_basis(map_gens, pres.combined);

    // relation ideal: basis elements free of the V-variables
    std::vector<Poly> rel;
    for (const auto& g : pres.combined_gb) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (int i = 0; i < R->nvars() && pure; ++i)
                if (t.mono[i]) pure = false;
        if (pure) rel.push_back(pres.combined_to_pres(g));
    }
    pres.relations = Ideal(pres.pres_ring, std::move(rel));
    return pres;
}

Poly InvariantPresentation::lift_to_combined(const Poly& f_in_poly_ring) const {
    std::vector<int> vm(poly_ring->nvars());
    for (int i = 0; i < poly_ring->nvars(); ++i) vm[i] = i;
    return map_vars(f_in_poly_ring, combined, vm);
}

Poly InvariantPresentation::pres_to_combined(const Poly& f_in_pres_ring) const {
    std::vector<int> vm(pres_ring->nvars());
    for (int i = 0; i < pres_ring->nvars(); ++i) vm[i] = nx() + i;
    return map_vars(f_in_pres_ring, combined, vm);
}

Poly InvariantPresentation::combined_to_pres(const Poly& f) const {
    std::vector<int> vm(combined->nvars(), 0);
    for (int i = 0; i < nx(); ++i) vm[i] = -1;
    for (int i = 0; i < pres_ring->nvars(); ++i) vm[nx() + i] = i;
    for (const auto& t : f.terms())
        for (int i = 0; i < nx(); ++i)
            if (t.mono[i])
                throw Error(ErrCode::internal, "polynomial still involves V-variables");
    return map_vars(f, pres_ring, vm);
}

Poly InvariantPresentation::rewrite(const Poly& invariant) const {
    Poly nf = normal_form(lift_to_combined(invariant), combined_gb);
    for (const auto& t : nf.terms())
        for (int i = 0; i < nx(); ++i)
            if (t.mono[i])
                throw Error(ErrCode::internal,
                            "rewriting failure: polynomial is not in the invariant subalgebra");
    return combined_to_pres(nf);
}

Poly InvariantPresentation::embed(const Poly& pres_poly) const {
    std::vector<Poly> images;
    for (int i = 0; i < ngens(); ++i) images.push_back(generators[i]);
    return pres_poly.substitute(poly_ring, images);
}

std::vector<FieldElem> InvariantPresentation::project_point(const std::vector<FieldElem>& v) const {
    std::vector<FieldElem> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.evaluate(v));
    return out;
}

Ideal InvariantPresentation::contract(const std::vector<Poly>& gens_in_poly_ring) const {
    std::vector<Poly> gens;
    for (const auto& g : gens_in_poly_ring) gens.push_back(lift_to_combined(g));
    for (int i = 0; i < ngens(); ++i) {
        Poly ai = Poly::variable(combined, nx() + i);
        gens.push_back(ai - lift_to_combined(generators[i]));
    }
    Ideal big(combined, std::move(gens));
    std::vector<int> drop;
    for (int i = 0; i < nx(); ++i) drop.push_back(i);
    Ideal elim = eliminate(big, drop);
    std::vector<Poly> out;
    for (const auto& g : elim.gens()) out.push_back(combined_to_pres(g));
    return Ideal(pres_ring, std::move(out));
}

} // namespace pstrata
