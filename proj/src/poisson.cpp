#include "pstrata/poisson.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pstrata/linalg.hpp"

namespace pstrata {

std::vector<Monomial> monomials_up_to(int nvars, long d) {
    std::vector<Monomial> out;
    std::vector<int> cur(nvars, 0);
    std::function<void(int, long)> rec = [&](int var, long left) {
        if (var == nvars) {
            out.emplace_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[var] = e;
            rec(var + 1, left - e);
        }
        cur[var] = 0;
    };
    rec(0, d);
    return out;
}

long count_monomials_up_to(int nvars, long d) {
    // C(d + nvars, nvars)
    long num = 1, den = 1;
    for (int i = 1; i <= nvars; ++i) {
        num *= d + i;
        den *= i;
    }
    return num / den;
}

// ---- PoissonStructure

PoissonStructure PoissonStructure::make(RingPtr ring, Ideal relations,
                                        std::vector<std::vector<Poly>> b) {
    int m = ring->nvars();
    if (static_cast<int>(b.size()) != m)
        throw Error(ErrCode::dimension_mismatch, "bracket matrix must be m x m");
    Poly zero(ring);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(b[i].size()) != m)
            throw Error(ErrCode::dimension_mismatch, "bracket matrix must be m x m");
        for (int j = 0; j < m; ++j)
            if (!b[i][j].ring() || !b[i][j].ring()->same(*ring)) {
                if (!b[i][j].ring() && b[i][j].is_zero())
                    b[i][j] = zero;
                else
                    throw Error(ErrCode::ring_mismatch, "bracket entry from a different ring");
            }
    }
    // fill the lower triangle from the upper when the lower is all zero
    bool lower_given = false;
    for (int i = 0; i < m && !lower_given; ++i)
        for (int j = 0; j < i; ++j)
            if (!b[i][j].is_zero()) { lower_given = true; break; }
    if (!lower_given) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j) b[i][j] = -b[j][i];
    }
    return PoissonStructure(std::move(ring), std::move(relations), std::move(b));
}

void PoissonStructure::ensure_valid() const {
    if (!validate().valid())
        throw Error(ErrCode::invalid_structure,
                    "bracket data is not a Poisson structure (see validate)");
}

ValidationReport PoissonStructure::validate() const {
    if (validation_) return *validation_;
    ValidationReport rep;
    int m = ring_->nvars();
    rep.skew_ok = true;
    for (int i = 0; i < m && rep.skew_ok; ++i) {
        if (!bracket_[i][i].is_zero()) {
            rep.skew_ok = false;
            rep.issues.push_back("diagonal entry {z" + std::to_string(i) + ",z" +
                                 std::to_string(i) + "} is nonzero");
        }
        for (int j = 0; j < m; ++j) {
            if (!(bracket_[i][j] + bracket_[j][i]).is_zero()) {
                rep.skew_ok = false;
                rep.issues.push_back("skew-symmetry fails at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
                break;
            }
        }
    }
    rep.jacobi_ok = true;
    if (rep.skew_ok) {
        for (int i = 0; i < m && rep.jacobi_ok; ++i)
            for (int j = i + 1; j < m && rep.jacobi_ok; ++j)
                for (int k = j + 1; k < m && rep.jacobi_ok; ++k) {
                    Poly s = bracket(Poly::variable(ring_, i), bracket_[j][k]) +
                             bracket(Poly::variable(ring_, j), bracket_[k][i]) +
                             bracket(Poly::variable(ring_, k), bracket_[i][j]);
                    if (!relations_.contains(s)) {
                        rep.jacobi_ok = false;
                        rep.issues.push_back("Jacobi fails on generators (" + std::to_string(i) +
                                             "," + std::to_string(j) + "," + std::to_string(k) +
                                             ")");
                    }
                }
    }
    rep.relations_stable = true;
    for (int i = 0; i < m && rep.relations_stable; ++i)
        for (const auto& r : relations_.gens()) {
            Poly br = bracket(Poly::variable(ring_, i), r);
            if (!relations_.contains(br)) {
                rep.relations_stable = false;
                rep.issues.push_back("relation ideal not stable under {z" + std::to_string(i) +
                                     ", -}");
                break;
            }
        }
    validation_ = std::make_shared<const ValidationReport>(rep);
    return rep;
}

Poly PoissonStructure::bracket(const Poly& f, const Poly& g) const {
    int m = ring_->nvars();
    std::vector<Poly> df(m), dg(m);
    for (int i = 0; i < m; ++i) {
        df[i] = f.derivative(i);
        dg[i] = g.derivative(i);
    }
    Poly acc(ring_);
    for (int i = 0; i < m; ++i) {
        if (df[i].is_zero()) continue;
        for (int j = 0; j < m; ++j) {
            if (i == j || dg[j].is_zero() || bracket_[i][j].is_zero()) continue;
            acc += df[i] * dg[j] * bracket_[i][j];
        }
    }
    if (relations_.gens().empty()) return acc;
    return normal_form(acc, relations_.groebner());
}

bool PoissonStructure::point_on_variety(const std::vector<FieldElem>& point) const {
    for (const auto& r : relations_.gens())
        if (!r.evaluate(point).is_zero()) return false;
    return true;
}

Ideal PoissonStructure::point_ideal(const std::vector<FieldElem>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
        throw Error(ErrCode::dimension_mismatch, "point length != number of variables");
    if (!point_on_variety(point))
        throw Error(ErrCode::domain, "point does not satisfy the relations");
    std::vector<Poly> gens;
    for (int i = 0; i < ring_->nvars(); ++i)
        gens.push_back(Poly::variable(ring_, i) - Poly::constant(ring_, point[i]));
    return Ideal(ring_, std::move(gens));
}

ValidationReport validate_structure(const PoissonStructure& P) { return P.validate(); }

bool is_poisson_ideal(const PoissonStructure& P, const Ideal& J) {
    for (int i = 0; i < P.ring()->nvars(); ++i) {
        Poly zi = Poly::variable(P.ring(), i);
        for (const auto& g : J.gens())
            if (!J.contains(P.bracket(zi, g))) return false;
    }
    return true;
}

// ---- Poisson core

namespace {

struct MonoIndex {
    std::map<std::vector<int>, int> index;
    std::vector<Monomial> monos;

    int get(const Monomial& m) {
        auto it = index.find(m.exps());
        if (it != index.end()) return it->second;
        int id = static_cast<int>(monos.size());
        index.emplace(m.exps(), id);
        monos.push_back(m);
        return id;
    }
    int find(const Monomial& m) const {
        auto it = index.find(m.exps());
        return it == index.end() ? -1 : it->second;
    }
    int size() const { return static_cast<int>(monos.size()); }
};

std::vector<FieldElem> poly_to_vec(const Poly& p, MonoIndex& dict, const FieldPtr& f) {
    std::vector<FieldElem> v(dict.size(), FieldElem::zero(f));
    for (const auto& t : p.terms()) {
        int id = dict.get(t.mono);
        if (id >= static_cast<int>(v.size())) v.resize(dict.size(), FieldElem::zero(f));
        v[id] = t.coeff;
    }
    return v;
}

// echelonized basis of the degree-<=d slice of the ideal (valid for the
// graded default order)
std::vector<Poly> ideal_slice(const Ideal& J, long d) {
    const RingPtr& ring = J.ring();
    const FieldPtr& f = ring->field();
    auto monos = monomials_up_to(ring->nvars(), d);
    std::map<std::vector<int>, int> idx;
    for (size_t i = 0; i < monos.size(); ++i) idx[monos[i].exps()] = static_cast<int>(i);

    RowSpan span(f, static_cast<int>(monos.size()));
    std::vector<Poly> basis;
    for (const auto& g : J.groebner()) {
        long dg = g.degree();
        if (dg > d) continue;
        for (const auto& m : monomials_up_to(ring->nvars(), d - dg)) {
            Poly cand = g.mono_mul(m, FieldElem::one(f));
            std::vector<FieldElem> v(monos.size(), FieldElem::zero(f));
            for (const auto& t : cand.terms()) v[idx.at(t.mono.exps())] = t.coeff;
            if (span.add(std::move(v))) basis.push_back(std::move(cand));
        }
    }
    return basis;
}

// {f in slice(J,d) : {z_i, f} in J for all i}, as polynomials
std::vector<Poly> refine_slice(const PoissonStructure& P, const Ideal& J, long d) {
    const RingPtr& ring = P.ring();
    const FieldPtr& f = ring->field();
    std::vector<Poly> slice = ideal_slice(J, d);
    if (slice.empty()) return slice;

    const auto& gb = J.groebner();
    MonoIndex dict;
    std::vector<std::vector<std::vector<FieldElem>>> cons(slice.size());
    int m = ring->nvars();
    for (size_t k = 0; k < slice.size(); ++k) {
        cons[k].resize(m);
        for (int i = 0; i < m; ++i) {
            Poly h = normal_form(P.bracket(Poly::variable(ring, i), slice[k]), gb);
            cons[k][i] = poly_to_vec(h, dict, f);
        }
    }
    int ncols = dict.size();
    // rows: slice index, cols: stacked constraint coordinates
    Mat A(f, static_cast<int>(slice.size()), m * std::max(ncols, 1));
    for (size_t k = 0; k < slice.size(); ++k)
        for (int i = 0; i < m; ++i)
            for (size_t c = 0; c < cons[k][i].size(); ++c)
                A.at(static_cast<int>(k), i * ncols + static_cast<int>(c)) = cons[k][i][c];
    // kernel of A^T applied to lambda: want sum_k lambda_k cons[k] = 0
    auto kernel = A.transpose().kernel_basis();
    std::vector<Poly> out;
    for (const auto& lam : kernel) {
        Poly w(ring);
        for (size_t k = 0; k < slice.size(); ++k)
            if (!lam[k].is_zero()) w += slice[k].scaled(lam[k]);
        if (!w.is_zero()) out.push_back(std::move(w));
    }
    return out;
}

} // namespace

namespace {

// minimal generating subset of a redundant generator list (same ideal)
std::vector<Poly> trim_generators(const RingPtr& ring, std::vector<Poly> gens) {
    std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return ring->order().cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Poly> kept;
    std::vector<Poly> gb;
    for (auto& g : gens) {
        if (!kept.empty() && normal_form(g, gb).is_zero()) continue;
        kept.push_back(g);
        gb = groebner_basis(kept, ring);
    }
    return kept;
}

} // namespace

CoreResult poisson_core(const PoissonStructure& P, const Ideal& I, int max_iters,
                        int degree_headroom) {
    if (I.is_whole_ring())
        throw Error(ErrCode::domain, "poisson_core of the unit ideal");
    const RingPtr& ring = P.ring();

    long d = std::max({I.max_gen_degree(), P.relations().max_gen_degree(), 1L}) + degree_headroom;

    Ideal J = I;
    for (int iter = 1; iter <= max_iters; ++iter) {
        std::vector<Poly> w = refine_slice(P, J, d);
        for (const auto& r : P.relations().gens()) w.push_back(r);
        Ideal next(ring, trim_generators(ring, std::move(w)));
        if (equal_ideals(next, J)) {
            bool certified = is_poisson_ideal(P, J) && I.contains_ideal(J);
            return {J, certified, iter};
        }
        J = next;
    }
    return {J, false, max_iters};
}

std::vector<Poly> casimirs(const PoissonStructure& P, long degree_bound) {
    if (degree_bound < 0) throw Error(ErrCode::domain, "negative degree bound");
    const RingPtr& ring = P.ring();
    const FieldPtr& f = ring->field();
    int m = ring->nvars();
    auto cands = monomials_up_to(m, degree_bound);
    const auto& relgb = P.relations().groebner();

    MonoIndex dict;
    std::vector<std::vector<std::vector<FieldElem>>> cons(cands.size());
    for (size_t k = 0; k < cands.size(); ++k) {
        Poly cand = Poly::monomial(ring, cands[k], FieldElem::one(f));
        cons[k].resize(m);
        for (int i = 0; i < m; ++i) {
            Poly h = normal_form(P.bracket(cand, Poly::variable(ring, i)), relgb);
            cons[k][i] = poly_to_vec(h, dict, f);
        }
    }
    int ncols = dict.size();
    Mat A(f, static_cast<int>(cands.size()), m * std::max(ncols, 1));
    for (size_t k = 0; k < cands.size(); ++k)
        for (int i = 0; i < m; ++i)
            for (size_t c = 0; c < cons[k][i].size(); ++c)
                A.at(static_cast<int>(k), i * ncols + static_cast<int>(c)) = cons[k][i][c];
    auto kernel = A.transpose().kernel_basis();
    std::vector<Poly> out;
    for (const auto& lam : kernel) {
        Poly w(ring);
        for (size_t k = 0; k < cands.size(); ++k)
            if (!lam[k].is_zero()) w += Poly::monomial(ring, cands[k], lam[k]);
        if (!w.is_zero()) out.push_back(w.monic());
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
        return ring->order().cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
}

int rank_at_point(const PoissonStructure& P, const std::vector<FieldElem>& point) {
    if (static_cast<int>(point.size()) != P.ring()->nvars())
        throw Error(ErrCode::dimension_mismatch, "point length != number of variables");
    if (!P.point_on_variety(point))
        throw Error(ErrCode::domain, "point does not satisfy the relations");
    int m = P.ring()->nvars();
    Mat M(P.ring()->field(), m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) M.at(i, j) = P.gen_bracket(i, j).evaluate(point);
    return M.rank();
}

std::vector<std::pair<int, Ideal>> rank_stratum_ideals(const PoissonStructure& P) {
    const RingPtr& ring = P.ring();
    int m = ring->nvars();
    std::vector<std::pair<int, Ideal>> out;
    for (int j = 0; j <= m; j += 2) {
        int k = j + 1; // minor size
        std::vector<Poly> gens = P.relations().gens();
        if (k <= m) {
            // all k x k minors of the bracket matrix
            std::vector<int> rows, cols;
            std::function<void(int, std::vector<int>&, const std::function<void()>&)> choose;
            std::function<void(int)> pick_rows = [&](int start) {
                if (static_cast<int>(rows.size()) == k) {
                    cols.clear();
                    std::function<void(int)> pick_cols = [&](int cstart) {
                        if (static_cast<int>(cols.size()) == k) {
                            std::vector<std::vector<Poly>> sub;
                            for (int r : rows) {
                                std::vector<Poly> row;
                                for (int c : cols) row.push_back(P.gen_bracket(r, c));
                                sub.push_back(std::move(row));
                            }
                            Poly d = poly_det(sub, ring);
                            if (!d.is_zero()) gens.push_back(std::move(d));
                            return;
                        }
                        for (int c = cstart; c < m; ++c) {
                            cols.push_back(c);
                            pick_cols(c + 1);
                            cols.pop_back();
                        }
                    };
                    pick_cols(0);
                    return;
                }
                for (int r = start; r < m; ++r) {
                    rows.push_back(r);
                    pick_rows(r + 1);
                    rows.pop_back();
                }
            };
            pick_rows(0);
        }
        out.emplace_back(j, Ideal(ring, std::move(gens)));
    }
    return out;
}

Tri same_core(const PoissonStructure& P, const std::vector<FieldElem>& p1,
              const std::vector<FieldElem>& p2, int max_iters, int degree_headroom) {
    CoreResult c1 = poisson_core(P, P.point_ideal(p1), max_iters, degree_headroom);
    CoreResult c2 = poisson_core(P, P.point_ideal(p2), max_iters, degree_headroom);
    if (!c1.certified || !c2.certified) return Tri::indeterminate;
    return equal_ideals(c1.core, c2.core) ? Tri::yes : Tri::no;
}

} // namespace pstrata
