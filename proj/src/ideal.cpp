#include "pstrata/ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace pstrata {

namespace {
std::mutex g_budget_mu;
Budget g_budget;
} // namespace

Budget default_budget() {
    std::lock_guard<std::mutex> lock(g_budget_mu);
    return g_budget;
}

void set_default_budget(const Budget& b) {
    std::lock_guard<std::mutex> lock(g_budget_mu);
    g_budget = b;
}

// ---- normal form

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
    if (basis.empty()) return f;
    const RingPtr& ring = f.ring();
    Poly rem(ring);
    Poly work = f;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        bool reduced = false;
        for (const Poly& g : basis) {
            auto q = lt.mono.divide(g.leading_monomial());
            if (!q) continue;
            FieldElem c = lt.coeff / g.leading_coeff();
            work -= g.mono_mul(*q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            // move leading term to the remainder
            rem += Poly::monomial(ring, lt.mono, lt.coeff);
            work -= Poly::monomial(ring, lt.mono, lt.coeff);
        }
    }
    return rem;
}

namespace {

// top-reduction only, with budget accounting
Poly reduce_spoly(Poly f, const std::vector<Poly>& basis, const Budget& budget, long& steps) {
    while (!f.is_zero()) {
        const Term& lt = f.leading_term();
        bool reduced = false;
        for (const Poly& g : basis) {
            auto q = lt.mono.divide(g.leading_monomial());
            if (!q) continue;
            if (++steps > budget.max_reductions)
                throw Error(ErrCode::budget, "Groebner reduction budget exceeded");
            f -= g.mono_mul(*q, lt.coeff / g.leading_coeff());
            reduced = true;
            break;
        }
        if (!reduced) break;
        if (!f.is_zero() && f.degree() > budget.max_degree)
            throw Error(ErrCode::budget, "Groebner degree budget exceeded");
    }
    return f;
}

struct Pair {
    int i, j;
    Monomial lcm;
    long sugar;
    long lcm_deg;
};

} // namespace

std::vector<Poly> groebner_basis(std::vector<Poly> gens, const RingPtr& ring, const Budget& budget) {
    std::vector<Poly> basis;
    std::vector<long> sugar;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.degree() > budget.max_degree)
            throw Error(ErrCode::budget, "Groebner degree budget exceeded by an input generator");
        Poly h = g.converted(ring);
        basis.push_back(h.monic());
        sugar.push_back(h.degree());
    }

    long steps = 0;
    std::set<std::pair<int, int>> done;
    auto mk_pair = [&](int i, int j) {
        Pair p;
        p.i = i; p.j = j;
        p.lcm = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
        p.lcm_deg = p.lcm.total_degree();
        long si = sugar[i] + (p.lcm_deg - basis[i].leading_monomial().total_degree());
        long sj = sugar[j] + (p.lcm_deg - basis[j].leading_monomial().total_degree());
        p.sugar = std::max(si, sj);
        return p;
    };

    std::vector<Pair> queue;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            queue.push_back(mk_pair(static_cast<int>(i), static_cast<int>(j)));

    auto pick = [&]() {
        size_t best = 0;
        for (size_t k = 1; k < queue.size(); ++k) {
            const Pair &a = queue[k], &b = queue[best];
            if (a.sugar != b.sugar ? a.sugar < b.sugar
                : a.lcm_deg != b.lcm_deg ? a.lcm_deg < b.lcm_deg
                : a.i != b.i ? a.i < b.i : a.j < b.j)
                best = k;
        }
        Pair p = queue[best];
        queue.erase(queue.begin() + static_cast<long>(best));
        return p;
    };

    while (!queue.empty()) {
        Pair p = pick();
        done.insert({p.i, p.j});
        const Monomial& li = basis[p.i].leading_monomial();
        const Monomial& lj = basis[p.j].leading_monomial();
        // product criterion
        if (li.coprime(lj)) continue;
        // chain criterion: some k with lm_k | lcm and both sub-pairs treated
        bool skip = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (static_cast<int>(k) == p.i || static_cast<int>(k) == p.j) continue;
            if (!basis[k].leading_monomial().divides(p.lcm)) continue;
            auto key1 = std::minmax(p.i, static_cast<int>(k));
            auto key2 = std::minmax(p.j, static_cast<int>(k));
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second})) {
                skip = true;
                break;
            }
        }
        if (skip) continue;

        Monomial mi = *p.lcm.divide(li);
        Monomial mj = *p.lcm.divide(lj);
        FieldElem one = FieldElem::one(ring->field());
        Poly s = basis[p.i].mono_mul(mi, one) - basis[p.j].mono_mul(mj, one);
        s = reduce_spoly(std::move(s), basis, budget, steps);
        if (s.is_zero()) continue;
        if (s.degree() > budget.max_degree)
            throw Error(ErrCode::budget, "Groebner degree budget exceeded");
        s = s.monic();
        int idx = static_cast<int>(basis.size());
        basis.push_back(s);
        sugar.push_back(p.sugar);
        for (int k = 0; k < idx; ++k) queue.push_back(mk_pair(k, idx));
    }

    // minimalize: drop elements whose lm is divisible by another lm
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) {
                if (basis[i].leading_monomial() == basis[j].leading_monomial() && j > i) continue;
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // inter-reduce tails
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = normal_form(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return ring->order().cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return reduced;
}

// ---- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring()->same(*ring_))
            throw Error(ErrCode::ring_mismatch, "generator from a different ring");
        gens_.push_back(std::move(g));
    }
}

Ideal::Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
    std::lock_guard<std::mutex> lock(o.mu_);
    gb_ = o.gb_;
}

Ideal& Ideal::operator=(const Ideal& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mu_, o.mu_);
    ring_ = o.ring_;
    gens_ = o.gens_;
    gb_ = o.gb_;
    return *this;
}

const std::vector<Poly>& Ideal::groebner() const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (gb_) return *gb_;
    }
    auto basis = std::make_shared<const std::vector<Poly>>(groebner_basis(gens_, ring_));
    std::lock_guard<std::mutex> lock(mu_);
    if (!gb_) gb_ = std::move(basis); // single assignment
    return *gb_;
}

bool Ideal::has_cached_groebner() const {
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<bool>(gb_);
}

bool Ideal::is_whole_ring() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::contains(const Poly& f) const {
    if (!f.ring()->same(*ring_))
        throw Error(ErrCode::ring_mismatch, "membership test across rings");
    return normal_form(f, groebner()).is_zero();
}

bool Ideal::contains_ideal(const Ideal& other) const {
    for (const auto& g : other.gens())
        if (!contains(g)) return false;
    return true;
}

long Ideal::max_gen_degree() const {
    long d = -1;
    for (const auto& g : groebner()) d = std::max(d, g.degree());
    return d;
}

std::string Ideal::str() const {
    std::ostringstream os;
    os << "<";
    const auto& gb = groebner();
    for (size_t i = 0; i < gb.size(); ++i) {
        if (i) os << ", ";
        os << gb[i].str();
    }
    os << ">";
    return os.str();
}

bool ideal_member(const Poly& f, const Ideal& I) { return I.contains(f); }

bool equal_ideals(const Ideal& I, const Ideal& J) {
    if (!I.ring()->same(*J.ring()))
        throw Error(ErrCode::ring_mismatch, "ideal comparison across rings");
    const auto& a = I.groebner();
    const auto& b = J.groebner();
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// ---- elimination / intersection

Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars, const Budget& budget) {
    const RingPtr& ring = I.ring();
    std::vector<bool> dropped(ring->nvars(), false);
    for (int v : drop_vars) {
        if (v < 0 || v >= ring->nvars())
            throw Error(ErrCode::domain, "eliminate: variable index out of range");
        dropped[v] = true;
    }
    if (drop_vars.empty()) return I;

    std::vector<int> perm;
    for (int i = 0; i < ring->nvars(); ++i)
        if (dropped[i]) perm.push_back(i);
    int block = static_cast<int>(perm.size());
    for (int i = 0; i < ring->nvars(); ++i)
        if (!dropped[i]) perm.push_back(i);

    RingPtr elim_ring = ring->with_order(MonomialOrder::elimination(perm, block));
    std::vector<Poly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.converted(elim_ring));
    auto gb = groebner_basis(std::move(gens), elim_ring, budget);

    std::vector<Poly> kept;
    for (const auto& g : gb) {
        bool free_of_dropped = true;
        for (const auto& t : g.terms())
            for (int v : drop_vars)
                if (t.mono[v] != 0) { free_of_dropped = false; break; }
        if (free_of_dropped) kept.push_back(g.converted(ring));
    }
    return Ideal(ring, std::move(kept));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J, const Budget& budget) {
    if (!I.ring()->same(*J.ring()))
        throw Error(ErrCode::ring_mismatch, "intersection across rings");
    const RingPtr& ring = I.ring();
    std::string aux = "t_aux";
    while (ring->variable_index(aux) >= 0) aux += "_";
    std::vector<std::string> vars = ring->variables();
    vars.push_back(aux);
    RingPtr big = PolyRing::make(ring->field(), vars);
    int tvar = big->nvars() - 1;

    auto lift = [&](const Poly& f) {
        std::vector<Term> ts;
        for (const auto& t : f.terms()) {
            std::vector<int> e = t.mono.exps();
            e.push_back(0);
            ts.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Poly(big, std::move(ts));
    };

    Poly t = Poly::variable(big, tvar);
    Poly one_minus_t = Poly::constant(big, Rat(1)) - t;
    std::vector<Poly> gens;
    for (const auto& f : I.gens()) gens.push_back(t * lift(f));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * lift(g));

    Ideal big_ideal(big, std::move(gens));
    Ideal elim = eliminate(big_ideal, {tvar}, budget);

    std::vector<Poly> back;
    for (const auto& g : elim.gens()) {
        std::vector<Term> ts;
        for (const auto& t2 : g.terms()) {
            std::vector<int> e = t2.mono.exps();
            e.pop_back();
            ts.push_back({Monomial(std::move(e)), t2.coeff});
        }
        back.push_back(Poly(ring, std::move(ts)));
    }
    return Ideal(ring, std::move(back));
}

// ---- Krull dimension

std::optional<long> krull_dim(const Ideal& I) {
    if (I.is_whole_ring()) return std::nullopt;
    const auto& gb = I.groebner();
    int n = I.ring()->nvars();
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(g.leading_monomial());

    // S independent <=> no leading monomial supported inside S
    long best = 0;
    if (n > 24) throw Error(ErrCode::domain, "too many variables for staircase dimension");
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        long size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : lms) {
            bool inside = true;
            for (int v = 0; v < n && inside; ++v)
                if (m[v] > 0 && !(mask & (1u << v))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

// ---- singular locus

Poly poly_det(const std::vector<std::vector<Poly>>& m, const RingPtr& ring) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(ring, Rat(1));
    if (n == 1) return m[0][0];
    Poly acc(ring);
    // Laplace along the first row
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> sub;
        sub.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Poly term = m[0][j] * poly_det(sub, ring);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

namespace {

void combinations(int n, int k, std::vector<int>& cur, int start,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == k) { fn(cur); return; }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, cur, i + 1, fn);
        cur.pop_back();
    }
}

} // namespace

Ideal singular_locus(const Ideal& I) {
    if (I.is_whole_ring())
        throw Error(ErrCode::domain, "singular locus of the unit ideal");
    const RingPtr& ring = I.ring();
    auto dim = krull_dim(I);
    long c = ring->nvars() - *dim;

    const auto& gb = I.groebner();
    std::vector<Poly> gens = gb;
    if (c == 0) {
        // codimension 0: smooth (empty singular locus = whole ring)
        return Ideal(ring, {Poly::constant(ring, Rat(1))});
    }
    int g = static_cast<int>(gb.size());
    int n = ring->nvars();
    if (c > g || c > n) {
        // not enough rows/cols for a c x c minor: no smoothness certificate,
        // the minor ideal is zero and the locus is everything cut by I
        return Ideal(ring, std::move(gens));
    }

    std::vector<std::vector<Poly>> jac(g, std::vector<Poly>(n, Poly(ring)));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < n; ++j) jac[i][j] = gb[i].derivative(j);

    std::vector<int> rows_sel, cols_sel;
    std::function<void(const std::vector<int>&)> with_rows = [&](const std::vector<int>& rows) {
        std::vector<int> cur;
        combinations(n, static_cast<int>(c), cur, 0, [&](const std::vector<int>& cols) {
            std::vector<std::vector<Poly>> sub;
            for (int r : rows) {
                std::vector<Poly> row;
                for (int cc : cols) row.push_back(jac[r][cc]);
                sub.push_back(std::move(row));
            }
            Poly d = poly_det(sub, ring);
            if (!d.is_zero()) gens.push_back(std::move(d));
        });
    };
    std::vector<int> cur;
    combinations(g, static_cast<int>(c), cur, 0, with_rows);
    return Ideal(ring, std::move(gens));
}

} // namespace pstrata
