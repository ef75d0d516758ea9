#include "pstrata/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pstrata/ideal.hpp"

namespace pstrata {

// ---- MatrixGroup

MatrixGroup MatrixGroup::closure(const std::vector<Mat>& generators, long cap,
                                 std::optional<Mat> symplectic_form) {
    if (generators.empty())
        throw Error(ErrCode::domain, "group closure needs at least one generator");
    const FieldPtr& f = generators[0].field();
    int n = generators[0].rows();
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != n)
            throw Error(ErrCode::dimension_mismatch, "generators of mixed dimension");
        if (!g.inverse())
            throw Error(ErrCode::domain, "non-invertible generator");
    }

    std::map<std::string, Mat> seen;
    Mat id = Mat::identity(f, n);
    seen.emplace(id.key(), id);
    std::deque<Mat> frontier{id};
    while (!frontier.empty()) {
        Mat cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            Mat next = cur * g;
            std::string k = next.key();
            if (seen.count(k)) continue;
            if (static_cast<long>(seen.size()) >= cap)
                throw Error(ErrCode::cap_exceeded,
                            "group order exceeds cap " + std::to_string(cap));
            seen.emplace(std::move(k), next);
            frontier.push_back(std::move(next));
        }
    }

    MatrixGroup G;
    G.field_ = f;
    G.dim_ = n;
    for (auto& [k, m] : seen) {
        G.index_.emplace(k, static_cast<int>(G.elems_.size()));
        G.elems_.push_back(std::move(m));
    }
    G.id_ = G.index_.at(Mat::identity(f, n).key());
    for (const auto& g : generators) G.gen_idx_.push_back(G.index_.at(g.key()));
    G.cache_mu_ = std::make_shared<std::mutex>();
    G.cayley_.assign(G.elems_.size() * G.elems_.size(), -1);
    G.inv_.assign(G.elems_.size(), -1);
    if (symplectic_form) G.set_symplectic_form(std::move(*symplectic_form));
    return G;
}

int MatrixGroup::index_of(const Mat& m) const {
    auto it = index_.find(m.key());
    return it == index_.end() ? -1 : it->second;
}

int MatrixGroup::mul(int a, int b) const {
    {
        std::lock_guard<std::mutex> lock(*cache_mu_);
        int slot = cayley_[static_cast<size_t>(a) * elems_.size() + b];
        if (slot >= 0) return slot;
    }
    int r = index_of(elems_[a] * elems_[b]);
    if (r < 0) throw Error(ErrCode::internal, "group not closed under product");
    std::lock_guard<std::mutex> lock(*cache_mu_);
    cayley_[static_cast<size_t>(a) * elems_.size() + b] = r;
    return r;
}

int MatrixGroup::inv(int a) const {
    {
        std::lock_guard<std::mutex> lock(*cache_mu_);
        if (inv_[a] >= 0) return inv_[a];
    }
    auto m = elems_[a].inverse();
    int r = m ? index_of(*m) : -1;
    if (r < 0) throw Error(ErrCode::internal, "group not closed under inverse");
    std::lock_guard<std::mutex> lock(*cache_mu_);
    inv_[a] = r;
    return r;
}

const Mat& MatrixGroup::symplectic_form() const {
    if (!omega_) throw Error(ErrCode::domain, "no symplectic form attached");
    return *omega_;
}

void MatrixGroup::set_standard_symplectic_form() {
    if (dim_ % 2 != 0)
        throw Error(ErrCode::domain, "standard symplectic form needs even dimension");
    Mat w(field_, dim_, dim_);
    int n = dim_ / 2;
    for (int i = 0; i < n; ++i) {
        w.at(i, n + i) = FieldElem::one(field_);
        w.at(n + i, i) = -FieldElem::one(field_);
    }
    omega_ = std::move(w);
}

void MatrixGroup::set_symplectic_form(Mat omega) {
    if (omega.rows() != dim_ || omega.cols() != dim_)
        throw Error(ErrCode::dimension_mismatch, "symplectic form shape mismatch");
    if (!(omega + omega.transpose()).is_zero())
        throw Error(ErrCode::domain, "symplectic form must be skew-symmetric");
    if (omega.rank() != dim_)
        throw Error(ErrCode::domain, "symplectic form must be nondegenerate");
    omega_ = std::move(omega);
}

bool MatrixGroup::preserves_form() const {
    if (!omega_) return false;
    for (const auto& g : elems_)
        if (!(g.transpose() * *omega_ * g == *omega_)) return false;
    return true;
}

// ---- conjugacy classes

std::vector<std::vector<int>> conjugacy_classes(const MatrixGroup& G) {
    long n = G.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::set<int> orbit;
        for (int g = 0; g < n; ++g) orbit.insert(G.mul(G.mul(g, a), G.inv(g)));
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int x : cls) seen[x] = true;
        classes.push_back(std::move(cls));
    }
    return classes;
}

// ---- symplectic reflections

ReflectionData symplectic_reflections(const MatrixGroup& G) {
    if (!G.has_symplectic_form())
        throw Error(ErrCode::domain, "symplectic reflections need a symplectic form");
    const FieldPtr& f = G.field();
    int n = G.dim();
    Mat id = Mat::identity(f, n);
    const Mat& w = G.symplectic_form();

    ReflectionData data;
    std::vector<int> refl;
    for (int i = 0; i < G.order(); ++i) {
        Mat one_minus = id - G.elem(i);
        if (one_minus.rank() == 2) refl.push_back(i);
    }

    // conjugacy classes restricted to the reflection set
    std::set<int> rset(refl.begin(), refl.end());
    std::vector<bool> seen(G.order(), false);
    for (int s : refl) {
        if (seen[s]) continue;
        std::set<int> orbit;
        for (int g = 0; g < G.order(); ++g) orbit.insert(G.mul(G.mul(g, s), G.inv(g)));
        for (int x : orbit) {
            if (!rset.count(x))
                throw Error(ErrCode::internal, "reflection set not closed under conjugation");
            seen[x] = true;
        }
        data.classes.emplace_back(orbit.begin(), orbit.end());
    }

    for (int s : refl) {
        int cls = -1;
        for (size_t c = 0; c < data.classes.size(); ++c)
            if (std::binary_search(data.classes[c].begin(), data.classes[c].end(), s))
                cls = static_cast<int>(c);

        // projector onto Im(1-s) along Ker(1-s); omega_s = P^T w P
        Mat one_minus = id - G.elem(s);
        // columns of 1-s span the image; kernel from kernel_basis
        auto ker = one_minus.kernel_basis();
        // image basis: independent columns of (1-s)
        RowSpan span(f, n);
        std::vector<std::vector<FieldElem>> img;
        for (int c = 0; c < n; ++c) {
            std::vector<FieldElem> col(n, FieldElem::zero(f));
            for (int r = 0; r < n; ++r) col[r] = one_minus.at(r, c);
            if (span.add(col)) img.push_back(col);
        }
        // basis matrix B = [img | ker], P = B * diag(1,..,1,0,..,0) * B^-1
        Mat B(f, n, n);
        int c = 0;
        for (const auto& v : img) {
            for (int r = 0; r < n; ++r) B.at(r, c) = v[r];
            ++c;
        }
        for (const auto& v : ker) {
            for (int r = 0; r < n; ++r) B.at(r, c) = v[r];
            ++c;
        }
        auto Binv = B.inverse();
        if (!Binv || static_cast<int>(img.size()) != 2)
            throw Error(ErrCode::internal, "bad Im/Ker decomposition for a reflection");
        Mat D(f, n, n);
        for (size_t i = 0; i < img.size(); ++i) D.at(static_cast<int>(i), static_cast<int>(i)) =
            FieldElem::one(f);
        Mat P = B * D * *Binv;
        Mat ws = P.transpose() * w * P;
        data.reflections.push_back({s, cls, std::move(ws)});
    }
    return data;
}

// ---- subgroups

std::vector<int> subgroup_closure(const MatrixGroup& G, std::vector<int> seed) {
    std::set<int> s(seed.begin(), seed.end());
    s.insert(G.identity_index());
    std::deque<int> frontier(s.begin(), s.end());
    while (!frontier.empty()) {
        int a = frontier.front();
        frontier.pop_front();
        for (int b : std::vector<int>(s.begin(), s.end())) {
            for (int p : {G.mul(a, b), G.mul(b, a)}) {
                if (s.insert(p).second) frontier.push_back(p);
            }
        }
        int ia = G.inv(a);
        if (s.insert(ia).second) frontier.push_back(ia);
    }
    return std::vector<int>(s.begin(), s.end());
}

bool is_subgroup(const MatrixGroup& G, const std::vector<int>& elems) {
    std::set<int> s(elems.begin(), elems.end());
    if (!s.count(G.identity_index())) return false;
    for (int a : elems) {
        if (!s.count(G.inv(a))) return false;
        for (int b : elems)
            if (!s.count(G.mul(a, b))) return false;
    }
    return true;
}

std::vector<int> conjugate_subgroup(const MatrixGroup& G, const std::vector<int>& sub, int g) {
    std::vector<int> out;
    out.reserve(sub.size());
    int gi = G.inv(g);
    for (int a : sub) out.push_back(G.mul(G.mul(g, a), gi));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> all_subgroups(const MatrixGroup& G, long cap) {
    if (G.order() > cap)
        throw Error(ErrCode::cap_exceeded,
                    "subgroup enumeration cap exceeded (order " + std::to_string(G.order()) + ")");
    std::set<std::vector<int>> subs;
    subs.insert({G.identity_index()});
    // seed with cyclic subgroups
    for (int a = 0; a < G.order(); ++a) subs.insert(subgroup_closure(G, {a}));
    // grow by adjoining generators until stable
    std::deque<std::vector<int>> frontier(subs.begin(), subs.end());
    while (!frontier.empty()) {
        std::vector<int> s = std::move(frontier.front());
        frontier.pop_front();
        if (static_cast<long>(s.size()) == G.order()) continue;
        std::set<int> in(s.begin(), s.end());
        for (int g = 0; g < G.order(); ++g) {
            if (in.count(g)) continue;
            std::vector<int> seed = s;
            seed.push_back(g);
            auto bigger = subgroup_closure(G, std::move(seed));
            if (subs.insert(bigger).second) frontier.push_back(std::move(bigger));
        }
    }
    return std::vector<std::vector<int>>(subs.begin(), subs.end());
}

std::vector<SubgroupClass> subgroup_conjugacy_classes(const MatrixGroup& G, long cap) {
    auto subs = all_subgroups(G, cap);
    std::set<std::vector<int>> remaining(subs.begin(), subs.end());
    std::vector<SubgroupClass> classes;
    while (!remaining.empty()) {
        std::vector<int> rep = *remaining.begin();
        std::set<std::vector<int>> orbit;
        for (int g = 0; g < G.order(); ++g) orbit.insert(conjugate_subgroup(G, rep, g));
        SubgroupClass cls;
        cls.representative = *orbit.begin(); // lexicographically minimal conjugate
        cls.class_size = static_cast<long>(orbit.size());
        for (const auto& s : orbit) remaining.erase(s);
        classes.push_back(std::move(cls));
    }
    // deterministic order: by size, then representative
    std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.representative.size() != b.representative.size())
            return a.representative.size() < b.representative.size();
        return a.representative < b.representative;
    });
    return classes;
}

// ---- fixed spaces and stabilizers

std::vector<std::vector<FieldElem>> fixed_space(const MatrixGroup& G,
                                                const std::vector<int>& subgroup) {
    const FieldPtr& f = G.field();
    int n = G.dim();
    Mat id = Mat::identity(f, n);
    std::vector<std::vector<FieldElem>> rows;
    for (int h : subgroup) {
        Mat d = G.elem(h) - id;
        for (int r = 0; r < n; ++r) {
            std::vector<FieldElem> row(n, FieldElem::zero(f));
            for (int c = 0; c < n; ++c) row[c] = d.at(r, c);
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        std::vector<std::vector<FieldElem>> basis;
        for (int i = 0; i < n; ++i) {
            std::vector<FieldElem> e(n, FieldElem::zero(f));
            e[i] = FieldElem::one(f);
            basis.push_back(std::move(e));
        }
        return basis;
    }
    return Mat::from_rows(f, std::move(rows)).kernel_basis();
}

std::vector<int> stabilizer(const MatrixGroup& G, const std::vector<FieldElem>& v) {
    if (static_cast<int>(v.size()) != G.dim())
        throw Error(ErrCode::dimension_mismatch, "vector length != group dimension");
    std::vector<int> out;
    for (int i = 0; i < G.order(); ++i)
        if (G.elem(i).apply(v) == v) out.push_back(i);
    return out;
}

// ---- polynomial action

Poly act_on_poly(const Mat& gamma, const Poly& f) {
    const RingPtr& ring = f.ring();
    int n = ring->nvars();
    if (gamma.rows() != n || gamma.cols() != n)
        throw Error(ErrCode::dimension_mismatch, "matrix size != variable count");
    std::vector<Poly> images(n, Poly(ring));
    for (int i = 0; i < n; ++i) {
        Poly im(ring);
        for (int j = 0; j < n; ++j) {
            if (gamma.at(i, j).is_zero()) continue;
            im += Poly::variable(ring, j).scaled(gamma.at(i, j));
        }
        images[i] = std::move(im);
    }
    return f.substitute(ring, images);
}

Poly reynolds(const MatrixGroup& G, const Poly& f) {
    Poly acc(f.ring());
    for (const auto& g : G.elements()) acc += act_on_poly(g, f);
    FieldElem scale = FieldElem(f.ring()->field(), Rat(1) / Rat(G.order()));
    return acc.scaled(scale);
}

// ---- Molien series

std::vector<Rat> molien_series(const MatrixGroup& G, long max_degree) {
    const FieldPtr& f = G.field();
    RingPtr tring = PolyRing::make(f, {"t"});
    Poly one = Poly::constant(tring, Rat(1));
    Poly t = Poly::variable(tring, 0);

    std::vector<FieldElem> acc(max_degree + 1, FieldElem::zero(f));
    for (const auto& g : G.elements()) {
        // det(1 - t*g) as a univariate polynomial
        std::vector<std::vector<Poly>> m(G.dim(), std::vector<Poly>(G.dim(), Poly(tring)));
        for (int i = 0; i < G.dim(); ++i)
            for (int j = 0; j < G.dim(); ++j) {
                Poly entry = t.scaled(-g.at(i, j));
                if (i == j) entry += one;
                m[i][j] = std::move(entry);
            }
        Poly det = poly_det(m, tring);
        // power series inverse up to max_degree
        std::vector<FieldElem> d(max_degree + 1, FieldElem::zero(f));
        for (const auto& term : det.terms()) {
            long e = term.mono[0];
            if (e <= max_degree) d[e] = term.coeff;
        }
        std::vector<FieldElem> inv(max_degree + 1, FieldElem::zero(f));
        FieldElem d0i = d[0].inverse();
        inv[0] = d0i;
        for (long k = 1; k <= max_degree; ++k) {
            FieldElem s = FieldElem::zero(f);
            for (long j = 1; j <= k; ++j) s += d[j] * inv[k - j];
            inv[k] = -(d0i * s);
        }
        for (long k = 0; k <= max_degree; ++k) acc[k] += inv[k];
    }
    FieldElem scale = FieldElem(f, Rat(1) / Rat(G.order()));
    std::vector<Rat> out(max_degree + 1);
    for (long k = 0; k <= max_degree; ++k) {
        FieldElem v = acc[k] * scale;
        if (!v.is_rational())
            throw Error(ErrCode::internal, "Molien coefficient not rational");
        out[k] = v.rational_value();
    }
    return out;
}

} // namespace pstrata
