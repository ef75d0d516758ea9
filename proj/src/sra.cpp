#include "pstrata/sra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pstrata {

// ---- TCoef

TCoef::TCoef(FieldElem constant) : field_(constant.field()) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

TCoef TCoef::zero(const FieldPtr& f) {
    TCoef t;
    t.field_ = f;
    return t;
}

TCoef TCoef::formal_t(const FieldPtr& f) {
    TCoef t;
    t.field_ = f;
    t.c_ = {FieldElem::zero(f), FieldElem::one(f)};
    return t;
}

FieldElem TCoef::at(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return FieldElem::zero(field_);
    return c_[k];
}

void TCoef::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TCoef TCoef::operator+(const TCoef& o) const {
    TCoef r;
    r.field_ = field_ ? field_ : o.field_;
    r.c_.resize(std::max(c_.size(), o.c_.size()), FieldElem::zero(r.field_));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

TCoef TCoef::operator-() const {
    TCoef r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

TCoef TCoef::operator*(const TCoef& o) const {
    TCoef r;
    r.field_ = field_ ? field_ : o.field_;
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldElem::zero(r.field_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

bool TCoef::divisible_by_t() const { return c_.empty() || c_[0].is_zero(); }

TCoef TCoef::shifted_down() const {
    if (!divisible_by_t()) throw Error(ErrCode::domain, "coefficient not divisible by T");
    TCoef r;
    r.field_ = field_;
    if (c_.size() > 1) r.c_.assign(c_.begin() + 1, c_.end());
    return r;
}

FieldElem TCoef::eval_zero() const {
    return c_.empty() ? FieldElem::zero(field_) : c_[0];
}

bool TCoef::operator==(const TCoef& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string TCoef::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0)
            os << c_[i].str();
        else if (c_[i].is_one())
            os << (i == 1 ? "T" : "T^" + std::to_string(i));
        else
            os << "(" << c_[i].str() << ")*T" << (i == 1 ? "" : "^" + std::to_string(i));
    }
    return os.str();
}

// ---- SRAElement

long SRAElement::degree() const {
    long d = -1;
    for (const auto& [k, c] : terms) {
        long s = 0;
        for (int e : k.first) s += e;
        d = std::max(d, s);
    }
    return d;
}

void SRAElement::add(const std::vector<int>& mono, int gelem, const TCoef& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(mono, gelem);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SRAElement SRAElement::operator+(const SRAElement& o) const {
    SRAElement r = *this;
    for (const auto& [k, c] : o.terms) r.add(k.first, k.second, c);
    return r;
}

SRAElement SRAElement::operator-(const SRAElement& o) const {
    SRAElement r = *this;
    for (const auto& [k, c] : o.terms) r.add(k.first, k.second, -c);
    return r;
}

SRAElement SRAElement::scaled(const TCoef& c) const {
    SRAElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms) r.add(k.first, k.second, v * c);
    return r;
}

bool SRAElement::operator==(const SRAElement& o) const {
    return terms == o.terms;
}

// ---- SRAEngine

std::shared_ptr<SRAEngine> SRAEngine::build(std::shared_ptr<const MatrixGroup> G,
                                            std::optional<FieldElem> t,
                                            const std::map<int, FieldElem>& c_by_class,
                                            bool corrupt_sign) {
    if (!G->has_symplectic_form())
        throw Error(ErrCode::domain, "symplectic reflection algebra needs a symplectic form");
    if (!G->preserves_form())
        throw Error(ErrCode::domain, "group is not symplectic for the given form");

    auto E = std::shared_ptr<SRAEngine>(new SRAEngine());
    E->G_ = std::move(G);
    E->field_ = E->G_->field();
    E->formal_ = !t.has_value();
    E->t_value_ = t ? *t : FieldElem::zero(E->field_);
    E->corrupt_ = corrupt_sign;
    E->refl_ = symplectic_reflections(*E->G_);

    for (const auto& r : E->refl_.reflections) {
        auto it = c_by_class.find(r.conj_class);
        if (it == c_by_class.end())
            throw Error(ErrCode::domain, "class function c missing on reflection class " +
                                             std::to_string(r.conj_class));
        E->c_of_refl_.push_back(it->second);
    }
    for (const auto& [cls, val] : c_by_class)
        if (cls < 0 || cls >= static_cast<int>(E->refl_.classes.size()))
            throw Error(ErrCode::domain, "class function c given on a nonexistent class " +
                                             std::to_string(cls));

    int n = E->nletters();
    E->comm_.assign(n, std::vector<SRAElement>(n));
    const Mat& w = E->G_->symplectic_form();
    std::vector<int> unit(n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (i == k) continue;
            SRAElement r;
            FieldElem wik = w.at(i, k);
            if (!wik.is_zero()) {
                TCoef tc = E->formal_ ? TCoef::formal_t(E->field_) * TCoef(wik)
                                      : TCoef(E->t_value_ * wik);
                r.add(unit, E->G_->identity_index(), tc);
            }
            for (size_t s = 0; s < E->refl_.reflections.size(); ++s) {
                const auto& sr = E->refl_.reflections[s];
                FieldElem wsik = sr.omega_s.at(i, k);
                if (wsik.is_zero()) continue;
                r.add(unit, sr.elem, TCoef(E->c_of_refl_[s] * wsik));
            }
            E->comm_[i][k] = std::move(r);
        }
    return E;
}

SRAElement SRAEngine::one() const {
    SRAElement e;
    e.add(std::vector<int>(nletters(), 0), G_->identity_index(), TCoef(FieldElem::one(field_)));
    return e;
}

SRAElement SRAEngine::scalar(const FieldElem& v) const {
    SRAElement e;
    e.add(std::vector<int>(nletters(), 0), G_->identity_index(), TCoef(v));
    return e;
}

SRAElement SRAEngine::letter(int i) const {
    std::vector<int> m(nletters(), 0);
    m[i] = 1;
    SRAElement e;
    e.add(m, G_->identity_index(), TCoef(FieldElem::one(field_)));
    return e;
}

SRAElement SRAEngine::group_element(int g) const {
    SRAElement e;
    e.add(std::vector<int>(nletters(), 0), g, TCoef(FieldElem::one(field_)));
    return e;
}

SRAElement SRAEngine::commutation_term(int i, int k) const { return comm_[i][k]; }

const SRAElement& SRAEngine::insert(const std::vector<int>& mono, int i) const {
    auto key = std::make_pair(mono, i);
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = insert_memo_.find(key);
        if (it != insert_memo_.end()) return it->second;
    }
    int n = nletters();
    int k = -1;
    for (int j = n - 1; j > i; --j)
        if (mono[j] > 0) { k = j; break; }

    SRAElement result;
    if (k < 0) {
        std::vector<int> m = mono;
        m[i] += 1;
        result.add(m, G_->identity_index(), TCoef(FieldElem::one(field_)));
    } else {
        // x^mono x_i = (x^{mono - e_k} x_i) x_k - x^{mono - e_k} r_{ik}
        std::vector<int> m2 = mono;
        m2[k] -= 1;
        SRAElement A = mul_letter(insert(m2, i), k);
        SRAElement B;
        long prefix_deg = 0;
        for (int e : mono) prefix_deg += e;
        bool flip = corrupt_ && prefix_deg >= 2;
        for (const auto& [rk, rc] : comm_[i][k].terms) {
            // x^{m2} * (scalar x group element)
            TCoef c = flip ? -rc : rc;
            B.add(m2, rk.second, c);
        }
        result = A - B;
    }
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto [it, inserted] = insert_memo_.emplace(std::move(key), std::move(result));
    return it->second;
}

SRAElement SRAEngine::mul_letter(const SRAElement& e, int j) const {
    SRAElement out;
    int n = nletters();
    for (const auto& [key, c] : e.terms) {
        const auto& [m, g] = key;
        const Mat& gm = G_->elem(g);
        for (int i = 0; i < n; ++i) {
            FieldElem a = gm.at(i, j); // gamma(x_j) = sum_i gamma_ij x_i
            if (a.is_zero()) continue;
            const SRAElement& ins = insert(m, i);
            TCoef ca = c * TCoef(a);
            for (const auto& [ikey, ic] : ins.terms)
                out.add(ikey.first, G_->mul(ikey.second, g), ca * ic);
        }
    }
    return out;
}

SRAElement SRAEngine::mul_group(const SRAElement& e, int g) const {
    SRAElement out;
    for (const auto& [key, c] : e.terms) out.add(key.first, G_->mul(key.second, g), c);
    return out;
}

SRAElement SRAEngine::mul(const SRAElement& a, const SRAElement& b) const {
    SRAElement out;
    int n = nletters();
    for (const auto& [key, c] : b.terms) {
        const auto& [m, g] = key;
        SRAElement cur = a;
        for (int l = 0; l < n; ++l)
            for (int rep = 0; rep < m[l]; ++rep) cur = mul_letter(cur, l);
        cur = mul_group(cur, g);
        out = out + cur.scaled(c);
    }
    return out;
}

SRAElement SRAEngine::commutator(const SRAElement& a, const SRAElement& b) const {
    return mul(a, b) - mul(b, a);
}

SRAElement SRAEngine::normal_form(const std::vector<WordToken>& word) const {
    SRAElement e = one();
    for (const auto& tok : word) {
        if (tok.is_letter) {
            if (tok.index < 0 || tok.index >= nletters())
                throw Error(ErrCode::domain, "letter index out of range");
            e = mul_letter(e, tok.index);
        } else {
            if (tok.index < 0 || tok.index >= G_->order())
                throw Error(ErrCode::domain, "group element index out of range");
            e = mul_group(e, tok.index);
        }
    }
    return e;
}

std::string SRAEngine::describe(const SRAElement& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : e.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < nletters(); ++i) {
            for (int rep = 0; rep < key.first[i]; ++rep) os << "*v" << i;
        }
        if (key.second != G_->identity_index()) os << "*g" << key.second;
    }
    return os.str();
}

// ---- PBW certification

namespace {

// flatten an SRAElement into coordinates over (mono, group, T-power)
struct SRADict {
    std::map<std::tuple<std::vector<int>, int, int>, int> index;
    int get(const std::vector<int>& m, int g, int tp) {
        auto key = std::make_tuple(m, g, tp);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(index.size());
        index.emplace(std::move(key), id);
        return id;
    }
    int size() const { return static_cast<int>(index.size()); }
};

std::vector<FieldElem> flatten(const SRAElement& e, SRADict& dict, const FieldPtr& f) {
    std::vector<FieldElem> v(dict.size(), FieldElem::zero(f));
    for (const auto& [key, c] : e.terms) {
        for (int tp = 0; tp <= c.degree(); ++tp) {
            if (c.at(tp).is_zero()) continue;
            int id = dict.get(key.first, key.second, tp);
            if (id >= static_cast<int>(v.size())) v.resize(dict.size(), FieldElem::zero(f));
            v[id] = c.at(tp);
        }
    }
    return v;
}

} // namespace

PbwReport pbw_dimension_check(const SRAEngine& E, int max_degree) {
    PbwReport rep;
    int n = E.nletters();
    long ord = E.group().order();
    const FieldPtr& f = E.field();

    // words by length; level L has n^L entries indexed in base n
    std::vector<std::vector<SRAElement>> levels(max_degree + 1);
    levels[0] = {E.one()};
    for (int L = 1; L <= max_degree; ++L) {
        size_t count = levels[L - 1].size() * n;
        if (count > 2'000'000)
            throw Error(ErrCode::cap_exceeded, "pbw check word count too large");
        levels[L].reserve(count);
        for (const auto& prev : levels[L - 1])
            for (int j = 0; j < n; ++j) levels[L].push_back(E.mul_letter(prev, j));
    }

    SRADict dict;
    RowSpan discrepancies(f, 0); // rebuilt lazily once dict grows
    std::vector<std::vector<FieldElem>> disc_vecs;

    long collapse = 0;
    for (int L = 0; L <= max_degree; ++L) {
        bool consistent = true;
        if (L >= 2) {
            size_t words = levels[L].size();
            for (size_t w = 0; w < words; ++w) {
                // digits of w in base n: first s letters form u, rest v
                for (int s = 1; s < L; ++s) {
                    size_t pow_vs = 1;
                    for (int q = 0; q < L - s; ++q) pow_vs *= n;
                    size_t u = w / pow_vs;
                    size_t v = w % pow_vs;
                    SRAElement prod = E.mul(levels[s][u], levels[L - s][v]);
                    SRAElement diff = prod - levels[L][w];
                    if (!diff.is_zero()) {
                        consistent = false;
                        disc_vecs.push_back(flatten(diff, dict, f));
                    }
                }
            }
        }
        if (!consistent && rep.first_failure_degree < 0) rep.first_failure_degree = L;
        // rank of all discrepancies seen so far
        if (!disc_vecs.empty()) {
            RowSpan span(f, dict.size());
            for (auto v : disc_vecs) {
                v.resize(dict.size(), FieldElem::zero(f));
                span.add(std::move(v));
            }
            collapse = span.dim();
        }
        PbwDegreeRow row;
        row.degree = L;
        row.expected = ord * count_monomials_up_to(n, L);
        row.dim = row.expected - collapse;
        row.consistent = consistent;
        rep.rows.push_back(row);
    }
    rep.pass = true;
    for (const auto& r : rep.rows)
        if (!r.consistent || r.dim != r.expected) rep.pass = false;
    return rep;
}

// ---- centre

std::vector<SRAElement> center_basis(const SRAEngine& E, int max_degree) {
    if (E.formal())
        throw Error(ErrCode::domain, "center_basis needs a numeric t engine");
    const FieldPtr& f = E.field();
    int n = E.nletters();
    long ord = E.group().order();

    // basis of F_<=d: (mono, group element)
    std::vector<std::pair<std::vector<int>, int>> basis;
    for (const auto& m : monomials_up_to(n, max_degree))
        for (int g = 0; g < ord; ++g) basis.emplace_back(m.exps(), g);

    std::vector<SRAElement> gens_to_test;
    for (int i = 0; i < n; ++i) gens_to_test.push_back(E.letter(i));
    for (int g : E.group().generator_indices()) gens_to_test.push_back(E.group_element(g));

    SRADict dict;
    std::vector<std::vector<std::vector<FieldElem>>> cons(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) {
        SRAElement b;
        b.add(basis[k].first, basis[k].second, TCoef(FieldElem::one(f)));
        for (const auto& g : gens_to_test)
            cons[k].push_back(flatten(E.commutator(b, g), dict, f));
    }
    int ncols = dict.size();
    int nc = static_cast<int>(gens_to_test.size());
    Mat A(f, static_cast<int>(basis.size()), std::max(1, nc * ncols));
    for (size_t k = 0; k < basis.size(); ++k)
        for (int i = 0; i < nc; ++i)
            for (size_t c = 0; c < cons[k][i].size(); ++c)
                A.at(static_cast<int>(k), i * ncols + static_cast<int>(c)) = cons[k][i][c];
    auto kernel = A.transpose().kernel_basis();

    std::vector<SRAElement> out;
    for (const auto& lam : kernel) {
        SRAElement z;
        for (size_t k = 0; k < basis.size(); ++k)
            if (!lam[k].is_zero()) z.add(basis[k].first, basis[k].second, TCoef(lam[k]));
        if (!z.is_zero()) out.push_back(std::move(z));
    }
    std::sort(out.begin(), out.end(), [](const SRAElement& a, const SRAElement& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.terms.begin()->first < b.terms.begin()->first;
    });
    return out;
}

QuantizedBracket quantized_bracket(const SRAEngine& formal_engine, const SRAEngine& zero_engine,
                                   const SRAElement& z1, const SRAElement& z2) {
    if (!formal_engine.formal())
        throw Error(ErrCode::domain, "quantized_bracket needs the formal-T engine");
    // inputs must be central at t = 0
    for (int i = 0; i < zero_engine.nletters(); ++i) {
        if (!zero_engine.commutator(z1, zero_engine.letter(i)).is_zero() ||
            !zero_engine.commutator(z2, zero_engine.letter(i)).is_zero())
            throw Error(ErrCode::domain, "quantized_bracket input is not central at t = 0");
    }
    for (int g : zero_engine.group().generator_indices()) {
        if (!zero_engine.commutator(z1, zero_engine.group_element(g)).is_zero() ||
            !zero_engine.commutator(z2, zero_engine.group_element(g)).is_zero())
            throw Error(ErrCode::domain, "quantized_bracket input is not central at t = 0");
    }

    SRAElement k = formal_engine.commutator(z1, z2);
    for (const auto& [key, c] : k.terms)
        if (!c.divisible_by_t())
            throw Error(ErrCode::domain,
                        "commutator of lifts is not divisible by T (invalid lift)");
    SRAElement q;
    for (const auto& [key, c] : k.terms)
        q.add(key.first, key.second, TCoef(c.shifted_down().eval_zero()));

    QuantizedBracket out;
    out.value = std::move(q);
    out.central_certified = true;
    for (int i = 0; i < zero_engine.nletters(); ++i)
        if (!zero_engine.commutator(out.value, zero_engine.letter(i)).is_zero())
            out.central_certified = false;
    for (int g : zero_engine.group().generator_indices())
        if (!zero_engine.commutator(out.value, zero_engine.group_element(g)).is_zero())
            out.central_certified = false;
    return out;
}

// ---- centre presentation

namespace {

long multinomial(const std::vector<int>& m) {
    long total = 0;
    for (int e : m) total += e;
    long r = 1;
    long rem = total;
    for (int e : m) {
        // multiply C(rem, e)
        for (int i = 0; i < e; ++i) r = r * (rem - i) / (i + 1);
        rem -= e;
    }
    return r;
}

// leading PBW key: maximal (degree, exps, group) among top-degree terms
std::pair<std::vector<int>, int> leading_key(const SRAElement& e) {
    long top = e.degree();
    std::pair<std::vector<int>, int> best;
    bool have = false;
    for (const auto& [key, c] : e.terms) {
        long d = 0;
        for (int x : key.first) d += x;
        if (d != top) continue;
        if (!have || key > best) {
            best = key;
            have = true;
        }
    }
    return best;
}

std::vector<std::string> letter_names(int k) {
    std::vector<std::string> names;
    for (int i = 0; i < k && k <= 26; ++i)
        names.push_back(std::string(1, static_cast<char>('A' + i)));
    for (int i = 1; names.size() < static_cast<size_t>(k); ++i)
        names.push_back("g" + std::to_string(i));
    return names;
}

} // namespace

CenterPresentation center_presentation(const SRAEngine& zero_engine,
                                       const SRAEngine& formal_engine, int degree) {
    const FieldPtr& f = zero_engine.field();
    auto cb = center_basis(zero_engine, degree);

    CenterPresentation cp;
    cp.ov_ring = default_ov_ring(zero_engine.group());

    // pool machinery: normal forms of monomials in the chosen generators
    auto pool_span = [&](const std::vector<SRAElement>& gens, const std::vector<long>& degs,
                         long cap_weight, SRADict& dict, std::vector<SRAElement>* pool_elems,
                         std::vector<std::vector<int>>* pool_exps) {
        // enumerate exponent vectors with sum_i e_i deg_i <= cap_weight
        std::vector<std::vector<int>> exps;
        std::vector<int> cur(gens.size(), 0);
        std::function<void(size_t, long)> rec = [&](size_t i, long left) {
            if (i == gens.size()) {
                exps.push_back(cur);
                return;
            }
            for (int e = 0;; ++e) {
                cur[i] = e;
                long cost = e * degs[i];
                if (cost > left) break;
                rec(i + 1, left - cost);
            }
            cur[i] = 0;
        };
        rec(0, cap_weight);
        std::vector<SRAElement> elems;
        for (const auto& e : exps) {
            SRAElement acc = zero_engine.one();
            for (size_t i = 0; i < gens.size(); ++i)
                for (int rep = 0; rep < e[i]; ++rep) acc = zero_engine.mul(acc, gens[i]);
            elems.push_back(std::move(acc));
        }
        if (pool_exps) *pool_exps = exps;
        std::vector<std::vector<FieldElem>> vecs;
        for (const auto& e : elems) vecs.push_back(flatten(e, dict, f));
        if (pool_elems) *pool_elems = std::move(elems);
        return vecs;
    };

    // choose a minimal generating set among the centre basis elements
    for (const auto& cand : cb) {
        if (cand.degree() < 1) continue;
        SRADict dict;
        auto vecs = pool_span(cp.generators, cp.degrees, cand.degree(), dict, nullptr, nullptr);
        std::vector<FieldElem> target = flatten(cand, dict, f);
        RowSpan span(f, dict.size());
        for (auto& v : vecs) {
            v.resize(dict.size(), FieldElem::zero(f));
            span.add(std::move(v));
        }
        target.resize(dict.size(), FieldElem::zero(f));
        if (span.contains(target)) continue;
        // normalize: leading PBW coefficient = number of orderings of the word
        auto lk = leading_key(cand);
        TCoef lead = cand.terms.at(lk);
        FieldElem scale = FieldElem(f, Rat(multinomial(lk.first))) / lead.eval_zero();
        cp.generators.push_back(cand.scaled(TCoef(scale)));
        cp.degrees.push_back(cand.degree());
    }

    // naming order: degree, then sparser leading words first (squares before
    // mixed words), then exponents descending
    {
        std::vector<size_t> perm(cp.generators.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        auto sort_key = [&](size_t i) {
            auto lk = leading_key(cp.generators[i]);
            int support = 0;
            for (int e : lk.first)
                if (e) ++support;
            return std::make_tuple(cp.degrees[i], support, lk.first);
        };
        std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
            auto ka = sort_key(a), kb = sort_key(b);
            if (std::get<0>(ka) != std::get<0>(kb)) return std::get<0>(ka) < std::get<0>(kb);
            if (std::get<1>(ka) != std::get<1>(kb)) return std::get<1>(ka) < std::get<1>(kb);
            return std::get<2>(ka) > std::get<2>(kb);
        });
        std::vector<SRAElement> g2;
        std::vector<long> d2;
        for (size_t i : perm) {
            g2.push_back(cp.generators[i]);
            d2.push_back(cp.degrees[i]);
        }
        cp.generators = std::move(g2);
        cp.degrees = std::move(d2);
    }

    int k = static_cast<int>(cp.generators.size());
    cp.pres_ring = PolyRing::make(f, letter_names(k));

    // relations: kernel of the pool evaluation up to weight 2*degree
    long relation_weight = 2 * degree;
    SRADict dict;
    std::vector<std::vector<int>> pool_exps;
    std::vector<SRAElement> pool_elems;
    auto vecs = pool_span(cp.generators, cp.degrees, relation_weight, dict, &pool_elems,
                          &pool_exps);
    int ncols = dict.size();
    Mat A(f, static_cast<int>(vecs.size()), std::max(1, ncols));
    for (size_t r = 0; r < vecs.size(); ++r)
        for (size_t c = 0; c < vecs[r].size(); ++c)
            A.at(static_cast<int>(r), static_cast<int>(c)) = vecs[r][c];
    auto kernel = A.transpose().kernel_basis();
    std::vector<Poly> rel_gens;
    for (const auto& lam : kernel) {
        Poly p(cp.pres_ring);
        for (size_t r = 0; r < pool_exps.size(); ++r)
            if (!lam[r].is_zero())
                p += Poly::monomial(cp.pres_ring, Monomial(pool_exps[r]), lam[r]);
        if (!p.is_zero()) rel_gens.push_back(p.monic());
    }
    cp.relations = Ideal(cp.pres_ring, std::move(rel_gens));

    // generation check: every centre-basis element lies in the pool span
    {
        RowSpan span(f, dict.size());
        for (auto v : vecs) {
            v.resize(dict.size(), FieldElem::zero(f));
            span.add(std::move(v));
        }
        cp.generation_certified = true;
        for (const auto& z : cb) {
            auto v = flatten(z, dict, f);
            v.resize(dict.size(), FieldElem::zero(f));
            if (!span.contains(v)) cp.generation_certified = false;
        }

        // quantized bracket matrix, expressed in the presentation variables
        cp.bracket_matrix.assign(k, std::vector<Poly>(k, Poly(cp.pres_ring)));
        Mat P(f, ncols, static_cast<int>(vecs.size()));
        for (size_t r = 0; r < vecs.size(); ++r)
            for (size_t c = 0; c < vecs[r].size(); ++c)
                P.at(static_cast<int>(c), static_cast<int>(r)) = vecs[r][c];
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                auto qb = quantized_bracket(formal_engine, zero_engine, cp.generators[i],
                                            cp.generators[j]);
                if (!qb.central_certified)
                    throw Error(ErrCode::internal, "quantized bracket failed centrality");
                auto v = flatten(qb.value, dict, f);
                v.resize(ncols, FieldElem::zero(f));
                auto sol = P.solve(v);
                if (!sol)
                    throw Error(ErrCode::domain,
                                "generation not certified at this degree: bracket not "
                                "expressible in the generators");
                Poly p(cp.pres_ring);
                for (size_t r = 0; r < pool_exps.size(); ++r)
                    if (!(*sol)[r].is_zero())
                        p += Poly::monomial(cp.pres_ring, Monomial(pool_exps[r]), (*sol)[r]);
                cp.bracket_matrix[i][j] = p;
                cp.bracket_matrix[j][i] = -p;
            }
    }

    // commutative top symbols (identity group component of the top degree)
    for (const auto& g : cp.generators) {
        long top = g.degree();
        Poly sym(cp.ov_ring);
        for (const auto& [key, c] : g.terms) {
            long d = 0;
            for (int e : key.first) d += e;
            if (d != top || key.second != zero_engine.group().identity_index()) continue;
            sym += Poly::monomial(cp.ov_ring, Monomial(key.first), c.eval_zero());
        }
        cp.symbols.push_back(std::move(sym));
    }
    return cp;
}

PoissonStructure CenterPresentation::structure() const {
    return PoissonStructure::make(pres_ring, relations, bracket_matrix);
}

// ---- fibers of A_c over Maxspec Z_c

FiberAlgebra sra_fiber(const SRAEngine& zero_engine, const CenterPresentation& cp,
                       const std::vector<FieldElem>& point) {
    const FieldPtr& f = zero_engine.field();
    if (static_cast<int>(point.size()) != cp.pres_ring->nvars())
        throw Error(ErrCode::dimension_mismatch, "point length != presentation variables");
    for (const auto& r : cp.relations.gens())
        if (!r.evaluate(point).is_zero())
            throw Error(ErrCode::domain, "point does not satisfy the centre relations");

    long maxdeg = 0;
    for (long d : cp.degrees) maxdeg = std::max(maxdeg, d);

    for (long D = 2 * maxdeg + 2; D <= 2 * maxdeg + 8; D += 2) {
        // dictionary ordered by decreasing degree so pivots land on top parts
        std::vector<std::pair<std::vector<int>, int>> dict;
        for (const auto& m : monomials_up_to(zero_engine.nletters(), D))
            for (int g = 0; g < zero_engine.group().order(); ++g)
                dict.emplace_back(m.exps(), g);
        std::sort(dict.begin(), dict.end(), [](const auto& a, const auto& b) {
            long da = 0, db = 0;
            for (int e : a.first) da += e;
            for (int e : b.first) db += e;
            if (da != db) return da > db;
            return a < b;
        });
        std::map<std::pair<std::vector<int>, int>, int> pos;
        for (size_t i = 0; i < dict.size(); ++i) pos[dict[i]] = static_cast<int>(i);
        auto to_vec = [&](const SRAElement& e) {
            std::vector<FieldElem> v(dict.size(), FieldElem::zero(f));
            for (const auto& [key, c] : e.terms) v[pos.at(key)] = c.eval_zero();
            return v;
        };

        RowSpan span(f, static_cast<int>(dict.size()));
        for (size_t i = 0; i < cp.generators.size(); ++i) {
            SRAElement shifted = cp.generators[i] - zero_engine.scalar(point[i]);
            for (const auto& [key, g] : dict) {
                long d = 0;
                for (int e : key) d += e;
                if (d + cp.degrees[i] > D) continue;
                SRAElement b;
                b.add(key, g, TCoef(FieldElem::one(f)));
                span.add(to_vec(zero_engine.mul(shifted, b)));
            }
        }

        std::vector<bool> is_pivot(dict.size(), false);
        for (int p : span.pivots()) is_pivot[p] = true;
        std::vector<int> reps;
        long max_rep_deg = 0;
        for (size_t i = 0; i < dict.size(); ++i) {
            if (is_pivot[i]) continue;
            reps.push_back(static_cast<int>(i));
            long d = 0;
            for (int e : dict[i].first) d += e;
            max_rep_deg = std::max(max_rep_deg, d);
        }
        if (2 * max_rep_deg > D) continue; // representatives not interior enough

        int N = static_cast<int>(reps.size());
        std::map<int, int> rep_index;
        for (int i = 0; i < N; ++i) rep_index[reps[i]] = i;

        FiberAlgebra F;
        F.field = f;
        F.dim = N;
        bool ok = true;
        F.table.assign(N, std::vector<std::vector<FieldElem>>(
                              N, std::vector<FieldElem>(N, FieldElem::zero(f))));
        for (int a = 0; a < N && ok; ++a) {
            SRAElement ea;
            ea.add(dict[reps[a]].first, dict[reps[a]].second, TCoef(FieldElem::one(f)));
            for (int b = 0; b < N && ok; ++b) {
                SRAElement eb;
                eb.add(dict[reps[b]].first, dict[reps[b]].second, TCoef(FieldElem::one(f)));
                SRAElement prod = zero_engine.mul(ea, eb);
                auto v = to_vec(prod); // throws if the product leaves degree D
                auto residue = span.reduce(v);
                for (size_t i = 0; i < residue.size(); ++i) {
                    if (residue[i].is_zero()) continue;
                    auto it = rep_index.find(static_cast<int>(i));
                    if (it == rep_index.end()) { ok = false; break; }
                    F.table[a][b][it->second] = residue[i];
                }
            }
        }
        if (!ok) continue;
        for (int i = 0; i < N; ++i) {
            SRAElement e;
            e.add(dict[reps[i]].first, dict[reps[i]].second, TCoef(FieldElem::one(f)));
            F.labels.push_back(zero_engine.describe(e));
        }
        if (!F.is_associative() || !F.has_unit()) continue;
        return F;
    }
    throw Error(ErrCode::internal, "sra_fiber did not stabilize within the degree window");
}

} // namespace pstrata
