#include "pstrata/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace pstrata {

namespace {
constexpr int kExpCap = 1 << 20;
}

// ---- Monomial

long Monomial::total_degree() const {
    long d = 0;
    for (int e : e_) d += e;
    return d;
}

bool Monomial::is_one() const {
    for (int e : e_)
        if (e) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] += o.e_[i];
        if (r.e_[i] > kExpCap)
            throw Error(ErrCode::overflow, "monomial exponent overflow");
    }
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= o.e_[i];
        if (r.e_[i] < 0) return std::nullopt;
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

// ---- MonomialOrder

MonomialOrder MonomialOrder::lex(std::vector<int> perm) {
    return {Kind::lex, std::move(perm), 0};
}
MonomialOrder MonomialOrder::degrevlex(std::vector<int> perm) {
    return {Kind::degrevlex, std::move(perm), 0};
}
MonomialOrder MonomialOrder::elimination(std::vector<int> perm, int block) {
    return {Kind::elim, std::move(perm), block};
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    const int n = a.nvars();
    auto var = [&](int i) { return perm.empty() ? i : perm[i]; };
    if (kind == Kind::lex) {
        for (int i = 0; i < n; ++i) {
            int d = a[var(i)] - b[var(i)];
            if (d) return d > 0 ? 1 : -1;
        }
        return 0;
    }
    if (kind == Kind::elim) {
        long da = 0, db = 0;
        for (int i = 0; i < elim_block; ++i) { da += a[var(i)]; db += b[var(i)]; }
        if (da != db) return da > db ? 1 : -1;
        // fall through to degrevlex tiebreak
    }
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    for (int i = n - 1; i >= 0; --i) {
        int d = a[var(i)] - b[var(i)];
        if (d) return d > 0 ? -1 : 1;
    }
    return 0;
}

bool MonomialOrder::equal_to(const MonomialOrder& o) const {
    return kind == o.kind && perm == o.perm && elim_block == o.elim_block;
}

std::string MonomialOrder::describe() const {
    switch (kind) {
    case Kind::lex: return "lex";
    case Kind::degrevlex: return "degrevlex";
    case Kind::elim: return "elimination(" + std::to_string(elim_block) + ")";
    }
    return "?";
}

// ---- PolyRing

PolyRing::PolyRing(FieldPtr f, std::vector<std::string> v, MonomialOrder o)
    : field_(std::move(f)), vars_(std::move(v)), order_(std::move(o)) {}

RingPtr PolyRing::make(FieldPtr field, std::vector<std::string> variables, MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& name : variables) {
        if (name.empty() || (!std::isalpha(static_cast<unsigned char>(name[0]))))
            throw Error(ErrCode::domain, "bad variable name: '" + name + "'");
        if (name == "zeta")
            throw Error(ErrCode::domain, "'zeta' is reserved for the cyclotomic generator");
        if (!seen.insert(name).second)
            throw Error(ErrCode::domain, "duplicate variable name: '" + name + "'");
    }
    if (!order.perm.empty() && order.perm.size() != variables.size())
        throw Error(ErrCode::domain, "order permutation length mismatch");
    return RingPtr(new PolyRing(std::move(field), std::move(variables), std::move(order)));
}

int PolyRing::variable_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool PolyRing::compatible(const PolyRing& o) const {
    return field_->same(*o.field_) && vars_ == o.vars_;
}

bool PolyRing::same(const PolyRing& o) const {
    return compatible(o) && order_.equal_to(o.order_);
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
    return make(field_, vars_, std::move(order));
}

// ---- Poly

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ring_->order().cmp(a.mono, b.mono) > 0;
    });
    terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            terms_.push_back(std::move(t));
        }
    }
}

Poly Poly::constant(const RingPtr& r, const FieldElem& c) {
    Poly p(r);
    if (!c.is_zero()) p.terms_.push_back({Monomial(r->nvars()), c});
    return p;
}

Poly Poly::constant(const RingPtr& r, const Rat& q) {
    return constant(r, FieldElem(r->field(), q));
}

Poly Poly::variable(const RingPtr& r, int i) {
    Monomial m(r->nvars());
    m[i] = 1;
    return monomial(r, m, FieldElem::one(r->field()));
}

Poly Poly::monomial(const RingPtr& r, Monomial m, FieldElem c) {
    Poly p(r);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

long Poly::degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw Error(ErrCode::domain, "zero polynomial has no leading term");
    return terms_.front();
}
const Monomial& Poly::leading_monomial() const { return leading_term().mono; }
const FieldElem& Poly::leading_coeff() const { return leading_term().coeff; }

FieldElem Poly::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return FieldElem::zero(ring_->field());
}

void Poly::check_ring(const Poly& o) const {
    if (!ring_ || !o.ring_ || !ring_->same(*o.ring_))
        throw Error(ErrCode::ring_mismatch, "polynomials from different rings");
}

Poly Poly::operator-() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_ring(o);
    Poly r(ring_);
    const auto& ord = ring_->order();
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FieldElem s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_ring(o);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            acc.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return Poly(ring_, std::move(acc));
}

Poly Poly::scaled(const FieldElem& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Poly Poly::mono_mul(const Monomial& m, const FieldElem& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw Error(ErrCode::domain, "negative polynomial power");
    Poly r = constant(ring_, FieldElem::one(ring_->field()));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

Poly Poly::derivative(int var) const {
    Poly r(ring_);
    for (const auto& t : terms_) {
        int e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m[var] = e - 1;
        r.terms_.push_back({std::move(m), t.coeff * FieldElem(ring_->field(), Rat(e))});
    }
    // derivative preserves the term ordering for any monomial order that
    // compares by dividing out a fixed variable? Not in general: re-sort.
    return Poly(ring_, std::move(r.terms_));
}

FieldElem Poly::evaluate(const std::vector<FieldElem>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
        throw Error(ErrCode::dimension_mismatch, "point length != number of variables");
    // power tables per variable
    std::vector<std::vector<FieldElem>> pows(point.size());
    FieldElem acc = FieldElem::zero(ring_->field());
    for (const auto& t : terms_) {
        FieldElem v = t.coeff;
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = t.mono[i];
            if (e == 0) continue;
            auto& tab = pows[i];
            if (tab.empty()) tab.push_back(point[i]);
            while (static_cast<int>(tab.size()) < e) tab.push_back(tab.back() * point[i]);
            v = v * tab[e - 1];
        }
        acc = acc + v;
    }
    return acc;
}

Poly Poly::substitute(const RingPtr& target, const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
        throw Error(ErrCode::dimension_mismatch, "substitution image count mismatch");
    std::vector<std::vector<Poly>> pows(images.size());
    FieldElem one = FieldElem::one(target->field());
    Poly acc(target);
    for (const auto& t : terms_) {
        Poly v = Poly::constant(target, FieldElem::from_coords(target->field(), t.coeff.coords()));
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = t.mono[i];
            if (e == 0) continue;
            auto& tab = pows[i];
            if (tab.empty()) tab.push_back(images[i]);
            while (static_cast<int>(tab.size()) < e) tab.push_back(tab.back() * images[i]);
            v = v * tab[e - 1];
        }
        acc = acc + v;
    }
    return acc;
}

Poly Poly::converted(const RingPtr& target) const {
    if (!ring_->compatible(*target))
        throw Error(ErrCode::ring_mismatch, "conversion between incompatible rings");
    std::vector<Term> ts = terms_;
    return Poly(target, std::move(ts));
}

bool Poly::operator==(const Poly& o) const {
    check_ring(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const FieldElem& c = t.coeff;
        bool simple = c.is_rational();
        // single zeta-power coefficients also print inline
        int zpow = -1;
        if (!simple) {
            int nz = 0;
            for (size_t i = 0; i < c.coords().size(); ++i)
                if (c.coords()[i] != 0) { ++nz; zpow = static_cast<int>(i); }
            if (nz != 1) zpow = -1;
        }
        std::string body;
        Rat q;
        if (simple) {
            q = c.rational_value();
        } else if (zpow >= 0) {
            q = c.coords()[zpow];
        }
        bool neg = false;
        if (simple || zpow >= 0) {
            neg = q < 0;
            if (neg) q = -q;
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;

        std::vector<std::string> factors;
        if (simple || zpow >= 0) {
            bool coeff_needed = (q != 1) || t.mono.is_one();
            if (zpow >= 0) coeff_needed = (q != 1);
            if (coeff_needed) factors.push_back(rat_str(q));
            if (zpow >= 1) factors.push_back(zpow == 1 ? "zeta" : "zeta^" + std::to_string(zpow));
        } else {
            factors.push_back("(" + c.str() + ")");
        }
        for (int i = 0; i < t.mono.nvars(); ++i) {
            int e = t.mono[i];
            if (e == 0) continue;
            std::string f = ring_->variable(i);
            if (e > 1) f += "^" + std::to_string(e);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) factors.push_back("1");
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

// ---- parser

namespace {

struct Parser {
    const std::string& text;
    const RingPtr& ring;
    size_t pos = 0;

    explicit Parser(const std::string& t, const RingPtr& r) : text(t), ring(r) {}

    // positions in errors are 1-based character offsets
    [[noreturn]] void fail(const std::string& what, size_t at) {
        throw Error(ErrCode::parse, "syntax error at offset " + std::to_string(at + 1) + ": " + what,
                    static_cast<long>(at + 1));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos != text.size()) fail("unexpected character '" + std::string(1, text[pos]) + "'", pos);
        return p;
    }

    Poly expr() {
        Poly acc = signed_term();
        for (;;) {
            skip_ws();
            if (eat('+')) {
                acc += signed_term();
            } else if (eat('-')) {
                acc -= signed_term();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly signed_term() {
        bool neg = false;
        while (eat('+') || (peek('-') && (eat('-'), true))) {
            if (text[pos - 1] == '-') neg = !neg;
        }
        Poly p = term();
        return neg ? -p : p;
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t at = pos;
            long e = integer();
            if (e < 0) fail("negative exponent", at);
            if (e > kExpCap) throw Error(ErrCode::overflow, "exponent too large");
            base = base.pow(e);
        }
        return base;
    }

    long integer() {
        skip_ws();
        size_t at = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer", pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > kExpCap) fail("integer literal too large here", at);
            ++pos;
        }
        return v;
    }

    Poly atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input", pos);
        char c = text[pos];
        if (c == '(') {
            size_t open = pos;
            ++pos;
            Poly p = expr();
            skip_ws();
            if (!eat(')')) fail("unbalanced '('", open);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected character '" + std::string(1, c) + "'", pos);
    }

    Poly number() {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string num = text.substr(start, pos - start);
        std::string den;
        // rational literal p/q (numeric denominator only)
        size_t save = pos;
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            size_t slash = pos;
            ++pos;
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected denominator", slash);
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            den = text.substr(dstart, pos - dstart);
            if (Rat(den) == 0) fail("zero denominator", dstart);
        } else {
            pos = save;
        }
        Rat q(den.empty() ? num : num + "/" + den);
        q.canonicalize();
        return Poly::constant(ring, q);
    }

    Poly identifier() {
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        if (name == "zeta") {
            if (ring->field()->is_rational())
                throw Error(ErrCode::bad_coefficient,
                            "coefficient not in field: 'zeta' used over Q (offset " +
                                std::to_string(start + 1) + ")",
                            static_cast<long>(start + 1));
            return Poly::constant(ring, FieldElem::zeta(ring->field()));
        }
        int idx = ring->variable_index(name);
        if (idx < 0)
            throw Error(ErrCode::unknown_variable,
                        "unknown variable '" + name + "' (offset " + std::to_string(start + 1) + ")",
                        static_cast<long>(start + 1));
        return Poly::variable(ring, idx);
    }
};

} // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    Parser p(text, ring);
    return p.parse();
}

FieldElem parse_field_elem(const std::string& text, const FieldPtr& field) {
    RingPtr r = PolyRing::make(field, {});
    Poly p = parse_poly(text, r);
    if (p.is_zero()) return FieldElem::zero(field);
    return p.terms()[0].coeff;
}

} // namespace pstrata
