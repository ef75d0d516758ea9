#include "pstrata/field.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace pstrata {

const char* err_code_name(ErrCode c) {
    switch (c) {
    case ErrCode::parse: return "parse";
    case ErrCode::unknown_variable: return "unknown_variable";
    case ErrCode::bad_coefficient: return "bad_coefficient";
    case ErrCode::ring_mismatch: return "ring_mismatch";
    case ErrCode::dimension_mismatch: return "dimension_mismatch";
    case ErrCode::budget: return "budget";
    case ErrCode::cap_exceeded: return "cap_exceeded";
    case ErrCode::domain: return "domain";
    case ErrCode::overflow: return "overflow";
    case ErrCode::invalid_structure: return "invalid_structure";
    case ErrCode::internal: return "internal";
    }
    return "unknown";
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

// ---- dense univariate helpers over Q (internal, for cyclotomic arithmetic)

namespace {

using UPoly = std::vector<Rat>; // coefficients, low to high; no trailing zeros

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

// quotient of exact division a / b (b monic up to leading coeff); remainder must be 0
UPoly udiv_exact(UPoly a, const UPoly& b) {
    UPoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        utrim(a);
    }
    if (!a.empty())
        throw Error(ErrCode::internal, "inexact univariate division");
    utrim(q);
    return q;
}

// remainder of a modulo m (m monic)
UPoly umod(UPoly a, const UPoly& m) {
    while (a.size() >= m.size()) {
        Rat c = a.back(); // m monic
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= c * m[i];
        utrim(a);
    }
    return a;
}

// extended gcd: returns (g, u) with u*a = g mod m, g constant when gcd(a,m)=1
std::pair<UPoly, UPoly> uinvert(const UPoly& a, const UPoly& m) {
    UPoly r0 = m, r1 = a, s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
        // r0 = q*r1 + r
        UPoly q;
        UPoly r = r0;
        q.assign(r.size() > r1.size() - 1 ? r.size() - r1.size() + 1 : 1, Rat(0));
        while (r.size() >= r1.size() && !r.empty()) {
            Rat c = r.back() / r1.back();
            size_t shift = r.size() - r1.size();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) r[shift + i] -= c * r1[i];
            utrim(r);
        }
        utrim(q);
        UPoly s = s0;
        // s = s0 - q*s1
        UPoly qs = umul(q, s1);
        if (s.size() < qs.size()) s.resize(qs.size(), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) s[i] -= qs[i];
        utrim(s);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
    }
    return {r0, s0};
}

UPoly cyclotomic_poly(int n) {
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    UPoly num(n + 1, Rat(0));
    num[0] = -1; num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = udiv_exact(num, cyclotomic_poly(d));
    }
    return num;
}

} // namespace

// ---- ExactField

ExactField::ExactField(int n) : n_(n) {
    if (n < 1) throw Error(ErrCode::domain, "cyclotomic order must be >= 1");
    if (n == 1) {
        minpoly_ = {Rat(-1), Rat(1)}; // x - 1; degree() == 1
    } else {
        minpoly_ = cyclotomic_poly(n);
    }
}

std::shared_ptr<const ExactField> ExactField::rationals() {
    static std::shared_ptr<const ExactField> q(new ExactField(1));
    return q;
}

std::shared_ptr<const ExactField> ExactField::cyclotomic(int n) {
    if (n < 1) throw Error(ErrCode::domain, "cyclotomic order must be >= 1");
    if (n <= 2) return rationals(); // zeta_1 = 1, zeta_2 = -1 are rational

    static std::mutex mu;
    static std::map<int, std::shared_ptr<const ExactField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::shared_ptr<const ExactField> f(new ExactField(n));
    cache[n] = f;
    return f;
}

std::string ExactField::describe() const {
    if (is_rational()) return "Q";
    return "Q(zeta_" + std::to_string(n_) + ")";
}

// ---- FieldElem

FieldElem::FieldElem(FieldPtr field, Rat value) : field_(std::move(field)) {
    value.canonicalize(); // raw (num, den) constructions are not reduced
    c_.assign(field_->degree(), Rat(0));
    c_[0] = std::move(value);
}

FieldElem FieldElem::zero(const FieldPtr& f) { return FieldElem(f, Rat(0)); }
FieldElem FieldElem::one(const FieldPtr& f) { return FieldElem(f, Rat(1)); }

FieldElem FieldElem::zeta(const FieldPtr& f) {
    if (f->is_rational())
        throw Error(ErrCode::bad_coefficient, "zeta is not an element of Q");
    std::vector<Rat> c(f->degree(), Rat(0));
    c[1] = 1;
    return FieldElem(f, std::move(c));
}

FieldElem FieldElem::from_coords(FieldPtr f, std::vector<Rat> coords) {
    if (static_cast<int>(coords.size()) != f->degree())
        throw Error(ErrCode::dimension_mismatch, "coordinate vector has wrong length");
    for (auto& q : coords) q.canonicalize();
    return FieldElem(std::move(f), std::move(coords));
}

void FieldElem::check_compatible(const FieldElem& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_))
        throw Error(ErrCode::ring_mismatch, "field elements from different fields");
}

bool FieldElem::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool FieldElem::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool FieldElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat FieldElem::rational_value() const {
    if (!is_rational())
        throw Error(ErrCode::domain, "field element is not rational");
    return c_[0];
}

FieldElem FieldElem::operator-() const {
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_compatible(o);
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
    return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_compatible(o);
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
    return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_compatible(o);
    if (field_->is_rational())
        return FieldElem(field_, {std::vector<Rat>{c_[0] * o.c_[0]}});
    UPoly a(c_.begin(), c_.end()), b(o.c_.begin(), o.c_.end());
    utrim(a); utrim(b);
    UPoly r = umod(umul(a, b), field_->min_poly());
    r.resize(field_->degree(), Rat(0));
    return FieldElem(field_, std::vector<Rat>(r.begin(), r.end()));
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error(ErrCode::domain, "division by zero");
    if (field_->is_rational())
        return FieldElem(field_, {std::vector<Rat>{Rat(1) / c_[0]}});
    UPoly a(c_.begin(), c_.end());
    utrim(a);
    auto [g, u] = uinvert(a, field_->min_poly());
    if (g.size() != 1)
        throw Error(ErrCode::internal, "non-invertible element in cyclotomic field");
    // u*a = g (constant): inverse = u/g
    for (auto& q : u) q /= g[0];
    UPoly r = umod(u, field_->min_poly());
    r.resize(field_->degree(), Rat(0));
    return FieldElem(field_, std::vector<Rat>(r.begin(), r.end()));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    return *this * o.inverse();
}

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem r = one(field_);
    FieldElem base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_compatible(o);
    return c_ == o.c_;
}

std::string FieldElem::str() const {
    if (field_->is_rational() || is_rational()) return rat_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        if (c_[i] == 0) continue;
        Rat q = c_[i];
        if (first) {
            if (q < 0) { os << "-"; q = -q; }
        } else {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        first = false;
        if (i == 0) {
            os << rat_str(q);
        } else {
            if (q != 1) os << rat_str(q) << "*";
            os << "zeta";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string FieldElem::key() const {
    std::string k;
    for (const auto& q : c_) {
        k += q.get_str();
        k += ',';
    }
    return k;
}

} // namespace pstrata
