#ifndef PSTRATA_POLY_HPP
#define PSTRATA_POLY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pstrata/field.hpp"

namespace pstrata {

// Exponent vector. Exponents are machine integers with overflow checks;
// in-scope degrees stay far below the cap.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : e_(std::move(e)) {}

    int nvars() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i]; }
    int& operator[](int i) { return e_[i]; }
    long total_degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const; // checked add
    // componentwise quotient; nullopt if not divisible
    std::optional<Monomial> divide(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    const std::vector<int>& exps() const { return e_; }

  private:
    std::vector<int> e_;
};

struct MonomialOrder {
    enum class Kind { lex, degrevlex, elim };
    Kind kind = Kind::degrevlex;
    // variable priority: perm[0] is the most significant variable (index into
    // the ring's variable list); empty means identity
    std::vector<int> perm;
    // for elim: the first elim_block entries of perm are eliminated first
    // (graded on that block, degrevlex overall as tiebreak)
    int elim_block = 0;

    static MonomialOrder lex(std::vector<int> perm = {});
    static MonomialOrder degrevlex(std::vector<int> perm = {});
    static MonomialOrder elimination(std::vector<int> block_first_perm, int block);

    // -1 if a < b, 0 if equal, +1 if a > b
    int cmp(const Monomial& a, const Monomial& b) const;
    bool equal_to(const MonomialOrder& o) const;
    std::string describe() const;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing : public std::enable_shared_from_this<PolyRing> {
  public:
    static RingPtr make(FieldPtr field, std::vector<std::string> variables,
                        MonomialOrder order = MonomialOrder::degrevlex());

    const FieldPtr& field() const { return field_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(int i) const { return vars_[i]; }
    int variable_index(const std::string& name) const; // -1 if absent
    const MonomialOrder& order() const { return order_; }

    // same variables and field in the same positions (order may differ)
    bool compatible(const PolyRing& o) const;
    bool same(const PolyRing& o) const;

    RingPtr with_order(MonomialOrder order) const;

  private:
    PolyRing(FieldPtr f, std::vector<std::string> v, MonomialOrder o);
    FieldPtr field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

struct Term {
    Monomial mono;
    FieldElem coeff;
};

// Multivariate polynomial in canonical form: terms sorted descending under
// the ring's monomial order, no zero coefficients.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, std::vector<Term> terms); // normalizes

    static Poly zero(const RingPtr& r) { return Poly(r); }
    static Poly constant(const RingPtr& r, const FieldElem& c);
    static Poly constant(const RingPtr& r, const Rat& q);
    static Poly variable(const RingPtr& r, int i);
    static Poly monomial(const RingPtr& r, Monomial m, FieldElem c);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // total degree; -1 for the zero polynomial (distinguished sentinel)
    long degree() const;
    int nterms() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term() const; // error on zero
    const Monomial& leading_monomial() const;
    const FieldElem& leading_coeff() const;

    FieldElem coeff_of(const Monomial& m) const; // zero if absent

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const FieldElem& c) const;
    Poly mono_mul(const Monomial& m, const FieldElem& c) const;
    Poly pow(long e) const;
    Poly monic() const; // divide by leading coefficient

    Poly derivative(int var) const;
    FieldElem evaluate(const std::vector<FieldElem>& point) const;
    // substitute target-ring polynomials for the variables
    Poly substitute(const RingPtr& target, const std::vector<Poly>& images) const;
    // re-sort into another ring with the same variables/field
    Poly converted(const RingPtr& target) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void check_ring(const Poly& o) const;
    RingPtr ring_;
    std::vector<Term> terms_; // sorted descending
};

// Grammar: integers, rationals p/q, identifiers, `zeta` over cyclotomic
// fields, + - * ^, parentheses; no implicit multiplication; whitespace free.
Poly parse_poly(const std::string& text, const RingPtr& ring);

// parse a field constant (polynomial text with no ring variables)
FieldElem parse_field_elem(const std::string& text, const FieldPtr& field);

} // namespace pstrata

#endif
