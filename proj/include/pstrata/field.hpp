#ifndef PSTRATA_FIELD_HPP
#define PSTRATA_FIELD_HPP

#include <gmpxx.h>
#include <memory>
#include <string>
#include <vector>

#include "pstrata/error.hpp"

namespace pstrata {

using Rat = mpq_class;

// Exact coefficient field: either Q, or the cyclotomic field Q(zeta_n) with
// elements stored as rational coordinate vectors modulo the n-th cyclotomic
// polynomial. All arithmetic is exact; equality is canonical.
class ExactField {
  public:
    static std::shared_ptr<const ExactField> rationals();
    static std::shared_ptr<const ExactField> cyclotomic(int n);

    bool is_rational() const { return n_ == 1; }
    int cyclotomic_order() const { return n_; }
    // dimension over Q: 1 for Q, phi(n) otherwise
    int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
    // monic coefficients of the n-th cyclotomic polynomial, low to high
    const std::vector<Rat>& min_poly() const { return minpoly_; }

    bool same(const ExactField& other) const { return n_ == other.n_; }

    std::string describe() const;

  private:
    explicit ExactField(int n);
    int n_;
    std::vector<Rat> minpoly_;
};

using FieldPtr = std::shared_ptr<const ExactField>;

class FieldElem {
  public:
    FieldElem() = default; // invalid until assigned
    FieldElem(FieldPtr field, Rat value);

    static FieldElem zero(const FieldPtr& f);
    static FieldElem one(const FieldPtr& f);
    // the generator zeta_n (errors over Q)
    static FieldElem zeta(const FieldPtr& f);
    static FieldElem from_coords(FieldPtr f, std::vector<Rat> coords);

    const FieldPtr& field() const { return field_; }
    bool valid() const { return static_cast<bool>(field_); }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const; // lies in the prime field
    // rational value; error if not rational
    Rat rational_value() const;
    const std::vector<Rat>& coords() const { return c_; }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inverse() const; // error on zero
    FieldElem pow(long e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // canonical text: "3/2", "zeta^2", "2*zeta + 1", ... (parseable back)
    std::string str() const;
    // stable key for hashing / ordering
    std::string key() const;

  private:
    FieldElem(FieldPtr f, std::vector<Rat> c) : field_(std::move(f)), c_(std::move(c)) {}
    void check_compatible(const FieldElem& o) const;

    FieldPtr field_;
    std::vector<Rat> c_;
};

std::string rat_str(const Rat& q);

} // namespace pstrata

#endif
