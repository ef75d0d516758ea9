#ifndef PSTRATA_IDEAL_HPP
#define PSTRATA_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "pstrata/poly.hpp"

namespace pstrata {

// Resource guard for Buchberger runs. Exhaustion raises ErrCode::budget,
// never silent truncation.
struct Budget {
    long max_reductions = 1'000'000;
    long max_degree = 40;
};

Budget default_budget();
void set_default_budget(const Budget& b);

// Generator list plus lazily cached reduced Groebner basis under the ring's
// monomial order. The cache is written once; safe to share read-only.
class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens); // drops zero generators
    Ideal(const Ideal& o);
    Ideal& operator=(const Ideal& o);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }

    // unique reduced Groebner basis in the ring's order (cached)
    const std::vector<Poly>& groebner() const;
    bool has_cached_groebner() const;

    bool is_zero_ideal() const { return groebner().empty(); }
    bool is_whole_ring() const;
    bool contains(const Poly& f) const;
    bool contains_ideal(const Ideal& other) const;

    long max_gen_degree() const; // over the reduced basis; -1 for zero ideal

    std::string str() const;

  private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    mutable std::mutex mu_;
    mutable std::shared_ptr<const std::vector<Poly>> gb_;
};

// Buchberger with sugar selection and both classical pair criteria.
// Deterministic result: the unique reduced basis, sorted by leading monomial.
std::vector<Poly> groebner_basis(std::vector<Poly> gens, const RingPtr& ring,
                                 const Budget& budget = default_budget());

// full normal form of f against a (not necessarily Groebner) basis
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);

bool ideal_member(const Poly& f, const Ideal& I);

// I intersected with the subring omitting the given variables, by a block
// elimination order; result lives in the original ring
Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars,
                const Budget& budget = default_budget());

// auxiliary-variable construction t*I + (1-t)*J
Ideal ideal_intersect(const Ideal& I, const Ideal& J,
                      const Budget& budget = default_budget());

// Krull dimension of ring/I from the leading-term staircase (maximal
// independent variable sets); nullopt <=> I is the whole ring (empty variety)
std::optional<long> krull_dim(const Ideal& I);

// I plus the c x c minors of the Jacobian of its generators, c = codimension.
// Caller asserts I prime; not checked.
Ideal singular_locus(const Ideal& I);

bool equal_ideals(const Ideal& I, const Ideal& J);

// determinant of a square polynomial matrix (Laplace; desk-scale sizes)
Poly poly_det(const std::vector<std::vector<Poly>>& m, const RingPtr& ring);

} // namespace pstrata

#endif
