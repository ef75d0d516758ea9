#ifndef PSTRATA_INVARIANTS_HPP
#define PSTRATA_INVARIANTS_HPP

#include "pstrata/group.hpp"
#include "pstrata/ideal.hpp"

namespace pstrata {

// Presentation of the invariant ring O(V)^G: a minimal generating set of
// invariant polynomials (degrees bounded by |G|, Noether), the relation
// ideal among fresh presentation variables, and the rewriting machinery
// (Groebner basis of <A_i - g_i> under an order eliminating the V-variables).
struct InvariantPresentation {
    RingPtr poly_ring; // O(V)
    RingPtr pres_ring; // k[A, B, ...]
    std::vector<Poly> generators; // invariant polynomials in poly_ring
    std::vector<long> degrees;
    Ideal relations;   // kernel of A_i -> g_i, in pres_ring
    std::vector<Rat> molien; // series coefficients, up to |G|

    RingPtr combined;  // poly_ring vars first, then pres vars; elimination order
    std::vector<Poly> combined_gb;

    int nx() const { return poly_ring->nvars(); }
    int ngens() const { return static_cast<int>(generators.size()); }

    // express an invariant of O(V) in the presentation variables;
    // errors (internal) if the input is not in the invariant subalgebra
    Poly rewrite(const Poly& invariant) const;
    // substitute generators for presentation variables
    Poly embed(const Poly& pres_poly) const;
    // image of a point of V under the quotient map (g_1(v), ..., g_k(v))
    std::vector<FieldElem> project_point(const std::vector<FieldElem>& v) const;
    // (I + <A_i - g_i>) intersected with k[A..], as an ideal of pres_ring
    Ideal contract(const std::vector<Poly>& gens_in_poly_ring) const;

    Poly lift_to_combined(const Poly& f_in_poly_ring) const;
    Poly pres_to_combined(const Poly& f_in_pres_ring) const;
    Poly combined_to_pres(const Poly& f) const; // fails if V-variables remain
};

// Reynolds images over all monomials up to the Noether bound |G|, minimal
// generating set extraction, relation ideal by elimination, Molien check.
InvariantPresentation invariant_generators(const MatrixGroup& G, long cap = 200,
                                           RingPtr poly_ring = nullptr);

// default variable names for O(V): x,y for dim 2, else x1..,y1..
RingPtr default_ov_ring(const MatrixGroup& G);

// rearrange a polynomial's variables into a target ring: exponent of
// variable i goes to variable var_map[i]
Poly map_vars(const Poly& f, const RingPtr& target, const std::vector<int>& var_map);

} // namespace pstrata

#endif
