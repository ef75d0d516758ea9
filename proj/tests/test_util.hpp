#ifndef PSTRATA_TEST_UTIL_HPP
#define PSTRATA_TEST_UTIL_HPP

#include <random>

#include "pstrata/ideal.hpp"
#include "pstrata/poisson.hpp"

namespace pstrata::testutil {

inline RingPtr qring(std::vector<std::string> vars) {
    return PolyRing::make(ExactField::rationals(), std::move(vars));
}

inline Poly P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

inline FieldElem Q(long n, long d = 1) {
    return FieldElem(ExactField::rationals(), Rat(n, d));
}

inline std::vector<FieldElem> qpoint(std::initializer_list<long> coords) {
    std::vector<FieldElem> p;
    for (long c : coords) p.push_back(Q(c));
    return p;
}

// small random polynomial over Q
inline Poly random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 4,
                        int max_deg = 3, int max_coef = 9) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coef(-max_coef, max_coef);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(ring->nvars());
        int budget = deg(rng);
        std::uniform_int_distribution<int> var(0, ring->nvars() - 1);
        for (int i = 0; i < budget; ++i) m[var(rng)] += 1;
        terms.push_back({m, FieldElem(ring->field(), Rat(coef(rng)))});
    }
    return Poly(ring, std::move(terms));
}

// the Remark structure: {x,y} = 0, {x,z} = x, {y,z} = y on Q[x,y,z]
inline PoissonStructure dm_structure(const RingPtr& r) {
    std::vector<std::vector<Poly>> b(3, std::vector<Poly>(3, Poly(r)));
    b[0][2] = P("x", r);
    b[1][2] = P("y", r);
    return PoissonStructure::make(r, Ideal::zero(r), b);
}

// alpha family member: {x,z} = alpha*x, {y,z} = y
inline PoissonStructure alpha_structure(const RingPtr& r, long alpha_num, long alpha_den = 1) {
    std::vector<std::vector<Poly>> b(3, std::vector<Poly>(3, Poly(r)));
    b[0][2] = P("x", r).scaled(FieldElem(r->field(), Rat(alpha_num, alpha_den)));
    b[1][2] = P("y", r);
    return PoissonStructure::make(r, Ideal::zero(r), b);
}

} // namespace pstrata::testutil

#endif
