#ifndef PSTRATA_POISSON_HPP
#define PSTRATA_POISSON_HPP

#include <optional>
#include <string>
#include <vector>

#include "pstrata/ideal.hpp"

namespace pstrata {

// deterministic enumeration of all monomials of total degree <= d
std::vector<Monomial> monomials_up_to(int nvars, long d);
long count_monomials_up_to(int nvars, long d);

struct ValidationReport {
    bool skew_ok = false;
    bool jacobi_ok = false;
    bool relations_stable = false;
    std::vector<std::string> issues;
    bool valid() const { return skew_ok && jacobi_ok && relations_stable; }
};

// Poisson bracket on a presented affine algebra k[z_1..z_m]/relations,
// given by the skew matrix of generator brackets {z_i, z_j}.
class PoissonStructure {
  public:
    // bracket may give only the strict upper triangle (lower inferred by
    // skew-symmetry); a full matrix is checked for literal skew-symmetry.
    static PoissonStructure make(RingPtr ring, Ideal relations,
                                 std::vector<std::vector<Poly>> bracket_upper);

    const RingPtr& ring() const { return ring_; }
    const Ideal& relations() const { return relations_; }
    const Poly& gen_bracket(int i, int j) const { return bracket_[i][j]; }
    const std::vector<std::vector<Poly>>& bracket_matrix() const { return bracket_; }

    ValidationReport validate() const;
    // throws ErrCode::invalid_structure unless validate() passes (cached)
    void ensure_valid() const;

    // {f,g} = sum_{i,j} df/dz_i dg/dz_j {z_i,z_j}, reduced modulo relations
    Poly bracket(const Poly& f, const Poly& g) const;

    bool point_on_variety(const std::vector<FieldElem>& point) const;
    // maximal ideal <z_i - p_i>; errors if the point is off the variety
    Ideal point_ideal(const std::vector<FieldElem>& point) const;

  private:
    PoissonStructure(RingPtr r, Ideal rel, std::vector<std::vector<Poly>> b)
        : ring_(std::move(r)), relations_(std::move(rel)), bracket_(std::move(b)) {}

    RingPtr ring_;
    Ideal relations_;
    std::vector<std::vector<Poly>> bracket_;
    mutable std::shared_ptr<const ValidationReport> validation_;
};

struct CoreResult {
    Ideal core;
    bool certified = false;
    int iterations = 0;
};

ValidationReport validate_structure(const PoissonStructure& P);

bool is_poisson_ideal(const PoissonStructure& P, const Ideal& J);

// Largest-Poisson-ideal-inside-I fixed-point iteration. Works on the
// degree-<=d slice with d fixed from the input ideal (max generator degree
// plus headroom); a reached fixed point is certified by an exact
// bracket-stability and containment check.
CoreResult poisson_core(const PoissonStructure& P, const Ideal& I, int max_iters = 32,
                        int degree_headroom = 4);

// basis of {f : deg f <= bound, {f, z_i} in relations for all i}; contains 1
std::vector<Poly> casimirs(const PoissonStructure& P, long degree_bound);

int rank_at_point(const PoissonStructure& P, const std::vector<FieldElem>& point);

// for each even j: relations + all (j+1)x(j+1) minors of the bracket matrix
std::vector<std::pair<int, Ideal>> rank_stratum_ideals(const PoissonStructure& P);

enum class Tri { no, yes, indeterminate };

// equality of certified Poisson cores of two maximal ideals; indeterminate
// when either core fails to certify
Tri same_core(const PoissonStructure& P, const std::vector<FieldElem>& p1,
              const std::vector<FieldElem>& p2, int max_iters = 32, int degree_headroom = 4);

} // namespace pstrata

#endif
