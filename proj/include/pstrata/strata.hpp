#ifndef PSTRATA_STRATA_HPP
#define PSTRATA_STRATA_HPP

#include <random>

#include "pstrata/fiber.hpp"
#include "pstrata/invariants.hpp"
#include "pstrata/poisson.hpp"

namespace pstrata {

// Stratum of V/G indexed by a stabilizer conjugacy class H: the fixed space
// V_H, its vanishing ideal I(H) in O(V) and the contraction J(H) in the
// invariant presentation.
struct Stratum {
    SubgroupClass subgroup;
    int dim_fixed = 0;
    Ideal IH; // linear forms in O(V)
    Ideal JH; // in the presentation ring
    bool is_stabilizer = true; // V^o_H nonempty (exact linear-algebra check)
};

// one stratum per subgroup class with nonempty V^o_H
std::vector<Stratum> stabilizer_strata(const MatrixGroup& G, const InvariantPresentation& pres,
                                       long cap = 200);

// Poisson structure on O(V) from the symplectic Gram matrix {v_i,v_j} = w_ij
PoissonStructure symplectic_poisson(const MatrixGroup& G, const RingPtr& ov_ring);

// bracket on the invariant presentation: {A_i, A_j} = rewrite({g_i, g_j}_w)
PoissonStructure induced_poisson(const MatrixGroup& G, const InvariantPresentation& pres);

// a point of V^o_H with coordinates in the field (seeded retry over V_H)
std::vector<FieldElem> sample_stratum_point(const MatrixGroup& G, const Stratum& s,
                                            std::mt19937& rng);

struct StratumCheck {
    std::string subgroup_label;
    int dim_fixed = 0;
    bool j_poisson = false;
    std::vector<int> ranks;
    bool rank_ok = false;
    Tri cores_within = Tri::indeterminate;
    std::vector<FiberInvariants> fiber_profiles; // when fibers are requested
    bool fibers_constant = true;
};

struct LeafReport {
    std::vector<StratumCheck> strata;
    bool cross_cores_ok = true;  // distinct strata never share a core
    long indeterminate_pairs = 0;
    bool all_ok = false;
    bool cores_checked = false;
};

// (i) J(H) is a Poisson ideal, (ii) the bracket rank at sampled stratum
// points equals dim V_H, (iii) cores agree within a stratum and differ
// across strata (optional: core computations are the expensive part).
// with_fibers additionally records skew-fiber invariant tuples at the
// sampled points and checks they are constant per stratum.
LeafReport verify_leaf_claims(const MatrixGroup& G, const InvariantPresentation& pres,
                              const std::vector<Stratum>& strata, int samples,
                              unsigned seed = 1, bool with_cores = true, int threads = 1,
                              bool with_fibers = false);

// fiber of the skew group algebra O(V) * G at pi(v)
FiberAlgebra skew_fiber(const MatrixGroup& G, const InvariantPresentation& pres,
                        const std::vector<FieldElem>& v);

} // namespace pstrata

#endif
