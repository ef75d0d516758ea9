#ifndef PSTRATA_FIBER_HPP
#define PSTRATA_FIBER_HPP

#include <string>
#include <vector>

#include "pstrata/linalg.hpp"

namespace pstrata {

// Finite dimensional associative algebra given by structure constants.
struct FiberAlgebra {
    FieldPtr field;
    int dim = 0;
    std::vector<std::string> labels;
    // table[a][b] = coordinates of e_a * e_b
    std::vector<std::vector<std::vector<FieldElem>>> table;

    std::vector<FieldElem> mul(const std::vector<FieldElem>& u,
                               const std::vector<FieldElem>& v) const;

    // exhaustive check on basis triples
    bool is_associative() const;
    // index of a two-sided identity among coordinate vectors solvable from
    // the table; -1 if none exists
    bool has_unit() const;
};

struct FiberInvariants {
    long total = 0;
    long center = 0;
    long radical = 0;    // kernel of the trace form (char 0)
    long semisimple = 0; // total - radical

    bool operator==(const FiberInvariants& o) const {
        return total == o.total && center == o.center && radical == o.radical &&
               semisimple == o.semisimple;
    }
};

// center by commutator kernel, radical by the trace bilinear form of the
// left regular representation; errors on a non-associative table
FiberInvariants fiber_invariants(const FiberAlgebra& F);

} // namespace pstrata

#endif
