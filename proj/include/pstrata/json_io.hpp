#ifndef PSTRATA_JSON_IO_HPP
#define PSTRATA_JSON_IO_HPP

#include <json.hpp>

#include "pstrata/poisson.hpp"
#include "pstrata/sra.hpp"
#include "pstrata/strata.hpp"

namespace pstrata {

// insertion-ordered so reports and tables read in construction order
using Json = nlohmann::ordered_json;

// "Q" | {"cyclotomic": n}
FieldPtr field_from_json(const Json& j);
Json field_to_json(const FieldPtr& f);

// schema poisson-structure: field, variables, relations, bracket (full
// matrix or strict upper triangle)
PoissonStructure poisson_from_json(const Json& j);

// schema group: field, dimension, generators (row-major entry strings or
// numbers), optional symplectic_form; the standard form is attached when it
// is preserved and none is given
std::shared_ptr<MatrixGroup> group_from_json(const Json& j);

Mat matrix_from_json(const Json& rows, const FieldPtr& f);
Json matrix_to_json(const Mat& m);

struct SraSpec {
    std::shared_ptr<MatrixGroup> group;
    std::optional<FieldElem> t; // nullopt = formal
    std::map<int, FieldElem> c;
};

// schema sra: { "group": <group schema or builtin name>, "t": "0"|"1"|"formal",
// "c": {"<class-index>": rational-string} }
SraSpec sra_from_json(const Json& j);

// builtin groups for the CLI: "1"/"trivial", "z2".."z6", "weylA2" etc
// (Weyl groups act diagonally on h + h*)
std::shared_ptr<MatrixGroup> builtin_group(const std::string& name);

std::vector<FieldElem> point_from_string(const std::string& text, const FieldPtr& f);

Json poly_list_json(const std::vector<Poly>& polys);
Json ideal_json(const Ideal& I);

} // namespace pstrata

#endif
