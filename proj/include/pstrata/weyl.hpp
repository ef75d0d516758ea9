#ifndef PSTRATA_WEYL_HPP
#define PSTRATA_WEYL_HPP

#include <string>
#include <vector>

#include "pstrata/group.hpp"

namespace pstrata {

// Root system data for the reflection representation: type label, rank, and
// the simple reflection matrices on h (rational entries, root basis).
struct RootSystemSpec {
    std::string label;            // e.g. "A2", "B3", "A2xA1"
    int rank = 0;
    std::vector<std::vector<Rat>> cartan;
    std::vector<Mat> simple_reflections;
};

// labels: A..D, G2, F4; products via 'x' (e.g. "A2xA1")
RootSystemSpec root_system(const std::string& label);

struct WeylGroup {
    RootSystemSpec spec;
    MatrixGroup group;
    std::vector<int> simple_indices; // element indices of the simple reflections
};

WeylGroup build_weyl(const RootSystemSpec& spec, long cap = 1152);

struct CensusRow {
    int k = 0;
    long parabolic_classes = 0;   // p_k
    long element_classes = 0;     // e_k
    bool equal = false;
};

struct CensusTable {
    std::string label;
    int rank = 0;
    std::vector<CensusRow> rows;  // k = 0..rank
    bool agree = false;           // p_k == e_k for all k
    long total_parabolic_classes = 0;
    long total_element_classes = 0;
};

// counts of W-conjugacy classes of standard parabolics W_J by rank
// k = rank - dim(fixed space of W_J)
std::vector<long> parabolic_census(const WeylGroup& W);

// counts of conjugacy classes by k = rank - dim ker(w - 1) on h
std::vector<long> eigen_multiplicity_census(const WeylGroup& W);

CensusTable compare_census(const WeylGroup& W);

} // namespace pstrata

#endif
