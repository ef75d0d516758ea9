#ifndef PSTRATA_GROUP_HPP
#define PSTRATA_GROUP_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "pstrata/linalg.hpp"
#include "pstrata/poly.hpp"

namespace pstrata {

// Finite group of invertible matrices over an exact field, with an optional
// symplectic form. Elements are sorted by canonical encoding, so indices and
// every derived enumeration are deterministic.
class MatrixGroup {
  public:
    // full element list by orbit closure; errors if the order exceeds cap
    static MatrixGroup closure(const std::vector<Mat>& generators, long cap = 10000,
                               std::optional<Mat> symplectic_form = std::nullopt);

    int dim() const { return dim_; }
    const FieldPtr& field() const { return field_; }
    long order() const { return static_cast<long>(elems_.size()); }
    const Mat& elem(int i) const { return elems_[i]; }
    const std::vector<Mat>& elements() const { return elems_; }
    int identity_index() const { return id_; }
    const std::vector<int>& generator_indices() const { return gen_idx_; }

    int index_of(const Mat& m) const; // -1 if absent
    int mul(int a, int b) const;      // cached Cayley lookups
    int inv(int a) const;

    bool has_symplectic_form() const { return static_cast<bool>(omega_); }
    const Mat& symplectic_form() const;
    // standard block form [[0, I], [-I, 0]]
    void set_standard_symplectic_form();
    void set_symplectic_form(Mat omega);
    // g^T w g = w for every element
    bool preserves_form() const;

  private:
    MatrixGroup() = default;
    FieldPtr field_;
    int dim_ = 0;
    int id_ = 0;
    std::vector<Mat> elems_;
    std::map<std::string, int> index_;
    std::vector<int> gen_idx_;
    std::optional<Mat> omega_;
    std::shared_ptr<std::mutex> cache_mu_; // guards the lazy tables
    mutable std::vector<int> cayley_;      // lazy, -1 = unknown
    mutable std::vector<int> inv_;
};

// ---- structure queries

std::vector<std::vector<int>> conjugacy_classes(const MatrixGroup& G);

struct SymplecticReflection {
    int elem;
    int conj_class; // index into the classes list returned alongside
    Mat omega_s;    // 2n x 2n: omega restricted to Im(1-s) along Ker(1-s)
};

struct ReflectionData {
    std::vector<SymplecticReflection> reflections; // sorted by element index
    std::vector<std::vector<int>> classes;         // element indices per class
};

// all s with rank(1-s) = 2, grouped into conjugacy classes, with omega_s
ReflectionData symplectic_reflections(const MatrixGroup& G);

struct SubgroupClass {
    std::vector<int> representative; // sorted element indices
    long class_size = 1;
};

// all subgroups up to conjugacy (brute-force lattice closure; desk cap)
std::vector<SubgroupClass> subgroup_conjugacy_classes(const MatrixGroup& G, long cap = 200);
// every subgroup as a sorted index list
std::vector<std::vector<int>> all_subgroups(const MatrixGroup& G, long cap = 200);

std::vector<int> subgroup_closure(const MatrixGroup& G, std::vector<int> seed);
bool is_subgroup(const MatrixGroup& G, const std::vector<int>& elems);
std::vector<int> conjugate_subgroup(const MatrixGroup& G, const std::vector<int>& sub, int g);

// basis of the simultaneous fixed space of the listed elements
std::vector<std::vector<FieldElem>> fixed_space(const MatrixGroup& G,
                                                const std::vector<int>& subgroup);

std::vector<int> stabilizer(const MatrixGroup& G, const std::vector<FieldElem>& v);

// ---- polynomial action

// f |-> f(gamma . x)
Poly act_on_poly(const Mat& gamma, const Poly& f);
// |G|^-1 sum_gamma f(gamma . x)
Poly reynolds(const MatrixGroup& G, const Poly& f);

// coefficients of |G|^-1 sum_gamma 1/det(1 - t gamma) up to t^max_degree
std::vector<Rat> molien_series(const MatrixGroup& G, long max_degree);

} // namespace pstrata

#endif
