#ifndef PSTRATA_SRA_HPP
#define PSTRATA_SRA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "pstrata/fiber.hpp"
#include "pstrata/group.hpp"
#include "pstrata/invariants.hpp"
#include "pstrata/poisson.hpp"

namespace pstrata {

// Coefficient domain: polynomials in the formal deformation parameter T
// over the base field. Engines with numeric t only ever see constants.
class TCoef {
  public:
    TCoef() = default;
    explicit TCoef(FieldElem constant);
    static TCoef zero(const FieldPtr& f);
    static TCoef formal_t(const FieldPtr& f); // the monomial T

    bool is_zero() const { return c_.empty(); }
    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    FieldElem at(int k) const; // coefficient of T^k

    TCoef operator+(const TCoef& o) const;
    TCoef operator-() const;
    TCoef operator-(const TCoef& o) const { return *this + (-o); }
    TCoef operator*(const TCoef& o) const;
    TCoef& operator+=(const TCoef& o) { return *this = *this + o; }

    bool divisible_by_t() const; // no constant term
    TCoef shifted_down() const;  // divide by T
    FieldElem eval_zero() const; // T -> 0

    bool operator==(const TCoef& o) const;
    std::string str() const;

  private:
    void trim();
    FieldPtr field_;
    std::vector<FieldElem> c_; // low to high, no trailing zeros
};

// element of A_{t,c} in PBW normal form: sum of (ordered monomial in the
// V-basis) x (group element) with TCoef coefficients
struct SRAElement {
    // key: (exponent vector over the 2n letters, group element index)
    std::map<std::pair<std::vector<int>, int>, TCoef> terms;

    bool is_zero() const { return terms.empty(); }
    long degree() const; // filtration degree (max |m|), -1 when zero
    void add(const std::vector<int>& mono, int gelem, const TCoef& c);
    SRAElement operator+(const SRAElement& o) const;
    SRAElement operator-(const SRAElement& o) const;
    SRAElement scaled(const TCoef& c) const;
    bool operator==(const SRAElement& o) const;
};

struct WordToken {
    bool is_letter = true;
    int index = 0; // letter 0..2n-1 or group element index
};

// PBW rewriting engine for the symplectic reflection algebra of (G, omega)
// with parameter t (numeric or formal) and class function c on the
// symplectic reflection classes.
class SRAEngine {
  public:
    // t == nullopt means the formal parameter T
    static std::shared_ptr<SRAEngine> build(std::shared_ptr<const MatrixGroup> G,
                                            std::optional<FieldElem> t,
                                            const std::map<int, FieldElem>& c_by_class,
                                            bool corrupt_sign = false);

    const MatrixGroup& group() const { return *G_; }
    const FieldPtr& field() const { return field_; }
    int nletters() const { return G_->dim(); }
    bool formal() const { return formal_; }
    bool corrupted() const { return corrupt_; }
    const ReflectionData& reflections() const { return refl_; }
    const std::vector<FieldElem>& c_values() const { return c_of_refl_; }

    SRAElement one() const;
    SRAElement scalar(const FieldElem& v) const;
    SRAElement letter(int i) const;
    SRAElement group_element(int g) const;

    SRAElement mul_letter(const SRAElement& e, int j) const;
    SRAElement mul_group(const SRAElement& e, int g) const; // right multiply
    SRAElement mul(const SRAElement& a, const SRAElement& b) const;
    SRAElement commutator(const SRAElement& a, const SRAElement& b) const;

    SRAElement normal_form(const std::vector<WordToken>& word) const;

    std::string describe(const SRAElement& e) const;

  private:
    SRAEngine() = default;
    // normal form of x^m * x_i
    const SRAElement& insert(const std::vector<int>& mono, int i) const;
    // t omega(x_i, x_k) + sum_s c_s omega_s(x_i, x_k) s, for i < k
    SRAElement commutation_term(int i, int k) const;

    std::shared_ptr<const MatrixGroup> G_;
    FieldPtr field_;
    bool formal_ = false;
    FieldElem t_value_;
    bool corrupt_ = false;
    ReflectionData refl_;
    std::vector<FieldElem> c_of_refl_; // parallel to refl_.reflections
    std::vector<std::vector<SRAElement>> comm_; // commutation_term cache
    mutable std::mutex memo_mu_;
    mutable std::map<std::pair<std::vector<int>, int>, SRAElement> insert_memo_;
};

// ---- PBW certification

struct PbwDegreeRow {
    int degree = 0;
    long expected = 0; // |G| * C(degree + 2n, 2n)
    long dim = 0;      // expected minus the rank of the split discrepancies
    bool consistent = true;
};

struct PbwReport {
    std::vector<PbwDegreeRow> rows;
    bool pass = false;
    int first_failure_degree = -1;
};

// Confluence certification: for every word w of length <= d and every split
// w = u.v, the engine must satisfy NF(u)*NF(v) == NF(w). Consistency plus
// the triangular leading terms pin dim F_i exactly at the PBW count; split
// discrepancies are dependencies the engine asserts among PBW monomials and
// collapse the reported dimension.
PbwReport pbw_dimension_check(const SRAEngine& E, int max_degree);

// basis of the degree-<=d part of the centre (numeric t engines only)
std::vector<SRAElement> center_basis(const SRAEngine& E, int max_degree);

struct QuantizedBracket {
    SRAElement value; // in the t = 0 engine
    bool central_certified = false;
};

// normal form of [z1,z2]/T at T = 0; errors if the commutator is not
// divisible by T
QuantizedBracket quantized_bracket(const SRAEngine& formal_engine, const SRAEngine& zero_engine,
                                   const SRAElement& z1, const SRAElement& z2);

struct CenterPresentation {
    std::vector<SRAElement> generators; // in the t=0 engine
    std::vector<long> degrees;
    RingPtr pres_ring;
    Ideal relations;
    std::vector<std::vector<Poly>> bracket_matrix; // quantized brackets, in pres_ring
    bool generation_certified = false;
    // commutative top symbols of the generators, in ov_ring (for matching
    // against the invariant presentation of O(V)^G)
    RingPtr ov_ring;
    std::vector<Poly> symbols;

    PoissonStructure structure() const;
};

CenterPresentation center_presentation(const SRAEngine& zero_engine,
                                       const SRAEngine& formal_engine, int degree);

// A_c / m_x A_c at a point of Maxspec Z_c given in presentation coordinates
FiberAlgebra sra_fiber(const SRAEngine& zero_engine, const CenterPresentation& cp,
                       const std::vector<FieldElem>& point);

} // namespace pstrata

#endif
