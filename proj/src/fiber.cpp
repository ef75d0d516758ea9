#include "pstrata/fiber.hpp"

namespace pstrata {

std::vector<FieldElem> FiberAlgebra::mul(const std::vector<FieldElem>& u,
                                         const std::vector<FieldElem>& v) const {
    std::vector<FieldElem> out(dim, FieldElem::zero(field));
    for (int a = 0; a < dim; ++a) {
        if (u[a].is_zero()) continue;
        for (int b = 0; b < dim; ++b) {
            if (v[b].is_zero()) continue;
            FieldElem c = u[a] * v[b];
            const auto& row = table[a][b];
            for (int k = 0; k < dim; ++k)
                if (!row[k].is_zero()) out[k] += c * row[k];
        }
    }
    return out;
}

bool FiberAlgebra::is_associative() const {
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            const auto& ab = table[a][b];
            for (int c = 0; c < dim; ++c) {
                // (e_a e_b) e_c
                std::vector<FieldElem> left(dim, FieldElem::zero(field));
                for (int k = 0; k < dim; ++k) {
                    if (ab[k].is_zero()) continue;
                    for (int l = 0; l < dim; ++l)
                        if (!table[k][c][l].is_zero()) left[l] += ab[k] * table[k][c][l];
                }
                // e_a (e_b e_c)
                const auto& bc = table[b][c];
                std::vector<FieldElem> right(dim, FieldElem::zero(field));
                for (int k = 0; k < dim; ++k) {
                    if (bc[k].is_zero()) continue;
                    for (int l = 0; l < dim; ++l)
                        if (!table[a][k][l].is_zero()) right[l] += bc[k] * table[a][k][l];
                }
                if (left != right) return false;
            }
        }
    return true;
}

bool FiberAlgebra::has_unit() const {
    // solve e * e_b = e_b and e_b * e = e_b for all b
    Mat A(field, 2 * dim * dim, dim);
    std::vector<FieldElem> rhs(2 * dim * dim, FieldElem::zero(field));
    int row = 0;
    for (int b = 0; b < dim; ++b)
        for (int k = 0; k < dim; ++k) {
            for (int a = 0; a < dim; ++a) A.at(row, a) = table[a][b][k];
            rhs[row] = (k == b) ? FieldElem::one(field) : FieldElem::zero(field);
            ++row;
        }
    for (int b = 0; b < dim; ++b)
        for (int k = 0; k < dim; ++k) {
            for (int a = 0; a < dim; ++a) A.at(row, a) = table[b][a][k];
            rhs[row] = (k == b) ? FieldElem::one(field) : FieldElem::zero(field);
            ++row;
        }
    return A.solve(rhs).has_value();
}

namespace {

FiberInvariants compute_invariants(const FiberAlgebra& F) {
    FiberInvariants inv;
    inv.total = F.dim;
    const FieldPtr& f = F.field;
    int n = F.dim;

    // center: z with z e_b - e_b z = 0 for all b
    Mat C(f, n * n, n);
    for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < n; ++a)
                C.at(b * n + k, a) = F.table[a][b][k] - F.table[b][a][k];
    inv.center = static_cast<long>(C.kernel_basis().size());

    // trace form of the left regular representation:
    // T[a][b] = tr(L_a L_b) = sum_k sum_l c^l_{b,k} c^k_{a,l}
    Mat T(f, n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            FieldElem s = FieldElem::zero(f);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const FieldElem& x = F.table[b][k][l];
                    if (x.is_zero()) continue;
                    const FieldElem& y = F.table[a][l][k];
                    if (y.is_zero()) continue;
                    s += x * y;
                }
            T.at(a, b) = s;
        }
    inv.radical = n - T.rank();
    inv.semisimple = n - inv.radical;
    return inv;
}

} // namespace

FiberInvariants fiber_invariants(const FiberAlgebra& F) {
    if (!F.is_associative())
        throw Error(ErrCode::domain, "non-associative structure constant table");
    return compute_invariants(F);
}

} // namespace pstrata
