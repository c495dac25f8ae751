#include "waring/decomposition.hpp"

#include <stdexcept>

namespace waring {

Rational printed_tau() { return Rational(-1, 2); }
Rational verified_tau() { return Rational(-2); }

std::vector<SquareMatrix> rank18_matrices(Field f)
{
    const FieldElem O = f.zero();
    const FieldElem I = f.one();
    const FieldElem z = f.zeta();
    const FieldElem z2 = z * z;
    const FieldElem a = f.cube_root();
    auto M = [&](std::vector<std::vector<FieldElem>> rows) { return SquareMatrix::from_rows(f, rows); };

    return {
        // rank-one block
        M({{I, -I, O}, {-I, I, O}, {O, O, O}}),
        M({{O, O, O}, {O, I, -z}, {O, -z2, I}}),
        M({{I, O, -z}, {O, O, O}, {-z2, O, I}}),
        M({{O, O, O}, {O, I, -z2}, {O, -z, I}}),
        M({{I, O, -I}, {O, O, O}, {-I, O, I}}),
        M({{I, -z, O}, {-z2, I, O}, {O, O, O}}),
        M({{I, O, -z2}, {O, O, O}, {-z, O, I}}),
        M({{I, -z2, O}, {-z, I, O}, {O, O, O}}),
        M({{O, O, O}, {O, I, -I}, {O, -I, I}}),
        // invertible block
        M({{a, O, O}, {O, a, O}, {O, O, a}}),
        M({{O, I, O}, {O, O, z}, {z2, O, O}}),
        M({{O, O, I}, {z2, O, O}, {O, z, O}}),
        M({{O, I, O}, {O, O, z2}, {z, O, O}}),
        M({{O, O, I}, {I, O, O}, {O, I, O}}),
        M({{I, O, O}, {O, z, O}, {O, O, z2}}),
        M({{O, O, I}, {z, O, O}, {O, z2, O}}),
        M({{I, O, O}, {O, z2, O}, {O, O, z}}),
        M({{O, I, O}, {O, O, I}, {I, O, O}}),
    };
}

WaringDecomposition rank18_decomposition(const Rational& tau)
{
    Field f = Field::with_tau(tau);
    return WaringDecomposition{3, Rational(1, 6), rank18_matrices(f), f.tau()};
}

VerificationReport verify_waring(const WaringDecomposition& d)
{
    Field f = d.field();
    for (const auto& m : d.matrices) {
        if (m.n() != d.n) throw std::invalid_argument("decomposition matrix has wrong size");
        if (!(m.field() == f)) throw std::logic_error("decomposition matrix from a different tau-configuration");
    }
    CubicForm sum(f, d.n);
    const FieldElem one = f.one();
    for (const auto& m : d.matrices) sum = scale_add(sum, one, pairing_cube(m));

    CubicForm diff = scale_add(CubicForm(f, d.n), f.from_rational(d.weight), sum);
    diff = scale_add(diff, -one, trace_cubic_form(f, d.n));
    const bool match = diff.is_zero();
    return VerificationReport{match, std::move(diff), f.tau()};
}

namespace {

// Rebuilds the same matrices over another tau-configuration, copying the
// coordinate vectors verbatim.
SquareMatrix rebase(const SquareMatrix& m, Field target)
{
    SquareMatrix out(target, m.n());
    for (int r = 0; r < m.n(); ++r)
        for (int c = 0; c < m.n(); ++c) out(r, c) = target.from_coeffs(m(r, c).coeffs());
    return out;
}

}  // namespace

TauResolution resolve_tau(const WaringDecomposition& d, const std::vector<Rational>& candidates)
{
    TauResolution res;
    for (const auto& tau : candidates) {
        Field f = Field::with_tau(tau);
        WaringDecomposition dt{d.n, d.weight, {}, f.tau()};
        for (const auto& m : d.matrices) dt.matrices.push_back(rebase(m, f));
        res.reports.push_back(verify_waring(dt));
        if (!res.accepted && res.reports.back().exact_match) res.accepted = f.tau();
    }
    return res;
}

std::optional<FieldElem> trace_cube_multiple(const CubicForm& f)
{
    CubicForm trace_cube = pairing_cube(SquareMatrix::identity(f.field(), f.n()));
    FieldElem c = f.coeff(Monomial{{0, 0, 0}});
    if (!(scale_add(CubicForm(f.field(), f.n()), c, trace_cube) == f)) return std::nullopt;
    return c;
}

std::optional<FieldElem> tensor_equiv(const SquareMatrix& m, const SquareMatrix& m2)
{
    if (m.n() != m2.n()) throw std::invalid_argument("dimension mismatch in tensor_equiv");
    const auto& e = m.entries();
    size_t k = 0;
    while (k < e.size() && e[k].is_zero()) ++k;
    if (k == e.size()) {
        if (m2.is_zero()) return m.field().one();
        return std::nullopt;
    }
    FieldElem mu = m2.entries()[k] / e[k];
    if (!mu.pow(3).is_one()) return std::nullopt;
    if (!(mu * m == m2)) return std::nullopt;
    return mu;
}

int matrix_rank(const SquareMatrix& m) { return rank(m); }

FieldElem hermitian_dot(const std::vector<FieldElem>& v, const std::vector<FieldElem>& w)
{
    if (v.size() != w.size() || v.empty()) throw std::invalid_argument("vector size mismatch");
    FieldElem s = v.front().field().zero();
    for (size_t i = 0; i < v.size(); ++i) s.add_product(v[i].conjugate(), w[i]);
    return s;
}

std::optional<std::vector<FieldElem>> projection_factor(const SquareMatrix& m)
{
    if (matrix_rank(m) != 1) throw std::invalid_argument("projection_factor requires a rank-one matrix");
    const int n = m.n();
    int col = 0;
    auto column_zero = [&](int c) {
        for (int r = 0; r < n; ++r)
            if (!m(r, c).is_zero()) return false;
        return true;
    };
    while (column_zero(col)) ++col;
    std::vector<FieldElem> v;
    for (int r = 0; r < n; ++r) v.push_back(m(r, col));

    FieldElem norm = hermitian_dot(v, v);
    if (norm.is_zero()) return std::nullopt;
    FieldElem scale = m.field().from_int(2) / norm;
    SquareMatrix proj(m.field(), n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) proj(r, c) = scale * v[r] * v[c].conjugate();
    if (!(proj == m)) return std::nullopt;
    return v;
}

}  // namespace waring
