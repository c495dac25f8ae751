#include "waring/symtensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring {

namespace {

void require_same_n(int a, int b, const char* what)
{
    if (a != b) throw std::invalid_argument(std::string("dimension mismatch in ") + what);
}

// Number of distinct orderings of a sorted triple.
int multiplicity(const std::array<int, 3>& v)
{
    if (v[0] == v[1] && v[1] == v[2]) return 1;
    if (v[0] == v[1] || v[1] == v[2]) return 3;
    return 6;
}

}  // namespace

SquareMatrix::SquareMatrix(Field field, int n) : field_(field), n_(n)
{
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
    e_.assign(static_cast<size_t>(n) * n, field.zero());
}

SquareMatrix SquareMatrix::identity(Field field, int n)
{
    SquareMatrix m(field, n);
    for (int i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

SquareMatrix SquareMatrix::unit(Field field, int n, int p, int q)
{
    SquareMatrix m(field, n);
    m(p, q) = field.one();
    return m;
}

SquareMatrix SquareMatrix::from_rows(Field field, const std::vector<std::vector<FieldElem>>& rows)
{
    const int n = static_cast<int>(rows.size());
    SquareMatrix m(field, n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n) throw std::invalid_argument("matrix is not square");
        for (int c = 0; c < n; ++c) {
            if (!(rows[r][c].field() == field)) throw std::logic_error("matrix entry from a different field");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& o)
{
    require_same_n(n_, o.n_, "matrix addition");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& o)
{
    require_same_n(n_, o.n_, "matrix subtraction");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y)
{
    require_same_n(x.n_, y.n_, "matrix product");
    const int n = x.n_;
    SquareMatrix out(x.field_, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const FieldElem& xik = x(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < n; ++j) out(i, j).add_product(xik, y(k, j));
        }
    return out;
}

SquareMatrix operator*(const FieldElem& s, const SquareMatrix& m)
{
    SquareMatrix out(m.field_, m.n_);
    for (size_t i = 0; i < m.e_.size(); ++i) out.e_[i] = s * m.e_[i];
    return out;
}

SquareMatrix SquareMatrix::transpose() const
{
    SquareMatrix out(field_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

SquareMatrix SquareMatrix::conjugate() const
{
    SquareMatrix out(field_, n_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].conjugate();
    return out;
}

FieldElem SquareMatrix::trace() const
{
    FieldElem t = field_.zero();
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

bool SquareMatrix::is_zero() const
{
    return std::all_of(e_.begin(), e_.end(), [](const FieldElem& x) { return x.is_zero(); });
}

bool operator==(const SquareMatrix& x, const SquareMatrix& y)
{
    return x.n_ == y.n_ && x.field_ == y.field_ && x.e_ == y.e_;
}

namespace {

// Row-reduces rows in place (augmented columns allowed past `cols`).
// Returns the pivot columns; `sign` tracks row swaps for determinants.
std::vector<int> row_reduce(std::vector<std::vector<FieldElem>>& rows, int cols, int* sign = nullptr)
{
    std::vector<int> pivots;
    const int nrows = static_cast<int>(rows.size());
    int r = 0;
    for (int c = 0; c < cols && r < nrows; ++c) {
        int piv = r;
        while (piv < nrows && rows[piv][c].is_zero()) ++piv;
        if (piv == nrows) continue;
        if (piv != r) {
            std::swap(rows[piv], rows[r]);
            if (sign) *sign = -*sign;
        }
        FieldElem inv_p = rows[r][c].inv();
        for (int i = r + 1; i < nrows; ++i) {
            if (rows[i][c].is_zero()) continue;
            FieldElem factor = rows[i][c] * inv_p;
            for (size_t j = c; j < rows[i].size(); ++j) {
                if (rows[r][j].is_zero()) continue;
                rows[i][j] -= factor * rows[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<FieldElem>> to_rows(const SquareMatrix& m)
{
    std::vector<std::vector<FieldElem>> rows(m.n());
    for (int r = 0; r < m.n(); ++r)
        for (int c = 0; c < m.n(); ++c) rows[r].push_back(m(r, c));
    return rows;
}

}  // namespace

int rank(const SquareMatrix& m)
{
    auto rows = to_rows(m);
    return static_cast<int>(row_reduce(rows, m.n()).size());
}

FieldElem determinant(const SquareMatrix& m)
{
    auto rows = to_rows(m);
    int sign = 1;
    auto pivots = row_reduce(rows, m.n(), &sign);
    if (static_cast<int>(pivots.size()) < m.n()) return m.field().zero();
    FieldElem det = m.field().from_int(sign);
    for (int i = 0; i < m.n(); ++i) det *= rows[i][i];
    return det;
}

std::optional<std::vector<FieldElem>> solve(const SquareMatrix& m, const std::vector<FieldElem>& b)
{
    const int n = m.n();
    require_same_n(n, static_cast<int>(b.size()), "solve");
    auto rows = to_rows(m);
    for (int r = 0; r < n; ++r) rows[r].push_back(b[r]);
    auto pivots = row_reduce(rows, n);
    if (static_cast<int>(pivots.size()) < n) return std::nullopt;
    std::vector<FieldElem> x(n, m.field().zero());
    for (int r = n - 1; r >= 0; --r) {
        FieldElem acc = rows[r][n];
        for (int c = r + 1; c < n; ++c) acc -= rows[r][c] * x[c];
        x[r] = acc / rows[r][r];
    }
    return x;
}

SquareMatrix inverse(const SquareMatrix& m)
{
    const int n = m.n();
    auto rows = to_rows(m);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) rows[r].push_back(r == c ? m.field().one() : m.field().zero());
    auto pivots = row_reduce(rows, n);
    if (static_cast<int>(pivots.size()) < n) throw std::domain_error("matrix is singular");
    // Back substitution on the upper-triangular left block.
    for (int r = n - 1; r >= 0; --r) {
        FieldElem inv_p = rows[r][r].inv();
        for (auto& e : rows[r]) e *= inv_p;
        for (int i = 0; i < r; ++i) {
            if (rows[i][r].is_zero()) continue;
            FieldElem factor = rows[i][r];
            for (int j = 0; j < 2 * n; ++j) rows[i][j] -= factor * rows[r][j];
        }
    }
    SquareMatrix out(m.field(), n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = rows[r][n + c];
    return out;
}

Monomial Monomial::from_vars(int v0, int v1, int v2)
{
    Monomial m{{v0, v1, v2}};
    std::sort(m.vars.begin(), m.vars.end());
    return m;
}

Monomial Monomial::from_pairs(int n, std::array<std::pair<int, int>, 3> pairs)
{
    for (const auto& [p, q] : pairs)
        if (p < 0 || p >= n || q < 0 || q >= n) throw std::out_of_range("monomial index out of range");
    return from_vars(pairs[0].first * n + pairs[0].second, pairs[1].first * n + pairs[1].second,
                     pairs[2].first * n + pairs[2].second);
}

std::array<std::pair<int, int>, 3> Monomial::pairs(int n) const
{
    return {{{vars[0] / n, vars[0] % n}, {vars[1] / n, vars[1] % n}, {vars[2] / n, vars[2] % n}}};
}

FieldElem CubicForm::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
}

void CubicForm::add_term(const Monomial& m, const FieldElem& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CubicForm CubicForm::conjugate_coefficients() const
{
    CubicForm out(field_, n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conjugate());
    return out;
}

FieldElem sm_value(const SquareMatrix& a, const SquareMatrix& b, const SquareMatrix& c)
{
    require_same_n(a.n(), b.n(), "sm_value");
    require_same_n(a.n(), c.n(), "sm_value");
    FieldElem s = (a * b * c).trace() + (a * c * b).trace();
    return s.scaled(Rational(1, 2));
}

CubicForm trace_cubic_form(Field field, int n)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    CubicForm f(field, n);
    const FieldElem one = field.one();
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r) f.add_term(Monomial::from_vars(p * n + q, q * n + r, r * n + p), one);
    return f;
}

namespace {

// Accumulates c * l1 * l2 * l3 into the dense cube table indexed by sorted
// variable triples; each l is a dense linear form over the n^2 variables.
void accumulate_product(std::vector<FieldElem>& table, int nvars, const FieldElem& c,
                        const std::vector<FieldElem>& l1, const std::vector<FieldElem>& l2,
                        const std::vector<FieldElem>& l3)
{
    for (int i = 0; i < nvars; ++i) {
        if (l1[i].is_zero()) continue;
        FieldElem ci = c * l1[i];
        for (int j = 0; j < nvars; ++j) {
            if (l2[j].is_zero()) continue;
            FieldElem cij = ci * l2[j];
            for (int k = 0; k < nvars; ++k) {
                if (l3[k].is_zero()) continue;
                std::array<int, 3> v{i, j, k};
                std::sort(v.begin(), v.end());
                table[(v[0] * nvars + v[1]) * nvars + v[2]].add_product(cij, l3[k]);
            }
        }
    }
}

CubicForm from_table(Field field, int n, const std::vector<FieldElem>& table)
{
    const int nvars = n * n;
    CubicForm f(field, n);
    for (int i = 0; i < nvars; ++i)
        for (int j = i; j < nvars; ++j)
            for (int k = j; k < nvars; ++k) f.add_term(Monomial{{i, j, k}}, table[(i * nvars + j) * nvars + k]);
    return f;
}

}  // namespace

CubicForm pairing_cube(const SquareMatrix& m)
{
    const int n = m.n();
    const int nvars = n * n;
    // tr(mX) = sum_{p,q} m_pq x_qp
    std::vector<FieldElem> lin(nvars, m.field().zero());
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) lin[q * n + p] = m(p, q);

    CubicForm f(m.field(), n);
    for (int i = 0; i < nvars; ++i) {
        if (lin[i].is_zero()) continue;
        for (int j = i; j < nvars; ++j) {
            if (lin[j].is_zero()) continue;
            FieldElem lij = lin[i] * lin[j];
            for (int k = j; k < nvars; ++k) {
                if (lin[k].is_zero()) continue;
                std::array<int, 3> v{i, j, k};
                f.add_term(Monomial{v}, (lij * lin[k]).scaled(Rational(multiplicity(v))));
            }
        }
    }
    return f;
}

FieldElem evaluate(const CubicForm& f, const SquareMatrix& x)
{
    require_same_n(f.n(), x.n(), "evaluate");
    const auto& e = x.entries();
    FieldElem total = f.field().zero();
    for (const auto& [m, c] : f.terms()) {
        FieldElem t = c * e[m.vars[0]];
        total.add_product(t, e[m.vars[1]] * e[m.vars[2]]);
    }
    return total;
}

CubicForm scale_add(const CubicForm& f, const FieldElem& c, const CubicForm& g)
{
    require_same_n(f.n(), g.n(), "scale_add");
    CubicForm out = f;
    if (c.is_zero()) return out;
    for (const auto& [m, gc] : g.terms()) out.add_term(m, c * gc);
    return out;
}

MatrixLinearMap::MatrixLinearMap(std::vector<SquareMatrix> unit_images) : images_(std::move(unit_images))
{
    if (images_.empty()) throw std::invalid_argument("empty linear map");
    n_ = images_.front().n();
    if (static_cast<int>(images_.size()) != n_ * n_) throw std::invalid_argument("linear map needs n^2 unit images");
    for (const auto& im : images_) require_same_n(im.n(), n_, "linear map");
}

MatrixLinearMap MatrixLinearMap::from_function(Field field, int n,
                                               const std::function<SquareMatrix(const SquareMatrix&)>& fn)
{
    std::vector<SquareMatrix> images;
    images.reserve(static_cast<size_t>(n) * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) images.push_back(fn(SquareMatrix::unit(field, n, p, q)));
    return MatrixLinearMap(std::move(images));
}

MatrixLinearMap MatrixLinearMap::identity(Field field, int n)
{
    return from_function(field, n, [](const SquareMatrix& x) { return x; });
}

SquareMatrix MatrixLinearMap::apply(const SquareMatrix& x) const
{
    require_same_n(x.n(), n_, "linear map application");
    SquareMatrix out(field(), n_);
    for (int u = 0; u < n_ * n_; ++u) {
        const FieldElem& xu = x.entries()[u];
        if (xu.is_zero()) continue;
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) out(r, c).add_product(xu, images_[u](r, c));
    }
    return out;
}

MatrixLinearMap MatrixLinearMap::compose(const MatrixLinearMap& inner) const
{
    require_same_n(n_, inner.n_, "linear map composition");
    std::vector<SquareMatrix> images;
    images.reserve(images_.size());
    for (const auto& im : inner.images_) images.push_back(apply(im));
    return MatrixLinearMap(std::move(images));
}

CubicForm pullback(const CubicForm& f, const MatrixLinearMap& l)
{
    require_same_n(f.n(), l.n(), "pullback");
    const int n = f.n();
    const int nvars = n * n;
    // The variable x_v of f becomes the linear form X -> L(X)_v = sum_u X_u L(E_u)_v.
    std::vector<std::vector<FieldElem>> subst(nvars, std::vector<FieldElem>(nvars, f.field().zero()));
    for (int u = 0; u < nvars; ++u) {
        const SquareMatrix& img = l.image_of_unit(u / n, u % n);
        for (int v = 0; v < nvars; ++v) subst[v][u] = img.entries()[v];
    }
    std::vector<FieldElem> table(static_cast<size_t>(nvars) * nvars * nvars, f.field().zero());
    for (const auto& [m, c] : f.terms())
        accumulate_product(table, nvars, c, subst[m.vars[0]], subst[m.vars[1]], subst[m.vars[2]]);
    return from_table(f.field(), n, table);
}

}  // namespace waring
