#pragma once

// Matrices over K and cubic forms on the n^2-dimensional matrix space.
// A symmetric 3-tensor T is identified with its cubic polynomial X -> T(X,X,X).

#include "waring/qfield.hpp"

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace waring {

class SquareMatrix {
public:
    SquareMatrix(Field field, int n);

    static SquareMatrix identity(Field field, int n);
    /// Matrix unit E_{pq}, 0-based indices.
    static SquareMatrix unit(Field field, int n, int p, int q);
    static SquareMatrix from_rows(Field field, const std::vector<std::vector<FieldElem>>& rows);

    int n() const { return n_; }
    Field field() const { return field_; }

    const FieldElem& operator()(int r, int c) const { return e_[r * n_ + c]; }
    FieldElem& operator()(int r, int c) { return e_[r * n_ + c]; }
    const std::vector<FieldElem>& entries() const { return e_; }

    SquareMatrix& operator+=(const SquareMatrix& o);
    SquareMatrix& operator-=(const SquareMatrix& o);
    friend SquareMatrix operator+(SquareMatrix x, const SquareMatrix& y) { return x += y; }
    friend SquareMatrix operator-(SquareMatrix x, const SquareMatrix& y) { return x -= y; }
    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y);
    friend SquareMatrix operator*(const FieldElem& s, const SquareMatrix& m);

    SquareMatrix transpose() const;
    /// Entrywise field conjugation.
    SquareMatrix conjugate() const;
    /// Conjugate transpose.
    SquareMatrix adjoint() const { return transpose().conjugate(); }
    FieldElem trace() const;
    bool is_zero() const;

    friend bool operator==(const SquareMatrix& x, const SquareMatrix& y);

private:
    Field field_;
    int n_;
    std::vector<FieldElem> e_;
};

/// Exact Gaussian elimination over K.
int rank(const SquareMatrix& m);
FieldElem determinant(const SquareMatrix& m);
/// Throws std::domain_error when m is singular.
SquareMatrix inverse(const SquareMatrix& m);
/// Solves m x = b; empty when m is singular.
std::optional<std::vector<FieldElem>> solve(const SquareMatrix& m, const std::vector<FieldElem>& b);

/// Degree-3 monomial in the variables x_{pq}; stored as three sorted variable
/// indices v = p*n + q (0-based).
struct Monomial {
    std::array<int, 3> vars{};

    static Monomial from_vars(int v0, int v1, int v2);
    /// Entries are 0-based (p, q) pairs.
    static Monomial from_pairs(int n, std::array<std::pair<int, int>, 3> pairs);
    std::array<std::pair<int, int>, 3> pairs(int n) const;

    auto operator<=>(const Monomial&) const = default;
};

class CubicForm {
public:
    CubicForm(Field field, int n) : field_(field), n_(n) {}

    int n() const { return n_; }
    Field field() const { return field_; }
    const std::map<Monomial, FieldElem>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    FieldElem coeff(const Monomial& m) const;
    /// Adds c to the coefficient of m, dropping it if the result is zero.
    void add_term(const Monomial& m, const FieldElem& c);
    /// Applies field conjugation to every coefficient.
    CubicForm conjugate_coefficients() const;

    friend bool operator==(const CubicForm& x, const CubicForm& y)
    {
        return x.n_ == y.n_ && x.field_ == y.field_ && x.terms_ == y.terms_;
    }

private:
    Field field_;
    int n_;
    std::map<Monomial, FieldElem> terms_;
};

/// 1/2 (tr(ABC) + tr(ACB)).
FieldElem sm_value(const SquareMatrix& a, const SquareMatrix& b, const SquareMatrix& c);
/// X -> tr(X^3) = sum_{p,q,r} x_pq x_qr x_rp.
CubicForm trace_cubic_form(Field field, int n);
/// The cube of the linear form X -> tr(mX).
CubicForm pairing_cube(const SquareMatrix& m);
FieldElem evaluate(const CubicForm& f, const SquareMatrix& x);
/// f + c g.
CubicForm scale_add(const CubicForm& f, const FieldElem& c, const CubicForm& g);

/// K-linear endomorphism of the n x n matrix space, stored as the images of
/// the matrix units E_{pq} in row-major order.
class MatrixLinearMap {
public:
    explicit MatrixLinearMap(std::vector<SquareMatrix> unit_images);
    static MatrixLinearMap from_function(Field field, int n,
                                         const std::function<SquareMatrix(const SquareMatrix&)>& fn);
    static MatrixLinearMap identity(Field field, int n);

    int n() const { return n_; }
    Field field() const { return images_.front().field(); }
    const SquareMatrix& image_of_unit(int p, int q) const { return images_[p * n_ + q]; }
    SquareMatrix apply(const SquareMatrix& x) const;

    /// (this o inner)(X) = this(inner(X)).
    MatrixLinearMap compose(const MatrixLinearMap& inner) const;

private:
    int n_;
    std::vector<SquareMatrix> images_;
};

/// The form X -> f(L(X)).
CubicForm pullback(const CubicForm& f, const MatrixLinearMap& l);

}  // namespace waring
