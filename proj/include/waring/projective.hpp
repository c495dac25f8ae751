#pragma once

// Points of P^{n-1}(K) and elements of PGL(n, K), both held in a canonical
// scaling so that equality of projective classes is entrywise equality.

#include "waring/symtensor.hpp"

#include <vector>

namespace waring {

/// Class of a nonzero column vector up to K-scalars; first nonzero coordinate is 1.
class ProjPoint {
public:
    /// Throws std::invalid_argument on the zero vector.
    explicit ProjPoint(std::vector<FieldElem> coords);

    const std::vector<FieldElem>& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    Field field() const { return coords_.front().field(); }

    friend bool operator==(const ProjPoint& x, const ProjPoint& y) { return x.coords_ == y.coords_; }

private:
    std::vector<FieldElem> coords_;
};

/// Invertible matrix up to scalars; first nonzero entry (row-major) is 1.
class ProjectiveMatrix {
public:
    /// Throws std::domain_error when m is singular.
    explicit ProjectiveMatrix(const SquareMatrix& m);

    static ProjectiveMatrix identity(Field field, int n);

    const SquareMatrix& rep() const { return rep_; }
    int n() const { return rep_.n(); }
    Field field() const { return rep_.field(); }

    ProjPoint apply(const ProjPoint& p) const;

    friend bool operator==(const ProjectiveMatrix& x, const ProjectiveMatrix& y) { return x.rep_ == y.rep_; }

private:
    SquareMatrix rep_;
};

/// Whether two matrices agree up to a nonzero scalar.
bool proportional(const SquareMatrix& x, const SquareMatrix& y);

}  // namespace waring
