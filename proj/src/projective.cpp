#include "waring/projective.hpp"

#include <stdexcept>

namespace waring {

ProjPoint::ProjPoint(std::vector<FieldElem> coords) : coords_(std::move(coords))
{
    size_t k = 0;
    while (k < coords_.size() && coords_[k].is_zero()) ++k;
    if (k == coords_.size()) throw std::invalid_argument("projective point from the zero vector");
    if (!coords_[k].is_one()) {
        FieldElem s = coords_[k].inv();
        for (auto& c : coords_) c *= s;
    }
}

ProjectiveMatrix::ProjectiveMatrix(const SquareMatrix& m) : rep_(m)
{
    if (determinant(m).is_zero()) throw std::domain_error("projective matrix must be invertible");
    const auto& e = rep_.entries();
    size_t k = 0;
    while (e[k].is_zero()) ++k;
    if (!e[k].is_one()) rep_ = e[k].inv() * rep_;
}

ProjectiveMatrix ProjectiveMatrix::identity(Field field, int n)
{
    return ProjectiveMatrix(SquareMatrix::identity(field, n));
}

ProjPoint ProjectiveMatrix::apply(const ProjPoint& p) const
{
    if (p.dim() != n()) throw std::invalid_argument("dimension mismatch applying projective matrix");
    std::vector<FieldElem> out(n(), field().zero());
    for (int r = 0; r < n(); ++r)
        for (int c = 0; c < n(); ++c) out[r].add_product(rep_(r, c), p.coords()[c]);
    return ProjPoint(std::move(out));
}

bool proportional(const SquareMatrix& x, const SquareMatrix& y)
{
    if (x.n() != y.n()) return false;
    const auto& ex = x.entries();
    size_t k = 0;
    while (k < ex.size() && ex[k].is_zero()) ++k;
    if (k == ex.size()) return y.is_zero();
    if (y.entries()[k].is_zero()) return false;
    FieldElem s = y.entries()[k] / ex[k];
    return s * x == y;
}

}  // namespace waring
