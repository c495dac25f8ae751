#pragma once

#include "waring/symtensor.hpp"

#include <optional>
#include <vector>

namespace waring {

/// weight * sum_i (tr(m_i X))^3, claimed equal to tr(X^3).
struct WaringDecomposition {
    int n = 0;
    Rational weight;
    std::vector<SquareMatrix> matrices;
    Rational tau;

    Field field() const { return Field::with_tau(tau); }
};

struct VerificationReport {
    bool exact_match = false;
    /// weight * sum_i l_{m_i}^3 - trace form.
    CubicForm difference;
    Rational tau_used;
};

/// The printed value a = -2^(-1/3), i.e. tau = -1/2.
Rational printed_tau();
/// The value under which the rank-18 identity holds exactly.
Rational verified_tau();

/// The 18 rank-18 decomposition matrices in display order (block one m1..m9,
/// block two m10..m18), with a read in the given configuration.
std::vector<SquareMatrix> rank18_matrices(Field field);
WaringDecomposition rank18_decomposition(const Rational& tau);

VerificationReport verify_waring(const WaringDecomposition& d);

struct TauResolution {
    std::vector<VerificationReport> reports;  // one per candidate, in input order
    std::optional<Rational> accepted;          // first candidate with an exact match
};

/// Runs the verifier for each candidate tau on otherwise identical data.
TauResolution resolve_tau(const WaringDecomposition& d, const std::vector<Rational>& candidates);

/// c with f = c (tr X)^3, if f has that shape.
std::optional<FieldElem> trace_cube_multiple(const CubicForm& f);

/// mu with m2 = mu * m and mu^3 = 1, if one exists.
std::optional<FieldElem> tensor_equiv(const SquareMatrix& m, const SquareMatrix& m2);

int matrix_rank(const SquareMatrix& m);

/// For a rank-one m, returns its first nonzero column v when m = 2 v v^+ / (v^+ v)
/// holds exactly. Throws std::invalid_argument when m does not have rank one.
std::optional<std::vector<FieldElem>> projection_factor(const SquareMatrix& m);

/// Hermitian inner product v^+ w.
FieldElem hermitian_dot(const std::vector<FieldElem>& v, const std::vector<FieldElem>& w);

}  // namespace waring
