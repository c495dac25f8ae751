#pragma once

// Symmetries of a Waring decomposition: projective conjugations m -> g m g^-1,
// optionally followed by transposition and by entrywise field conjugation.

#include "waring/decomposition.hpp"
#include "waring/projective.hpp"

#include <array>
#include <optional>
#include <variant>
#include <vector>

namespace waring {

/// Acts on matrices as conjugate^c o transpose^t o (m -> g m g^-1).
struct SymOp {
    ProjectiveMatrix g;
    bool transpose = false;
    bool conjugate = false;

    static SymOp identity(Field field, int n);
    static SymOp from_matrix(const SquareMatrix& g) { return SymOp{ProjectiveMatrix(g)}; }

    friend bool operator==(const SymOp& x, const SymOp& y)
    {
        return x.transpose == y.transpose && x.conjugate == y.conjugate && x.g == y.g;
    }
};

SymOp transpose_op(Field field, int n = 3);
SymOp conjugation_op(Field field, int n = 3);

/// outer o inner, rewritten into normal form.
SymOp compose(const SymOp& outer, const SymOp& inner);
SymOp inverse(const SymOp& op);

SquareMatrix apply_op(const SymOp& op, const SquareMatrix& m);

/// The K-linear substitution L with tr(op'(m) X) = tr(m L(X)), where op' is op
/// without its conjugation flag.
MatrixLinearMap substitution_map(const SymOp& op);
/// Image of a cubic form under the op: pullback along substitution_map, then
/// conjugated coefficients if flagged.
CubicForm transform_form(const SymOp& op, const CubicForm& f);
/// Whether the op fixes the trace cubic form exactly.
bool stabilizes_sM(const SymOp& op);

/// op(m_i) = witnesses[i] * m_{perm[i]}, indices 0-based, witnesses cube roots of unity.
struct InducedPermutation {
    std::vector<int> perm;
    std::vector<FieldElem> witnesses;
};

struct NotASymmetry {
    int index;           // first matrix whose image has no match
    SquareMatrix image;
};

using PermutationResult = std::variant<InducedPermutation, NotASymmetry>;

PermutationResult induced_permutation(const SymOp& op, const WaringDecomposition& d);

/// (outer o inner)(i) = outer[inner[i]].
std::vector<int> compose_permutations(const std::vector<int>& outer, const std::vector<int>& inner);

struct GroupElement {
    SymOp op;
    InducedPermutation induced;
};

struct GroupReport {
    std::vector<SymOp> generators;
    std::vector<GroupElement> elements;  // BFS order, identity first

    size_t order() const { return elements.size(); }
};

/// Breadth-first closure of the generators under composition. Throws
/// std::invalid_argument when a generator does not permute the decomposition.
GroupReport closure(const std::vector<SymOp>& gens, const WaringDecomposition& d);

/// x -> A x + t on F_3^2, labels as (row, column) column vectors.
struct AffineMap {
    std::array<std::array<int, 2>, 2> linear{};
    std::array<int, 2> translation{};

    std::array<int, 2> apply(std::array<int, 2> x) const;
    int det() const;  // in {0, 1, 2}
    friend bool operator==(const AffineMap&, const AffineMap&) = default;
    auto operator<=>(const AffineMap&) const = default;
};

/// Telephone labeling of a 3x3 block: 0-based index k -> (k div 3, k mod 3).
std::array<int, 2> telephone_label(int index_in_block);
int telephone_index(std::array<int, 2> label);

struct LabelAction {
    /// Per block of nine; empty when that block's permutation is not affine.
    std::array<std::optional<AffineMap>, 2> blocks;
};

/// Throws std::invalid_argument unless both blocks of nine are preserved setwise.
LabelAction label_action(const InducedPermutation& ip);
/// Affine fit of a permutation of nine telephone labels.
std::optional<AffineMap> affine_from_permutation(const std::vector<int>& perm9);

/// The unique projective g with g src_k ~ dst_k. Throws std::invalid_argument
/// when either quadruple has three collinear points.
ProjectiveMatrix frame_transport(const std::array<ProjPoint, 4>& src, const std::array<ProjPoint, 4>& dst);

/// rho(e_r), rho(e_d), rho([[1,1],[0,1]]), rho([[0,1],[-1,0]]), rho([[0,1],[-1,-1]]).
std::vector<SymOp> rho_generators(Field field);
/// The affine maps of F_3^2 the generators above are labelled with, same order.
/// The last two agree with the observed label action only up to conjugacy.
std::vector<AffineMap> rho_generator_labels();
/// Frame transport (1,2,7,8) -> (1,4,3,6) as displayed.
SquareMatrix counterexample_matrix(Field field);

}  // namespace waring
