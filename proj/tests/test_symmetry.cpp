#include "support.hpp"

#include "waring/symmetry.hpp"

#include <doctest.h>

#include <set>

using namespace waring;
using waring::testing::random_matrix;

namespace {

WaringDecomposition dec() { return rank18_decomposition(verified_tau()); }

InducedPermutation as_perm(const PermutationResult& r)
{
    REQUIRE(std::holds_alternative<InducedPermutation>(r));
    return std::get<InducedPermutation>(r);
}

// Straightforward reading of the action: g-conjugate, then transpose, then conjugate.
SquareMatrix direct_action(const SymOp& op, const SquareMatrix& m)
{
    const SquareMatrix& g = op.g.rep();
    SquareMatrix x = g * m * inverse(g);
    if (op.transpose) x = x.transpose();
    if (op.conjugate) x = x.conjugate();
    return x;
}

SymOp random_op(Field f, std::mt19937_64& rng)
{
    SquareMatrix g = random_matrix(f, 3, rng);
    while (rank(g) < 3) g = random_matrix(f, 3, rng);
    std::bernoulli_distribution coin(0.5);
    return SymOp{ProjectiveMatrix(g), coin(rng), coin(rng)};
}

AffineMap linear(int a, int b, int c, int d) { return AffineMap{{{{a, b}, {c, d}}}, {0, 0}}; }

}  // namespace

TEST_CASE("apply_op examples")
{
    auto d = dec();
    Field f = d.field();
    const auto& m = d.matrices;
    CHECK(apply_op(SymOp::identity(f, 3), m[0]) == m[0]);
    CHECK(apply_op(transpose_op(f), m[1]) == m[3]);
    auto rho = rho_generators(f);
    CHECK(apply_op(rho[0], m[9]) == m[9]);
}

TEST_CASE("composition normal form matches the direct action")
{
    Field f = Field::with_tau(verified_tau());
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        SymOp a = random_op(f, rng), b = random_op(f, rng);
        SquareMatrix m = random_matrix(f, 3, rng);
        CHECK(proportional(apply_op(compose(a, b), m), direct_action(a, direct_action(b, m))));
        CHECK(proportional(apply_op(inverse(a), apply_op(a, m)), m));
        CHECK(compose(a, inverse(a)) == SymOp::identity(f, 3));
    }
}

TEST_CASE("induced permutations of the generators")
{
    auto d = dec();
    Field f = d.field();
    auto rho = rho_generators(f);
    REQUIRE(rho.size() == 5);

    auto id = as_perm(induced_permutation(SymOp::identity(f, 3), d));
    for (int i = 0; i < 18; ++i) {
        CHECK(id.perm[i] == i);
        CHECK(id.witnesses[i].is_one());
    }

    auto er = as_perm(induced_permutation(rho[0], d));
    const std::vector<int> shift_right{1, 2, 0, 4, 5, 3, 7, 8, 6};
    for (int i = 0; i < 9; ++i) CHECK(er.perm[i] == shift_right[i]);
    for (int i = 9; i < 18; ++i) CHECK(er.perm[i] == i);
    for (const auto& w : er.witnesses) CHECK(w.pow(3).is_one());

    for (const auto& g : rho) CHECK(std::holds_alternative<InducedPermutation>(induced_permutation(g, d)));
}

TEST_CASE("the frame-transport matrix is not a symmetry")
{
    auto d = dec();
    Field f = d.field();
    auto r = induced_permutation(SymOp::from_matrix(counterexample_matrix(f)), d);
    REQUIRE(std::holds_alternative<NotASymmetry>(r));
    CHECK(std::get<NotASymmetry>(r).index < 9);

    // The image of m3 matches nothing; its column point is [1 : zeta - 1 : -zeta^2].
    SquareMatrix img = apply_op(SymOp::from_matrix(counterexample_matrix(f)), d.matrices[2]);
    CHECK(rank(img) == 1);
    for (const auto& m : d.matrices) CHECK_FALSE(tensor_equiv(m, img));
    const FieldElem z = f.zeta();
    CHECK(ProjPoint({img(0, 1), img(1, 1), img(2, 1)}) == ProjPoint({f.one(), z - f.one(), -(z * z)}));
}

TEST_CASE("stabilizer checks")
{
    Field f = Field::with_tau(verified_tau());
    for (const auto& g : rho_generators(f)) CHECK(stabilizes_sM(g));
    CHECK(stabilizes_sM(transpose_op(f)));
    CHECK(stabilizes_sM(conjugation_op(f)));
    SquareMatrix g = SquareMatrix::identity(f, 3);
    g(2, 2) = f.from_int(2);
    CHECK(stabilizes_sM(SymOp::from_matrix(g)));
    // Scaling X -> 2X is not representable: the projective class of 2I is the identity.
    CHECK(ProjectiveMatrix(f.from_int(2) * SquareMatrix::identity(f, 3)) == ProjectiveMatrix::identity(f, 3));
}

TEST_CASE("label actions of the generators")
{
    auto d = dec();
    Field f = d.field();
    auto rho = rho_generators(f);
    auto printed = rho_generator_labels();
    REQUIRE(printed.size() == rho.size());

    // Observed first-block maps under labels (row, column) acting on column vectors.
    const std::vector<AffineMap> observed = {
        AffineMap{{{{1, 0}, {0, 1}}}, {0, 1}},
        AffineMap{{{{1, 0}, {0, 1}}}, {1, 0}},
        linear(1, 1, 0, 1),
        linear(2, 2, 2, 1),
        linear(2, 1, 2, 0),
    };
    for (size_t k = 0; k < rho.size(); ++k) {
        auto la = label_action(as_perm(induced_permutation(rho[k], d)));
        REQUIRE(la.blocks[0]);
        REQUIRE(la.blocks[1]);
        CHECK(*la.blocks[0] == observed[k]);
        if (k < 2) {
            CHECK(*la.blocks[1] == linear(1, 0, 0, 1));
        } else {
            CHECK(*la.blocks[1] == observed[k]);
        }
        // Translations and the shear agree with the printed labels; the two other
        // SL(2,3) generators agree only up to conjugacy (same trace and determinant).
        const auto& A = observed[k].linear;
        const auto& B = printed[k].linear;
        CHECK((A[0][0] + A[1][1]) % 3 == (B[0][0] + B[1][1]) % 3);
        CHECK(observed[k].det() == printed[k].det());
        if (k < 3) CHECK(observed[k] == printed[k]);
    }

    auto la = label_action(as_perm(induced_permutation(transpose_op(f), d)));
    REQUIRE(la.blocks[0]);
    REQUIRE(la.blocks[1]);
    CHECK(*la.blocks[0] == linear(0, 1, 1, 0));
    CHECK(*la.blocks[1] == linear(0, 2, 2, 0));
    CHECK(la.blocks[0]->det() == 2);
    CHECK(la.blocks[1]->det() == 2);

    auto lc = label_action(as_perm(induced_permutation(conjugation_op(f), d)));
    REQUIRE(lc.blocks[0]);
    REQUIRE(lc.blocks[1]);
    CHECK(*lc.blocks[0] == linear(0, 1, 1, 0));
    CHECK(*lc.blocks[1] == linear(0, 1, 1, 0));
}

TEST_CASE("affine fitting of label permutations")
{
    std::vector<int> id{0, 1, 2, 3, 4, 5, 6, 7, 8};
    auto a = affine_from_permutation(id);
    REQUIRE(a);
    CHECK(*a == linear(1, 0, 0, 1));
    std::vector<int> swap01{1, 0, 2, 3, 4, 5, 6, 7, 8};
    CHECK_FALSE(affine_from_permutation(swap01));
    for (int k = 0; k < 9; ++k) CHECK(telephone_index(telephone_label(k)) == k);
    CHECK(telephone_label(5) == std::array<int, 2>{1, 2});
}

TEST_CASE("composition law for induced permutations")
{
    auto d = dec();
    Field f = d.field();
    auto gens = rho_generators(f);
    gens.push_back(transpose_op(f));
    gens.push_back(conjugation_op(f));
    for (const auto& a : gens)
        for (const auto& b : gens) {
            auto pa = as_perm(induced_permutation(a, d));
            auto pb = as_perm(induced_permutation(b, d));
            auto pab = as_perm(induced_permutation(compose(a, b), d));
            CHECK(pab.perm == compose_permutations(pa.perm, pb.perm));
        }
}

TEST_CASE("closure orders")
{
    auto d = dec();
    Field f = d.field();
    auto gens = rho_generators(f);
    auto g216 = closure(gens, d);
    CHECK(g216.order() == 216);
    CHECK(g216.elements.front().op == SymOp::identity(f, 3));

    gens.push_back(transpose_op(f));
    auto g432 = closure(gens, d);
    CHECK(g432.order() == 432);

    std::set<AffineMap> images;
    for (const auto& e : g432.elements) {
        for (int i = 0; i < 9; ++i) CHECK(e.induced.perm[i] < 9);
        auto la = label_action(e.induced);
        REQUIRE(la.blocks[0]);
        images.insert(*la.blocks[0]);
        CHECK((la.blocks[0]->det() == 1) == !e.op.transpose);
    }
    CHECK(images.size() == 432);

    gens.push_back(conjugation_op(f));
    CHECK(closure(gens, d).order() == 864);

    CHECK_THROWS_AS(closure({SymOp::from_matrix(counterexample_matrix(f))}, d), std::invalid_argument);
}

TEST_CASE("frame transport")
{
    Field f = Field::with_tau(verified_tau());
    auto ms = rank18_matrices(f);
    auto col = [&](int i) {
        const auto& m = ms[i - 1];
        for (int c = 0; c < 3; ++c)
            if (!m(0, c).is_zero() || !m(1, c).is_zero() || !m(2, c).is_zero())
                return ProjPoint({m(0, c), m(1, c), m(2, c)});
        throw std::logic_error("zero matrix");
    };
    std::array<ProjPoint, 4> src{col(1), col(2), col(7), col(8)};
    std::array<ProjPoint, 4> dst{col(1), col(4), col(3), col(6)};

    CHECK(frame_transport(src, src) == ProjectiveMatrix::identity(f, 3));
    ProjectiveMatrix g = frame_transport(src, dst);
    CHECK(g == ProjectiveMatrix(counterexample_matrix(f)));
    for (int k = 0; k < 4; ++k) CHECK(g.apply(src[k]) == dst[k]);

    const FieldElem O = f.zero(), I = f.one(), z = f.zeta();
    CHECK(g.apply(ProjPoint({O, I, -(z * z)})) == ProjPoint({O, I, -z}));

    std::array<ProjPoint, 4> degenerate{col(1), col(2), col(3), col(4)};
    CHECK_THROWS_AS(frame_transport(degenerate, dst), std::invalid_argument);
}
