#include "waring/symmetry.hpp"

#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace waring {

SymOp SymOp::identity(Field field, int n) { return SymOp{ProjectiveMatrix::identity(field, n)}; }

SymOp transpose_op(Field field, int n) { return SymOp{ProjectiveMatrix::identity(field, n), true, false}; }

SymOp conjugation_op(Field field, int n) { return SymOp{ProjectiveMatrix::identity(field, n), false, true}; }

SymOp compose(const SymOp& outer, const SymOp& inner)
{
    // Ad_g o conj = conj o Ad_{conj(g)} and Ad_g o T = T o Ad_{g^-T}.
    SquareMatrix g1 = outer.g.rep();
    if (inner.conjugate) g1 = g1.conjugate();
    if (inner.transpose) g1 = waring::inverse(g1).transpose();
    return SymOp{ProjectiveMatrix(g1 * inner.g.rep()), outer.transpose != inner.transpose,
                 outer.conjugate != inner.conjugate};
}

SymOp inverse(const SymOp& op)
{
    SymOp ginv{ProjectiveMatrix(waring::inverse(op.g.rep()))};
    SymOp flags{ProjectiveMatrix::identity(op.g.field(), op.g.n()), op.transpose, op.conjugate};
    return compose(ginv, flags);
}

SquareMatrix apply_op(const SymOp& op, const SquareMatrix& m)
{
    const SquareMatrix& g = op.g.rep();
    SquareMatrix out = g * m * waring::inverse(g);
    if (op.transpose) out = out.transpose();
    if (op.conjugate) out = out.conjugate();
    return out;
}

MatrixLinearMap substitution_map(const SymOp& op)
{
    // tr(g m g^-1 X) = tr(m g^-1 X g); with transposition X is replaced by X^T.
    const SquareMatrix g = op.g.rep();
    const SquareMatrix ginv = waring::inverse(g);
    const bool t = op.transpose;
    return MatrixLinearMap::from_function(g.field(), g.n(), [&](const SquareMatrix& x) {
        return ginv * (t ? x.transpose() : x) * g;
    });
}

CubicForm transform_form(const SymOp& op, const CubicForm& f)
{
    CubicForm out = pullback(f, substitution_map(op));
    return op.conjugate ? out.conjugate_coefficients() : out;
}

bool stabilizes_sM(const SymOp& op)
{
    CubicForm target = trace_cubic_form(op.g.field(), op.g.n());
    return transform_form(op, target) == target;
}

namespace {

// Scales a nonzero matrix so its first nonzero entry is 1 and renders it as a
// lookup key; matrices share a key iff they are proportional.
std::string projective_key(const SquareMatrix& m)
{
    const auto& e = m.entries();
    size_t k = 0;
    while (k < e.size() && e[k].is_zero()) ++k;
    if (k == e.size()) return "zero";
    FieldElem s = e[k].inv();
    std::string key;
    for (const auto& x : e) {
        FieldElem y = s * x;
        for (const auto& c : y.coeffs()) {
            key += c.get_str();
            key += ',';
        }
        key += ';';
    }
    return key;
}

std::string op_key(const SymOp& op)
{
    std::string key = op.transpose ? "T" : "-";
    key += op.conjugate ? "C" : "-";
    for (const auto& x : op.g.rep().entries())
        for (const auto& c : x.coeffs()) {
            key += c.get_str();
            key += ',';
        }
    return key;
}

class DecompositionIndex {
public:
    explicit DecompositionIndex(const WaringDecomposition& d) : d_(d)
    {
        for (size_t j = 0; j < d.matrices.size(); ++j) by_key_.emplace(projective_key(d.matrices[j]), static_cast<int>(j));
    }

    PermutationResult match(const SymOp& op) const
    {
        const size_t r = d_.matrices.size();
        InducedPermutation ip;
        ip.perm.reserve(r);
        const SquareMatrix& g = op.g.rep();
        const SquareMatrix ginv = waring::inverse(g);
        for (size_t i = 0; i < r; ++i) {
            SquareMatrix img = g * d_.matrices[i] * ginv;
            if (op.transpose) img = img.transpose();
            if (op.conjugate) img = img.conjugate();
            auto it = by_key_.find(projective_key(img));
            std::optional<FieldElem> mu;
            if (it != by_key_.end()) mu = tensor_equiv(d_.matrices[it->second], img);
            if (!mu) return NotASymmetry{static_cast<int>(i), img};
            ip.perm.push_back(it->second);
            ip.witnesses.push_back(*mu);
        }
        return ip;
    }

private:
    const WaringDecomposition& d_;
    std::unordered_multimap<std::string, int> by_key_;
};

}  // namespace

PermutationResult induced_permutation(const SymOp& op, const WaringDecomposition& d)
{
    return DecompositionIndex(d).match(op);
}

std::vector<int> compose_permutations(const std::vector<int>& outer, const std::vector<int>& inner)
{
    if (outer.size() != inner.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> out(inner.size());
    for (size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}

GroupReport closure(const std::vector<SymOp>& gens, const WaringDecomposition& d)
{
    if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
    DecompositionIndex index(d);
    for (size_t k = 0; k < gens.size(); ++k)
        if (std::holds_alternative<NotASymmetry>(index.match(gens[k])))
            throw std::invalid_argument("generator " + std::to_string(k) + " is not a symmetry of the decomposition");

    GroupReport report;
    report.generators = gens;
    std::unordered_map<std::string, size_t> seen;
    SymOp id = SymOp::identity(gens.front().g.field(), gens.front().g.n());
    report.elements.push_back({id, std::get<InducedPermutation>(index.match(id))});
    seen.emplace(op_key(id), 0);

    for (size_t head = 0; head < report.elements.size(); ++head) {
        for (const auto& gen : gens) {
            SymOp next = compose(gen, report.elements[head].op);
            std::string key = op_key(next);
            if (seen.count(key)) continue;
            auto induced = index.match(next);
            if (std::holds_alternative<NotASymmetry>(induced))
                throw std::logic_error("closure produced an element that is not a symmetry");
            seen.emplace(std::move(key), report.elements.size());
            report.elements.push_back({std::move(next), std::get<InducedPermutation>(std::move(induced))});
        }
    }
    return report;
}

std::array<int, 2> AffineMap::apply(std::array<int, 2> x) const
{
    return {(linear[0][0] * x[0] + linear[0][1] * x[1] + translation[0]) % 3,
            (linear[1][0] * x[0] + linear[1][1] * x[1] + translation[1]) % 3};
}

int AffineMap::det() const { return ((linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0]) % 3 + 3) % 3; }

std::array<int, 2> telephone_label(int index_in_block) { return {index_in_block / 3, index_in_block % 3}; }

int telephone_index(std::array<int, 2> label) { return label[0] * 3 + label[1]; }

std::optional<AffineMap> affine_from_permutation(const std::vector<int>& perm9)
{
    if (perm9.size() != 9) throw std::invalid_argument("affine fit needs a permutation of nine labels");
    auto img = [&](int r, int c) { return telephone_label(perm9[telephone_index({r, c})]); };
    AffineMap map;
    map.translation = img(0, 0);
    auto e1 = img(1, 0), e2 = img(0, 1);
    for (int k = 0; k < 2; ++k) {
        map.linear[k][0] = (e1[k] - map.translation[k] + 3) % 3;
        map.linear[k][1] = (e2[k] - map.translation[k] + 3) % 3;
    }
    for (int i = 0; i < 9; ++i)
        if (map.apply(telephone_label(i)) != telephone_label(perm9[i])) return std::nullopt;
    return map;
}

LabelAction label_action(const InducedPermutation& ip)
{
    if (ip.perm.size() != 18) throw std::invalid_argument("label action needs an 18-element permutation");
    LabelAction out;
    for (int b = 0; b < 2; ++b) {
        std::vector<int> local(9);
        for (int i = 0; i < 9; ++i) {
            int j = ip.perm[9 * b + i] - 9 * b;
            if (j < 0 || j >= 9) throw std::invalid_argument("permutation does not preserve the blocks");
            local[i] = j;
        }
        out.blocks[b] = affine_from_permutation(local);
    }
    return out;
}

namespace {

// Columns lambda_k p_k for k < 3 with lambda solving sum lambda_k p_k = p_4.
SquareMatrix frame_basis(const std::array<ProjPoint, 4>& frame)
{
    const int n = frame[0].dim();
    if (n != 3) throw std::invalid_argument("frame transport is defined for P^2");
    Field f = frame[0].field();
    SquareMatrix cols(f, 3);
    for (int k = 0; k < 3; ++k)
        for (int r = 0; r < 3; ++r) cols(r, k) = frame[k].coords()[r];
    auto lambda = solve(cols, frame[3].coords());
    if (!lambda) throw std::invalid_argument("degenerate frame: first three points are collinear");
    for (int k = 0; k < 3; ++k) {
        if ((*lambda)[k].is_zero()) throw std::invalid_argument("degenerate frame: three points are collinear");
        for (int r = 0; r < 3; ++r) cols(r, k) *= (*lambda)[k];
    }
    return cols;
}

}  // namespace

ProjectiveMatrix frame_transport(const std::array<ProjPoint, 4>& src, const std::array<ProjPoint, 4>& dst)
{
    SquareMatrix a = frame_basis(src);
    SquareMatrix b = frame_basis(dst);
    return ProjectiveMatrix(b * waring::inverse(a));
}

std::vector<SymOp> rho_generators(Field f)
{
    const FieldElem O = f.zero();
    const FieldElem I = f.one();
    const FieldElem z = f.zeta();
    const FieldElem z2 = z * z;
    const FieldElem two = f.from_int(2);
    auto M = [&](std::vector<std::vector<FieldElem>> rows) {
        return SymOp::from_matrix(SquareMatrix::from_rows(f, rows));
    };
    return {
        M({{O, O, I}, {z2, O, O}, {O, z, O}}),
        M({{O, O, I}, {z, O, O}, {O, z2, O}}),
        M({{-z + I, z2 - I, two * z + I}, {z2 - I, -z + I, two * z + I}, {-z + I, -z + I, -z + I}}),
        M({{-z2 + I, z - I, -z2 + I}, {z - I, -z2 + I, -z2 + I}, {z - I, z - I, -two * z - I}}),
        M({{I, O, O}, {O, I, O}, {O, O, z2}}),
    };
}

std::vector<AffineMap> rho_generator_labels()
{
    return {
        AffineMap{{{{1, 0}, {0, 1}}}, {0, 1}},
        AffineMap{{{{1, 0}, {0, 1}}}, {1, 0}},
        AffineMap{{{{1, 1}, {0, 1}}}, {0, 0}},
        AffineMap{{{{0, 1}, {2, 0}}}, {0, 0}},
        AffineMap{{{{0, 1}, {2, 2}}}, {0, 0}},
    };
}

SquareMatrix counterexample_matrix(Field f)
{
    const FieldElem O = f.zero();
    const FieldElem I = f.one();
    const FieldElem z = f.zeta();
    const FieldElem z2 = z * z;
    return SquareMatrix::from_rows(f, {{O, -z2, -I}, {-z2, O, -z}, {O, O, z2}});
}

}  // namespace waring
