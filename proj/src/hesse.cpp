#include "waring/hesse.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace waring {

ProjPoint column_point(const SquareMatrix& m)
{
    if (matrix_rank(m) != 1) throw std::invalid_argument("column_point requires a rank-one matrix");
    for (int c = 0; c < m.n(); ++c) {
        std::vector<FieldElem> col;
        bool nonzero = false;
        for (int r = 0; r < m.n(); ++r) {
            col.push_back(m(r, c));
            nonzero = nonzero || !m(r, c).is_zero();
        }
        if (nonzero) return ProjPoint(std::move(col));
    }
    throw std::logic_error("rank-one matrix without a nonzero column");
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r)
{
    if (p.dim() != 3 || q.dim() != 3 || r.dim() != 3) throw std::invalid_argument("collinearity is defined in P^2");
    SquareMatrix m(p.field(), 3);
    for (int i = 0; i < 3; ++i) {
        m(i, 0) = p.coords()[i];
        m(i, 1) = q.coords()[i];
        m(i, 2) = r.coords()[i];
    }
    return determinant(m).is_zero();
}

Configuration build_configuration(const std::vector<ProjPoint>& points)
{
    const int k = static_cast<int>(points.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("duplicate points " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1));
    Configuration c{points, {}};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                if (collinear(points[i], points[j], points[l])) c.lines.push_back({i, j, l});

    // Two lines sharing two points would mean four collinear points.
    std::set<std::pair<int, int>> pairs;
    for (const auto& ln : c.lines)
        for (auto [a, b] : {std::pair{ln[0], ln[1]}, std::pair{ln[0], ln[2]}, std::pair{ln[1], ln[2]}})
            if (!pairs.insert({a, b}).second) throw std::invalid_argument("four or more collinear points");
    return c;
}

std::vector<ProjPoint> first_block_points(const WaringDecomposition& d)
{
    if (d.matrices.size() < 9) throw std::invalid_argument("decomposition has no nine-matrix first block");
    std::vector<ProjPoint> pts;
    for (int i = 0; i < 9; ++i) pts.push_back(column_point(d.matrices[i]));
    return pts;
}

std::vector<Line> affine_plane_lines()
{
    // Lines {x + s*dir : s in F_3} for the four directions of F_3^2.
    const std::array<std::array<int, 2>, 4> dirs{{{0, 1}, {1, 0}, {1, 1}, {1, 2}}};
    std::set<Line> lines;
    for (const auto& dir : dirs)
        for (int i = 0; i < 9; ++i) {
            auto x = std::array<int, 2>{i / 3, i % 3};
            Line ln;
            for (int s = 0; s < 3; ++s) ln[s] = ((x[0] + s * dir[0]) % 3) * 3 + (x[1] + s * dir[1]) % 3;
            std::sort(ln.begin(), ln.end());
            lines.insert(ln);
        }
    return {lines.begin(), lines.end()};
}

bool is_affine_plane_of_order_three(const Configuration& c, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (c.points.size() != 9) return fail("expected 9 points, got " + std::to_string(c.points.size()));
    if (c.lines.size() != 12) return fail("expected 12 lines, got " + std::to_string(c.lines.size()));
    std::vector<int> per_point(9, 0);
    std::set<std::pair<int, int>> covered;
    for (const auto& ln : c.lines) {
        for (int p : ln) ++per_point[p];
        covered.insert({ln[0], ln[1]});
        covered.insert({ln[0], ln[2]});
        covered.insert({ln[1], ln[2]});
    }
    for (int p = 0; p < 9; ++p)
        if (per_point[p] != 4) return fail("point " + std::to_string(p + 1) + " lies on " +
                                           std::to_string(per_point[p]) + " lines, expected 4");
    if (covered.size() != 36) return fail("some pair of points is not joined by a line");
    return true;
}

namespace {

class LineTable {
public:
    explicit LineTable(const Configuration& c) : k_(static_cast<int>(c.points.size())), third_(k_ * k_, -1)
    {
        for (const auto& ln : c.lines) {
            set(ln[0], ln[1], ln[2]);
            set(ln[0], ln[2], ln[1]);
            set(ln[1], ln[2], ln[0]);
        }
    }

    int size() const { return k_; }
    int third(int x, int y) const { return third_[x * k_ + y]; }

private:
    void set(int x, int y, int z)
    {
        third_[x * k_ + y] = z;
        third_[y * k_ + x] = z;
    }

    int k_;
    std::vector<int> third_;
};

bool preserves_lines(const Configuration& c, const LineTable& t, const PointPermutation& f)
{
    for (const auto& ln : c.lines)
        if (t.third(f[ln[0]], f[ln[1]]) != f[ln[2]]) return false;
    return true;
}

// Extends a partial map by forcing the third point of every line through two
// already-mapped points. Returns false on a contradiction.
bool propagate(const LineTable& t, PointPermutation& f)
{
    const int k = t.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < k; ++x) {
            if (f[x] < 0) continue;
            for (int y = x + 1; y < k; ++y) {
                if (f[y] < 0) continue;
                int z = t.third(x, y);
                if (z < 0) continue;
                int w = t.third(f[x], f[y]);
                if (w < 0) return false;
                if (f[z] < 0) {
                    f[z] = w;
                    changed = true;
                } else if (f[z] != w) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_bijection(const PointPermutation& f)
{
    std::vector<bool> hit(f.size(), false);
    for (int v : f) {
        if (v < 0 || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

std::vector<PointPermutation> brute_force(const Configuration& c, const LineTable& t)
{
    const int k = static_cast<int>(c.points.size());
    if (k > 10) throw std::invalid_argument("brute-force automorphism search limited to 10 points");
    PointPermutation f(k);
    std::iota(f.begin(), f.end(), 0);
    std::vector<PointPermutation> out;
    do {
        if (preserves_lines(c, t, f)) out.push_back(f);
    } while (std::next_permutation(f.begin(), f.end()));
    return out;
}

}  // namespace

std::vector<PointPermutation> incidence_automorphisms(const Configuration& c)
{
    const int k = static_cast<int>(c.points.size());
    LineTable t(c);

    // Points 1, 2, 5 determine everything on the Hesse configuration; check
    // that this holds structurally before relying on it.
    const std::array<int, 3> base{0, 1, 4};
    bool determining = k == 9 && t.third(0, 1) != 4;
    if (determining) {
        PointPermutation id(k, -1);
        for (int b : base) id[b] = b;
        determining = propagate(t, id) && std::none_of(id.begin(), id.end(), [](int v) { return v < 0; });
    }
    if (!determining) return brute_force(c, t);

    std::vector<PointPermutation> out;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (b == a) continue;
            for (int e = 0; e < k; ++e) {
                if (e == a || e == b) continue;
                PointPermutation f(k, -1);
                f[base[0]] = a;
                f[base[1]] = b;
                f[base[2]] = e;
                if (!propagate(t, f)) continue;
                if (!is_bijection(f)) continue;
                if (preserves_lines(c, t, f)) out.push_back(std::move(f));
            }
        }
    return out;
}

std::optional<ProjectiveMatrix> pgl_realizable(const PointPermutation& perm, const Configuration& c)
{
    if (c.points.size() < 6 || perm.size() != c.points.size())
        throw std::invalid_argument("pgl_realizable needs a permutation of at least six points");
    const std::array<int, 4> frame{0, 2, 3, 5};
    std::array<ProjPoint, 4> src{c.points[frame[0]], c.points[frame[1]], c.points[frame[2]], c.points[frame[3]]};
    std::array<ProjPoint, 4> dst{c.points[perm[frame[0]]], c.points[perm[frame[1]]], c.points[perm[frame[2]]],
                                 c.points[perm[frame[3]]]};
    // A degenerate source frame is an error; a degenerate image frame just
    // means no projective map can realize the permutation.
    frame_transport(src, src);
    std::optional<ProjectiveMatrix> g;
    try {
        g = frame_transport(src, dst);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    for (size_t i = 0; i < c.points.size(); ++i)
        if (!(g->apply(c.points[i]) == c.points[perm[i]])) return std::nullopt;
    return g;
}

bool inflection_check(const ProjPoint& p)
{
    if (p.dim() != 3) throw std::invalid_argument("inflection check is defined in P^2");
    const auto& x = p.coords();
    FieldElem cubes = x[0].pow(3) + x[1].pow(3) + x[2].pow(3);
    FieldElem prod = x[0] * x[1] * x[2];
    return cubes.is_zero() && prod.is_zero();
}

}  // namespace waring
