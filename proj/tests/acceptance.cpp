// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "waring/hesse.hpp"
#include "waring/numsearch.hpp"
#include "waring/symmetry.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace waring;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int k, const std::string& name, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << k << ". " << name << " (" << seconds_since(t0) << " s)"
              << o.detail.str() << std::endl;
}

SquareMatrix E(Field f, int p, int q) { return SquareMatrix::unit(f, 3, p - 1, q - 1); }

std::set<AffineMap> all_affine_maps(bool special_only)
{
    std::set<AffineMap> out;
    for (int code = 0; code < 81; ++code) {
        AffineMap a;
        a.linear = {{{code % 3, code / 3 % 3}, {code / 9 % 3, code / 27 % 3}}};
        if (a.det() == 0 || (special_only && a.det() != 1)) continue;
        for (int t = 0; t < 9; ++t) {
            a.translation = {t / 3, t % 3};
            out.insert(a);
        }
    }
    return out;
}

}  // namespace

int main()
{
    const WaringDecomposition dec = rank18_decomposition(verified_tau());
    const Field f = dec.field();

    criterion(1, "exact verification of the rank-18 identity and the tau finding", [&](Outcome& o) {
        auto t0 = Clock::now();
        auto res = resolve_tau(rank18_decomposition(printed_tau()), {printed_tau(), verified_tau()});
        const auto& exact = res.reports[1];
        CubicForm target = trace_cubic_form(f, 3);
        // Compare every one of the 165 monomial slots explicitly.
        CubicForm sum(f, 3);
        for (const auto& m : dec.matrices) sum = scale_add(sum, f.one(), pairing_cube(m));
        int slots = 0, mismatches = 0;
        const FieldElem w = f.from_rational(dec.weight);
        for (int a = 0; a < 9; ++a)
            for (int b = a; b < 9; ++b)
                for (int c = b; c < 9; ++c) {
                    Monomial mono{{a, b, c}};
                    ++slots;
                    if (!(w * sum.coeff(mono) == target.coeff(mono))) ++mismatches;
                }
        auto quarter = trace_cube_multiple(res.reports[0].difference);
        double secs = seconds_since(t0);
        o.detail << ": tau=-2 " << (exact.exact_match ? "exact" : "MISMATCH") << " on " << slots << " slots, "
                 << target.size() << " nonzero in the target (stated as 56); tau=-1/2 difference "
                 << (quarter ? "(" + quarter->to_string() + ")(tr X)^3" : "not a multiple of (tr X)^3");
        o.require(exact.exact_match && res.accepted && *res.accepted == verified_tau(), "tau=-2 exact match");
        o.require(slots == 165 && mismatches == 0, "all 165 coefficients equal");
        o.require(!res.reports[0].exact_match, "tau=-1/2 mismatch");
        o.require(quarter && *quarter == Field::with_tau(printed_tau()).from_rational(Rational(1, 4)),
                  "difference (1/4)(tr X)^3");
        o.require(secs < 1.0, "runtime < 1 s");
    });

    criterion(2, "spot evaluations at six probe matrices", [&](Outcome& o) {
        SquareMatrix d110(f, 3), d1m10(f, 3);
        d110(0, 0) = d110(1, 1) = f.one();
        d1m10(0, 0) = f.one();
        d1m10(1, 1) = -f.one();
        const std::vector<std::pair<SquareMatrix, long>> probes = {
            {SquareMatrix::identity(f, 3), 18}, {E(f, 1, 1), 6}, {d110, 12}, {d1m10, 0}, {E(f, 1, 2), 0},
            {E(f, 1, 2) + E(f, 2, 3) + E(f, 3, 1), 18}};
        o.detail << ":";
        for (const auto& [X, expected] : probes) {
            FieldElem lhs = (X * X * X).trace().scaled(6);
            FieldElem rhs = f.zero();
            for (const auto& m : dec.matrices) rhs += (m * X).trace().pow(3);
            o.detail << " " << rhs.to_string();
            o.require(lhs == f.from_int(expected) && rhs == lhs, "probe value " + std::to_string(expected));
        }
    });

    std::vector<SymOp> gens = rho_generators(f);
    GroupReport g216, g432, g864;
    criterion(3, "group orders 216 / 432 / 864", [&](Outcome& o) {
        auto t0 = Clock::now();
        g216 = closure(gens, dec);
        auto with_t = gens;
        with_t.push_back(transpose_op(f));
        g432 = closure(with_t, dec);
        with_t.push_back(conjugation_op(f));
        g864 = closure(with_t, dec);
        double secs = seconds_since(t0);
        o.detail << ": " << g216.order() << ", " << g432.order() << ", " << g864.order();
        o.require(g216.order() == 216 && g432.order() == 432 && g864.order() == 864, "orders");
        o.require(secs < 30.0, "runtime < 30 s");
    });

    criterion(4, "closure elements stabilize tr(X^3) and keep the first block", [&](Outcome& o) {
        size_t stab = 0, kept = 0, rank_kept = 0;
        // The 864-element group contains the 216- and 432-element ones.
        for (const auto* grp : {&g864})
            for (const auto& e : grp->elements) {
                stab += stabilizes_sM(e.op) ? 1 : 0;
                bool block = true;
                for (int i = 0; i < 9; ++i) block = block && e.induced.perm[i] < 9;
                kept += block ? 1 : 0;
                bool ranks = true;
                for (int i = 0; i < 18; ++i)
                    ranks = ranks && rank(apply_op(e.op, dec.matrices[i])) == rank(dec.matrices[i]);
                rank_kept += ranks ? 1 : 0;
            }
        const size_t total = g864.order();
        o.detail << ": " << stab << "/" << total << " stabilize, " << kept << "/" << total << " keep block one, "
                 << rank_kept << "/" << total << " keep ranks";
        o.require(total == 864 && stab == total && kept == total && rank_kept == total, "all elements");
    });

    criterion(5, "first-block label action certification", [&](Outcome& o) {
        std::set<AffineMap> img432, img216;
        bool affine = true;
        for (const auto& e : g432.elements) {
            auto la = label_action(e.induced);
            affine = affine && la.blocks[0].has_value();
            if (la.blocks[0]) img432.insert(*la.blocks[0]);
        }
        for (const auto& e : g216.elements) {
            auto la = label_action(e.induced);
            if (la.blocks[0]) img216.insert(*la.blocks[0]);
        }
        bool translations = true;
        for (int k = 0; k < 2; ++k) {
            auto ip = std::get<InducedPermutation>(induced_permutation(gens[k], dec));
            auto la = label_action(ip);
            const AffineMap expected{{{{1, 0}, {0, 1}}}, {k == 0 ? 0 : 1, k == 0 ? 1 : 0}};
            translations = translations && la.blocks[0] && *la.blocks[0] == expected;
            for (int i = 9; i < 18; ++i) translations = translations && ip.perm[i] == i;
        }
        o.detail << ": 432-group image " << img432.size() << " maps, flag-free image " << img216.size()
                 << " maps; e_r, e_d " << (translations ? "translate block one and fix block two" : "misbehave");
        o.require(affine && img432.size() == 432 && img432 == all_affine_maps(false), "image is AGL(2,3)");
        o.require(img216.size() == 216 && img216 == all_affine_maps(true), "flag-free image is ASL(2,3)");
        o.require(translations, "translations");
    });

    criterion(6, "Hesse configuration suite", [&](Outcome& o) {
        auto t0 = Clock::now();
        auto pts = first_block_points(dec);
        Configuration c = build_configuration(pts);
        auto affine = affine_plane_lines();
        bool lines_match = std::set<Line>(c.lines.begin(), c.lines.end()) == std::set<Line>(affine.begin(), affine.end());
        auto autos = incidence_automorphisms(c);
        size_t realizable = 0;
        for (const auto& a : autos) realizable += pgl_realizable(a, c) ? 1 : 0;

        PointPermutation swap(9);
        for (int k = 0; k < 9; ++k) {
            auto lab = telephone_label(k);
            swap[k] = telephone_index({lab[1], lab[0]});
        }
        bool swap_is_auto = std::find(autos.begin(), autos.end(), swap) != autos.end();
        bool swap_realizable = pgl_realizable(swap, c).has_value();

        ProjectiveMatrix g = frame_transport({pts[0], pts[1], pts[6], pts[7]}, {pts[0], pts[3], pts[2], pts[5]});
        bool displayed = proportional(g.rep(), counterexample_matrix(f));
        ProjPoint image3 = g.apply(pts[2]);
        bool off = std::find(pts.begin(), pts.end(), image3) == pts.end();

        int inflections = 0;
        for (const auto& p : pts) inflections += inflection_check(p) ? 1 : 0;
        double secs = seconds_since(t0);

        o.detail << ": " << c.lines.size() << " lines" << (lines_match ? " = affine lines" : "") << ", "
                 << autos.size() << " automorphisms, " << realizable << " realizable, swap "
                 << (swap_realizable ? "realizable" : "not realizable") << ", transport "
                 << (displayed ? "matches" : "differs from") << " the displayed matrix, point 3 "
                 << (off ? "leaves" : "stays on") << " the configuration, " << inflections << "/9 inflections";
        o.require(c.lines.size() == 12 && lines_match, "12 affine lines");
        o.require(autos.size() == 432, "432 automorphisms");
        o.require(realizable == 216, "216 realizable");
        o.require(swap_is_auto && !swap_realizable, "swap");
        o.require(displayed && off, "frame transport");
        o.require(inflections == 9, "inflections");
        o.require(secs < 30.0, "runtime < 30 s");
    });

    criterion(7, "first-block matrices are 2 v v^+ / (v^+ v)", [&](Outcome& o) {
        int good = 0;
        for (int i = 0; i < 9; ++i) {
            const auto& m = dec.matrices[i];
            auto v = projection_factor(m);
            if (!v) continue;
            // Independent rebuild from the printed first nonzero column.
            int col = 0;
            while (m(0, col).is_zero() && m(1, col).is_zero() && m(2, col).is_zero()) ++col;
            std::vector<FieldElem> printed{m(0, col), m(1, col), m(2, col)};
            FieldElem s = f.from_int(2) / hermitian_dot(printed, printed);
            SquareMatrix p(f, 3);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) p(r, c) = s * printed[r] * printed[c].conjugate();
            good += (*v == printed && p == m) ? 1 : 0;
        }
        o.detail << ": " << good << "/9";
        o.require(good == 9, "all nine");
    });

    criterion(8, "Galois conjugation symmetry", [&](Outcome& o) {
        auto r = induced_permutation(conjugation_op(f), dec);
        bool permutes = std::holds_alternative<InducedPermutation>(r);
        bool swap_both = false;
        if (permutes) {
            auto la = label_action(std::get<InducedPermutation>(r));
            const AffineMap sw{{{{0, 1}, {1, 0}}}, {0, 0}};
            swap_both = la.blocks[0] && la.blocks[1] && *la.blocks[0] == sw && *la.blocks[1] == sw;
        }
        // Automorphisms of Q(zeta) over Q send zeta to a root of x^2 + x + 1; those roots
        // are zeta and zeta^2, giving the identity and conjugation.
        const FieldElem z = f.zeta(), one = f.one();
        int roots = 0;
        for (const FieldElem& cand : {z, z * z})
            if ((cand * cand + cand + one).is_zero()) ++roots;
        bool conj_is_zeta2 = z.conjugate() == z * z && z.conjugate().conjugate() == z;
        std::set<std::string> tested;
        for (const auto& e : g864.elements) tested.insert(e.op.conjugate ? "conj" : "id");

        // Kernel of the first-block label action in the 864-group.
        size_t kernel = 0;
        bool kernel_ok = true;
        for (const auto& e : g864.elements) {
            auto la = label_action(e.induced);
            if (la.blocks[0] && *la.blocks[0] == AffineMap{{{{1, 0}, {0, 1}}}, {0, 0}}) {
                ++kernel;
                kernel_ok = kernel_ok && e.op.g == ProjectiveMatrix::identity(f, 3) && e.op.transpose == e.op.conjugate;
            }
        }
        o.detail << ": conjugation " << (permutes ? "permutes" : "does not permute") << " the 18 tensors, label action "
                 << (swap_both ? "is the swap on both blocks" : "is not the swap") << ", coefficient automorphisms {id, conj} ("
                 << roots << " roots of x^2+x+1), label kernel order " << kernel;
        o.require(permutes && swap_both, "conjugation symmetry");
        o.require(roots == 2 && conj_is_zeta2 && tested.size() == 2, "only id and conj");
        o.require(kernel == 2 && kernel_ok, "kernel {id, transpose o conj}");
    });

    criterion(9, "numerical suite", [&](Outcome& o) {
        auto t0 = Clock::now();
        NumericCandidate exact = embed_decomposition(dec);
        double exact_loss = loss(exact);

        double worst_fd = 0.0;
        std::mt19937_64 rng(2024);
        std::normal_distribution<double> normal(0.0, 0.7);
        const double h = 1e-6;
        for (int trial = 0; trial < 5; ++trial) {
            NumericCandidate c(2, 3);
            for (auto& z : c.entries) {
                double re = normal(rng);
                z = cplx(re, normal(rng));
            }
            auto g = gradient(c);
            for (size_t k = 0; k < c.entries.size(); ++k)
                for (cplx dir : {cplx(h, 0), cplx(0, h)}) {
                    NumericCandidate p = c, m = c;
                    p.entries[k] += dir;
                    m.entries[k] -= dir;
                    double fd = (loss(p) - loss(m)) / (2 * h);
                    double an = dir.real() != 0.0 ? g[k].real() : g[k].imag();
                    worst_fd = std::max(worst_fd, std::abs(an - fd) / std::max(1.0, std::abs(fd)));
                }
        }

        SearchOptions lm;
        lm.step_rule = StepRule::LevenbergMarquardt;
        lm.tolerance = 1e-18;
        lm.max_iters = 500;
        double worst_polish = 0.0;
        for (std::uint64_t seed : {1u, 2u, 3u, 7u})
            worst_polish = std::max(worst_polish, polish(perturb(exact, 1e-3, seed), lm).loss);

        SearchOptions det;
        det.restarts = 4;
        det.max_iters = 500;
        auto a = search(2, 3, 99, det);
        auto b = search(2, 3, 99, det);
        det.jobs = 4;
        auto c = search(2, 3, 99, det);
        bool deterministic = a.best.entries == b.best.entries && a.best.entries == c.best.entries &&
                             a.loss == c.loss && a.seed == c.seed;
        double secs = seconds_since(t0);

        o.detail << ": exact loss " << exact_loss << ", worst gradient error " << worst_fd << ", worst polished loss "
                 << worst_polish << ", " << (deterministic ? "deterministic" : "NOT deterministic");
        o.require(exact_loss < 1e-16, "embedded exact loss");
        o.require(worst_fd < 1e-5, "gradient vs central differences");
        o.require(worst_polish < 1e-16, "perturbed-exact polishing");
        o.require(deterministic, "determinism");
        o.require(secs < 120.0, "runtime < 2 min");
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
