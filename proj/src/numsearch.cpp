#include "waring/numsearch.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace waring {

void SearchOptions::validate() const
{
    if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    if (max_iters < 0) throw std::invalid_argument("max_iters must be nonnegative");
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw std::invalid_argument("tolerance must be positive");
    if (!(initial_step > 0.0)) throw std::invalid_argument("initial_step must be positive");
    if (!(shrink > 0.0 && shrink < 1.0)) throw std::invalid_argument("shrink must lie in (0, 1)");
    if (!(armijo_slope > 0.0 && armijo_slope < 1.0)) throw std::invalid_argument("armijo_slope must lie in (0, 1)");
    if (!(init_scale > 0.0)) throw std::invalid_argument("init_scale must be positive");
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
}

namespace {

struct TargetTerm {
    int a, b, c;      // sorted variable indices
    double mult;      // number of distinct orderings
    double target;    // 6 * coefficient of tr(X^3)
};

// Every degree-3 monomial in n^2 variables with its target coefficient.
const std::vector<TargetTerm>& target_terms(int n)
{
    static std::mutex mu;
    static std::map<int, std::vector<TargetTerm>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Field f = Field::with_tau(verified_tau());
    CubicForm trace = trace_cubic_form(f, n);
    const int nv = n * n;
    std::vector<TargetTerm> terms;
    for (int a = 0; a < nv; ++a)
        for (int b = a; b < nv; ++b)
            for (int c = b; c < nv; ++c) {
                double mult = (a == b && b == c) ? 1.0 : (a == b || b == c) ? 3.0 : 6.0;
                double t = 6.0 * trace.coeff(Monomial{{a, b, c}}).coeff(0).get_d();
                terms.push_back({a, b, c, mult, t});
            }
    return cache.emplace(n, std::move(terms)).first->second;
}

void check_finite(const NumericCandidate& c)
{
    if (c.n < 1 || c.r < 0) throw std::invalid_argument("candidate has invalid shape");
    if (c.entries.size() != static_cast<size_t>(c.r) * c.n * c.n)
        throw std::invalid_argument("candidate entry count does not match its shape");
    for (const auto& z : c.entries)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::domain_error("non-finite candidate entry");
}

// Linear-form coefficients: tr(mX) has coefficient m_pq on the variable x_qp.
std::vector<cplx> linear_forms(const NumericCandidate& c)
{
    const int n = c.n, nv = n * n;
    std::vector<cplx> lin(static_cast<size_t>(c.r) * nv);
    for (int i = 0; i < c.r; ++i)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) lin[static_cast<size_t>(i) * nv + q * n + p] = c.at(i, p, q);
    return lin;
}

std::vector<cplx> residuals(const NumericCandidate& c, const std::vector<cplx>& lin)
{
    const auto& terms = target_terms(c.n);
    const int nv = c.n * c.n;
    std::vector<cplx> res(terms.size());
    for (size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        cplx s = 0.0;
        for (int i = 0; i < c.r; ++i) {
            const cplx* l = lin.data() + static_cast<size_t>(i) * nv;
            s += l[t.a] * l[t.b] * l[t.c];
        }
        res[k] = t.mult * s - t.target;
    }
    return res;
}

double loss_unchecked(const NumericCandidate& c)
{
    double total = 0.0;
    for (const auto& r : residuals(c, linear_forms(c))) total += std::norm(r);
    return total;
}

std::vector<cplx> gradient_unchecked(const NumericCandidate& c)
{
    const auto& terms = target_terms(c.n);
    const int n = c.n, nv = n * n;
    auto lin = linear_forms(c);
    auto res = residuals(c, lin);
    std::vector<cplx> glin(lin.size());
    for (size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        if (res[k] == 0.0) continue;
        const cplx w = 2.0 * t.mult * res[k];
        for (int i = 0; i < c.r; ++i) {
            const cplx* l = lin.data() + static_cast<size_t>(i) * nv;
            cplx* g = glin.data() + static_cast<size_t>(i) * nv;
            g[t.a] += w * std::conj(l[t.b] * l[t.c]);
            g[t.b] += w * std::conj(l[t.a] * l[t.c]);
            g[t.c] += w * std::conj(l[t.a] * l[t.b]);
        }
    }
    std::vector<cplx> grad(c.entries.size());
    for (int i = 0; i < c.r; ++i)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                grad[(static_cast<size_t>(i) * n + p) * n + q] = glin[static_cast<size_t>(i) * nv + q * n + p];
    return grad;
}

double dot(const std::vector<cplx>& x, const std::vector<cplx>& y)
{
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    return s;
}

SearchResult levenberg_marquardt(NumericCandidate x, const SearchOptions& opts);

SearchResult descend(NumericCandidate x, const SearchOptions& opts)
{
    if (opts.step_rule == StepRule::LevenbergMarquardt) return levenberg_marquardt(std::move(x), opts);
    SearchResult out;
    double f = loss_unchecked(x);
    std::vector<cplx> g = gradient_unchecked(x);
    std::vector<cplx> prev_x, prev_g;
    long it = 0;
    double last_step = opts.initial_step;
    NumericCandidate trial = x;

    while (it < opts.max_iters && f >= opts.tolerance) {
        double gg = dot(g, g);
        if (gg == 0.0) break;

        double step = opts.initial_step;
        if (opts.step_rule == StepRule::BarzilaiBorwein && !prev_x.empty()) {
            std::vector<cplx> dx(x.entries.size()), dg(g.size());
            for (size_t i = 0; i < dx.size(); ++i) {
                dx[i] = x.entries[i] - prev_x[i];
                dg[i] = g[i] - prev_g[i];
            }
            double sy = dot(dx, dg);
            step = sy > 0.0 ? dot(dx, dx) / sy : 2.0 * last_step;
        }

        double ftrial = 0.0;
        bool accepted = false;
        while (step > 1e-300) {
            for (size_t i = 0; i < x.entries.size(); ++i) trial.entries[i] = x.entries[i] - step * g[i];
            ftrial = loss_unchecked(trial);
            if (std::isfinite(ftrial) && ftrial <= f - opts.armijo_slope * step * gg) {
                accepted = true;
                break;
            }
            step *= opts.shrink;
        }
        if (!accepted) break;

        prev_x = x.entries;
        prev_g = g;
        std::swap(x.entries, trial.entries);
        f = ftrial;
        g = gradient_unchecked(x);
        last_step = step;
        ++it;
    }

    out.loss = f;
    out.iterations = it;
    out.converged = f < opts.tolerance;
    out.best = std::move(x);
    return out;
}

// Residual Jacobian with respect to the candidate entries. The residuals are
// holomorphic, so this is the whole derivative.
Eigen::MatrixXcd jacobian(const NumericCandidate& c, const std::vector<cplx>& lin)
{
    const auto& terms = target_terms(c.n);
    const int n = c.n, nv = n * n;
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(terms.size()),
                                                static_cast<Eigen::Index>(c.entries.size()));
    for (size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        for (int i = 0; i < c.r; ++i) {
            const cplx* l = lin.data() + static_cast<size_t>(i) * nv;
            auto col = [&](int v) { return static_cast<Eigen::Index>(i * nv + (v % n) * n + v / n); };
            J(k, col(t.a)) += t.mult * l[t.b] * l[t.c];
            J(k, col(t.b)) += t.mult * l[t.a] * l[t.c];
            J(k, col(t.c)) += t.mult * l[t.a] * l[t.b];
        }
    }
    return J;
}

SearchResult levenberg_marquardt(NumericCandidate x, const SearchOptions& opts)
{
    auto lin = linear_forms(x);
    auto res = residuals(x, lin);
    double f = 0.0;
    for (const auto& r : res) f += std::norm(r);

    const auto P = static_cast<Eigen::Index>(x.entries.size());
    double lambda = -1.0;
    long it = 0;
    NumericCandidate trial = x;
    while (it < opts.max_iters && f >= opts.tolerance) {
        Eigen::MatrixXcd J = jacobian(x, lin);
        Eigen::Map<const Eigen::VectorXcd> rv(res.data(), static_cast<Eigen::Index>(res.size()));
        Eigen::MatrixXcd A = J.adjoint() * J;
        Eigen::VectorXcd g = J.adjoint() * rv;
        if (lambda < 0.0) lambda = 1e-3 * A.diagonal().real().maxCoeff();

        bool accepted = false;
        while (!accepted && lambda < 1e30) {
            Eigen::MatrixXcd damped = A;
            damped.diagonal().array() += lambda;
            Eigen::VectorXcd delta = damped.ldlt().solve(-g);
            for (Eigen::Index i = 0; i < P; ++i) trial.entries[i] = x.entries[i] + delta[i];
            double ftrial = loss_unchecked(trial);
            if (std::isfinite(ftrial) && ftrial < f) {
                std::swap(x.entries, trial.entries);
                f = ftrial;
                lambda = std::max(lambda / 3.0, 1e-300);
                accepted = true;
            } else {
                lambda *= 2.0;
            }
        }
        if (!accepted) break;
        lin = linear_forms(x);
        res = residuals(x, lin);
        ++it;
    }

    SearchResult out;
    out.loss = f;
    out.iterations = it;
    out.converged = f < opts.tolerance;
    out.best = std::move(x);
    return out;
}

NumericCandidate random_candidate(int n, int r, std::uint64_t seed, double scale)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, scale);
    NumericCandidate c(n, r);
    for (auto& z : c.entries) {
        double re = normal(rng);
        double im = normal(rng);
        z = cplx(re, im);
    }
    return c;
}

}  // namespace

double loss(const NumericCandidate& c)
{
    check_finite(c);
    return loss_unchecked(c);
}

std::vector<cplx> gradient(const NumericCandidate& c)
{
    check_finite(c);
    return gradient_unchecked(c);
}

SearchResult search(int n, int r, std::uint64_t seed, const SearchOptions& opts)
{
    if (n < 1 || r < 1) throw std::invalid_argument("search needs n >= 1 and r >= 1");
    opts.validate();

    std::vector<SearchResult> results(opts.restarts);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int k = next++; k < opts.restarts; k = next++) {
            results[k] = descend(random_candidate(n, r, seed + static_cast<std::uint64_t>(k), opts.init_scale), opts);
            results[k].seed = seed + static_cast<std::uint64_t>(k);
        }
    };
    const int workers = std::min(opts.jobs, opts.restarts);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    size_t best = 0;
    for (size_t k = 1; k < results.size(); ++k)
        if (results[k].loss < results[best].loss) best = k;
    return results[best];
}

SearchResult polish(const NumericCandidate& c, const SearchOptions& opts)
{
    check_finite(c);
    opts.validate();
    return descend(c, opts);
}

NumericCandidate embed_decomposition(const WaringDecomposition& d)
{
    const double scale = std::cbrt(6.0 * d.weight.get_d());
    NumericCandidate c(d.n, static_cast<int>(d.matrices.size()));
    for (int i = 0; i < c.r; ++i)
        for (int p = 0; p < d.n; ++p)
            for (int q = 0; q < d.n; ++q) c.at(i, p, q) = scale * d.matrices[i](p, q).embed_complex();
    return c;
}

NumericCandidate perturb(const NumericCandidate& c, double scale, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, scale);
    NumericCandidate out = c;
    for (auto& z : out.entries) {
        double re = normal(rng);
        double im = normal(rng);
        z += cplx(re, im);
    }
    return out;
}

NumericCandidate conjugate_by(const NumericCandidate& c, const SquareMatrix& g)
{
    if (g.n() != c.n) throw std::invalid_argument("dimension mismatch in conjugate_by");
    const SquareMatrix ginv = inverse(g);
    const int n = c.n;
    std::vector<cplx> ge(n * n), gi(n * n);
    for (int i = 0; i < n * n; ++i) {
        ge[i] = g.entries()[i].embed_complex();
        gi[i] = ginv.entries()[i].embed_complex();
    }
    NumericCandidate out = c;
    std::vector<cplx> tmp(n * n);
    for (int k = 0; k < c.r; ++k) {
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                cplx s = 0.0;
                for (int u = 0; u < n; ++u) s += ge[p * n + u] * c.at(k, u, q);
                tmp[p * n + q] = s;
            }
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                cplx s = 0.0;
                for (int u = 0; u < n; ++u) s += tmp[p * n + u] * gi[u * n + q];
                out.at(k, p, q) = s;
            }
    }
    return out;
}

}  // namespace waring
