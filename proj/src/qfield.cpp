#include "waring/qfield.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace waring {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("malformed rational: " + s);
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + s);
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class p(num, 10), q(den, 10);
    if (q == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_perfect_cube(const mpz_class& v)
{
    mpz_class root;
    return mpz_root(root.get_mpz_t(), v.get_mpz_t(), 3) != 0;
}

// (u0 + u1 a + u2 a^2)(w0 + w1 a + w2 a^2) mod a^3 - tau, accumulated into out.
void mul_cubic_ext(const Rational* u, const Rational* w, const Rational& tau, Rational* out, int sign)
{
    Rational t;
    for (int i = 0; i < 3; ++i) {
        if (sgn(u[i]) == 0) continue;
        for (int j = 0; j < 3; ++j) {
            if (sgn(w[j]) == 0) continue;
            t = u[i] * w[j];
            int k = i + j;
            if (k >= 3) {
                t *= tau;
                k -= 3;
            }
            if (sign > 0)
                out[k] += t;
            else
                out[k] -= t;
        }
    }
}

}  // namespace

Field Field::with_tau(const Rational& tau)
{
    static std::mutex mu;
    static std::deque<detail::FieldConfig> configs;

    Rational canon = tau;
    canon.canonicalize();
    if (is_perfect_cube(canon.get_num()) && is_perfect_cube(canon.get_den()))
        throw std::invalid_argument("tau must not be a rational cube: " + canon.get_str());

    std::lock_guard<std::mutex> lock(mu);
    for (const auto& c : configs)
        if (c.tau == canon) return Field(&c);
    configs.push_back(detail::FieldConfig{canon});
    return Field(&configs.back());
}

FieldElem Field::zero() const { return FieldElem(cfg_); }

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::zeta() const
{
    FieldElem e(cfg_);
    e.c_[3] = 1;
    return e;
}

FieldElem Field::cube_root() const
{
    FieldElem e(cfg_);
    e.c_[1] = 1;
    return e;
}

FieldElem Field::from_rational(const Rational& q) const
{
    FieldElem e(cfg_);
    e.c_[0] = q;
    return e;
}

FieldElem Field::from_int(long v) const { return from_rational(Rational(v)); }

FieldElem Field::from_coeffs(const std::array<Rational, 6>& coeffs) const
{
    FieldElem e(cfg_);
    e.c_ = coeffs;
    for (auto& c : e.c_) c.canonicalize();
    return e;
}

void FieldElem::check_same(const FieldElem& y) const
{
    if (cfg_ != y.cfg_) throw std::logic_error("mixing elements of different tau-configurations");
}

bool FieldElem::is_zero() const
{
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

bool FieldElem::is_one() const
{
    if (c_[0] != 1) return false;
    for (int i = 1; i < kDegree; ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool FieldElem::in_cyclotomic() const
{
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[4]) == 0 && sgn(c_[5]) == 0;
}

FieldElem& FieldElem::operator+=(const FieldElem& y)
{
    check_same(y);
    for (int i = 0; i < kDegree; ++i) c_[i] += y.c_[i];
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& y)
{
    check_same(y);
    for (int i = 0; i < kDegree; ++i) c_[i] -= y.c_[i];
    return *this;
}

FieldElem operator*(const FieldElem& x, const FieldElem& y)
{
    // (u1 + zeta v1)(u2 + zeta v2) = u1 u2 - v1 v2 + zeta (u1 v2 + v1 u2 - v1 v2)
    FieldElem out(x.cfg_);
    out.add_product(x, y);
    return out;
}

void FieldElem::add_product(const FieldElem& x, const FieldElem& y)
{
    check_same(x);
    x.check_same(y);
    const Rational& tau = cfg_->tau;
    const Rational* u1 = x.c_.data();
    const Rational* v1 = x.c_.data() + 3;
    const Rational* u2 = y.c_.data();
    const Rational* v2 = y.c_.data() + 3;
    Rational* ou = c_.data();
    Rational* ov = c_.data() + 3;
    mul_cubic_ext(u1, u2, tau, ou, +1);
    mul_cubic_ext(v1, v2, tau, ou, -1);
    mul_cubic_ext(u1, v2, tau, ov, +1);
    mul_cubic_ext(v1, u2, tau, ov, +1);
    mul_cubic_ext(v1, v2, tau, ov, -1);
}

FieldElem& FieldElem::operator*=(const FieldElem& y)
{
    *this = *this * y;
    return *this;
}

FieldElem FieldElem::operator-() const
{
    FieldElem out(cfg_);
    for (int i = 0; i < kDegree; ++i) out.c_[i] = -c_[i];
    return out;
}

FieldElem FieldElem::scaled(const Rational& q) const
{
    FieldElem out(cfg_);
    for (int i = 0; i < kDegree; ++i) out.c_[i] = c_[i] * q;
    return out;
}

FieldElem FieldElem::inv() const
{
    if (is_zero()) throw std::domain_error("division by zero in K");
    // Column k of the multiplication matrix is x * b_k for the basis element b_k.
    std::vector<std::vector<Rational>> m(kDegree, std::vector<Rational>(kDegree + 1));
    Field f(cfg_);
    for (int k = 0; k < kDegree; ++k) {
        std::array<Rational, 6> basis;
        basis[k] = 1;
        FieldElem prod = *this * f.from_coeffs(basis);
        for (int r = 0; r < kDegree; ++r) m[r][k] = prod.c_[r];
    }
    m[0][kDegree] = 1;

    for (int col = 0; col < kDegree; ++col) {
        int piv = col;
        while (piv < kDegree && sgn(m[piv][col]) == 0) ++piv;
        if (piv == kDegree) throw std::domain_error("singular multiplication matrix (tau is a cube?)");
        std::swap(m[piv], m[col]);
        Rational p = m[col][col];
        for (int j = col; j <= kDegree; ++j) m[col][j] /= p;
        for (int r = 0; r < kDegree; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Rational factor = m[r][col];
            for (int j = col; j <= kDegree; ++j) m[r][j] -= factor * m[col][j];
        }
    }
    FieldElem out(cfg_);
    for (int r = 0; r < kDegree; ++r) out.c_[r] = m[r][kDegree];
    return out;
}

FieldElem FieldElem::conjugate() const
{
    // u + v zeta  ->  u + v zeta^2 = (u - v) - v zeta
    FieldElem out(cfg_);
    for (int i = 0; i < 3; ++i) {
        out.c_[i] = c_[i] - c_[i + 3];
        out.c_[i + 3] = -c_[i + 3];
    }
    return out;
}

FieldElem FieldElem::pow(unsigned k) const
{
    FieldElem result = Field(cfg_).one();
    FieldElem base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

std::complex<double> FieldElem::embed_complex() const
{
    const double a = std::cbrt(cfg_->tau.get_d());
    const std::complex<double> zeta(-0.5, std::sqrt(3.0) / 2.0);
    std::complex<double> u = c_[0].get_d() + a * (c_[1].get_d() + a * c_[2].get_d());
    std::complex<double> v = c_[3].get_d() + a * (c_[4].get_d() + a * c_[5].get_d());
    return u + zeta * v;
}

std::string FieldElem::to_string() const
{
    static const char* names[kDegree] = {"", "a", "a^2", "zeta", "zeta*a", "zeta*a^2"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kDegree; ++i) {
        if (sgn(c_[i]) == 0) continue;
        Rational mag = abs(c_[i]);
        if (first)
            os << (sgn(c_[i]) < 0 ? "-" : "");
        else
            os << (sgn(c_[i]) < 0 ? " - " : " + ");
        if (i == 0)
            os << mag.get_str();
        else if (mag == 1)
            os << names[i];
        else
            os << mag.get_str() << "*" << names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

bool operator==(const FieldElem& x, const FieldElem& y)
{
    x.check_same(y);
    return x.c_ == y.c_;
}

}  // namespace waring
