#include "qpw/cyclotomic.hpp"

#include "qpw/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qpw {

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw DivisionByZero("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + s + "'");
    }
}

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<Rat>; // low degree first

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    poly_trim(c);
    return c;
}

// a divided by b exactly (remainder must vanish for our uses of it below,
// but the quotient/remainder pair is returned so callers can check).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    poly_trim(a);
    Poly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat lead = b.back();
    while (a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        Rat f = a.back() / lead;
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        poly_trim(a); // leading term cancels, so the degree strictly drops
        if (a.empty()) break;
    }
    return {q, a};
}

} // namespace

const std::vector<Rat>& cyclotomic_poly(long n) {
    static std::map<long, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // X^n - 1 = prod_{d | n} Phi_d; divide out the proper divisors.
    std::function<const Poly&(long)> get = [&](long m) -> const Poly& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        Poly xn(m + 1, Rat(0));
        xn[0] = -1;
        xn[m] = 1;
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto [q, r] = poly_divmod(xn, get(d));
            if (!r.empty()) throw Error("Internal", "cyclotomic division not exact");
            xn = q;
        }
        return cache.emplace(m, std::move(xn)).first->second;
    };
    return get(n);
}

namespace {

// Reduce a polynomial in zeta_n modulo Phi_n to degree < phi(n).
std::vector<Rat> reduce_mod_phi(long n, Poly p) {
    const Poly& phi = cyclotomic_poly(n);
    auto [q, r] = poly_divmod(std::move(p), phi);
    (void)q;
    r.resize(phi.size() - 1, Rat(0));
    return r;
}

// Image of (m, coeffs) inside conductor n (m | n): substitute
// zeta_m = zeta_n^{n/m}.
std::vector<Rat> embed_coeffs(long m, const std::vector<Rat>& coeffs, long n) {
    long step = n / m;
    Poly p((coeffs.size() - 1) * step + 1, Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i) p[i * step] = coeffs[i];
    return reduce_mod_phi(n, std::move(p));
}

// Exact solve A x = b with A given column-wise; returns empty on failure.
std::vector<Rat> solve_columns(std::vector<std::vector<Rat>> cols,
                               std::vector<Rat> b) {
    size_t rows = b.size(), ncols = cols.size();
    // Augmented matrix, row major.
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(ncols + 1, Rat(0)));
    for (size_t j = 0; j < ncols; ++j)
        for (size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
    for (size_t i = 0; i < rows; ++i) m[i][ncols] = b[i];

    std::vector<long> pivot_col(rows, -1);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rat inv = m[row][col];
        for (size_t j = col; j <= ncols; ++j) m[row][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j <= ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col[row] = static_cast<long>(col);
        ++row;
    }
    // Inconsistent rows?
    for (size_t i = row; i < rows; ++i)
        if (m[i][ncols] != 0) return {};
    std::vector<Rat> x(ncols, Rat(0));
    for (size_t i = 0; i < row; ++i) x[pivot_col[i]] = m[i][ncols];
    return x;
}

} // namespace

CycNum CycNum::make_reduced(long n, std::vector<Rat> reduced) {
    CycNum x;
    x.conductor_ = n;
    x.coeffs_ = std::move(reduced);
    x.minimize_conductor();
    return x;
}

void CycNum::minimize_conductor() {
    for (;;) {
        if (conductor_ == 1) return;
        bool descended = false;
        std::vector<long> primes;
        long m = conductor_;
        for (long p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                primes.push_back(p);
                while (m % p == 0) m /= p;
            }
        if (m > 1) primes.push_back(m);
        for (long p : primes) {
            long sub = conductor_ / p;
            // Basis of Q(zeta_sub) embedded in Q(zeta_conductor).
            long phi_sub = euler_phi(sub);
            std::vector<std::vector<Rat>> cols;
            for (long i = 0; i < phi_sub; ++i) {
                std::vector<Rat> unit(phi_sub, Rat(0));
                unit[i] = 1;
                cols.push_back(embed_coeffs(sub, unit, conductor_));
            }
            auto sol = solve_columns(std::move(cols), coeffs_);
            if (!sol.empty() || coeffs_ == std::vector<Rat>(coeffs_.size(), Rat(0))) {
                if (sol.empty()) sol.assign(phi_sub, Rat(0));
                conductor_ = sub;
                coeffs_ = std::move(sol);
                descended = true;
                break;
            }
        }
        if (!descended) return;
    }
}

CycNum CycNum::root_of_unity(long n, long k) {
    if (n < 1) throw UnsupportedParam("root_of_unity needs N >= 1");
    k %= n;
    if (k < 0) k += n;
    long g = std::gcd(n, k == 0 ? n : k);
    long order = (k == 0) ? 1 : n / g;
    long kk = (k == 0) ? 0 : (k / g) % order;
    Poly p(kk + 1, Rat(0));
    p[kk] = 1;
    return make_reduced(order, reduce_mod_phi(order, std::move(p)));
}

CycNum CycNum::from_coeffs(long n, std::vector<Rat> coeffs) {
    if (n < 1) throw UnsupportedParam("conductor must be >= 1");
    return make_reduced(n, reduce_mod_phi(n, std::move(coeffs)));
}

bool CycNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return c == 0; });
}

const Rat& CycNum::rational() const {
    if (!is_rational()) throw Error("Internal", "CycNum is not rational: " + str());
    return coeffs_[0];
}

bool CycNum::is_integer() const {
    return is_rational() && denominator(coeffs_[0]) == 1;
}

CycNum CycNum::operator+(const CycNum& o) const {
    long n = std::lcm(conductor_, o.conductor_);
    auto a = embed_coeffs(conductor_, coeffs_, n);
    auto b = embed_coeffs(o.conductor_, o.coeffs_, n);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return make_reduced(n, std::move(a));
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
    CycNum x = *this;
    for (auto& c : x.coeffs_) c = -c;
    return x;
}

CycNum CycNum::operator*(const CycNum& o) const {
    long n = std::lcm(conductor_, o.conductor_);
    auto a = embed_coeffs(conductor_, coeffs_, n);
    auto b = embed_coeffs(o.conductor_, o.coeffs_, n);
    return make_reduced(n, reduce_mod_phi(n, poly_mul(a, b)));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) return CycNum(Rat(1) / coeffs_[0]);
    // Extended gcd of f and Phi_N in Q[X]; Phi_N is irreducible, so the gcd
    // is a nonzero constant and s*f = gcd (mod Phi_N).
    Poly r0 = cyclotomic_poly(conductor_);
    Poly r1 = coeffs_;
    poly_trim(r1);
    Poly s0{}, s1{Rat(1)};
    while (true) {
        poly_trim(r1);
        if (r1.empty()) throw Error("Internal", "gcd hit zero; Phi_N not coprime?");
        if (r1.size() == 1) break;
        auto [q, r] = poly_divmod(r0, r1);
        Poly qs1 = poly_mul(q, s1);
        Poly s2 = s0;
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rat(0));
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rat c = r1[0];
    for (auto& v : s1) v /= c;
    return make_reduced(conductor_, reduce_mod_phi(conductor_, std::move(s1)));
}

CycNum CycNum::conj() const {
    if (is_rational()) return *this;
    long n = conductor_;
    Poly p;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        long e = (n - static_cast<long>(i)) % n;
        if (p.size() <= static_cast<size_t>(e)) p.resize(e + 1, Rat(0));
        p[e] += coeffs_[i];
    }
    return make_reduced(n, reduce_mod_phi(n, std::move(p)));
}

bool CycNum::operator<(const CycNum& o) const {
    if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
    return coeffs_ < o.coeffs_;
}

std::string CycNum::str() const {
    if (is_rational()) return to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rat c = coeffs_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << to_string(c);
        } else {
            if (c != 1) os << to_string(c) << "*";
            os << "z" << conductor_;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.str(); }

} // namespace qpw
