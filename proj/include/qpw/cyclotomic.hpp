#pragma once

#include "qpw/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace qpw {

// Exact element of a cyclotomic field Q(zeta_N), stored in the power basis
// 1, z, ..., z^{phi(N)-1} modulo the N-th cyclotomic polynomial. Values are
// kept at the smallest conductor that contains them, so operator== is
// componentwise.
class CycNum {
public:
    CycNum() : conductor_(1), coeffs_(1, Rat(0)) {}
    CycNum(long v) : conductor_(1), coeffs_(1, Rat(v)) {}
    explicit CycNum(const Rat& v) : conductor_(1), coeffs_(1, v) {}

    // zeta_N^k, canonicalized (e.g. root_of_unity(6,3) == -1 at conductor 1).
    static CycNum root_of_unity(long n, long k);

    // Raw constructor from power-basis coordinates at conductor n;
    // coefficients are reduced mod Phi_n and the conductor minimized.
    static CycNum from_coeffs(long n, std::vector<Rat> coeffs);

    long conductor() const { return conductor_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const { return conductor_ == 1; }
    // Value as a rational; requires is_rational().
    const Rat& rational() const;
    bool is_integer() const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    // Multiplicative inverse via extended gcd with Phi_N; throws
    // DivisionByZero on zero.
    CycNum inverse() const;

    // Galois conjugation zeta -> zeta^{-1} (complex conjugation on roots of
    // unity).
    CycNum conj() const;

    bool operator==(const CycNum& o) const {
        return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const CycNum& o) const { return !(*this == o); }
    // Arbitrary total order, used for canonical sorting.
    bool operator<(const CycNum& o) const;

    // Exact expression like "1/2*z4^1 - 1" with z<N> the primitive N-th root.
    std::string str() const;

private:
    long conductor_;
    std::vector<Rat> coeffs_; // length phi(conductor_)

    static CycNum make_reduced(long n, std::vector<Rat> reduced);
    void minimize_conductor();
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

long euler_phi(long n);
// Coefficients of the N-th cyclotomic polynomial, low degree first (cached).
const std::vector<Rat>& cyclotomic_poly(long n);

} // namespace qpw
