#pragma once

#include "ehall/poly.hpp"

#include <iosfwd>
#include <string>

namespace ehall {

// Element of the coefficient field F = Frac(Q[s1,s2]).
//
// s1, s2 are formal square roots of the zeta-numerator root inverses:
// q1 = s1^2, q2 = s2^2, L = q1*q2, sqrt(L) = s1*s2.  Values are kept in a
// unique reduced form (gcd(num,den) = 1, den primitive with positive
// leading coefficient), so operator== is structural equality.
class Scalar {
public:
	Scalar() : num_(), den_(Poly(1)) {}
	Scalar(long c) : num_(Poly(c)), den_(Poly(1)) {}
	explicit Scalar(const Rat &c) : num_(Poly(c)), den_(Poly(1)) {}
	Scalar(Poly num, Poly den);

	static Scalar from_poly(Poly p) { return Scalar(std::move(p), Poly(1)); }

	// generators and aliases
	static Scalar s1(int e = 1);
	static Scalar s2(int e = 1);
	static Scalar q1(int e = 1) { return s1(2 * e); }
	static Scalar q2(int e = 1) { return s2(2 * e); }
	static Scalar q3(int e = 1) { return q1(-e) * q2(-e); }
	// L^{e/2}: half-integer powers of the Lefschetz class
	static Scalar sqrtL_pow(int half_e);
	static Scalar L(int e = 1) { return sqrtL_pow(2 * e); }
	static Scalar sqrtL() { return sqrtL_pow(1); }

	const Poly &num() const { return num_; }
	const Poly &den() const { return den_; }

	bool is_zero() const { return num_.is_zero(); }
	bool is_one() const { return num_.is_one() && den_.is_one(); }

	Scalar operator-() const;
	Scalar &operator+=(const Scalar &o);
	Scalar &operator-=(const Scalar &o);
	Scalar &operator*=(const Scalar &o);
	Scalar &operator/=(const Scalar &o);
	Scalar &operator*=(const Rat &c);
	friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
	friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
	friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
	friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

	bool operator==(const Scalar &o) const = default;

	Scalar inverse() const;
	Scalar pow(int e) const;

	// swap s1 <-> s2 (equivalently q1 <-> q2)
	Scalar swap_q() const;

	// exact evaluation at rational points (s1, s2) -> Q
	Rat eval(const Rat &v1, const Rat &v2) const;

	size_t hash() const;

	// Canonical text form; see render.cpp for the grammar.
	std::string str() const;
	friend std::ostream &operator<<(std::ostream &os, const Scalar &s);

private:
	void reduce();
	Poly num_, den_;
};

// [d]_{sqrt L} = (L^{d/2} - L^{-d/2}) / (L^{1/2} - L^{-1/2}).
Scalar quantum_integer(int d);

// Gaussian binomial [n choose d]^+_L; requires 0 <= d <= n.
Scalar gaussian_binomial(int n, int d);

// [n]^+_L = 1 + L + ... + L^{n-1}
Scalar plus_integer(int n);

} // namespace ehall
