#pragma once

#include "ehall/rational.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehall {

// Monomial s1^e1 * s2^e2, exponents >= 0.
struct Mono {
	int e1 = 0;
	int e2 = 0;
	auto operator<=>(const Mono &) const = default;
};

// Sparse bivariate polynomial over Q in the formal square roots s1, s2.
// No zero coefficients are stored.
class Poly {
public:
	using Terms = std::map<Mono, Rat>;

	Poly() = default;
	explicit Poly(const Rat &c)
	{
		if (c != 0)
			terms_[Mono{0, 0}] = c;
	}
	Poly(long c) : Poly(Rat(c)) {}

	static Poly monomial(int e1, int e2, const Rat &c = Rat(1))
	{
		Poly p;
		if (c != 0)
			p.terms_[Mono{e1, e2}] = c;
		return p;
	}

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_one() const
	{
		return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0} &&
		       terms_.begin()->second == 1;
	}
	bool is_monomial() const { return terms_.size() == 1; }
	bool is_constant() const
	{
		return terms_.empty() ||
		       (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
	}

	// Leading term in the map order (largest monomial).
	const std::pair<const Mono, Rat> &leading() const
	{
		if (terms_.empty())
			throw std::logic_error("leading term of zero polynomial");
		return *terms_.rbegin();
	}

	int deg1() const;
	int deg2() const;

	Poly &operator+=(const Poly &o);
	Poly &operator-=(const Poly &o);
	Poly operator-() const;
	friend Poly operator+(Poly a, const Poly &b) { return a += b; }
	friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
	friend Poly operator*(const Poly &a, const Poly &b);
	Poly &operator*=(const Poly &o) { return *this = *this * o; }
	Poly &operator*=(const Rat &c);

	bool operator==(const Poly &o) const = default;

	// Divides exactly; throws if the division leaves a remainder.
	Poly divide_exact(const Poly &d) const;

	// Substitute s1 -> v1, s2 -> v2 (exact rational evaluation).
	Rat eval(const Rat &v1, const Rat &v2) const;

	// Swap the two variables (s1 <-> s2).
	Poly swap_vars() const;

	// Content (gcd of coefficients as a positive rational scale) and
	// the primitive integer part.  For the zero polynomial content is 0.
	Rat content() const;

	size_t hash() const;

	void set(Mono m, const Rat &c)
	{
		if (c == 0)
			terms_.erase(m);
		else
			terms_[m] = c;
	}

private:
	Terms terms_;
};

// gcd over Q[s1,s2]; result is primitive with positive leading coefficient.
// gcd(0,0) = 0.
Poly poly_gcd(const Poly &a, const Poly &b);

} // namespace ehall
