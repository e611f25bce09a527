#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ehall {

struct LatticePoint {
	int r = 0;
	int d = 0;
	auto operator<=>(const LatticePoint &) const = default;
	LatticePoint operator+(LatticePoint o) const { return {r + o.r, d + o.d}; }
	LatticePoint operator-() const { return {-r, -d}; }
	bool is_zero() const { return r == 0 && d == 0; }
};

inline long det(LatticePoint x, LatticePoint y)
{
	return (long)x.r * y.d - (long)x.d * y.r;
}

// positive gcd of the coordinates
inline int gcd_abs(LatticePoint x)
{
	return std::gcd(std::abs(x.r), std::abs(x.d));
}

// (Z^2)^+ = {r >= 1} union {r = 0, d >= 1}
inline bool in_pos_cone(LatticePoint x) { return x.r > 0 || (x.r == 0 && x.d > 0); }
inline int epsilon(LatticePoint x)
{
	if (x.is_zero())
		throw std::domain_error("epsilon of the origin");
	return in_pos_cone(x) ? 1 : -1;
}

// signed gcd: positive on the positive cone, negative on the negative cone
inline int gcd_signed(LatticePoint x) { return epsilon(x) * gcd_abs(x); }

inline LatticePoint primitive(LatticePoint x)
{
	int g = gcd_abs(x);
	return {x.r / g, x.d / g};
}

// 2x2 integer matrix acting on row vectors: (r,d) -> (r*a + d*c, r*b + d*dd)
struct Mat2 {
	int a = 1, b = 0, c = 0, dd = 1;
	LatticePoint apply(LatticePoint x) const
	{
		return {x.r * a + x.d * c, x.r * b + x.d * dd};
	}
	long det() const { return (long)a * dd - (long)b * c; }
	Mat2 mul(const Mat2 &o) const
	{
		// row convention: (x M) N = x (M N)
		return {a * o.a + b * o.c, a * o.b + b * o.dd,
		        c * o.a + dd * o.c, c * o.b + dd * o.dd};
	}
	auto operator<=>(const Mat2 &) const = default;
};

// Point of the universal cover R of the direction circle R/2Z; the angle
// is half + arg(p)/pi with p primitive in the closed upper strip
// (d > 0, or d = 0 and r > 0), so the value lies in [half, half+1).
struct CoverPoint {
	int half = 0;
	LatticePoint p{1, 0};

	static CoverPoint of_direction(LatticePoint x);
	friend bool operator<(const CoverPoint &a, const CoverPoint &b)
	{
		if (a.half != b.half)
			return a.half < b.half;
		// both directions in the upper strip: smaller angle first
		return det(a.p, b.p) > 0;
	}
	bool operator==(const CoverPoint &o) const = default;
};

// Element of the universal cover of SL(2,Z) acting on directions:
// the canonical lift of the matrix plus `offset` full decks (+2 each).
struct GammaLift {
	Mat2 m;
	int offset = 0;

	CoverPoint apply(CoverPoint t) const;
};

// signed number of integer cover points in the half-open interval
// (t, gamma(t)] where t is a lift of the direction of x; integer points
// of the cover are the lifts of the directions +-(1,0)
int winding_number(const GammaLift &gamma, LatticePoint x);

} // namespace ehall
