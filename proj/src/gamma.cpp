#include "ehall/gamma.hpp"

namespace ehall {

namespace {

bool upper_strip(LatticePoint x) { return x.d > 0 || (x.d == 0 && x.r > 0); }

// angle of a nonzero lattice point as a cover value in [0, 2)
CoverPoint full_angle(LatticePoint q)
{
	if (q.is_zero())
		throw std::domain_error("direction of the origin");
	q = primitive(q);
	if (upper_strip(q))
		return {0, q};
	return {1, -q};
}

} // namespace

CoverPoint CoverPoint::of_direction(LatticePoint x) { return full_angle(x); }

CoverPoint GammaLift::apply(CoverPoint t) const
{
	if (m.det() != 1)
		throw std::domain_error("matrix not in SL(2,Z)");
	// anchor: the canonical lift sends angle 0 into (-1, 1]
	CoverPoint g0 = full_angle(m.apply({1, 0}));
	if (g0.half == 1 && !(g0.p == LatticePoint{1, 0}))
		g0.half -= 2;
	// image of the strip representative, lifted into [g0, g0 + 1)
	CoverPoint a = full_angle(m.apply(t.p));
	int k = 0;
	CoverPoint g1{g0.half + 1, g0.p};
	if (!(a < g0) && a < g1) {
		k = 0;
	} else {
		k = -2;
		CoverPoint a2{a.half - 2, a.p};
		if (a2 < g0 || !(a2 < g1))
			throw std::logic_error("cover lift window miss");
	}
	return {a.half + k + t.half + 2 * offset, a.p};
}

int winding_number(const GammaLift &gamma, LatticePoint x)
{
	CoverPoint t = CoverPoint::of_direction(x);
	CoverPoint im = gamma.apply(t);
	// #(Z cap (t, im]) = floor(im) - floor(t); the floor is the integer
	// part `half` since angles lie in [half, half+1)
	return im.half - t.half;
}

} // namespace ehall
