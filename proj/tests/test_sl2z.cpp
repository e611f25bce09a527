#include "doctest.h"

#include "ehall/elliptic.hpp"

#include <random>

using namespace ehall;

namespace {

// spherical-twist and rotation matrices on row vectors
const Mat2 T_O{1, -1, 0, 1};  // (r,d) -> (r, d - r)
const Mat2 RHO{0, -1, 1, 0};  // (r,d) -> (d, -r), the quarter rotation

std::vector<LatticePoint> window_points(int R, int D)
{
	std::vector<LatticePoint> pts;
	for (int r = -R; r <= R; ++r)
		for (int d = -D; d <= D; ++d)
			if (!(r == 0 && d == 0))
				pts.push_back({r, d});
	return pts;
}

} // namespace

TEST_CASE("winding numbers")
{
	// identity lift: zero on every direction
	GammaLift id{{1, 0, 0, 1}, 0};
	for (auto x : window_points(3, 3))
		CHECK(winding_number(id, x) == 0);
	// full deck shift adds 2
	GammaLift deck{{1, 0, 0, 1}, 1};
	for (auto x : window_points(3, 3)) {
		CHECK(winding_number(deck, x) == 2);
		GammaLift to{T_O, 0}, tos{T_O, 1};
		CHECK(winding_number(tos, x) == winding_number(to, x) + 2);
	}
	// quarter turn with angle +1/2 moves slope 0 inside (0, 1/2]: no hit
	GammaLift rot{{0, 1, -1, 0}, 0};
	CHECK(winding_number(rot, {1, 0}) == 0);
	// winding is antipodally even: w(gamma, x) = w(gamma, -x)
	std::vector<Mat2> mats = {T_O, RHO, {2, 1, 1, 1}, {1, 0, 3, 1}};
	for (auto &m : mats)
		for (auto x : window_points(3, 3))
			CHECK(winding_number(GammaLift{m, 0}, x) ==
			      winding_number(GammaLift{m, 0}, LatticePoint{-x.r, -x.d}));
}

TEST_CASE("lattice action conventions")
{
	CHECK(T_O.apply({1, 0}) == LatticePoint{1, -1});
	CHECK(T_O.apply({0, 1}) == LatticePoint{0, 1});
	CHECK(RHO.apply({1, 0}) == LatticePoint{0, -1});
	CHECK(RHO.apply({0, 1}) == LatticePoint{1, 0});
	CHECK(T_O.det() == 1);
	CHECK(RHO.det() == 1);
}

TEST_CASE("kappa transforms by the matrix")
{
	EllipticEngine eng;
	GammaLift rho{RHO, 0};
	EllElem k01 = EllElem::kappa2_elem(0, 2); // k_{(0,1)}
	EllElem image = eng.sl2z_apply(rho, k01);
	CHECK(image == EllElem::kappa2_elem(2, 0)); // k_{(1,0)}
}

TEST_CASE("images of the defining relations vanish")
{
	EllipticEngine eng(24, 24);
	std::vector<GammaLift> gammas = {{T_O, 0}, {RHO, 0}, {T_O, -1}, {RHO, 1}};
	auto pts = window_points(3, 3);
	for (auto &g : gammas) {
		for (auto x : pts)
			for (auto y : pts) {
				// gamma([t_x,t_y]) - [gamma t_x, gamma t_y] = 0
				try {
					EllElem lhs = eng.sl2z_apply(g, eng.comm(x, y));
					EllElem ax = eng.sl2z_apply(g, EllElem::t(x));
					EllElem ay = eng.sl2z_apply(g, EllElem::t(y));
					EllElem rhs = eng.mul(ax, ay);
					rhs -= eng.mul(ay, ax);
					CHECK(lhs == rhs);
				} catch (const ell_window_overflow &) {
					// the image leaves the configured window; skip
				}
			}
	}
}

TEST_CASE("multiplicativity on sampled products")
{
	EllipticEngine eng(24, 24);
	std::mt19937 rng(515253);
	auto pts = window_points(3, 3);
	std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
	std::vector<GammaLift> gammas = {{T_O, 0}, {RHO, 0}};
	int done = 0;
	for (int trial = 0; done < 50 && trial < 300; ++trial) {
		LatticePoint x = pts[pick(rng)], y = pts[pick(rng)];
		const GammaLift &g = gammas[trial % gammas.size()];
		try {
			EllElem prod = eng.mul(EllElem::t(x), EllElem::t(y));
			EllElem lhs = eng.sl2z_apply(g, prod);
			EllElem rhs = eng.mul(eng.sl2z_apply(g, EllElem::t(x)),
			                      eng.sl2z_apply(g, EllElem::t(y)));
			CHECK(lhs == rhs);
			++done;
		} catch (const ell_window_overflow &) {
		}
	}
	CHECK(done == 50);
}
