#pragma once

#include "ehall/scalar.hpp"
#include "ehall/series.hpp"

#include <vector>

namespace ehall {

// Kapranov motivic zeta function of a curve: f(z)/((1-z)(1-L z)) with
// genus tag g and deg f <= 2g, f(0) = 1.
class ZetaFunction {
public:
	// P^1: f = 1, g = 0.
	static ZetaFunction p1();
	// genus one with numerator 1 + a z + L z^2
	static ZetaFunction genus_one(const Scalar &a);
	// genus one parametrized by [Pic^0]; a = pic0 - L - 1
	static ZetaFunction from_pic0(const Scalar &pic0);
	// arbitrary numerator (for negative tests)
	ZetaFunction(std::vector<Scalar> numerator, int genus);

	int genus() const { return genus_; }
	const std::vector<Scalar> &numerator() const { return num_; }

	// [Sym^n X]: coefficient of z^n in the expansion
	Scalar sym_class(int n) const;

	// [C_(d)] = d * (z^d coefficient of log zeta), d >= 1
	Scalar log_class(int d) const;

	// deg f <= 2g and f(0) = 1
	bool rationality_check() const;

	// expansion to the given order
	TruncSeries<Scalar> expand(int order) const;

	bool operator==(const ZetaFunction &o) const = default;

private:
	std::vector<Scalar> num_; // numerator coefficients, num_[0] = f(0)
	int genus_ = 0;
};

// [GL_d] = L^{d(d-1)/2} prod_{k=1}^{d} (L^k - 1); d >= 0
Scalar class_gl(int d);

// [Gr(d,n)] as a Gaussian binomial; 0 <= d <= n
Scalar class_grassmannian(int d, int n);

// class of coprime pairs of homogeneous polynomials of degrees (a,b)
Scalar coprime_pair_class(int a, int b);

} // namespace ehall
