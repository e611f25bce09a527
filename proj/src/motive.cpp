#include "ehall/motive.hpp"

#include <stdexcept>

namespace ehall {

ZetaFunction::ZetaFunction(std::vector<Scalar> numerator, int genus)
    : num_(std::move(numerator)), genus_(genus)
{
	if (num_.empty())
		num_.push_back(Scalar(1));
	while (num_.size() > 1 && num_.back().is_zero())
		num_.pop_back();
}

ZetaFunction ZetaFunction::p1()
{
	return ZetaFunction({Scalar(1)}, 0);
}

ZetaFunction ZetaFunction::genus_one(const Scalar &a)
{
	return ZetaFunction({Scalar(1), a, Scalar::L()}, 1);
}

ZetaFunction ZetaFunction::from_pic0(const Scalar &pic0)
{
	return genus_one(pic0 - Scalar::L() - Scalar(1));
}

TruncSeries<Scalar> ZetaFunction::expand(int order) const
{
	TruncSeries<Scalar> num(order);
	for (int i = 0; i <= order && i < (int)num_.size(); ++i)
		num[i] = num_[i];
	// 1/((1-z)(1-Lz)) expands with coefficients [P^n] = 1 + L + ... + L^n
	TruncSeries<Scalar> den_inv(order);
	for (int i = 0; i <= order; ++i) {
		Scalar s(0);
		for (int k = 0; k <= i; ++k)
			s += Scalar::L(k);
		den_inv[i] = s;
	}
	return num * den_inv;
}

Scalar ZetaFunction::sym_class(int n) const
{
	if (n < 0)
		throw std::domain_error("sym_class needs n >= 0");
	return expand(n)[n];
}

Scalar ZetaFunction::log_class(int d) const
{
	if (d <= 0)
		throw std::domain_error("log_class needs d >= 1");
	auto lg = series_log(expand(d));
	Scalar r = lg[d];
	r *= Rat(d);
	return r;
}

bool ZetaFunction::rationality_check() const
{
	if (num_.empty() || !(num_[0] == Scalar(1)))
		return false;
	return (int)num_.size() - 1 <= 2 * genus_;
}

Scalar class_gl(int d)
{
	if (d < 0)
		throw std::domain_error("class_gl needs d >= 0");
	Scalar r = Scalar::from_poly(Poly::monomial(d * (d - 1), d * (d - 1)));
	for (int k = 1; k <= d; ++k)
		r *= Scalar::L(k) - Scalar(1);
	return r;
}

Scalar class_grassmannian(int d, int n)
{
	if (d < 0 || d > n)
		throw std::domain_error("class_grassmannian needs 0 <= d <= n");
	return gaussian_binomial(n, d);
}

Scalar coprime_pair_class(int a, int b)
{
	if (a < 0 || b < 0)
		throw std::domain_error("coprime_pair_class needs a,b >= 0");
	Scalar L = Scalar::L();
	Scalar one(1);
	if (a == 0 || b == 0)
		return (L - one) * (Scalar::L(a + b + 1) - one);
	return (L - one) * (L * L - one) * Scalar::L(a + b - 1);
}

} // namespace ehall
