#include "ehall/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace ehall {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
	if (den_.is_zero())
		throw std::domain_error("scalar with zero denominator");
	reduce();
}

void Scalar::reduce()
{
	if (num_.is_zero()) {
		den_ = Poly(1);
		return;
	}
	if (!den_.is_one()) {
		Poly g = poly_gcd(num_, den_);
		if (!g.is_one()) {
			num_ = num_.divide_exact(g);
			den_ = den_.divide_exact(g);
		}
	}
	// normalize: den primitive over Z with positive leading coefficient
	Rat c = den_.content();
	if (den_.leading().second < 0)
		c = -c;
	if (c != 1) {
		Poly nd, nn;
		for (auto &[m, v] : den_.terms())
			nd.set(m, v / c);
		for (auto &[m, v] : num_.terms())
			nn.set(m, v / c);
		den_ = std::move(nd);
		num_ = std::move(nn);
	}
}

Scalar Scalar::s1(int e)
{
	if (e >= 0)
		return Scalar(Poly::monomial(e, 0), Poly(1));
	return Scalar(Poly(1), Poly::monomial(-e, 0));
}

Scalar Scalar::s2(int e)
{
	if (e >= 0)
		return Scalar(Poly::monomial(0, e), Poly(1));
	return Scalar(Poly(1), Poly::monomial(0, -e));
}

Scalar Scalar::sqrtL_pow(int half_e)
{
	if (half_e >= 0)
		return Scalar(Poly::monomial(half_e, half_e), Poly(1));
	return Scalar(Poly(1), Poly::monomial(-half_e, -half_e));
}

Scalar Scalar::operator-() const
{
	Scalar r;
	r.num_ = -num_;
	r.den_ = den_;
	return r;
}

Scalar &Scalar::operator+=(const Scalar &o)
{
	if (o.is_zero())
		return *this;
	if (is_zero())
		return *this = o;
	if (den_ == o.den_) {
		num_ += o.num_;
		reduce();
		return *this;
	}
	Poly g = poly_gcd(den_, o.den_);
	Poly da = den_.divide_exact(g), db = o.den_.divide_exact(g);
	num_ = num_ * db + o.num_ * da;
	den_ = den_ * db;
	reduce();
	return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) { return *this += -o; }

Scalar &Scalar::operator*=(const Scalar &o)
{
	if (is_zero() || o.is_zero())
		return *this = Scalar();
	// cross-reduce before multiplying
	Poly g1 = poly_gcd(num_, o.den_);
	Poly g2 = poly_gcd(o.num_, den_);
	Poly n1 = g1.is_one() ? num_ : num_.divide_exact(g1);
	Poly d2 = g1.is_one() ? o.den_ : o.den_.divide_exact(g1);
	Poly n2 = g2.is_one() ? o.num_ : o.num_.divide_exact(g2);
	Poly d1 = g2.is_one() ? den_ : den_.divide_exact(g2);
	num_ = n1 * n2;
	den_ = d1 * d2;
	reduce();
	return *this;
}

Scalar &Scalar::operator/=(const Scalar &o)
{
	if (o.is_zero())
		throw std::domain_error("scalar division by zero");
	return *this *= o.inverse();
}

Scalar &Scalar::operator*=(const Rat &c)
{
	if (c == 0)
		return *this = Scalar();
	Poly n;
	for (auto &[m, v] : num_.terms())
		n.set(m, v * c);
	num_ = std::move(n);
	return *this;
}

Scalar Scalar::inverse() const
{
	if (is_zero())
		throw std::domain_error("inverse of zero scalar");
	return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const
{
	if (e == 0)
		return Scalar(1);
	Scalar b = e > 0 ? *this : inverse();
	int n = e > 0 ? e : -e;
	Scalar r(1);
	while (n) {
		if (n & 1)
			r *= b;
		b *= b;
		n >>= 1;
	}
	return r;
}

Scalar Scalar::swap_q() const
{
	Scalar r;
	r.num_ = num_.swap_vars();
	r.den_ = den_.swap_vars();
	r.reduce();
	return r;
}

Rat Scalar::eval(const Rat &v1, const Rat &v2) const
{
	Rat d = den_.eval(v1, v2);
	if (d == 0)
		throw std::domain_error("scalar evaluation hits a pole");
	return num_.eval(v1, v2) / d;
}

size_t Scalar::hash() const
{
	return num_.hash() * 1000003u + den_.hash();
}

Scalar quantum_integer(int d)
{
	if (d == 0)
		return Scalar(0);
	if (d < 0)
		return -quantum_integer(-d);
	// L^{-(d-1)/2} (1 + L + ... + L^{d-1})
	Poly sum;
	for (int k = 0; k < d; ++k)
		sum += Poly::monomial(2 * k, 2 * k);
	return Scalar(std::move(sum), Poly::monomial(d - 1, d - 1));
}

Scalar plus_integer(int n)
{
	Poly sum;
	for (int k = 0; k < n; ++k)
		sum += Poly::monomial(2 * k, 2 * k);
	return Scalar::from_poly(sum);
}

Scalar gaussian_binomial(int n, int d)
{
	if (d < 0 || d > n)
		throw std::domain_error("gaussian_binomial requires 0 <= d <= n");
	Scalar r(1);
	// [n]!/([d]![n-d]!) = prod_{k=1}^{d} [n-d+k]/[k]
	for (int k = 1; k <= d; ++k)
		r *= plus_integer(n - d + k) / plus_integer(k);
	return r;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s)
{
	return os << s.str();
}

} // namespace ehall
