#include "ehall/poly.hpp"

#include <algorithm>
#include <functional>

namespace ehall {

int Poly::deg1() const
{
	int d = 0;
	for (auto &[m, c] : terms_)
		d = std::max(d, m.e1);
	return d;
}

int Poly::deg2() const
{
	int d = 0;
	for (auto &[m, c] : terms_)
		d = std::max(d, m.e2);
	return d;
}

Poly &Poly::operator+=(const Poly &o)
{
	for (auto &[m, c] : o.terms_) {
		auto it = terms_.find(m);
		if (it == terms_.end()) {
			terms_.emplace(m, c);
		} else {
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}
	return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
	for (auto &[m, c] : o.terms_) {
		auto it = terms_.find(m);
		if (it == terms_.end()) {
			terms_.emplace(m, -c);
		} else {
			it->second -= c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}
	return *this;
}

Poly Poly::operator-() const
{
	Poly r;
	for (auto &[m, c] : terms_)
		r.terms_.emplace(m, -c);
	return r;
}

Poly operator*(const Poly &a, const Poly &b)
{
	Poly r;
	for (auto &[ma, ca] : a.terms()) {
		for (auto &[mb, cb] : b.terms()) {
			Mono m{ma.e1 + mb.e1, ma.e2 + mb.e2};
			auto it = r.terms_.find(m);
			if (it == r.terms_.end()) {
				r.terms_.emplace(m, ca * cb);
			} else {
				it->second += ca * cb;
				if (it->second == 0)
					r.terms_.erase(it);
			}
		}
	}
	return r;
}

Poly &Poly::operator*=(const Rat &c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto &[m, v] : terms_)
		v *= c;
	return *this;
}

Rat Poly::eval(const Rat &v1, const Rat &v2) const
{
	Rat r(0);
	for (auto &[m, c] : terms_)
		r += c * rat_pow(v1, m.e1) * rat_pow(v2, m.e2);
	return r;
}

Poly Poly::swap_vars() const
{
	Poly r;
	for (auto &[m, c] : terms_)
		r.terms_.emplace(Mono{m.e2, m.e1}, c);
	return r;
}

Rat Poly::content() const
{
	if (terms_.empty())
		return Rat(0);
	Int num_gcd(0), den_lcm(1);
	for (auto &[m, c] : terms_) {
		mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
		        c.get_num().get_mpz_t());
		mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
		        c.get_den().get_mpz_t());
	}
	Rat r(num_gcd, den_lcm);
	r.canonicalize();
	return r;
}

size_t Poly::hash() const
{
	size_t h = 0x9e3779b97f4a7c15ull;
	std::hash<std::string> hs;
	for (auto &[m, c] : terms_) {
		size_t t = (size_t)(m.e1 * 1315423911) ^ ((size_t)m.e2 << 17);
		t ^= hs(c.get_str());
		h ^= t + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
	}
	return h;
}

namespace {

// Univariate polynomials over Q, used for the gcd recursion.
using UPoly = std::vector<Rat>; // coefficient of s1^i at index i

void u_trim(UPoly &p)
{
	while (!p.empty() && p.back() == 0)
		p.pop_back();
}

UPoly u_mul(const UPoly &a, const UPoly &b)
{
	if (a.empty() || b.empty())
		return {};
	UPoly r(a.size() + b.size() - 1, Rat(0));
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < b.size(); ++j)
			r[i + j] += a[i] * b[j];
	u_trim(r);
	return r;
}

// integer-primitive normalization with positive leading coefficient
UPoly u_primitive(UPoly p)
{
	u_trim(p);
	if (p.empty())
		return p;
	Int num_gcd(0), den_lcm(1);
	for (auto &c : p) {
		mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
		        c.get_num().get_mpz_t());
		mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
		        c.get_den().get_mpz_t());
	}
	Rat scale(den_lcm, num_gcd);
	scale.canonicalize();
	if (p.back() < 0)
		scale = -scale;
	for (auto &c : p)
		c *= scale;
	return p;
}

// fraction-free pseudo-remainder of integer polynomials
UPoly u_prem(UPoly a, const UPoly &b)
{
	u_trim(a);
	const Rat &lb = b.back();
	while (a.size() >= b.size() && !a.empty()) {
		Rat la = a.back();
		size_t off = a.size() - b.size();
		for (auto &c : a)
			c *= lb;
		for (size_t i = 0; i < b.size(); ++i)
			a[off + i] -= la * b[i];
		u_trim(a);
	}
	return a;
}

// primitive PRS gcd; result primitive with positive leading coefficient
UPoly u_gcd(UPoly a, UPoly b)
{
	a = u_primitive(std::move(a));
	b = u_primitive(std::move(b));
	if (a.size() < b.size())
		std::swap(a, b);
	while (!b.empty()) {
		UPoly r = u_primitive(u_prem(a, b));
		a = std::move(b);
		b = std::move(r);
	}
	return a;
}

// Bivariate polynomial as a vector in s2 with UPoly (in s1) coefficients.
using B = std::vector<UPoly>;

void b_trim(B &p)
{
	while (!p.empty() && p.back().empty())
		p.pop_back();
}

B to_b(const Poly &p)
{
	B r(p.is_zero() ? 0 : p.deg2() + 1);
	for (auto &[m, c] : p.terms()) {
		auto &u = r[m.e2];
		if ((int)u.size() <= m.e1)
			u.resize(m.e1 + 1, Rat(0));
		u[m.e1] = c;
	}
	for (auto &u : r)
		u_trim(u);
	b_trim(r);
	return r;
}

Poly from_b(const B &p)
{
	Poly r;
	for (size_t e2 = 0; e2 < p.size(); ++e2)
		for (size_t e1 = 0; e1 < p[e2].size(); ++e1)
			if (p[e2][e1] != 0)
				r.set(Mono{(int)e1, (int)e2}, p[e2][e1]);
	return r;
}

UPoly b_content(const B &p)
{
	UPoly g;
	for (auto &u : p)
		if (!u.empty())
			g = u_gcd(g, u);
	return g;
}

// Divide every s2-coefficient exactly by the univariate d.
B b_div_content(const B &p, const UPoly &d)
{
	B r(p.size());
	for (size_t i = 0; i < p.size(); ++i) {
		if (p[i].empty())
			continue;
		// exact division over Q[s1]
		UPoly a = p[i], q;
		q.assign(a.size(), Rat(0));
		while (!a.empty() && a.size() >= d.size()) {
			Rat c = a.back() / d.back();
			size_t off = a.size() - d.size();
			q[off] = c;
			for (size_t j = 0; j < d.size(); ++j)
				a[off + j] -= c * d[j];
			u_trim(a);
		}
		u_trim(q);
		r[i] = std::move(q);
	}
	return r;
}

// Pseudo-remainder of a by b in (Q[s1])[s2].
B b_prem(B a, const B &b)
{
	b_trim(a);
	const UPoly &lb = b.back();
	while (a.size() >= b.size() && !a.empty()) {
		UPoly la = a.back();
		size_t off = a.size() - b.size();
		// a = lb * a - la * s2^off * b
		for (auto &u : a)
			u = u_mul(u, lb);
		for (size_t i = 0; i < b.size(); ++i) {
			UPoly t = u_mul(la, b[i]);
			UPoly &dst = a[off + i];
			if (dst.size() < t.size())
				dst.resize(t.size(), Rat(0));
			for (size_t j = 0; j < t.size(); ++j)
				dst[j] -= t[j];
			u_trim(dst);
		}
		b_trim(a);
	}
	return a;
}

} // namespace

Poly Poly::divide_exact(const Poly &d) const
{
	if (d.is_zero())
		throw std::domain_error("division by zero polynomial");
	if (is_zero())
		return Poly();
	if (d.is_monomial()) {
		auto &[md, cd] = *d.terms().begin();
		Poly r;
		for (auto &[m, c] : terms_) {
			if (m.e1 < md.e1 || m.e2 < md.e2)
				throw std::domain_error("inexact polynomial division");
			r.set(Mono{m.e1 - md.e1, m.e2 - md.e2}, c / cd);
		}
		return r;
	}
	// long division in s2-major order
	B a = to_b(*this), b = to_b(d);
	B q(a.size());
	while (!a.empty() && a.size() >= b.size()) {
		// divide leading s2-coefficients exactly over Q[s1]
		UPoly la = a.back(), lb = b.back();
		UPoly c, rem = la;
		c.assign(la.size(), Rat(0));
		while (!rem.empty() && rem.size() >= lb.size()) {
			Rat f = rem.back() / lb.back();
			size_t off = rem.size() - lb.size();
			c[off] += f;
			for (size_t j = 0; j < lb.size(); ++j)
				rem[off + j] -= f * lb[j];
			u_trim(rem);
		}
		if (!rem.empty())
			throw std::domain_error("inexact polynomial division");
		u_trim(c);
		size_t off = a.size() - b.size();
		q[off] = c;
		for (size_t i = 0; i < b.size(); ++i) {
			UPoly t = u_mul(c, b[i]);
			UPoly &dst = a[off + i];
			if (dst.size() < t.size())
				dst.resize(t.size(), Rat(0));
			for (size_t j = 0; j < t.size(); ++j)
				dst[j] -= t[j];
			u_trim(dst);
		}
		b_trim(a);
	}
	if (!a.empty())
		throw std::domain_error("inexact polynomial division");
	return from_b(q);
}

Poly poly_gcd(const Poly &a, const Poly &b)
{
	if (a.is_zero() && b.is_zero())
		return Poly();
	auto normalize = [](Poly p) {
		Rat c = p.content();
		if (c == 0)
			return p;
		if (p.leading().second < 0)
			c = -c;
		Poly r;
		for (auto &[m, v] : p.terms())
			r.set(m, v / c);
		return r;
	};
	if (a.is_zero())
		return normalize(b);
	if (b.is_zero())
		return normalize(a);
	// fast path: monomial gcd
	if (a.is_monomial() || b.is_monomial()) {
		int e1 = std::min(a.terms().begin()->first.e1, b.terms().begin()->first.e1);
		int e2 = std::min(a.terms().begin()->first.e2, b.terms().begin()->first.e2);
		for (auto &[m, c] : a.terms()) {
			e1 = std::min(e1, m.e1);
			e2 = std::min(e2, m.e2);
		}
		for (auto &[m, c] : b.terms()) {
			e1 = std::min(e1, m.e1);
			e2 = std::min(e2, m.e2);
		}
		return Poly::monomial(e1, e2);
	}
	if (a == b)
		return normalize(a);

	B pa = to_b(a), pb = to_b(b);
	UPoly ca = b_content(pa), cb = b_content(pb);
	UPoly cg = u_gcd(ca, cb);
	pa = b_div_content(pa, ca);
	pb = b_div_content(pb, cb);
	if (pa.size() < pb.size())
		std::swap(pa, pb);
	while (!pb.empty()) {
		B r = b_prem(pa, pb);
		if (!r.empty()) {
			UPoly cr = b_content(r);
			r = b_div_content(r, cr);
		}
		pa = std::move(pb);
		pb = std::move(r);
	}
	// gcd = cg(s1) * pp(pa)
	B res(pa.size());
	for (size_t i = 0; i < pa.size(); ++i)
		res[i] = u_mul(pa[i], cg);
	return normalize(from_b(res));
}

} // namespace ehall
