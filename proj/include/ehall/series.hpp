#pragma once

#include "ehall/rational.hpp"

#include <stdexcept>
#include <vector>

namespace ehall {

// Truncated power series in one formal variable z, exact modulo z^{N+1}.
// T must provide T(), T(long), is_zero(), +=, binary *, and *=(const Rat&).
template <class T> class TruncSeries {
public:
	TruncSeries() : c_(1) {}
	explicit TruncSeries(int order) : c_(order + 1) {}
	TruncSeries(int order, const T &constant) : c_(order + 1)
	{
		c_[0] = constant;
	}

	int order() const { return (int)c_.size() - 1; }
	const T &operator[](int i) const { return c_.at(i); }
	T &operator[](int i) { return c_.at(i); }

	TruncSeries truncated(int order) const
	{
		TruncSeries r(order);
		for (int i = 0; i <= order && i <= this->order(); ++i)
			r.c_[i] = c_[i];
		return r;
	}

	friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b)
	{
		int n = std::min(a.order(), b.order());
		TruncSeries r(n);
		for (int i = 0; i <= n; ++i) {
			r.c_[i] = a.c_[i];
			r.c_[i] += b.c_[i];
		}
		return r;
	}

	friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b)
	{
		int n = std::min(a.order(), b.order());
		TruncSeries r(n);
		for (int i = 0; i <= n; ++i) {
			r.c_[i] = a.c_[i];
			T t = b.c_[i];
			t *= Rat(-1);
			r.c_[i] += t;
		}
		return r;
	}

	friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
	{
		int n = std::min(a.order(), b.order());
		TruncSeries r(n);
		for (int i = 0; i <= n; ++i)
			for (int j = 0; i + j <= n; ++j) {
				if (a.c_[i].is_zero() || b.c_[j].is_zero())
					continue;
				r.c_[i + j] += a.c_[i] * b.c_[j];
			}
		return r;
	}

	TruncSeries &operator*=(const Rat &s)
	{
		for (auto &x : c_)
			x *= s;
		return *this;
	}

	bool operator==(const TruncSeries &o) const = default;

private:
	std::vector<T> c_;
};

// exp(f) for f with zero constant term.
template <class T> TruncSeries<T> series_exp(const TruncSeries<T> &f)
{
	if (!f[0].is_zero())
		throw std::domain_error("series_exp needs zero constant term");
	int n = f.order();
	TruncSeries<T> g(n);
	g[0] = T(1);
	for (int m = 1; m <= n; ++m) {
		T acc;
		for (int k = 1; k <= m; ++k) {
			if (f[k].is_zero() || g[m - k].is_zero())
				continue;
			T t = f[k] * g[m - k];
			t *= Rat(k);
			acc += t;
		}
		acc *= Rat(1, m);
		g[m] = std::move(acc);
	}
	return g;
}

// log(f) for f with constant term 1.
template <class T> TruncSeries<T> series_log(const TruncSeries<T> &f)
{
	T c0 = f[0];
	c0 += T(-1);
	if (!c0.is_zero())
		throw std::domain_error("series_log needs constant term 1");
	int n = f.order();
	TruncSeries<T> h(n);
	for (int m = 1; m <= n; ++m) {
		T acc = f[m];
		for (int k = 1; k < m; ++k) {
			if (h[k].is_zero() || f[m - k].is_zero())
				continue;
			T t = h[k] * f[m - k];
			t *= Rat(-k, m);
			acc += t;
		}
		h[m] = std::move(acc);
	}
	return h;
}

} // namespace ehall
