#include "ehall/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ehall {

namespace {

void append_pow(std::string &out, const char *name, int e)
{
	if (e == 0)
		return;
	if (!out.empty())
		out += "*";
	out += name;
	if (e != 1) {
		out += "^";
		out += std::to_string(e);
	}
}

// Canonical monomial rendering with q1/q2/L aliases; exponents may be
// negative (Laurent form after dividing by a monomial denominator).
std::string mono_str(int e1, int e2)
{
	std::string out;
	if (e1 == e2) {
		if (e1 == 0)
			return "1";
		if (e1 % 2 == 0) {
			append_pow(out, "L", e1 / 2);
		} else {
			int half = (e1 - (e1 > 0 ? 1 : -1)) / 2;
			append_pow(out, "L", half);
			append_pow(out, "s1", e1 > 0 ? 1 : -1);
			append_pow(out, "s2", e1 > 0 ? 1 : -1);
		}
		return out;
	}
	auto var = [&](const char *q, const char *s, int e) {
		if (e % 2 == 0) {
			append_pow(out, q, e / 2);
		} else {
			int sign = e > 0 ? 1 : -1;
			append_pow(out, q, (e - sign) / 2);
			append_pow(out, s, sign);
		}
	};
	var("q1", "s1", e1);
	var("q2", "s2", e2);
	return out.empty() ? "1" : out;
}

struct Term {
	int e1, e2;
	Rat c;
};

std::string terms_str(std::vector<Term> ts)
{
	if (ts.empty())
		return "0";
	std::sort(ts.begin(), ts.end(), [](const Term &a, const Term &b) {
		if (a.e1 + a.e2 != b.e1 + b.e2)
			return a.e1 + a.e2 > b.e1 + b.e2;
		return a.e1 > b.e1;
	});
	std::string out;
	for (auto &t : ts) {
		bool neg = t.c < 0;
		Rat a = neg ? Rat(-t.c) : t.c;
		std::string m = mono_str(t.e1, t.e2);
		std::string piece;
		if (m == "1")
			piece = rat_str(a);
		else if (a == 1)
			piece = m;
		else
			piece = rat_str(a) + "*" + m;
		if (out.empty())
			out = neg ? "-" + piece : piece;
		else
			out += (neg ? " - " : " + ") + piece;
	}
	return out;
}

std::string poly_str_shift(const Poly &p, int s1_shift, int s2_shift)
{
	std::vector<Term> ts;
	for (auto &[m, c] : p.terms())
		ts.push_back({m.e1 - s1_shift, m.e2 - s2_shift, c});
	return terms_str(std::move(ts));
}

} // namespace

std::string Scalar::str() const
{
	if (num_.is_zero())
		return "0";
	if (den_.is_one())
		return poly_str_shift(num_, 0, 0);
	if (den_.is_monomial()) {
		auto &[m, c] = *den_.terms().begin();
		std::vector<Term> ts;
		for (auto &[mn, cn] : num_.terms())
			ts.push_back({mn.e1 - m.e1, mn.e2 - m.e2, cn / c});
		return terms_str(std::move(ts));
	}
	std::string n = poly_str_shift(num_, 0, 0);
	std::string d = poly_str_shift(den_, 0, 0);
	return "(" + n + ")/(" + d + ")";
}

} // namespace ehall
