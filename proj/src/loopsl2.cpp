#include "ehall/loopsl2.hpp"

#include "ehall/series.hpp"
#include "ehall/torsion.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace ehall {

namespace {

// v = 1/sqrt(L); v^k
Scalar vpow(int k) { return Scalar::sqrtL_pow(-k); }

// [2r]_v / r
Scalar two_r_over_r(int r)
{
	Scalar num = vpow(2 * r) - vpow(-2 * r);
	Scalar den = vpow(1) - vpow(-1);
	return num / (den * Scalar(r));
}

} // namespace

LoopElem LoopElem::mono(LoopMonomial m, Scalar c)
{
	LoopElem r;
	if (!c.is_zero())
		r.terms_[std::move(m)] = std::move(c);
	return r;
}

LoopElem &LoopElem::operator+=(const LoopElem &o)
{
	for (auto &[m, c] : o.terms_) {
		auto it = terms_.find(m);
		if (it == terms_.end()) {
			terms_.emplace(m, c);
		} else {
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}
	return *this;
}

LoopElem &LoopElem::operator-=(const LoopElem &o)
{
	LoopElem t = o;
	t *= Rat(-1);
	return *this += t;
}

LoopElem &LoopElem::operator*=(const Scalar &c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[m, v] : terms_)
		v *= c;
	return *this;
}

LoopElem &LoopElem::operator*=(const Rat &c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto &[m, v] : terms_)
		v *= c;
	return *this;
}

std::string LoopElem::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[m, c] : terms_) {
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c.str() << ")";
		for (int n : m.ep)
			os << "*E+[" << n << "]";
		for (int r : m.hp)
			os << "*H[" << r << "]";
		if (m.a != 0)
			os << "*K^" << m.a;
		if (m.b != 0)
			os << "*C2^" << m.b;
		for (int n : m.em)
			os << "*E-[" << n << "]";
		for (int r : m.hm)
			os << "*H[-" << r << "]";
	}
	return os.str();
}

namespace {

int gen_class(const LoopGen &g)
{
	switch (g.kind) {
	case LoopGen::Ep:
		return 0;
	case LoopGen::H:
		return g.mode > 0 ? 1 : 4;
	case LoopGen::K:
	case LoopGen::C2:
		return 2;
	case LoopGen::Em:
		return 3;
	}
	return 5;
}

struct Pending {
	LoopWord word;
	Scalar coeff;
};

// Psi^+_l (l >= 0) as a pending-word sum in H letters (times coeffs).
// Uses a scalar-series of torsion-like polynomials; sign = +1 for Psi^+
// in H_{+d}, -1 for Psi^-_{-l} in H_{-d}.
std::vector<Pending> psi_words(int sign, int l)
{
	// exp(sign (v^{-1} - v) sum H_{sign d} z^d) | z^l
	Scalar pref = vpow(-1) - vpow(1);
	if (sign < 0)
		pref = -pref;
	TruncSeries<TorsionElem> f(l);
	for (int d = 1; d <= l; ++d) {
		TorsionElem g = TorsionElem::gen(TorGen::t, d);
		g *= pref;
		f[d] = g;
	}
	TorsionElem coeff = series_exp(f)[l];
	std::vector<Pending> out;
	for (auto &[w, c] : coeff.terms()) {
		LoopWord lw;
		for (auto &[g, d] : w.letters)
			lw.push_back({LoopGen::H, sign > 0 ? d : -d});
		out.push_back({std::move(lw), c});
	}
	return out;
}

// rewrite of the adjacent pair (x, y) at position i; the rule returns the
// replacement words for x*y
std::vector<Pending> swap_pair(const LoopGen &x, const LoopGen &y,
                               const LoopWindow &win)
{
	auto simple = [](const LoopGen &a, const LoopGen &b, Scalar c) {
		return Pending{{a, b}, std::move(c)};
	};
	std::vector<Pending> out;
	// central C^{1/2}
	if (x.kind == LoopGen::C2 || y.kind == LoopGen::C2) {
		out.push_back(simple(y, x, Scalar(1)));
		return out;
	}
	// K past E/H: K E^{+-}_n K^{-1} = v^{-+2} E^{+-}_n
	if (x.kind == LoopGen::K) {
		if (y.kind == LoopGen::Ep)
			out.push_back(simple(y, x, vpow(-2 * x.mode)));
		else if (y.kind == LoopGen::Em)
			out.push_back(simple(y, x, vpow(2 * x.mode)));
		else
			out.push_back(simple(y, x, Scalar(1))); // H
		return out;
	}
	if (y.kind == LoopGen::K) {
		if (x.kind == LoopGen::Ep)
			out.push_back(simple(y, x, vpow(2 * y.mode)));
		else if (x.kind == LoopGen::Em)
			out.push_back(simple(y, x, vpow(-2 * y.mode)));
		else
			out.push_back(simple(y, x, Scalar(1)));
		return out;
	}
	if (x.kind == LoopGen::H && y.kind == LoopGen::H) {
		// [H_r, H_s] = delta_{r+s,0} ([2r]_v/r)(C^r - C^{-r})/(v^{-1} - v)
		out.push_back(simple(y, x, Scalar(1)));
		if (x.mode + y.mode == 0) {
			int r = x.mode;
			Scalar c = two_r_over_r(r) / (vpow(-1) - vpow(1));
			// C^{r} term
			LoopWord cw1(std::abs(r) * 2, LoopGen{LoopGen::C2, r > 0 ? 1 : -1});
			LoopWord cw2(std::abs(r) * 2, LoopGen{LoopGen::C2, r > 0 ? -1 : 1});
			out.push_back({cw1, c});
			out.push_back({cw2, -c});
		}
		return out;
	}
	if (x.kind == LoopGen::H && (y.kind == LoopGen::Ep || y.kind == LoopGen::Em)) {
		// H_r E_n = E_n H_r + (sign) ([2r]_v/r) E_{n+r} C^{∓|r|/2}
		int r = x.mode;
		int n = y.mode;
		bool plus = y.kind == LoopGen::Ep;
		out.push_back(simple(y, x, Scalar(1)));
		Scalar c = two_r_over_r(r);
		if (!plus)
			c = -c;
		LoopWord w;
		if (std::abs(n + r) > win.max_mode)
			throw window_overflow("E mode " + std::to_string(n + r) +
			                      " leaves the window");
		w.push_back({plus ? LoopGen::Ep : LoopGen::Em, n + r});
		int chalf = plus ? -std::abs(r) : std::abs(r);
		for (int i = 0; i < std::abs(chalf); ++i)
			w.push_back({LoopGen::C2, chalf > 0 ? 1 : -1});
		out.push_back({std::move(w), std::move(c)});
		return out;
	}
	if ((x.kind == LoopGen::Ep || x.kind == LoopGen::Em) && y.kind == LoopGen::H) {
		// E_n H_r = H_r E_n - [H_r, E_n]
		auto rules = swap_pair(y, x, win);
		// rules[0] is H E with coefficient 1; the rest are correction terms
		std::vector<Pending> res;
		res.push_back({{y, x}, Scalar(1)});
		for (size_t i = 1; i < rules.size(); ++i) {
			Pending p = rules[i];
			p.coeff = -p.coeff;
			res.push_back(std::move(p));
		}
		return res;
	}
	if (x.kind == LoopGen::Em && y.kind == LoopGen::Ep) {
		// E^-_n E^+_m = E^+_m E^-_n - [E^+_m, E^-_n]
		int n = x.mode, m = y.mode;
		out.push_back(simple(y, x, Scalar(1)));
		Scalar pref = vpow(1) / (vpow(1) - vpow(-1));
		int l = m + n;
		// Psi^+ branch: +K, C^{(m-n)/2}
		if (l >= 0) {
			for (auto &p : psi_words(+1, l)) {
				LoopWord w = p.word;
				int chalf = m - n;
				for (int i = 0; i < std::abs(chalf); ++i)
					w.push_back({LoopGen::C2, chalf > 0 ? 1 : -1});
				w.push_back({LoopGen::K, 1});
				out.push_back({std::move(w), -(pref * p.coeff)});
			}
		}
		// Psi^- branch: -K^{-1}, C^{(n-m)/2}
		if (l <= 0) {
			for (auto &p : psi_words(-1, -l)) {
				LoopWord w = p.word;
				int chalf = n - m;
				for (int i = 0; i < std::abs(chalf); ++i)
					w.push_back({LoopGen::C2, chalf > 0 ? 1 : -1});
				w.push_back({LoopGen::K, -1});
				out.push_back({std::move(w), pref * p.coeff});
			}
		}
		return out;
	}
	if ((x.kind == LoopGen::Ep && y.kind == LoopGen::Ep) ||
	    (x.kind == LoopGen::Em && y.kind == LoopGen::Em)) {
		// same-sign reorder with the gap-2 recursion
		int a = x.mode, b = y.mode;
		int s = x.kind == LoopGen::Ep ? 1 : -1; // v^{-2s} factors
		if (a <= b)
			throw std::logic_error("swap_pair called on ordered E pair");
		auto E = [&](int mode) { return LoopGen{x.kind, mode}; };
		if (std::abs(a - 1) > win.max_mode || std::abs(b + 1) > win.max_mode)
			throw window_overflow("E mode leaves the window");
		if (a == b + 1) {
			out.push_back(simple(E(b), E(a), vpow(-2 * s)));
			return out;
		}
		// E_a E_b = v^{-2s}(E_{a-1}E_{b+1} + E_b E_a) - E_{b+1}E_{a-1}
		out.push_back({{E(b), E(a)}, vpow(-2 * s)});
		out.push_back({{E(a - 1), E(b + 1)}, vpow(-2 * s)});
		out.push_back({{E(b + 1), E(a - 1)}, Scalar(-1)});
		return out;
	}
	// remaining mixed classes commute or are already handled; the only
	// leftover is H_{-} vs H_{+} ordering handled in the H/H branch and
	// E vs E of different signs handled above.
	out.push_back(simple(y, x, Scalar(1)));
	return out;
}

// position of the first out-of-order adjacent pair, or -1 if normal
int first_violation(const LoopWord &w)
{
	for (size_t i = 0; i + 1 < w.size(); ++i) {
		const LoopGen &x = w[i], &y = w[i + 1];
		int cx = gen_class(x), cy = gen_class(y);
		if (cx > cy)
			return (int)i;
		if (cx == cy) {
			if (x.kind == LoopGen::Ep || x.kind == LoopGen::Em) {
				if (x.mode > y.mode)
					return (int)i;
			} else if (x.kind == LoopGen::H) {
				if (std::abs(x.mode) > std::abs(y.mode))
					return (int)i;
			}
		}
	}
	return -1;
}

LoopMonomial to_monomial(const LoopWord &w)
{
	LoopMonomial m;
	for (auto &g : w) {
		switch (g.kind) {
		case LoopGen::Ep:
			m.ep.push_back(g.mode);
			break;
		case LoopGen::Em:
			m.em.push_back(g.mode);
			break;
		case LoopGen::H:
			if (g.mode > 0)
				m.hp.push_back(g.mode);
			else
				m.hm.push_back(-g.mode);
			break;
		case LoopGen::K:
			m.a += g.mode;
			break;
		case LoopGen::C2:
			m.b += g.mode;
			break;
		}
	}
	return m;
}

} // namespace

LoopElem normal_form(const LoopWord &w0, const LoopWindow &win)
{
	LoopElem result;
	std::deque<Pending> queue;
	queue.push_back({w0, Scalar(1)});
	size_t fuel = 4000000;
	while (!queue.empty()) {
		Pending cur = std::move(queue.front());
		queue.pop_front();
		if (cur.coeff.is_zero())
			continue;
		int pos = first_violation(cur.word);
		if (pos < 0) {
			result += LoopElem::mono(to_monomial(cur.word), cur.coeff);
			continue;
		}
		if (fuel-- == 0)
			throw std::logic_error("straightening fuel exhausted");
		auto rules = swap_pair(cur.word[pos], cur.word[pos + 1], win);
		for (auto &r : rules) {
			Pending next;
			next.word.reserve(cur.word.size() + r.word.size());
			next.word.insert(next.word.end(), cur.word.begin(),
			                 cur.word.begin() + pos);
			next.word.insert(next.word.end(), r.word.begin(), r.word.end());
			next.word.insert(next.word.end(), cur.word.begin() + pos + 2,
			                 cur.word.end());
			next.coeff = cur.coeff * r.coeff;
			queue.push_back(std::move(next));
		}
	}
	return result;
}

LoopElem normal_form(const LoopElem &x)
{
	// already normal by construction
	return x;
}

LoopElem loop_mul(const LoopElem &a, const LoopElem &b, const LoopWindow &win)
{
	LoopElem out;
	for (auto &[ma, ca] : a.terms())
		for (auto &[mb, cb] : b.terms()) {
			LoopWord w;
			auto emit = [&](const LoopMonomial &m) {
				for (int n : m.ep)
					w.push_back({LoopGen::Ep, n});
				for (int r : m.hp)
					w.push_back({LoopGen::H, r});
				for (int i = 0; i < std::abs(m.a); ++i)
					w.push_back({LoopGen::K, m.a > 0 ? 1 : -1});
				for (int i = 0; i < std::abs(m.b); ++i)
					w.push_back({LoopGen::C2, m.b > 0 ? 1 : -1});
				for (int n : m.em)
					w.push_back({LoopGen::Em, n});
				for (int r : m.hm)
					w.push_back({LoopGen::H, -r});
			};
			emit(ma);
			emit(mb);
			LoopElem nf = normal_form(w, win);
			nf *= ca * cb;
			out += nf;
		}
	return out;
}

LoopElem psi_series(int side, int d)
{
	if (d < 0)
		throw std::domain_error("psi_series needs d >= 0");
	if (side != 1 && side != -1)
		throw std::domain_error("psi_series side must be +-1");
	if (d == 0)
		return LoopElem(1);
	LoopElem out;
	// polynomial in commuting H letters; already normal
	Scalar pref = vpow(-1) - vpow(1);
	if (side < 0)
		pref = -pref;
	TruncSeries<TorsionElem> f(d);
	for (int k = 1; k <= d; ++k) {
		TorsionElem g = TorsionElem::gen(TorGen::t, k);
		g *= pref;
		f[k] = g;
	}
	TorsionElem coeff = series_exp(f)[d];
	for (auto &[w, c] : coeff.terms()) {
		LoopMonomial m;
		for (auto &[g, k] : w.letters) {
			if (side > 0)
				m.hp.push_back(k);
			else
				m.hm.push_back(k);
		}
		out += LoopElem::mono(std::move(m), c);
	}
	return out;
}

std::string hall_dictionary(const LoopGen &g)
{
	std::ostringstream os;
	switch (g.kind) {
	case LoopGen::Ep:
		os << "oneSS+[1," << g.mode << "]";
		break;
	case LoopGen::Em:
		os << "oneSS-[1," << -g.mode << "]";
		break;
	case LoopGen::H:
		if (g.mode > 0)
			os << "tt+[" << g.mode << "]";
		else
			os << "-tt-[" << g.mode << "]";
		break;
	case LoopGen::K:
		os << (g.mode >= 0 ? "k" : "k^-1");
		break;
	case LoopGen::C2:
		os << (g.mode >= 0 ? "c^1/2" : "c^-1/2");
		break;
	}
	return os.str();
}

namespace {

// a Delta component of 1_{(1,n)}: either the identity part (1_{(1,n)}, 1)
// or (theta_l k_{(1,n-l)}, 1_{(1,n-l)})
struct DeltaComp {
	bool theta_part;    // left factor is theta_l k_{(1,j)}
	int l = 0;          // theta index (0 allowed)
	int j = 0;          // line-bundle degree of right factor / kappa index
};

std::vector<DeltaComp> delta_line_bundle(int n, int lmax)
{
	std::vector<DeltaComp> out;
	out.push_back({false, 0, n});
	for (int l = 0; l <= lmax; ++l)
		out.push_back({true, l, n - l});
	return out;
}

Scalar pic_class(const ZetaFunction &zeta)
{
	return zeta.genus() == 0 ? Scalar(1) : zeta.sym_class(1);
}

// map a torsion t-word (in minus or plus copy) to a LoopElem via the
// dictionary t^+_d = H_d C^{d/2}, t^-_d = -H_{-d} C^{-d/2}
LoopElem torsion_to_loop(const TorsionElem &x, int copy_sign)
{
	LoopElem out;
	for (auto &[w, c] : x.terms()) {
		if (w.kappa != 0)
			throw std::logic_error("unexpected kappa in torsion image");
		LoopMonomial m;
		Scalar coeff = c;
		for (auto &[g, d] : w.letters) {
			if (g != TorGen::t)
				throw std::logic_error("expected t letters");
			if (copy_sign > 0) {
				m.hp.push_back(d);
				m.b += d;
			} else {
				m.hm.push_back(d);
				m.b -= d;
				coeff = -coeff;
			}
		}
		std::sort(m.hp.begin(), m.hp.end());
		std::sort(m.hm.begin(), m.hm.end());
		out += LoopElem::mono(std::move(m), coeff);
	}
	return out;
}

} // namespace

LoopElem cross_commutator_oracle(int m, int n, const ZetaFunction &zeta)
{
	// work with the line-bundle labels: E^+_m = 1^+_{(1,m)},
	// E^-_n = 1^-_{(1,-n)}
	int N = -n;
	int lmax = std::abs(m - N) + 2;
	auto da = delta_line_bundle(N, lmax); // a = 1_{(1,N)}, minus copy
	auto db = delta_line_bundle(m, lmax); // b = 1_{(1,m)}, plus copy
	Scalar pic = pic_class(zeta);
	Scalar line_pair = pic / (Scalar::L() - Scalar(1));

	// [b^+, a^-] = sum over the axiom, with the pure cross products
	// cancelling against the two sides; collect the kappa/theta terms.
	LoopElem out;
	// LHS terms a^-_(1) b^+_(2) (a_(2), b_(1)) with a_(1) a theta part and
	// b_(1) the full line bundle: contributes on the [..] = LHS - RHS move
	for (auto &ca : da) {
		if (!ca.theta_part)
			continue;
		// pairing (1_{(1,ca.j)}, 1_{(1,m)})
		if (ca.j != m)
			continue;
		// term (theta_l k_{(1,m)})^- * 1  with l = N - m
		TorsionElem th = theta_in_t(ca.l, ThetaConvention::bs);
		LoopElem img = torsion_to_loop(th, -1);
		// kappa of the minus copy identifies with the inverse:
		// k^-_{(1,m)} = (K C^m)^{-1}
		LoopElem kpart = LoopElem::mono(LoopMonomial{{}, {}, -1, -2 * m, {}, {}});
		LoopElem term = loop_mul(img, kpart);
		term *= line_pair;
		out += term;
	}
	// RHS terms b^+_(1) a^-_(2) (a_(1), b_(2)) with b_(1) a theta part:
	for (auto &cb : db) {
		if (!cb.theta_part)
			continue;
		if (cb.j != N)
			continue;
		TorsionElem th = theta_in_t(cb.l, ThetaConvention::bs);
		LoopElem img = torsion_to_loop(th, +1);
		LoopElem kpart = LoopElem::mono(LoopMonomial{{}, {}, 1, 2 * N, {}, {}});
		LoopElem term = loop_mul(img, kpart);
		term *= line_pair;
		term *= Rat(-1);
		out += term;
	}
	return out;
}

LoopWord word_Ep(int n) { return {LoopGen{LoopGen::Ep, n}}; }
LoopWord word_Em(int n) { return {LoopGen{LoopGen::Em, n}}; }
LoopWord word_H(int r)
{
	if (r == 0)
		throw std::domain_error("H index must be nonzero");
	return {LoopGen{LoopGen::H, r}};
}
LoopWord word_K(int power)
{
	LoopWord w;
	for (int i = 0; i < std::abs(power); ++i)
		w.push_back({LoopGen::K, power > 0 ? 1 : -1});
	return w;
}
LoopWord word_C2(int halfpower)
{
	LoopWord w;
	for (int i = 0; i < std::abs(halfpower); ++i)
		w.push_back({LoopGen::C2, halfpower > 0 ? 1 : -1});
	return w;
}

LoopWord operator+(const LoopWord &a, const LoopWord &b)
{
	LoopWord w = a;
	w.insert(w.end(), b.begin(), b.end());
	return w;
}

} // namespace ehall
