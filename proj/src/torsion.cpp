#include "ehall/torsion.hpp"

#include "ehall/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ehall {

TorsionElem TorsionElem::gen(TorGen g, int d, Scalar c)
{
	if (d < (g == TorGen::theta ? 0 : 1))
		throw std::domain_error("torsion generator degree out of range");
	TorsionElem r;
	if (g == TorGen::theta && d == 0)
		return TorsionElem(1);
	TorWord w;
	w.letters.push_back({g, d});
	if (!c.is_zero())
		r.terms_[std::move(w)] = std::move(c);
	return r;
}

TorsionElem TorsionElem::kappa(int m, Scalar c)
{
	TorsionElem r;
	TorWord w;
	w.kappa = m;
	if (!c.is_zero())
		r.terms_[std::move(w)] = std::move(c);
	return r;
}

TorsionElem TorsionElem::word(TorWord w, Scalar c)
{
	TorsionElem r;
	std::sort(w.letters.begin(), w.letters.end());
	if (!c.is_zero())
		r.terms_[std::move(w)] = std::move(c);
	return r;
}

TorsionElem &TorsionElem::operator+=(const TorsionElem &o)
{
	for (auto &[w, c] : o.terms_) {
		auto it = terms_.find(w);
		if (it == terms_.end()) {
			terms_.emplace(w, c);
		} else {
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}
	return *this;
}

TorsionElem &TorsionElem::operator-=(const TorsionElem &o)
{
	TorsionElem t = o;
	t *= Rat(-1);
	return *this += t;
}

TorsionElem operator*(const TorsionElem &a, const TorsionElem &b)
{
	TorsionElem r;
	for (auto &[wa, ca] : a.terms())
		for (auto &[wb, cb] : b.terms()) {
			TorWord w = wa;
			w.letters.insert(w.letters.end(), wb.letters.begin(),
			                 wb.letters.end());
			std::sort(w.letters.begin(), w.letters.end());
			w.kappa += wb.kappa;
			Scalar c = ca * cb;
			auto it = r.terms_.find(w);
			if (it == r.terms_.end()) {
				r.terms_.emplace(std::move(w), std::move(c));
			} else {
				it->second += c;
				if (it->second.is_zero())
					r.terms_.erase(it);
			}
		}
	return r;
}

TorsionElem &TorsionElem::operator*=(const Scalar &c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[w, v] : terms_)
		v *= c;
	return *this;
}

TorsionElem &TorsionElem::operator*=(const Rat &c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto &[w, v] : terms_)
		v *= c;
	return *this;
}

std::string TorsionElem::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[w, c] : terms_) {
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c.str() << ")";
		for (auto &[g, d] : w.letters) {
			switch (g) {
			case TorGen::t:
				os << "*t[" << d << "]";
				break;
			case TorGen::one:
				os << "*one[0," << d << "]";
				break;
			case TorGen::theta:
				os << "*theta[" << d << "]";
				break;
			}
		}
		if (w.kappa != 0)
			os << "*k[0," << w.kappa << "]";
	}
	return os.str();
}

namespace {

// series whose d-th coefficient is the substitution polynomial
TruncSeries<TorsionElem> t_exp_series(int order)
{
	TruncSeries<TorsionElem> f(order);
	for (int d = 1; d <= order; ++d) {
		TorsionElem g = TorsionElem::gen(TorGen::t, d);
		g *= quantum_integer(d).inverse();
		f[d] = g;
	}
	return series_exp(f);
}

} // namespace

TorsionElem one_in_t(int d)
{
	if (d < 0)
		throw std::domain_error("one[0,d] needs d >= 0");
	if (d == 0)
		return TorsionElem(1);
	return t_exp_series(d)[d];
}

TorsionElem t_in_one(int d)
{
	if (d < 1)
		throw std::domain_error("t_d needs d >= 1");
	TruncSeries<TorsionElem> f(d, TorsionElem(1));
	for (int k = 1; k <= d; ++k)
		f[k] = TorsionElem::gen(TorGen::one, k);
	TorsionElem r = series_log(f)[d];
	r *= quantum_integer(d);
	return r;
}

TorsionElem theta_in_t(int l, ThetaConvention conv)
{
	if (l < 0)
		throw std::domain_error("theta_l needs l >= 0");
	if (l == 0)
		return TorsionElem(1);
	Scalar pref = Scalar::sqrtL_pow(1) - Scalar::sqrtL_pow(-1);
	TruncSeries<TorsionElem> f(l);
	for (int d = 1; d <= l; ++d) {
		TorsionElem g = TorsionElem::gen(TorGen::t, d);
		g *= conv == ThetaConvention::bs
		         ? pref
		         : pref * quantum_integer(d).inverse();
		f[d] = g;
	}
	return series_exp(f)[l];
}

TorsionElem expand_to_t(const TorsionElem &x, ThetaConvention conv)
{
	TorsionElem out;
	for (auto &[w, c] : x.terms()) {
		TorsionElem prod = TorsionElem::kappa(w.kappa, c);
		for (auto &[g, d] : w.letters) {
			switch (g) {
			case TorGen::t:
				prod = prod * TorsionElem::gen(TorGen::t, d);
				break;
			case TorGen::one:
				prod = prod * one_in_t(d);
				break;
			case TorGen::theta:
				prod = prod * theta_in_t(d, conv);
				break;
			}
		}
		out += prod;
	}
	return out;
}

TorsionElem convert_t_one(const TorsionElem &x, ConvertDirection dir,
                          ThetaConvention conv)
{
	if (dir == ConvertDirection::one_to_t)
		return expand_to_t(x, conv);
	TorsionElem in_t = expand_to_t(x, conv);
	TorsionElem out;
	for (auto &[w, c] : in_t.terms()) {
		TorsionElem prod = TorsionElem::kappa(w.kappa, c);
		for (auto &[g, d] : w.letters)
			prod = prod * t_in_one(d);
		out += prod;
	}
	return out;
}

namespace {

Scalar t_norm(int d, const ZetaFunction &zeta)
{
	Scalar qd = quantum_integer(d);
	return qd * qd * zeta.log_class(d) /
	       ((Scalar::L(d) - Scalar(1)) * Scalar(d));
}

// Gram value of two t-monomials (multisets of degrees)
Scalar gram(const std::vector<int> &a, const std::vector<int> &b,
            const ZetaFunction &zeta)
{
	if (a != b)
		return Scalar(0);
	Scalar r(1);
	std::map<int, int> mult;
	for (int d : a) {
		r *= t_norm(d, zeta);
		mult[d]++;
	}
	for (auto &[d, m] : mult) {
		Rat f(1);
		for (int i = 2; i <= m; ++i)
			f *= i;
		r *= f;
	}
	return r;
}

} // namespace

Scalar torsion_pairing(const TorsionElem &a, const TorsionElem &b,
                       const ZetaFunction &zeta, ThetaConvention conv)
{
	TorsionElem ta = expand_to_t(a, conv);
	TorsionElem tb = expand_to_t(b, conv);
	Scalar acc(0);
	for (auto &[wa, ca] : ta.terms())
		for (auto &[wb, cb] : tb.terms()) {
			// vertical kappa weights do not twist the pairing
			std::vector<int> da, db;
			for (auto &[g, d] : wa.letters)
				da.push_back(d);
			for (auto &[g, d] : wb.letters)
				db.push_back(d);
			Scalar g = gram(da, db, zeta);
			if (g.is_zero())
				continue;
			acc += ca * cb * g;
		}
	return acc;
}

TorPair torsion_coproduct(const TorsionElem &a, ThetaConvention conv)
{
	TorsionElem ta = expand_to_t(a, conv);
	TorPair out;
	for (auto &[w, c] : ta.terms()) {
		std::map<std::pair<TorWord, TorWord>, Scalar> acc;
		TorWord k0;
		k0.kappa = w.kappa;
		// Delta(k_{(0,m)}) = k_{(0,m)} (x) k_{(0,m)}
		acc[{k0, k0}] = c;
		for (auto &[g, d] : w.letters) {
			std::map<std::pair<TorWord, TorWord>, Scalar> next;
			for (auto &[pr, cc] : acc) {
				// t_d (x) 1
				auto left = pr;
				left.first.letters.push_back({TorGen::t, d});
				std::sort(left.first.letters.begin(),
				          left.first.letters.end());
				next[left] += cc;
				// k_{(0,d)} (x) t_d
				auto right = pr;
				right.first.kappa += d;
				right.second.letters.push_back({TorGen::t, d});
				std::sort(right.second.letters.begin(),
				          right.second.letters.end());
				next[right] += cc;
			}
			for (auto it = next.begin(); it != next.end();)
				it = it->second.is_zero() ? next.erase(it) : std::next(it);
			acc = std::move(next);
		}
		for (auto &[pr, cc] : acc)
			out[pr] += cc;
	}
	for (auto it = out.begin(); it != out.end();)
		it = it->second.is_zero() ? out.erase(it) : std::next(it);
	return out;
}

SymElem steinitz_embed(const LocalWord &w, int deg_x)
{
	SymElem r(1);
	for (int d : w) {
		SymElem e = SymElem::e(d);
		e *= Scalar::L(deg_x).pow(-d * (d - 1) / 2);
		r = r * e;
	}
	return r;
}

std::map<std::pair<LocalWord, LocalWord>, Scalar>
local_coproduct(const LocalWord &w, int deg_x)
{
	Scalar Lx = Scalar::L(deg_x);
	std::map<std::pair<LocalWord, LocalWord>, Scalar> acc;
	acc[{{}, {}}] = Scalar(1);
	for (int d : w) {
		std::map<std::pair<LocalWord, LocalWord>, Scalar> next;
		for (auto &[pr, c] : acc) {
			for (int r = 0; r <= d; ++r) {
				auto key = pr;
				if (r > 0) {
					key.first.push_back(r);
					std::sort(key.first.begin(), key.first.end());
				}
				if (d - r > 0) {
					key.second.push_back(d - r);
					std::sort(key.second.begin(), key.second.end());
				}
				next[key] += c * Lx.pow(-r * (d - r));
			}
		}
		acc = std::move(next);
	}
	return acc;
}

namespace {

// generator pairing (e_{n,x}, e_{n,x}) = 1/[GL_n] over the residue field;
// the Green pairing is 1/[Aut] and Aut(k_x^n) = GL_n
Scalar e_norm(int n, int deg_x)
{
	Scalar Lx = Scalar::L(deg_x);
	Scalar r = Lx.pow(n * (n - 1) / 2);
	for (int k = 1; k <= n; ++k)
		r *= Lx.pow(k) - Scalar(1);
	return r.inverse();
}

// (e_k, e-word) via Delta(e_k) against the letters of the word
Scalar single_vs_word(int k, const LocalWord &w, int deg_x)
{
	if (w.empty())
		return k == 0 ? Scalar(1) : Scalar(0);
	int j = w.front();
	if (j > k)
		return Scalar(0);
	LocalWord rest(w.begin() + 1, w.end());
	Scalar twist = Scalar::L(deg_x).pow(-j * (k - j));
	return twist * e_norm(j, deg_x) * single_vs_word(k - j, rest, deg_x);
}

} // namespace

Scalar local_pairing(const LocalWord &a, const LocalWord &b, int deg_x)
{
	if (a.empty())
		return b.empty() ? Scalar(1) : Scalar(0);
	int wa = 0, wb = 0;
	for (int d : a)
		wa += d;
	for (int d : b)
		wb += d;
	if (wa != wb)
		return Scalar(0);
	// strip the first letter of a through the coproduct of b
	int k = a.front();
	LocalWord rest(a.begin() + 1, a.end());
	Scalar acc(0);
	for (auto &[pr, c] : local_coproduct(b, deg_x)) {
		int w1 = 0;
		for (int d : pr.first)
			w1 += d;
		if (w1 != k)
			continue;
		Scalar head = single_vs_word(k, pr.first, deg_x);
		if (head.is_zero())
			continue;
		acc += c * head * local_pairing(rest, pr.second, deg_x);
	}
	return acc;
}

SymElem local_t(int d, int deg_x)
{
	if (d < 1 || deg_x < 1)
		throw std::domain_error("local_t needs d, deg_x >= 1");
	if (d % deg_x != 0)
		return SymElem();
	SymElem p = SymElem::p(d / deg_x);
	p *= quantum_integer(d) * Scalar(Rat(deg_x, d));
	return p;
}

} // namespace ehall
