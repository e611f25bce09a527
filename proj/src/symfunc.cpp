#include "ehall/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ehall {

int weight(const Partition &p)
{
	int w = 0;
	for (int x : p)
		w += x;
	return w;
}

const std::vector<Partition> &partitions_of(int n)
{
	static std::mutex mu;
	static std::map<int, std::vector<Partition>> cache;
	std::lock_guard<std::mutex> lock(mu);
	auto it = cache.find(n);
	if (it != cache.end())
		return it->second;
	std::vector<Partition> out;
	Partition cur;
	std::function<void(int, int)> rec = [&](int rem, int maxpart) {
		if (rem == 0) {
			out.push_back(cur);
			return;
		}
		for (int k = std::min(rem, maxpart); k >= 1; --k) {
			cur.push_back(k);
			rec(rem - k, k);
			cur.pop_back();
		}
	};
	if (n >= 0)
		rec(n, n == 0 ? 1 : n);
	return cache.emplace(n, std::move(out)).first->second;
}

bool dominates(const Partition &a, const Partition &b)
{
	int pa = 0, pb = 0;
	size_t n = std::max(a.size(), b.size());
	for (size_t i = 0; i < n; ++i) {
		pa += i < a.size() ? a[i] : 0;
		pb += i < b.size() ? b[i] : 0;
		if (pa < pb)
			return false;
	}
	return true;
}

SymElem SymElem::p(int n)
{
	if (n < 1)
		throw std::domain_error("p_n needs n >= 1");
	return p_mono({n});
}

SymElem SymElem::p_mono(Partition l, Scalar c)
{
	std::sort(l.begin(), l.end(), std::greater<int>());
	SymElem r;
	if (!c.is_zero())
		r.terms_[std::move(l)] = std::move(c);
	return r;
}

SymElem &SymElem::operator+=(const SymElem &o)
{
	for (auto &[l, c] : o.terms_) {
		auto it = terms_.find(l);
		if (it == terms_.end()) {
			terms_.emplace(l, c);
		} else {
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}
	return *this;
}

SymElem &SymElem::operator-=(const SymElem &o)
{
	SymElem neg = o;
	neg *= Rat(-1);
	return *this += neg;
}

SymElem operator*(const SymElem &a, const SymElem &b)
{
	SymElem r;
	for (auto &[la, ca] : a.terms()) {
		for (auto &[lb, cb] : b.terms()) {
			Partition l = la;
			l.insert(l.end(), lb.begin(), lb.end());
			std::sort(l.begin(), l.end(), std::greater<int>());
			auto it = r.terms_.find(l);
			Scalar c = ca * cb;
			if (it == r.terms_.end()) {
				r.terms_.emplace(std::move(l), std::move(c));
			} else {
				it->second += c;
				if (it->second.is_zero())
					r.terms_.erase(it);
			}
		}
	}
	return r;
}

SymElem &SymElem::operator*=(const Scalar &c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[l, v] : terms_)
		v *= c;
	return *this;
}

SymElem &SymElem::operator*=(const Rat &c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto &[l, v] : terms_)
		v *= c;
	return *this;
}

bool SymElem::homogeneous_of_weight(int w) const
{
	for (auto &[l, c] : terms_)
		if (weight(l) != w)
			return false;
	return true;
}

namespace {

// e_n and h_n in the p basis via the Newton recursions:
//   n e_n = sum_{k=1..n} (-1)^{k-1} p_k e_{n-k}
//   n h_n = sum_{k=1..n} p_k h_{n-k}
const SymElem &e_in_p(int n)
{
	static std::mutex mu;
	static std::vector<SymElem> cache{SymElem(1)};
	std::lock_guard<std::mutex> lock(mu);
	while ((int)cache.size() <= n) {
		int m = (int)cache.size();
		SymElem acc;
		for (int k = 1; k <= m; ++k) {
			SymElem t = SymElem::p(k) * cache[m - k];
			t *= Rat(k % 2 == 1 ? 1 : -1, m);
			acc += t;
		}
		cache.push_back(std::move(acc));
	}
	return cache[n];
}

const SymElem &h_in_p(int n)
{
	static std::mutex mu;
	static std::vector<SymElem> cache{SymElem(1)};
	std::lock_guard<std::mutex> lock(mu);
	while ((int)cache.size() <= n) {
		int m = (int)cache.size();
		SymElem acc;
		for (int k = 1; k <= m; ++k) {
			SymElem t = SymElem::p(k) * cache[m - k];
			t *= Rat(1, m);
			acc += t;
		}
		cache.push_back(std::move(acc));
	}
	return cache[n];
}

// number of maps from the parts of mu (as positions) onto the positions of
// lambda such that the parts mapped to position k sum to lambda_k
Int count_r(const Partition &mu, const Partition &la)
{
	// DP over parts of mu, state = remaining sums of lambda positions
	std::map<std::vector<int>, Int> states;
	states[std::vector<int>(la.begin(), la.end())] = 1;
	for (int part : mu) {
		std::map<std::vector<int>, Int> next;
		for (auto &[rem, cnt] : states) {
			for (size_t k = 0; k < rem.size(); ++k) {
				if (rem[k] < part)
					continue;
				auto r2 = rem;
				r2[k] -= part;
				next[r2] += cnt;
			}
		}
		states = std::move(next);
	}
	std::vector<int> zero(la.size(), 0);
	auto it = states.find(zero);
	return it == states.end() ? Int(0) : it->second;
}

// p_mu in the m basis: p_mu = sum_lambda R[mu][lambda] m_lambda
// m_lambda in the p basis is obtained by inverting the graded matrix.
const std::map<Partition, SymElem> &m_in_p_table(int n)
{
	static std::mutex mu_;
	static std::map<int, std::map<Partition, SymElem>> cache;
	std::lock_guard<std::mutex> lock(mu_);
	auto it = cache.find(n);
	if (it != cache.end())
		return it->second;

	const auto &parts = partitions_of(n);
	int N = (int)parts.size();
	// R[i][j] = coefficient of m_{parts[j]} in p_{parts[i]}
	std::vector<std::vector<Rat>> R(N, std::vector<Rat>(N, Rat(0)));
	for (int i = 0; i < N; ++i)
		for (int j = 0; j < N; ++j)
			R[i][j] = Rat(count_r(parts[i], parts[j]));
	// invert R over Q (it is invertible: both are graded bases)
	std::vector<std::vector<Rat>> A = R,
	    Inv(N, std::vector<Rat>(N, Rat(0)));
	for (int i = 0; i < N; ++i)
		Inv[i][i] = 1;
	for (int col = 0; col < N; ++col) {
		int piv = -1;
		for (int r = col; r < N; ++r)
			if (A[r][col] != 0) {
				piv = r;
				break;
			}
		if (piv < 0)
			throw std::logic_error("singular p->m transition");
		std::swap(A[col], A[piv]);
		std::swap(Inv[col], Inv[piv]);
		Rat d = A[col][col];
		for (int c = 0; c < N; ++c) {
			A[col][c] /= d;
			Inv[col][c] /= d;
		}
		for (int r = 0; r < N; ++r) {
			if (r == col || A[r][col] == 0)
				continue;
			Rat f = A[r][col];
			for (int c = 0; c < N; ++c) {
				A[r][c] -= f * A[col][c];
				Inv[r][c] -= f * Inv[col][c];
			}
		}
	}
	// column j of R is m_{parts[j]} expressed in... careful: p_i = sum_j
	// R[i][j] m_j, so m_j = sum_i Inv[j][i]... we need m in p:
	// writing vectors in the m basis: p-basis vector i has m-coords R[i][*].
	// m_j = sum_i C[j][i] p_i with C = R^{-1} transposed appropriately:
	// sum_i C[j][i] R[i][k] = delta_{jk}, i.e. C = R^{-1} acting on the left.
	std::map<Partition, SymElem> table;
	for (int j = 0; j < N; ++j) {
		SymElem acc;
		for (int i = 0; i < N; ++i) {
			if (Inv[j][i] == 0)
				continue;
			acc += SymElem::p_mono(parts[i], Scalar(Inv[j][i]));
		}
		table.emplace(parts[j], std::move(acc));
	}
	return cache.emplace(n, std::move(table)).first->second;
}

} // namespace

SymElem SymElem::e(int n)
{
	if (n < 0)
		throw std::domain_error("e_n needs n >= 0");
	return e_in_p(n);
}

SymElem SymElem::h(int n)
{
	if (n < 0)
		throw std::domain_error("h_n needs n >= 0");
	return h_in_p(n);
}

SymElem SymElem::m(const Partition &l)
{
	Partition s = l;
	std::sort(s.begin(), s.end(), std::greater<int>());
	if (s.empty())
		return SymElem(1);
	const auto &tab = m_in_p_table(weight(s));
	return tab.at(s);
}

std::map<Partition, Scalar> SymElem::in_basis(char basis) const
{
	std::map<Partition, Scalar> out;
	if (basis == 'p') {
		for (auto &[l, c] : terms_)
			out[l] = c;
		return out;
	}
	if (basis != 'e' && basis != 'h' && basis != 'm')
		throw std::domain_error("unsupported basis tag");
	// split into graded pieces and solve the triangular-ish systems
	std::map<int, SymElem> graded;
	for (auto &[l, c] : terms_) {
		SymElem t = SymElem::p_mono(l, c);
		graded[weight(l)] += t;
	}
	for (auto &[w, piece] : graded) {
		const auto &parts = partitions_of(w);
		int N = (int)parts.size();
		// columns: basis vectors in p coordinates
		std::vector<SymElem> cols(N);
		for (int j = 0; j < N; ++j) {
			if (basis == 'm') {
				cols[j] = SymElem::m(parts[j]);
			} else {
				SymElem prod(1);
				for (int part : parts[j])
					prod = prod * (basis == 'e' ? e_in_p(part)
					                            : h_in_p(part));
				cols[j] = prod;
			}
		}
		// solve sum_j x_j cols[j] = piece by Gaussian elimination over
		// the p-monomial coordinates (rational matrix, Scalar rhs)
		std::vector<Partition> rows = parts;
		std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N, Rat(0)));
		std::vector<Scalar> b(N);
		for (int j = 0; j < N; ++j)
			for (auto &[l, c] : cols[j].terms()) {
				int r = (int)(std::find(rows.begin(), rows.end(), l) -
				              rows.begin());
				// conversion matrices are rational numbers
				if (!c.den().is_one() || !c.num().is_constant())
					throw std::logic_error("non-rational transition");
				A[r][j] = c.num().is_zero()
				              ? Rat(0)
				              : c.num().terms().begin()->second;
			}
		for (int r = 0; r < N; ++r) {
			auto it = piece.terms_.find(rows[r]);
			b[r] = it == piece.terms_.end() ? Scalar(0) : it->second;
		}
		// elimination
		std::vector<int> pivot_of_col(N, -1);
		int row = 0;
		for (int col = 0; col < N && row < N; ++col) {
			int piv = -1;
			for (int r = row; r < N; ++r)
				if (A[r][col] != 0) {
					piv = r;
					break;
				}
			if (piv < 0)
				continue;
			std::swap(A[row], A[piv]);
			std::swap(b[row], b[piv]);
			Rat d = A[row][col];
			for (int c2 = 0; c2 < N; ++c2)
				A[row][c2] /= d;
			b[row] *= Rat(1) / d;
			for (int r = 0; r < N; ++r) {
				if (r == row || A[r][col] == 0)
					continue;
				Rat f = A[r][col];
				for (int c2 = 0; c2 < N; ++c2)
					A[r][c2] -= f * A[row][c2];
				Scalar t = b[row];
				t *= -f;
				b[r] += t;
			}
			pivot_of_col[col] = row;
			++row;
		}
		for (int col = 0; col < N; ++col) {
			int r = pivot_of_col[col];
			if (r < 0)
				continue;
			if (!b[r].is_zero())
				out[parts[col]] = b[r];
		}
	}
	return out;
}

SymElem SymElem::from_basis(char basis, const std::map<Partition, Scalar> &coeffs)
{
	SymElem acc;
	for (auto &[l, c] : coeffs) {
		SymElem v;
		if (basis == 'p') {
			v = SymElem::p_mono(l, Scalar(1));
		} else if (basis == 'm') {
			v = SymElem::m(l);
		} else if (basis == 'e' || basis == 'h') {
			v = SymElem(1);
			for (int part : l)
				v = v * (basis == 'e' ? SymElem::e(part)
				                      : SymElem::h(part));
		} else {
			throw std::domain_error("unsupported basis tag");
		}
		v *= c;
		acc += v;
	}
	return acc;
}

std::string SymElem::str(char basis) const
{
	auto coeffs = in_basis(basis);
	if (coeffs.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[l, c] : coeffs) {
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c.str() << ")*" << basis << "[";
		for (size_t i = 0; i < l.size(); ++i)
			os << (i ? "," : "") << l[i];
		os << "]";
	}
	return os.str();
}

SymPair coproduct(const SymElem &x)
{
	SymPair out;
	for (auto &[l, c] : x.terms()) {
		// product over parts of (p_k (x) 1 + 1 (x) p_k)
		std::map<std::pair<Partition, Partition>, Rat> acc;
		acc[{{}, {}}] = 1;
		for (int part : l) {
			std::map<std::pair<Partition, Partition>, Rat> next;
			for (auto &[pr, cnt] : acc) {
				auto left = pr;
				left.first.push_back(part);
				std::sort(left.first.begin(), left.first.end(),
				          std::greater<int>());
				next[left] += cnt;
				auto right = pr;
				right.second.push_back(part);
				std::sort(right.second.begin(), right.second.end(),
				          std::greater<int>());
				next[right] += cnt;
			}
			acc = std::move(next);
		}
		for (auto &[pr, cnt] : acc) {
			Scalar v = c;
			v *= cnt;
			auto it = out.find(pr);
			if (it == out.end()) {
				out.emplace(pr, v);
			} else {
				it->second += v;
				if (it->second.is_zero())
					out.erase(it);
			}
		}
	}
	return out;
}

namespace {

// pairing of p-monomials by the coproduct recursion
Scalar pair_mono(const Partition &a, const Partition &b, const Scalar &q)
{
	if (a.empty())
		return b.empty() ? Scalar(1) : Scalar(0);
	if (weight(a) != weight(b))
		return Scalar(0);
	// strip the first part of a: (p_k * rest, y) = (p_k (x) rest, Delta y)
	int k = a.front();
	Partition rest(a.begin() + 1, a.end());
	// Delta(p_mono(b)) restricted to left factors equal to p_k: choose
	// one part of b equal to k into the left slot (with multiplicity).
	int mult = 0;
	for (int part : b)
		if (part == k)
			++mult;
	if (mult == 0)
		return Scalar(0);
	Partition b_rest;
	bool removed = false;
	for (int part : b) {
		if (!removed && part == k) {
			removed = true;
			continue;
		}
		b_rest.push_back(part);
	}
	Scalar base = Scalar(Rat(k)) / (q.pow(k) - Scalar(1));
	Scalar r = base * pair_mono(rest, b_rest, q);
	r *= Rat(mult);
	return r;
}

} // namespace

Scalar hopf_pairing(const SymElem &x, const SymElem &y, const Scalar &q)
{
	Scalar acc(0);
	for (auto &[la, ca] : x.terms())
		for (auto &[lb, cb] : y.terms()) {
			Scalar p = pair_mono(la, lb, q);
			if (p.is_zero())
				continue;
			acc += ca * cb * p;
		}
	return acc;
}

SymElem hall_littlewood(const Partition &l, const Scalar &q)
{
	Partition target = l;
	std::sort(target.begin(), target.end(), std::greater<int>());
	int n = weight(target);
	if (n == 0)
		return SymElem(1);
	// ascending lex is a linear extension of dominance from below
	std::vector<Partition> order = partitions_of(n);
	std::sort(order.begin(), order.end());
	std::vector<SymElem> built;
	for (const auto &mu : order) {
		SymElem v = SymElem::m(mu);
		for (const auto &w : built) {
			Scalar num = hopf_pairing(v, w, q);
			if (num.is_zero())
				continue;
			Scalar den = hopf_pairing(w, w, q);
			SymElem t = w;
			t *= -(num / den);
			v += t;
		}
		if (mu == target)
			return v;
		built.push_back(std::move(v));
	}
	throw std::logic_error("partition not found at its own weight");
}

} // namespace ehall
