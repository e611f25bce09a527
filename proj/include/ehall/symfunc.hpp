#pragma once

#include "ehall/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace ehall {

// weakly decreasing list of positive parts
using Partition = std::vector<int>;

int weight(const Partition &p);
const std::vector<Partition> &partitions_of(int n);
// dominance order; both of the same weight
bool dominates(const Partition &a, const Partition &b);

// Element of Lambda_q, stored in the power-sum basis.
class SymElem {
public:
	using Terms = std::map<Partition, Scalar>;

	SymElem() = default;
	SymElem(long c)
	{
		if (c != 0)
			terms_[{}] = Scalar(c);
	}

	static SymElem p(int n);           // power sum p_n, n >= 1
	static SymElem p_mono(Partition l, Scalar c = Scalar(1));
	static SymElem e(int n);           // elementary e_n, n >= 0
	static SymElem h(int n);           // complete homogeneous h_n, n >= 0
	static SymElem m(const Partition &l); // monomial symmetric function

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	SymElem &operator+=(const SymElem &o);
	SymElem &operator-=(const SymElem &o);
	friend SymElem operator+(SymElem a, const SymElem &b) { return a += b; }
	friend SymElem operator-(SymElem a, const SymElem &b) { return a -= b; }
	friend SymElem operator*(const SymElem &a, const SymElem &b);
	SymElem &operator*=(const Scalar &c);
	SymElem &operator*=(const Rat &c);
	bool operator==(const SymElem &o) const = default;

	// true if every p-monomial has total weight w
	bool homogeneous_of_weight(int w) const;

	// coefficients in the e / h / m / p basis (exact, graded piece by piece)
	std::map<Partition, Scalar> in_basis(char basis) const;
	// build an element from coefficients in a named basis
	static SymElem from_basis(char basis,
	                          const std::map<Partition, Scalar> &coeffs);

	std::string str(char basis = 'p') const;

private:
	Terms terms_; // no zero coefficients
};

// tensor square, used by the coproduct
using SymPair = std::map<std::pair<Partition, Partition>, Scalar>;

// coproduct: algebra map with Delta(p_n) = p_n (x) 1 + 1 (x) p_n
SymPair coproduct(const SymElem &x);

// Hopf pairing with (p_m, p_n) = delta_{m,n} n/(q^n - 1), extended to
// products through the coproduct recursion.
Scalar hopf_pairing(const SymElem &x, const SymElem &y, const Scalar &q);

// Hall-Littlewood basis element: orthogonalization of the monomial basis
// in dominance order, unitriangular normalization.
SymElem hall_littlewood(const Partition &l, const Scalar &q);

} // namespace ehall
