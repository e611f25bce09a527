#pragma once

#include "ehall/motive.hpp"
#include "ehall/scalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace ehall {

// Letters of free words in the loop-sl2 double.
struct LoopGen {
	enum Kind : uint8_t { Ep, Em, H, K, C2 } kind;
	// Ep/Em: mode n; H: index r != 0 (sign = which Heisenberg half);
	// K: power +-1; C2: half-power +-1 of C^{1/2}
	int mode = 0;
	auto operator<=>(const LoopGen &) const = default;
};

using LoopWord = std::vector<LoopGen>;

// PBW monomial E^+_{ep} H_{hp} K^a C^{b/2} E^-_{em} H_{-hm}
struct LoopMonomial {
	std::vector<int> ep; // weakly increasing modes
	std::vector<int> hp; // positive H indices, weakly increasing
	int a = 0;           // K^a
	int b = 0;           // C^{b/2}
	std::vector<int> em; // weakly increasing modes
	std::vector<int> hm; // H_{-r} indices r, weakly increasing
	auto operator<=>(const LoopMonomial &) const = default;
};

class LoopElem {
public:
	using Terms = std::map<LoopMonomial, Scalar>;

	LoopElem() = default;
	LoopElem(long c)
	{
		if (c != 0)
			terms_[LoopMonomial{}] = Scalar(c);
	}
	static LoopElem mono(LoopMonomial m, Scalar c = Scalar(1));

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	LoopElem &operator+=(const LoopElem &o);
	LoopElem &operator-=(const LoopElem &o);
	friend LoopElem operator+(LoopElem a, const LoopElem &b) { return a += b; }
	friend LoopElem operator-(LoopElem a, const LoopElem &b) { return a -= b; }
	LoopElem &operator*=(const Scalar &c);
	LoopElem &operator*=(const Rat &c);
	bool operator==(const LoopElem &o) const = default;

	std::string str() const;

private:
	Terms terms_;
};

struct LoopWindow {
	int max_mode = 48; // |E modes| and H indices of intermediates
};

// thrown when straightening leaves the configured mode window
struct window_overflow : std::runtime_error {
	explicit window_overflow(const std::string &what)
	    : std::runtime_error(what)
	{
	}
};

// Straighten a free word into the PBW normal form.
LoopElem normal_form(const LoopWord &w, const LoopWindow &win = {});
LoopElem normal_form(const LoopElem &sum_of_words);

// product via concatenation + straightening
LoopElem loop_mul(const LoopElem &a, const LoopElem &b,
                  const LoopWindow &win = {});

// Psi^{side}_{side*d} as a polynomial in H; zero for the wrong sign.
// side = +1 or -1; d >= 0.
LoopElem psi_series(int side, int d);

// Hall-side vocabulary for a generator symbol; returns the display name.
std::string hall_dictionary(const LoopGen &g);

// [E^+_m, E^-_n] computed from the Drinfeld-double axiom: coproducts of
// the line-bundle classes and the Hopf pairings only.
LoopElem cross_commutator_oracle(int m, int n,
                                 const ZetaFunction &zeta = ZetaFunction::p1());

// convenience builders
LoopWord word_Ep(int n);
LoopWord word_Em(int n);
LoopWord word_H(int r);
LoopWord word_K(int power = 1);
LoopWord word_C2(int halfpower = 1);
LoopWord operator+(const LoopWord &a, const LoopWord &b); // concatenation

} // namespace ehall
