#pragma once

#include "ehall/gamma.hpp"
#include "ehall/motive.hpp"
#include "ehall/scalar.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace ehall {

// Monomial of the genus-one double: slope-ordered t letters (positive
// cone first) and a central kappa weight with half-integer entries
// stored doubled.
struct EllWord {
	std::vector<LatticePoint> letters;
	std::pair<int, int> kappa2{0, 0};
	auto operator<=>(const EllWord &) const = default;
};

class EllElem {
public:
	using Terms = std::map<EllWord, Scalar>;

	EllElem() = default;
	EllElem(long c)
	{
		if (c != 0)
			terms_[EllWord{}] = Scalar(c);
	}
	static EllElem word(EllWord w, Scalar c = Scalar(1));
	static EllElem t(LatticePoint x); // single generator
	static EllElem kappa2_elem(int two_r, int two_d, Scalar c = Scalar(1));

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	EllElem &operator+=(const EllElem &o);
	EllElem &operator-=(const EllElem &o);
	friend EllElem operator+(EllElem a, const EllElem &b) { return a += b; }
	friend EllElem operator-(EllElem a, const EllElem &b) { return a -= b; }
	EllElem &operator*=(const Scalar &c);
	EllElem &operator*=(const Rat &c);
	bool operator==(const EllElem &o) const = default;

	std::string str() const;

private:
	Terms terms_;
};

struct ell_window_overflow : std::runtime_error {
	explicit ell_window_overflow(const std::string &what)
	    : std::runtime_error(what)
	{
	}
};

// structure scalar c_i of the genus-one double; i >= 1
Scalar c_coeff(int i);

// Euler form chi((r1,d1),(r2,d2)) at the given genus, as an integer
long euler_form(int genus, LatticePoint x, LatticePoint y);

// strictly interior lattice points of the triangle (0, x, x+y), via Pick
long triangle_interior_count(LatticePoint x, LatticePoint y);

// kappa weight of relation (3), entries doubled; requires det(x,y) != 0
// and x + y != 0
std::pair<int, int> alpha_weight(LatticePoint x, LatticePoint y);

// The straightening engine.  Results are memoized per window, so use one
// engine per session; all entry points are safe for concurrent use.
class EllipticEngine {
public:
	explicit EllipticEngine(int max_r = 16, int max_d = 16)
	    : max_r_(max_r), max_d_(max_d)
	{
	}

	int max_r() const { return max_r_; }
	int max_d() const { return max_d_; }

	// [t_x, t_y] in normal form
	EllElem comm(LatticePoint x, LatticePoint y);

	// theta_{m x0} expanded in the t generators along the ray of z
	EllElem theta(LatticePoint z);

	// normal form of a product word of t letters (kappa handled inline)
	EllElem normal_form(const std::vector<LatticePoint> &word,
	                    std::pair<int, int> kappa2 = {0, 0});

	EllElem mul(const EllElem &a, const EllElem &b);

	// automorphism action gamma(t_x) = t_{gamma x} k_{gamma x}^{w},
	// gamma(k_a) = k_{gamma a}
	EllElem sl2z_apply(const GammaLift &g, const EllElem &a);

private:
	void check_window(LatticePoint x) const;
	EllElem comm_uncached(LatticePoint x, LatticePoint y, int depth);
	EllElem comm_depth(LatticePoint x, LatticePoint y, int depth);
	EllElem mul_depth(const EllElem &a, const EllElem &b, int depth);
	EllElem normal_form_depth(const std::vector<LatticePoint> &word,
	                          std::pair<int, int> kappa2, int depth);

	// base-case split z = u + w used by the recursive reduction
	struct Split {
		LatticePoint u, w;
		bool target_x = true;
	};
	// candidates ranked by how safely they reduce the pair (x, y)
	std::vector<Split> find_splits(LatticePoint x, LatticePoint y) const;
	EllElem expand_via_split(LatticePoint x, LatticePoint y, const Split &s,
	                         int depth);

	int max_r_, max_d_;
	std::mutex mu_;
	std::map<std::pair<LatticePoint, LatticePoint>, EllElem> comm_cache_;
};

// display order key used by the PBW normal form: positive cone first,
// slopes nonincreasing, equal slopes by gcd
bool letter_less(LatticePoint a, LatticePoint b);

} // namespace ehall
