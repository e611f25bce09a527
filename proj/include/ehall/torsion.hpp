#pragma once

#include "ehall/motive.hpp"
#include "ehall/scalar.hpp"
#include "ehall/symfunc.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ehall {

// Generator families of the torsion part of the composition algebra.
// t[d] (d >= 1), one[0,d] = class of degree-d torsion sheaves, theta[l].
enum class TorGen : uint8_t { t, one, theta };

enum class ThetaConvention { bs, divided };

// A commutative monomial in the torsion generators times a vertical
// kappa weight k_{(0,kappa)}.
struct TorWord {
	std::vector<std::pair<TorGen, int>> letters; // sorted
	int kappa = 0;
	auto operator<=>(const TorWord &) const = default;
};

class TorsionElem {
public:
	using Terms = std::map<TorWord, Scalar>;

	TorsionElem() = default;
	TorsionElem(long c)
	{
		if (c != 0)
			terms_[TorWord{}] = Scalar(c);
	}
	static TorsionElem gen(TorGen g, int d, Scalar c = Scalar(1));
	static TorsionElem kappa(int m, Scalar c = Scalar(1));
	static TorsionElem word(TorWord w, Scalar c);

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	TorsionElem &operator+=(const TorsionElem &o);
	TorsionElem &operator-=(const TorsionElem &o);
	friend TorsionElem operator+(TorsionElem a, const TorsionElem &b)
	{
		return a += b;
	}
	friend TorsionElem operator-(TorsionElem a, const TorsionElem &b)
	{
		return a -= b;
	}
	friend TorsionElem operator*(const TorsionElem &a, const TorsionElem &b);
	TorsionElem &operator*=(const Scalar &c);
	TorsionElem &operator*=(const Rat &c);
	bool operator==(const TorsionElem &o) const = default;

	std::string str() const;

private:
	Terms terms_;
};

// one[0,d] as a polynomial in t generators (coefficient of z^d in
// exp(sum t_k z^k / [k])), and the inverse substitution.
TorsionElem one_in_t(int d);
TorsionElem t_in_one(int d);

// theta_l as a polynomial in t generators under the chosen convention.
TorsionElem theta_in_t(int l, ThetaConvention conv);

// Rewrite every t <-> one generator; direction 't' means "towards t".
enum class ConvertDirection { one_to_t, t_to_one };
TorsionElem convert_t_one(const TorsionElem &x, ConvertDirection dir,
                          ThetaConvention conv = ThetaConvention::bs);

// Expand one/theta letters so only t letters remain.
TorsionElem expand_to_t(const TorsionElem &x, ThetaConvention conv);

// Hopf pairing on the torsion part over a fixed zeta function:
// (t_d, t_l) = delta_{d,l} (1/d) [d]^2 [C_(d)] / (L^d - 1).
Scalar torsion_pairing(const TorsionElem &a, const TorsionElem &b,
                       const ZetaFunction &zeta,
                       ThetaConvention conv = ThetaConvention::bs);

// Coproduct: Delta(t_d) = t_d (x) 1 + k_{(0,d)} (x) t_d, multiplicative.
using TorPair = std::map<std::pair<TorWord, TorWord>, Scalar>;
TorPair torsion_coproduct(const TorsionElem &a,
                          ThetaConvention conv = ThetaConvention::bs);

// ---- Steinitz local torsion Hall algebra at a point of degree deg_x ----

// word in the local generators e_{d,x}: multiset of degrees
using LocalWord = std::vector<int>;

// image of a local word under phi_x: product of L_x^{-d(d-1)/2} e_d
SymElem steinitz_embed(const LocalWord &w, int deg_x);

// local coproduct Delta(e_{d,x}) = sum_r L_x^{-r(d-r)} e_{r,x} (x) e_{d-r,x}
std::map<std::pair<LocalWord, LocalWord>, Scalar>
local_coproduct(const LocalWord &w, int deg_x);

// local Hall pairing (e_{m,x}, e_{n,x}) = delta / (L_x^n (1 - L_x^{-1})),
// extended to words by the coproduct recursion
Scalar local_pairing(const LocalWord &a, const LocalWord &b, int deg_x);

// phi_x image of the local element t_{d,x}; zero unless deg_x | d
SymElem local_t(int d, int deg_x);

} // namespace ehall
