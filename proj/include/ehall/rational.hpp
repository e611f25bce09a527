#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace ehall {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_pow(const Rat &base, long e)
{
	if (e == 0)
		return Rat(1);
	Rat b = e > 0 ? base : Rat(1) / base;
	unsigned long n = e > 0 ? e : -e;
	Rat r(1);
	while (n) {
		if (n & 1)
			r *= b;
		b *= b;
		n >>= 1;
	}
	return r;
}

inline std::string rat_str(const Rat &r) { return r.get_str(); }

} // namespace ehall
