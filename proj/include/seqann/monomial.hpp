#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "seqann/errors.hpp"

namespace seqann {

/**
 * @file monomial.hpp
 * @brief Exponent vectors and the lexicographic order with X1 > X2 > ... > Xn.
 */
using Monomial = std::vector<int>;

inline int total_deg(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline bool is_one_mono(const Monomial& m) {
	return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

// strict lex comparison, X1 most significant
inline bool lex_less(const Monomial& a, const Monomial& b) {
	for (size_t i = 0; i < a.size(); ++i) {
		if (a[i] != b[i]) return a[i] < b[i];
	}
	return false;
}

struct LexLess {
	bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(a, b); }
};

inline bool divides(const Monomial& a, const Monomial& b) {
	for (size_t i = 0; i < a.size(); ++i)
		if (a[i] > b[i]) return false;
	return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
	Monomial c(a.size());
	for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
	return c;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
	Monomial c(a.size());
	for (size_t i = 0; i < a.size(); ++i) {
		c[i] = a[i] - b[i];
		if (c[i] < 0) throw InvalidArgument("monomial quotient has negative exponent");
	}
	return c;
}

inline Monomial mono_one(int n) { return Monomial(n, 0); }

inline Monomial mono_var(int n, int i, int e = 1) {
	Monomial m(n, 0);
	m[i] = e;
	return m;
}

// all monomials in n variables of total degree <= d, lex descending
inline std::vector<Monomial> monomials_up_to_degree(int n, int d) {
	std::vector<Monomial> out;
	Monomial cur(n, 0);
	// depth-first over exponent vectors, variable 0 outermost
	auto rec = [&](auto&& self, int var, int left) -> void {
		if (var == n) {
			out.push_back(cur);
			return;
		}
		for (int e = left; e >= 0; --e) {
			cur[var] = e;
			self(self, var + 1, left - e);
		}
		cur[var] = 0;
	};
	rec(rec, 0, d);
	std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return lex_less(b, a); });
	return out;
}

}  // namespace seqann
