#pragma once

#include <algorithm>
#include <vector>

#include "seqann/prime_field.hpp"
#include "seqann/unipoly.hpp"

namespace seqann {

/**
 * @file unipoly_factor.hpp
 * @brief Irreducibility testing and full factorization over F_p.
 *
 * Distinct-degree splitting followed by seeded Cantor-Zassenhaus equal-degree
 * splitting (p odd).  Multiplicities are recovered by trial division, which
 * sidesteps small-characteristic corner cases of squarefree decomposition.
 */

struct FactorEntry {
	UniPoly<PrimeField> p;  // monic irreducible
	int e = 1;              // multiplicity
	int f = 1;              // degree of p
};

// Factors are ordered with multiplicity >= 2 first; within each group the
// order is (degree, coefficient-lexicographic), so the list is canonical and
// independent of the randomized splitting order.
struct FactorData {
	std::vector<FactorEntry> factors;
	int multiple = 0;  // number of entries with e >= 2; they come first

	size_t count() const { return factors.size(); }
};

inline bool coeff_lex_less(const UniPoly<PrimeField>& a, const UniPoly<PrimeField>& b) {
	if (a.deg() != b.deg()) return a.deg() < b.deg();
	for (int i = a.deg(); i >= 0; --i)
		if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
	return false;
}

inline bool is_irreducible(const PrimeField& K, const UniPoly<PrimeField>& f) {
	int d = f.deg();
	if (d <= 0) return false;
	if (d == 1) return true;
	auto fm = monic(K, f);
	std::uint64_t p = K.characteristic();
	// frob[i] = X^{p^i} mod f
	std::vector<UniPoly<PrimeField>> frob(d + 1);
	frob[0] = poly_mod(K, poly_x(K), fm);
	for (int i = 1; i <= d; ++i) frob[i] = powmod(K, frob[i - 1], p, fm);
	if (!poly_eq(K, frob[d], poly_mod(K, poly_x(K), fm))) return false;
	for (int q = 2; q <= d; ++q) {
		if (d % q != 0) continue;
		bool prime_q = true;
		for (int r = 2; r * r <= q; ++r)
			if (q % r == 0) { prime_q = false; break; }
		if (!prime_q) continue;
		auto diff = sub(K, frob[d / q], poly_x(K));
		if (gcd(K, diff, fm).deg() != 0) return false;
	}
	return true;
}

namespace detail {

inline UniPoly<PrimeField> random_poly_below(const PrimeField& K, int deg_bound, Rng& rng) {
	UniPoly<PrimeField> f;
	f.c.resize(deg_bound, K.zero());
	for (auto& x : f.c) x = K.sample(rng);
	trim(K, f);
	return f;
}

// norm-map exponentiation: a^{(p^d - 1)/2} mod c without big-integer exponents
inline UniPoly<PrimeField> half_order_pow(const PrimeField& K, const UniPoly<PrimeField>& a,
                                          int d, const UniPoly<PrimeField>& c) {
	auto t = poly_mod(K, a, c);
	auto acc = t;
	for (int i = 1; i < d; ++i) {
		t = powmod(K, t, K.characteristic(), c);
		acc = mulmod(K, acc, t, c);
	}
	return powmod(K, acc, (K.characteristic() - 1) / 2, c);
}

inline void equal_degree_split(const PrimeField& K, UniPoly<PrimeField> c, int d, Rng& rng,
                               std::vector<UniPoly<PrimeField>>& out) {
	if (c.deg() == d) {
		out.push_back(monic(K, c));
		return;
	}
	for (;;) {
		auto a = random_poly_below(K, c.deg(), rng);
		if (a.deg() < 1) continue;
		auto g = gcd(K, a, c);
		if (g.deg() > 0 && g.deg() < c.deg()) {
			equal_degree_split(K, g, d, rng, out);
			equal_degree_split(K, divrem(K, c, g).first, d, rng, out);
			return;
		}
		auto b = half_order_pow(K, a, d, c);
		auto h = gcd(K, sub(K, b, poly_one(K)), c);
		if (h.deg() > 0 && h.deg() < c.deg()) {
			equal_degree_split(K, h, d, rng, out);
			equal_degree_split(K, divrem(K, c, h).first, d, rng, out);
			return;
		}
	}
}

}  // namespace detail

/**
 * Full factorization of f over F_p.  Requires deg f < p (the multiplicity
 * bound then also keeps the squarefree step valid).  Deterministic given the
 * rng seed; the returned order is canonical regardless.
 */
template <FieldContext F>
FactorData factor(const F&, const UniPoly<F>&, Rng) {
	throw NotOverPrimeField("factorization is implemented over prime fields only");
}

inline FactorData factor(const PrimeField& K, const UniPoly<PrimeField>& f, Rng rng) {
	if (f.deg() < 1) throw InvalidArgument("factor expects a nonconstant polynomial");
	if (static_cast<std::uint64_t>(f.deg()) >= K.characteristic())
		throw DegreeTooLargeForChar("factorization needs deg f < characteristic");
	auto fm = monic(K, f);
	auto g = squarefree_part(K, fm);
	// distinct-degree stage on the squarefree part
	std::vector<std::pair<UniPoly<PrimeField>, int>> stages;
	auto h = poly_mod(K, poly_x(K), g);
	auto rest = g;
	for (int d = 1; 2 * d <= rest.deg(); ++d) {
		h = powmod(K, h, K.characteristic(), rest);
		auto gd = gcd(K, sub(K, h, poly_x(K)), rest);
		if (gd.deg() > 0) {
			stages.push_back({gd, d});
			rest = divrem(K, rest, gd).first;
			h = poly_mod(K, h, rest);
		}
	}
	if (rest.deg() > 0) stages.push_back({rest, rest.deg()});

	FactorData out;
	for (auto& [prod, d] : stages) {
		std::vector<UniPoly<PrimeField>> irr;
		detail::equal_degree_split(K, prod, d, rng, irr);
		for (auto& pk : irr) {
			FactorEntry ent;
			ent.p = pk;
			ent.f = pk.deg();
			ent.e = 0;
			auto r = fm;
			for (;;) {
				auto [q, rem] = divrem(K, r, pk);
				if (!rem.is_zero()) break;
				++ent.e;
				r = q;
			}
			out.factors.push_back(std::move(ent));
		}
	}
	std::sort(out.factors.begin(), out.factors.end(), [](const FactorEntry& a, const FactorEntry& b) {
		bool am = a.e >= 2, bm = b.e >= 2;
		if (am != bm) return am;
		return coeff_lex_less(a.p, b.p);
	});
	out.multiple = static_cast<int>(std::count_if(out.factors.begin(), out.factors.end(),
	                                              [](const FactorEntry& x) { return x.e >= 2; }));
	return out;
}

}  // namespace seqann
