#pragma once

#include <concepts>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "seqann/errors.hpp"
#include "seqann/rng.hpp"

namespace seqann {

// Contract every arithmetic context satisfies.  PrimeField models it with
// Elem = uint64_t, ExtField with Elem = std::vector<uint64_t>.
template <class F>
concept FieldContext = requires(const F k, typename F::Elem a, typename F::Elem b, Rng& rng) {
	{ k.zero() } -> std::same_as<typename F::Elem>;
	{ k.one() } -> std::same_as<typename F::Elem>;
	{ k.is_zero(a) } -> std::same_as<bool>;
	{ k.add(a, b) } -> std::same_as<typename F::Elem>;
	{ k.sub(a, b) } -> std::same_as<typename F::Elem>;
	{ k.mul(a, b) } -> std::same_as<typename F::Elem>;
	{ k.neg(a) } -> std::same_as<typename F::Elem>;
	{ k.inv(a) } -> std::same_as<typename F::Elem>;
	{ k.sample(rng) } -> std::same_as<typename F::Elem>;
	{ k.characteristic() } -> std::same_as<std::uint64_t>;
	{ a == b } -> std::convertible_to<bool>;
};

/**
 * @file unipoly.hpp
 * @brief Dense univariate polynomials over a field context.
 *
 * Coefficients are stored low to high with no trailing zero; the zero
 * polynomial is the empty vector and has degree -1.  Operations take the
 * field context as first argument.
 */
template <class F>
struct UniPoly {
	std::vector<typename F::Elem> c;

	int deg() const { return static_cast<int>(c.size()) - 1; }
	bool is_zero() const { return c.empty(); }
};

template <FieldContext F>
void trim(const F& K, UniPoly<F>& f) {
	while (!f.c.empty() && K.is_zero(f.c.back())) f.c.pop_back();
}

template <FieldContext F>
UniPoly<F> poly_from(const F& K, std::vector<typename F::Elem> cs) {
	UniPoly<F> f{std::move(cs)};
	trim(K, f);
	return f;
}

template <FieldContext F>
UniPoly<F> poly_zero(const F&) { return {}; }

template <FieldContext F>
UniPoly<F> poly_one(const F& K) { return {{K.one()}}; }

template <FieldContext F>
UniPoly<F> poly_x(const F& K) { return {{K.zero(), K.one()}}; }

// c * X^k
template <FieldContext F>
UniPoly<F> poly_monomial(const F& K, typename F::Elem c, int k) {
	if (K.is_zero(c)) return {};
	UniPoly<F> f;
	f.c.assign(k + 1, K.zero());
	f.c[k] = c;
	return f;
}

template <FieldContext F>
typename F::Elem coeff(const F& K, const UniPoly<F>& f, int i) {
	if (i < 0 || i > f.deg()) return K.zero();
	return f.c[i];
}

template <FieldContext F>
typename F::Elem leading(const F& K, const UniPoly<F>& f) {
	return f.is_zero() ? K.zero() : f.c.back();
}

template <FieldContext F>
bool poly_eq(const F&, const UniPoly<F>& a, const UniPoly<F>& b) {
	return a.c == b.c;
}

template <FieldContext F>
UniPoly<F> add(const F& K, const UniPoly<F>& a, const UniPoly<F>& b) {
	UniPoly<F> r;
	r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
	for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = K.add(coeff(K, a, i), coeff(K, b, i));
	trim(K, r);
	return r;
}

template <FieldContext F>
UniPoly<F> sub(const F& K, const UniPoly<F>& a, const UniPoly<F>& b) {
	UniPoly<F> r;
	r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
	for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = K.sub(coeff(K, a, i), coeff(K, b, i));
	trim(K, r);
	return r;
}

template <FieldContext F>
UniPoly<F> scale(const F& K, const UniPoly<F>& a, const typename F::Elem& s) {
	if (K.is_zero(s)) return {};
	UniPoly<F> r = a;
	for (auto& x : r.c) x = K.mul(x, s);
	trim(K, r);
	return r;
}

template <FieldContext F>
UniPoly<F> mul(const F& K, const UniPoly<F>& a, const UniPoly<F>& b) {
	if (a.is_zero() || b.is_zero()) return {};
	UniPoly<F> r;
	r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
	for (size_t i = 0; i < a.c.size(); ++i) {
		if (K.is_zero(a.c[i])) continue;
		for (size_t j = 0; j < b.c.size(); ++j)
			r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
	}
	trim(K, r);
	return r;
}

template <FieldContext F>
UniPoly<F> poly_pow(const F& K, UniPoly<F> base, std::uint64_t e) {
	UniPoly<F> r = poly_one(K);
	while (e) {
		if (e & 1) r = mul(K, r, base);
		base = mul(K, base, base);
		e >>= 1;
	}
	return r;
}

template <FieldContext F>
std::pair<UniPoly<F>, UniPoly<F>> divrem(const F& K, UniPoly<F> a, const UniPoly<F>& b) {
	if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
	UniPoly<F> q;
	if (a.deg() < b.deg()) return {q, a};
	q.c.assign(a.deg() - b.deg() + 1, K.zero());
	auto linv = K.inv(b.c.back());
	for (int i = a.deg(); i >= b.deg(); --i) {
		if (K.is_zero(coeff(K, a, i))) continue;
		auto t = K.mul(a.c[i], linv);
		q.c[i - b.deg()] = t;
		for (int j = 0; j <= b.deg(); ++j)
			a.c[i - b.deg() + j] = K.sub(a.c[i - b.deg() + j], K.mul(t, b.c[j]));
	}
	trim(K, q);
	trim(K, a);
	return {q, a};
}

template <FieldContext F>
UniPoly<F> poly_mod(const F& K, const UniPoly<F>& a, const UniPoly<F>& b) {
	return divrem(K, a, b).second;
}

template <FieldContext F>
UniPoly<F> monic(const F& K, const UniPoly<F>& f) {
	if (f.is_zero()) return f;
	if (K.is_one(f.c.back())) return f;
	return scale(K, f, K.inv(f.c.back()));
}

// monic gcd; gcd(0, 0) = 0
template <FieldContext F>
UniPoly<F> gcd(const F& K, UniPoly<F> a, UniPoly<F> b) {
	while (!b.is_zero()) {
		auto r = poly_mod(K, a, b);
		a = std::move(b);
		b = std::move(r);
	}
	return monic(K, a);
}

// returns (g, u, v) with u*a + v*b = g, g monic (or zero)
template <FieldContext F>
std::tuple<UniPoly<F>, UniPoly<F>, UniPoly<F>> xgcd(const F& K, UniPoly<F> a, UniPoly<F> b) {
	UniPoly<F> u0 = poly_one(K), v0 = poly_zero(K);
	UniPoly<F> u1 = poly_zero(K), v1 = poly_one(K);
	while (!b.is_zero()) {
		auto [q, r] = divrem(K, a, b);
		a = std::move(b);
		b = std::move(r);
		auto u2 = sub(K, u0, mul(K, q, u1));
		auto v2 = sub(K, v0, mul(K, q, v1));
		u0 = std::move(u1); u1 = std::move(u2);
		v0 = std::move(v1); v1 = std::move(v2);
	}
	if (!a.is_zero() && !K.is_one(a.c.back())) {
		auto s = K.inv(a.c.back());
		a = scale(K, a, s);
		u0 = scale(K, u0, s);
		v0 = scale(K, v0, s);
	}
	return {a, u0, v0};
}

template <FieldContext F>
UniPoly<F> inv_mod(const F& K, const UniPoly<F>& a, const UniPoly<F>& m) {
	auto [g, u, v] = xgcd(K, poly_mod(K, a, m), m);
	(void)v;
	if (g.deg() != 0) throw NotInvertible("element not invertible modulo the given polynomial");
	return poly_mod(K, u, m);
}

template <FieldContext F>
UniPoly<F> mulmod(const F& K, const UniPoly<F>& a, const UniPoly<F>& b, const UniPoly<F>& m) {
	return poly_mod(K, mul(K, a, b), m);
}

template <FieldContext F>
UniPoly<F> powmod(const F& K, UniPoly<F> base, std::uint64_t e, const UniPoly<F>& m) {
	UniPoly<F> r = poly_mod(K, poly_one(K), m);
	base = poly_mod(K, base, m);
	while (e) {
		if (e & 1) r = mulmod(K, r, base, m);
		base = mulmod(K, base, base, m);
		e >>= 1;
	}
	return r;
}

template <FieldContext F>
typename F::Elem eval(const F& K, const UniPoly<F>& f, const typename F::Elem& x) {
	auto r = K.zero();
	for (int i = f.deg(); i >= 0; --i) r = K.add(K.mul(r, x), f.c[i]);
	return r;
}

// f(X + a), by Horner over the coefficient list
template <FieldContext F>
UniPoly<F> poly_shift_arg(const F& K, const UniPoly<F>& f, const typename F::Elem& a) {
	UniPoly<F> r;
	for (int i = f.deg(); i >= 0; --i) {
		std::vector<typename F::Elem> nx(r.c.size() + 1, K.zero());
		for (size_t j = 0; j < r.c.size(); ++j) {
			nx[j + 1] = K.add(nx[j + 1], r.c[j]);
			nx[j] = K.add(nx[j], K.mul(a, r.c[j]));
		}
		nx[0] = K.add(nx[0], f.c[i]);
		r.c = std::move(nx);
	}
	trim(K, r);
	return r;
}

// multiply an element by an integer scalar, reduced through the characteristic
template <FieldContext F>
typename F::Elem int_scale(const F& K, std::uint64_t m, typename F::Elem a) {
	m %= K.characteristic();
	auto acc = K.zero();
	while (m) {
		if (m & 1) acc = K.add(acc, a);
		a = K.add(a, a);
		m >>= 1;
	}
	return acc;
}

template <FieldContext F>
UniPoly<F> derivative(const F& K, const UniPoly<F>& f) {
	UniPoly<F> r;
	for (int i = 1; i <= f.deg(); ++i)
		r.c.push_back(int_scale(K, static_cast<std::uint64_t>(i), f.c[i]));
	trim(K, r);
	return r;
}

// f / gcd(f, f').  Valid while deg f < char(K); beyond that f' can vanish
// without f being constant.
template <FieldContext F>
UniPoly<F> squarefree_part(const F& K, const UniPoly<F>& f) {
	if (f.is_zero()) return f;
	if (static_cast<std::uint64_t>(f.deg()) >= K.characteristic())
		throw DegreeTooLargeForChar("squarefree part needs deg f < characteristic");
	auto fm = monic(K, f);
	if (fm.deg() == 0) return poly_one(K);
	auto g = gcd(K, fm, derivative(K, fm));
	return monic(K, divrem(K, fm, g).first);
}

// synthetic division by (X - zeta): returns (q, r) with f = q*(X-zeta) + r
template <FieldContext F>
std::pair<UniPoly<F>, typename F::Elem> div_linear(const F& K, const UniPoly<F>& f,
                                                   const typename F::Elem& zeta) {
	if (f.is_zero()) return {{}, K.zero()};
	UniPoly<F> q;
	q.c.assign(std::max(0, f.deg()), K.zero());
	auto carry = K.zero();
	for (int i = f.deg(); i >= 1; --i) {
		carry = K.add(f.c[i], K.mul(carry, zeta));
		q.c[i - 1] = carry;
	}
	auto rem = K.add(f.c[0], K.mul(carry, zeta));
	trim(K, q);
	return {q, rem};
}

/**
 * Berlekamp-Massey.  Given at least 2*bound values of a linearly recurrent
 * sequence whose minimal polynomial has degree <= bound, returns that monic
 * minimal polynomial c_0 + ... + c_d X^d with sum_j c_j values[i+j] = 0 for
 * all valid i.  The zero sequence yields the constant 1.
 */
template <FieldContext F>
UniPoly<F> berlekamp_massey(const F& K, const std::vector<typename F::Elem>& values, int bound) {
	if (bound < 0 || values.size() < 2 * static_cast<size_t>(bound))
		throw InvalidArgument("berlekamp_massey needs >= 2*bound values");
	std::vector<typename F::Elem> C{K.one()}, B{K.one()};
	int L = 0, m = 1;
	auto b = K.one();
	for (size_t i = 0; i < values.size(); ++i) {
		auto delta = values[i];
		for (int j = 1; j <= L && j < static_cast<int>(C.size()); ++j)
			delta = K.add(delta, K.mul(C[j], values[i - j]));
		if (K.is_zero(delta)) {
			++m;
		} else if (2 * L <= static_cast<int>(i)) {
			auto T = C;
			auto coef = K.mul(delta, K.inv(b));
			if (C.size() < B.size() + m) C.resize(B.size() + m, K.zero());
			for (size_t j = 0; j < B.size(); ++j)
				C[j + m] = K.sub(C[j + m], K.mul(coef, B[j]));
			L = static_cast<int>(i) + 1 - L;
			B = std::move(T);
			b = delta;
			m = 1;
		} else {
			auto coef = K.mul(delta, K.inv(b));
			if (C.size() < B.size() + m) C.resize(B.size() + m, K.zero());
			for (size_t j = 0; j < B.size(); ++j)
				C[j + m] = K.sub(C[j + m], K.mul(coef, B[j]));
			++m;
		}
	}
	// reverse the connection polynomial at length L; C[0] = 1 keeps it monic
	UniPoly<F> P;
	P.c.assign(L + 1, K.zero());
	for (int k = 0; k <= L; ++k)
		if (L - k < static_cast<int>(C.size())) P.c[k] = C[L - k];
	P.c[L] = K.one();
	return P;
}

/**
 * Numerator of the generating fraction sum_i u_i / x^{i+1} = N(x) / mu(x),
 * for any monic mu annihilating u:  N_m = sum_j mu_{m+1+j} u_j, m < deg mu.
 */
template <FieldContext F>
UniPoly<F> series_numerator(const F& K, const std::vector<typename F::Elem>& u,
                            const UniPoly<F>& mu) {
	int d = mu.deg();
	UniPoly<F> N;
	N.c.assign(std::max(d, 0), K.zero());
	for (int m = 0; m < d; ++m) {
		auto s = K.zero();
		for (int j = 0; j + m + 1 <= d && j < static_cast<int>(u.size()); ++j)
			s = K.add(s, K.mul(mu.c[m + 1 + j], u[j]));
		N.c[m] = s;
	}
	trim(K, N);
	return N;
}

template <class F>
struct SubproductTree {
	struct Node {
		UniPoly<F> label;
		int left = -1, right = -1;
	};
	std::vector<Node> nodes;
	int root = -1;
	std::vector<int> leaf_index;  // leaf k -> node id, in input order
};

template <FieldContext F>
int build_subtree(const F& K, const std::vector<UniPoly<F>>& leaves, int lo, int hi,
                  SubproductTree<F>& t) {
	if (hi - lo == 1) {
		t.nodes.push_back({leaves[lo], -1, -1});
		t.leaf_index[lo] = static_cast<int>(t.nodes.size()) - 1;
		return t.leaf_index[lo];
	}
	int mid = lo + (hi - lo + 1) / 2;
	int l = build_subtree(K, leaves, lo, mid, t);
	int r = build_subtree(K, leaves, mid, hi, t);
	t.nodes.push_back({mul(K, t.nodes[l].label, t.nodes[r].label), l, r});
	return static_cast<int>(t.nodes.size()) - 1;
}

// balanced tree; root label is the product of all leaves
template <FieldContext F>
SubproductTree<F> build_subproduct_tree(const F& K, const std::vector<UniPoly<F>>& leaves) {
	SubproductTree<F> t;
	if (leaves.empty()) return t;
	t.leaf_index.assign(leaves.size(), -1);
	t.root = build_subtree(K, leaves, 0, static_cast<int>(leaves.size()), t);
	return t;
}

// CRT over pairwise coprime moduli; result reduced mod the product
template <FieldContext F>
UniPoly<F> crt_combine(const F& K,
                       const std::vector<std::pair<UniPoly<F>, UniPoly<F>>>& residue_modulus) {
	UniPoly<F> M = poly_one(K);
	for (auto& [r, m] : residue_modulus) { (void)r; M = mul(K, M, m); }
	UniPoly<F> acc = poly_zero(K);
	for (auto& [r, m] : residue_modulus) {
		auto Mi = divrem(K, M, m).first;
		auto inv = inv_mod(K, Mi, m);
		auto term = mul(K, mul(K, r, Mi), inv);
		acc = add(K, acc, term);
	}
	return poly_mod(K, acc, M);
}

template <class F>
struct ShapeData {
	UniPoly<F> pmin;            // minimal polynomial of the projected sequence
	UniPoly<F> p;               // its squarefree part
	std::vector<UniPoly<F>> g;  // g[j] parametrizes variable j+1, deg < deg p
};

/**
 * Recover the radical parametrization from power projections.
 *
 * s holds 2D values of the last-variable sequence, t[j] holds D values of the
 * X_{j+1}-twisted sequences.  The minimal polynomial comes from
 * Berlekamp-Massey; G_j = N_j * N^{-1} mod P with N, N_j the numerators of
 * the generating fractions taken in the reversed-coefficient convention, so
 * that evaluation at a root alpha gives the coordinate of the corresponding
 * point.  Throws NotInvertible when gcd(N, P) != 1 (caller retries with a
 * fresh form).
 */
template <FieldContext F>
ShapeData<F> shape_recover(const F& K, const std::vector<typename F::Elem>& s,
                           const std::vector<std::vector<typename F::Elem>>& t, int D) {
	ShapeData<F> out;
	out.pmin = berlekamp_massey(K, s, D);
	if (out.pmin.deg() <= 0) throw NotInvertible("projected sequence is degenerate");
	out.p = squarefree_part(K, out.pmin);
	auto N = poly_mod(K, series_numerator(K, s, out.pmin), out.p);
	auto Ninv = inv_mod(K, N, out.p);  // NotInvertible propagates
	out.g.reserve(t.size());
	for (auto& tj : t) {
		auto Nj = poly_mod(K, series_numerator(K, tj, out.pmin), out.p);
		out.g.push_back(mulmod(K, Nj, Ninv, out.p));
	}
	return out;
}

}  // namespace seqann
