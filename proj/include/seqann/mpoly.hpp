#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "seqann/monomial.hpp"
#include "seqann/unipoly.hpp"

namespace seqann {

/**
 * @file mpoly.hpp
 * @brief Multivariate polynomials and lexicographic Groebner bases.
 *
 * Terms are kept sorted in descending lex order with no zero coefficients,
 * so equal polynomials have identical term lists.
 */
template <class F>
struct MPoly {
	int n = 0;
	std::vector<std::pair<Monomial, typename F::Elem>> terms;  // descending lex

	bool is_zero() const { return terms.empty(); }
};

template <FieldContext F>
MPoly<F> mp_zero(const F&, int n) {
	return MPoly<F>{n, {}};
}

template <FieldContext F>
MPoly<F> mp_const(const F& K, int n, typename F::Elem c) {
	MPoly<F> f{n, {}};
	if (!K.is_zero(c)) f.terms.push_back({mono_one(n), c});
	return f;
}

template <FieldContext F>
MPoly<F> mp_term(const F& K, int n, Monomial m, typename F::Elem c) {
	MPoly<F> f{n, {}};
	if (!K.is_zero(c)) f.terms.push_back({std::move(m), c});
	return f;
}

template <FieldContext F>
MPoly<F> mp_from_map(const F& K, int n,
                     const std::map<Monomial, typename F::Elem, LexLess>& acc) {
	MPoly<F> f{n, {}};
	for (auto it = acc.rbegin(); it != acc.rend(); ++it)
		if (!K.is_zero(it->second)) f.terms.push_back({it->first, it->second});
	return f;
}

template <FieldContext F>
MPoly<F> mp_add(const F& K, const MPoly<F>& a, const MPoly<F>& b) {
	std::map<Monomial, typename F::Elem, LexLess> acc;
	for (auto& [m, c] : a.terms) acc[m] = c;
	for (auto& [m, c] : b.terms) {
		auto it = acc.find(m);
		if (it == acc.end())
			acc[m] = c;
		else
			it->second = K.add(it->second, c);
	}
	return mp_from_map(K, a.n, acc);
}

template <FieldContext F>
MPoly<F> mp_scale(const F& K, const MPoly<F>& a, typename F::Elem s) {
	MPoly<F> f{a.n, {}};
	if (K.is_zero(s)) return f;
	for (auto& [m, c] : a.terms) f.terms.push_back({m, K.mul(c, s)});
	return f;
}

template <FieldContext F>
MPoly<F> mp_neg(const F& K, const MPoly<F>& a) {
	MPoly<F> f{a.n, {}};
	for (auto& [m, c] : a.terms) f.terms.push_back({m, K.neg(c)});
	return f;
}

template <FieldContext F>
MPoly<F> mp_sub(const F& K, const MPoly<F>& a, const MPoly<F>& b) {
	return mp_add(K, a, mp_neg(K, b));
}

template <FieldContext F>
MPoly<F> mp_mul(const F& K, const MPoly<F>& a, const MPoly<F>& b) {
	std::map<Monomial, typename F::Elem, LexLess> acc;
	for (auto& [ma, ca] : a.terms)
		for (auto& [mb, cb] : b.terms) {
			auto m = mono_mul(ma, mb);
			auto p = K.mul(ca, cb);
			auto it = acc.find(m);
			if (it == acc.end())
				acc[m] = p;
			else
				it->second = K.add(it->second, p);
		}
	return mp_from_map(K, a.n, acc);
}

template <FieldContext F>
bool mp_eq(const F&, const MPoly<F>& a, const MPoly<F>& b) {
	if (a.n != b.n || a.terms.size() != b.terms.size()) return false;
	for (size_t i = 0; i < a.terms.size(); ++i)
		if (a.terms[i].first != b.terms[i].first || !(a.terms[i].second == b.terms[i].second))
			return false;
	return true;
}

// univariate p(X) placed into variable `var` of an n-variable ring
template <FieldContext F>
MPoly<F> mp_from_unipoly(const F& K, const UniPoly<F>& p, int n, int var) {
	MPoly<F> f{n, {}};
	for (int k = p.deg(); k >= 0; --k)
		if (!K.is_zero(p.c[k])) f.terms.push_back({mono_var(n, var, k), p.c[k]});
	return f;
}

template <FieldContext F>
typename F::Elem mp_eval(const F& K, const MPoly<F>& f,
                         const std::vector<typename F::Elem>& point) {
	auto acc = K.zero();
	for (auto& [m, c] : f.terms) {
		auto t = c;
		for (size_t i = 0; i < m.size(); ++i)
			for (int k = 0; k < m[i]; ++k) t = K.mul(t, point[i]);
		acc = K.add(acc, t);
	}
	return acc;
}

// substitute X_i -> X_i + xi_i
template <FieldContext F>
MPoly<F> mp_translate(const F& K, const MPoly<F>& f, const std::vector<typename F::Elem>& xi) {
	std::map<Monomial, typename F::Elem, LexLess> acc;
	int n = f.n;
	for (auto& [m, c] : f.terms) {
		// expand c * prod_i (X_i + xi_i)^{m_i} one variable at a time
		std::map<Monomial, typename F::Elem, LexLess> part;
		part[mono_one(n)] = c;
		for (int i = 0; i < n; ++i) {
			int e = m[i];
			if (e == 0) continue;
			// binomial row C(e, k) * xi_i^{e-k} for X_i^k
			std::vector<typename F::Elem> row(e + 1, K.zero());
			row[0] = K.one();
			for (int s = 1; s <= e; ++s)
				for (int k = s; k >= 1; --k) row[k] = K.add(row[k], row[k - 1]);
			auto xp = K.one();
			std::vector<typename F::Elem> coef(e + 1);
			for (int k = e; k >= 0; --k) {
				coef[k] = K.mul(row[k], xp);
				xp = K.mul(xp, xi[i]);
			}
			std::map<Monomial, typename F::Elem, LexLess> next;
			for (auto& [pm, pc] : part)
				for (int k = 0; k <= e; ++k) {
					if (K.is_zero(coef[k])) continue;
					auto nm = pm;
					nm[i] += k;
					auto v = K.mul(pc, coef[k]);
					auto it = next.find(nm);
					if (it == next.end())
						next[nm] = v;
					else
						it->second = K.add(it->second, v);
				}
			part = std::move(next);
		}
		for (auto& [pm, pc] : part) {
			auto it = acc.find(pm);
			if (it == acc.end())
				acc[pm] = pc;
			else
				it->second = K.add(it->second, pc);
		}
	}
	return mp_from_map(K, n, acc);
}

/**
 * Lexicographic Groebner basis of a zero-dimensional ideal together with the
 * monomial basis of the quotient (the staircase).  Generators are monic and
 * sorted by ascending leading monomial; the staircase is sorted ascending.
 */
template <class F>
struct LexGB {
	int n = 0;
	std::vector<MPoly<F>> gens;
	std::vector<Monomial> staircase;
};

template <FieldContext F>
void sort_gb(const F&, LexGB<F>& gb) {
	std::sort(gb.gens.begin(), gb.gens.end(), [](const MPoly<F>& a, const MPoly<F>& b) {
		return lex_less(a.terms.front().first, b.terms.front().first);
	});
	std::sort(gb.staircase.begin(), gb.staircase.end(), lex_less);
}

// staircase under the given leading monomials; throws when it is infinite
template <FieldContext F>
std::vector<Monomial> staircase_from_leads(const F&, int n, const std::vector<Monomial>& leads,
                                           int cap = 1 << 20) {
	for (auto& m : leads)
		if (is_one_mono(m)) return {};  // unit ideal
	for (int i = 0; i < n; ++i) {
		bool has_power = false;
		for (auto& m : leads) {
			bool pure = m[i] > 0;
			for (int j = 0; j < n && pure; ++j)
				if (j != i && m[j] > 0) pure = false;
			if (pure) { has_power = true; break; }
		}
		if (!has_power) throw InvalidArgument("leading terms do not define a finite staircase");
	}
	std::vector<Monomial> out;
	std::map<Monomial, bool, LexLess> seen;
	std::vector<Monomial> stack{mono_one(n)};
	while (!stack.empty()) {
		Monomial m = stack.back();
		stack.pop_back();
		if (seen.count(m)) continue;
		seen[m] = true;
		bool under = true;
		for (auto& l : leads)
			if (divides(l, m)) { under = false; break; }
		if (!under) continue;
		out.push_back(m);
		if (static_cast<int>(out.size()) > cap)
			throw InvalidArgument("staircase exceeds cap");
		for (int i = 0; i < n; ++i) {
			auto s = m;
			++s[i];
			stack.push_back(std::move(s));
		}
	}
	std::sort(out.begin(), out.end(), lex_less);
	return out;
}

// monomials X_i * s outside the staircase, deduplicated, ascending
inline std::vector<Monomial> staircase_border(int n, const std::vector<Monomial>& staircase) {
	std::map<Monomial, bool, LexLess> in;
	for (auto& m : staircase) in[m] = true;
	std::map<Monomial, bool, LexLess> border;
	for (auto& m : staircase)
		for (int i = 0; i < n; ++i) {
			auto s = m;
			++s[i];
			if (!in.count(s)) border[s] = true;
		}
	std::vector<Monomial> out;
	for (auto& [m, _] : border) out.push_back(m);
	return out;
}

// full normal form modulo the basis (requires an actual Groebner basis)
template <FieldContext F>
MPoly<F> gb_reduce(const F& K, const LexGB<F>& gb, MPoly<F> f) {
	MPoly<F> rem{f.n, {}};
	std::map<Monomial, typename F::Elem, LexLess> work;
	for (auto& [m, c] : f.terms) work[m] = c;
	while (!work.empty()) {
		auto it = std::prev(work.end());  // largest remaining term
		Monomial m = it->first;
		auto c = it->second;
		work.erase(it);
		if (K.is_zero(c)) continue;
		const MPoly<F>* red = nullptr;
		for (auto& g : gb.gens)
			if (divides(g.terms.front().first, m)) { red = &g; break; }
		if (!red) {
			rem.terms.push_back({m, c});
			continue;
		}
		auto q = mono_div(m, red->terms.front().first);
		auto s = K.div(c, red->terms.front().second);
		for (size_t t = 1; t < red->terms.size(); ++t) {
			auto tm = mono_mul(q, red->terms[t].first);
			auto tc = K.neg(K.mul(s, red->terms[t].second));
			auto jt = work.find(tm);
			if (jt == work.end())
				work[tm] = tc;
			else
				jt->second = K.add(jt->second, tc);
		}
	}
	// terms were emitted largest-first already
	return rem;
}

template <FieldContext F>
bool gb_equal(const F& K, const LexGB<F>& a, const LexGB<F>& b) {
	if (a.n != b.n || a.gens.size() != b.gens.size() || a.staircase != b.staircase) return false;
	for (size_t i = 0; i < a.gens.size(); ++i)
		if (!mp_eq(K, a.gens[i], b.gens[i])) return false;
	return true;
}

// monic generators, staircase consistent with leading terms, expected size
template <FieldContext F>
void gb_structural_check(const F& K, const LexGB<F>& gb, int expect_dim = -1) {
	std::vector<Monomial> leads;
	for (auto& g : gb.gens) {
		if (g.is_zero()) throw VerificationFailed("zero generator in basis");
		if (!K.is_one(g.terms.front().second)) throw VerificationFailed("generator not monic");
		leads.push_back(g.terms.front().first);
	}
	auto sc = staircase_from_leads(K, gb.n, leads);
	if (sc != gb.staircase) throw VerificationFailed("staircase does not match leading terms");
	if (expect_dim >= 0 && static_cast<int>(sc.size()) != expect_dim)
		throw VerificationFailed("staircase size differs from quotient dimension");
}

}  // namespace seqann
