#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "seqann/quotient.hpp"

namespace seqann {

/**
 * @file annihilator.hpp
 * @brief Groebner bases of annihilators of linearly recurrent sequences.
 *
 * Sequences are given as linear forms over a quotient instance: the i-th
 * sequence takes the value forms[i](X^m v1) at the exponent vector m.  Two
 * algorithms are provided.  mmm_ann walks candidate monomials in increasing
 * lex order and is exact whenever the span of the forms is stable under the
 * shift operators; generic_ann restricts its attention to candidates built
 * from per-variable staircases and trades that restriction for genericity
 * assumptions, reporting failure when they visibly do not hold.
 */

namespace detail {

// column of sequence values (forms[i] at c' * c for every row monomial c'),
// laid out in row-monomial blocks of size t
template <FieldContext F>
std::vector<typename F::Elem> value_column(const IdealInstance<F>& inst, MonomialCache<F>& cache,
                                           const std::vector<LinearForm<F>>& forms,
                                           const std::vector<Monomial>& row_monomials,
                                           const Monomial& c, CostCounter& cost) {
	const F& K = inst.field;
	std::vector<typename F::Elem> col;
	col.reserve(row_monomials.size() * forms.size());
	for (auto& cp : row_monomials) {
		const auto& vec = cache.get(mono_mul(cp, c), cost);
		for (auto& ell : forms) col.push_back(dot(K, ell, vec, cost));
	}
	return col;
}

template <FieldContext F>
MPoly<F> staircase_combination(const F& K, int n, const Monomial& lead,
                               const std::vector<Monomial>& staircase,
                               const std::vector<typename F::Elem>& coeffs) {
	std::map<Monomial, typename F::Elem, LexLess> acc;
	acc[lead] = K.one();
	for (size_t s = 0; s < staircase.size(); ++s)
		if (!K.is_zero(coeffs[s])) acc[staircase[s]] = K.neg(coeffs[s]);
	return mp_from_map(K, n, acc);
}

}  // namespace detail

/**
 * Dual FGLM walk: candidates start at 1 and grow by one variable at a time;
 * a candidate whose evaluation vector depends linearly on those of the
 * accepted staircase becomes a generator, an independent one joins the
 * staircase.  Evaluation vectors pair every form with the candidate times
 * every window monomial; the window always covers the staircase, its border
 * and the candidate's own shifts, and existing vectors are extended in place
 * when it grows.
 */
template <FieldContext F>
LexGB<F> mmm_ann(const std::vector<LinearForm<F>>& forms, const IdealInstance<F>& inst,
                 MonomialCache<F>& cache, CostCounter& cost) {
	const F& K = inst.field;
	const int n = inst.n;
	const int t = static_cast<int>(forms.size());
	if (t == 0) throw InvalidArgument("need at least one form");

	std::vector<Monomial> window;
	std::set<Monomial, LexLess> window_seen;
	std::vector<Monomial> stairs;
	EchelonSolver<F> ech(K);

	auto grow_window = [&](const Monomial& w) {
		if (!window_seen.insert(w).second) return;
		window.push_back(w);
		std::vector<std::vector<typename F::Elem>> tails(stairs.size());
		for (size_t s = 0; s < stairs.size(); ++s) {
			const auto& vec = cache.get(mono_mul(stairs[s], w), cost);
			tails[s].reserve(t);
			for (auto& ell : forms) tails[s].push_back(dot(K, ell, vec, cost));
		}
		ech.extend(tails);
	};

	std::vector<MPoly<F>> gens;
	std::vector<Monomial> gen_leads;
	std::set<Monomial, LexLess> agenda{mono_one(n)};
	while (!agenda.empty()) {
		Monomial b = *agenda.begin();
		agenda.erase(agenda.begin());
		bool covered = false;
		for (auto& l : gen_leads)
			if (divides(l, b)) { covered = true; break; }
		if (covered) continue;
		grow_window(b);
		for (int j = 0; j < n; ++j) grow_window(mono_mul(b, mono_var(n, j)));
		auto vb = detail::value_column(inst, cache, forms, window, b, cost);
		if (auto coeffs = ech.try_reduce(vb)) {
			gens.push_back(detail::staircase_combination(K, n, b, stairs, *coeffs));
			gen_leads.push_back(b);
		} else {
			if (static_cast<int>(stairs.size()) == inst.dim)
				throw RankDeficient("staircase cannot exceed the quotient dimension");
			ech.add(vb, &cost.rref_pivots);
			stairs.push_back(b);
			for (int j = 0; j < n; ++j) agenda.insert(mono_mul(b, mono_var(n, j)));
		}
	}
	LexGB<F> gb{n, std::move(gens), std::move(stairs)};
	sort_gb(K, gb);
	return gb;
}

/**
 * Incremental driver around mmm_ann: each call appends one form and reruns
 * the walk.  The echelon work is redone from scratch, the sequence values
 * are not: all monomial vectors live in the shared cache.
 */
template <class F>
struct MmmState {
	const IdealInstance<F>* inst = nullptr;
	MonomialCache<F>* cache = nullptr;
	std::vector<LinearForm<F>> forms;
};

template <FieldContext F>
LexGB<F> mmm_ann_incremental(MmmState<F>& state, const LinearForm<F>& new_form,
                             CostCounter& cost) {
	state.forms.push_back(new_form);
	return mmm_ann(state.forms, *state.inst, *state.cache, cost);
}

/**
 * Per-level observations of a generic_ann run, for instrumented checks:
 * candidate sets and pivot staircases in run order (last variable first),
 * then the final border.
 */
struct GenericAnnState {
	int bound = 0;
	std::vector<std::vector<Monomial>> level_candidates;
	std::vector<std::vector<Monomial>> level_staircases;
	std::vector<Monomial> border;
};

/**
 * Levelwise lex algorithm.  For each variable from the last to the first,
 * candidates are the previous staircase times powers of the variable below
 * the bound B; the pivot columns of the value matrix (rows: one per form and
 * candidate, columns: candidates) form the next staircase.  A supplied exact
 * minimal polynomial of the last variable replaces the first level.  After
 * the first variable's level, every minimal monomial outside the staircase
 * is rewritten against the final echelon to produce a generator.
 *
 * Returns nullopt when a border column does not reduce or a pivot set is not
 * closed under division; both signal that the genericity assumptions do not
 * hold for these forms, and the caller is expected to retry with more or
 * fresh forms.
 */
template <FieldContext F>
std::optional<LexGB<F>> generic_ann(const std::vector<LinearForm<F>>& forms,
                                    const IdealInstance<F>& inst, MonomialCache<F>& cache, int B,
                                    CostCounter& cost,
                                    const UniPoly<F>* known_last_minpoly = nullptr,
                                    GenericAnnState* trace = nullptr) {
	const F& K = inst.field;
	const int n = inst.n;
	const int t = static_cast<int>(forms.size());
	if (t == 0) throw InvalidArgument("need at least one form");
	if (B < 1) throw InvalidArgument("degree bound must be positive");
	if (trace) *trace = GenericAnnState{B, {}, {}, {}};

	auto unit_gb = [&] { return LexGB<F>{n, {mp_const(K, n, K.one())}, {}}; };

	std::vector<Monomial> bprime{mono_one(n)};
	int start = n - 1;
	if (known_last_minpoly) {
		int d = known_last_minpoly->deg();
		if (d < 0) throw InvalidArgument("known minimal polynomial is zero");
		auto mu = *known_last_minpoly;
		auto s = K.inv(mu.c[d]);
		for (auto& c : mu.c) c = K.mul(c, s);
		if (d == 0) return unit_gb();
		if (n == 1) {
			LexGB<F> gb{n, {mp_from_unipoly(K, mu, n, 0)}, {}};
			for (int c = 0; c < d; ++c) gb.staircase.push_back(mono_var(n, 0, c));
			return gb;
		}
		bprime.clear();
		for (int c = 0; c < d; ++c) bprime.push_back(mono_var(n, n - 1, c));
		start = n - 2;
	}

	EchelonSolver<F> ech_last(K);
	std::vector<Monomial> rows_last;
	for (int v = start; v >= 0; --v) {
		std::vector<Monomial> cand;
		for (auto& b : bprime)
			for (int m = 0; m < B; ++m) {
				auto c = b;
				c[v] += m;
				cand.push_back(c);
			}
		std::sort(cand.begin(), cand.end(), lex_less);
		for (size_t i = 1; i < cand.size(); ++i)
			if (cand[i] == cand[i - 1]) throw InvalidArgument("duplicate candidate monomial");

		EchelonSolver<F> ech(K);
		std::vector<Monomial> accepted;
		for (auto& c : cand) {
			auto col = detail::value_column(inst, cache, forms, cand, c, cost);
			if (ech.add(col, &cost.rref_pivots)) accepted.push_back(c);
		}
		if (trace) {
			trace->level_candidates.push_back(cand);
			trace->level_staircases.push_back(accepted);
		}
		if (accepted.empty()) return unit_gb();
		std::set<Monomial, LexLess> acc_set(accepted.begin(), accepted.end());
		for (auto& m : accepted)
			for (int w = v; w < n; ++w) {
				if (m[w] == 0) continue;
				auto d = m;
				--d[w];
				if (!acc_set.count(d)) return std::nullopt;
			}
		bprime = std::move(accepted);
		if (v == 0) {
			ech_last = std::move(ech);
			rows_last = std::move(cand);
		}
	}

	std::set<Monomial, LexLess> stair_set(bprime.begin(), bprime.end());
	std::set<Monomial, LexLess> delta;
	for (auto& b : bprime)
		for (int w = 0; w < n; ++w) {
			auto m = b;
			++m[w];
			if (stair_set.count(m)) continue;
			bool minimal = true;
			for (int x = 0; x < n && minimal; ++x) {
				if (m[x] == 0) continue;
				auto d = m;
				--d[x];
				if (!stair_set.count(d)) minimal = false;
			}
			if (minimal) delta.insert(m);
		}
	if (trace) trace->border.assign(delta.begin(), delta.end());

	std::vector<MPoly<F>> gens;
	for (auto& d : delta) {
		auto col = detail::value_column(inst, cache, forms, rows_last, d, cost);
		auto coeffs = ech_last.try_reduce(col);
		if (!coeffs) return std::nullopt;
		gens.push_back(detail::staircase_combination(K, n, d, bprime, *coeffs));
	}
	LexGB<F> gb{n, std::move(gens), std::move(bprime)};
	sort_gb(K, gb);
	return gb;
}

}  // namespace seqann
