#pragma once

#include <map>
#include <set>
#include <vector>

#include "seqann/quotient.hpp"

namespace seqann {

/**
 * @file oracle.hpp
 * @brief Brute-force reference computations used to check the main
 *        algorithms: truncated Hankel annihilators, ideal membership, kernel
 *        matrices of linear forms, and socle size estimation.
 *
 * Everything here is dense, unbudgeted, and deliberately shares no linear
 * algebra with the algorithms under test.
 */

namespace oracle_detail {

// row echelon accumulation by plain forward elimination
template <FieldContext F>
class DenseSpan {
 public:
	explicit DenseSpan(const F& K) : K_(&K) {}

	int size() const { return static_cast<int>(rows_.size()); }

	bool contains(std::vector<typename F::Elem> v) const {
		eliminate(v);
		for (auto& x : v)
			if (!K_->is_zero(x)) return false;
		return true;
	}

	// keeps v when independent
	bool insert(std::vector<typename F::Elem> v) {
		eliminate(v);
		int lead = -1;
		for (int i = 0; i < static_cast<int>(v.size()); ++i)
			if (!K_->is_zero(v[i])) { lead = i; break; }
		if (lead < 0) return false;
		auto s = K_->inv(v[lead]);
		for (auto& x : v) x = K_->mul(x, s);
		rows_.push_back(std::move(v));
		leads_.push_back(lead);
		return true;
	}

 private:
	void eliminate(std::vector<typename F::Elem>& v) const {
		for (size_t r = 0; r < rows_.size(); ++r) {
			auto t = v[leads_[r]];
			if (K_->is_zero(t)) continue;
			for (size_t j = 0; j < v.size(); ++j)
				v[j] = K_->sub(v[j], K_->mul(t, rows_[r][j]));
		}
	}

	const F* K_;
	std::vector<std::vector<typename F::Elem>> rows_;
	std::vector<int> leads_;
};

template <FieldContext F>
std::vector<typename F::Elem> apply_monomial(const IdealInstance<F>& inst,
                                             std::vector<typename F::Elem> v, const Monomial& m) {
	CostCounter sink;
	for (int j = 0; j < inst.n; ++j)
		for (int k = 0; k < m[j]; ++k) v = inst.mats[j].apply(inst.field, v, sink);
	return v;
}

// coefficients expressing target over the columns, or nullopt
template <FieldContext F>
std::optional<std::vector<typename F::Elem>> solve_over_columns(
    const F& K, const std::vector<std::vector<typename F::Elem>>& columns,
    const std::vector<typename F::Elem>& target) {
	Matrix<F> A(K, static_cast<int>(target.size()), static_cast<int>(columns.size()));
	for (int j = 0; j < A.cols; ++j)
		for (int i = 0; i < A.rows; ++i) A.at(i, j) = columns[j][i];
	return solve(K, A, target);
}

}  // namespace oracle_detail

/**
 * Classical lex change of order on the dense vectors X^m v1: walks monomials
 * in increasing lex order, keeps those with independent vectors as the
 * staircase, and turns each minimal dependent monomial into a generator.
 * The result is the reduced lex basis of the ideal the instance presents.
 */
template <FieldContext F>
struct FglmResult {
	LexGB<F> gb;
	std::vector<std::vector<typename F::Elem>> basis_vectors;  // aligned with gb.staircase
};

template <FieldContext F>
FglmResult<F> fglm_gb(const IdealInstance<F>& inst) {
	const F& K = inst.field;
	const int n = inst.n;
	CostCounter sink;
	oracle_detail::DenseSpan<F> span(K);
	std::map<Monomial, std::vector<typename F::Elem>, LexLess> vectors;
	vectors[mono_one(n)] = inst.v1();

	std::vector<Monomial> stairs;
	std::vector<std::vector<typename F::Elem>> stair_vecs;
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
		auto it = vectors.find(b);
		if (it == vectors.end()) {
			int last = -1;
			for (int i = n - 1; i >= 0; --i)
				if (b[i] > 0) { last = i; break; }
			auto parent = b;
			--parent[last];
			auto v = inst.mats[last].apply(K, vectors.at(parent), sink);
			it = vectors.emplace(b, std::move(v)).first;
		}
		if (span.insert(it->second)) {
			stairs.push_back(b);
			stair_vecs.push_back(it->second);
			for (int j = 0; j < n; ++j) agenda.insert(mono_mul(b, mono_var(n, j)));
		} else {
			auto coeffs = oracle_detail::solve_over_columns(K, stair_vecs, it->second);
			if (!coeffs) throw RankDeficient("dependent vector failed to solve");
			std::map<Monomial, typename F::Elem, LexLess> acc;
			acc[b] = K.one();
			for (size_t s = 0; s < stairs.size(); ++s)
				if (!K.is_zero((*coeffs)[s])) acc[stairs[s]] = K.neg((*coeffs)[s]);
			gens.push_back(mp_from_map(K, n, acc));
			gen_leads.push_back(b);
		}
	}
	if (static_cast<int>(stairs.size()) != inst.dim)
		throw RankDeficient("one vector does not generate the quotient");
	FglmResult<F> out;
	out.gb = LexGB<F>{n, std::move(gens), std::move(stairs)};
	sort_gb(K, out.gb);
	out.basis_vectors = std::move(stair_vecs);
	return out;
}

/**
 * The D x D matrix of a form against a monomial basis: entry (i,j) is
 * ell(b_i b_j), whose nullspace consists of the quotient elements whose
 * product with the form vanishes.  The basis is the lex staircase discovered
 * from the instance itself, so the matrix is symmetric by construction.
 */
template <FieldContext F>
struct KernelMatrix {
	std::vector<Monomial> basis;
	Matrix<F> mat;
	std::vector<std::vector<typename F::Elem>> nullspace;  // column vectors
};

template <FieldContext F>
KernelMatrix<F> k_matrix(const LinearForm<F>& ell, const IdealInstance<F>& inst) {
	const F& K = inst.field;
	auto fglm = fglm_gb(inst);
	const auto& basis = fglm.gb.staircase;
	const int D = inst.dim;
	KernelMatrix<F> out;
	out.basis = basis;
	out.mat = Matrix<F>(K, D, D);
	CostCounter sink;
	for (int i = 0; i < D; ++i) {
		auto vi = fglm.basis_vectors[i];
		for (int j = 0; j < D; ++j) {
			auto vij = oracle_detail::apply_monomial(inst, vi, basis[j]);
			out.mat.at(i, j) = dot(K, ell, vij, sink);
		}
	}
	out.nullspace = nullspace(K, out.mat);
	return out;
}

// rank of the concatenation [K_{l1} | ... | K_{lt}]
template <FieldContext F>
int stacked_k_rank(const std::vector<LinearForm<F>>& forms, const IdealInstance<F>& inst) {
	const F& K = inst.field;
	const int D = inst.dim;
	Matrix<F> big(K, D, D * static_cast<int>(forms.size()));
	for (size_t t = 0; t < forms.size(); ++t) {
		auto km = k_matrix(forms[t], inst);
		for (int i = 0; i < D; ++i)
			for (int j = 0; j < D; ++j) big.at(i, static_cast<int>(t) * D + j) = km.mat.at(i, j);
	}
	return rank(K, big);
}

/**
 * Monte Carlo estimate of the number of generic forms needed to cut the dual
 * down to zero: smallest t with stacked kernel rank D, minimized over three
 * seeds.  By the D-forms lemma the rank always reaches D at t = D, so max_t
 * below D is the only way to see RankDeficient on a sound instance.
 */
template <FieldContext F>
int tau_estimate(const IdealInstance<F>& inst, std::uint64_t seed, int max_t) {
	const F& K = inst.field;
	const int D = inst.dim;
	int best = -1;
	for (int trial = 0; trial < 3; ++trial) {
		Rng rng(seed + static_cast<std::uint64_t>(trial));
		std::vector<LinearForm<F>> forms;
		int found = -1;
		for (int t = 1; t <= max_t; ++t) {
			LinearForm<F> ell(D, K.zero());
			for (auto& x : ell) x = K.sample(rng);
			forms.push_back(std::move(ell));
			if (stacked_k_rank(forms, inst) == D) { found = t; break; }
		}
		if (found < 0) continue;
		if (best < 0 || found < best) best = found;
	}
	if (best < 0) throw RankDeficient("stacked kernel matrices never reach full rank");
	return best;
}

/**
 * Membership of g in the ideal presented by the instance plus the extra
 * generator Pk_power(X_n): the span of all monomial multiples of the vector
 * Pk_power(M_n) v1 is closed up under every matrix, then the vector of g is
 * tested against it.
 */
template <FieldContext F>
bool membership(const IdealInstance<F>& inst, const MPoly<F>& g, const UniPoly<F>& Pk_power) {
	const F& K = inst.field;
	CostCounter sink;
	std::vector<typename F::Elem> w(inst.dim, K.zero());
	for (int i = Pk_power.deg(); i >= 0; --i) {
		w = inst.mats[inst.n - 1].apply(K, w, sink);
		if (!K.is_zero(Pk_power.c[i])) {
			const auto& v1 = inst.v1();
			for (int r = 0; r < inst.dim; ++r) w[r] = K.add(w[r], K.mul(Pk_power.c[i], v1[r]));
		}
	}
	oracle_detail::DenseSpan<F> span(K);
	std::vector<std::vector<typename F::Elem>> worklist;
	if (span.insert(w)) worklist.push_back(std::move(w));
	while (!worklist.empty()) {
		auto v = std::move(worklist.back());
		worklist.pop_back();
		for (int j = 0; j < inst.n; ++j) {
			auto image = inst.mats[j].apply(K, v, sink);
			if (span.insert(image)) worklist.push_back(std::move(image));
		}
	}
	// vector of g over the instance basis
	std::vector<typename F::Elem> acc(inst.dim, K.zero());
	for (auto& [m, c] : g.terms) {
		auto v = inst.v1();
		v = oracle_detail::apply_monomial(inst, std::move(v), m);
		for (int r = 0; r < inst.dim; ++r) acc[r] = K.add(acc[r], K.mul(c, v[r]));
	}
	return span.contains(std::move(acc));
}

// rank of q(M_var) as a dense matrix
template <FieldContext F>
int poly_matrix_rank(const IdealInstance<F>& inst, const UniPoly<F>& q, int var) {
	const F& K = inst.field;
	const int D = inst.dim;
	CostCounter sink;
	Matrix<F> A(K, D, D);
	for (int col = 0; col < D; ++col) {
		std::vector<typename F::Elem> e(D, K.zero());
		e[col] = K.one();
		std::vector<typename F::Elem> w(D, K.zero());
		for (int i = q.deg(); i >= 0; --i) {
			w = inst.mats[var].apply(K, w, sink);
			if (!K.is_zero(q.c[i]))
				for (int r = 0; r < D; ++r) w[r] = K.add(w[r], K.mul(q.c[i], e[r]));
		}
		for (int r = 0; r < D; ++r) A.at(r, col) = w[r];
	}
	return rank(K, A);
}

/**
 * Annihilator of the forms' sequences from a truncated value table: all
 * monomials of degree at most d are both rows and columns, the greedy lex
 * staircase is read off the columns, and the minimal monomials outside it
 * become generators.  Throws BoundTooSmall when the truncation visibly cuts
 * into the answer: a needed border monomial exceeds the degree bound, or the
 * pivot set is not closed under division.
 */
template <FieldContext F>
LexGB<F> brute_hankel_ann(const std::vector<LinearForm<F>>& forms, const IdealInstance<F>& inst,
                          int degree_bound) {
	const F& K = inst.field;
	const int n = inst.n;
	const int t = static_cast<int>(forms.size());
	if (t == 0) throw InvalidArgument("need at least one form");
	if (degree_bound < 1) throw InvalidArgument("degree bound must be positive");
	CostCounter sink;

	auto monomials = monomials_up_to_degree(n, degree_bound);
	std::sort(monomials.begin(), monomials.end(), lex_less);

	// vectors of all products, reached by decrementing the last exponent
	std::map<Monomial, std::vector<typename F::Elem>, LexLess> vectors;
	vectors[mono_one(n)] = inst.v1();
	auto vector_of = [&](const Monomial& m) -> const std::vector<typename F::Elem>& {
		auto found = vectors.find(m);
		if (found != vectors.end()) return found->second;
		std::vector<Monomial> chain;
		auto cur = m;
		while (vectors.find(cur) == vectors.end()) {
			chain.push_back(cur);
			int last = -1;
			for (int i = n - 1; i >= 0; --i)
				if (cur[i] > 0) { last = i; break; }
			--cur[last];
		}
		for (auto walk = chain.rbegin(); walk != chain.rend(); ++walk) {
			int last = -1;
			for (int i = n - 1; i >= 0; --i)
				if ((*walk)[i] > 0) { last = i; break; }
			auto parent = *walk;
			--parent[last];
			vectors.emplace(*walk, inst.mats[last].apply(K, vectors.at(parent), sink));
		}
		return vectors.at(m);
	};

	auto column_of = [&](const Monomial& b) {
		std::vector<typename F::Elem> col;
		col.reserve(monomials.size() * t);
		for (auto& bp : monomials) {
			const auto& vec = vector_of(mono_mul(bp, b));
			for (auto& ell : forms) col.push_back(dot(K, ell, vec, sink));
		}
		return col;
	};

	oracle_detail::DenseSpan<F> span(K);
	std::vector<Monomial> stairs;
	std::vector<std::vector<typename F::Elem>> stair_cols;
	for (auto& b : monomials) {
		auto col = column_of(b);
		if (span.insert(col)) {
			stairs.push_back(b);
			stair_cols.push_back(std::move(col));
		}
	}
	if (stairs.empty()) return LexGB<F>{n, {mp_const(K, n, K.one())}, {}};

	std::set<Monomial, LexLess> stair_set(stairs.begin(), stairs.end());
	for (auto& m : stairs)
		for (int w = 0; w < n; ++w) {
			if (m[w] == 0) continue;
			auto d = m;
			--d[w];
			if (!stair_set.count(d))
				throw BoundTooSmall("pivot monomials not closed under division");
		}

	std::set<Monomial, LexLess> delta;
	for (auto& b : stairs)
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

	std::vector<MPoly<F>> gens;
	for (auto& d : delta) {
		if (total_deg(d) > degree_bound)
			throw BoundTooSmall("border monomial exceeds the degree bound");
		auto coeffs = oracle_detail::solve_over_columns(K, stair_cols, column_of(d));
		if (!coeffs) throw BoundTooSmall("border column does not reduce over the staircase");
		std::map<Monomial, typename F::Elem, LexLess> acc;
		acc[d] = K.one();
		for (size_t s = 0; s < stairs.size(); ++s)
			if (!K.is_zero((*coeffs)[s])) acc[stairs[s]] = K.neg((*coeffs)[s]);
		gens.push_back(mp_from_map(K, n, acc));
	}
	LexGB<F> gb{n, std::move(gens), std::move(stairs)};
	sort_gb(K, gb);
	return gb;
}

template <FieldContext F>
LexGB<F> brute_hankel_ann(const std::vector<LinearForm<F>>& forms, const IdealInstance<F>& inst) {
	return brute_hankel_ann(forms, inst, inst.dim);
}

}  // namespace seqann
