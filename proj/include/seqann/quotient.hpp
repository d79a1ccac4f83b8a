#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "seqann/linalg.hpp"
#include "seqann/mpoly.hpp"

namespace seqann {

/**
 * @file quotient.hpp
 * @brief A zero-dimensional quotient algebra presented by sparse
 *        multiplication matrices, plus the sequence machinery on top of it.
 *
 * Coordinates are taken in some monomial basis; the coordinate vector of the
 * class of 1 is stored explicitly (it need not be a unit vector).  Linear
 * forms are row vectors in the dual basis.
 */
struct CostCounter {
	long long matvec = 0;
	long long dot = 0;
	long long rref_pivots = 0;
};

template <class F>
struct SparseMat {
	int dim = 0;
	// entry lists sorted by (row, col); both orientations are kept so that a
	// product can skip zero entries of the vector operand on either side
	std::vector<std::vector<std::pair<int, typename F::Elem>>> by_row, by_col;

	SparseMat() = default;
	SparseMat(const F& K, int d,
	          const std::vector<std::tuple<int, int, typename F::Elem>>& entries)
	    : dim(d), by_row(d), by_col(d) {
		for (auto& [i, j, v] : entries) {
			if (i < 0 || i >= d || j < 0 || j >= d)
				throw DimensionMismatch("sparse entry out of range");
			if (K.is_zero(v)) continue;
			by_row[i].push_back({j, v});
			by_col[j].push_back({i, v});
		}
		for (auto& r : by_row)
			std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
		for (auto& c : by_col)
			std::sort(c.begin(), c.end(), [](auto& a, auto& b) { return a.first < b.first; });
	}

	long long nnz() const {
		long long t = 0;
		for (auto& r : by_row) t += static_cast<long long>(r.size());
		return t;
	}

	// y = M x, accumulated down columns with nonzero x_j
	std::vector<typename F::Elem> apply(const F& K, const std::vector<typename F::Elem>& x,
	                                    CostCounter& cost) const {
		std::vector<typename F::Elem> y(dim, K.zero());
		for (int j = 0; j < dim; ++j) {
			if (K.is_zero(x[j])) continue;
			for (auto& [i, v] : by_col[j]) y[i] = K.add(y[i], K.mul(v, x[j]));
		}
		++cost.matvec;
		return y;
	}

	// y = x M (row vector times matrix), accumulated over rows with nonzero x_i
	std::vector<typename F::Elem> apply_left(const F& K, const std::vector<typename F::Elem>& x,
	                                         CostCounter& cost) const {
		std::vector<typename F::Elem> y(dim, K.zero());
		for (int i = 0; i < dim; ++i) {
			if (K.is_zero(x[i])) continue;
			for (auto& [j, v] : by_row[i]) y[j] = K.add(y[j], K.mul(v, x[i]));
		}
		++cost.matvec;
		return y;
	}

	std::vector<std::tuple<int, int, typename F::Elem>> entries() const {
		std::vector<std::tuple<int, int, typename F::Elem>> out;
		for (int i = 0; i < dim; ++i)
			for (auto& [j, v] : by_row[i]) out.push_back({i, j, v});
		return out;
	}
};

template <FieldContext F>
typename F::Elem dot(const F& K, const std::vector<typename F::Elem>& a,
                     const std::vector<typename F::Elem>& b, CostCounter& cost) {
	auto s = K.zero();
	for (size_t i = 0; i < a.size(); ++i) s = K.add(s, K.mul(a[i], b[i]));
	++cost.dot;
	return s;
}

template <class F>
using LinearForm = std::vector<typename F::Elem>;

template <class F>
struct IdealInstance {
	F field;
	int n = 0;
	int dim = 0;
	std::vector<SparseMat<F>> mats;       // multiplication by X_1, ..., X_n
	std::vector<typename F::Elem> one;    // coordinates of the class of 1
	std::vector<Monomial> labels;         // optional basis labels, empty if unknown

	const std::vector<typename F::Elem>& v1() const { return one; }
};

// the identity one vector e_0, for instances built on a staircase basis
template <FieldContext F>
std::vector<typename F::Elem> unit_one_vector(const F& K, int dim) {
	std::vector<typename F::Elem> v(dim, K.zero());
	v[0] = K.one();
	return v;
}

template <FieldContext F>
void validate_instance(const IdealInstance<F>& inst) {
	if (inst.n < 1) throw DimensionMismatch("need at least one variable");
	if (inst.dim < 1) throw DimensionMismatch("quotient dimension must be positive");
	if (static_cast<int>(inst.mats.size()) != inst.n)
		throw DimensionMismatch("expected one matrix per variable");
	for (auto& m : inst.mats)
		if (m.dim != inst.dim) throw DimensionMismatch("matrix size differs from dimension");
	if (static_cast<int>(inst.one.size()) != inst.dim)
		throw DimensionMismatch("one vector length differs from dimension");
	bool nz = false;
	for (auto& c : inst.one)
		if (!inst.field.is_zero(c)) { nz = true; break; }
	if (!nz) throw DimensionMismatch("one vector is zero");
	if (!inst.labels.empty()) {
		if (static_cast<int>(inst.labels.size()) != inst.dim)
			throw DimensionMismatch("label count differs from dimension");
		for (auto& m : inst.labels)
			if (static_cast<int>(m.size()) != inst.n)
				throw DimensionMismatch("label arity differs from variable count");
	}
}

// pairwise commutation, checked column by column
template <FieldContext F>
void check_commutation(const IdealInstance<F>& inst) {
	const F& K = inst.field;
	CostCounter scratch;
	for (int a = 0; a < inst.n; ++a)
		for (int b = a + 1; b < inst.n; ++b)
			for (int k = 0; k < inst.dim; ++k) {
				std::vector<typename F::Elem> e(inst.dim, K.zero());
				e[k] = K.one();
				auto ab = inst.mats[a].apply(K, inst.mats[b].apply(K, e, scratch), scratch);
				auto ba = inst.mats[b].apply(K, inst.mats[a].apply(K, e, scratch), scratch);
				for (int i = 0; i < inst.dim; ++i)
					if (!(ab[i] == ba[i])) throw NonCommuting("multiplication matrices do not commute");
			}
}

/**
 * Cache of the vectors X^m * v1, one matrix-vector product per new monomial.
 * New monomials are reached from a cached divisor by decrementing the last
 * nonzero exponent, so chains through a staircase share long prefixes.
 */
template <class F>
class MonomialCache {
 public:
	explicit MonomialCache(const IdealInstance<F>& inst) : inst_(&inst) {
		store_[mono_one(inst.n)] = inst.v1();
	}

	const std::vector<typename F::Elem>& get(const Monomial& m, CostCounter& cost) {
		auto it = store_.find(m);
		if (it != store_.end()) return it->second;
		int last = -1;
		for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
			if (m[i] > 0) { last = i; break; }
		auto parent = m;
		--parent[last];
		const auto& pv = get(parent, cost);
		auto v = inst_->mats[last].apply(inst_->field, pv, cost);
		return store_.emplace(m, std::move(v)).first->second;
	}

	size_t size() const { return store_.size(); }

 private:
	const IdealInstance<F>* inst_;
	std::map<Monomial, std::vector<typename F::Elem>, LexLess> store_;
};

// value of the column vector g(X) * v1
template <FieldContext F>
std::vector<typename F::Elem> normal_form_vector(const IdealInstance<F>& inst,
                                                 MonomialCache<F>& cache, const MPoly<F>& g,
                                                 CostCounter& cost) {
	const F& K = inst.field;
	std::vector<typename F::Elem> acc(inst.dim, K.zero());
	for (auto& [m, c] : g.terms) {
		const auto& v = cache.get(m, cost);
		for (int i = 0; i < inst.dim; ++i) acc[i] = K.add(acc[i], K.mul(c, v[i]));
	}
	return acc;
}

// sequence term u_ell(m) = ell(X^m * v1)
template <FieldContext F>
typename F::Elem sequence_value(const IdealInstance<F>& inst, MonomialCache<F>& cache,
                                const LinearForm<F>& ell, const Monomial& m, CostCounter& cost) {
	return dot(inst.field, ell, cache.get(m, cost), cost);
}

/**
 * Transposed action ell -> ell . q(M_var): Horner from the top coefficient,
 * one transposed product per degree step.
 */
template <FieldContext F>
LinearForm<F> transposed_poly_mul(const IdealInstance<F>& inst, const LinearForm<F>& ell,
                                  const UniPoly<F>& q, int var, CostCounter& cost) {
	const F& K = inst.field;
	int d = q.deg();
	if (d < 0) return LinearForm<F>(inst.dim, K.zero());
	LinearForm<F> r(inst.dim, K.zero());
	for (int i = 0; i < inst.dim; ++i) r[i] = K.mul(q.c[d], ell[i]);
	for (int k = d - 1; k >= 0; --k) {
		r = inst.mats[var].apply_left(K, r, cost);
		if (!K.is_zero(q.c[k]))
			for (int i = 0; i < inst.dim; ++i) r[i] = K.add(r[i], K.mul(q.c[k], ell[i]));
	}
	return r;
}

/**
 * Simultaneous computation of ell . (prefactor * prod_{j != k} leaf_j) for
 * every leaf k, by walking a subproduct tree top down and multiplying each
 * branch by the label of its sibling.  All polynomials act in variable `var`.
 * Total cost: deg(prefactor) + at most one full level degree per tree level.
 */
template <FieldContext F>
std::vector<LinearForm<F>> batch_sibling_products(const IdealInstance<F>& inst,
                                                  const LinearForm<F>& ell,
                                                  const UniPoly<F>& prefactor,
                                                  const std::vector<UniPoly<F>>& leaves, int var,
                                                  CostCounter& cost) {
	const F& K = inst.field;
	auto root_form = transposed_poly_mul(inst, ell, prefactor, var, cost);
	std::vector<LinearForm<F>> out(leaves.size());
	if (leaves.empty()) return out;
	if (leaves.size() == 1) {
		out[0] = std::move(root_form);
		return out;
	}
	auto tree = build_subproduct_tree(K, leaves);
	std::vector<int> leaf_of(tree.nodes.size(), -1);
	for (size_t k = 0; k < leaves.size(); ++k) leaf_of[tree.leaf_index[k]] = static_cast<int>(k);
	// pair each node index with the form carrying the product of all labels
	// outside that node's subtree
	std::vector<std::pair<int, LinearForm<F>>> stack{{tree.root, std::move(root_form)}};
	while (!stack.empty()) {
		auto [node, form] = std::move(stack.back());
		stack.pop_back();
		const auto& nd = tree.nodes[node];
		if (nd.left < 0) {
			out[leaf_of[node]] = std::move(form);
			continue;
		}
		auto lf = transposed_poly_mul(inst, form, tree.nodes[nd.right].label, var, cost);
		auto rf = transposed_poly_mul(inst, form, tree.nodes[nd.left].label, var, cost);
		stack.push_back({nd.left, std::move(lf)});
		stack.push_back({nd.right, std::move(rf)});
	}
	return out;
}

/**
 * Projections of a form onto powers of the last variable:
 *   s[i] = ell(X_n^i)            for i < 2 dim,
 *   t[j][i] = ell(X_{j+1} X_n^i) for j < n - 1, i < dim.
 * The column vectors X_n^i v1 go through the shared cache (one product each
 * when cold), the rows ell M_{j+1} cost one transposed product each.
 */
template <FieldContext F>
struct PowerProjections {
	std::vector<typename F::Elem> s;
	std::vector<std::vector<typename F::Elem>> t;
};

template <FieldContext F>
PowerProjections<F> power_projections(const IdealInstance<F>& inst, MonomialCache<F>& cache,
                                      const LinearForm<F>& ell, CostCounter& cost) {
	const F& K = inst.field;
	int D = inst.dim, n = inst.n;
	PowerProjections<F> out;
	out.s.reserve(2 * D);
	out.t.assign(n - 1, std::vector<typename F::Elem>(D, K.zero()));
	std::vector<LinearForm<F>> rows(n - 1);
	for (int j = 0; j + 1 < n; ++j) rows[j] = inst.mats[j].apply_left(K, ell, cost);
	Monomial m = mono_one(n);
	for (int i = 0; i < 2 * D; ++i) {
		m[n - 1] = i;
		const auto& v = cache.get(m, cost);
		out.s.push_back(dot(K, ell, v, cost));
		if (i < D)
			for (int j = 0; j + 1 < n; ++j) out.t[j][i] = dot(K, rows[j], v, cost);
	}
	return out;
}

// instance over the extension field, entries embedded coefficientwise
template <FieldContext FBase, class FExt>
IdealInstance<FExt> embed_instance(const IdealInstance<FBase>& inst, const FExt& L) {
	IdealInstance<FExt> out{L, inst.n, inst.dim, {}, {}, inst.labels};
	for (auto& m : inst.mats) {
		std::vector<std::tuple<int, int, typename FExt::Elem>> entries;
		for (auto& [i, j, v] : m.entries()) entries.push_back({i, j, L.embed(v)});
		out.mats.push_back(SparseMat<FExt>(L, inst.dim, entries));
	}
	for (auto& c : inst.one) out.one.push_back(L.embed(c));
	return out;
}

// multiplication matrices of the translated coordinates X_i - xi_i; basis
// labels no longer describe monomial classes, so they are dropped
template <FieldContext F>
IdealInstance<F> shift_instance(const IdealInstance<F>& inst,
                                const std::vector<typename F::Elem>& xi) {
	const F& K = inst.field;
	IdealInstance<F> out{K, inst.n, inst.dim, {}, inst.one, {}};
	for (int v = 0; v < inst.n; ++v) {
		auto entries = inst.mats[v].entries();
		if (!K.is_zero(xi[v])) {
			std::map<std::pair<int, int>, typename F::Elem> acc;
			for (auto& [i, j, val] : entries) acc[{i, j}] = val;
			for (int i = 0; i < inst.dim; ++i) {
				auto it = acc.find({i, i});
				if (it == acc.end())
					acc[{i, i}] = K.neg(xi[v]);
				else
					it->second = K.sub(it->second, xi[v]);
			}
			entries.clear();
			for (auto& [ij, val] : acc) entries.push_back({ij.first, ij.second, val});
		}
		out.mats.push_back(SparseMat<F>(K, inst.dim, entries));
	}
	return out;
}

// minimal polynomial of the Krylov sequence v, M v, M^2 v, ...
template <FieldContext F>
UniPoly<F> krylov_minpoly(const IdealInstance<F>& inst, int var, CostCounter& cost) {
	const F& K = inst.field;
	int D = inst.dim;
	EchelonSolver<F> ech(K);
	std::vector<std::vector<typename F::Elem>> krylov{inst.v1()};
	ech.add(krylov.back(), &cost.rref_pivots);
	while (true) {
		auto next = inst.mats[var].apply(K, krylov.back(), cost);
		auto coeffs = ech.try_reduce(next);
		if (coeffs) {
			UniPoly<F> mu;
			mu.c.assign(krylov.size() + 1, K.zero());
			mu.c.back() = K.one();
			for (size_t i = 0; i < coeffs->size(); ++i) mu.c[i] = K.neg((*coeffs)[i]);
			trim(K, mu);
			return mu;
		}
		if (static_cast<int>(krylov.size()) == D)
			throw RankDeficient("Krylov space exceeds quotient dimension");
		ech.add(next, &cost.rref_pivots);
		krylov.push_back(std::move(next));
	}
}

}  // namespace seqann
