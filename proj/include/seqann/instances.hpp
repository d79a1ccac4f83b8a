#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "seqann/prime_field.hpp"
#include "seqann/quotient.hpp"
#include "seqann/unipoly_factor.hpp"

namespace seqann {

/**
 * @file instances.hpp
 * @brief Instance generators with known ground truth.
 *
 * Three primary families, each with a closed-form reduced lex basis:
 *   - fat rational point: the e-th power of the maximal ideal of a point
 *     a in K^n, on the local basis (X-a)^alpha with |alpha| < e;
 *   - parametrized fat point: the e-th power of a degree-f maximal ideal
 *     in shape position <X_j - g_j(X_n), P(X_n)> with deg g_j < f;
 *   - curvilinear: <X_j - g_j(X_n), P(X_n)^e> with deg g_j < e f, whose
 *     quotient is generated by the last variable alone.
 * Components are assembled block-diagonally and optionally conjugated by a
 * seeded random change of basis.
 */

struct ComponentSpec {
	enum class Kind { fat_point, fat_parametrized, curvilinear };
	Kind kind = Kind::fat_point;
	std::vector<std::uint64_t> point;            // fat_point: a_1..a_n
	UniPoly<PrimeField> p;                       // others: monic irreducible P(X_n)
	std::vector<UniPoly<PrimeField>> g;          // parametrizations g_1..g_{n-1}; empty = draw
	int e = 1;
};

struct TruthComponent {
	UniPoly<PrimeField> pk;
	int ek = 1;
	int fk = 1;
	int dk = 1;
	LexGB<PrimeField> gb;
};

struct GroundTruth {
	std::uint64_t characteristic = 0;
	int n = 0;
	int dim = 0;
	std::vector<TruthComponent> components;
};

inline long long binom(int a, int b) {
	if (b < 0 || b > a) return 0;
	long long r = 1;
	for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
	return r;
}

inline int component_dim(const ComponentSpec& s, int n) {
	switch (s.kind) {
		case ComponentSpec::Kind::fat_point:
			return static_cast<int>(binom(n + s.e - 1, n));
		case ComponentSpec::Kind::fat_parametrized:
			return static_cast<int>(binom(n + s.e - 1, n)) * (s.p.deg());
		case ComponentSpec::Kind::curvilinear:
			return s.e * s.p.deg();
	}
	return 0;
}

// replace each generator's tail by its normal form against the basis
template <FieldContext F>
void interreduce_tails(const F& K, LexGB<F>& gb) {
	for (auto& g : gb.gens) {
		auto lead = g.terms.front();
		MPoly<F> tail{gb.n, {g.terms.begin() + 1, g.terms.end()}};
		auto nf = gb_reduce(K, gb, tail);
		MPoly<F> out{gb.n, {lead}};
		for (auto& t : nf.terms) out.terms.push_back(t);
		g = std::move(out);
	}
}

/**
 * Multiplication matrices on the staircase basis of a complete reduced lex
 * basis: each column is the normal form of X_j times a staircase monomial.
 * The class of 1 is the first basis vector and the staircase is recorded as
 * the labels.
 */
template <FieldContext F>
IdealInstance<F> gb_to_instance(const F& K, const LexGB<F>& gb) {
	const int n = gb.n;
	const int D = static_cast<int>(gb.staircase.size());
	if (D == 0) throw InvalidArgument("staircase is empty");
	std::map<Monomial, int, LexLess> index;
	for (int i = 0; i < D; ++i) index[gb.staircase[i]] = i;
	IdealInstance<F> inst{K, n, D, {}, unit_one_vector(K, D), gb.staircase};
	for (int j = 0; j < n; ++j) {
		std::vector<std::tuple<int, int, typename F::Elem>> entries;
		for (int s = 0; s < D; ++s) {
			auto m = mono_mul(gb.staircase[s], mono_var(n, j));
			auto hit = index.find(m);
			if (hit != index.end()) {
				entries.push_back({hit->second, s, K.one()});
				continue;
			}
			auto nf = gb_reduce(K, gb, mp_term(K, n, m, K.one()));
			for (auto& [tm, tc] : nf.terms) {
				auto ti = index.find(tm);
				if (ti == index.end())
					throw InvalidArgument("normal form leaves the staircase");
				entries.push_back({ti->second, s, tc});
			}
		}
		inst.mats.push_back(SparseMat<F>(K, D, entries));
	}
	return inst;
}

namespace gen_detail {

inline UniPoly<PrimeField> random_poly_below(const PrimeField& K, Rng& rng, int deg_bound) {
	UniPoly<PrimeField> f;
	f.c.resize(deg_bound, K.zero());
	for (auto& c : f.c) c = K.sample(rng);
	trim(K, f);
	return f;
}

// block data prior to assembly
struct Block {
	std::vector<SparseMat<PrimeField>> mats;
	int dim = 0;
	TruthComponent truth;
};

inline Block build_fat_point(const PrimeField& K, const ComponentSpec& spec, int n) {
	const int e = spec.e;
	Block blk;
	blk.dim = static_cast<int>(binom(n + e - 1, n));
	// local basis (X-a)^alpha, |alpha| < e, ascending lex
	auto basis = monomials_up_to_degree(n, e - 1);
	std::sort(basis.begin(), basis.end(), lex_less);
	std::map<Monomial, int, LexLess> index;
	for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
	for (int j = 0; j < n; ++j) {
		std::vector<std::tuple<int, int, std::uint64_t>> entries;
		auto aj = K.from_int(static_cast<std::int64_t>(spec.point[j]));
		for (size_t s = 0; s < basis.size(); ++s) {
			if (!K.is_zero(aj)) entries.push_back({static_cast<int>(s), static_cast<int>(s), aj});
			if (total_deg(basis[s]) < e - 1) {
				auto up = mono_mul(basis[s], mono_var(n, j));
				entries.push_back({index.at(up), static_cast<int>(s), K.one()});
			}
		}
		blk.mats.push_back(SparseMat<PrimeField>(K, blk.dim, entries));
	}
	std::vector<typename PrimeField::Elem> minus_a(n);
	for (int j = 0; j < n; ++j)
		minus_a[j] = K.neg(K.from_int(static_cast<std::int64_t>(spec.point[j])));
	LexGB<PrimeField> gb{n, {}, basis};
	for (auto& m : monomials_up_to_degree(n, e))
		if (total_deg(m) == e)
			gb.gens.push_back(mp_translate(K, mp_term(K, n, m, K.one()), minus_a));
	sort_gb(K, gb);
	interreduce_tails(K, gb);
	auto an = K.from_int(static_cast<std::int64_t>(spec.point[n - 1]));
	blk.truth = TruthComponent{poly_from(K, {K.neg(an), K.one()}), e, 1, blk.dim, std::move(gb)};
	return blk;
}

inline Block build_curvilinear(const PrimeField& K, const ComponentSpec& spec,
                               const std::vector<UniPoly<PrimeField>>& g, int n) {
	const int e = spec.e, f = spec.p.deg();
	const int d = e * f;
	Block blk;
	blk.dim = d;
	auto pe = poly_pow(K, spec.p, static_cast<std::uint64_t>(e));
	// companion matrix of P^e on the basis 1, X_n, ..., X_n^{d-1}
	std::vector<std::tuple<int, int, std::uint64_t>> comp;
	for (int c = 0; c + 1 < d; ++c) comp.push_back({c + 1, c, K.one()});
	for (int r = 0; r < d; ++r)
		if (!K.is_zero(pe.c[r])) comp.push_back({r, d - 1, K.neg(pe.c[r])});
	SparseMat<PrimeField> companion(K, d, comp);
	CostCounter sink;
	for (int j = 0; j + 1 < n; ++j) {
		std::vector<std::tuple<int, int, std::uint64_t>> entries;
		for (int c = 0; c < d; ++c) {
			std::vector<typename PrimeField::Elem> unit(d, K.zero()), w(d, K.zero());
			unit[c] = K.one();
			for (int k = g[j].deg(); k >= 0; --k) {
				w = companion.apply(K, w, sink);
				if (!K.is_zero(g[j].c[k]))
					for (int r = 0; r < d; ++r) w[r] = K.add(w[r], K.mul(g[j].c[k], unit[r]));
			}
			for (int r = 0; r < d; ++r)
				if (!K.is_zero(w[r])) entries.push_back({r, c, w[r]});
		}
		blk.mats.push_back(SparseMat<PrimeField>(K, d, entries));
	}
	blk.mats.push_back(std::move(companion));
	LexGB<PrimeField> gb{n, {}, {}};
	for (int c = 0; c < d; ++c) gb.staircase.push_back(mono_var(n, n - 1, c));
	for (int j = 0; j + 1 < n; ++j)
		gb.gens.push_back(mp_sub(K, mp_term(K, n, mono_var(n, j), K.one()),
		                         mp_from_unipoly(K, g[j], n, n - 1)));
	gb.gens.push_back(mp_from_unipoly(K, pe, n, n - 1));
	sort_gb(K, gb);
	blk.truth = TruthComponent{spec.p, e, f, d, std::move(gb)};
	return blk;
}

inline Block build_fat_parametrized(const PrimeField& K, const ComponentSpec& spec,
                                    const std::vector<UniPoly<PrimeField>>& g, int n) {
	const int e = spec.e, f = spec.p.deg();
	Block blk;
	blk.dim = static_cast<int>(binom(n + e - 1, n)) * f;
	// generators: all products over (n-1)-ary maximal-ideal factors and P
	std::vector<MPoly<PrimeField>> factors;
	for (int j = 0; j + 1 < n; ++j)
		factors.push_back(mp_sub(K, mp_term(K, n, mono_var(n, j), K.one()),
		                         mp_from_unipoly(K, g[j], n, n - 1)));
	factors.push_back(mp_from_unipoly(K, spec.p, n, n - 1));
	LexGB<PrimeField> gb{n, {}, {}};
	for (auto& a : monomials_up_to_degree(n, e)) {
		if (total_deg(a) != e) continue;
		auto prod = mp_const(K, n, K.one());
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < a[j]; ++k) prod = mp_mul(K, prod, factors[j]);
		gb.gens.push_back(std::move(prod));
	}
	std::vector<Monomial> leads;
	for (auto& gpoly : gb.gens) leads.push_back(gpoly.terms.front().first);
	gb.staircase = staircase_from_leads(K, n, leads);
	if (static_cast<int>(gb.staircase.size()) != blk.dim)
		throw InvalidArgument("parametrized fat point staircase has unexpected size");
	sort_gb(K, gb);
	interreduce_tails(K, gb);
	auto inst = gb_to_instance(K, gb);
	blk.mats = std::move(inst.mats);
	blk.truth = TruthComponent{spec.p, e, f, blk.dim, std::move(gb)};
	return blk;
}

}  // namespace gen_detail

/**
 * Build a block-diagonal instance from component specifications, with the
 * per-component reduced lex bases as ground truth.  Components are sorted
 * the same way factorizations are (multiplicity >= 2 first, then degree and
 * coefficients of the radical polynomial), so reports line up with the truth
 * componentwise.  Missing parametrizations are drawn from the seed.
 */
inline std::pair<IdealInstance<PrimeField>, GroundTruth> gen_instance(
    const std::vector<ComponentSpec>& specs, const PrimeField& K, int n, std::uint64_t seed,
    bool conjugate) {
	if (n < 1) throw InvalidArgument("need at least one variable");
	if (specs.empty()) throw InvalidArgument("need at least one component");
	Rng rng(seed);

	// resolve parametrizations and radical data up front
	struct Resolved {
		ComponentSpec spec;
		std::vector<UniPoly<PrimeField>> g;
		UniPoly<PrimeField> radical;  // monic irreducible X_n-data
	};
	std::vector<Resolved> resolved;
	int pmin_deg = 0;
	for (size_t idx = 0; idx < specs.size(); ++idx) {
		Resolved r;
		r.spec = specs[idx];
		if (r.spec.e < 1) throw InvalidArgument("multiplicity must be positive");
		auto forked = rng.fork(static_cast<std::uint64_t>(idx));
		if (r.spec.kind == ComponentSpec::Kind::fat_point) {
			if (static_cast<int>(r.spec.point.size()) != n)
				throw InvalidArgument("point arity differs from variable count");
			auto an = K.from_int(static_cast<std::int64_t>(r.spec.point[n - 1]));
			r.radical = poly_from(K, {K.neg(an), K.one()});
			pmin_deg += r.spec.e;
		} else {
			r.spec.p = monic(K, r.spec.p);
			if (!is_irreducible(K, r.spec.p))
				throw InvalidArgument("component polynomial must be irreducible");
			int f = r.spec.p.deg();
			int gbound = r.spec.kind == ComponentSpec::Kind::curvilinear ? r.spec.e * f : f;
			if (r.spec.g.empty()) {
				for (int j = 0; j + 1 < n; ++j)
					r.g.push_back(gen_detail::random_poly_below(K, forked, gbound));
			} else {
				if (static_cast<int>(r.spec.g.size()) != n - 1)
					throw InvalidArgument("expected one parametrization per leading variable");
				for (auto& gj : r.spec.g) {
					if (gj.deg() >= gbound)
						throw InvalidArgument("parametrization degree too large");
					r.g.push_back(gj);
				}
			}
			r.radical = r.spec.p;
			pmin_deg += r.spec.e * f;
		}
		resolved.push_back(std::move(r));
	}
	for (size_t i = 0; i < resolved.size(); ++i)
		for (size_t j = i + 1; j < resolved.size(); ++j)
			if (poly_eq(K, resolved[i].radical, resolved[j].radical))
				throw SeparationViolated("components share their last-variable data");
	if (K.characteristic() <= static_cast<std::uint64_t>(pmin_deg))
		throw FieldTooSmall("characteristic does not exceed the minimal polynomial degree");

	std::sort(resolved.begin(), resolved.end(), [&](const Resolved& a, const Resolved& b) {
		bool am = a.spec.e >= 2, bm = b.spec.e >= 2;
		if (am != bm) return am;
		return coeff_lex_less(a.radical, b.radical);
	});

	std::vector<gen_detail::Block> blocks;
	for (auto& r : resolved) {
		switch (r.spec.kind) {
			case ComponentSpec::Kind::fat_point:
				blocks.push_back(gen_detail::build_fat_point(K, r.spec, n));
				break;
			case ComponentSpec::Kind::curvilinear:
				blocks.push_back(gen_detail::build_curvilinear(K, r.spec, r.g, n));
				break;
			case ComponentSpec::Kind::fat_parametrized:
				blocks.push_back(gen_detail::build_fat_parametrized(K, r.spec, r.g, n));
				break;
		}
	}

	int D = 0;
	for (auto& b : blocks) D += b.dim;
	IdealInstance<PrimeField> inst{K, n, D, {}, std::vector<std::uint64_t>(D, K.zero()), {}};
	GroundTruth truth{K.characteristic(), n, D, {}};
	for (int j = 0; j < n; ++j) {
		std::vector<std::tuple<int, int, std::uint64_t>> entries;
		int off = 0;
		for (auto& b : blocks) {
			for (auto& [r, c, v] : b.mats[j].entries()) entries.push_back({off + r, off + c, v});
			off += b.dim;
		}
		inst.mats.push_back(SparseMat<PrimeField>(K, D, entries));
	}
	{
		int off = 0;
		for (auto& b : blocks) {
			inst.one[off] = K.one();
			off += b.dim;
		}
	}
	for (auto& b : blocks) truth.components.push_back(std::move(b.truth));

	if (blocks.size() == 1 && !conjugate) {
		auto& only = resolved.front();
		if (only.spec.kind != ComponentSpec::Kind::fat_point)
			inst.labels = truth.components.front().gb.staircase;
		else {
			bool origin = true;
			for (auto& a : only.spec.point)
				if (!K.is_zero(K.from_int(static_cast<std::int64_t>(a)))) origin = false;
			if (origin) inst.labels = truth.components.front().gb.staircase;
		}
	}

	if (conjugate) {
		auto crng = rng.fork(0x636F6E6Aull);
		Matrix<PrimeField> S(K, D, D);
		std::optional<Matrix<PrimeField>> Sinv;
		do {
			for (auto& x : S.a) x = K.sample(crng);
			Sinv = inverse(K, S);
		} while (!Sinv);
		std::vector<SparseMat<PrimeField>> conj;
		for (auto& m : inst.mats) {
			Matrix<PrimeField> Md(K, D, D);
			for (auto& [r, c, v] : m.entries()) Md.at(r, c) = v;
			auto prod = matmul(K, *Sinv, matmul(K, Md, S));
			std::vector<std::tuple<int, int, std::uint64_t>> entries;
			for (int r = 0; r < D; ++r)
				for (int c = 0; c < D; ++c)
					if (!K.is_zero(prod.at(r, c))) entries.push_back({r, c, prod.at(r, c)});
			conj.push_back(SparseMat<PrimeField>(K, D, entries));
		}
		inst.mats = std::move(conj);
		std::vector<std::uint64_t> one(D, K.zero());
		for (int r = 0; r < D; ++r) {
			auto acc = K.zero();
			for (int c = 0; c < D; ++c) acc = K.add(acc, K.mul(Sinv->at(r, c), inst.one[c]));
			one[r] = acc;
		}
		inst.one = std::move(one);
		inst.labels.clear();
	}
	validate_instance(inst);
	return {std::move(inst), std::move(truth)};
}

}  // namespace seqann
