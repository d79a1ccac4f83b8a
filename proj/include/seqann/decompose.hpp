#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqann/annihilator.hpp"
#include "seqann/ext_field.hpp"
#include "seqann/oracle.hpp"
#include "seqann/unipoly_factor.hpp"

namespace seqann {

/**
 * @file decompose.hpp
 * @brief Primary decomposition of a zero-dimensional ideal given by sparse
 *        multiplication matrices.
 *
 * Pipeline: recover the radical parametrization from projections on powers
 * of the last variable, factor the minimal polynomial, then compute each
 * multiple component J_k = I + <P_k^{e_k}> as the annihilator of sequences
 * u(m) = (T_k . ell)(X^m v1), with T_k the complementary factor of P_min.
 * A candidate basis is accepted once a random test form T_k . ell_0
 * vanishes on all its elements; g in J_k iff T_k g in I, so a nonzero
 * pairing certifies a wrong element while zero pairings are Monte Carlo
 * evidence of membership.
 */

enum class Strategy { mmm, generic };

inline const char* strategy_name(Strategy s) {
	return s == Strategy::mmm ? "mmm" : "generic";
}

struct StageCosts {
	CostCounter radical, annihilator, extension, verification;
	long long total_matvec() const {
		return radical.matvec + annihilator.matvec + extension.matvec + verification.matvec;
	}
};

struct ComponentResult {
	UniPoly<PrimeField> pk;
	int ek = 1;
	int fk = 1;
	int dk = 1;
	LexGB<PrimeField> lex_gb;
	int forms_used = 0;
	// representations over L_k = K[Z]/P_k; coefficients are residue vectors
	// of length f_k (length 1 when L_k = K)
	std::optional<LexGB<ExtField>> ext_gb;
	std::optional<LexGB<ExtField>> origin_gb;
	ExtField::Elem zeta;
	std::optional<std::vector<ExtField::Elem>> xi;
};

struct DecompositionReport {
	UniPoly<PrimeField> pmin;
	ShapeData<PrimeField> radical;
	std::vector<ComponentResult> components;
	Strategy strategy = Strategy::generic;
	std::uint64_t seed = 0;
	StageCosts cost;
};

struct DecomposeOptions {
	Strategy strategy = Strategy::generic;
	bool repr_ext = false;
	bool repr_origin = false;
	std::uint64_t seed = 0;
	int verify_mode = 0;  // 0 none, 1 probabilistic, 2 oracle
	int retry_budget = 5;
};

namespace decompose_detail {

template <FieldContext F>
LinearForm<F> random_row(const F& K, int dim, Rng& rng) {
	LinearForm<F> r(dim, K.zero());
	for (auto& x : r) x = K.sample(rng);
	return r;
}

template <FieldContext F>
bool pairs_to_zero(const IdealInstance<F>& inst, MonomialCache<F>& cache,
                   const LinearForm<F>& test_form, const LexGB<F>& gb, CostCounter& cost) {
	for (auto& g : gb.gens) {
		auto v = normal_form_vector(inst, cache, g, cost);
		if (!inst.field.is_zero(dot(inst.field, test_form, v, cost))) return false;
	}
	return true;
}

template <FieldContext F>
const MPoly<F>* pure_last_generator(const LexGB<F>& gb) {
	for (auto& g : gb.gens) {
		auto& lead = g.terms.front().first;
		bool pure = lead[gb.n - 1] > 0;
		for (int j = 0; j + 1 < gb.n && pure; ++j)
			if (lead[j] != 0) pure = false;
		if (pure) return &g;
	}
	return nullptr;
}

template <FieldContext F>
bool has_all_pure_power_leads(const LexGB<F>& gb) {
	for (int v = 0; v < gb.n; ++v) {
		bool found = false;
		for (auto& g : gb.gens) {
			auto& lead = g.terms.front().first;
			bool pure = lead[v] > 0;
			for (int j = 0; j < gb.n && pure; ++j)
				if (j != v && lead[j] != 0) pure = false;
			if (pure) { found = true; break; }
		}
		if (!found) return false;
	}
	return true;
}

inline LexGB<ExtField> widen_gb(const LexGB<PrimeField>& gb) {
	LexGB<ExtField> out{gb.n, {}, gb.staircase};
	for (auto& g : gb.gens) {
		MPoly<ExtField> h{g.n, {}};
		for (auto& [m, c] : g.terms) h.terms.push_back({m, ExtField::Elem{c}});
		out.gens.push_back(std::move(h));
	}
	return out;
}

}  // namespace decompose_detail

/**
 * Radical parametrization: P_min, its squarefree part P, and G_j with
 * X_{j+1} = G_j(X_n) on V(I).  The Krylov chain of the last variable gives
 * the exact minimal polynomial (its linear dependency is the certificate
 * P_min(M_n) v1 = 0); a projection by a random form must reproduce it, and
 * is retried when it does not or when the numerator is not invertible.
 */
template <FieldContext F>
ShapeData<F> radical_param(const IdealInstance<F>& inst, MonomialCache<F>& cache, Rng rng,
                           int budget, CostCounter& cost) {
	const F& K = inst.field;
	const int D = inst.dim;
	UniPoly<F> mu;
	{
		EchelonSolver<F> ech(K);
		Monomial m = mono_one(inst.n);
		for (int c = 0; c <= D; ++c) {
			m[inst.n - 1] = c;
			const auto& v = cache.get(m, cost);
			if (auto dep = ech.try_reduce(v)) {
				mu.c.assign(c + 1, K.zero());
				for (int i = 0; i < c; ++i) mu.c[i] = K.neg((*dep)[i]);
				mu.c[c] = K.one();
				break;
			}
			ech.add(v);
		}
	}
	{
		std::vector<typename F::Elem> acc(D, K.zero());
		Monomial m = mono_one(inst.n);
		for (int c = 0; c <= mu.deg(); ++c) {
			m[inst.n - 1] = c;
			const auto& v = cache.get(m, cost);
			for (int i = 0; i < D; ++i) acc[i] = K.add(acc[i], K.mul(mu.c[c], v[i]));
		}
		for (auto& x : acc)
			if (!K.is_zero(x)) throw VerificationFailed("minimal polynomial certificate failed");
	}
	for (int attempt = 0; attempt < budget; ++attempt) {
		auto arng = rng.fork(static_cast<std::uint64_t>(attempt));
		auto ell = decompose_detail::random_row(K, D, arng);
		auto pp = power_projections(inst, cache, ell, cost);
		ShapeData<F> shape;
		try {
			shape = shape_recover(K, pp.s, pp.t, D);
		} catch (const NotInvertible&) {
			continue;
		}
		if (!poly_eq(K, shape.pmin, mu)) continue;
		return shape;
	}
	throw GenericityFailure("radical parametrization failed after retries");
}

namespace decompose_detail {

struct MainSettle {
	LexGB<PrimeField> gb;
	std::vector<LinearForm<PrimeField>> rows;
	int forms_used = 0;
};

/**
 * Active-set loop over the multiple components.  Step i draws one shared
 * form (mmm) or doubles the pool (generic); the transposed products
 * T_k . ell for all still-active k come from one subproduct-tree batch whose
 * prefactor absorbs the factors of settled components.  A component leaves
 * the set when its pure last-variable generator is exactly P_k^{e_k} and two
 * independent test forms vanish on the whole candidate basis.
 */
inline std::vector<MainSettle> settle_components(
    const IdealInstance<PrimeField>& inst, MonomialCache<PrimeField>& cache, const FactorData& fd,
    int L, const UniPoly<PrimeField>& R, const std::vector<UniPoly<PrimeField>>& powers,
    const std::vector<UniPoly<PrimeField>>& T, int radical_dim_total, Strategy strat, Rng rng,
    int budget, CostCounter& cost) {
	const PrimeField& K = inst.field;
	const int D = inst.dim;
	const int n = inst.n;
	const int var = n - 1;
	for (int attempt = 0; attempt < budget; ++attempt) {
		Rng arng = rng.fork(static_cast<std::uint64_t>(attempt));
		auto l0 = random_row(K, D, arng);
		auto l0k = batch_sibling_products(inst, l0, R, powers, var, cost);
		std::vector<MainSettle> out(L);
		std::vector<char> done(L, 0);
		std::vector<std::vector<LinearForm<PrimeField>>> rows(L);
		UniPoly<PrimeField> prefactor = R;
		int settled = 0, t_now = 0;
		while (settled < L) {
			int target = strat == Strategy::mmm ? t_now + 1
			                                    : (t_now == 0 ? 1 : std::min(2 * t_now, D));
			if (target > D || target <= t_now) break;
			std::vector<UniPoly<PrimeField>> leaves;
			std::vector<int> who;
			for (int k = 0; k < L; ++k)
				if (!done[k]) {
					leaves.push_back(powers[k]);
					who.push_back(k);
				}
			for (int i = t_now; i < target; ++i) {
				auto ell = random_row(K, D, arng);
				auto batch = batch_sibling_products(inst, ell, prefactor, leaves, var, cost);
				for (size_t w = 0; w < who.size(); ++w)
					rows[who[w]].push_back(std::move(batch[w]));
			}
			t_now = target;
			for (int k = 0; k < L; ++k) {
				if (done[k]) continue;
				std::optional<LexGB<PrimeField>> cand;
				if (strat == Strategy::generic)
					cand = generic_ann(rows[k], inst, cache, fd.factors[k].e, cost, &powers[k]);
				else
					cand = mmm_ann(rows[k], inst, cache, cost);
				if (!cand) continue;
				auto* lastg = pure_last_generator(*cand);
				if (!lastg || !mp_eq(K, *lastg, mp_from_unipoly(K, powers[k], n, var))) continue;
				if (!pairs_to_zero(inst, cache, l0k[k], *cand, cost)) continue;
				auto confirm = transposed_poly_mul(inst, random_row(K, D, arng), T[k], var, cost);
				if (!pairs_to_zero(inst, cache, confirm, *cand, cost)) continue;
				out[k] = MainSettle{std::move(*cand), rows[k], t_now};
				done[k] = 1;
				++settled;
				prefactor = mul(K, prefactor, powers[k]);
			}
		}
		if (settled < L) continue;
		int total = radical_dim_total;
		for (auto& s : out) total += static_cast<int>(s.gb.staircase.size());
		if (total != D) continue;
		return out;
	}
	throw GenericityFailure("primary component bases failed to settle after retries");
}

/**
 * Annihilator run for a derived representation (scalar extension or origin
 * translation).  Attempt 0 uses the caller's premultiplied forms; each
 * retry redraws a doubled number of fresh forms and pushes them through the
 * membership multiplier test_mul, which also drives the two final test
 * pairings.
 */
template <FieldContext F>
LexGB<F> rep_annihilator(const IdealInstance<F>& inst, MonomialCache<F>& cache,
                         const std::vector<LinearForm<F>>& initial_forms,
                         const UniPoly<F>& test_mul, const UniPoly<F>& last_mu, int B,
                         bool want_all_pure_powers, int expected_staircase, Strategy strat,
                         Rng rng, int budget, CostCounter& cost, const char* what) {
	const F& K = inst.field;
	const int D = inst.dim;
	const int var = inst.n - 1;
	auto last_mono = mp_from_unipoly(K, last_mu, inst.n, var);
	const int t_base = static_cast<int>(initial_forms.size());
	for (int attempt = 0; attempt < budget; ++attempt) {
		std::vector<LinearForm<F>> forms;
		if (attempt == 0) {
			forms = initial_forms;
		} else {
			int t = std::min(t_base << attempt, D);
			if (t < 1) t = 1;
			for (int i = 0; i < t; ++i)
				forms.push_back(
				    transposed_poly_mul(inst, random_row(K, D, rng), test_mul, var, cost));
		}
		std::optional<LexGB<F>> cand;
		if (strat == Strategy::generic) cand = generic_ann(forms, inst, cache, B, cost, &last_mu);
		else cand = mmm_ann(forms, inst, cache, cost);
		if (!cand) continue;
		if (static_cast<int>(cand->staircase.size()) != expected_staircase) continue;
		auto* lastg = pure_last_generator(*cand);
		if (!lastg || !mp_eq(K, *lastg, last_mono)) continue;
		if (want_all_pure_powers && !has_all_pure_power_leads(*cand)) continue;
		bool ok = true;
		for (int r = 0; r < 2 && ok; ++r) {
			auto tf = transposed_poly_mul(inst, random_row(K, D, rng), test_mul, var, cost);
			ok = pairs_to_zero(inst, cache, tf, *cand, cost);
		}
		if (!ok) continue;
		return std::move(*cand);
	}
	throw GenericityFailure(what);
}

}  // namespace decompose_detail

inline void verify_report(const IdealInstance<PrimeField>& inst, const DecompositionReport& rep,
                          int mode, CostCounter& cost);

inline DecompositionReport decompose(const IdealInstance<PrimeField>& inst,
                                     const DecomposeOptions& opts) {
	validate_instance(inst);
	const PrimeField& K = inst.field;
	const int D = inst.dim;
	const int n = inst.n;
	Rng root(opts.seed);
	DecompositionReport rep;
	rep.strategy = opts.strategy;
	rep.seed = opts.seed;
	MonomialCache<PrimeField> cache(inst);

	rep.radical =
	    radical_param(inst, cache, root.fork(1000), opts.retry_budget, rep.cost.radical);
	rep.pmin = rep.radical.pmin;
	auto fd = factor(K, rep.pmin, root.fork(2000));
	const int comp_count = fd.count();
	int L = 0;
	while (L < comp_count && fd.factors[L].e >= 2) ++L;

	UniPoly<PrimeField> R = poly_one(K);
	for (int k = L; k < comp_count; ++k) R = mul(K, R, fd.factors[k].p);
	std::vector<UniPoly<PrimeField>> powers(L), T(L);
	for (int k = 0; k < L; ++k) {
		powers[k] = poly_pow(K, fd.factors[k].p, static_cast<std::uint64_t>(fd.factors[k].e));
		T[k] = divrem(K, rep.pmin, powers[k]).first;
	}

	std::vector<ComponentResult> comps(comp_count);
	std::vector<std::vector<LinearForm<PrimeField>>> comp_rows(comp_count);
	int radical_dim_total = 0;
	for (int k = L; k < comp_count; ++k) {
		auto& fe = fd.factors[k];
		ComponentResult c;
		c.pk = fe.p;
		c.ek = 1;
		c.fk = fe.p.deg();
		c.dk = c.fk;
		radical_dim_total += c.dk;
		LexGB<PrimeField> gb{n, {}, {}};
		for (int cd = 0; cd < c.fk; ++cd) gb.staircase.push_back(mono_var(n, n - 1, cd));
		for (int j = 0; j + 1 < n; ++j) {
			auto gj = poly_mod(K, rep.radical.g[j], fe.p);
			gb.gens.push_back(mp_sub(K, mp_term(K, n, mono_var(n, j), K.one()),
			                         mp_from_unipoly(K, gj, n, n - 1)));
		}
		gb.gens.push_back(mp_from_unipoly(K, fe.p, n, n - 1));
		sort_gb(K, gb);
		c.lex_gb = std::move(gb);
		comps[k] = std::move(c);
	}

	if (L > 0) {
		auto settled = decompose_detail::settle_components(
		    inst, cache, fd, L, R, powers, T, radical_dim_total, opts.strategy, root.fork(3000),
		    opts.retry_budget, rep.cost.annihilator);
		for (int k = 0; k < L; ++k) {
			ComponentResult c;
			c.pk = fd.factors[k].p;
			c.ek = fd.factors[k].e;
			c.fk = fd.factors[k].p.deg();
			c.dk = static_cast<int>(settled[k].gb.staircase.size());
			c.lex_gb = std::move(settled[k].gb);
			c.forms_used = settled[k].forms_used;
			comps[k] = std::move(c);
			comp_rows[k] = std::move(settled[k].rows);
		}
	} else if (radical_dim_total != D) {
		throw GenericityFailure("radical degrees do not sum to the dimension");
	}

	if (opts.repr_ext || opts.repr_origin) {
		for (int k = 0; k < comp_count; ++k) {
			auto& c = comps[k];
			auto Tk = divrem(K, rep.pmin, poly_pow(K, c.pk, static_cast<std::uint64_t>(c.ek)))
			              .first;
			if (c.fk == 1) {
				auto zeta = K.neg(c.pk.c[0]);
				c.zeta = {zeta};
				std::vector<PrimeField::Elem> xi;
				for (int j = 0; j + 1 < n; ++j) xi.push_back(eval(K, rep.radical.g[j], zeta));
				xi.push_back(zeta);
				if (opts.repr_ext) c.ext_gb = decompose_detail::widen_gb(c.lex_gb);
				if (opts.repr_origin) {
					bool zero_shift = true;
					for (auto& x : xi)
						if (!K.is_zero(x)) zero_shift = false;
					LexGB<PrimeField> org;
					if (zero_shift) {
						org = c.lex_gb;
					} else if (c.ek == 1) {
						org = LexGB<PrimeField>{n, {}, {mono_one(n)}};
						for (int j = 0; j < n; ++j)
							org.gens.push_back(mp_term(K, n, mono_var(n, j), K.one()));
						sort_gb(K, org);
					} else {
						auto shifted = shift_instance(inst, xi);
						MonomialCache<PrimeField> cs(shifted);
						auto W = poly_shift_arg(K, Tk, zeta);
						auto mu = poly_monomial(K, K.one(), c.ek);
						org = decompose_detail::rep_annihilator(
						    shifted, cs, comp_rows[k], W, mu, c.ek, true, c.dk, opts.strategy,
						    root.fork(5000 + 16 * static_cast<std::uint64_t>(k)),
						    opts.retry_budget, rep.cost.extension,
						    "origin translation failed after retries");
					}
					c.origin_gb = decompose_detail::widen_gb(org);
					std::vector<ExtField::Elem> xiw;
					for (auto& x : xi) xiw.push_back(ExtField::Elem{x});
					c.xi = std::move(xiw);
				}
				continue;
			}
			ExtField Lk = make_extension(K, c.pk);
			auto zeta = Lk.gen();
			c.zeta = zeta;
			auto emb = embed_instance(inst, Lk);
			auto linear = poly_from(Lk, {Lk.neg(zeta), Lk.one()});
			auto S = divrem(Lk, embed_poly(Lk, c.pk), linear).first;
			auto Spow = poly_pow(Lk, S, static_cast<std::uint64_t>(c.ek));
			auto WL = mul(Lk, embed_poly(Lk, Tk), Spow);
			std::vector<ExtField::Elem> xi;
			for (int j = 0; j + 1 < n; ++j)
				xi.push_back(eval(Lk, embed_poly(Lk, rep.radical.g[j]), zeta));
			xi.push_back(zeta);
			if (c.dk % c.fk != 0)
				throw GenericityFailure("component dimension is not a multiple of its degree");
			const int dprime = c.dk / c.fk;
			LexGB<ExtField> extgb;
			MonomialCache<ExtField> ce(emb);
			std::vector<LinearForm<ExtField>> init;
			if (c.ek == 1) {
				extgb = LexGB<ExtField>{n, {}, {mono_one(n)}};
				for (int j = 0; j + 1 < n; ++j)
					extgb.gens.push_back(mp_sub(Lk, mp_term(Lk, n, mono_var(n, j), Lk.one()),
					                            mp_const(Lk, n, xi[j])));
				extgb.gens.push_back(mp_sub(Lk, mp_term(Lk, n, mono_var(n, n - 1), Lk.one()),
				                            mp_const(Lk, n, zeta)));
				sort_gb(Lk, extgb);
			} else {
				for (auto& row : comp_rows[k]) {
					LinearForm<ExtField> r;
					for (auto& x : row) r.push_back(Lk.embed(x));
					init.push_back(transposed_poly_mul(emb, r, Spow, n - 1, rep.cost.extension));
				}
				auto mu = poly_pow(Lk, linear, static_cast<std::uint64_t>(c.ek));
				extgb = decompose_detail::rep_annihilator(
				    emb, ce, init, WL, mu, c.ek, false, dprime, opts.strategy,
				    root.fork(4000 + 16 * static_cast<std::uint64_t>(k)), opts.retry_budget,
				    rep.cost.extension, "scalar extension failed after retries");
			}
			if (opts.repr_ext) c.ext_gb = extgb;
			if (opts.repr_origin) {
				if (c.ek == 1) {
					LexGB<ExtField> org{n, {}, {mono_one(n)}};
					for (int j = 0; j < n; ++j)
						org.gens.push_back(mp_term(Lk, n, mono_var(n, j), Lk.one()));
					sort_gb(Lk, org);
					c.origin_gb = std::move(org);
				} else {
					auto shifted = shift_instance(emb, xi);
					MonomialCache<ExtField> cs(shifted);
					auto WO = poly_shift_arg(Lk, WL, zeta);
					auto muO = poly_monomial(Lk, Lk.one(), c.ek);
					c.origin_gb = decompose_detail::rep_annihilator(
					    shifted, cs, init, WO, muO, c.ek, true, dprime, opts.strategy,
					    root.fork(5000 + 16 * static_cast<std::uint64_t>(k)), opts.retry_budget,
					    rep.cost.extension, "origin translation failed after retries");
				}
				c.xi = std::move(xi);
			}
		}
	}
	rep.components = std::move(comps);

	if (opts.verify_mode > 0) verify_report(inst, rep, opts.verify_mode, rep.cost.verification);
	return rep;
}

/**
 * Re-check a report against its instance.  Mode 1 re-runs the structural
 * invariants plus two fresh Monte Carlo membership pairings per component;
 * mode 2 additionally proves membership of every basis element by a dense
 * column-span computation, including the extension and origin bases when
 * present.  Throws VerificationFailed.
 */
inline void verify_report(const IdealInstance<PrimeField>& inst, const DecompositionReport& rep,
                          int mode, CostCounter& cost) {
	if (mode <= 0) return;
	const PrimeField& K = inst.field;
	const int n = inst.n;
	auto prod = poly_one(K);
	int total = 0;
	for (auto& c : rep.components) {
		if (!is_irreducible(K, c.pk))
			throw VerificationFailed("component polynomial is not irreducible");
		if (c.fk != c.pk.deg()) throw VerificationFailed("component degree mismatch");
		if (static_cast<int>(c.lex_gb.staircase.size()) != c.dk)
			throw VerificationFailed("staircase size differs from the reported dimension");
		gb_structural_check(K, c.lex_gb);
		prod = mul(K, prod, poly_pow(K, c.pk, static_cast<std::uint64_t>(c.ek)));
		total += c.dk;
	}
	for (size_t i = 0; i < rep.components.size(); ++i)
		for (size_t j = i + 1; j < rep.components.size(); ++j)
			if (poly_eq(K, rep.components[i].pk, rep.components[j].pk))
				throw VerificationFailed("repeated component polynomial");
	if (!poly_eq(K, prod, rep.pmin))
		throw VerificationFailed("factorization does not multiply back to the minimal polynomial");
	if (total != inst.dim)
		throw VerificationFailed("component dimensions do not sum to the instance dimension");

	MonomialCache<PrimeField> cache(inst);
	Rng vr = Rng(rep.seed).fork(6000);
	for (auto& c : rep.components) {
		auto Tk = divrem(K, rep.pmin, poly_pow(K, c.pk, static_cast<std::uint64_t>(c.ek))).first;
		for (int r = 0; r < 2; ++r) {
			auto tf = transposed_poly_mul(
			    inst, decompose_detail::random_row(K, inst.dim, vr), Tk, n - 1, cost);
			if (!decompose_detail::pairs_to_zero(inst, cache, tf, c.lex_gb, cost))
				throw VerificationFailed("membership pairing failed for a basis element");
		}
	}
	if (mode < 2) return;
	for (auto& c : rep.components) {
		auto pe = poly_pow(K, c.pk, static_cast<std::uint64_t>(c.ek));
		for (auto& g : c.lex_gb.gens)
			if (!membership(inst, g, pe))
				throw VerificationFailed("oracle membership failed for a basis element");
		if (c.fk >= 2 && (c.ext_gb || c.origin_gb)) {
			ExtField Lk = make_extension(K, c.pk);
			auto emb = embed_instance(inst, Lk);
			auto linear = poly_from(Lk, {Lk.neg(Lk.gen()), Lk.one()});
			if (c.ext_gb) {
				auto mu = poly_pow(Lk, linear, static_cast<std::uint64_t>(c.ek));
				for (auto& g : c.ext_gb->gens)
					if (!membership(emb, g, mu))
						throw VerificationFailed("oracle membership failed over the extension");
			}
			if (c.origin_gb && c.xi) {
				auto shifted = shift_instance(emb, *c.xi);
				auto muO = poly_monomial(Lk, Lk.one(), c.ek);
				for (auto& g : c.origin_gb->gens)
					if (!membership(shifted, g, muO))
						throw VerificationFailed("oracle membership failed at the origin");
			}
		} else if (c.fk == 1 && c.origin_gb && c.xi) {
			std::vector<PrimeField::Elem> xiK;
			for (auto& x : *c.xi) xiK.push_back(x[0]);
			auto shifted = shift_instance(inst, xiK);
			auto muO = poly_monomial(K, K.one(), c.ek);
			for (auto& g : c.origin_gb->gens) {
				MPoly<PrimeField> gk{g.n, {}};
				for (auto& [m, coef] : g.terms) gk.terms.push_back({m, coef[0]});
				if (!membership(shifted, gk, muO))
					throw VerificationFailed("oracle membership failed at the origin");
			}
		}
	}
}

}  // namespace seqann
