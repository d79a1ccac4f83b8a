#include <catch2/catch_amalgamated.hpp>

#include "seqann/annihilator.hpp"
#include "seqann/instances.hpp"
#include "seqann/oracle.hpp"

using namespace seqann;

namespace {

std::vector<LinearForm<PrimeField>> unit_forms(const PrimeField& K, int dim) {
	std::vector<LinearForm<PrimeField>> out;
	for (int i = 0; i < dim; ++i) {
		LinearForm<PrimeField> e(dim, K.zero());
		e[i] = K.one();
		out.push_back(std::move(e));
	}
	return out;
}

LinearForm<PrimeField> random_form(const PrimeField& K, int dim, std::uint64_t seed) {
	Rng rng(seed);
	LinearForm<PrimeField> f(dim);
	for (auto& x : f) x = K.sample(rng);
	return f;
}

// seeded one- or two-component instance with small dimension
std::pair<IdealInstance<PrimeField>, GroundTruth> small_instance(std::uint64_t seed) {
	auto K = make_prime_field(10007);
	Rng rng(seed);
	std::vector<ComponentSpec> specs;
	ComponentSpec a;
	a.kind = ComponentSpec::Kind::curvilinear;
	a.p = poly_from(K, {K.from_int(2 + static_cast<std::int64_t>(seed % 5)), K.one()});
	a.e = 2 + static_cast<int>(seed % 2);
	specs.push_back(a);
	if (seed % 3 == 0) {
		ComponentSpec b;
		b.kind = ComponentSpec::Kind::fat_point;
		b.point = {K.from_int(1), K.from_int(20 + static_cast<std::int64_t>(seed))};
		b.e = 1;
		specs.push_back(b);
	}
	return gen_instance(specs, K, 2, seed, false);
}

}  // namespace

TEST_CASE("dense change of order recovers the lex basis of generated ideals") {
	for (std::uint64_t seed = 0; seed < 8; ++seed) {
		auto [inst, truth] = small_instance(seed);
		auto fg = fglm_gb(inst);
		gb_structural_check(inst.field, fg.gb, inst.dim);
		// every generator of the computed basis lies in every primary piece
		auto pm = poly_one(inst.field);
		for (auto& c : truth.components) {
			auto pe = poly_pow(inst.field, c.pk, c.ek);
			pm = mul(inst.field, pm, pe);
			for (auto& g : fg.gb.gens) REQUIRE(membership(inst, g, pe));
		}
		if (truth.components.size() == 1)
			REQUIRE(gb_equal(inst.field, fg.gb, truth.components[0].gb));
	}
}

TEST_CASE("kernel matrices are symmetric") {
	for (std::uint64_t seed = 0; seed < 6; ++seed) {
		auto [inst, truth] = small_instance(seed);
		auto ell = random_form(inst.field, inst.dim, 100 + seed);
		auto km = k_matrix(ell, inst);
		for (int i = 0; i < inst.dim; ++i)
			for (int j = 0; j < i; ++j) REQUIRE(km.mat.at(i, j) == km.mat.at(j, i));
	}
}

TEST_CASE("a full set of independent forms reaches full stacked rank") {
	for (std::uint64_t seed = 0; seed < 6; ++seed) {
		auto [inst, truth] = small_instance(seed);
		REQUIRE(stacked_k_rank(unit_forms(inst.field, inst.dim), inst) == inst.dim);
	}
}

TEST_CASE("full stacked rank decides annihilator equality both ways") {
	// rank D forces ann = I; on the double origin a single form never
	// reaches rank D and its annihilator is strictly larger
	auto K = make_prime_field(10007);

	for (std::uint64_t seed = 0; seed < 8; ++seed) {
		auto [inst, truth] = small_instance(seed);
		auto ell = random_form(K, inst.dim, 300 + seed);
		std::vector<LinearForm<PrimeField>> forms{ell};
		int r = stacked_k_rank(forms, inst);
		MonomialCache<PrimeField> cache(inst);
		CostCounter cost;
		auto ann = mmm_ann(forms, inst, cache, cost);
		auto fg = fglm_gb(inst);
		if (r == inst.dim) {
			REQUIRE(gb_equal(K, ann, fg.gb));
		} else {
			REQUIRE(!gb_equal(K, ann, fg.gb));
			REQUIRE(ann.staircase.size() == static_cast<size_t>(r));
		}
	}

	ComponentSpec spec;
	spec.kind = ComponentSpec::Kind::fat_point;
	spec.point = {K.zero(), K.zero()};
	spec.e = 2;
	auto [inst2, truth2] = gen_instance({spec}, K, 2, 11, false);
	for (std::uint64_t seed = 0; seed < 10; ++seed) {
		std::vector<LinearForm<PrimeField>> forms{random_form(K, inst2.dim, 400 + seed)};
		int r = stacked_k_rank(forms, inst2);
		REQUIRE(r <= 2);
		MonomialCache<PrimeField> cache(inst2);
		CostCounter cost;
		auto ann = mmm_ann(forms, inst2, cache, cost);
		REQUIRE(!gb_equal(K, ann, truth2.components[0].gb));
	}
}

TEST_CASE("exhaustive truncated kernels agree with the walk") {
	for (std::uint64_t seed = 0; seed < 8; ++seed) {
		auto [inst, truth] = small_instance(seed);
		if (inst.dim > 8) continue;
		std::vector<LinearForm<PrimeField>> forms{random_form(inst.field, inst.dim, 500 + seed)};
		if (seed % 2) forms.push_back(random_form(inst.field, inst.dim, 600 + seed));
		auto brute = brute_hankel_ann(forms, inst);
		MonomialCache<PrimeField> cache(inst);
		CostCounter cost;
		auto walk = mmm_ann(forms, inst, cache, cost);
		REQUIRE(gb_equal(inst.field, brute, walk));
	}
}

TEST_CASE("form count estimates distinguish principal from fat quotients") {
	auto K = make_prime_field(10007);
	ComponentSpec curv;
	curv.kind = ComponentSpec::Kind::curvilinear;
	curv.p = poly_from(K, {3, 1});
	curv.e = 3;
	auto [inst, truth] = gen_instance({curv}, K, 2, 3, false);
	REQUIRE(tau_estimate(inst, 9, inst.dim) == 1);

	ComponentSpec fat;
	fat.kind = ComponentSpec::Kind::fat_point;
	fat.point = {K.zero(), K.zero()};
	fat.e = 2;
	auto [inst2, truth2] = gen_instance({fat}, K, 2, 3, false);
	REQUIRE(tau_estimate(inst2, 9, inst2.dim) == 2);
}

TEST_CASE("membership separates the primary pieces") {
	auto K = make_prime_field(10007);
	ComponentSpec a, b;
	a.kind = ComponentSpec::Kind::curvilinear;
	a.p = poly_from(K, {2, 1});
	a.e = 2;
	b.kind = ComponentSpec::Kind::fat_point;
	b.point = {K.from_int(5), K.from_int(9)};
	b.e = 1;
	auto [inst, truth] = gen_instance({a, b}, K, 2, 21, false);
	REQUIRE(truth.components.size() == 2);
	for (size_t k = 0; k < truth.components.size(); ++k) {
		auto pe_k = poly_pow(K, truth.components[k].pk, truth.components[k].ek);
		for (auto& g : truth.components[k].gb.gens) {
			REQUIRE(membership(inst, g, pe_k));
		}
		// the other component has at least one generator outside this piece
		size_t j = 1 - k;
		bool all_inside = true;
		for (auto& g : truth.components[j].gb.gens)
			if (!membership(inst, g, pe_k)) { all_inside = false; break; }
		REQUIRE(!all_inside);
	}
	// the constant 1 is never a member of a proper piece
	auto pe0 = poly_pow(K, truth.components[0].pk, truth.components[0].ek);
	REQUIRE(!membership(inst, mp_const(K, 2, K.one()), pe0));
}

TEST_CASE("cofactor matrices have the complementary rank") {
	auto K = make_prime_field(10007);
	ComponentSpec a, b;
	a.kind = ComponentSpec::Kind::curvilinear;
	a.p = poly_from(K, {2, 1});
	a.e = 2;
	b.kind = ComponentSpec::Kind::fat_point;
	b.point = {K.from_int(5), K.from_int(9)};
	b.e = 1;
	auto [inst, truth] = gen_instance({a, b}, K, 2, 21, false);
	auto pm = poly_one(K);
	for (auto& c : truth.components) pm = mul(K, pm, poly_pow(K, c.pk, c.ek));
	for (auto& c : truth.components) {
		auto pe = poly_pow(K, c.pk, c.ek);
		auto tk = divrem(K, pm, pe).first;
		REQUIRE(poly_matrix_rank(inst, tk, inst.n - 1) == c.dk);
	}
	// the full minimal polynomial kills everything
	REQUIRE(poly_matrix_rank(inst, pm, inst.n - 1) == 0);
}
