#include <catch2/catch_amalgamated.hpp>

#include "seqann/ext_field.hpp"
#include "seqann/prime_field.hpp"

using namespace seqann;

TEST_CASE("prime field arithmetic satisfies the field axioms") {
	auto K = make_prime_field(10007);
	Rng rng(17);
	for (int i = 0; i < 200; ++i) {
		auto a = K.sample(rng), b = K.sample(rng), c = K.sample(rng);
		REQUIRE(K.add(a, K.add(b, c)) == K.add(K.add(a, b), c));
		REQUIRE(K.mul(a, K.mul(b, c)) == K.mul(K.mul(a, b), c));
		REQUIRE(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)));
		REQUIRE(K.add(a, K.neg(a)) == K.zero());
		REQUIRE(K.sub(a, b) == K.add(a, K.neg(b)));
		if (!K.is_zero(a)) {
			REQUIRE(K.mul(a, K.inv(a)) == K.one());
			REQUIRE(K.pow(a, 10006) == K.one());
		}
	}
	REQUIRE(K.from_int(-1) == 10006);
	REQUIRE(K.from_int(-10007) == 0);
	REQUIRE(K.from_int(10008) == 1);
}

TEST_CASE("prime field construction rejects bad moduli") {
	REQUIRE_THROWS_AS(make_prime_field(4), NotPrime);
	REQUIRE_THROWS_AS(make_prime_field(2), NotPrime);
	REQUIRE_THROWS_AS(make_prime_field(1), NotPrime);
	REQUIRE_THROWS_AS(make_prime_field((1ull << 62) + 1), TooLarge);
}

TEST_CASE("legendre symbol matches the euler criterion") {
	auto K = make_prime_field(10007);
	Rng rng(3);
	for (int i = 0; i < 100; ++i) {
		auto a = K.sample(rng);
		if (K.is_zero(a)) continue;
		auto e = K.pow(a, (10007 - 1) / 2);
		int expect = e == K.one() ? 1 : -1;
		REQUIRE(K.legendre(a) == expect);
		auto b = K.sample(rng);
		if (!K.is_zero(b)) REQUIRE(K.legendre(K.mul(a, b)) == K.legendre(a) * K.legendre(b));
	}
	// -7 is a square mod 10007 but not mod 10009
	REQUIRE(K.legendre(K.from_int(-7)) == 1);
	auto K2 = make_prime_field(10009);
	REQUIRE(K2.legendre(K2.from_int(-7)) == -1);
}

TEST_CASE("quadratic extension of F_5 by Z^2+Z+2") {
	auto K = make_prime_field(5);
	auto mod = poly_from(K, {2, 1, 1});
	auto L = make_extension(K, mod);
	auto z = L.gen();
	// z^2 = -z - 2
	auto z2 = L.mul(z, z);
	auto expect = L.sub(L.neg(z), L.from_int(2));
	REQUIRE(z2 == expect);
	// 1/z = 2z + 2
	auto zi = L.inv(z);
	auto two = L.from_int(2);
	REQUIRE(zi == L.add(L.mul(two, z), two));
	REQUIRE(L.mul(z, zi) == L.one());
	// field axioms on random elements
	Rng rng(29);
	for (int i = 0; i < 100; ++i) {
		auto a = L.sample(rng), b = L.sample(rng), c = L.sample(rng);
		REQUIRE(L.mul(a, L.add(b, c)) == L.add(L.mul(a, b), L.mul(a, c)));
		REQUIRE(L.add(a, L.neg(a)) == L.zero());
		if (!L.is_zero(a)) REQUIRE(L.mul(a, L.inv(a)) == L.one());
		// Frobenius is additive
		REQUIRE(L.pow(L.add(a, b), 5) == L.add(L.pow(a, 5), L.pow(b, 5)));
	}
	// the multiplicative group has order 24
	for (int i = 0; i < 20; ++i) {
		auto a = L.sample(rng);
		if (!L.is_zero(a)) REQUIRE(L.pow(a, 24) == L.one());
	}
}

TEST_CASE("extension construction rejects bad moduli") {
	auto K = make_prime_field(5);
	REQUIRE_THROWS_AS(make_extension(K, poly_from(K, {4, 0, 1})), Reducible);   // X^2-1
	REQUIRE_THROWS_AS(make_extension(K, poly_from(K, {1, 1})), InvalidArgument);  // degree 1
	REQUIRE_THROWS_AS(make_extension(K, poly_from(K, {1, 0, 2})), NotMonic);
}

TEST_CASE("embedding commutes with arithmetic") {
	auto K = make_prime_field(5);
	auto L = make_extension(K, poly_from(K, {2, 1, 1}));
	Rng rng(31);
	for (int i = 0; i < 50; ++i) {
		auto a = K.sample(rng), b = K.sample(rng);
		REQUIRE(L.embed(K.add(a, b)) == L.add(L.embed(a), L.embed(b)));
		REQUIRE(L.embed(K.mul(a, b)) == L.mul(L.embed(a), L.embed(b)));
	}
}
