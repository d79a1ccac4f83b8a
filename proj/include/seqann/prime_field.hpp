#pragma once

#include <cstdint>
#include <initializer_list>

#include "seqann/errors.hpp"
#include "seqann/rng.hpp"

namespace seqann {

/**
 * @file prime_field.hpp
 * @brief Arithmetic context for F_p, p an odd machine-word prime.
 *
 * Elements are canonical residues in [0, p).  All generic code in the library
 * is written against the context interface (zero/one/add/mul/inv/...), so the
 * same algorithms run over F_p and over the extension field context.
 */
class PrimeField {
 public:
	using Elem = std::uint64_t;

	// bound keeps a*b inside unsigned 128-bit arithmetic with headroom
	static constexpr std::uint64_t kMaxPrime = (1ull << 62);

	explicit PrimeField(std::uint64_t p) : p_(p) {
		if (p >= kMaxPrime) throw TooLarge("prime does not fit the supported word range");
		if (p < 3 || !is_prime(p)) throw NotPrime("characteristic must be an odd prime >= 3");
	}

	std::uint64_t characteristic() const { return p_; }
	int degree() const { return 1; }

	Elem zero() const { return 0; }
	Elem one() const { return 1; }
	bool is_zero(Elem a) const { return a == 0; }
	bool is_one(Elem a) const { return a == 1; }

	Elem from_int(std::int64_t v) const {
		std::int64_t r = v % static_cast<std::int64_t>(p_);
		if (r < 0) r += static_cast<std::int64_t>(p_);
		return static_cast<Elem>(r);
	}

	Elem add(Elem a, Elem b) const {
		Elem s = a + b;
		return s >= p_ ? s - p_ : s;
	}
	Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
	Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
	Elem mul(Elem a, Elem b) const {
		return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
	}
	Elem pow(Elem a, std::uint64_t e) const {
		Elem r = 1;
		while (e) {
			if (e & 1) r = mul(r, a);
			a = mul(a, a);
			e >>= 1;
		}
		return r;
	}
	Elem inv(Elem a) const {
		if (a == 0) throw DivisionByZero("inverse of zero");
		return pow(a, p_ - 2);
	}
	Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

	Elem sample(Rng& rng) const { return rng.below(p_); }

	// +1 nonzero square, -1 non-square, 0 for zero
	int legendre(Elem a) const {
		if (a == 0) return 0;
		Elem r = pow(a, (p_ - 1) / 2);
		return r == 1 ? 1 : -1;
	}

	bool operator==(const PrimeField& o) const { return p_ == o.p_; }

	// deterministic Miller-Rabin; the fixed witness set is exact far beyond
	// the kMaxPrime cutoff
	static bool is_prime(std::uint64_t n) {
		if (n < 2) return false;
		for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
			if (n == q) return true;
			if (n % q == 0) return false;
		}
		std::uint64_t d = n - 1;
		int s = 0;
		while ((d & 1) == 0) { d >>= 1; ++s; }
		auto mulm = [n](std::uint64_t a, std::uint64_t b) {
			return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
		};
		auto powm = [&](std::uint64_t a, std::uint64_t e) {
			std::uint64_t r = 1;
			while (e) {
				if (e & 1) r = mulm(r, a);
				a = mulm(a, a);
				e >>= 1;
			}
			return r;
		};
		for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
			std::uint64_t x = powm(a % n, d);
			if (x == 1 || x == n - 1) continue;
			bool witness = true;
			for (int i = 1; i < s; ++i) {
				x = mulm(x, x);
				if (x == n - 1) { witness = false; break; }
			}
			if (witness) return false;
		}
		return true;
	}

 private:
	std::uint64_t p_;
};

inline PrimeField make_prime_field(std::uint64_t p) { return PrimeField(p); }

}  // namespace seqann
