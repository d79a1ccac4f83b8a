#pragma once

#include <cstdint>
#include <random>

namespace seqann {

// Deterministic seeded randomness.  mt19937_64 has a fully specified output
// sequence, and the bounded draw below avoids std::uniform_int_distribution,
// whose mapping is implementation-defined.  Equal seeds give equal streams on
// every platform, which report reproducibility depends on.
class Rng {
 public:
	explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

	std::uint64_t raw() { return gen_(); }

	// uniform draw from [0, n)
	std::uint64_t below(std::uint64_t n) {
		if (n <= 1) return 0;
		std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
		std::uint64_t x = gen_();
		while (x >= lim) x = gen_();
		return x % n;
	}

	// independent child stream; derived from the original seed, not the
	// current stream position, so forks commute with draw order
	Rng fork(std::uint64_t salt) const { return Rng(mix(seed_, salt)); }

	std::uint64_t seed() const { return seed_; }

	static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
		std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
		return z ^ (z >> 31);
	}

 private:
	std::uint64_t seed_;
	std::mt19937_64 gen_;
};

}  // namespace seqann
