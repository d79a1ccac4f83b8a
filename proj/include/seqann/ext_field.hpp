#pragma once

#include <memory>
#include <vector>

#include "seqann/prime_field.hpp"
#include "seqann/unipoly.hpp"
#include "seqann/unipoly_factor.hpp"

namespace seqann {

/**
 * @file ext_field.hpp
 * @brief Arithmetic context for L = F_p[Z] / <P(Z)>, P monic irreducible.
 *
 * Elements are coefficient vectors of fixed length f = deg P (low to high,
 * reduced mod p).  Exactly one extension layer is supported: the base is
 * always a prime field, never another extension.
 */
class ExtField {
 public:
	using Elem = std::vector<std::uint64_t>;

	ExtField(const PrimeField& base, const UniPoly<PrimeField>& modulus)
	    : base_(base), modulus_(modulus), f_(modulus.deg()) {
		if (modulus.is_zero() || !base.is_one(modulus.c.back()))
			throw NotMonic("extension modulus must be monic");
		if (f_ < 2) throw InvalidArgument("extension degree must be at least 2");
		if (!is_irreducible(base, modulus))
			throw Reducible("extension modulus must be irreducible");
	}

	const PrimeField& base() const { return base_; }
	const UniPoly<PrimeField>& modulus() const { return modulus_; }
	std::uint64_t characteristic() const { return base_.characteristic(); }
	int degree() const { return f_; }

	Elem zero() const { return Elem(f_, 0); }
	Elem one() const {
		Elem e(f_, 0);
		e[0] = 1;
		return e;
	}
	// class of Z
	Elem gen() const {
		Elem e(f_, 0);
		e[1] = 1;
		return e;
	}
	Elem embed(PrimeField::Elem a) const {
		Elem e(f_, 0);
		e[0] = a;
		return e;
	}

	bool is_zero(const Elem& a) const {
		for (auto x : a)
			if (x != 0) return false;
		return true;
	}
	bool is_one(const Elem& a) const {
		if (a[0] != 1) return false;
		for (int i = 1; i < f_; ++i)
			if (a[i] != 0) return false;
		return true;
	}

	Elem from_int(std::int64_t v) const { return embed(base_.from_int(v)); }

	Elem add(const Elem& a, const Elem& b) const {
		Elem r(f_);
		for (int i = 0; i < f_; ++i) r[i] = base_.add(a[i], b[i]);
		return r;
	}
	Elem sub(const Elem& a, const Elem& b) const {
		Elem r(f_);
		for (int i = 0; i < f_; ++i) r[i] = base_.sub(a[i], b[i]);
		return r;
	}
	Elem neg(const Elem& a) const {
		Elem r(f_);
		for (int i = 0; i < f_; ++i) r[i] = base_.neg(a[i]);
		return r;
	}

	Elem mul(const Elem& a, const Elem& b) const {
		// schoolbook product then synthetic reduction by the monic modulus
		std::vector<std::uint64_t> prod(2 * f_ - 1, 0);
		for (int i = 0; i < f_; ++i) {
			if (a[i] == 0) continue;
			for (int j = 0; j < f_; ++j)
				prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
		}
		for (int k = 2 * f_ - 2; k >= f_; --k) {
			auto t = prod[k];
			if (t == 0) continue;
			prod[k] = 0;
			for (int j = 0; j < f_; ++j)
				prod[k - f_ + j] = base_.sub(prod[k - f_ + j], base_.mul(t, modulus_.c[j]));
		}
		prod.resize(f_);
		return prod;
	}

	Elem pow(Elem a, std::uint64_t e) const {
		Elem r = one();
		while (e) {
			if (e & 1) r = mul(r, a);
			a = mul(a, a);
			e >>= 1;
		}
		return r;
	}

	Elem inv(const Elem& a) const {
		if (is_zero(a)) throw DivisionByZero("inverse of zero");
		UniPoly<PrimeField> ap;
		ap.c = a;
		trim(base_, ap);
		auto u = inv_mod(base_, ap, modulus_);
		Elem r(f_, 0);
		for (int i = 0; i <= u.deg(); ++i) r[i] = u.c[i];
		return r;
	}
	Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

	Elem sample(Rng& rng) const {
		Elem r(f_);
		for (auto& x : r) x = base_.sample(rng);
		return r;
	}

	bool operator==(const ExtField& o) const {
		return base_ == o.base_ && modulus_.c == o.modulus_.c;
	}

 private:
	PrimeField base_;
	UniPoly<PrimeField> modulus_;
	int f_;
};

inline ExtField make_extension(const PrimeField& base, const UniPoly<PrimeField>& modulus) {
	return ExtField(base, modulus);
}

// lift a polynomial over F_p to one over the extension coefficientwise
inline UniPoly<ExtField> embed_poly(const ExtField& L, const UniPoly<PrimeField>& f) {
	UniPoly<ExtField> r;
	r.c.reserve(f.c.size());
	for (auto c : f.c) r.c.push_back(L.embed(c));
	return r;
}

}  // namespace seqann
