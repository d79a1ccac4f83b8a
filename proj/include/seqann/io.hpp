#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "seqann/decompose.hpp"
#include "seqann/instances.hpp"

namespace seqann {

using json = nlohmann::ordered_json;

/**
 * @file io.hpp
 * @brief JSON serialization for instances, forms, bases, and reports.
 *
 * All integers are canonical residues.  Polynomials are low-to-high
 * coefficient lists; over an extension each coefficient is itself a residue
 * vector.  A basis is serialized as {"gens": [...], "staircase": [...]},
 * each generator a list of [[e_1..e_n], coeff] pairs with lex-descending
 * monomials.  Malformed documents raise SchemaError.
 */

namespace io_detail {

inline std::uint64_t need_residue(const json& j, std::uint64_t p, const char* what) {
	if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
		throw SchemaError(std::string(what) + " must be a nonnegative integer");
	auto v = j.get<std::uint64_t>();
	if (v >= p) throw SchemaError(std::string(what) + " is not a canonical residue");
	return v;
}

inline int need_int(const json& j, const char* what) {
	if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
	    j.get<std::int64_t>() > (1 << 30))
		throw SchemaError(std::string(what) + " must be a small nonnegative integer");
	return j.get<int>();
}

inline const json& need_key(const json& j, const char* key) {
	if (!j.is_object() || !j.contains(key))
		throw SchemaError(std::string("missing key \"") + key + "\"");
	return j.at(key);
}

inline std::vector<std::uint64_t> residue_vector(const json& j, std::uint64_t p, int len,
                                                 const char* what) {
	if (!j.is_array() || static_cast<int>(j.size()) != len)
		throw SchemaError(std::string(what) + " has the wrong length");
	std::vector<std::uint64_t> v;
	for (auto& x : j) v.push_back(need_residue(x, p, what));
	return v;
}

}  // namespace io_detail

inline json elem_to_json(const PrimeField&, PrimeField::Elem v) { return v; }

inline json elem_to_json(const ExtField&, const ExtField::Elem& v) {
	json a = json::array();
	for (auto x : v) a.push_back(x);
	return a;
}

inline PrimeField::Elem elem_from_json(const PrimeField& K, const json& j) {
	return io_detail::need_residue(j, K.characteristic(), "field element");
}

inline ExtField::Elem elem_from_json(const ExtField& L, const json& j) {
	return io_detail::residue_vector(j, L.characteristic(), L.degree(), "field element");
}

inline json field_to_json(const PrimeField& K) { return json{{"char", K.characteristic()}}; }

inline json field_to_json(const ExtField& L) {
	json m = json::array();
	for (auto c : L.modulus().c) m.push_back(c);
	return json{{"char", L.characteristic()}, {"ext", m}};
}

struct ParsedField {
	PrimeField base;
	std::optional<ExtField> ext;
};

inline ParsedField parse_field(const json& j) {
	auto p = io_detail::need_key(j, "char");
	if (!p.is_number_unsigned() && !p.is_number_integer())
		throw SchemaError("\"char\" must be an integer");
	PrimeField K = [&] {
		try {
			return make_prime_field(p.get<std::uint64_t>());
		} catch (const Error& e) {
			throw SchemaError(std::string("bad characteristic: ") + e.what());
		}
	}();
	if (!j.contains("ext")) return ParsedField{K, std::nullopt};
	auto& m = j.at("ext");
	if (!m.is_array() || m.size() < 3)
		throw SchemaError("\"ext\" must be a monic modulus of degree at least 2");
	UniPoly<PrimeField> modulus;
	for (auto& c : m)
		modulus.c.push_back(io_detail::need_residue(c, K.characteristic(), "modulus coefficient"));
	if (modulus.c.back() != 1) throw SchemaError("extension modulus must be monic");
	try {
		return ParsedField{K, make_extension(K, modulus)};
	} catch (const Error& e) {
		throw SchemaError(std::string("bad extension modulus: ") + e.what());
	}
}

inline json poly_to_json(const UniPoly<PrimeField>& f) {
	json a = json::array();
	for (auto c : f.c) a.push_back(c);
	return a;
}

inline json poly_to_json(const UniPoly<ExtField>& f) {
	json a = json::array();
	for (auto& c : f.c) {
		json e = json::array();
		for (auto x : c) e.push_back(x);
		a.push_back(e);
	}
	return a;
}

template <FieldContext F>
UniPoly<F> poly_from_json(const F& K, const json& j) {
	if (!j.is_array()) throw SchemaError("polynomial must be a coefficient list");
	UniPoly<F> f;
	for (auto& c : j) f.c.push_back(elem_from_json(K, c));
	if (!f.c.empty() && K.is_zero(f.c.back()))
		throw SchemaError("polynomial has a stored leading zero");
	return f;
}

inline json mono_to_json(const Monomial& m) {
	json a = json::array();
	for (auto e : m) a.push_back(e);
	return a;
}

inline Monomial mono_from_json(const json& j, int n) {
	if (!j.is_array() || static_cast<int>(j.size()) != n)
		throw SchemaError("monomial exponent list has the wrong arity");
	Monomial m;
	for (auto& e : j) m.push_back(io_detail::need_int(e, "exponent"));
	return m;
}

template <class F>
json gb_to_json(const LexGB<F>& gb) {
	json gens = json::array();
	for (auto& g : gb.gens) {
		json terms = json::array();
		for (auto& [m, c] : g.terms) {
			if constexpr (std::is_same_v<F, PrimeField>)
				terms.push_back(json::array({mono_to_json(m), c}));
			else {
				json e = json::array();
				for (auto x : c) e.push_back(x);
				terms.push_back(json::array({mono_to_json(m), e}));
			}
		}
		gens.push_back(std::move(terms));
	}
	json stairs = json::array();
	for (auto& m : gb.staircase) stairs.push_back(mono_to_json(m));
	return json{{"gens", std::move(gens)}, {"staircase", std::move(stairs)}};
}

namespace io_detail {

// parse one generator: a nonempty list of [monomial, coeff] pairs, descending
template <class Coeff, class ParseCoeff>
std::vector<std::pair<Monomial, Coeff>> gen_terms_from_json(const json& j, int n,
                                                            ParseCoeff&& parse) {
	if (!j.is_array() || j.empty()) throw SchemaError("generator must be a nonempty term list");
	std::vector<std::pair<Monomial, Coeff>> terms;
	for (auto& t : j) {
		if (!t.is_array() || t.size() != 2) throw SchemaError("term must be a [monomial, coeff] pair");
		terms.push_back({mono_from_json(t.at(0), n), parse(t.at(1))});
	}
	for (size_t i = 0; i + 1 < terms.size(); ++i)
		if (!lex_less(terms[i + 1].first, terms[i].first))
			throw SchemaError("generator terms are not in descending order");
	return terms;
}

}  // namespace io_detail

inline LexGB<PrimeField> gb_from_json(const PrimeField& K, int n, const json& j) {
	LexGB<PrimeField> gb{n, {}, {}};
	for (auto& g : io_detail::need_key(j, "gens")) {
		MPoly<PrimeField> f{n, io_detail::gen_terms_from_json<PrimeField::Elem>(
		                           g, n, [&](const json& c) { return elem_from_json(K, c); })};
		for (auto& [m, c] : f.terms)
			if (K.is_zero(c)) throw SchemaError("generator stores a zero coefficient");
		gb.gens.push_back(std::move(f));
	}
	for (auto& m : io_detail::need_key(j, "staircase"))
		gb.staircase.push_back(mono_from_json(m, n));
	return gb;
}

// extension coefficients are validated against (p, f) without a field context
inline LexGB<ExtField> ext_gb_from_json(std::uint64_t p, int f, int n, const json& j) {
	LexGB<ExtField> gb{n, {}, {}};
	for (auto& g : io_detail::need_key(j, "gens")) {
		MPoly<ExtField> poly{n, io_detail::gen_terms_from_json<ExtField::Elem>(
		                            g, n, [&](const json& c) {
			                            return io_detail::residue_vector(c, p, f, "coefficient");
		                            })};
		gb.gens.push_back(std::move(poly));
	}
	for (auto& m : io_detail::need_key(j, "staircase"))
		gb.staircase.push_back(mono_from_json(m, n));
	return gb;
}

template <FieldContext F>
json instance_to_json(const IdealInstance<F>& inst) {
	json j;
	j["field"] = field_to_json(inst.field);
	j["n"] = inst.n;
	j["dim"] = inst.dim;
	json one = json::array();
	for (auto& x : inst.one) one.push_back(elem_to_json(inst.field, x));
	j["one"] = std::move(one);
	json mats = json::array();
	for (auto& m : inst.mats) {
		json entries = json::array();
		for (auto& [r, c, v] : m.entries())
			entries.push_back(json::array({r, c, elem_to_json(inst.field, v)}));
		mats.push_back(std::move(entries));
	}
	j["matrices"] = std::move(mats);
	if (!inst.labels.empty()) {
		json labels = json::array();
		for (auto& m : inst.labels) labels.push_back(mono_to_json(m));
		j["labels"] = std::move(labels);
	}
	return j;
}

template <FieldContext F>
IdealInstance<F> instance_from_json(const F& K, const json& j) {
	if (io_detail::need_key(j, "field") != field_to_json(K))
		throw SchemaError("instance field does not match");
	int n = io_detail::need_int(io_detail::need_key(j, "n"), "\"n\"");
	int dim = io_detail::need_int(io_detail::need_key(j, "dim"), "\"dim\"");
	if (n < 1 || dim < 1) throw SchemaError("\"n\" and \"dim\" must be positive");
	IdealInstance<F> inst{K, n, dim, {}, {}, {}};
	auto& one = io_detail::need_key(j, "one");
	if (!one.is_array() || static_cast<int>(one.size()) != dim)
		throw SchemaError("\"one\" has the wrong length");
	for (auto& x : one) inst.one.push_back(elem_from_json(K, x));
	auto& mats = io_detail::need_key(j, "matrices");
	if (!mats.is_array() || static_cast<int>(mats.size()) != n)
		throw SchemaError("expected one matrix per variable");
	for (auto& m : mats) {
		if (!m.is_array()) throw SchemaError("matrix must be a triplet list");
		std::vector<std::tuple<int, int, typename F::Elem>> entries;
		for (auto& t : m) {
			if (!t.is_array() || t.size() != 3)
				throw SchemaError("matrix entry must be [row, col, value]");
			int r = io_detail::need_int(t.at(0), "row");
			int c = io_detail::need_int(t.at(1), "col");
			if (r >= dim || c >= dim) throw SchemaError("matrix entry out of range");
			entries.push_back({r, c, elem_from_json(K, t.at(2))});
		}
		inst.mats.push_back(SparseMat<F>(K, dim, entries));
	}
	if (j.contains("labels"))
		for (auto& m : j.at("labels")) inst.labels.push_back(mono_from_json(m, n));
	try {
		validate_instance(inst);
	} catch (const Error& e) {
		throw SchemaError(std::string("invalid instance: ") + e.what());
	}
	return inst;
}

template <FieldContext F>
json forms_to_json(const F& K, const std::vector<LinearForm<F>>& forms) {
	json rows = json::array();
	for (auto& f : forms) {
		json row = json::array();
		for (auto& x : f) row.push_back(elem_to_json(K, x));
		rows.push_back(std::move(row));
	}
	return json{{"forms", std::move(rows)}};
}

template <FieldContext F>
std::vector<LinearForm<F>> forms_from_json(const F& K, int dim, const json& j) {
	std::vector<LinearForm<F>> forms;
	auto& rows = io_detail::need_key(j, "forms");
	if (!rows.is_array() || rows.empty()) throw SchemaError("\"forms\" must be a nonempty list");
	for (auto& r : rows) {
		if (!r.is_array() || static_cast<int>(r.size()) != dim)
			throw SchemaError("form has the wrong length");
		LinearForm<F> f;
		for (auto& x : r) f.push_back(elem_from_json(K, x));
		forms.push_back(std::move(f));
	}
	return forms;
}

inline json report_to_json(const DecompositionReport& rep) {
	json j;
	j["pmin"] = poly_to_json(rep.pmin);
	json g = json::array();
	for (auto& gi : rep.radical.g) g.push_back(poly_to_json(gi));
	j["radical"] = json{{"p", poly_to_json(rep.radical.p)}, {"g", std::move(g)}};
	json comps = json::array();
	for (auto& c : rep.components) {
		json cj;
		cj["pk"] = poly_to_json(c.pk);
		cj["ek"] = c.ek;
		cj["fk"] = c.fk;
		cj["dk"] = c.dk;
		cj["lex_gb"] = gb_to_json(c.lex_gb);
		cj["ext_gb"] = c.ext_gb ? gb_to_json(*c.ext_gb) : json(nullptr);
		cj["origin_gb"] = c.origin_gb ? gb_to_json(*c.origin_gb) : json(nullptr);
		if (c.xi) {
			json xi = json::array();
			for (auto& x : *c.xi) {
				json e = json::array();
				for (auto v : x) e.push_back(v);
				xi.push_back(std::move(e));
			}
			cj["xi"] = std::move(xi);
		} else {
			cj["xi"] = json(nullptr);
		}
		comps.push_back(std::move(cj));
	}
	j["components"] = std::move(comps);
	j["cost"] = json{{"matvec", rep.cost.total_matvec()},
	                 {"radical_matvec", rep.cost.radical.matvec},
	                 {"ann_matvec", rep.cost.annihilator.matvec},
	                 {"ext_matvec", rep.cost.extension.matvec},
	                 {"verify_matvec", rep.cost.verification.matvec}};
	j["seed"] = rep.seed;
	j["strategy"] = strategy_name(rep.strategy);
	return j;
}

inline json truth_to_json(const GroundTruth& t) {
	json j;
	j["field"] = json{{"char", t.characteristic}};
	j["n"] = t.n;
	j["dim"] = t.dim;
	json comps = json::array();
	for (auto& c : t.components)
		comps.push_back(json{{"pk", poly_to_json(c.pk)},
		                     {"ek", c.ek},
		                     {"fk", c.fk},
		                     {"dk", c.dk},
		                     {"gb", gb_to_json(c.gb)}});
	j["components"] = std::move(comps);
	return j;
}

inline GroundTruth truth_from_json(const PrimeField& K, const json& j) {
	GroundTruth t;
	t.characteristic = io_detail::need_key(io_detail::need_key(j, "field"), "char")
	                       .get<std::uint64_t>();
	if (t.characteristic != K.characteristic())
		throw SchemaError("ground truth field does not match");
	t.n = io_detail::need_int(io_detail::need_key(j, "n"), "\"n\"");
	t.dim = io_detail::need_int(io_detail::need_key(j, "dim"), "\"dim\"");
	for (auto& cj : io_detail::need_key(j, "components")) {
		TruthComponent c;
		c.pk = poly_from_json(K, io_detail::need_key(cj, "pk"));
		c.ek = io_detail::need_int(io_detail::need_key(cj, "ek"), "\"ek\"");
		c.fk = io_detail::need_int(io_detail::need_key(cj, "fk"), "\"fk\"");
		c.dk = io_detail::need_int(io_detail::need_key(cj, "dk"), "\"dk\"");
		c.gb = gb_from_json(K, t.n, io_detail::need_key(cj, "gb"));
		t.components.push_back(std::move(c));
	}
	return t;
}

inline DecompositionReport report_from_json(const PrimeField& K, const json& j) {
	DecompositionReport rep;
	rep.pmin = poly_from_json(K, io_detail::need_key(j, "pmin"));
	auto& rad = io_detail::need_key(j, "radical");
	rep.radical.pmin = rep.pmin;
	rep.radical.p = poly_from_json(K, io_detail::need_key(rad, "p"));
	for (auto& gj : io_detail::need_key(rad, "g"))
		rep.radical.g.push_back(poly_from_json(K, gj));
	auto& comps = io_detail::need_key(j, "components");
	if (!comps.is_array()) throw SchemaError("\"components\" must be a list");
	for (auto& cj : comps) {
		ComponentResult c;
		c.pk = poly_from_json(K, io_detail::need_key(cj, "pk"));
		c.ek = io_detail::need_int(io_detail::need_key(cj, "ek"), "\"ek\"");
		c.fk = io_detail::need_int(io_detail::need_key(cj, "fk"), "\"fk\"");
		c.dk = io_detail::need_int(io_detail::need_key(cj, "dk"), "\"dk\"");
		if (c.ek < 1 || c.fk < 1 || c.dk < 1) throw SchemaError("component counts must be positive");
		int n = 0;
		{
			auto& gb = io_detail::need_key(cj, "lex_gb");
			auto& gens = io_detail::need_key(gb, "gens");
			if (!gens.is_array() || gens.empty() || !gens.at(0).is_array() ||
			    gens.at(0).empty() || !gens.at(0).at(0).is_array() ||
			    gens.at(0).at(0).size() != 2 || !gens.at(0).at(0).at(0).is_array())
				throw SchemaError("malformed basis");
			n = static_cast<int>(gens.at(0).at(0).at(0).size());
			if (n < 1) throw SchemaError("malformed basis");
			c.lex_gb = gb_from_json(K, n, gb);
		}
		auto& ext = io_detail::need_key(cj, "ext_gb");
		if (!ext.is_null()) c.ext_gb = ext_gb_from_json(K.characteristic(), c.fk, n, ext);
		auto& org = io_detail::need_key(cj, "origin_gb");
		if (!org.is_null()) c.origin_gb = ext_gb_from_json(K.characteristic(), c.fk, n, org);
		auto& xi = io_detail::need_key(cj, "xi");
		if (!xi.is_null()) {
			if (!xi.is_array() || static_cast<int>(xi.size()) != n)
				throw SchemaError("\"xi\" has the wrong arity");
			std::vector<ExtField::Elem> point;
			for (auto& x : xi)
				point.push_back(
				    io_detail::residue_vector(x, K.characteristic(), c.fk, "shift coordinate"));
			c.xi = std::move(point);
		}
		rep.components.push_back(std::move(c));
	}
	auto& cost = io_detail::need_key(j, "cost");
	rep.cost.radical.matvec = io_detail::need_key(cost, "radical_matvec").get<long long>();
	rep.cost.annihilator.matvec = io_detail::need_key(cost, "ann_matvec").get<long long>();
	rep.cost.extension.matvec = io_detail::need_key(cost, "ext_matvec").get<long long>();
	rep.cost.verification.matvec = io_detail::need_key(cost, "verify_matvec").get<long long>();
	if (io_detail::need_key(cost, "matvec").get<long long>() != rep.cost.total_matvec())
		throw SchemaError("cost total does not match its parts");
	rep.seed = io_detail::need_key(j, "seed").get<std::uint64_t>();
	auto strat = io_detail::need_key(j, "strategy").get<std::string>();
	if (strat == "mmm") rep.strategy = Strategy::mmm;
	else if (strat == "generic") rep.strategy = Strategy::generic;
	else throw SchemaError("unknown strategy tag");
	return rep;
}

}  // namespace seqann
