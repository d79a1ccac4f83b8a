#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqann/io.hpp"

// Command-line surface: gen, decompose, ann, minpoly, verify, bench.
// Exit codes: 0 success, 2 genericity failure, 3 verification failure,
// 4 input error.

using namespace seqann;

namespace {

json read_json_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw SchemaError("cannot open " + path);
	json j;
	try {
		in >> j;
	} catch (const std::exception& e) {
		throw SchemaError("bad JSON in " + path + ": " + e.what());
	}
	return j;
}

void write_text(const std::string& path, const std::string& text) {
	std::ofstream out(path);
	if (!out) throw SchemaError("cannot open " + path + " for writing");
	out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& out_path, const json& j) {
	if (out_path.empty()) std::cout << dump(j);
	else write_text(out_path, dump(j));
}

std::vector<std::uint64_t> parse_uint_list(const std::string& s, const char* what) {
	std::vector<std::uint64_t> out;
	std::stringstream ss(s);
	std::string item;
	while (std::getline(ss, item, ',')) {
		try {
			size_t pos = 0;
			out.push_back(std::stoull(item, &pos));
			if (pos != item.size()) throw std::invalid_argument(item);
		} catch (const std::exception&) {
			throw InvalidArgument(std::string("bad integer list for ") + what + ": " + s);
		}
	}
	if (out.empty()) throw InvalidArgument(std::string("empty integer list for ") + what);
	return out;
}

UniPoly<PrimeField> poly_of(const PrimeField& K, const std::string& csv, const char* what) {
	UniPoly<PrimeField> f;
	for (auto v : parse_uint_list(csv, what)) f.c.push_back(v % K.characteristic());
	trim(K, f);
	return f;
}

// component grammar:
//   fat:origin:e=E           fat point at the origin
//   fat:a1,..,an:e=E         fat point at a rational point
//   fatp:p=c0,..:e=E[:g=c0,..;c0,..]   parametrized fat point
//   curv:p=c0,..:e=E[:g=..;..]         curvilinear
ComponentSpec parse_spec(const PrimeField& K, const std::string& text, int& n_hint) {
	std::vector<std::string> parts;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ':')) parts.push_back(item);
	if (parts.size() < 3) throw InvalidArgument("bad component spec: " + text);
	ComponentSpec spec;
	auto tagged = [&](const std::string& part, const char* tag) -> std::string {
		std::string prefix = std::string(tag) + "=";
		if (part.rfind(prefix, 0) != 0)
			throw InvalidArgument("expected " + prefix + "... in spec: " + text);
		return part.substr(prefix.size());
	};
	auto parse_g = [&](const std::string& body) {
		std::stringstream gs(body);
		std::string one;
		while (std::getline(gs, one, ';')) spec.g.push_back(poly_of(K, one, "g"));
	};
	if (parts[0] == "fat") {
		spec.kind = ComponentSpec::Kind::fat_point;
		if (parts[1] != "origin") {
			for (auto v : parse_uint_list(parts[1], "point"))
				spec.point.push_back(v % K.characteristic());
			if (n_hint == 0) n_hint = static_cast<int>(spec.point.size());
			else if (n_hint != static_cast<int>(spec.point.size()))
				throw InvalidArgument("point arity disagrees with the variable count");
		}
		spec.e = std::stoi(tagged(parts[2], "e"));
	} else if (parts[0] == "fatp" || parts[0] == "curv") {
		spec.kind = parts[0] == "fatp" ? ComponentSpec::Kind::fat_parametrized
		                               : ComponentSpec::Kind::curvilinear;
		spec.p = poly_of(K, tagged(parts[1], "p"), "p");
		spec.e = std::stoi(tagged(parts[2], "e"));
		if (parts.size() > 3) {
			parse_g(tagged(parts[3], "g"));
			int arity = static_cast<int>(spec.g.size()) + 1;
			if (n_hint == 0) n_hint = arity;
			else if (n_hint != arity)
				throw InvalidArgument("parametrization count disagrees with the variable count");
		}
	} else {
		throw InvalidArgument("unknown component kind: " + parts[0]);
	}
	return spec;
}

// fat:origin leaves the point empty until the variable count is known
void fill_origins(std::vector<ComponentSpec>& specs, int n) {
	for (auto& s : specs)
		if (s.kind == ComponentSpec::Kind::fat_point && s.point.empty())
			s.point.assign(static_cast<size_t>(n), 0);
}

void log_costs(const StageCosts& cost) {
	std::cerr << "[radical] matvec=" << cost.radical.matvec << "\n"
	          << "[annihilator] matvec=" << cost.annihilator.matvec << "\n"
	          << "[extension] matvec=" << cost.extension.matvec << "\n"
	          << "[verify] matvec=" << cost.verification.matvec << "\n";
}

int verify_mode_of(const std::string& s) {
	if (s == "none") return 0;
	if (s == "probabilistic") return 1;
	if (s == "oracle") return 2;
	throw InvalidArgument("unknown verify mode: " + s);
}

struct GenArgs {
	std::vector<std::string> specs;
	std::uint64_t field = 0, seed = 0;
	int n = 0;
	bool conjugate = false;
	std::string out, truth;
};

void run_gen(const GenArgs& a) {
	auto K = make_prime_field(a.field);
	int n_hint = a.n;
	std::vector<ComponentSpec> specs;
	for (auto& s : a.specs) specs.push_back(parse_spec(K, s, n_hint));
	if (n_hint == 0) n_hint = 2;
	fill_origins(specs, n_hint);
	auto [inst, truth] = gen_instance(specs, K, n_hint, a.seed, a.conjugate);
	emit(a.out, instance_to_json(inst));
	std::string tp = a.truth;
	if (tp.empty() && !a.out.empty()) {
		tp = a.out;
		auto dot = tp.rfind(".json");
		if (dot != std::string::npos && dot == tp.size() - 5) tp = tp.substr(0, dot);
		tp += ".truth.json";
	}
	if (!tp.empty()) write_text(tp, dump(truth_to_json(truth)));
}

struct DecomposeArgs {
	std::string input, out, strategy = "generic", repr = "lex", verify = "none";
	std::uint64_t seed = 0;
	int retries = 5;
	bool paranoid = false;
};

void run_decompose(const DecomposeArgs& a) {
	auto doc = read_json_file(a.input);
	auto field = parse_field(io_detail::need_key(doc, "field"));
	if (field.ext) throw SchemaError("decompose expects a prime-field instance");
	auto inst = instance_from_json(field.base, doc);
	if (a.paranoid) check_commutation(inst);
	if (field.base.characteristic() <= 2 * static_cast<std::uint64_t>(inst.dim))
		std::cerr << "warning: characteristic " << field.base.characteristic()
		          << " is small for dimension " << inst.dim
		          << "; genericity failures become likely\n";
	DecomposeOptions opts;
	opts.seed = a.seed;
	opts.retry_budget = a.retries;
	opts.verify_mode = verify_mode_of(a.verify);
	if (a.strategy == "mmm") opts.strategy = Strategy::mmm;
	else if (a.strategy == "generic") opts.strategy = Strategy::generic;
	else throw InvalidArgument("unknown strategy: " + a.strategy);
	std::stringstream rs(a.repr);
	std::string r;
	bool lex_requested = false;
	while (std::getline(rs, r, ',')) {
		if (r == "lex") lex_requested = true;
		else if (r == "ext") opts.repr_ext = true;
		else if (r == "origin") opts.repr_origin = true;
		else throw InvalidArgument("unknown representation: " + r);
	}
	(void)lex_requested;  // the lex basis is always computed
	auto rep = decompose(inst, opts);
	log_costs(rep.cost);
	emit(a.out, report_to_json(rep));
}

struct AnnArgs {
	std::string input, forms, out, algorithm = "mmm", minpoly;
	int bound = 0;
};

template <FieldContext F>
void run_ann_typed(const F& K, const json& doc, const AnnArgs& a) {
	auto inst = instance_from_json(K, doc);
	auto forms = forms_from_json(K, inst.dim, read_json_file(a.forms));
	MonomialCache<F> cache(inst);
	CostCounter cost;
	LexGB<F> gb;
	if (a.algorithm == "mmm") {
		gb = mmm_ann(forms, inst, cache, cost);
	} else if (a.algorithm == "generic") {
		if (a.bound < 1) throw InvalidArgument("generic needs --bound >= 1");
		std::optional<LexGB<F>> out;
		if (!a.minpoly.empty()) {
			if constexpr (std::is_same_v<F, PrimeField>) {
				auto mu = poly_of(K, a.minpoly, "minpoly");
				out = generic_ann(forms, inst, cache, a.bound, cost, &mu);
			} else {
				throw InvalidArgument("--minpoly is only supported over prime fields");
			}
		} else {
			out = generic_ann(forms, inst, cache, a.bound, cost);
		}
		if (!out) throw GenericityFailure("generic annihilator failed; add forms or raise --bound");
		gb = std::move(*out);
	} else {
		throw InvalidArgument("unknown algorithm: " + a.algorithm);
	}
	std::cerr << "[ann] matvec=" << cost.matvec << "\n";
	emit(a.out, gb_to_json(gb));
}

void run_ann(const AnnArgs& a) {
	auto doc = read_json_file(a.input);
	auto field = parse_field(io_detail::need_key(doc, "field"));
	if (field.ext) run_ann_typed(*field.ext, doc, a);
	else run_ann_typed(field.base, doc, a);
}

struct MinpolyArgs {
	std::string input, out;
	std::uint64_t seed = 0;
	int retries = 5;
};

void run_minpoly(const MinpolyArgs& a) {
	auto doc = read_json_file(a.input);
	auto field = parse_field(io_detail::need_key(doc, "field"));
	if (field.ext) throw SchemaError("minpoly expects a prime-field instance");
	auto inst = instance_from_json(field.base, doc);
	MonomialCache<PrimeField> cache(inst);
	CostCounter cost;
	auto shape = radical_param(inst, cache, Rng(a.seed).fork(1000), a.retries, cost);
	std::cerr << "[radical] matvec=" << cost.matvec << "\n";
	json g = json::array();
	for (auto& gi : shape.g) g.push_back(poly_to_json(gi));
	emit(a.out, json{{"pmin", poly_to_json(shape.pmin)},
	                 {"radical", json{{"p", poly_to_json(shape.p)}, {"g", std::move(g)}}}});
}

struct VerifyArgs {
	std::string report, instance, mode = "probabilistic";
};

void run_verify(const VerifyArgs& a) {
	auto idoc = read_json_file(a.instance);
	auto field = parse_field(io_detail::need_key(idoc, "field"));
	if (field.ext) throw SchemaError("verify expects a prime-field instance");
	auto inst = instance_from_json(field.base, idoc);
	auto rep = report_from_json(field.base, read_json_file(a.report));
	CostCounter cost;
	verify_report(inst, rep, verify_mode_of(a.mode), cost);
}

struct BenchArgs {
	std::vector<std::string> specs;
	std::uint64_t field = 0;
	int n = 0, seeds = 10;
	std::string strategy = "both", out;
};

void run_bench(const BenchArgs& a) {
	auto K = make_prime_field(a.field);
	std::vector<std::string> strategies;
	if (a.strategy == "both") strategies = {"mmm", "generic"};
	else strategies = {a.strategy};
	std::stringstream csv;
	csv << "instance_id,D,n,strategy,matvec_total,wall_ms\n";
	for (int s = 0; s < a.seeds; ++s) {
		int n_hint = a.n;
		std::vector<ComponentSpec> specs;
		for (auto& t : a.specs) specs.push_back(parse_spec(K, t, n_hint));
		if (n_hint == 0) n_hint = 2;
		fill_origins(specs, n_hint);
		auto [inst, truth] = gen_instance(specs, K, n_hint, static_cast<std::uint64_t>(s), false);
		for (auto& strat : strategies) {
			DecomposeOptions opts;
			opts.seed = static_cast<std::uint64_t>(s);
			opts.strategy = strat == "mmm" ? Strategy::mmm : Strategy::generic;
			auto start = std::chrono::steady_clock::now();
			auto rep = decompose(inst, opts);
			auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
			              std::chrono::steady_clock::now() - start)
			              .count();
			csv << s << "," << inst.dim << "," << inst.n << "," << strat << ","
			    << rep.cost.total_matvec() << "," << ms << "\n";
		}
	}
	if (a.out.empty()) std::cout << csv.str();
	else write_text(a.out, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"primary decomposition of sparse zero-dimensional ideals"};
	app.require_subcommand(1);

	GenArgs ga;
	auto* gen = app.add_subcommand("gen", "generate an instance with known ground truth");
	gen->add_option("--spec", ga.specs, "component spec, repeatable")->required();
	gen->add_option("--field", ga.field, "prime characteristic")->required();
	gen->add_option("--seed", ga.seed, "generator seed");
	gen->add_option("--n", ga.n, "number of variables (default 2 or inferred)");
	gen->add_flag("--conjugate", ga.conjugate, "apply a random change of basis");
	gen->add_option("--out", ga.out, "instance output path (default stdout)");
	gen->add_option("--truth", ga.truth, "ground truth output path (default <out>.truth.json)");
	gen->callback([&] { run_gen(ga); });

	DecomposeArgs da;
	auto* dec = app.add_subcommand("decompose", "compute the primary decomposition");
	dec->add_option("--input", da.input, "instance JSON")->required();
	dec->add_option("--strategy", da.strategy, "mmm or generic (default generic)");
	dec->add_option("--repr", da.repr, "comma list from lex,ext,origin (default lex)");
	dec->add_option("--seed", da.seed, "run seed");
	dec->add_option("--verify", da.verify, "none, probabilistic, or oracle (default none)");
	dec->add_option("--retries", da.retries, "retry budget per stage (default 5)");
	dec->add_flag("--paranoid", da.paranoid, "check matrix commutation first");
	dec->add_option("--out", da.out, "report output path (default stdout)");
	dec->callback([&] { run_decompose(da); });

	AnnArgs aa;
	auto* ann = app.add_subcommand("ann", "annihilator of explicit linear forms");
	ann->add_option("--input", aa.input, "instance JSON")->required();
	ann->add_option("--forms", aa.forms, "forms JSON")->required();
	ann->add_option("--algorithm", aa.algorithm, "mmm or generic (default mmm)");
	ann->add_option("--bound", aa.bound, "variable degree bound for generic");
	ann->add_option("--minpoly", aa.minpoly, "known last-variable minimal polynomial, c0,c1,...");
	ann->add_option("--out", aa.out, "basis output path (default stdout)");
	ann->callback([&] { run_ann(aa); });

	MinpolyArgs ma;
	auto* mp = app.add_subcommand("minpoly", "radical parametrization only");
	mp->add_option("--input", ma.input, "instance JSON")->required();
	mp->add_option("--seed", ma.seed, "run seed");
	mp->add_option("--retries", ma.retries, "retry budget (default 5)");
	mp->add_option("--out", ma.out, "output path (default stdout)");
	mp->callback([&] { run_minpoly(ma); });

	VerifyArgs va;
	auto* ver = app.add_subcommand("verify", "re-check a report against its instance");
	ver->add_option("--report", va.report, "report JSON")->required();
	ver->add_option("--instance", va.instance, "instance JSON")->required();
	ver->add_option("--mode", va.mode, "none, probabilistic, or oracle (default probabilistic)");
	ver->callback([&] { run_verify(va); });

	BenchArgs ba;
	auto* bench = app.add_subcommand("bench", "cost sweep over generated instances");
	bench->add_option("--spec", ba.specs, "component spec, repeatable")->required();
	bench->add_option("--field", ba.field, "prime characteristic")->required();
	bench->add_option("--n", ba.n, "number of variables (default 2 or inferred)");
	bench->add_option("--seeds", ba.seeds, "number of seeded instances (default 10)");
	bench->add_option("--strategy", ba.strategy, "mmm, generic, or both (default both)");
	bench->add_option("--out", ba.out, "CSV output path (default stdout)");
	bench->callback([&] { run_bench(ba); });

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 4;
	} catch (const GenericityFailure& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const VerificationFailed& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 4;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 4;
	}
	return 0;
}
