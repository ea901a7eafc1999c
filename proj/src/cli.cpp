#include "irta/cli.h"

#include "irta/analysis.h"
#include "irta/checks.h"
#include "irta/determinize.h"
#include "irta/errors.h"
#include "irta/fuzz.h"
#include "irta/io.h"
#include "irta/semantics.h"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace irta {

namespace {

/// Input problem already reported to the user; maps to exit code 2.
struct InputFailure {};

class Session {
public:
	Session(std::ostream &out, std::ostream &err) : out_(out), err_(err) {}

	Automaton load(const std::string &path, bool require_wellformed = true) {
		std::ifstream in(path, std::ios::binary);
		if (!in) {
			err_ << path << ": cannot open file\n";
			throw InputFailure{};
		}
		std::ostringstream text;
		text << in.rdbuf();
		Automaton a;
		try {
			a = parse_automaton(text.str());
		} catch (const SyntaxError &e) {
			err_ << path << ":" << e.span().line << ":" << e.span().column << ": " << e.message() << '\n';
			throw InputFailure{};
		} catch (const Error &e) {
			err_ << path << ": " << e.what() << '\n';
			throw InputFailure{};
		}
		if (require_wellformed) {
			auto report = validate_wellformed(a);
			if (!report.ok()) {
				for (const auto &issue : report.issues)
					err_ << path << ": " << issue.message << '\n';
				throw InputFailure{};
			}
		}
		return a;
	}

	int check(const std::string &path) {
		Automaton a = load(path, false);
		auto wf = validate_wellformed(a);
		if (!wf.ok()) {
			out_ << path << ": not well-formed\n";
			for (const auto &issue : wf.issues)
				out_ << "  " << issue.message << '\n';
			return kExitNo;
		}
		auto ir = check_integer_reset(a);
		if (!ir.ok()) {
			out_ << path << ": not integer-reset\n";
			for (std::size_t i : ir.offending_edges)
				out_ << "  edge " << i << ": " << describe(a, a.edges[i]) << '\n';
			return kExitNo;
		}
		auto det = check_deterministic(a);
		out_ << path << ": ok (integer-reset" << (det.ok() ? ", deterministic" : ", nondeterministic")
		     << ", K=" << a.max_constant() << ")\n";
		return kExitYes;
	}

	int det(const std::string &path, const std::string &output) {
		Automaton a = load(path);
		auto d = determinize(a);
		std::ostringstream text;
		for (std::size_t i = 0; i < d.states.size(); ++i)
			text << "# " << d.automaton.locations[i] << " = " << to_string(d.states[i]) << '\n';
		text << print_automaton(d.automaton);
		if (output.empty()) {
			out_ << text.str();
		} else {
			std::ofstream file(output, std::ios::binary);
			if (!file) {
				err_ << output << ": cannot write file\n";
				return kExitError;
			}
			file << text.str();
		}
		return kExitYes;
	}

	int member(const std::string &path, const std::vector<std::string> &word_parts, bool strict) {
		Automaton a = load(path);
		std::string text;
		for (const auto &part : word_parts)
			text += part + " ";
		TimedWord w;
		try {
			w = parse_timed_word(text, strict);
		} catch (const SyntaxError &e) {
			err_ << "word:" << e.span().column << ": " << e.message() << '\n';
			return kExitError;
		}
		bool accepted = irta::member(a, w);
		out_ << (accepted ? "accepted" : "rejected") << '\n';
		return accepted ? kExitYes : kExitNo;
	}

	int empty(const std::string &path) {
		Automaton a = load(path);
		auto r = is_empty(a);
		if (r.empty) {
			out_ << "empty\n";
			return kExitYes;
		}
		out_ << show_word("nonempty; accepted word", *r.witness);
		return kExitNo;
	}

	int include(const std::string &pa, const std::string &pb) {
		Automaton a = load(pa);
		Automaton b = load(pb);
		auto r = includes(a, b);
		if (r.holds) {
			out_ << "included\n";
			return kExitYes;
		}
		out_ << show_word("not included; accepted by " + pa + " but not by " + pb, *r.counterexample);
		return kExitNo;
	}

	int equiv(const std::string &pa, const std::string &pb) {
		Automaton a = load(pa);
		Automaton b = load(pb);
		auto ab = includes(a, b);
		if (!ab.holds) {
			out_ << show_word("not equivalent; accepted by " + pa + " but not by " + pb, *ab.counterexample);
			return kExitNo;
		}
		auto ba = includes(b, a);
		if (!ba.holds) {
			out_ << show_word("not equivalent; accepted by " + pb + " but not by " + pa, *ba.counterexample);
			return kExitNo;
		}
		out_ << "equivalent\n";
		return kExitYes;
	}

	int fuzz(const std::string &pa, const std::string &pb, FuzzParams params, std::optional<std::int64_t> max_time) {
		Automaton a = load(pa);
		Automaton b = load(pb);
		params.max_time = max_time.value_or(std::max(a.max_constant(), b.max_constant()) + 4);
		auto report = fuzz_equivalence(a, b, params);
		out_ << format_report(report);
		return report.mismatches.empty() ? kExitYes : kExitNo;
	}

	int dot(const std::string &path) {
		out_ << to_dot(load(path));
		return kExitYes;
	}

private:
	/// Header line ending in ":" followed by the word; the empty word is named
	/// in the header since its line is blank.
	static std::string show_word(const std::string &header, const TimedWord &w) {
		return header + (w.empty() ? " (the empty word):\n" : ":\n") + format_timed_word(w) + '\n';
	}

	static std::string describe(const Automaton &a, const Edge &e) {
		std::string s = e.src + " -> " + e.dst + " : " + e.letter + " [" + format_guard(e.guard, a.clock) + "]";
		if (e.reset)
			s += " reset " + a.clock;
		return s;
	}

	std::ostream &out_;
	std::ostream &err_;
};

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
	CLI::App app{"Integer-reset timed automata: validation, determinization and language checks", "irta"};
	app.require_subcommand(1);
	app.fallthrough();

	bool strict = false;
	app.add_flag("--strict-mono", strict, "Reject equal adjacent timestamps in timed words");

	std::string file_a, file_b, output;
	std::vector<std::string> word;
	FuzzParams fuzz_params;
	std::optional<std::int64_t> max_time;
	std::string denoms = "1,2,3,4";

	auto *check = app.add_subcommand("check", "Check well-formedness and the integer-reset property");
	check->add_option("FILE", file_a)->required();

	auto *det = app.add_subcommand("det", "Determinize an integer-reset automaton");
	det->add_option("FILE", file_a)->required();
	det->add_option("-o,--output", output, "Write the result to a file");

	auto *mem = app.add_subcommand("member", "Decide membership of a timed word");
	mem->add_option("FILE", file_a)->required();
	mem->add_option("WORD", word, "Events LETTER@TIME");

	auto *emp = app.add_subcommand("empty", "Decide emptiness; prints an accepted word otherwise");
	emp->add_option("FILE", file_a)->required();

	auto *inc = app.add_subcommand("include", "Decide L(A) included in L(B)");
	inc->add_option("A", file_a)->required();
	inc->add_option("B", file_b)->required();

	auto *eq = app.add_subcommand("equiv", "Decide language equivalence");
	eq->add_option("A", file_a)->required();
	eq->add_option("B", file_b)->required();

	auto *fz = app.add_subcommand("fuzz", "Compare membership on random timed words");
	fz->add_option("A", file_a)->required();
	fz->add_option("B", file_b)->required();
	fz->add_option("--count", fuzz_params.count, "Number of words")->capture_default_str();
	fz->add_option("--seed", fuzz_params.seed, "PRNG seed")->capture_default_str();
	fz->add_option("--max-len", fuzz_params.max_len, "Maximum word length")->capture_default_str();
	fz->add_option("--max-time", max_time, "Largest timestamp (default: K + 4)");
	fz->add_option("--denoms", denoms, "Comma-separated timestamp denominators")->capture_default_str();

	auto *dt = app.add_subcommand("dot", "Print a Graphviz rendering");
	dt->add_option("FILE", file_a)->required();

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e, out, err);
		return code == 0 ? kExitYes : kExitError;
	}

	Session session(out, err);
	try {
		if (*check)
			return session.check(file_a);
		if (*det)
			return session.det(file_a, output);
		if (*mem)
			return session.member(file_a, word, strict);
		if (*emp)
			return session.empty(file_a);
		if (*inc)
			return session.include(file_a, file_b);
		if (*eq)
			return session.equiv(file_a, file_b);
		if (*fz) {
			fuzz_params.denominators.clear();
			std::stringstream ss(denoms);
			std::string item;
			while (std::getline(ss, item, ',')) {
				std::int64_t q = 0;
				try {
					q = std::stoll(item);
				} catch (const std::exception &) {
					q = 0;
				}
				if (q <= 0) {
					err << "--denoms: '" << item << "' is not a positive integer\n";
					return kExitError;
				}
				fuzz_params.denominators.push_back(q);
			}
			return session.fuzz(file_a, file_b, fuzz_params, max_time);
		}
		if (*dt)
			return session.dot(file_a);
	} catch (const InputFailure &) {
		return kExitError;
	} catch (const NonMonotoneTimeError &e) {
		err << "word: event " << e.index() << ": " << e.what() << '\n';
		return kExitError;
	} catch (const Error &e) {
		err << to_string(e.code()) << ": " << e.what() << '\n';
		return kExitError;
	}
	return kExitError;
}

} // namespace irta
