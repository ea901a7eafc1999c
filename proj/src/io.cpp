#include "irta/io.h"

#include "irta/errors.h"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace irta {

namespace {

enum class Tok { Ident, Int, Arrow, Colon, LBracket, RBracket, Amp, Op, Slash, At, End };

struct Token {
	Tok kind;
	std::string text;
	SourceSpan span;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool is_ident_char(char c) {
	return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

/// Splits one line into tokens; '#' ends the line.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
	std::vector<Token> out;
	std::size_t i = 0;
	auto span = [&](std::size_t col) { return SourceSpan{line_no, col + 1}; };
	while (i < line.size()) {
		char c = line[i];
		if (std::isspace(static_cast<unsigned char>(c))) {
			++i;
			continue;
		}
		if (c == '#')
			break;
		std::size_t start = i;
		if (is_ident_start(c)) {
			while (i < line.size() && is_ident_char(line[i]))
				++i;
			out.push_back({Tok::Ident, std::string(line.substr(start, i - start)), span(start)});
		} else if (std::isdigit(static_cast<unsigned char>(c))) {
			while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
				++i;
			out.push_back({Tok::Int, std::string(line.substr(start, i - start)), span(start)});
		} else if (line.substr(i, 2) == "->") {
			i += 2;
			out.push_back({Tok::Arrow, "->", span(start)});
		} else if (line.substr(i, 2) == "==" || line.substr(i, 2) == "<=" || line.substr(i, 2) == ">=") {
			i += 2;
			out.push_back({Tok::Op, std::string(line.substr(start, 2)), span(start)});
		} else if (c == '<' || c == '>') {
			++i;
			out.push_back({Tok::Op, std::string(1, c), span(start)});
		} else {
			Tok kind;
			switch (c) {
			case ':': kind = Tok::Colon; break;
			case '[': kind = Tok::LBracket; break;
			case ']': kind = Tok::RBracket; break;
			case '&': kind = Tok::Amp; break;
			case '/': kind = Tok::Slash; break;
			case '@': kind = Tok::At; break;
			default: throw SyntaxError(span(start), std::string("unexpected character '") + c + "'");
			}
			++i;
			out.push_back({kind, std::string(1, c), span(start)});
		}
	}
	out.push_back({Tok::End, "", span(line.size())});
	return out;
}

const char *describe(Tok kind) {
	switch (kind) {
	case Tok::Ident: return "identifier";
	case Tok::Int: return "integer";
	case Tok::Arrow: return "'->'";
	case Tok::Colon: return "':'";
	case Tok::LBracket: return "'['";
	case Tok::RBracket: return "']'";
	case Tok::Amp: return "'&'";
	case Tok::Op: return "comparison operator";
	case Tok::Slash: return "'/'";
	case Tok::At: return "'@'";
	case Tok::End: return "end of line";
	}
	return "token";
}

class TokenCursor {
public:
	explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

	const Token &peek() const { return tokens_[pos_]; }
	bool at(Tok kind) const { return peek().kind == kind; }

	const Token &expect(Tok kind) {
		if (!at(kind))
			throw SyntaxError(peek().span, std::string("expected ") + describe(kind) + ", found " +
			                                    (at(Tok::End) ? "end of line" : "'" + peek().text + "'"));
		return tokens_[pos_++];
	}

	const Token &expect_keyword(std::string_view word) {
		if (!at(Tok::Ident) || peek().text != word)
			throw SyntaxError(peek().span, "expected '" + std::string(word) + "'");
		return tokens_[pos_++];
	}

	std::vector<std::string> identifiers() {
		std::vector<std::string> out;
		while (at(Tok::Ident))
			out.push_back(tokens_[pos_++].text);
		return out;
	}

	void expect_end() { expect(Tok::End); }

private:
	std::vector<Token> tokens_;
	std::size_t pos_ = 0;
};

std::int64_t parse_int(const Token &t) {
	std::int64_t value = 0;
	auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
	if (ec != std::errc() || ptr != t.text.data() + t.text.size())
		throw SyntaxError(t.span, "integer '" + t.text + "' out of range");
	return value;
}

CompareOp parse_op(const Token &t) {
	if (t.text == "==")
		return CompareOp::Eq;
	if (t.text == "<")
		return CompareOp::Lt;
	if (t.text == "<=")
		return CompareOp::Le;
	if (t.text == ">")
		return CompareOp::Gt;
	return CompareOp::Ge;
}

struct ClockUse {
	std::string name;
	SourceSpan span;
};

} // namespace

Automaton parse_automaton(std::string_view text) {
	Automaton a;
	std::map<std::string, SourceSpan> declared;
	std::vector<ClockUse> clock_uses;

	std::size_t line_no = 0;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		std::size_t nl = text.find('\n', pos);
		std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
		pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
		++line_no;
		if (!line.empty() && line.back() == '\r')
			line.remove_suffix(1);

		TokenCursor cur(tokenize(line, line_no));
		if (cur.at(Tok::End))
			continue;
		const Token keyword = cur.expect(Tok::Ident);

		auto once = [&](const std::string &kw) {
			if (!declared.emplace(kw, keyword.span).second)
				throw SyntaxError(keyword.span, "duplicate '" + kw + "' declaration");
		};

		if (keyword.text == "automaton") {
			once(keyword.text);
			a.name = cur.expect(Tok::Ident).text;
			cur.expect_end();
		} else if (keyword.text == "alphabet") {
			once(keyword.text);
			a.alphabet = cur.identifiers();
			cur.expect_end();
		} else if (keyword.text == "clock") {
			once(keyword.text);
			a.clock = cur.expect(Tok::Ident).text;
			cur.expect_end();
		} else if (keyword.text == "locations") {
			once(keyword.text);
			a.locations = cur.identifiers();
			cur.expect_end();
		} else if (keyword.text == "init") {
			once(keyword.text);
			a.initial = cur.expect(Tok::Ident).text;
			cur.expect_end();
		} else if (keyword.text == "accepting") {
			once(keyword.text);
			for (auto &id : cur.identifiers())
				a.accepting.insert(std::move(id));
			cur.expect_end();
		} else if (keyword.text == "edge") {
			Edge e;
			e.src = cur.expect(Tok::Ident).text;
			cur.expect(Tok::Arrow);
			e.dst = cur.expect(Tok::Ident).text;
			cur.expect(Tok::Colon);
			e.letter = cur.expect(Tok::Ident).text;
			cur.expect(Tok::LBracket);
			if (cur.at(Tok::Ident) && cur.peek().text == "true") {
				cur.expect(Tok::Ident);
			} else {
				std::vector<GuardAtom> atoms;
				while (true) {
					const Token &clock = cur.expect(Tok::Ident);
					clock_uses.push_back({clock.text, clock.span});
					CompareOp op = parse_op(cur.expect(Tok::Op));
					atoms.push_back({op, parse_int(cur.expect(Tok::Int))});
					if (!cur.at(Tok::Amp))
						break;
					cur.expect(Tok::Amp);
				}
				e.guard = normalize_guard(atoms);
			}
			cur.expect(Tok::RBracket);
			if (!cur.at(Tok::End)) {
				cur.expect_keyword("reset");
				const Token &clock = cur.expect(Tok::Ident);
				clock_uses.push_back({clock.text, clock.span});
				e.reset = true;
			}
			cur.expect_end();
			a.edges.push_back(std::move(e));
		} else {
			throw SyntaxError(keyword.span, "unknown declaration '" + keyword.text + "'");
		}
	}

	for (const ClockUse &use : clock_uses)
		if (use.name != a.clock)
			throw SyntaxError(use.span, "unknown clock '" + use.name + "' (declared clock is '" + a.clock + "')");
	return a;
}

std::string format_guard(const Guard &g, std::string_view clock) {
	std::string c(clock);
	if (g.is_empty())
		return c + " < 0";
	if (g.is_point())
		return c + " == " + std::to_string(g.lower());
	std::vector<std::string> atoms;
	if (g.lower() != 0 || !g.lower_closed())
		atoms.push_back(c + (g.lower_closed() ? " >= " : " > ") + std::to_string(g.lower()));
	if (g.upper())
		atoms.push_back(c + (g.upper_closed() ? " <= " : " < ") + std::to_string(*g.upper()));
	if (atoms.empty())
		return "true";
	std::string s = atoms.front();
	for (std::size_t i = 1; i < atoms.size(); ++i)
		s += " & " + atoms[i];
	return s;
}

std::string print_automaton(const Automaton &a) {
	std::ostringstream os;
	auto list = [&os](const char *keyword, const std::vector<std::string> &items) {
		os << keyword;
		for (const auto &item : items)
			os << ' ' << item;
		os << '\n';
	};

	if (!a.name.empty())
		os << "automaton " << a.name << '\n';
	list("alphabet", a.alphabet);
	os << "clock " << a.clock << '\n';
	list("locations", a.locations);
	if (!a.initial.empty())
		os << "init " << a.initial << '\n';

	std::vector<std::string> accepting;
	for (const auto &l : a.locations)
		if (a.is_accepting(l))
			accepting.push_back(l);
	for (const auto &l : a.accepting)
		if (!a.has_location(l))
			accepting.push_back(l);
	list("accepting", accepting);

	for (const Edge &e : canonical_edges(a)) {
		os << "edge " << e.src << " -> " << e.dst << " : " << e.letter << " [" << format_guard(e.guard, a.clock)
		   << ']';
		if (e.reset)
			os << " reset " << a.clock;
		os << '\n';
	}
	return os.str();
}

TimedWord parse_timed_word(std::string_view text, bool strict) {
	std::vector<TimedEvent> events;
	std::size_t line_no = 0;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		std::size_t nl = text.find('\n', pos);
		std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
		pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
		++line_no;

		TokenCursor cur(tokenize(line, line_no));
		while (!cur.at(Tok::End)) {
			TimedEvent ev;
			ev.letter = cur.expect(Tok::Ident).text;
			cur.expect(Tok::At);
			const Token &num = cur.expect(Tok::Int);
			std::int64_t n = parse_int(num);
			std::int64_t d = 1;
			if (cur.at(Tok::Slash)) {
				cur.expect(Tok::Slash);
				const Token &den = cur.expect(Tok::Int);
				d = parse_int(den);
				if (d == 0)
					throw SyntaxError(den.span, "zero denominator");
			}
			ev.time = Rational(n, d);
			events.push_back(std::move(ev));
		}
	}
	return TimedWord(std::move(events), strict);
}

std::string format_timed_word(const TimedWord &w) {
	std::string s;
	for (const auto &ev : w.events()) {
		if (!s.empty())
			s += ' ';
		s += ev.letter + "@" + ev.time.to_string();
	}
	return s;
}

namespace {

std::string quoted(std::string_view s) {
	std::string out = "\"";
	for (char c : s) {
		if (c == '"' || c == '\\')
			out += '\\';
		out += c;
	}
	return out + "\"";
}

std::string dot_label(const Edge &e, std::string_view clock) {
	std::string label = e.letter;
	const Guard &g = e.guard;
	std::string c(clock);
	if (g.is_empty()) {
		label += ", false";
	} else if (g.is_point()) {
		label += ", " + c + "=" + std::to_string(g.lower());
	} else if (g != Guard::always()) {
		std::vector<std::string> atoms;
		if (g.lower() != 0 || !g.lower_closed())
			atoms.push_back(c + (g.lower_closed() ? ">=" : ">") + std::to_string(g.lower()));
		if (g.upper())
			atoms.push_back(c + (g.upper_closed() ? "<=" : "<") + std::to_string(*g.upper()));
		label += ", " + atoms.front();
		for (std::size_t i = 1; i < atoms.size(); ++i)
			label += " & " + atoms[i];
	}
	if (e.reset)
		label += ", reset";
	return label;
}

} // namespace

std::string to_dot(const Automaton &a) {
	std::ostringstream os;
	os << "digraph " << quoted(a.name.empty() ? "automaton" : a.name) << " {\n";
	os << "  rankdir=LR;\n";
	os << "  node [shape=circle];\n";
	os << "  __start [shape=point, label=\"\"];\n";
	for (const auto &l : a.locations)
		os << "  " << quoted(l) << (a.is_accepting(l) ? " [shape=doublecircle];\n" : ";\n");
	if (!a.initial.empty())
		os << "  __start -> " << quoted(a.initial) << ";\n";
	for (const Edge &e : canonical_edges(a))
		os << "  " << quoted(e.src) << " -> " << quoted(e.dst) << " [label=" << quoted(dot_label(e, a.clock))
		   << "];\n";
	os << "}\n";
	return os.str();
}

} // namespace irta
