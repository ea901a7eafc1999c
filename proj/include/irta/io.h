#pragma once

#include "irta/automaton.h"

#include <string>
#include <string_view>

namespace irta {

/// Parses the line-oriented automaton format:
///
///     automaton NAME
///     alphabet SYM+
///     clock NAME
///     locations ID+
///     init ID
///     accepting ID*
///     edge SRC -> DST : LETTER [GUARD] (reset CLOCK)?
///
/// GUARD is `true` or `CLOCK OP INT (& CLOCK OP INT)*` with OP one of
/// ==, <, <=, >, >=. '#' starts a comment. Syntax errors throw SyntaxError
/// with the offending position; dangling references are left for
/// validate_wellformed.
Automaton parse_automaton(std::string_view text);

/// Canonical text: declarations in grammar order, edges sorted by source,
/// letter and guard. parse_automaton(print_automaton(a)) == a.
std::string print_automaton(const Automaton &a);

/// `x == 1`, `x > 0 & x < 1`, `true`, ...
std::string format_guard(const Guard &g, std::string_view clock);

/// Whitespace-separated LETTER@TIME with TIME an integer or p/q. Throws
/// SyntaxError, or NonMonotoneTimeError for decreasing times (or repeated
/// times when `strict`).
TimedWord parse_timed_word(std::string_view text, bool strict = false);
std::string format_timed_word(const TimedWord &w);

/// Graphviz digraph; accepting locations are double circles and the initial
/// location has an entry arrow.
std::string to_dot(const Automaton &a);

} // namespace irta
