#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irta {

enum class ErrorCode {
	ZeroDenominator,
	Overflow,
	NegativeValue,
	TimeRegression,
	UnknownLetter,
	NotIRTA,
	NotDeterministic,
	AlphabetMismatch,
	Syntax,
	NonMonotoneTime,
	Internal,
};

const char *to_string(ErrorCode code);

/// 1-based position in a source text.
struct SourceSpan {
	std::size_t line = 1;
	std::size_t column = 1;
};

class Error : public std::runtime_error {
public:
	Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

	ErrorCode code() const noexcept { return code_; }

private:
	ErrorCode code_;
};

class SyntaxError : public Error {
public:
	SyntaxError(SourceSpan span, const std::string &message);

	SourceSpan span() const noexcept { return span_; }
	/// Message without the position prefix.
	const std::string &message() const noexcept { return message_; }

private:
	SourceSpan span_;
	std::string message_;
};

/// Raised when a timed word has a timestamp smaller than its predecessor
/// (or equal to it, in strict mode). `index` is the 0-based event index.
class NonMonotoneTimeError : public Error {
public:
	NonMonotoneTimeError(std::size_t index, const std::string &what)
	    : Error(ErrorCode::NonMonotoneTime, what), index_(index) {}

	std::size_t index() const noexcept { return index_; }

private:
	std::size_t index_;
};

} // namespace irta
