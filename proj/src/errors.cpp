#include "irta/errors.h"

namespace irta {

const char *to_string(ErrorCode code) {
	switch (code) {
	case ErrorCode::ZeroDenominator: return "ZeroDenominator";
	case ErrorCode::Overflow: return "Overflow";
	case ErrorCode::NegativeValue: return "NegativeValue";
	case ErrorCode::TimeRegression: return "TimeRegression";
	case ErrorCode::UnknownLetter: return "UnknownLetter";
	case ErrorCode::NotIRTA: return "NotIRTA";
	case ErrorCode::NotDeterministic: return "NotDeterministic";
	case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
	case ErrorCode::Syntax: return "Syntax";
	case ErrorCode::NonMonotoneTime: return "NonMonotoneTime";
	case ErrorCode::Internal: return "Internal";
	}
	return "Unknown";
}

SyntaxError::SyntaxError(SourceSpan span, const std::string &message)
    : Error(ErrorCode::Syntax,
            std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      span_(span), message_(message) {}

} // namespace irta
