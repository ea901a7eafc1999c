#include "irta/guard.h"

#include "irta/errors.h"

#include <algorithm>

namespace irta {

Guard Guard::empty() {
	Guard g;
	g.empty_ = true;
	g.lower_ = 0;
	g.lower_closed_ = true;
	g.upper_ = 0;
	g.upper_closed_ = false;
	return g;
}

Guard Guard::point(std::int64_t c) { return interval(c, true, c, true); }

Guard Guard::interval(std::int64_t lower, bool lower_closed, std::optional<std::int64_t> upper,
                      bool upper_closed) {
	if (lower < 0 || (upper && *upper < 0))
		throw Error(ErrorCode::NegativeValue, "negative guard constant");
	if (upper) {
		if (lower > *upper)
			return empty();
		if (lower == *upper && !(lower_closed && upper_closed))
			return empty();
	} else {
		upper_closed = false;
	}
	Guard g;
	g.lower_ = lower;
	g.lower_closed_ = lower_closed;
	g.upper_ = upper;
	g.upper_closed_ = upper_closed;
	return g;
}

bool Guard::contains(const Rational &v) const {
	if (empty_)
		return false;
	Rational lo(lower_);
	if (lower_closed_ ? v < lo : v <= lo)
		return false;
	if (upper_) {
		Rational hi(*upper_);
		if (upper_closed_ ? v > hi : v >= hi)
			return false;
	}
	return true;
}

Guard Guard::intersect(const Guard &other) const {
	if (empty_ || other.empty_)
		return empty();

	std::int64_t lower = lower_;
	bool lower_closed = lower_closed_;
	if (other.lower_ > lower || (other.lower_ == lower && !other.lower_closed_)) {
		lower = other.lower_;
		lower_closed = other.lower_closed_;
	}

	std::optional<std::int64_t> upper = upper_;
	bool upper_closed = upper_closed_;
	if (other.upper_) {
		if (!upper || *other.upper_ < *upper || (*other.upper_ == *upper && !other.upper_closed_)) {
			upper = other.upper_;
			upper_closed = other.upper_closed_;
		}
	}
	return interval(lower, lower_closed, upper, upper_closed);
}

std::int64_t Guard::max_constant() const noexcept {
	if (empty_)
		return 0;
	return upper_ ? std::max(lower_, *upper_) : lower_;
}

std::string Guard::to_string() const {
	if (empty_)
		return "empty";
	std::string s = lower_closed_ ? "[" : "(";
	s += std::to_string(lower_) + ",";
	s += upper_ ? std::to_string(*upper_) : "inf";
	s += upper_closed_ ? "]" : ")";
	return s;
}

Guard normalize_guard(std::span<const GuardAtom> atoms) {
	Guard g = Guard::always();
	for (const auto &atom : atoms) {
		if (atom.constant < 0)
			throw Error(ErrorCode::NegativeValue,
			            "negative guard constant " + std::to_string(atom.constant));
		Guard a;
		switch (atom.op) {
		case CompareOp::Eq: a = Guard::point(atom.constant); break;
		case CompareOp::Lt: a = Guard::interval(0, true, atom.constant, false); break;
		case CompareOp::Le: a = Guard::interval(0, true, atom.constant, true); break;
		case CompareOp::Gt: a = Guard::greater_than(atom.constant); break;
		case CompareOp::Ge: a = Guard::at_least(atom.constant); break;
		}
		g = g.intersect(a);
	}
	return g;
}

bool eval_guard(const Guard &g, const Rational &v) { return g.contains(v); }

} // namespace irta
