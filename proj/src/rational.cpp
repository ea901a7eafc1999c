#include "irta/rational.h"

#include "irta/errors.h"

#include <numeric>
#include <ostream>

namespace irta {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
	std::int64_t r;
	if (__builtin_mul_overflow(a, b, &r))
		throw Error(ErrorCode::Overflow, "rational arithmetic overflow");
	return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
	std::int64_t r;
	if (__builtin_add_overflow(a, b, &r))
		throw Error(ErrorCode::Overflow, "rational arithmetic overflow");
	return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
	std::int64_t r;
	if (__builtin_sub_overflow(a, b, &r))
		throw Error(ErrorCode::Overflow, "rational arithmetic overflow");
	return r;
}

} // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {
	if (value < 0)
		throw Error(ErrorCode::NegativeValue, "negative rational " + std::to_string(value));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
	if (den == 0)
		throw Error(ErrorCode::ZeroDenominator, "zero denominator");
	if ((num < 0) != (den < 0) && num != 0)
		throw Error(ErrorCode::NegativeValue,
		            "negative rational " + std::to_string(num) + "/" + std::to_string(den));
	if (num == 0) {
		num_ = 0;
		den_ = 1;
		return;
	}
	if (num < 0) {
		// INT64_MIN cannot be negated
		num = checked_sub(0, num);
		den = checked_sub(0, den);
	}
	std::int64_t g = std::gcd(num, den);
	num_ = num / g;
	den_ = den / g;
}

Rational normalize_rational(std::int64_t num, std::int64_t den) { return Rational(num, den); }

Rational Rational::frac() const { return Rational(num_ % den_, den_); }

std::string Rational::to_string() const {
	if (den_ == 1)
		return std::to_string(num_);
	return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational &a, const Rational &b) {
	std::int64_t g = std::gcd(a.den_, b.den_);
	std::int64_t num = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
	std::int64_t den = checked_mul(a.den_, b.den_ / g);
	return Rational(num, den);
}

Rational operator-(const Rational &a, const Rational &b) {
	std::int64_t g = std::gcd(a.den_, b.den_);
	std::int64_t num = checked_sub(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
	std::int64_t den = checked_mul(a.den_, b.den_ / g);
	if (num < 0)
		throw Error(ErrorCode::NegativeValue,
		            "negative difference " + a.to_string() + " - " + b.to_string());
	return Rational(num, den);
}

__extension__ typedef __int128 wide_int;

std::strong_ordering operator<=>(const Rational &a, const Rational &b) noexcept {
	wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
	wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
	return lhs <=> rhs;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

} // namespace irta
