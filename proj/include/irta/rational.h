#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace irta {

/// Exact nonnegative rational number backed by checked 64-bit integers.
///
/// Values are always kept reduced with a positive denominator. Arithmetic
/// that would overflow throws Error(Overflow); a result below zero throws
/// Error(NegativeValue). There is no rounding anywhere.
class Rational {
public:
	constexpr Rational() = default;
	Rational(std::int64_t value); // NOLINT: integers convert implicitly
	Rational(std::int64_t num, std::int64_t den);

	std::int64_t num() const noexcept { return num_; }
	std::int64_t den() const noexcept { return den_; }

	bool is_integer() const noexcept { return den_ == 1; }
	std::int64_t floor() const noexcept { return num_ / den_; }
	Rational frac() const;

	std::string to_string() const;

	friend Rational operator+(const Rational &a, const Rational &b);
	friend Rational operator-(const Rational &a, const Rational &b);
	Rational &operator+=(const Rational &other) { return *this = *this + other; }

	friend bool operator==(const Rational &a, const Rational &b) noexcept {
		return a.num_ == b.num_ && a.den_ == b.den_;
	}
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) noexcept;

private:
	std::int64_t num_ = 0;
	std::int64_t den_ = 1;
};

/// Reduces num/den. Throws ZeroDenominator when den == 0 and NegativeValue
/// when the fraction is negative.
Rational normalize_rational(std::int64_t num, std::int64_t den);

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace irta
