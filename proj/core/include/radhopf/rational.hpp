#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace radhopf {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// Thrown when an input violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "num/den" or "num". Rejects a zero denominator.
Rat parse_rat(std::string_view text);

/// Renders as "num/den" with den > 0, always including the denominator.
std::string format_rat(const Rat& value);

std::vector<std::string> format_rats(const std::vector<Rat>& values);
std::vector<Rat> parse_rats(const std::vector<std::string>& texts);

/// True when value = r^k for some rational r (exact integer root extraction
/// on numerator and denominator).
bool is_perfect_power(const Rat& value, unsigned long k);

}  // namespace radhopf
