#include "radhopf/rational.hpp"

#include <algorithm>
#include <cctype>

namespace radhopf {

namespace {

Int parse_int(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty integer in rational literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw InvalidArgument("malformed integer: " + std::string(text));
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidArgument("malformed integer: " + std::string(text));
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Int(digits, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator: " + std::string(text));
    Rat out(num, den);
    out.canonicalize();
    return out;
}

std::string format_rat(const Rat& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::vector<std::string> format_rats(const std::vector<Rat>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    std::transform(values.begin(), values.end(), std::back_inserter(out), format_rat);
    return out;
}

std::vector<Rat> parse_rats(const std::vector<std::string>& texts) {
    std::vector<Rat> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_rat(t));
    return out;
}

bool is_perfect_power(const Rat& value, unsigned long k) {
    if (k == 0) throw InvalidArgument("root index must be positive");
    const Int& num = value.get_num();
    if (num < 0 && k % 2 == 0) return false;
    Int root;
    bool num_ok = mpz_root(root.get_mpz_t(), num.get_mpz_t(), k) != 0;
    bool den_ok = mpz_root(root.get_mpz_t(), value.get_den().get_mpz_t(), k) != 0;
    return num_ok && den_ok;
}

}  // namespace radhopf
