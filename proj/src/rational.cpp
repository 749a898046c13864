#include "lypbw/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lypbw {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
    const size_t slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    size_t start = 0;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) start = 1;
    if (!all_digits(num, start, num.size()))
        throw std::invalid_argument("bad rational '" + s + "'");
    if (slash != std::string::npos) {
        if (!all_digits(s, slash + 1, s.size()))
            throw std::invalid_argument("bad rational '" + s + "'");
        bool all_zero = true;
        for (size_t i = slash + 1; i < s.size(); ++i)
            if (s[i] != '0') all_zero = false;
        if (all_zero) throw std::invalid_argument("bad rational '" + s + "': zero denominator");
    }
    Rational q(s);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace lypbw
