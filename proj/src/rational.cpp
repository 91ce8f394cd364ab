#include "horo/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace horo {

namespace {

using bigint = boost::multiprecision::mpz_int;

bigint pow10(size_t n) {
    bigint r = 1;
    for (size_t i = 0; i < n; ++i) r *= 10;
    return r;
}

}  // namespace

rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty scalar string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        bigint num(text.substr(0, slash));
        bigint den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return rational(bigint(text), 1);
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad decimal '" + text + "'");
    const bool negative = !head.empty() && head[0] == '-';
    if (head == "-" || head.empty()) head = "0";
    bigint whole(head);
    bigint frac = tail.empty() ? bigint(0) : bigint(tail);
    bigint den = pow10(tail.size());
    bigint num = boost::multiprecision::abs(whole) * den + frac;
    if (negative || whole < 0) num = -num;
    return rational(num, den);
}

std::string format_rational(const rational& q) {
    const bigint num = boost::multiprecision::numerator(q);
    const bigint den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace horo
