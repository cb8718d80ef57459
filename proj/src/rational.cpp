#include "msgf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace msgf {

std::string to_string(const ExactScalar& q) {
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

ExactScalar parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            throw std::invalid_argument("invalid rational: '" + text + "'");
        const BigInt d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
        return ExactScalar(BigInt(num), d);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string head = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        const bool neg = !head.empty() && head[0] == '-';
        const std::string whole = (head.empty() || head == "-" || head == "+")
                                      ? std::string("0")
                                      : head;
        if (!is_integer_token(whole) || (!frac.empty() && !is_integer_token(frac)))
            throw std::invalid_argument("invalid number: '" + text + "'");
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt mantissa = BigInt(whole) * scale;
        if (!frac.empty()) {
            const BigInt f(frac);
            mantissa += (neg || whole[0] == '-') ? -f : f;
        }
        return ExactScalar(mantissa, scale);
    }
    if (!is_integer_token(text))
        throw std::invalid_argument("invalid number: '" + text + "'");
    return ExactScalar(BigInt(text));
}

ExactScalar pow_int(const ExactScalar& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("pow_int: 0 to a negative power");
        return pow_int(ExactScalar(1) / base, -exponent);
    }
    ExactScalar result(1);
    ExactScalar b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e != 0) b *= b;
    }
    return result;
}

ExactScalar pochhammer(const ExactScalar& a, unsigned n) {
    ExactScalar result(1);
    ExactScalar factor = a;
    for (unsigned i = 0; i < n; ++i) {
        result *= factor;
        factor += 1;
    }
    return result;
}

ExactScalar factorial(unsigned n) {
    ExactScalar result(1);
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

std::vector<std::vector<BigInt>> stirling_second_table(unsigned j_max) {
    std::vector<std::vector<BigInt>> s2(j_max + 1);
    for (unsigned j = 0; j <= j_max; ++j) {
        s2[j].assign(j + 1, BigInt(0));
        s2[j][0] = (j == 0) ? 1 : 0;
        for (unsigned k = 1; k <= j; ++k) {
            const BigInt same = (k <= j - 1) ? s2[j - 1][k] : BigInt(0);
            s2[j][k] = BigInt(k) * same + s2[j - 1][k - 1];
        }
    }
    return s2;
}

std::vector<ExactScalar> stirling_convert(const std::vector<ExactScalar>& falling_moments) {
    if (falling_moments.empty()) return {};
    const unsigned j_max = static_cast<unsigned>(falling_moments.size()) - 1;
    const auto s2 = stirling_second_table(j_max);
    std::vector<ExactScalar> power(j_max + 1, ExactScalar(0));
    for (unsigned j = 0; j <= j_max; ++j)
        for (unsigned k = 0; k <= j; ++k)
            power[j] += ExactScalar(s2[j][k]) * falling_moments[k];
    return power;
}

}  // namespace msgf
