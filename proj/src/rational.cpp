#include "superschur/rational.hpp"

#include <cctype>

namespace superschur {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("rational division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat Rat::parse(std::string_view s) {
    std::string_view rest = s;
    bool neg = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        neg = rest.front() == '-';
        rest.remove_prefix(1);
    }
    std::string_view num = rest, den = "1";
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = rest.substr(0, slash);
        den = rest.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    if (neg) n = -n;
    return Rat(n, d);
}

std::string Rat::str() const {
    std::string out = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        out += '/';
        out += v_.get_den().get_str();
    }
    return out;
}

}  // namespace superschur
