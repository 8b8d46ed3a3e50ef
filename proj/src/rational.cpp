#include "gtq/rational.hpp"

#include <cctype>

#include "gtq/error.hpp"

namespace gtq {

namespace {

bool valid_rat_literal(const std::string& s) {
    std::size_t pos = 0;
    auto digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        return p > start;
    };
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    if (!digits(pos)) return false;
    if (pos == s.size()) return true;
    if (s[pos] != '/') return false;
    ++pos;
    if (pos < s.size() && s[pos] == '-') return false;  // sign lives in the numerator
    if (!digits(pos)) return false;
    return pos == s.size();
}

}  // namespace

Rat parse_rat(const std::string& s) {
    if (!valid_rat_literal(s))
        throw InputError("bad rational literal: \"" + s + "\"");
    Rat r(s);
    if (r.get_den() == 0)
        throw InputError("zero denominator in rational: \"" + s + "\"");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

bool rat_is_integer(const Rat& r) {
    return r.get_den() == 1;
}

long rat_to_long(const Rat& r) {
    if (!rat_is_integer(r) || !r.get_num().fits_slong_p())
        throw InputError("rational " + rat_str(r) + " is not a small integer");
    return r.get_num().get_si();
}

Rat rat_frac(const Rat& r) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return r - Rat(fl);
}

}  // namespace gtq
