#include "momenta/rational.hpp"

#include <cctype>

namespace momenta {

Rat rat_from_string(std::string_view text) {
    if (text.empty())
        throw DomainError("empty rational literal");
    // Accept an optional leading sign, digits, optionally "/" and digits.
    std::size_t slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (slash == std::string_view::npos) {
        if (!digits_ok(text, true))
            throw DomainError("malformed rational literal: " + std::string(text));
    } else {
        if (!digits_ok(text.substr(0, slash), true) ||
            !digits_ok(text.substr(slash + 1), true))
            throw DomainError("malformed rational literal: " + std::string(text));
    }
    Rat value{std::string(text)};
    // GMP's set_str neither canonicalizes nor rejects zero denominators.
    if (mpz_sgn(mpq_denref(value.backend().data())) == 0)
        throw DomainError("zero denominator in rational literal: " +
                          std::string(text));
    mpq_canonicalize(value.backend().data());
    return value;
}

std::string rat_to_string(const Rat& value) { return value.str(); }

Rat rat_pow(const Rat& base, unsigned exp) {
    Rat result(1);
    Rat b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

Rat rat_pow2(int exp) {
    Rat two(2);
    if (exp >= 0) return rat_pow(two, static_cast<unsigned>(exp));
    return Rat(1) / rat_pow(two, static_cast<unsigned>(-exp));
}

} // namespace momenta
