#include "overdet/numeric.hpp"

#include "overdet/errors.hpp"

namespace overdet {

std::string rat_to_string(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::runtime_error("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw ParseError("not a rational number: " + s, "");
    }
}

}  // namespace overdet
