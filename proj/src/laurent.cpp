#include "overdet/laurent.hpp"

#include <algorithm>

#include "overdet/errors.hpp"

namespace overdet {

LaurentPoly make_laurent(std::size_t dim, std::map<IntVec, Rat> terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.size() != dim)
            throw PreconditionError("laurent term exponent has wrong dimension");
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
    return LaurentPoly{dim, std::move(terms)};
}

Rat evaluate(const LaurentPoly& f, const std::vector<Rat>& point) {
    if (point.size() != f.dim) throw PreconditionError("evaluate: point has wrong dimension");
    for (const Rat& x : point) {
        if (x == 0) throw PreconditionError("evaluate: point must lie in the torus");
    }
    Rat total = 0;
    for (const auto& [exp, coeff] : f.terms) {
        Rat term = coeff;
        for (std::size_t i = 0; i < f.dim; ++i)
            term *= rat_pow(point[i], exp[i].convert_to<long>());
        total += term;
    }
    return total;
}

QPoly::QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i) + o.at(i);
    return QPoly(std::move(out));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i) - o.at(i);
    return QPoly(std::move(out));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPoly(std::move(out));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> out = coeffs_;
    const Rat lead = out.back();
    for (Rat& c : out) c /= lead;
    return QPoly(std::move(out));
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return QPoly();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(Int(i));
    return QPoly(std::move(out));
}

Rat QPoly::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

QPoly QPoly::mod(const QPoly& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rat> rem = coeffs_;
    const long dd = divisor.degree();
    while (static_cast<long>(rem.size()) - 1 >= dd) {
        Rat factor = rem.back() / divisor.leading();
        const std::size_t shift = rem.size() - 1 - static_cast<std::size_t>(dd);
        for (long i = 0; i <= dd; ++i)
            rem[shift + static_cast<std::size_t>(i)] -= factor * divisor.at(static_cast<std::size_t>(i));
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.size() <= static_cast<std::size_t>(dd)) break;
    }
    return QPoly(std::move(rem));
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
    if (is_zero()) return QPoly();
    std::vector<Rat> rem = coeffs_;
    const long dd = divisor.degree();
    if (degree() < dd) throw InternalError("divide_exact: divisor degree too large");
    std::vector<Rat> quot(static_cast<std::size_t>(degree() - dd) + 1, Rat(0));
    for (long k = degree() - dd; k >= 0; --k) {
        Rat factor = rem[static_cast<std::size_t>(k + dd)] / divisor.leading();
        quot[static_cast<std::size_t>(k)] = factor;
        for (long i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(k + i)] -= factor * divisor.at(static_cast<std::size_t>(i));
    }
    for (const Rat& c : rem) {
        if (c != 0) throw InternalError("divide_exact: division is not exact");
    }
    return QPoly(std::move(quot));
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = x.mod(y.monic());
        x = y;
        y = std::move(r);
    }
    return x.monic();
}

QPoly squarefree_part(const QPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p.monic();
    QPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return p.divide_exact(g).monic();
}

QPoly strip_zero_roots(const QPoly& p) {
    if (p.is_zero()) return p;
    std::size_t v = 0;
    while (p.at(v) == 0) ++v;
    std::vector<Rat> out(p.coeffs().begin() + static_cast<std::ptrdiff_t>(v), p.coeffs().end());
    return QPoly(std::move(out));
}

std::size_t distinct_nonzero_roots(const QPoly& p) {
    if (p.is_zero()) throw PreconditionError("distinct_nonzero_roots: zero polynomial");
    QPoly q = squarefree_part(strip_zero_roots(p));
    return static_cast<std::size_t>(q.degree());
}

QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw PreconditionError("interpolate: need equally many sample points and values");
    // Newton form, evaluated by repeated multiplication.
    const std::size_t n = xs.size();
    std::vector<Rat> divided = ys;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    }
    QPoly result = QPoly::constant(divided[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        QPoly shift(std::vector<Rat>{-xs[i], Rat(1)});
        result = result * shift + QPoly::constant(divided[i]);
    }
    return result;
}

}  // namespace overdet
