#pragma once

#include <map>
#include <vector>

#include "overdet/numeric.hpp"

namespace overdet {

// Laurent polynomial with exact rational coefficients; zero coefficients are
// never stored. Exponents may be negative.
struct LaurentPoly {
    std::size_t dim = 0;
    std::map<IntVec, Rat> terms;

    bool is_zero() const { return terms.empty(); }
};

LaurentPoly make_laurent(std::size_t dim, std::map<IntVec, Rat> terms);

// Exact evaluation at a point with nonzero rational coordinates.
Rat evaluate(const LaurentPoly& f, const std::vector<Rat>& point);

// Dense univariate polynomial over Q, coefficients by ascending degree.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    static QPoly constant(const Rat& c);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& leading() const { return coeffs_.back(); }
    Rat at(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly monic() const;
    QPoly derivative() const;
    Rat evaluate(const Rat& x) const;

    // Euclidean remainder; divisor must be nonzero.
    QPoly mod(const QPoly& divisor) const;
    // Exact quotient; remainder must vanish.
    QPoly divide_exact(const QPoly& divisor) const;

  private:
    std::vector<Rat> coeffs_;
    void trim();
};

QPoly poly_gcd(const QPoly& a, const QPoly& b);  // monic, or zero if both zero
QPoly squarefree_part(const QPoly& p);           // monic radical

// Strips the x^v factor (v = valuation); zero polynomial is unchanged.
QPoly strip_zero_roots(const QPoly& p);

// Number of distinct roots in C^* : degree of the squarefree part after
// stripping the powers of x.
std::size_t distinct_nonzero_roots(const QPoly& p);

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace overdet
