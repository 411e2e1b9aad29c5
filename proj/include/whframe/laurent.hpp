#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace whframe {

using Complex = std::complex<double>;

/// Location and value of the extrema of |p(e^{i theta})|^2 on the circle.
struct CircleExtrema {
    double min_sq = 0.0;
    double argmin_theta = 0.0;
    double max_sq = 0.0;
    double argmax_theta = 0.0;
};

/// Same extrema computed twice: from critical points (authoritative) and
/// from a dense angle grid with local refinement (cross-check).
struct CircleExtremaDetail {
    CircleExtrema critical;
    CircleExtrema grid;
};

struct UnitRootVerdict {
    enum class Kind { has_unit_root, no_unit_root, marginal };
    Kind kind = Kind::no_unit_root;
    double theta = 0.0;        // witness angle when kind == has_unit_root
    double margin = 0.0;       // min|p| / sum|a_j| when kind == no_unit_root
    double min_modulus = 0.0;  // raw min|p| on the circle

    bool has_unit_root() const { return kind == Kind::has_unit_root; }
};

/// A Laurent polynomial sum a_j z^{n_j} with complex coefficients and
/// (possibly negative) integer exponents. Zero coefficients are never
/// stored; the zero polynomial has no terms.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::map<std::int64_t, Complex> terms);

    /// Builds from parallel (exponent, coefficient) lists, dropping zeros.
    static LaurentPolynomial from_pairs(const std::vector<std::int64_t>& exponents,
                                        const std::vector<Complex>& coefficients);

    const std::map<std::int64_t, Complex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::int64_t min_exponent() const;
    std::int64_t max_exponent() const;
    /// Degree spread n_max - n_min (0 for constants and the zero polynomial).
    std::int64_t spread() const;

    double coeff_abs_sum() const;
    bool has_integer_coefficients() const;

    /// p evaluated at z = e^{i theta} by direct summation.
    Complex eval_circle(double theta) const;

    /// Coefficient-reversed polynomial sum conj(a_j) z^{n_max + n_min - n_j};
    /// shares |p| with the original on the unit circle.
    LaurentPolynomial reverse() const;

    LaurentPolynomial scaled(Complex factor) const;

    std::string str() const;

  private:
    std::map<std::int64_t, Complex> terms_;
};

/// All roots of the ordinary polynomial p(z) / z^{n_min}, by simultaneous
/// (Weierstrass) iteration polished with Newton steps. Residuals are
/// checked against 1e-9 * sum|a_j| * max(1,|r|)^deg. Throws InputError for
/// constant or zero polynomials ("no roots defined").
std::vector<Complex> roots(const LaurentPolynomial& p);

/// Extrema of |p(e^{i theta})|^2 via critical points, cross-checked against
/// a dense grid of 4096*max(1,D) angles with ternary refinement; throws
/// InternalError if the two methods disagree beyond 1e-8 relative.
CircleExtrema circle_extrema(const LaurentPolynomial& p);
CircleExtremaDetail circle_extrema_detail(const LaurentPolynomial& p);

/// Decides whether p has a root on the unit circle, with a marginal band
/// [tol, 10 tol) relative to sum|a_j| instead of a hard boolean. Integer
/// coefficients get an exact test at z = +-1 first. The verdict is
/// cross-checked against roots(); a clear conflict throws InternalError.
UnitRootVerdict unit_root_test(const LaurentPolynomial& p, double tol = 1e-9);

/// Parses the CLI polynomial literal: comma list of coeff:exponent pairs,
/// e.g. "4:0,3:1,2:3"; coefficients accept "re" or "re+imi" forms.
LaurentPolynomial parse_poly_literal(const std::string& text);

}  // namespace whframe
