#pragma once

#include "qseries.hpp"

#include <map>
#include <optional>
#include <string>

namespace lgcy {

// x^a y^b z^c. Ordered so that map iteration matches the canonical rendering
// order (lexicographic with x > y > z, highest power first).
struct Monomial {
    int a = 0, b = 0, c = 0;

    int degree() const { return a + b + c; }
    bool operator==(const Monomial& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const Monomial& o) const {
        if (a != o.a) return a > o.a;
        if (b != o.b) return b > o.b;
        return c > o.c;
    }
};

Monomial operator*(const Monomial& m, const Monomial& n);

// Element of Lambda[x,y,z] with NovikovSeries coefficients, deg x=y=z=1.
class GradedPolynomial {
  public:
    GradedPolynomial() = default;

    static GradedPolynomial zero() { return GradedPolynomial(); }
    static GradedPolynomial term(const Monomial& m, const NovikovSeries& s);
    static GradedPolynomial constant(const NovikovSeries& s) { return term({}, s); }
    static GradedPolynomial variable(int which, const QExp& cutoff); // 0:x 1:y 2:z

    const std::map<Monomial, NovikovSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    NovikovSeries coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const NovikovSeries& s);

    bool is_homogeneous() const; // the zero polynomial counts as homogeneous
    std::optional<int> homogeneous_degree() const; // nullopt: inhomogeneous or zero

    // Smallest T-exponent over all coefficient series; nullopt for zero.
    std::optional<QExp> valuation() const;

    GradedPolynomial operator-() const;
    GradedPolynomial operator+(const GradedPolynomial& o) const;
    GradedPolynomial operator-(const GradedPolynomial& o) const;
    GradedPolynomial operator*(const GradedPolynomial& o) const;
    GradedPolynomial scaled(const NovikovSeries& s) const;
    GradedPolynomial scaled(const Rational& c) const;
    GradedPolynomial truncated(const QExp& cutoff) const;

    bool operator==(const GradedPolynomial& o) const { return terms_ == o.terms_; }

    // Canonical text: monomials in x>y>z order, series terms by ascending exponent.
    std::string to_string() const;

  private:
    std::map<Monomial, NovikovSeries> terms_;
};

bool poly_agree_below(const GradedPolynomial& p, const GradedPolynomial& q, const QExp& bound);

// The closed-form series of the potential. All exponents in q_alpha units
// (area of the minimal triangle = 1).
NovikovSeries series_phi(const QExp& cutoff);   // sum (-1)^{k+1}(2k+1) T^{(6k+3)^2}
NovikovSeries series_psi(const QExp& cutoff);   // -T + sum (-1)^{k+1}[(6k+1)T^{(6k+1)^2}-(6k-1)T^{(6k-1)^2}]
NovikovSeries series_alpha(const QExp& cutoff); // sum (-1)^k T^{(6k+1)^2} + (-1)^{k+1} T^{(6k+5)^2}

// Off-diagonal coefficient series of the quadratics below.
NovikovSeries series_w_offdiag(const QExp& cutoff);    // sum (-1)^{k+1} 2k [T^{(6k+1)^2} - T^{(6k-1)^2}]
NovikovSeries series_wz_offdiag(const QExp& cutoff);   // -T + sum (-1)^{k+1}[(2k+1)T^{(6k+1)^2}-(2k-1)T^{(6k-1)^2}]

GradedPolynomial series_wx(const QExp& cutoff); // x^2 phi + yz * w_offdiag
GradedPolynomial series_wy(const QExp& cutoff); // -y^2 phi + zx * w_offdiag
GradedPolynomial series_wz(const QExp& cutoff); // z^2 phi + xy * wz_offdiag

struct NamedSeriesBundle {
    NovikovSeries phi, psi, alpha;
    GradedPolynomial wx, wy, wz, W;
    int sign_s1 = 0; // W = phi(x^3 + s1 y^3 + z^3) + s2 psi xyz
    int sign_s2 = 0;
};

// Computes W = x wx + y wy + z wz and determines the unique sign pattern
// (s1, s2) matching it against phi and psi. Throws if no pattern matches.
NamedSeriesBundle build_potential(const QExp& cutoff);

// Exact division c = P / W over the truncated ring, solving order by order in
// T against W's lowest-order part (a single monomial). Nullopt if not divisible.
std::optional<GradedPolynomial> divide_exact(const GradedPolynomial& P, const GradedPolynomial& W,
                                             const QExp& cutoff);

std::string polynomial_to_json(const GradedPolynomial& p);

} // namespace lgcy
