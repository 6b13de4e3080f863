#pragma once

#include "rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace lgcy {

// Exponent of the formal variable T. Always an exact rational; the unit is
// a symplectic area in whichever normalization the caller fixed.
using QExp = Rational;

// Truncated sparse series sum_i c_i T^{e_i} with rational exponents and
// rational coefficients. `cutoff` is a hard exponent ceiling: terms with
// exponent >= cutoff are unknown and silently dropped on construction, so a
// series only ever asserts coefficients strictly below its cutoff. Binary
// operations propagate the tightest ceiling that is still sound.
class NovikovSeries {
  public:
    NovikovSeries() : cutoff_(0) {}
    explicit NovikovSeries(QExp cutoff) : cutoff_(std::move(cutoff)) {}

    static NovikovSeries zero(QExp cutoff) { return NovikovSeries(std::move(cutoff)); }
    static NovikovSeries one(QExp cutoff);
    static NovikovSeries monomial(const QExp& exponent, const Rational& coeff, QExp cutoff);

    const QExp& cutoff() const { return cutoff_; }
    const std::map<QExp, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // Coefficient at an exact exponent (0 if absent; exponent must be < cutoff).
    Rational coeff(const QExp& exponent) const;

    // Smallest stored exponent. Throws on the zero series.
    QExp valuation() const;

    // Adds c*T^e in place, pruning per the cutoff and zero-coefficient rules.
    void add_term(const QExp& exponent, const Rational& coeff);

    // Re-truncates to a (smaller or equal) ceiling.
    NovikovSeries truncated(const QExp& new_cutoff) const;

    NovikovSeries operator-() const;
    NovikovSeries operator+(const NovikovSeries& other) const;
    NovikovSeries operator-(const NovikovSeries& other) const;
    NovikovSeries operator*(const NovikovSeries& other) const;
    NovikovSeries scaled(const Rational& c) const;
    NovikovSeries shifted(const QExp& e) const; // multiply by T^e

    // Multiplicative inverse, computed by factoring out the leading term and
    // expanding the geometric series. Result cutoff is cutoff - 2*valuation.
    // Throws on the zero series.
    NovikovSeries inverse() const;

    bool operator==(const NovikovSeries& other) const {
        return cutoff_ == other.cutoff_ && terms_ == other.terms_;
    }

    std::string to_string() const;

  private:
    std::map<QExp, Rational> terms_;
    QExp cutoff_;
};

// Term-by-term equality below min(a.cutoff, b.cutoff, bound).
bool series_agree_below(const NovikovSeries& a, const NovikovSeries& b, const QExp& bound);

// Serialization used by the CLI report format: a JSON array of
// [exp_num, exp_den, coeff_num, coeff_den] quadruples sorted by exponent.
std::string series_to_json(const NovikovSeries& s);

} // namespace lgcy
