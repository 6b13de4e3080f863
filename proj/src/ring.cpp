#include "ring.hpp"

#include <sstream>

namespace lgcy {

Monomial operator*(const Monomial& m, const Monomial& n) {
    return Monomial{m.a + n.a, m.b + n.b, m.c + n.c};
}

GradedPolynomial GradedPolynomial::term(const Monomial& m, const NovikovSeries& s) {
    GradedPolynomial p;
    p.add_term(m, s);
    return p;
}

GradedPolynomial GradedPolynomial::variable(int which, const QExp& cutoff) {
    Monomial m;
    if (which == 0) m.a = 1;
    else if (which == 1) m.b = 1;
    else m.c = 1;
    return term(m, NovikovSeries::one(cutoff));
}

NovikovSeries GradedPolynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it != terms_.end()) return it->second;
    return NovikovSeries::zero(0);
}

void GradedPolynomial::add_term(const Monomial& m, const NovikovSeries& s) {
    if (s.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, s);
    if (!inserted) {
        it->second = it->second + s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool GradedPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, s] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::optional<int> GradedPolynomial::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.degree();
}

std::optional<QExp> GradedPolynomial::valuation() const {
    std::optional<QExp> v;
    for (const auto& [m, s] : terms_) {
        QExp sv = s.valuation();
        if (!v || sv < *v) v = sv;
    }
    return v;
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial p;
    for (const auto& [m, s] : terms_) p.terms_.emplace(m, -s);
    return p;
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& o) const {
    GradedPolynomial p = *this;
    for (const auto& [m, s] : o.terms_) p.add_term(m, s);
    return p;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& o) const { return *this + (-o); }

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& o) const {
    GradedPolynomial p;
    for (const auto& [m, s] : terms_)
        for (const auto& [n, t] : o.terms_) p.add_term(m * n, s * t);
    return p;
}

GradedPolynomial GradedPolynomial::scaled(const NovikovSeries& s) const {
    GradedPolynomial p;
    for (const auto& [m, t] : terms_) p.add_term(m, t * s);
    return p;
}

GradedPolynomial GradedPolynomial::scaled(const Rational& c) const {
    GradedPolynomial p;
    if (c == 0) return p;
    for (const auto& [m, t] : terms_) p.terms_.emplace(m, t.scaled(c));
    return p;
}

GradedPolynomial GradedPolynomial::truncated(const QExp& cutoff) const {
    GradedPolynomial p;
    for (const auto& [m, t] : terms_) p.add_term(m, t.truncated(cutoff));
    return p;
}

std::string GradedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, s] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream mono;
        if (m.a > 0) mono << "x" << (m.a > 1 ? "^" + std::to_string(m.a) : "");
        if (m.b > 0) mono << (mono.str().empty() ? "" : "*") << "y" << (m.b > 1 ? "^" + std::to_string(m.b) : "");
        if (m.c > 0) mono << (mono.str().empty() ? "" : "*") << "z" << (m.c > 1 ? "^" + std::to_string(m.c) : "");
        if (mono.str().empty()) os << "(" << s.to_string() << ")";
        else os << mono.str() << "*(" << s.to_string() << ")";
    }
    return os.str();
}

bool poly_agree_below(const GradedPolynomial& p, const GradedPolynomial& q, const QExp& bound) {
    GradedPolynomial d = p - q;
    for (const auto& [m, s] : d.terms()) {
        QExp limit = bound;
        // A discrepancy only counts where both sides are actually known.
        NovikovSeries ps = p.coeff(m), qs = q.coeff(m);
        if (!ps.is_zero() || ps.cutoff() > 0) limit = std::min(limit, ps.cutoff());
        if (!qs.is_zero() || qs.cutoff() > 0) limit = std::min(limit, qs.cutoff());
        for (const auto& [e, c] : s.terms())
            if (e < limit && c != 0) return false;
    }
    return true;
}

NovikovSeries series_phi(const QExp& cutoff) {
    NovikovSeries s(cutoff);
    for (Integer k = 0;; ++k) {
        QExp e = Rational((6 * k + 3) * (6 * k + 3));
        if (e >= cutoff) break;
        Rational c = Rational(2 * k + 1);
        if (k % 2 == 0) c = -c; // (-1)^{k+1}
        s.add_term(e, c);
    }
    return s;
}

NovikovSeries series_psi(const QExp& cutoff) {
    NovikovSeries s(cutoff);
    s.add_term(1, -1);
    for (Integer k = 1;; ++k) {
        QExp lo = Rational((6 * k - 1) * (6 * k - 1));
        if (lo >= cutoff) break;
        Rational sign = (k % 2 == 1) ? 1 : -1; // (-1)^{k+1}
        s.add_term(lo, -sign * Rational(6 * k - 1));
        s.add_term(Rational((6 * k + 1) * (6 * k + 1)), sign * Rational(6 * k + 1));
    }
    return s;
}

NovikovSeries series_alpha(const QExp& cutoff) {
    NovikovSeries s(cutoff);
    for (Integer k = 0;; ++k) {
        QExp lo = Rational((6 * k + 1) * (6 * k + 1));
        if (lo >= cutoff) break;
        Rational sign = (k % 2 == 0) ? 1 : -1; // (-1)^k
        s.add_term(lo, sign);
        s.add_term(Rational((6 * k + 5) * (6 * k + 5)), -sign);
    }
    return s;
}

NovikovSeries series_w_offdiag(const QExp& cutoff) {
    NovikovSeries s(cutoff);
    for (Integer k = 1;; ++k) {
        QExp lo = Rational((6 * k - 1) * (6 * k - 1));
        if (lo >= cutoff) break;
        Rational sign = (k % 2 == 1) ? 1 : -1; // (-1)^{k+1}
        s.add_term(lo, -sign * Rational(2 * k));
        s.add_term(Rational((6 * k + 1) * (6 * k + 1)), sign * Rational(2 * k));
    }
    return s;
}

NovikovSeries series_wz_offdiag(const QExp& cutoff) {
    NovikovSeries s(cutoff);
    s.add_term(1, -1);
    for (Integer k = 1;; ++k) {
        QExp lo = Rational((6 * k - 1) * (6 * k - 1));
        if (lo >= cutoff) break;
        Rational sign = (k % 2 == 1) ? 1 : -1; // (-1)^{k+1}
        s.add_term(lo, -sign * Rational(2 * k - 1));
        s.add_term(Rational((6 * k + 1) * (6 * k + 1)), sign * Rational(2 * k + 1));
    }
    return s;
}

GradedPolynomial series_wx(const QExp& cutoff) {
    GradedPolynomial p;
    p.add_term(Monomial{2, 0, 0}, series_phi(cutoff));
    p.add_term(Monomial{0, 1, 1}, series_w_offdiag(cutoff));
    return p;
}

GradedPolynomial series_wy(const QExp& cutoff) {
    GradedPolynomial p;
    p.add_term(Monomial{0, 2, 0}, -series_phi(cutoff));
    p.add_term(Monomial{1, 0, 1}, series_w_offdiag(cutoff));
    return p;
}

GradedPolynomial series_wz(const QExp& cutoff) {
    GradedPolynomial p;
    p.add_term(Monomial{0, 0, 2}, series_phi(cutoff));
    p.add_term(Monomial{1, 1, 0}, series_wz_offdiag(cutoff));
    return p;
}

NamedSeriesBundle build_potential(const QExp& cutoff) {
    NamedSeriesBundle b;
    b.phi = series_phi(cutoff);
    b.psi = series_psi(cutoff);
    b.alpha = series_alpha(cutoff);
    b.wx = series_wx(cutoff);
    b.wy = series_wy(cutoff);
    b.wz = series_wz(cutoff);
    GradedPolynomial x = GradedPolynomial::variable(0, cutoff);
    GradedPolynomial y = GradedPolynomial::variable(1, cutoff);
    GradedPolynomial z = GradedPolynomial::variable(2, cutoff);
    b.W = x * b.wx + y * b.wy + z * b.wz;

    NovikovSeries cx = b.W.coeff(Monomial{3, 0, 0});
    NovikovSeries cy = b.W.coeff(Monomial{0, 3, 0});
    NovikovSeries cz = b.W.coeff(Monomial{0, 0, 3});
    NovikovSeries cxyz = b.W.coeff(Monomial{1, 1, 1});
    QExp bound = cutoff;
    if (!series_agree_below(cx, b.phi, bound) || !series_agree_below(cz, b.phi, bound))
        throw std::runtime_error("potential: x^3/z^3 coefficients do not match phi");
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            if (series_agree_below(cy, b.phi.scaled(s1), bound) &&
                series_agree_below(cxyz, b.psi.scaled(s2), bound)) {
                b.sign_s1 = s1;
                b.sign_s2 = s2;
                return b;
            }
        }
    throw std::runtime_error("potential: no sign pattern matches W against (phi, psi)");
}

std::optional<GradedPolynomial> divide_exact(const GradedPolynomial& P, const GradedPolynomial& W,
                                             const QExp& cutoff) {
    if (P.is_zero()) return GradedPolynomial::zero();
    // Regroup W by T-exponent: W = sum_e T^e W_e with W_{e0} a single monomial.
    std::map<QExp, std::map<Monomial, Rational>> w_slices;
    for (const auto& [m, s] : W.terms())
        for (const auto& [e, c] : s.terms()) w_slices[e][m] = c;
    if (w_slices.empty()) return std::nullopt;
    const QExp e0 = w_slices.begin()->first;
    const auto& lead = w_slices.begin()->second;
    if (lead.size() != 1) throw std::invalid_argument("divide_exact: leading T-slice not a monomial");
    const Monomial lm = lead.begin()->first;
    const Rational lc = lead.begin()->second;

    std::map<QExp, std::map<Monomial, Rational>> p_slices;
    for (const auto& [m, s] : P.terms())
        for (const auto& [e, c] : s.terms()) p_slices[e][m] = c;

    QExp quot_cut = cutoff - e0;
    std::map<QExp, std::map<Monomial, Rational>> c_slices; // the quotient, by T-exponent

    // Collect every T-exponent at which a quotient slice could be forced.
    std::map<QExp, bool> todo;
    for (const auto& [e, _] : p_slices)
        if (e - e0 < quot_cut) todo[e - e0] = true;
    // c_f * W_{e'} feeds exponent f + e'; iterate until closure.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<QExp> fs;
        for (auto& [f, _] : todo) fs.push_back(f);
        for (const auto& f : fs)
            for (const auto& [e, _] : w_slices) {
                QExp g = f + (e - e0);
                if (g < quot_cut && !todo.count(g)) {
                    todo[g] = true;
                    grew = true;
                }
            }
    }

    for (auto& [f, _] : todo) {
        // residual at P-exponent f+e0
        std::map<Monomial, Rational> rhs;
        if (auto it = p_slices.find(f + e0); it != p_slices.end()) rhs = it->second;
        for (const auto& [e, we] : w_slices) {
            if (e == e0) continue;
            QExp fprev = f + e0 - e;
            auto cit = c_slices.find(fprev);
            if (cit == c_slices.end()) continue;
            for (const auto& [cm, cc] : cit->second)
                for (const auto& [wm, wc] : we) {
                    Monomial m = cm * wm;
                    auto [rit, ins] = rhs.emplace(m, -cc * wc);
                    if (!ins) {
                        rit->second -= cc * wc;
                        if (rit->second == 0) rhs.erase(rit);
                    }
                }
        }
        if (rhs.empty()) continue;
        std::map<Monomial, Rational> slice;
        for (const auto& [m, c] : rhs) {
            if (m.a < lm.a || m.b < lm.b || m.c < lm.c) return std::nullopt;
            slice[Monomial{m.a - lm.a, m.b - lm.b, m.c - lm.c}] = c / lc;
        }
        c_slices[f] = std::move(slice);
    }

    GradedPolynomial out;
    for (const auto& [f, slice] : c_slices)
        for (const auto& [m, c] : slice)
            out.add_term(m, NovikovSeries::monomial(f, c, quot_cut));
    // Verify the division where both sides are known.
    if (!poly_agree_below(out * W, P, cutoff)) return std::nullopt;
    return out;
}

std::string polynomial_to_json(const GradedPolynomial& p) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [m, s] : p.terms()) {
        if (!first) os << ",";
        first = false;
        os << "[[" << m.a << "," << m.b << "," << m.c << "]," << series_to_json(s) << "]";
    }
    os << "]";
    return os.str();
}

} // namespace lgcy
