#include "qseries.hpp"

#include <sstream>

namespace lgcy {

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << num(q);
    if (den(q) != 1) os << "/" << den(q);
    return os.str();
}

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::string body = s;
    bool neg = false;
    size_t i = 0;
    if (body[i] == '+' || body[i] == '-') {
        neg = body[i] == '-';
        ++i;
    }
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string rest = body.substr(i);
    Rational value;
    if (auto slash = rest.find('/'); slash != std::string::npos) {
        std::string a = rest.substr(0, slash), b = rest.substr(slash + 1);
        if (!digits(a) || !digits(b) || Integer(b) == 0) return std::nullopt;
        value = Rational(Integer(a), Integer(b));
    } else if (auto dot = rest.find('.'); dot != std::string::npos) {
        std::string a = rest.substr(0, dot), b = rest.substr(dot + 1);
        if (a.empty()) a = "0";
        if (!digits(a) || !digits(b)) return std::nullopt;
        Integer scale = 1;
        for (size_t k = 0; k < b.size(); ++k) scale *= 10;
        value = Rational(Integer(a) * scale + Integer(b.empty() ? "0" : b), scale);
    } else {
        if (!digits(rest)) return std::nullopt;
        value = Rational(Integer(rest));
    }
    if (neg) value = -value;
    return value;
}

NovikovSeries NovikovSeries::one(QExp cutoff) {
    NovikovSeries s(std::move(cutoff));
    s.add_term(0, 1);
    return s;
}

NovikovSeries NovikovSeries::monomial(const QExp& exponent, const Rational& coeff, QExp cutoff) {
    NovikovSeries s(std::move(cutoff));
    s.add_term(exponent, coeff);
    return s;
}

bool NovikovSeries::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rational NovikovSeries::coeff(const QExp& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

QExp NovikovSeries::valuation() const {
    if (terms_.empty()) throw std::domain_error("valuation of the zero series");
    return terms_.begin()->first;
}

void NovikovSeries::add_term(const QExp& exponent, const Rational& coeff) {
    if (coeff == 0 || exponent >= cutoff_) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

NovikovSeries NovikovSeries::truncated(const QExp& new_cutoff) const {
    NovikovSeries out(new_cutoff < cutoff_ ? new_cutoff : cutoff_);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
}

NovikovSeries NovikovSeries::operator-() const {
    NovikovSeries out(cutoff_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

NovikovSeries NovikovSeries::operator+(const NovikovSeries& other) const {
    NovikovSeries out(cutoff_ < other.cutoff_ ? cutoff_ : other.cutoff_);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

NovikovSeries NovikovSeries::operator-(const NovikovSeries& other) const { return *this + (-other); }

NovikovSeries NovikovSeries::operator*(const NovikovSeries& other) const {
    // Sound ceiling for a Cauchy product of truncated series: a term of the
    // product below min(cutoff_a + val_b, cutoff_b + val_a) cannot receive
    // contributions from dropped terms of either factor. A zero factor is
    // fully known below its own cutoff, which acts like val = cutoff there.
    QExp va = terms_.empty() ? cutoff_ : valuation();
    QExp vb = other.terms_.empty() ? other.cutoff_ : other.valuation();
    QExp ca = cutoff_ + vb;
    QExp cb = other.cutoff_ + va;
    NovikovSeries out(ca < cb ? ca : cb);
    for (const auto& [ea, caf] : terms_)
        for (const auto& [eb, cbf] : other.terms_) out.add_term(ea + eb, caf * cbf);
    return out;
}

NovikovSeries NovikovSeries::scaled(const Rational& c) const {
    NovikovSeries out(cutoff_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

NovikovSeries NovikovSeries::shifted(const QExp& e) const {
    NovikovSeries out(cutoff_ + e);
    for (const auto& [x, c] : terms_) out.terms_.emplace(x + e, c);
    return out;
}

NovikovSeries NovikovSeries::inverse() const {
    if (terms_.empty()) throw std::domain_error("inversion of the zero series");
    const QExp v = valuation();
    const Rational lead = terms_.begin()->second;
    // a = lead*T^v * (1 + n) with val(n) > 0; 1/a = lead^{-1} T^{-v} sum (-n)^k.
    QExp tail_cut = cutoff_ - v; // relative precision of (1 + n)
    NovikovSeries n(tail_cut);
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        n.add_term(it->first - v, it->second / lead);
    NovikovSeries acc = NovikovSeries::one(tail_cut);
    NovikovSeries pw = NovikovSeries::one(tail_cut);
    if (!n.is_zero()) {
        const QExp step = n.valuation();
        for (QExp reached = 0; reached < tail_cut; reached += step) {
            pw = (pw * (-n)).truncated(tail_cut);
            if (pw.is_zero()) break;
            acc = acc + pw;
        }
    }
    NovikovSeries out(cutoff_ - 2 * v);
    for (const auto& [e, c] : acc.terms_) out.add_term(e - v, c / lead);
    return out;
}

bool series_agree_below(const NovikovSeries& a, const NovikovSeries& b, const QExp& bound) {
    QExp limit = std::min({a.cutoff(), b.cutoff(), bound});
    for (const auto& [e, c] : a.terms())
        if (e < limit && b.coeff(e) != c) return false;
    for (const auto& [e, c] : b.terms())
        if (e < limit && a.coeff(e) != c) return false;
    return true;
}

std::string NovikovSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (e == 0) {
            os << rational_to_string(ac);
        } else {
            if (ac != 1) os << rational_to_string(ac) << "*";
            os << "T^" << rational_to_string(e);
        }
    }
    return os.str();
}

std::string series_to_json(const NovikovSeries& s) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [e, c] : s.terms()) {
        if (!first) os << ",";
        first = false;
        os << "[" << num(e) << "," << den(e) << "," << num(c) << "," << den(c) << "]";
    }
    os << "]";
    return os.str();
}

} // namespace lgcy
