#include "mfcat.hpp"

#include "linsolve.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace lgcy {

TwistList TwistList::twisted(int n) const {
    TwistList out = *this;
    for (int& x : out.t) x += n;
    return out;
}

GradedMatrix GradedMatrix::zero(TwistList src, TwistList tgt) {
    GradedMatrix m;
    m.source = std::move(src);
    m.target = std::move(tgt);
    m.e.assign(m.target.size(), std::vector<GradedPolynomial>(m.source.size()));
    return m;
}

GradedMatrix GradedMatrix::identity(const TwistList& tl) {
    GradedMatrix m = zero(tl, tl);
    // The constant 1 is exact; a far ceiling keeps identity maps from
    // tightening product cutoffs in practice.
    static const QExp far_ceiling = Rational(Integer(1) << 24);
    for (size_t i = 0; i < tl.size(); ++i)
        m.e[i][i] = GradedPolynomial::constant(NovikovSeries::one(far_ceiling));
    return m;
}

GradedMatrix GradedMatrix::diagonal(const GradedPolynomial& p, const TwistList& src, int degree_shift) {
    GradedMatrix m = zero(src, src.twisted(degree_shift));
    for (size_t i = 0; i < src.size(); ++i) m.e[i][i] = p;
    return m;
}

bool GradedMatrix::is_zero() const {
    for (const auto& row : e)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

bool GradedMatrix::grading_ok() const {
    for (size_t i = 0; i < rows(); ++i)
        for (size_t j = 0; j < cols(); ++j) {
            const GradedPolynomial& p = e[i][j];
            if (p.is_zero()) continue;
            auto deg = p.homogeneous_degree();
            if (!deg || *deg != target.t[i] - source.t[j]) return false;
        }
    return true;
}

std::optional<QExp> GradedMatrix::min_valuation() const {
    std::optional<QExp> v;
    for (const auto& row : e)
        for (const auto& p : row) {
            auto pv = p.valuation();
            if (pv && (!v || *pv < *v)) v = pv;
        }
    return v;
}

GradedMatrix GradedMatrix::twisted(int n) const {
    GradedMatrix m = *this;
    m.source = m.source.twisted(n);
    m.target = m.target.twisted(n);
    return m;
}

GradedMatrix GradedMatrix::operator-() const {
    GradedMatrix m = *this;
    for (auto& row : m.e)
        for (auto& p : row) p = -p;
    return m;
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
    if (!(source == o.source) || !(target == o.target))
        throw std::invalid_argument("GradedMatrix::+ twist mismatch");
    GradedMatrix m = *this;
    for (size_t i = 0; i < rows(); ++i)
        for (size_t j = 0; j < cols(); ++j) m.e[i][j] = m.e[i][j] + o.e[i][j];
    return m;
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& o) const { return *this + (-o); }

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
    if (!(o.target == source)) throw std::invalid_argument("GradedMatrix::* twist mismatch");
    GradedMatrix m = zero(o.source, target);
    for (size_t i = 0; i < rows(); ++i)
        for (size_t k = 0; k < o.cols(); ++k) {
            GradedPolynomial acc;
            for (size_t j = 0; j < cols(); ++j) {
                if (e[i][j].is_zero() || o.e[j][k].is_zero()) continue;
                acc = acc + e[i][j] * o.e[j][k];
            }
            m.e[i][k] = acc;
        }
    return m;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
    return source == o.source && target == o.target && e == o.e;
}

GradedMatrix GradedMatrix::constant_part() const {
    GradedMatrix m = zero(source, target);
    for (size_t i = 0; i < rows(); ++i)
        for (size_t j = 0; j < cols(); ++j) {
            if (target.t[i] - source.t[j] != 0) continue;
            NovikovSeries c = e[i][j].coeff(Monomial{});
            if (!c.is_zero()) m.e[i][j] = GradedPolynomial::constant(c);
        }
    return m;
}

std::string GradedMatrix::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows(); ++i) {
        os << "[ ";
        for (size_t j = 0; j < cols(); ++j) os << e[i][j].to_string() << (j + 1 < cols() ? " | " : "");
        os << " ]\n";
    }
    return os.str();
}

bool matrices_agree_below(const GradedMatrix& a, const GradedMatrix& b, const QExp& bound) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            GradedPolynomial d = a.e[i][j] - b.e[i][j];
            for (const auto& [m, s] : d.terms())
                for (const auto& [ex, c] : s.terms())
                    if (ex < bound && c != 0) return false;
        }
    return true;
}

namespace {

QExp min_entry_cutoff(const GradedMatrix& m) {
    std::optional<QExp> cut;
    for (const auto& row : m.e)
        for (const auto& p : row)
            for (const auto& [mono, s] : p.terms())
                if (!cut || s.cutoff() < *cut) cut = s.cutoff();
    return cut.value_or(Rational(Integer(1) << 24));
}

QExp working_cutoff(const MatrixFactorization& M) {
    return std::min(min_entry_cutoff(M.p0), min_entry_cutoff(M.p1));
}

QExp poly_cutoff(const GradedPolynomial& p) {
    std::optional<QExp> cut;
    for (const auto& [mono, s] : p.terms())
        if (!cut || s.cutoff() < *cut) cut = s.cutoff();
    return cut.value_or(Rational(Integer(1) << 24));
}

} // namespace

bool mf_validate(const MatrixFactorization& M, const GradedPolynomial& W, const QExp& bound) {
    if (M.p0.source.t != M.P0.t || M.p0.target.t != M.P1.t) return false;
    if (M.p1.source.t != M.P1.t || M.p1.target.t != M.P0.twisted(M.d).t) return false;
    if (std::min(working_cutoff(M), poly_cutoff(W)) < bound)
        throw std::invalid_argument("mf_validate: entries or W not known up to the requested bound");
    if (!M.p0.grading_ok() || !M.p1.grading_ok()) return false;
    auto v0 = M.p0.min_valuation(), v1 = M.p1.min_valuation();
    if ((v0 && *v0 < 0) || (v1 && *v1 < 0)) return false;
    GradedMatrix c0 = M.p1 * M.p0;              // P0 -> P0(d)
    GradedMatrix c1 = M.p0.twisted(M.d) * M.p1; // P1 -> P1(d)
    GradedMatrix w0 = GradedMatrix::diagonal(W, M.P0, M.d);
    GradedMatrix w1 = GradedMatrix::diagonal(W, M.P1, M.d);
    return matrices_agree_below(c0, w0, bound) && matrices_agree_below(c1, w1, bound);
}

MatrixFactorization mf_shift(const MatrixFactorization& M) {
    MatrixFactorization S;
    S.d = M.d;
    S.P0 = M.P1;
    S.P1 = M.P0.twisted(M.d);
    S.p0 = -M.p1;
    S.p1 = -M.p0.twisted(M.d);
    return S;
}

MatrixFactorization mf_twist(const MatrixFactorization& M, int n) {
    MatrixFactorization T = M;
    T.P0 = M.P0.twisted(n);
    T.P1 = M.P1.twisted(n);
    T.p0 = M.p0.twisted(n);
    T.p1 = M.p1.twisted(n);
    return T;
}

MFMorphism MFMorphism::operator+(const MFMorphism& o) const {
    if (parity != o.parity || twist != o.twist) throw std::invalid_argument("morphism + mismatch");
    return MFMorphism{parity, twist, f0 + o.f0, f1 + o.f1};
}

MFMorphism MFMorphism::operator-(const MFMorphism& o) const { return *this + (-o); }

MFMorphism MFMorphism::operator-() const { return MFMorphism{parity, twist, -f0, -f1}; }

bool MFMorphism::operator==(const MFMorphism& o) const {
    return parity == o.parity && twist == o.twist && f0 == o.f0 && f1 == o.f1;
}

MFMorphism identity_morphism(const MatrixFactorization& M) {
    return MFMorphism{0, 0, GradedMatrix::identity(M.P0), GradedMatrix::identity(M.P1)};
}

MFMorphism zero_morphism(const MatrixFactorization& K, const MatrixFactorization& L, int parity,
                         int twist) {
    MFMorphism f;
    f.parity = parity;
    f.twist = twist;
    if (parity == 0) {
        f.f0 = GradedMatrix::zero(K.P0, L.P0.twisted(twist));
        f.f1 = GradedMatrix::zero(K.P1, L.P1.twisted(twist));
    } else {
        f.f0 = GradedMatrix::zero(K.P0, L.P1.twisted(twist));
        f.f1 = GradedMatrix::zero(K.P1, L.P0.twisted(L.d + twist));
    }
    return f;
}

MFMorphism hom_diff(const MFMorphism& f, const MatrixFactorization& K, const MatrixFactorization& L) {
    const int j = f.parity, n = f.twist;
    GradedMatrix lmap0 = (j == 0 ? L.p0 : L.p1).twisted(n);
    GradedMatrix lmap1 = (j == 0 ? L.p1.twisted(n) : L.p0.twisted(L.d + n));
    MFMorphism d;
    d.parity = (j + 1) % 2;
    d.twist = n + (j == 1 ? L.d : 0);
    GradedMatrix t0 = f.f1 * K.p0;
    GradedMatrix t1 = f.f0.twisted(K.d) * K.p1;
    if (j % 2 == 0) {
        d.f0 = lmap0 * f.f0 - t0;
        d.f1 = lmap1 * f.f1 - t1;
    } else {
        d.f0 = lmap0 * f.f0 + t0;
        d.f1 = lmap1 * f.f1 + t1;
    }
    return d;
}

MFMorphism compose(const MFMorphism& g, const MFMorphism& f) {
    const int j1 = f.parity, n1 = f.twist;
    const int d = 3;
    GradedMatrix g_out0 = (j1 == 0 ? g.f0 : g.f1).twisted(n1);
    GradedMatrix g_out1 = (j1 == 0 ? g.f1.twisted(n1) : g.f0.twisted(d + n1));
    MFMorphism c;
    c.parity = (f.parity + g.parity) % 2;
    c.twist = f.twist + g.twist + ((f.parity + g.parity) >= 2 ? d : 0);
    c.f0 = g_out0 * f.f0;
    c.f1 = g_out1 * f.f1;
    return c;
}

namespace {

GradedMatrix hstack2(const GradedMatrix& a, const GradedMatrix& b) {
    // same target, concatenated sources
    GradedMatrix m;
    m.target = a.target;
    m.source.t = a.source.t;
    m.source.t.insert(m.source.t.end(), b.source.t.begin(), b.source.t.end());
    m.e.assign(m.target.size(), {});
    for (size_t i = 0; i < m.target.size(); ++i) {
        m.e[i] = a.e[i];
        m.e[i].insert(m.e[i].end(), b.e[i].begin(), b.e[i].end());
    }
    return m;
}

GradedMatrix vstack2(const GradedMatrix& a, const GradedMatrix& b) {
    // same source, concatenated targets
    GradedMatrix m;
    m.source = a.source;
    m.target.t = a.target.t;
    m.target.t.insert(m.target.t.end(), b.target.t.begin(), b.target.t.end());
    m.e = a.e;
    m.e.insert(m.e.end(), b.e.begin(), b.e.end());
    return m;
}

} // namespace

MatrixFactorization mf_cone(const MFMorphism& f, const MatrixFactorization& K,
                            const MatrixFactorization& L) {
    if (f.parity != 0 || f.twist != 0) throw std::invalid_argument("mf_cone: need a parity-0 morphism");
    MatrixFactorization C;
    C.d = L.d;
    C.P0.t = L.P0.t;
    C.P0.t.insert(C.P0.t.end(), K.P1.t.begin(), K.P1.t.end());
    C.P1.t = L.P1.t;
    auto kp0d = K.P0.twisted(K.d);
    C.P1.t.insert(C.P1.t.end(), kp0d.t.begin(), kp0d.t.end());
    GradedMatrix top0 = hstack2(L.p0, f.f1);
    GradedMatrix bot0 = hstack2(GradedMatrix::zero(L.P0, kp0d), -K.p1);
    C.p0 = vstack2(top0, bot0);
    GradedMatrix top1 = hstack2(L.p1, f.f0.twisted(K.d));
    GradedMatrix bot1 = hstack2(GradedMatrix::zero(L.P1, K.P1.twisted(K.d)), -K.p0.twisted(K.d));
    C.p1 = vstack2(top1, bot1);
    return C;
}

namespace {

std::vector<Monomial> monomials_of_degree(int d) {
    std::vector<Monomial> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) out.push_back(Monomial{a, b, d - a - b});
    return out;
}

struct EqKey {
    int comp, i, j;
    Monomial m;
    Integer exp;
    bool operator<(const EqKey& o) const {
        return std::tie(exp, comp, i, j, m.a, m.b, m.c) <
               std::tie(o.exp, o.comp, o.i, o.j, o.m.a, o.m.b, o.m.c);
    }
};

bool integer_supports(const GradedMatrix& m) {
    for (const auto& row : m.e)
        for (const auto& p : row)
            for (const auto& [mono, s] : p.terms())
                for (const auto& [e, c] : s.terms())
                    if (!is_integer(e)) return false;
    return true;
}

} // namespace

HomotopySearch is_null_homotopic(const MFMorphism& f, const MatrixFactorization& K,
                                 const MatrixFactorization& L, int degree_bound, const QExp& bound) {
    HomotopySearch res;
    const int jh = (f.parity + 1) % 2;
    const int nh = (f.parity == 1) ? f.twist : f.twist - L.d;
    MFMorphism h = zero_morphism(K, L, jh, nh);

    for (const GradedMatrix* m : {&K.p0, &K.p1, &L.p0, &L.p1, &f.f0, &f.f1})
        if (!integer_supports(*m))
            throw std::invalid_argument("is_null_homotopic: non-integer exponent support");

    // Structure maps: d(h)^0 = A0*h0 + s*(h1*B0), d(h)^1 = A1*h1 + s*(h0(d)*B1)
    // with s = -(-1)^{jh}.
    GradedMatrix A0 = (jh == 0 ? L.p0 : L.p1).twisted(nh);
    GradedMatrix A1 = (jh == 0 ? L.p1.twisted(nh) : L.p0.twisted(L.d + nh));
    const GradedMatrix& B0 = K.p0;
    const GradedMatrix& B1 = K.p1;
    const Rational s = (jh == 0) ? -1 : 1;

    // Variable layout, exponent-major.
    struct Slot {
        int comp, i, j;
        std::vector<Monomial> monos;
        long base; // index of first monomial within an exponent block
    };
    std::vector<Slot> slots;
    long slot_width = 0;
    auto add_slots = [&](int comp, const GradedMatrix& mat) {
        for (size_t i = 0; i < mat.rows(); ++i)
            for (size_t j = 0; j < mat.cols(); ++j) {
                int deg = mat.target.t[i] - mat.source.t[j];
                if (deg < 0 || deg > degree_bound) continue;
                Slot sl{comp, (int)i, (int)j, monomials_of_degree(deg), slot_width};
                slot_width += (long)sl.monos.size();
                slots.push_back(std::move(sl));
            }
    };
    add_slots(0, h.f0);
    add_slots(1, h.f1);

    Integer emin = 0;
    for (const GradedMatrix* m : {&f.f0, &f.f1})
        for (const auto& row : m->e)
            for (const auto& p : row)
                for (const auto& [mono, sc] : p.terms())
                    if (!sc.is_zero() && sc.valuation() < Rational(emin)) emin = floor_int(sc.valuation());
    Integer emax = ceil_int(bound);
    const long grid = slot_width == 0 ? 0 : (long)(emax - emin);
    auto var_id = [&](long slot_base, long mono_idx, const Integer& e) {
        return (long)(e - emin) * slot_width + slot_base + mono_idx;
    };

    std::map<EqKey, SparseLinearSystem::Row> eqs;
    auto accumulate = [&](int out_comp, int oi, int oj, const Monomial& mono, const Integer& e,
                          long var, const Rational& c) {
        if (c == 0) return;
        auto& row = eqs[EqKey{out_comp, oi, oj, mono, e}];
        auto [it, ins] = row.emplace(var, c);
        if (!ins) {
            it->second += c;
            if (it->second == 0) row.erase(it);
        }
    };

    for (const Slot& sl : slots) {
        for (long mi = 0; mi < (long)sl.monos.size(); ++mi) {
            const Monomial& m = sl.monos[mi];
            for (long ge = 0; ge < grid; ++ge) {
                Integer e = emin + ge;
                long v = var_id(sl.base, mi, e);
                if (sl.comp == 0) {
                    for (size_t ip = 0; ip < A0.rows(); ++ip) {
                        const GradedPolynomial& p = A0.e[ip][sl.i];
                        for (const auto& [mu, su] : p.terms())
                            for (const auto& [eu, cu] : su.terms()) {
                                Integer eo = e + num(eu);
                                if (Rational(eo) >= bound) continue;
                                accumulate(0, (int)ip, sl.j, m * mu, eo, v, cu);
                            }
                    }
                    for (size_t jp = 0; jp < B1.cols(); ++jp) {
                        const GradedPolynomial& p = B1.e[sl.j][jp];
                        for (const auto& [mu, su] : p.terms())
                            for (const auto& [eu, cu] : su.terms()) {
                                Integer eo = e + num(eu);
                                if (Rational(eo) >= bound) continue;
                                accumulate(1, sl.i, (int)jp, m * mu, eo, v, s * cu);
                            }
                    }
                } else {
                    for (size_t ip = 0; ip < A1.rows(); ++ip) {
                        const GradedPolynomial& p = A1.e[ip][sl.i];
                        for (const auto& [mu, su] : p.terms())
                            for (const auto& [eu, cu] : su.terms()) {
                                Integer eo = e + num(eu);
                                if (Rational(eo) >= bound) continue;
                                accumulate(1, (int)ip, sl.j, m * mu, eo, v, cu);
                            }
                    }
                    for (size_t jp = 0; jp < B0.cols(); ++jp) {
                        const GradedPolynomial& p = B0.e[sl.j][jp];
                        for (const auto& [mu, su] : p.terms())
                            for (const auto& [eu, cu] : su.terms()) {
                                Integer eo = e + num(eu);
                                if (Rational(eo) >= bound) continue;
                                accumulate(0, sl.i, (int)jp, m * mu, eo, v, s * cu);
                            }
                    }
                }
            }
        }
    }

    auto rhs_of = [&](const EqKey& k) -> Rational {
        const GradedMatrix& fm = (k.comp == 0) ? f.f0 : f.f1;
        return fm.e[k.i][k.j].coeff(k.m).coeff(Rational(k.exp));
    };
    for (int comp = 0; comp < 2; ++comp) {
        const GradedMatrix& fm = (comp == 0) ? f.f0 : f.f1;
        for (size_t i = 0; i < fm.rows(); ++i)
            for (size_t j = 0; j < fm.cols(); ++j)
                for (const auto& [mono, sc] : fm.e[i][j].terms())
                    for (const auto& [e, c] : sc.terms())
                        if (Rational(e) < bound)
                            eqs.try_emplace(EqKey{comp, (int)i, (int)j, mono, num(e)});
    }

    SparseLinearSystem sys;
    for (auto& [key, row] : eqs)
        if (!sys.add_equation(std::move(row), rhs_of(key))) return res;

    std::vector<Rational> sol = sys.solve(std::max(1L, grid * slot_width));
    for (const Slot& sl : slots) {
        GradedMatrix& mat = (sl.comp == 0) ? h.f0 : h.f1;
        GradedPolynomial p;
        for (long mi = 0; mi < (long)sl.monos.size(); ++mi) {
            NovikovSeries ser(bound);
            for (long ge = 0; ge < grid; ++ge) {
                const Rational& c = sol[(size_t)var_id(sl.base, mi, emin + ge)];
                if (c != 0) ser.add_term(Rational(emin + ge), c);
            }
            if (!ser.is_zero()) p.add_term(sl.monos[mi], ser);
        }
        mat.e[sl.i][sl.j] = p;
    }

    // Independent verification of the certificate.
    MFMorphism check = hom_diff(h, K, L);
    if (!matrices_agree_below(check.f0, f.f0, bound) || !matrices_agree_below(check.f1, f.f1, bound))
        return res;
    res.found = true;
    res.h = h;
    return res;
}

std::string mf_to_json(const MatrixFactorization& M) {
    auto twists = [](const TwistList& tl) {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < tl.size(); ++i) os << tl.t[i] << (i + 1 < tl.size() ? "," : "");
        os << "]";
        return os.str();
    };
    auto matrix = [](const GradedMatrix& m) {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < m.rows(); ++i) {
            os << "[";
            for (size_t j = 0; j < m.cols(); ++j)
                os << "\"" << m.e[i][j].to_string() << "\"" << (j + 1 < m.cols() ? "," : "");
            os << "]" << (i + 1 < m.rows() ? "," : "");
        }
        os << "]";
        return os.str();
    };
    std::ostringstream os;
    os << "{\"P0\":" << twists(M.P0) << ",\"P1\":" << twists(M.P1) << ",\"d\":" << M.d
       << ",\"p0\":" << matrix(M.p0) << ",\"p1\":" << matrix(M.p1) << "}";
    return os.str();
}

} // namespace lgcy
