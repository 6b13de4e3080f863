#pragma once

#include "ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lgcy {

// Twists of the free summands R(n), in the chosen basis order.
struct TwistList {
    std::vector<int> t;

    size_t size() const { return t.size(); }
    TwistList twisted(int n) const;
    bool operator==(const TwistList& o) const { return t == o.t; }
};

// Matrix of homogeneous polynomials between graded free modules. Columns are
// indexed by source summands; entry (i,j) must be homogeneous of degree
// target.t[i] - source.t[j] (or zero).
struct GradedMatrix {
    std::vector<std::vector<GradedPolynomial>> e;
    TwistList source, target;

    static GradedMatrix zero(TwistList src, TwistList tgt);
    static GradedMatrix identity(const TwistList& tl);
    static GradedMatrix diagonal(const GradedPolynomial& p, const TwistList& src, int degree_shift);

    size_t rows() const { return target.size(); }
    size_t cols() const { return source.size(); }

    bool is_zero() const;
    bool grading_ok() const;
    std::optional<QExp> min_valuation() const; // over nonzero entries

    GradedMatrix twisted(int n) const; // shift both twist lists; entries unchanged
    GradedMatrix operator-() const;
    GradedMatrix operator+(const GradedMatrix& o) const;
    GradedMatrix operator-(const GradedMatrix& o) const;
    GradedMatrix operator*(const GradedMatrix& o) const; // composition: this after o

    bool operator==(const GradedMatrix& o) const;

    // Entries whose forced degree is zero, as scalar series; other slots zero.
    GradedMatrix constant_part() const;

    std::string to_string() const;
};

bool matrices_agree_below(const GradedMatrix& a, const GradedMatrix& b, const QExp& bound);

// Pair of graded maps p0: P0 -> P1 and p1: P1 -> P0(d) with both composites
// equal to multiplication by the potential.
struct MatrixFactorization {
    TwistList P0, P1;
    GradedMatrix p0; // source P0, target P1
    GradedMatrix p1; // source P1, target P0 twisted by d
    int d = 3;
};

// Degree-j morphism f: K -> L(n) of quasi-periodic complexes, f^{i+2} = f^i(d).
// f0 maps K^0 and f1 maps K^1; targets are L^{j}(n) and L^{1+j}(n).
struct MFMorphism {
    int parity = 0; // j mod 2
    int twist = 0;  // n
    GradedMatrix f0, f1;

    MFMorphism operator+(const MFMorphism& o) const;
    MFMorphism operator-(const MFMorphism& o) const;
    MFMorphism operator-() const;
    bool operator==(const MFMorphism& o) const;
};

MFMorphism identity_morphism(const MatrixFactorization& M);
MFMorphism zero_morphism(const MatrixFactorization& K, const MatrixFactorization& L, int parity,
                         int twist);

// True iff both composite identities hold exactly below `bound`, every entry
// passes the homogeneity check, and all entries have valuation >= 0. Throws if
// an entry or W is not known up to `bound` (cutoff mismatch).
bool mf_validate(const MatrixFactorization& M, const GradedPolynomial& W, const QExp& bound);

// K[1]: swapped halves with negated maps; applying it twice equals K(d).
MatrixFactorization mf_shift(const MatrixFactorization& M);
MatrixFactorization mf_twist(const MatrixFactorization& M, int n);

// The hom-complex differential d(f) = l o f - (-1)^j f o k; parity j+1.
MFMorphism hom_diff(const MFMorphism& f, const MatrixFactorization& K, const MatrixFactorization& L);

// g o f for f: K -> L and g: L -> M.
MFMorphism compose(const MFMorphism& g, const MFMorphism& f);

// Mapping cone of a closed parity-0 morphism f: K -> L, built on L + K[1].
MatrixFactorization mf_cone(const MFMorphism& f, const MatrixFactorization& K,
                            const MatrixFactorization& L);

struct HomotopySearch {
    bool found = false;
    MFMorphism h; // valid when found; hom_diff(h) = f below the bound
};

// Searches for h with d(h) = f, restricting h's entries to polynomial degree
// <= degree_bound and integer T-exponents below `bound`. The search is one
// exact sparse linear solve per run; absence within the bound is a result,
// not an error.
HomotopySearch is_null_homotopic(const MFMorphism& f, const MatrixFactorization& K,
                                 const MatrixFactorization& L, int degree_bound, const QExp& bound);

std::string mf_to_json(const MatrixFactorization& M);

} // namespace lgcy
