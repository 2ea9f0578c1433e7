#pragma once

#include "jacsym/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace jacsym {

class ScalarMatrix;

/// Polynomial map: a tuple of polynomials sharing one input arity.
class PolyMap {
public:
    PolyMap(int n_in, std::vector<Poly> components);

    static PolyMap identity(int n);
    /// The map x^r: component i is variable n+1-i.
    static PolyMap reversed_identity(int n);
    static PolyMap zero(int n_in, int n_out);

    int n_in() const { return n_in_; }
    int n_out() const { return static_cast<int>(components_.size()); }
    bool is_square() const { return n_in() == n_out(); }
    const std::vector<Poly>& components() const { return components_; }
    const Poly& component(int i) const { return components_.at(i); }

    bool is_zero() const;
    /// True when the degree-1 homogeneous part equals the identity (square map).
    bool has_identity_linear_part() const;
    /// Union of component degree sets.
    std::set<int> degrees() const;

    PolyMap operator-() const;
    friend PolyMap operator+(const PolyMap& x, const PolyMap& y);
    friend PolyMap operator-(const PolyMap& x, const PolyMap& y);
    PolyMap operator*(const Scalar& s) const;
    friend bool operator==(const PolyMap& x, const PolyMap& y) {
        return x.n_in_ == y.n_in_ && x.components_ == y.components_;
    }
    friend bool operator!=(const PolyMap& x, const PolyMap& y) { return !(x == y); }

    /// H = F - x. Requires a square map.
    PolyMap minus_identity() const;
    PolyMap plus_identity() const;

private:
    int n_in_;
    std::vector<Poly> components_;
};

/// Rectangular grid of polynomials with a shared arity.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int arity);

    static PolyMatrix identity(int n, int arity);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int arity() const { return arity_; }
    const Poly& at(int r, int c) const { return entries_.at(index(r, c)); }
    void set(int r, int c, Poly p);

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
    friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
    }
    friend bool operator!=(const PolyMatrix& x, const PolyMatrix& y) { return !(x == y); }

    /// Row reversal M^r.
    PolyMatrix reversed_rows() const;
    PolyMatrix transposed() const;
    /// Reflection across the anti-diagonal (square only).
    PolyMatrix anti_transposed() const;

    /// Matrix-times-map product M * H, viewing H as a column of polynomials.
    PolyMap apply(const PolyMap& h) const;

private:
    int index(int r, int c) const { return r * cols_ + c; }

    int rows_, cols_, arity_;
    std::vector<Poly> entries_;
};

/// Constant matrix over the tower field.
class ScalarMatrix {
public:
    ScalarMatrix(int rows, int cols);

    static ScalarMatrix identity(int n);
    /// I_n^r, the anti-diagonal permutation matrix.
    static ScalarMatrix reversed_identity(int n);
    /// diag(-I_half, I_half) of size 2*half.
    static ScalarMatrix j_block(int half);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Scalar& at(int r, int c) const { return entries_.at(index(r, c)); }
    void set(int r, int c, Scalar v) { entries_.at(index(r, c)) = std::move(v); }
    bool is_square() const { return rows_ == cols_; }

    friend ScalarMatrix operator+(const ScalarMatrix& x, const ScalarMatrix& y);
    friend ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y);
    ScalarMatrix operator*(const Scalar& s) const;
    friend bool operator==(const ScalarMatrix& x, const ScalarMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
    }

    ScalarMatrix transposed() const;
    ScalarMatrix kronecker(const ScalarMatrix& o) const;

    /// The linear polynomial map x -> M x.
    PolyMap as_linear_map() const;
    /// M * H as a map.
    PolyMap apply(const PolyMap& h) const;

private:
    int index(int r, int c) const { return r * cols_ + c; }

    int rows_, cols_;
    std::vector<Scalar> entries_;
};

using ScalarVector = std::vector<Scalar>;

/// (i,j) entry is dH_i/dx_j.
PolyMatrix jacobian(const PolyMap& h);

/// Returns (grad f, Hess f); the Hessian is the Jacobian of the gradient.
std::pair<PolyMap, PolyMatrix> gradient_hessian(const Poly& f);

/// F after G: component i is F_i(G_1, ..., G_m).
PolyMap compose(const PolyMap& f, const PolyMap& g);

/// T^{-1} F(T x). Throws on singular or mismatched T.
PolyMap linear_conjugate(const PolyMap& f, const ScalarMatrix& t);

/// Component reversal F^r.
PolyMap reverse_map(const PolyMap& f);

struct FormalInverse {
    PolyMap inverse;
    bool exact;  // compose(F, inverse) == x without truncation
};

/// Iterates G <- x - H(G) with truncation at max_degree. Requires F = x + H
/// with every term of H of degree >= 2.
FormalInverse formal_inverse(const PolyMap& f, int max_degree);

/// The classical default truncation bound (deg F)^(n_in - 1).
int default_inverse_degree(const PolyMap& f);

struct KellerFlags {
    bool is_keller;      // det JF is a nonzero constant
    bool jh_nilpotent;   // (JH)^n == 0 with H = F - x
};

KellerFlags keller_nilpotency(const PolyMap& f);

/// JH * H == 0; when true, x + H has inverse x - H (verified internally).
bool quasi_translation_check(const PolyMap& h);

/// Substitute y = 0 ... 0 for the last `count` variables.
PolyMap substitute_zero_tail(const PolyMap& f, int count);

/// Componentwise d-th power of M x, as in power linear maps x + (Ax)^{*d}.
PolyMap hadamard_power_of_linear(const ScalarMatrix& m, int d);

}  // namespace jacsym
