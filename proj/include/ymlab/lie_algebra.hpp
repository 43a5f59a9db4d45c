#pragma once

// Fixed-size matrix Lie algebra arithmetic for su(n) / so(n), default su(2).
//
// Elements are kept in two interchangeable forms: the n x n complex matrix
// ("matrix form", used by validation, gauge transforms and I/O) and the real
// coefficient vector over an orthogonal anti-hermitian basis ("coefficient
// form", used by the field layer so that grid arithmetic runs on real arrays).
// For su(2) the basis is {i sigma_1/2, i sigma_2/2, i sigma_3/2}.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ymlab/errors.hpp"
#include "ymlab/rng.hpp"

namespace ymlab {

enum class AlgebraType { SU, SO };

class LieAlgebra {
  public:
    struct BracketTerm {
        int a, b, c;
        double coef;  // [T_a, T_b] contains coef * T_c
    };

    LieAlgebra(AlgebraType type, int n);

    AlgebraType type() const { return type_; }
    int matrix_dim() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    const Eigen::MatrixXcd& basis(int a) const { return basis_[a]; }
    double gram(int a) const { return gram_[a]; }  // <T_a, T_a>, basis is orthogonal
    const std::vector<BracketTerm>& bracket_terms() const { return terms_; }

    // true when f_abc = cross3_scale() * epsilon_abc (su(2), so(3)); the field
    // layer then uses the fused cross-product kernel.
    bool is_cross3() const { return is_cross3_; }
    double cross3_scale() const { return cross3_scale_; }

    Eigen::MatrixXcd matrix_from(const Eigen::VectorXd& coeffs) const;
    Eigen::VectorXd coeffs_from(const Eigen::MatrixXcd& m) const;

    // Coefficient-space bracket: z such that [x, y] in coefficients.
    Eigen::VectorXd bracket_coeffs(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

    static const LieAlgebra& su2();

  private:
    AlgebraType type_;
    int n_;
    std::vector<Eigen::MatrixXcd> basis_;
    std::vector<double> gram_;
    std::vector<BracketTerm> terms_;
    bool is_cross3_ = false;
    double cross3_scale_ = 0.0;
};

// Trace-free anti-hermitian (su) or real antisymmetric (so) matrix.
class LieElement {
  public:
    LieElement(const LieAlgebra& alg, Eigen::MatrixXcd m, double tol = 1e-12);
    static LieElement zero(const LieAlgebra& alg);
    static LieElement from_coeffs(const LieAlgebra& alg, const Eigen::VectorXd& c);
    static LieElement random(const LieAlgebra& alg, Rng& rng, double amplitude = 1.0);

    const LieAlgebra& algebra() const { return *alg_; }
    const Eigen::MatrixXcd& matrix() const { return m_; }
    Eigen::VectorXd coefficients() const { return alg_->coeffs_from(m_); }

    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator*(double s) const;

  private:
    LieElement(const LieAlgebra& alg, Eigen::MatrixXcd m, int /*unchecked*/);
    const LieAlgebra* alg_;
    Eigen::MatrixXcd m_;
    friend LieElement commutator(const LieElement&, const LieElement&);
};

// Unitary (det 1) group element.
class GroupElement {
  public:
    explicit GroupElement(Eigen::MatrixXcd m, double tol = 1e-10);
    const Eigen::MatrixXcd& matrix() const { return m_; }
    GroupElement inverse() const;

  private:
    Eigen::MatrixXcd m_;
};

// [X, Y] = XY - YX. Throws ValidationError on dimension mismatch.
LieElement commutator(const LieElement& x, const LieElement& y);

// Re tr(X Y^dagger); lie_inner(X, X) = |X|^2 >= 0.
double lie_inner(const LieElement& x, const LieElement& y);

// Matrix exponential by scaling-and-squaring with a fixed-order series.
GroupElement exp_map(const LieElement& x);
Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& m);

}  // namespace ymlab
