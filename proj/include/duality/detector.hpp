#pragma once

#include <complex>

#include "duality/errors.hpp"

namespace duality {

using Complex = std::complex<double>;

/// Tolerance accepted on input normalization before a state is rejected.
inline constexpr double kNormInputTolerance = 1e-9;
/// Tolerance guaranteed on stored invariants after construction.
inline constexpr double kNormStoredTolerance = 1e-12;

/// Normalized two-level state of the which-way detector, expressed in the
/// path basis {|p1>, |p2>}. Construction renormalizes inputs whose norm
/// deficit is below kNormInputTolerance and rejects anything worse.
class DetectorState {
  public:
    DetectorState(Complex a_p1, Complex a_p2);

    Complex a_p1() const { return a_p1_; }
    Complex a_p2() const { return a_p2_; }

    /// Path eigenstates.
    static DetectorState p1() { return DetectorState(1.0, 0.0); }
    static DetectorState p2() { return DetectorState(0.0, 1.0); }

    /// The same ray with a global phase applied; physically equivalent.
    DetectorState with_global_phase(double phase) const;

  private:
    Complex a_p1_, a_p2_;
};

/// +/-1-eigenvalue observable n.sigma given by a unit Bloch vector.
/// Squaring to the identity makes Var(A) = 1 - <A>^2 exact.
class TwoLevelObservable {
  public:
    TwoLevelObservable(double n_x, double n_y, double n_z);

    double n_x() const { return n_x_; }
    double n_y() const { return n_y_; }
    double n_z() const { return n_z_; }

    /// P = sigma_z: distinguishes the path-correlated states |p1>, |p2>.
    static TwoLevelObservable path() { return TwoLevelObservable(0.0, 0.0, 1.0); }
    /// Q = sigma_x: distinguishes the equal superpositions |q1>, |q2>.
    static TwoLevelObservable erasure() { return TwoLevelObservable(1.0, 0.0, 0.0); }

  private:
    double n_x_, n_y_, n_z_;
};

struct CorrelatedPair {
    DetectorState d1;
    DetectorState d2;
};

/// Detector states that get correlated with the two particle paths:
/// d1 = c1|p1> + c2|p2>, d2 = c2*|p1> + c1*|p2>.
/// Requires |c1|^2 + |c2|^2 = 1 within kNormInputTolerance.
CorrelatedPair make_correlated_pair(Complex c1, Complex c2);

/// Hermitian inner product <d1|d2>, conjugate-linear in the first argument.
Complex overlap(const DetectorState& d1, const DetectorState& d2);

/// Path distinguishability D = sqrt(1 - |<d1|d2>|^2), in [0, 1].
double distinguishability(const DetectorState& d1, const DetectorState& d2);

/// <s| n.sigma |s>, in [-1, 1].
double expectation(const TwoLevelObservable& obs, const DetectorState& s);

/// Var(A) = 1 - <A>^2, exact for +/-1-eigenvalue observables.
double variance(const TwoLevelObservable& obs, const DetectorState& s);

struct SumUncertainty {
    double delta_p2;  ///< Var(P)
    double delta_q2;  ///< Var(Q)
    double total;     ///< Var(P) + Var(Q), >= 1 for any state
};

/// Variances of P and Q in the same state and their sum.
SumUncertainty sum_uncertainty(const DetectorState& s);

struct EraserBasis {
    DetectorState q1;  ///< (|p1> + |p2>)/sqrt(2), Q-eigenvalue +1
    DetectorState q2;  ///< (|p1> - |p2>)/sqrt(2), Q-eigenvalue -1
};

/// The orthonormal eigenbasis of Q.
EraserBasis eraser_basis();

}  // namespace duality
