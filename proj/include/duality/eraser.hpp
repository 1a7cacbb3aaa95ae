#pragma once

#include "duality/detector.hpp"
#include "duality/geometry.hpp"
#include "duality/pattern.hpp"

namespace duality {

/// Joint particle-detector state expanded over the Q eigenbasis with its
/// fixed fringe modes: g1 multiplies [psi1 + psi2]/sqrt(2) (x) |q1>, g2
/// multiplies [psi1 - psi2]/sqrt(2) (x) |q2>.
class QBasisState {
  public:
    QBasisState(Complex g1, Complex g2);

    Complex g1() const { return g1_; }
    Complex g2() const { return g2_; }

    /// |g1|^2 - |g2|^2, the fringe weight of the marginal cross term.
    double fringe_weight() const;

  private:
    Complex g1_, g2_;
};

/// Expand the joint state (1/sqrt 2)[psi1 |d1> + psi2 |d2>], with (d1, d2)
/// the correlated pair of (c1, c2), over the Q eigenbasis:
/// g1 = (c1 + c2)/sqrt(2), g2 = (c1 - c2)/sqrt(2). The magnitudes are the
/// exact q1/q2 projection probabilities for any complex pair (the spatial
/// modes the projections multiply are the fixed fringe modes only up to
/// coefficient phases; probabilities and Var(Q) are unaffected).
QBasisState to_q_basis(Complex c1, Complex c2);

/// Which detector outcome a conditional pattern is selected on.
enum class EraserPort { q1, q2 };

/// Screen pattern post-selected on one Q eigenstate:
/// |psi1(x) +/- psi2(x)|^2 (+ for q1, - for q2), from evolved_amplitudes.
/// Both branches show full-visibility fringes; the q2 pattern sits half a
/// fringe width off the q1 pattern, and their equal-weight mixture is the
/// incoherent two-packet envelope.
Pattern conditional_pattern(const SlitGeometry& geom, EraserPort which,
                            const GridSpec& grid);

/// Screen pattern with the detector unread:
/// (|psi1|^2 + |psi2|^2) + (|g1|^2 - |g2|^2) 2 Re[conj(psi1) psi2],
/// i.e. the fringe-weighted mixture of the two conditional patterns.
Pattern marginal_pattern(const SlitGeometry& geom, const QBasisState& q,
                         const GridSpec& grid);

/// Var(Q) in the joint state: 1 - (|g1|^2 - |g2|^2)^2.
double delta_q2(const QBasisState& q);

/// Quantities produced (and checked) by uncertainty_duality_chain.
struct UncertaintyChainReport {
    double visibility;          ///< V measured from the Q-basis marginal
    double distinguishability;  ///< D of the correlated pair
    double delta_p2;            ///< Var(P) on d1
    double delta_q2;            ///< Var(Q) of the joint state
    double fringe_weight;       ///< |g1|^2 - |g2|^2
};

/// Run the full inequality chain for a detector coefficient pair:
///   V^2 <= (|g1|^2 - |g2|^2)^2          (visibility vs fringe weight)
///   V^2 <= 1 - Var(Q)                   (visibility vs Q uncertainty)
///   D^2 + V^2 <= 2 - [Var(P) + Var(Q)]  (combined bound)
///   Var(P) + Var(Q) >= 1                (sum uncertainty)
///   D^2 + V^2 <= 1                      (duality)
/// V is measured from the marginal pattern of to_q_basis(c1, c2). Throws
/// ChainViolationError naming the first inequality that fails.
UncertaintyChainReport uncertainty_duality_chain(Complex c1, Complex c2,
                                                 const SlitGeometry& geom,
                                                 const GridSpec& grid);

/// As above with the reference geometry and its recommended grid.
UncertaintyChainReport uncertainty_duality_chain(Complex c1, Complex c2);

}  // namespace duality
