#include <doctest.h>

#include <cmath>
#include <random>

#include "duality/detector.hpp"
#include "support.hpp"

using namespace duality;

TEST_CASE("correlated pair: ideal which-way case is the orthogonal basis") {
    const CorrelatedPair pair = make_correlated_pair(1.0, 0.0);
    CHECK(pair.d1.a_p1() == Complex(1.0, 0.0));
    CHECK(pair.d1.a_p2() == Complex(0.0, 0.0));
    CHECK(pair.d2.a_p1() == Complex(0.0, 0.0));
    CHECK(pair.d2.a_p2() == Complex(1.0, 0.0));
    CHECK(distinguishability(pair.d1, pair.d2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("correlated pair: equal coefficients carry no which-way information") {
    const double r = 1.0 / std::sqrt(2.0);
    const CorrelatedPair pair = make_correlated_pair(r, r);
    CHECK(std::abs(overlap(pair.d1, pair.d2) - 1.0) < 1e-12);
    CHECK(distinguishability(pair.d1, pair.d2) == doctest::Approx(0.0).epsilon(1e-12));
    // both states equal (|p1> + |p2>)/sqrt(2)
    CHECK(std::abs(pair.d1.a_p1() - pair.d2.a_p1()) < 1e-15);
    CHECK(std::abs(pair.d1.a_p2() - pair.d2.a_p2()) < 1e-15);
}

TEST_CASE("correlated pair: partial which-way case (sqrt 0.8, sqrt 0.2)") {
    const CorrelatedPair pair = make_correlated_pair(std::sqrt(0.8), std::sqrt(0.2));
    const Complex ov = overlap(pair.d1, pair.d2);
    CHECK(ov.real() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(ov.imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(distinguishability(pair.d1, pair.d2) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(variance(TwoLevelObservable::path(), pair.d1) ==
          doctest::Approx(0.64).epsilon(1e-12));
}

TEST_CASE("correlated pair: non-normalized input is rejected with its deficit") {
    CHECK_THROWS_AS(make_correlated_pair(0.9, 0.1), NormalizationError);
    try {
        make_correlated_pair(0.9, 0.1);
    } catch (const NormalizationError& e) {
        CHECK(e.deficit() == doctest::Approx(1.0 - 0.82).epsilon(1e-12));
    }
    CHECK_THROWS_AS(DetectorState(1.0, 1.0), NormalizationError);
    CHECK_THROWS_AS(DetectorState(Complex(NAN, 0.0), Complex(0.0, 0.0)), DomainError);
}

TEST_CASE("overlap: normalization, orthogonality, conjugate symmetry") {
    const DetectorState p1 = DetectorState::p1();
    const DetectorState p2 = DetectorState::p2();
    CHECK(std::abs(overlap(p1, p1) - 1.0) < 1e-15);
    CHECK(std::abs(overlap(p1, p2)) < 1e-15);

    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        const DetectorState a = testing::random_state(rng);
        const DetectorState b = testing::random_state(rng);
        CHECK(std::abs(overlap(a, b) - std::conj(overlap(b, a))) < 1e-14);
    }
}

TEST_CASE("distinguishability: symmetric and global-phase invariant") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 200; ++i) {
        const DetectorState a = testing::random_state(rng);
        const DetectorState b = testing::random_state(rng);
        const double dab = distinguishability(a, b);
        CHECK(dab == doctest::Approx(distinguishability(b, a)).epsilon(1e-13));
        CHECK(dab == doctest::Approx(distinguishability(a.with_global_phase(1.234), b))
                         .epsilon(1e-12));
        CHECK(dab == doctest::Approx(distinguishability(a, b.with_global_phase(-2.1)))
                         .epsilon(1e-12));
        CHECK(dab >= 0.0);
        CHECK(dab <= 1.0);
    }
}

TEST_CASE("expectation: path and erasure observables on eigenstates") {
    const DetectorState p1 = DetectorState::p1();
    const EraserBasis qb = eraser_basis();
    CHECK(expectation(TwoLevelObservable::path(), p1) == doctest::Approx(1.0));
    CHECK(expectation(TwoLevelObservable::path(), qb.q1) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(expectation(TwoLevelObservable::erasure(), qb.q1) == doctest::Approx(1.0));
    CHECK(expectation(TwoLevelObservable::erasure(), qb.q2) == doctest::Approx(-1.0));
}

TEST_CASE("variance: eigenstates, equal superposition, partial case") {
    const double r = 1.0 / std::sqrt(2.0);
    const TwoLevelObservable p = TwoLevelObservable::path();
    CHECK(variance(p, DetectorState(r, r)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(variance(p, DetectorState::p1()) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(variance(p, DetectorState(std::sqrt(0.8), std::sqrt(0.2))) ==
          doctest::Approx(0.64).epsilon(1e-12));
}

TEST_CASE("variance: Var(P) = 4|c1|^2|c2|^2 and equal on both pair members") {
    std::mt19937_64 rng(31337);
    const TwoLevelObservable p = TwoLevelObservable::path();
    for (int i = 0; i < 500; ++i) {
        const auto [c1, c2] = testing::bloch_uniform_pair(rng);
        const CorrelatedPair pair = make_correlated_pair(c1, c2);
        const double expected = 4.0 * std::norm(c1) * std::norm(c2);
        CHECK(variance(p, pair.d1) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(variance(p, pair.d1) ==
              doctest::Approx(variance(p, pair.d2)).epsilon(1e-13));
    }
}

TEST_CASE("distinguishability squared plus Var(P) is exactly 1 for correlated pairs") {
    std::mt19937_64 rng(2024);
    const TwoLevelObservable p = TwoLevelObservable::path();
    for (int i = 0; i < 1000; ++i) {
        const auto [c1, c2] = testing::bloch_uniform_pair(rng);
        const CorrelatedPair pair = make_correlated_pair(c1, c2);
        const double d = distinguishability(pair.d1, pair.d2);
        CHECK(std::abs(d * d + variance(p, pair.d1) - 1.0) < 1e-12);
    }
}

TEST_CASE("sum uncertainty: eigenstates and the sigma_y extreme") {
    const double r = 1.0 / std::sqrt(2.0);
    SumUncertainty s = sum_uncertainty(DetectorState::p1());
    CHECK(s.delta_p2 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.delta_q2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.total == doctest::Approx(1.0).epsilon(1e-15));

    s = sum_uncertainty(DetectorState(r, r));
    CHECK(s.delta_p2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.delta_q2 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.total == doctest::Approx(1.0).epsilon(1e-15));

    s = sum_uncertainty(DetectorState(Complex(r, 0.0), Complex(0.0, r)));
    CHECK(s.delta_p2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.delta_q2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.total == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("sum uncertainty: bounded below by 1, equality for real coefficients") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 10000; ++i) {
        CHECK(sum_uncertainty(testing::random_state(rng)).total >= 1.0 - 1e-12);
    }
    for (int i = 0; i < 2000; ++i) {
        const auto [c1, c2] = testing::real_uniform_pair(rng);
        const double total = sum_uncertainty(DetectorState(c1, c2)).total;
        CHECK(std::abs(total - 1.0) < 1e-12);
    }
}

TEST_CASE("eraser basis: orthonormal Q eigenstates") {
    const EraserBasis qb = eraser_basis();
    CHECK(std::abs(overlap(qb.q1, qb.q2)) < 1e-15);
    CHECK(overlap(qb.q1, DetectorState::p1()).real() ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(expectation(TwoLevelObservable::erasure(), qb.q2) == doctest::Approx(-1.0));
}

TEST_CASE("two-level observable: Bloch vector must be unit length") {
    CHECK_THROWS_AS(TwoLevelObservable(0.5, 0.5, 0.5), NormalizationError);
    // deficits below the input tolerance are normalized away
    const TwoLevelObservable nearly(1.0 + 4e-10, 0.0, 0.0);
    CHECK(nearly.n_x() == doctest::Approx(1.0).epsilon(1e-12));
}
