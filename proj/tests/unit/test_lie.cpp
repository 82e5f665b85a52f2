#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "solvtm/error.hpp"
#include "solvtm/lie/eigenframe.hpp"
#include "solvtm/lie/group.hpp"
#include "solvtm/lie/structure.hpp"
#include "solvtm/spectrum/delta.hpp"
#include "solvtm/spectrum/jordan.hpp"
#include "support/group_oracle.hpp"
#include "support/oracles.hpp"

using namespace solvtm;
using namespace solvtm::lie;
using Cd = std::complex<double>;
using oracle::group_matrix;
using oracle::random_element;
using oracle::random_lattice;

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("structure_constants") {
  SUBCASE("n = 1") {
    const Cd beta(0.3, 0.9);
    spectrum::DeltaMatrix d(1, 1);
    d(0, 0) = std::log(beta);
    const auto t = structure_constants(d, 2.0);
    CHECK(t(0, 1, 1) == doctest::Approx(std::log(2.0)));
    CHECK(t(1, 0, 1) == doctest::Approx(-std::log(2.0)));
    CHECK(t(0, 2, 2) == doctest::Approx(std::log(beta).real()));
    CHECK(t(0, 2, 3) == doctest::Approx(std::log(beta).imag()));
    CHECK(t(0, 3, 2) == doctest::Approx(-std::log(beta).imag()));
    CHECK(t(0, 3, 3) == doctest::Approx(std::log(beta).real()));
    CHECK(t(1, 2, 2) == 0);
    CHECK(t(2, 3, 2) == 0);
    CHECK(t.label(0) == "A");
    CHECK(t.label(3) == "Y_2");
  }
  SUBCASE("example matrix: [A, Y_2] = (pi/2) Y_5, diagonal couplings vanish") {
    const auto m = oracle::example_matrix();
    const auto s = spectrum::analyze_spectrum(m, 1e-12);
    const auto t = structure_constants(spectrum::compute_delta(s), s.alpha);
    CHECK(t(0, t.Y(2), t.Y(5)) == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(std::abs(t(0, t.Y(2), t.Y(2))) < 1e-12);
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = 1; j <= 3; ++j)
        if (i != j) CHECK(t(0, t.Y(j), t.Y(i)) == 0);
    CHECK(jacobi_residual(t) <= 1e-10);
  }
}

TEST_CASE("jacobi_residual") {
  CHECK(jacobi_residual(StructureTensor(2)) == 0);
  const auto m = oracle::generic_matrix();
  const auto s = spectrum::analyze_spectrum(m, 1e-12);
  auto t = structure_constants(spectrum::compute_delta(s), s.alpha);
  CHECK(jacobi_residual(t) <= 1e-10);
  t.set_bracket(StructureTensor::X, t.Y(1), t.Y(1), 1.0);
  CHECK(jacobi_residual(t) > 0.1);
}

TEST_CASE("solvability profile on random admissible matrices") {
  std::mt19937 rng(503);
  for (int trial = 0; trial < 16; ++trial) {
    const auto sm = oracle::random_admissible(rng, trial % 2 ? 7 : 5);
    const auto s = spectrum::analyze_spectrum(sm.m, 1e-12);
    const auto t = structure_constants(spectrum::compute_delta(s), s.alpha);
    CHECK(jacobi_residual(t) <= 1e-10);
    const auto p = solvability_profile(t);
    CHECK(p.solvable);
    CHECK_FALSE(p.nilpotent);
    CHECK(std::abs(p.trace_adA) <= 1e-8);
    CHECK(p.derived_series.size() >= 2);
    CHECK(p.derived_series[1] == t.dim() - 1);
  }
}

TEST_CASE("group_mul") {
  const auto m = oracle::jordan_witness_matrix();
  const auto s = spectrum::analyze_spectrum(m, 1e-12);
  const auto d = spectrum::compute_delta(s);
  std::mt19937 rng(601);
  const auto g = random_element(rng, 3);
  const GroupElement e{0, 0, Eigen::VectorXcd::Zero(3)};

  const auto ge = group_mul(g, e, d, s.alpha);
  CHECK(ge.x == doctest::Approx(g.x));
  CHECK(ge.t == doctest::Approx(g.t));
  CHECK((ge.z - g.z).norm() < 1e-14);
  const auto xy = group_mul({1.5, 0, Eigen::VectorXcd::Zero(3)}, {-0.25, 0, Eigen::VectorXcd::Zero(3)}, d, s.alpha);
  CHECK(xy.x == doctest::Approx(1.25));
  CHECK(xy.t == 0);

  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_element(rng, 3), b = random_element(rng, 3), c = random_element(rng, 3);
    const auto ab = group_mul(a, b, d, s.alpha);
    const Eigen::MatrixXcd expected = group_matrix(a, s) * group_matrix(b, s);
    CHECK((group_matrix(ab, s) - expected).cwiseAbs().maxCoeff() < 1e-9);
    const auto left = group_mul(ab, c, d, s.alpha);
    const auto right = group_mul(a, group_mul(b, c, d, s.alpha), d, s.alpha);
    CHECK(std::abs(left.x - right.x) < 1e-9);
    CHECK(std::abs(left.t - right.t) < 1e-12);
    CHECK((left.z - right.z).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("lattice_mul") {
  const auto m = oracle::example_matrix();
  const std::size_t dim = m.dim();
  std::mt19937 rng(607);
  const auto w1 = random_lattice(rng, dim), w2 = random_lattice(rng, dim);
  const auto sum = lattice_mul({0, w1.w}, {0, w2.w}, m);
  CHECK(sum.m == 0);
  for (std::size_t i = 0; i < dim; ++i) CHECK(sum.w[i] == w1.w[i] + w2.w[i]);

  const LatticeElement g0{1, std::vector<exact::Integer>(dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) {
    LatticeElement gi{0, std::vector<exact::Integer>(dim, 0)};
    gi.w[i] = 1;
    CHECK(lattice_mul(gi, g0, m) == LatticeElement{1, gi.w});
    CHECK(lattice_mul(g0, gi, m) == LatticeElement{1, m * std::span<const exact::Integer>(gi.w)});
  }

  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_lattice(rng, dim), b = random_lattice(rng, dim), c = random_lattice(rng, dim);
    CHECK(lattice_mul(lattice_mul(a, b, m), c, m) == lattice_mul(a, lattice_mul(b, c, m), m));
    CHECK(oracle::affine(lattice_mul(a, b, m), m) == oracle::affine(a, m) * oracle::affine(b, m));
    const auto inv = lattice_inverse(a, m);
    const LatticeElement id{0, std::vector<exact::Integer>(dim, 0)};
    CHECK(lattice_mul(a, inv, m) == id);
    CHECK(lattice_mul(inv, a, m) == id);
    // gamma(1,0) gamma(0,W) gamma(1,0)^-1 = gamma(0, MW).
    const LatticeElement pure{0, b.w};
    const auto conj = lattice_mul(lattice_mul(g0, pure, m), lattice_inverse(g0, m), m);
    CHECK(conj == LatticeElement{0, m * std::span<const exact::Integer>(b.w)});
  }
}

TEST_CASE("eigenframe") {
  SUBCASE("example matrix") {
    const auto m = oracle::example_matrix();
    const auto f = eigenframe(m, spectrum::analyze_spectrum(m, 1e-12));
    CHECK(f.residual_b <= 1e-9);
    CHECK(f.residual_a <= 1e-9);
    // alpha lives in the cubic block.
    for (Eigen::Index i = 3; i < 7; ++i) CHECK(std::abs(f.a(i)) < 1e-12);
    CHECK(f.a.norm() == doctest::Approx(1.0));
    CHECK(f.min_singular_u > 1e-6);
  }
  SUBCASE("Jordan witness: chain b_2 -> b_3") {
    const auto m = oracle::jordan_witness_matrix();
    const auto f = eigenframe(m, spectrum::analyze_spectrum(m, 1e-12));
    CHECK(f.residual_b <= 1e-9);
    CHECK(std::abs(f.r(2, 1) - Cd(1, 0)) == 0);
    CHECK(f.min_singular_u > 1e-6);
  }
  SUBCASE("random admissible matrices") {
    std::mt19937 rng(701);
    for (int trial = 0; trial < 12; ++trial) {
      const auto sm = oracle::random_admissible(rng, trial % 2 ? 7 : 5);
      const auto f = eigenframe(sm.m, spectrum::analyze_spectrum(sm.m, 1e-12));
      CHECK(f.residual_b <= 1e-9);
      CHECK(f.min_singular_u > 1e-8);
    }
  }
}
