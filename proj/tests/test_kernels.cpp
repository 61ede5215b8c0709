#include <doctest.h>

#include <omp.h>

#include <random>

#include "msdiff/error.hpp"
#include "msdiff/kernels.hpp"
#include "msdiff/grid.hpp"
#include "test_support.hpp"

using namespace msdiff;

namespace {

struct ThreadGuard {
  explicit ThreadGuard(int n) : previous(omp_get_max_threads()) {
    omp_set_num_threads(n);
  }
  ~ThreadGuard() { omp_set_num_threads(previous); }
  int previous;
};

}  // namespace

TEST_CASE("openmp kernels are bit-identical to the serial reference") {
  ThreadGuard threads(4);
  std::mt19937_64 rng(99);
  for (int j_max : {2, 7, 140, 1001}) {
    const Grid1D g = build_grid(j_max);
    const std::size_t n = g.node_count();
    for (const MixtureSpec& spec : {test::kSemiDegenerate, test::kDuncanToor}) {
      const auto coeffs = derive_coefficients(spec);
      const MixtureState s = test::random_state(g, rng);
      for (FluxBoundary b : {FluxBoundary::outer_faces, FluxBoundary::end_nodes}) {
        std::vector<double> s1(n), s2(n), o1(n), o2(n);
        kernels::node_fluxes(spec, coeffs, s.xi1.values, s.xi2.values, g.dx(), b,
                             s1, s2, Backend::serial);
        kernels::node_fluxes(spec, coeffs, s.xi1.values, s.xi2.values, g.dx(), b,
                             o1, o2, Backend::openmp);
        CHECK(s1 == o1);
        CHECK(s2 == o2);

        std::vector<double> us(n), uo(n);
        kernels::conservative_update(s.xi1.values, s1, 1e-5, g.dx(), us,
                                     Backend::serial);
        kernels::conservative_update(s.xi1.values, s1, 1e-5, g.dx(), uo,
                                     Backend::openmp);
        CHECK(us == uo);
      }
      std::vector<double> fs(n), fo(n), bs(n), bo(n);
      kernels::forward_difference(s.xi1.values, g.dx(), fs, Backend::serial);
      kernels::forward_difference(s.xi1.values, g.dx(), fo, Backend::openmp);
      kernels::backward_difference(s.xi1.values, g.dx(), bs, Backend::serial);
      kernels::backward_difference(s.xi1.values, g.dx(), bo, Backend::openmp);
      CHECK(fs == fo);
      CHECK(bs == bo);
    }
  }
}

TEST_CASE("node_fluxes matches solve_node_fluxes node by node") {
  std::mt19937_64 rng(1);
  const Grid1D g = build_grid(50);
  const auto coeffs = derive_coefficients(test::kDuncanToor);
  const MixtureState s = test::random_state(g, rng);
  std::vector<double> n1(51), n2(51);
  kernels::node_fluxes(test::kDuncanToor, coeffs, s.xi1.values, s.xi2.values,
                       g.dx(), FluxBoundary::outer_faces, n1, n2, Backend::serial);
  const NodalField g1 = diff_backward(s.xi1, g), g2 = diff_backward(s.xi2, g);
  for (std::size_t j = 0; j < 50; ++j) {
    const NodeFlux f =
        solve_node_fluxes(coeffs, s.at(j), test::kDuncanToor, -g1[j], -g2[j]);
    CHECK(n1[j] == f.n1);
    CHECK(n2[j] == f.n2);
  }
  CHECK(n1[50] == 0.0);
  CHECK(n2[50] == 0.0);
}

TEST_CASE("boundary policies zero the documented entries") {
  std::mt19937_64 rng(2);
  const Grid1D g = build_grid(20);
  const auto coeffs = derive_coefficients(test::kSemiDegenerate);
  const MixtureState s = test::random_state(g, rng);
  std::vector<double> n1(21), n2(21);
  kernels::node_fluxes(test::kSemiDegenerate, coeffs, s.xi1.values, s.xi2.values,
                       g.dx(), FluxBoundary::end_nodes, n1, n2, Backend::serial);
  CHECK(n1[0] == 0.0);
  CHECK(n2[0] == 0.0);
  CHECK(n1[20] == 0.0);
  CHECK(n2[20] == 0.0);
  kernels::node_fluxes(test::kSemiDegenerate, coeffs, s.xi1.values, s.xi2.values,
                       g.dx(), FluxBoundary::outer_faces, n1, n2, Backend::serial);
  CHECK(n1[0] != 0.0);
  CHECK(n1[20] == 0.0);
  CHECK(n2[20] == 0.0);
}

TEST_CASE("singular nodes are reported at the lowest index on both backends") {
  ThreadGuard threads(3);
  const Grid1D g = build_grid(40);
  const auto coeffs = derive_coefficients(test::kSemiDegenerate);
  MixtureState s = test::uniform_state(g, 0.3, 0.3);
  const double bad = -1.0 / (coeffs.beta * test::kSemiDegenerate.d23);
  s.xi1[33] = bad;
  s.xi1[12] = bad;
  for (Backend be : {Backend::serial, Backend::openmp}) {
    std::vector<double> n1(41), n2(41);
    try {
      kernels::node_fluxes(test::kSemiDegenerate, coeffs, s.xi1.values,
                           s.xi2.values, g.dx(), FluxBoundary::outer_faces, n1,
                           n2, be);
      FAIL("expected SingularSystemError");
    } catch (const SingularSystemError& e) {
      CHECK(e.node() == 12);
    }
  }
}

TEST_CASE("kernels reject mismatched spans") {
  std::vector<double> a(5), b(4);
  CHECK_THROWS_AS(kernels::forward_difference(a, 0.1, b, Backend::serial),
                  ValidationError);
  CHECK_THROWS_AS(kernels::conservative_update(a, a, 0.1, 0.1, b, Backend::openmp),
                  ValidationError);
}

TEST_CASE("backend and boundary names round-trip") {
  for (Backend b : {Backend::serial, Backend::openmp}) {
    CHECK(parse_backend(to_string(b)) == b);
  }
  for (FluxBoundary b : {FluxBoundary::outer_faces, FluxBoundary::end_nodes}) {
    CHECK(parse_flux_boundary(to_string(b)) == b);
  }
  CHECK_THROWS_AS(parse_backend("cuda"), ValidationError);
  CHECK_THROWS_AS(parse_flux_boundary("periodic"), ValidationError);
}
