#include <doctest.h>

#include <cmath>

#include "qzs/bilinear.hpp"
#include "qzs/error.hpp"
#include "regression_constants.hpp"

using namespace qzs;

namespace {

const PropagatorParams kP{1.0, 1.0, 1.0};
const std::vector<long> kN{8, 16, 32, 64, 128};

SpacetimeField bump_field(const TorusGrid& g, int k, long j0, std::vector<cplx> v) {
  SpacetimeField f(g, 0.125);
  f.add(k, j0, v);
  return f;
}

std::pair<long, long> j_range(const SpacetimeField& f) {
  long lo = 1L << 40, hi = -(1L << 40);
  for (const auto& [k, segs] : f.segments())
    for (const TauSegment& s : segs) {
      lo = std::min(lo, s.j0);
      hi = std::max(hi, s.j_end() - 1);
    }
  return {lo, hi};
}

}  // namespace

TEST_CASE("vanishing factors give vanishing ratios") {
  const TorusGrid g(32);
  const SpacetimeField u = bump_field(g, 2, -40, {1.0, cplx(0.5, 0.5), 0.25});
  const SpacetimeField zero(g, 0.125);
  const ExponentPoint pt{};
  CHECK(bilinear_ratio_schrodinger(u, zero, pt, kP).lhs == 0.0);
  CHECK(bilinear_ratio_wave(u, zero, pt, kP).lhs == 0.0);
}

TEST_CASE("u conj u on one mode sits at k = 0 and is killed by D^rho") {
  const TorusGrid g(32);
  const SpacetimeField u = bump_field(g, 3, -90, {1.0, 2.0, cplx(0.0, 1.0)});
  const EstimateReport r = bilinear_ratio_wave(u, u, {}, kP);
  CHECK(r.lhs == 0.0);
  CHECK(r.rhs > 0.0);
}

TEST_CASE("reports agree with the norms they are built from") {
  const TorusGrid g(32);
  const SpacetimeField u = bump_field(g, 2, -24, {1.0, cplx(0.3, -0.2), 0.7});
  SpacetimeField n(g, 0.125);
  n.add(1, 10, std::vector<cplx>{0.4, 0.4});
  n.add(-1, -11, std::vector<cplx>{0.4, 0.4});
  const ExponentPoint pt{0.5, 0.25, 0.4, 0.5};
  const WeightKind S{DispersionKind::schrodinger, kP}, W{DispersionKind::wave, kP};
  const EstimateReport r = bilinear_ratio_schrodinger(u, n, pt, kP);
  const double lhs = xsb_norm(product(u, n), pt.s, -0.5, S).value;
  const double rhs = xsb_norm(u, pt.s, pt.b, S).value * xsb_norm(n, pt.l, 0.5, W).value +
                     xsb_norm(u, pt.s, 0.5, S).value * xsb_norm(n, pt.l, pt.b, W).value;
  CHECK(r.lhs == doctest::Approx(lhs).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(rhs).epsilon(1e-12));
  CHECK(r.ratio == doctest::Approx(lhs / rhs).epsilon(1e-12));
}

TEST_CASE("counterexample families sit where they should") {
  const long N = 16;
  const double dtau = 1.0 / 16.0;
  const double S = schrodinger_symbol(kP, double(N));
  for (int i = 1; i <= 8; ++i) {
    const SpacetimeField u = counterexample_family(i, FamilyMember::u, N, kP, dtau);
    CHECK(u.segments().size() == 1);
    const auto [lo, hi] = j_range(u);
    CHECK((hi - lo) * dtau <= 2.0 * kCounterexampleBumpRadius + 1e-12);
    if (i == 1 || i == 5) CHECK(std::abs(0.5 * (lo + hi) * dtau + S) <= dtau);
    if (i == 3 || i == 7) CHECK(u.segments().begin()->first == 0);
  }
  for (int i = 1; i <= 4; ++i) {
    const SpacetimeField n = counterexample_family(i, FamilyMember::n, N, kP, dtau);
    for (const auto& [k, segs] : n.segments()) CHECK(std::abs(k) == (i <= 2 ? 2 * N : N));
  }
  CHECK(counterexample_grid(N).contains(2 * N));
  CHECK_THROWS_AS(counterexample_family(5, FamilyMember::n, N, kP, dtau), Error);
  CHECK_THROWS_AS(counterexample_family(2, FamilyMember::v, N, kP, dtau), Error);
  CHECK_THROWS_AS(counterexample_family(9, FamilyMember::u, N, kP, dtau), Error);
  CHECK(counterexample_bump(0.4) == 1.0);
  CHECK(counterexample_bump(1.0) == 0.0);
}

TEST_CASE("necessity exponents") {
  SUBCASE("inside the admissible set nothing grows") {
    for (int pair = 1; pair <= 8; ++pair) {
      const EstimateReport r = necessity_scan(pair, {0.0, 0.0, 0.5, 0.5}, kP, kN);
      CHECK(r.fitted_exponent <= 0.05);
      CHECK(r.N_values.size() == kN.size());
    }
  }
  SUBCASE("l below -1 breaks the first two pairs") {
    for (int pair : {1, 2})
      CHECK(necessity_scan(pair, {0.0, -1.5, 0.5, 0.5}, kP, kN).fitted_exponent > 0.45);
  }
  SUBCASE("s - l above 2 breaks pairs three and four") {
    for (int pair : {3, 4})
      CHECK(necessity_scan(pair, {3.0, 0.0, 0.5, 0.5}, kP, kN).fitted_exponent > 0.9);
  }
  CHECK_THROWS_AS(necessity_scan(0, {}, kP, kN), Error);
  CHECK_THROWS_AS(necessity_scan(1, {}, kP, {8, 16, 32}), Error);
  CHECK_THROWS_AS(necessity_scan(1, {}, kP, {8, 16, 16, 32}), Error);
}

TEST_CASE("random corpus stays at its frozen maxima") {
  using namespace qzs::regression;
  const CorpusResult c = bilinear_corpus(kCorpusSeed, {}, kP, {}, 2);
  CHECK(c.schrodinger.size() == 200);
  CHECK(c.max_schrodinger <= 1.05 * kBilinearSchrodingerMax);
  CHECK(c.max_schrodinger >= 0.95 * kBilinearSchrodingerMax);
  CHECK(c.max_wave <= 1.05 * kBilinearWaveMax);
  CHECK(c.max_wave >= 0.95 * kBilinearWaveMax);
  for (const EstimateReport& r : c.wave) CHECK(r.ratio == doctest::Approx(r.lhs / r.rhs));
  const CorpusResult d = bilinear_corpus(kCorpusSeed, {}, kP, {}, 1);
  CHECK(d.max_schrodinger == c.max_schrodinger);
  CorpusConfig bad;
  bad.k_max = 40;
  CHECK_THROWS_AS(bilinear_corpus(1, {}, kP, bad), Error);
}
