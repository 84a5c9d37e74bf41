// Writes the frozen regression constants header used by the test suite.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qzs/bilinear.hpp"
#include "qzs/corpora.hpp"

namespace {

constexpr std::uint64_t kCorpusSeed = 12345;
constexpr std::uint64_t kGnSeed = 7;
constexpr std::uint64_t kProductSeed = 11;
constexpr std::uint64_t kWaveRateSeed = 3;
constexpr std::uint64_t kResidualSeed = 5;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  const qzs::PropagatorParams bilinear_params{1.0, 1.0, 1.0};
  const qzs::PropagatorParams run_params{1.0, 1.0, 0.5};
  const qzs::CorpusResult corpus = qzs::bilinear_corpus(kCorpusSeed, {}, bilinear_params);

  std::ostringstream h;
  h << "#pragma once\n\n#include <cstdint>\n\n"
    << "// Written by qzs_calibrate. Rerun it only to refreeze deliberately.\n"
    << "namespace qzs::regression {\n\n"
    << "inline constexpr std::uint64_t kCorpusSeed = " << kCorpusSeed << "u;\n"
    << "inline constexpr std::uint64_t kGnSeed = " << kGnSeed << "u;\n"
    << "inline constexpr std::uint64_t kProductSeed = " << kProductSeed << "u;\n"
    << "inline constexpr std::uint64_t kWaveRateSeed = " << kWaveRateSeed << "u;\n"
    << "inline constexpr std::uint64_t kResidualSeed = " << kResidualSeed << "u;\n\n"
    << "inline constexpr double kBilinearSchrodingerMax = " << g17(corpus.max_schrodinger) << ";\n"
    << "inline constexpr double kBilinearWaveMax = " << g17(corpus.max_wave) << ";\n"
    << "inline constexpr double kGnCorpusMax = " << g17(qzs::gn_corpus_max(kGnSeed)) << ";\n"
    << "inline constexpr double kProductCorpusMax = "
    << g17(qzs::product_corpus_max(kProductSeed)) << ";\n"
    << "inline constexpr double kWaveRateMax = "
    << g17(qzs::wave_rate_probe_max(kWaveRateSeed, run_params)) << ";\n"
    << "inline constexpr double kUtRateMax = "
    << g17(qzs::ut_rate_probe_max(kWaveRateSeed, run_params)) << ";\n"
    << "inline constexpr double kNonsolutionResidual = "
    << g17(qzs::nonsolution_residual(kResidualSeed, run_params)) << ";\n\n"
    << "}  // namespace qzs::regression\n";

  if (argc > 1) {
    std::ofstream f(argv[1], std::ios::binary);
    f << h.str();
    if (!f) {
      std::cerr << "cannot write " << argv[1] << '\n';
      return 1;
    }
  } else {
    std::cout << h.str();
  }
  return 0;
}
