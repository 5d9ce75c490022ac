#pragma once

namespace renyivar {

// All numeric tolerances used by the library live here.
struct Tolerances {
  double equality = 1e-10;       // value-equality checks
  double normalization = 1e-12;  // probability vectors sum to one
  double balance = 1e-9;         // pair-measure marginal balance at construction
  double iid_certificate = 1e-9;     // i.i.d. attainment / one-sidedness
  double markov_certificate = 1e-8;  // Markov attainment / one-sidedness
  double dv_identity = 1e-12;
  double perron_residual = 1e-10;    // relative to the Perron root
  double perron_stop = 1e-14;        // successive Rayleigh quotients
  long perron_max_iterations = 1'000'000;
  double class_tie = 1e-12;          // log Perron roots closer than this tie
  double max_abs_alpha = 1e6;
  double alpha_exclusion = 1e-12;    // distance kept from 0 and 1
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace renyivar
