#pragma once

#include <vector>

#include "cw/hecke.hpp"
#include "cw/reps.hpp"

namespace cw {

// c(t) = prod (1 - q^{-1} t^{-a}) / (1 - t^{-a}) over positive coroots a.
Complex c_value(double q, Complex t1, Complex t2);
// c1(u) = (1 - q^{-3/2} u^{-1}) / (1 - q^{1/2} u^{-1}).
Complex c1_value(double q, Complex u);
// 1/|c(t)|^2 on the torus, evaluated without dividing by d(t).
double principal_density(double q, Complex t1, Complex t2);
double induced_density(double q, Complex u);

// Quadrature node k of N on the unit circle: exp(2 pi i (k + 1/2) / N).
Complex circle_node(int k, int N);

struct PlancherelWeights {
  double torus;   // 1 / (6 q^3)
  double circle;  // (q-1)^2 / (q^2 (q^2-1))
  double atom;    // (q-1)^3 / (q^3-1)
};
PlancherelWeights plancherel_weights(double q);

struct TraceEstimate {
  Complex value;
  double abs_err_estimate = 0.0;  // |value(N) - value(N/2)|
  int N = 0;
};

// Tr(h) through the three-component Plancherel measure with an N x N torus grid.
std::vector<Complex> plancherel_traces(const HeckeAlgebra& algebra, const std::vector<HeckeElement>& hs,
                                       int N);
TraceEstimate plancherel_trace(const HeckeAlgebra& algebra, const HeckeElement& h, int N = 256);

// Sum of t^{-mu} Tr(x^mu h) over mu = sigma - (a, b) with 0 <= a, b <= depth, where sigma - Q+
// contains every mu with Tr(x^mu h) != 0 (sigma = 0 for h = 1).
Complex F_series(const HeckeAlgebra& algebra, const HeckeElement& h, Complex t1, Complex t2, int depth);
// Majorant of the omitted terms from |Tr(x_v)| <= 2^{l(v)} q_v^{1/2}; infinite where that majorant diverges.
double F_series_tail_bound(const HeckeAlgebra& algebra, const HeckeElement& h, Complex t1, Complex t2, int depth);

// F_t(1) = 1/(q^3 c(t) c(t^{-1})).
Complex F_closed_one(double q, Complex t1, Complex t2);
// F_t(1_0) = 1/(W0(q) c(t^{-1})) for the idempotent 1_0.
Complex F_closed_symmetrizer(double q, Complex t1, Complex t2);

// f_t(h): the tau_e coefficient of h at t.
Complex f_t(const HeckeAlgebra& algebra, const HeckeElement& h, Complex t1, Complex t2);

// Tr(p 1_0) = (1 / (6 q^3)) * integral of p(t) / (c(t) c(t^{-1})) over the torus, p symmetric.
Complex central_trace_integral(const HeckeAlgebra& algebra, const HeckeElement& p, int N = 256);

// Tr(h) as the integral of f_t(h) F_t(1) over the torus of radius r < 1/q.
TraceEstimate series_trace(const HeckeAlgebra& algebra, const HeckeElement& h, double r, int N = 48);

}  // namespace cw
