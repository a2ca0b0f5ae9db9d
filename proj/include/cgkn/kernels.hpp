#pragma once

#include <cstdint>

// Hot numeric loops shared by the tape and the inference paths. Every kernel
// has one code path run per row/window; the OpenMP variants parallelize over
// those independent units and reduce in a fixed chunk order, so results are
// bit-identical to the serial reference for any thread count.
namespace cgkn::kernels {

// Global switch between the OpenMP path and the serial reference path.
void set_parallel(bool enabled);
bool parallel_enabled();
int thread_count();

// Y = X * W^T + b. X: n x in, W: out x in (row-major), b: out, Y: n x out.
void affine_fwd(const double* x, const double* w, const double* b, double* y, int n, int in,
                int out);
// Accumulates dX += dY * W, dW += dY^T * X, db += column sums of dY.
// Null destination pointers skip that accumulation.
void affine_bwd(const double* x, const double* w, const double* dy, double* dx, double* dw,
                double* db, int n, int in, int out);

void relu_fwd(const double* x, double* y, int64_t n);
void relu_bwd(const double* x, const double* dy, double* dx, int64_t n);

// Batched matrix-vector product: y_r = A_r * x_r with A_r the r-th row of
// `a` viewed as an m x k matrix. `a` has either n rows or 1 row (broadcast).
void bmv_fwd(const double* a, const double* x, double* y, int n, int m, int k, bool broadcast_a);
void bmv_bwd(const double* a, const double* x, const double* dy, double* da, double* dx, int n,
             int m, int k, bool broadcast_a);

// sum over all entries of (x - y)^2; y may be null for plain sum of squares.
double sumsq_diff(const double* x, const double* y, int64_t n);
// dx += 2 * g * (x - y), and optionally dy -= 2 * g * (x - y).
void sumsq_diff_bwd(const double* x, const double* y, double g, double* dx, double* dy, int64_t n);

// One forward-Euler step of the conditional-Gaussian filter, batched over W
// independent windows.
//
// Layouts per window row:
//   mu_r:   [mu (dv) | R (dv*dv)]
//   in1:    [f1 (du1) | g1 (du1*dv)]      rows: W, or 1 broadcast
//   in2:    [f2 (dv)  | g2 (dv*dv)]       rows: W, or 1 broadcast
//   du:     observed increments / dt      rows: W x du1
// sig1: per-observed-dimension noise stds; q_diag = c^2 on the R update.
// The output row is [mu' | R'] with R' symmetrized and eigenvalue-floored at
// `floor`; an eigenvalue below `fail_below` throws. Returns the number of
// windows where the floor modified R'.
struct FilterStepSpec {
  int W = 1;
  int du1 = 0;
  int dv = 0;
  double h = 0.0;
  double c = 1.0;
  const double* sig1 = nullptr;
  double floor = 1e-10;
  double fail_below = -1e-6;
  bool broadcast_in1 = false;
  bool broadcast_in2 = false;
  int in_row_offset = 0;  // first row of in1/in2 used by this step
  bool detach_cov = false;
};
int filter_step_fwd(const FilterStepSpec& s, const double* mur, const double* in1,
                    const double* in2, const double* du, double* out);
void filter_step_bwd(const FilterStepSpec& s, const double* mur, const double* in1,
                     const double* in2, const double* du, const double* dout, double* dmur,
                     double* din1, double* din2);

// Local (banded, cyclic) variant for spatially homogeneous systems with S
// observed sites and J latent states per site (dv = S*J, du1 = S).
//
// Layouts per window row:
//   in1: per site s: [f1_s (1) | g1 row (3J)]   -> S*(1+3J) columns
//        g1 row s couples latent blocks of sites (s-1, s, s+1), cyclic.
//   in2: per site s: [f2 block (J) | g2 rows (J x 5J, row-major)]
//        g2 row-block s couples latent blocks of sites (s-2..s+2), cyclic.
// Broadcast rules as in the dense step (in2 with 1 row tiles every site and
// window from a single [J | J*5J] parameter row).
struct LocalFilterStepSpec {
  int W = 1;
  int S = 0;
  int J = 0;
  double h = 0.0;
  double c = 1.0;
  const double* sig1 = nullptr;  // length S
  double floor = 1e-10;
  double fail_below = -1e-6;
  bool broadcast_in2 = false;
  int in_row_offset = 0;
  bool detach_cov = false;
};
int local_filter_step_fwd(const LocalFilterStepSpec& s, const double* mur, const double* in1,
                          const double* in2, const double* du, double* out);
void local_filter_step_bwd(const LocalFilterStepSpec& s, const double* mur, const double* in1,
                           const double* in2, const double* du, const double* dout, double* dmur,
                           double* din1, double* din2);

// Banded drift for the local model: out row = [du1 (S) | dv (S*J)] with
// du1_s = f1_s + g1_s . v_band and dv = f2 + g2 v (banded products).
struct LocalDriftSpec {
  int W = 1;
  int S = 0;
  int J = 0;
  bool broadcast_in2 = false;
};
void local_drift_fwd(const LocalDriftSpec& s, const double* in1, const double* in2,
                     const double* v, double* out);
void local_drift_bwd(const LocalDriftSpec& s, const double* in1, const double* in2, const double* v,
                     const double* dout, double* din1, double* din2, double* dv);

}  // namespace cgkn::kernels
