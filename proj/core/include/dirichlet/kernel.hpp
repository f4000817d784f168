#pragma once

namespace dirichlet {

/// Number of harmonics n of a Dirichlet kernel, 0 <= n <= 10^6.
class KernelOrder {
 public:
  static constexpr long long kMax = 1'000'000;

  /// Throws DomainError when n is out of range.
  explicit KernelOrder(long long n);

  int value() const noexcept { return n_; }

 private:
  int n_;
};

/// Below this |t mod 2pi| the closed form is replaced by its expansion.
inline constexpr double kKernelSingularityThreshold = 1e-6;

/// 1/2 + cos t + cos 2t + ... + cos nt, summed term by term
/// (compensated for n > 1000).
double cosine_sum(KernelOrder n, double t);

/// sin((n + 1/2) t) / (2 sin(t/2)). t is first reduced into [-pi, pi];
/// near the removable singularity at t = 0 (mod 2pi) the ratio is
/// evaluated from its expansion, giving n + 1/2 at t = 0.
double dirichlet_kernel(KernelOrder n, double t);

/// (1/pi) * integral of the kernel over [-pi, pi]; equals 1.
double kernel_mean(KernelOrder n, double rel_tol = 1e-12);

}  // namespace dirichlet
