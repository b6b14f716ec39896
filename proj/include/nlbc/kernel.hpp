#ifndef NLBC_KERNEL_HPP
#define NLBC_KERNEL_HPP

#include <functional>
#include <string>
#include <vector>

namespace nlbc {

enum class KernelTag { constant, linear, custom };

/*
 * Radial interaction profile w on [0,1], the dimensionless generator of the
 * horizon-scaled kernel
 *
 *     w_delta(x,y) = w(|x-y|/delta) / delta^3.
 *
 * Admissible profiles are nonnegative, compactly supported in [0,1],
 * nonincreasing and strictly positive on (0,1), and carry the moment
 * normalization  int_R w(|z|) z^2 dz = 2  so that the bulk operator is
 * consistent with -Laplacian.
 */
class KernelProfile {
 public:
  KernelProfile() = default;
  KernelProfile(std::function<double(double)> profile, double second_moment,
                KernelTag tag, bool singular_at_zero = false);

  // 0 for s >= 1 regardless of the wrapped callable.
  double operator()(double s) const;

  double second_moment() const { return second_moment_; }
  KernelTag tag() const { return tag_; }
  bool singular_at_zero() const { return singular_at_zero_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  std::function<double(double)> profile_;
  double second_moment_ = 0.0;
  KernelTag tag_ = KernelTag::custom;
  bool singular_at_zero_ = false;
  std::string name_ = "custom";
};

/* w_delta(r) = w(r/delta)/delta^3 on [0,delta], 0 beyond. */
class ScaledKernel {
 public:
  ScaledKernel(KernelProfile base, double delta);

  double eval(double r) const;
  double operator()(double r) const { return eval(r); }

  const KernelProfile& base() const { return base_; }
  double delta() const { return delta_; }

 private:
  KernelProfile base_;
  double delta_;
};

/* w(s) = 3 on [0,1]:  int_R 3 chi z^2 dz = 2 exactly. */
KernelProfile builtin_constant();

/* w(s) = 12 (1-s) on [0,1]. */
KernelProfile builtin_linear();

/*
 * Rescale a nonnegative compactly supported profile so its second moment
 * int_R w(|z|) z^2 dz equals 2. Moments are computed by adaptive
 * Gauss-Legendre quadrature at 1e-12 absolute tolerance.
 *
 * Throws ZeroMoment if the computed moment is <= 1e-14 and NegativeProfile
 * if any sampled value is negative.
 */
KernelProfile normalize(const std::function<double(double)>& profile,
                        KernelTag tag = KernelTag::custom);

/*
 * Radial lower-bound kernel rho for the symmetrized comparison kernel:
 * the constant built-in maps to
 *
 *     rho(s) = (3/2) s/(s+1) on [0,1],
 *
 * every other admissible profile to
 *
 *     rho(s) = (1/2) max( w(s) - 2 int_0^1 y w(y) dy, 0 ),
 *
 * supported on (0, sigma). rho is deliberately left unnormalized; it only
 * needs a positive finite second moment.
 */
struct LowerBoundProfile {
  std::function<double(double)> rho;
  double support;        // sigma: rho vanishes for s >= sigma
  double second_moment;  // int_R rho(|z|) z^2 dz

  double operator()(double s) const { return s >= support ? 0.0 : rho(s); }
  /* rho_delta(r) = rho(r/delta)/delta^3 */
  double scaled(double r, double delta) const;
};

/* Throws EmptySupport if rho vanishes identically (the construction does not
 * apply to the given kernel). */
LowerBoundProfile lower_bound_profile(const KernelProfile& k);

/*
 * Load a custom profile from a plain-text .kern table: two columns "s value",
 * strictly increasing s grid inside [0,1], '#' comments allowed. Values are
 * linearly interpolated and the result is moment-normalized.
 */
KernelProfile load_kernel_table(const std::string& path);

/* Resolve "constant" / "linear" / a .kern path. */
KernelProfile kernel_from_name(const std::string& name_or_path);

}  // namespace nlbc

#endif  // NLBC_KERNEL_HPP
