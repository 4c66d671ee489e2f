#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bergkern/common.hpp"

namespace bergkern {

enum class DomainKind { Disk, Plane };

struct DomainSpec {
  DomainKind kind = DomainKind::Disk;
  double radius = 1.0;  // meaningful iff kind == Disk

  static DomainSpec disk(double radius) { return {DomainKind::Disk, radius}; }
  static DomainSpec plane() { return {DomainKind::Plane, 0.0}; }
  bool contains_radius(double r) const {
    return r >= 0.0 && (kind == DomainKind::Plane || r < radius);
  }
};

// W(z) = (1/2pi) |z|^n exp(-alpha |z|^2m). Non-integer m is what makes the
// kernel's zero set infinite; integer m is accepted (flagged) as the control.
struct MLWeightParams {
  double n = 0.0;
  double alpha = 1.0;
  double m = 0.5;
  bool integer_m() const {
    return std::abs(m - std::round(m)) <= 1e-12 * std::max(1.0, std::abs(m));
  }
};

// nu_q(r) = min(q, 1/r^2) on the unit disk (base weight 1, one variable).
struct TruncatedDiskWeightParams {
  double q = 1.0;
};

// Generic radial profile from samples; piecewise-linear in log-density
// between nodes, constant beyond the sampled range.
struct TabulatedRadialWeight {
  std::vector<double> radii;      // strictly increasing, nonnegative
  std::vector<double> densities;  // strictly positive
  double value(double r) const;
};

struct RadialWeightSpec {
  std::variant<MLWeightParams, TruncatedDiskWeightParams, TabulatedRadialWeight> family;
  DomainSpec domain;

  static RadialWeightSpec mittag_leffler(double n, double alpha, double m) {
    return {MLWeightParams{n, alpha, m}, DomainSpec::plane()};
  }
  static RadialWeightSpec truncated_disk(double q) {
    return {TruncatedDiskWeightParams{q}, DomainSpec::disk(1.0)};
  }
  static RadialWeightSpec tabulated(std::vector<double> radii, std::vector<double> densities,
                                    DomainSpec domain) {
    return {TabulatedRadialWeight{std::move(radii), std::move(densities)}, domain};
  }

  const MLWeightParams* as_ml() const { return std::get_if<MLWeightParams>(&family); }
  const TruncatedDiskWeightParams* as_truncated() const {
    return std::get_if<TruncatedDiskWeightParams>(&family);
  }
  const TabulatedRadialWeight* as_tabulated() const {
    return std::get_if<TabulatedRadialWeight>(&family);
  }
  std::string family_name() const;
};

struct ValidationReport {
  bool valid = false;
  double c = 1.0;          // exponent for which W^-c is locally integrable
  bool integer_m = false;  // zero-count guarantee void for the ML family
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
};

// Density at radius r. Returns +inf at r = 0 for ML weights with n < 0 (the
// weight is measurable, callers only integrate against it). Throws
// std::domain_error for r outside the domain.
double weight_value(const RadialWeightSpec& spec, double r);

ValidationReport validate(const RadialWeightSpec& spec);

// Throws ValidationError with the collected failures unless valid.
void require_valid(const RadialWeightSpec& spec);

}  // namespace bergkern
