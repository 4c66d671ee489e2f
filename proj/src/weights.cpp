#include "bergkern/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bergkern {

double TabulatedRadialWeight::value(double r) const {
  if (radii.empty()) return 0.0;
  if (r <= radii.front()) return densities.front();
  if (r >= radii.back()) return densities.back();
  const auto it = std::upper_bound(radii.begin(), radii.end(), r);
  const size_t hi = static_cast<size_t>(it - radii.begin());
  const size_t lo = hi - 1;
  const double t = (r - radii[lo]) / (radii[hi] - radii[lo]);
  const double lw = (1.0 - t) * std::log(densities[lo]) + t * std::log(densities[hi]);
  return std::exp(lw);
}

std::string RadialWeightSpec::family_name() const {
  if (as_ml()) return "mittag_leffler";
  if (as_truncated()) return "truncated_disk";
  return "tabulated";
}

double weight_value(const RadialWeightSpec& spec, double r) {
  if (r < 0.0) throw std::domain_error("weight_value: negative radius");
  if (!spec.domain.contains_radius(r))
    throw std::domain_error("weight_value: radius outside the weight's domain");
  if (const auto* ml = spec.as_ml()) {
    // IEEE semantics give the limit at r = 0: pow(0,n<0) = +inf, pow(0,0) = 1.
    return std::pow(r, ml->n) * std::exp(-ml->alpha * std::pow(r, 2.0 * ml->m)) / (2.0 * kPi);
  }
  if (const auto* td = spec.as_truncated()) {
    return std::min(td->q, 1.0 / (r * r));  // r = 0 -> 1/0 = inf -> q
  }
  return spec.as_tabulated()->value(r);
}

ValidationReport validate(const RadialWeightSpec& spec) {
  ValidationReport rep;
  rep.valid = true;
  auto fail = [&rep](const std::string& msg) {
    rep.valid = false;
    rep.failures.push_back(msg);
  };

  if (spec.domain.kind == DomainKind::Disk && !(spec.domain.radius > 0.0))
    fail("disk domain requires radius > 0");

  if (const auto* ml = spec.as_ml()) {
    if (!(ml->n > -2.0)) fail("mittag_leffler requires n > -2 (moment W_0 divergent at 0)");
    if (!(ml->alpha > 0.0)) fail("mittag_leffler requires alpha > 0");
    if (!(ml->m > 0.0)) fail("mittag_leffler requires m > 0");
    if (rep.valid) {
      rep.c = ml->n > 0.0 ? 1.0 / ml->n : 1.0;
      rep.integer_m = ml->integer_m();
      if (rep.integer_m)
        rep.warnings.push_back(
            "m is an integer: the infinitely-many-zeros guarantee does not apply");
    }
  } else if (const auto* td = spec.as_truncated()) {
    if (!(td->q >= 1.0)) fail("truncated_disk requires q >= 1");
    if (spec.domain.kind != DomainKind::Disk || spec.domain.radius != 1.0)
      fail("truncated_disk is defined on the unit disk");
    rep.c = 1.0;  // nu_q >= 1 on the disk, so nu_q^-1 is bounded
  } else {
    const auto* tab = spec.as_tabulated();
    if (tab->radii.size() != tab->densities.size() || tab->radii.empty())
      fail("tabulated weight needs matching, nonempty radius/density lists");
    for (size_t i = 0; i + 1 < tab->radii.size(); ++i)
      if (!(tab->radii[i] < tab->radii[i + 1])) {
        fail("tabulated radii must be strictly increasing");
        break;
      }
    if (!tab->radii.empty() && tab->radii.front() < 0.0) fail("tabulated radii must be >= 0");
    for (double w : tab->densities)
      if (!(w > 0.0) || !std::isfinite(w)) {
        fail("tabulated densities must be strictly positive and finite");
        break;
      }
    if (spec.domain.kind == DomainKind::Plane)
      fail("tabulated weights require a disk domain (no decay certificate at infinity)");
    rep.c = 1.0;
  }
  return rep;
}

void require_valid(const RadialWeightSpec& spec) {
  const ValidationReport rep = validate(spec);
  if (rep.valid) return;
  std::ostringstream os;
  os << "invalid weight spec:";
  for (const auto& f : rep.failures) os << " " << f << ";";
  throw ValidationError(os.str());
}

}  // namespace bergkern
