#pragma once

// Derivatives, fixed and periodic points, and element order.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cantordiff/element.hpp"

namespace cantordiff {

/// On the covering rule (u, v, flip) an element is affine with slope
/// (-1)^flip (2n-1)^(|u|-|v|).
Rational derivative_at(const Element& g, const Address& x);

struct IsolatedFixedPoint {
  Address point;
  Rational derivative;

  friend bool operator==(const IsolatedFixedPoint&, const IsolatedFixedPoint&) = default;
};

/// Fix(g) split into a clopen part (fixed pointwise, derivative 1) and
/// finitely many isolated points sorted along the line.
struct FixedSet {
  ClopenSet clopen_part;
  std::vector<IsolatedFixedPoint> isolated;

  bool empty() const noexcept { return clopen_part.empty() && isolated.empty(); }
  bool contains(const Address& x) const;
  friend bool operator==(const FixedSet&, const FixedSet&) = default;
};

/// Equality of the underlying point sets, ignoring derivatives.
bool same_points(const FixedSet& a, const FixedSet& b);
/// Point-set inclusion, ignoring derivatives.
bool points_subset(const FixedSet& a, const FixedSet& b);

/// Exact fixed-point set, solved rule by rule in closed form.
FixedSet fixed_points(const Element& g);

struct PeriodicSet {
  std::int64_t stabilizing_power;
  FixedSet set;
  bool stabilized = false;
};

/// Limits for the power computations behind periodic_points and order.
struct PowerLimits {
  /// Highest power g^k scanned.
  std::int64_t max_period = 256;
  std::size_t max_depth = 4096;
};

/// Per(g) as Fix(g^N). Scans g, g^2, ... collecting the periodic clopen
/// part and the hyperbolic periodic orbits, each with a trap cell. The scan
/// stops once the basins of the trap cells and the periodic clopen part
/// cover K_n, which proves nothing periodic is missing. N is the lcm of the
/// periods found; Fix(g^N) = Fix(g^2N) is checked on top. stabilized is
/// false if max_period is reached first. Throws DepthLimitExceeded.
PeriodicSet periodic_points(const Element& g, const PowerLimits& limits = {});

struct FiniteOrder {
  std::int64_t order;
};

struct InfiniteOrder {
  Address witness;
  /// The power of g for which `witness` is a hyperbolic fixed point.
  std::int64_t power;
  Rational derivative;
};

struct UnknownOrder {
  std::string reason;
};

using OrderResult = std::variant<FiniteOrder, InfiniteOrder, UnknownOrder>;

/// Infinite as soon as some g^k (k <= max_period) has a hyperbolic fixed
/// point, Finite once every point is seen to be periodic, else an honest
/// Unknown.
OrderResult order(const Element& g, const PowerLimits& limits = {});

/// First isolated fixed point with |derivative| != 1, if any.
std::optional<IsolatedFixedPoint> find_hyperbolic(const FixedSet& s);

}  // namespace cantordiff
