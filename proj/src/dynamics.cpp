#include "cantordiff/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace cantordiff {

namespace {

Rational signed_power(Arity arity, std::ptrdiff_t exponent, bool negative) {
  BigInt p = 1;
  for (std::ptrdiff_t i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) p *= arity.base();
  Rational r = exponent >= 0 ? Rational(p) : Rational(BigInt(1), p);
  return negative ? Rational(-r) : r;
}

Rational rule_slope(Arity arity, const Rule& r) {
  return signed_power(arity, static_cast<std::ptrdiff_t>(r.domain.size()) -
                                 static_cast<std::ptrdiff_t>(r.range.size()),
                      r.flip);
}

// Solution s of s = t . c^flip(s): t^inf, or (t c(t))^inf when flipped.
Word fixed_tail_period(Arity arity, const Word& t, bool flip) {
  if (!flip) return t;
  return concat(t, flipped(arity, t, true));
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t lcm_of(const std::vector<std::int64_t>& xs) {
  std::int64_t l = 1;
  for (auto x : xs) l = std::lcm(l, x);
  return l;
}

}  // namespace

Rational derivative_at(const Element& g, const Address& x) {
  return rule_slope(g.arity(), g.rules()[g.rule_index(x)]);
}

bool FixedSet::contains(const Address& x) const {
  if (contains_address(clopen_part, x)) return true;
  return std::any_of(isolated.begin(), isolated.end(), [&](const auto& p) { return p.point == x; });
}

bool same_points(const FixedSet& a, const FixedSet& b) {
  // A nonempty clopen set is infinite, so C1 u I1 = C2 u I2 with finite I's
  // forces C1 = C2 and then I1 = I2.
  if (a.clopen_part != b.clopen_part || a.isolated.size() != b.isolated.size()) return false;
  for (std::size_t i = 0; i < a.isolated.size(); ++i) {
    if (a.isolated[i].point != b.isolated[i].point) return false;
  }
  return true;
}

bool points_subset(const FixedSet& a, const FixedSet& b) {
  if (!is_subset(a.clopen_part, b.clopen_part)) return false;
  return std::all_of(a.isolated.begin(), a.isolated.end(), [&](const auto& p) { return b.contains(p.point); });
}

std::optional<IsolatedFixedPoint> find_hyperbolic(const FixedSet& s) {
  for (const auto& p : s.isolated) {
    if (abs(p.derivative) != 1) return p;
  }
  return std::nullopt;
}

FixedSet fixed_points(const Element& g) {
  const Arity arity = g.arity();
  std::vector<Word> clopen;
  std::vector<IsolatedFixedPoint> isolated;
  for (const Rule& r : g.rules()) {
    const Rational slope = rule_slope(arity, r);
    if (r.domain == r.range) {
      if (!r.flip) {
        clopen.push_back(r.domain);
      } else if (arity.value() % 2 == 1) {
        // The complement fixes only the constant word of the middle digit.
        const auto mid = static_cast<Digit>((arity.value() - 1) / 2);
        isolated.push_back({Address(arity, r.domain, {mid}), slope});
      }
    } else if (is_prefix(r.domain, r.range)) {
      // u.s -> u.t.c^e(s): attracting point u.w.
      const Word t(r.range.begin() + static_cast<std::ptrdiff_t>(r.domain.size()), r.range.end());
      isolated.push_back({Address(arity, r.domain, fixed_tail_period(arity, t, r.flip)), slope});
    } else if (is_prefix(r.range, r.domain)) {
      // v.t.s -> v.c^e(s): repelling point, the attracting point of the inverse rule.
      const Word t(r.domain.begin() + static_cast<std::ptrdiff_t>(r.range.size()), r.domain.end());
      isolated.push_back({Address(arity, r.range, fixed_tail_period(arity, t, r.flip)), slope});
    }
  }
  std::sort(isolated.begin(), isolated.end(),
            [](const auto& a, const auto& b) { return compare(a.point, b.point) < 0; });
  return FixedSet{ClopenSet(arity, std::move(clopen)), std::move(isolated)};
}

namespace {

// Periodic structure found so far while scanning g, g^2, g^3, ...
struct PeriodicScan {
  explicit PeriodicScan(Arity arity) : clopen(arity), attracting(arity), repelling(arity) {}

  ClopenSet clopen;
  // Trap cells of hyperbolic orbits: a cell U around an orbit point with
  // g^k(U) strictly inside U (attracting) or g^-k(U) strictly inside U
  // (repelling). No other periodic point can live in U.
  ClopenSet attracting;
  ClopenSet repelling;
  std::vector<Address> orbit_points;
  std::vector<std::int64_t> periods;

  bool known(const Address& x) const {
    return contains_address(clopen, x) || std::find(orbit_points.begin(), orbit_points.end(), x) != orbit_points.end();
  }

  void absorb(const Element& g, const Element& g_power, std::int64_t k, const FixedSet& fix) {
    if (!is_subset(fix.clopen_part, clopen)) {
      clopen = set_union(clopen, fix.clopen_part);
      periods.push_back(k);
    }
    for (const auto& p : fix.isolated) {
      if (abs(p.derivative) == 1 || known(p.point)) continue;
      Address y = p.point;
      do {
        orbit_points.push_back(y);
        y = apply(g, y);
      } while (y != p.point);
      periods.push_back(k);
      const Rule& r = g_power.rules()[g_power.rule_index(p.point)];
      if (r.range.size() > r.domain.size()) {
        attracting = set_union(attracting, ClopenSet(g.arity(), std::vector<Word>{r.domain}));
      } else {
        repelling = set_union(repelling, ClopenSet(g.arity(), std::vector<Word>{r.range}));
      }
    }
  }
};

// Grows the basins of the trap cells (backward images of attracting traps,
// forward images of repelling ones). True once the basins together with
// the periodic clopen part cover K_n: then every periodic point is already
// known, since a periodic point in a basin lies on the orbit of its trap.
bool basins_cover(const Element& g, const Element& g_inv, PeriodicScan& scan, int steps) {
  for (int i = 0;; ++i) {
    if (set_union(scan.clopen, set_union(scan.attracting, scan.repelling)).is_all()) return true;
    if (i == steps) return false;
    const ClopenSet a = set_union(scan.attracting, image(g_inv, scan.attracting));
    const ClopenSet r = set_union(scan.repelling, image(g, scan.repelling));
    if (a == scan.attracting && r == scan.repelling) return false;
    scan.attracting = a;
    scan.repelling = r;
  }
}

constexpr int kBasinSteps = 32;

}  // namespace

PeriodicSet periodic_points(const Element& g, const PowerLimits& limits) {
  const Element h = reduce(g);
  const Element h_inv = inverse(h);
  PeriodicScan scan(h.arity());
  Element p = Element::identity(h.arity());
  bool certified = false;
  for (std::int64_t k = 1; k <= limits.max_period && !certified; ++k) {
    p = compose(p, h, limits.max_depth);
    scan.absorb(h, p, k, fixed_points(p));
    certified = basins_cover(h, h_inv, scan, kBasinSteps);
  }

  const std::int64_t n = std::max<std::int64_t>(1, lcm_of(scan.periods));
  const Element pn = power(h, n, limits.max_depth);
  FixedSet fix = fixed_points(pn);
  // Belt and braces: the certified set must be exactly Fix(g^N), and stable.
  bool stable = certified && same_points(fix, fixed_points(compose(pn, pn, limits.max_depth)));
  stable = stable && fix.clopen_part == scan.clopen && fix.isolated.size() == scan.orbit_points.size();
  return PeriodicSet{n, std::move(fix), stable};
}

OrderResult order(const Element& g, const PowerLimits& limits) {
  const Element h = reduce(g);
  if (h.is_identity()) return FiniteOrder{1};

  try {
    // Scan g, g^2, ... for a hyperbolic fixed point; failing that, wait
    // until every point is seen to be periodic.
    ClopenSet periodic(h.arity());
    std::vector<std::int64_t> periods;
    Element p = Element::identity(h.arity());
    for (std::int64_t k = 1; k <= limits.max_period; ++k) {
      p = compose(p, h, limits.max_depth);
      const FixedSet fix = fixed_points(p);
      if (const auto w = find_hyperbolic(fix)) return InfiniteOrder{w->point, k, w->derivative};
      if (!is_subset(fix.clopen_part, periodic)) {
        periodic = set_union(periodic, fix.clopen_part);
        periods.push_back(k);
      }
      if (periodic.is_all()) {
        const std::int64_t n = lcm_of(periods);
        for (std::int64_t d : divisors(n)) {
          if (power(h, d, limits.max_depth).is_identity()) return FiniteOrder{d};
        }
        return UnknownOrder{"every point is periodic but g^" + std::to_string(n) + " is not the identity"};
      }
    }
    return UnknownOrder{"no hyperbolic fixed point in g^1..g^" + std::to_string(limits.max_period) +
                        " and not every point is periodic"};
  } catch (const DepthLimitExceeded& e) {
    return UnknownOrder{e.what()};
  }
}

}  // namespace cantordiff
