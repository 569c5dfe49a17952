#include "bsurf/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "bsurf/error.hpp"
#include "bsurf/parallel.hpp"

namespace bsurf {

namespace {

constexpr double kSnap = 1e-4;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Fibers over the critical values, snapped onto the critical points.
std::vector<std::vector<Complex>> critical_fibers(const BlaschkeProduct& f) {
  std::vector<std::vector<Complex>> groups;
  if (f.degree() < 2) return groups;
  const auto crit = critical_points(f);
  for (Complex w : critical_values(f)) {
    std::vector<Complex> pts;
    for (Complex p : fiber(f, w)) {
      for (Complex c : crit)
        if (std::abs(p - c) < kSnap) p = c;
      pts.push_back(p);
    }
    groups.push_back(distinct_points(pts, kSnap));
  }
  return groups;
}

// (p(x) - p(y)) / (x - y) and its partial derivatives.
struct DividedDifference {
  Complex value, dx, dy;
};

DividedDifference divided(const Polynomial& p, Complex x, Complex y) {
  const Polynomial qy = p.deflate(y);
  const Polynomial qx = p.deflate(x);
  return {qy(x), qy.derivative()(x), qx.derivative()(y)};
}

std::optional<CollidingPair> polish_pair(const BlaschkeProduct& f, const Polynomial& n,
                                         const Polynomial& d, const Polynomial& g1, Complex x,
                                         Complex y) {
  const Polynomial dn = n.derivative(), dd = d.derivative();
  for (int it = 0; it < 40; ++it) {
    const auto nn = divided(n, x, y), dq = divided(d, x, y), gg = divided(g1, x, y);
    const Complex e1 = d(y) * nn.value - n(y) * dq.value;
    const Complex e2 = gg.value;
    const Complex j11 = d(y) * nn.dx - n(y) * dq.dx;
    const Complex j12 = dd(y) * nn.value + d(y) * nn.dy - dn(y) * dq.value - n(y) * dq.dy;
    const Complex j21 = gg.dx, j22 = gg.dy;
    const Complex det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-300) return std::nullopt;
    const Complex sx = (e1 * j22 - e2 * j12) / det;
    const Complex sy = (j11 * e2 - j21 * e1) / det;
    x -= sx;
    y -= sy;
    if (!std::isfinite(std::abs(x)) || !std::isfinite(std::abs(y)) || std::abs(x) > 1e3 ||
        std::abs(y) > 1e3)
      return std::nullopt;
    if (std::abs(sx) + std::abs(sy) < 1e-15 * (1.0 + std::abs(x) + std::abs(y))) break;
  }
  if (!(std::abs(x - y) > 1e-6)) return std::nullopt;
  const Complex fx = f(x), fy = f(y);
  if (!(std::abs(fx) <= 1.0 + 1e-9) || !(std::abs(fx - fy) < 1e-9)) return std::nullopt;
  if (!(std::abs(g1(x) - g1(y)) < 1e-9 * std::max(1.0, g1.max_abs_coeff()))) return std::nullopt;
  return CollidingPair{fx, x, y};
}

std::vector<Complex> arc_samples(const std::vector<Complex>& vertices, int n) {
  std::vector<double> cum{0.0};
  for (std::size_t i = 1; i < vertices.size(); ++i)
    cum.push_back(cum.back() + std::abs(vertices[i] - vertices[i - 1]));
  std::vector<Complex> out;
  std::size_t seg = 1;
  for (int s = 0; s < n; ++s) {
    const double t = cum.back() * s / (n - 1);
    while (seg + 1 < vertices.size() && cum[seg] < t) ++seg;
    const double len = cum[seg] - cum[seg - 1];
    const double u = len > 0 ? (t - cum[seg - 1]) / len : 0.0;
    out.push_back(vertices[seg - 1] + u * (vertices[seg] - vertices[seg - 1]));
  }
  return out;
}

// Moves `outer` towards `inner` until it lies in |z| <= radius.
Complex clip_towards(Complex outer, Complex inner, double radius) {
  if (std::abs(outer) <= radius) return outer;
  if (std::abs(inner) >= radius) return inner;
  double lo = 0.0, hi = 1.0;  // parameter from inner to outer
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::abs(inner + mid * (outer - inner)) <= radius ? lo : hi) = mid;
  }
  return inner + lo * (outer - inner);
}

std::vector<Complex> arc_vertices(std::vector<Complex> z) {
  std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  if (z.size() == 1) return {clip_towards(z[0] - 0.05, z[0], 0.95), clip_towards(z[0] + 0.05, z[0], 0.95)};
  const Complex d0 = (z[1] - z[0]) / std::abs(z[1] - z[0]);
  const Complex d1 = (z.back() - z[z.size() - 2]) / std::abs(z.back() - z[z.size() - 2]);
  std::vector<Complex> v;
  v.push_back(clip_towards(z.front() - 0.05 * d0, z.front(), 0.95));
  v.insert(v.end(), z.begin(), z.end());
  v.push_back(clip_towards(z.back() + 0.05 * d1, z.back(), 0.95));
  return v;
}

double distance_to(const std::vector<Complex>& set, Complex a) {
  double d = kInf;
  for (Complex s : set) d = std::min(d, std::abs(a - s));
  return d;
}

// Least-squares polynomial of degree <= deg through (z_s, w_s), expanded in z.
Polynomial fit_polynomial(const std::vector<Complex>& z, const std::vector<Complex>& w, int deg,
                          Complex center, double scale) {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(z.size()), deg + 1);
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(z.size()));
  for (std::size_t s = 0; s < z.size(); ++s) {
    const Complex u = (z[s] - center) / scale;
    Complex p = 1.0;
    for (int k = 0; k <= deg; ++k, p *= u) m(static_cast<Eigen::Index>(s), k) = p;
    rhs(static_cast<Eigen::Index>(s)) = w[s];
  }
  const Eigen::VectorXcd c = m.colPivHouseholderQr().solve(rhs);
  // sum c_k ((z - center) / scale)^k
  Polynomial out;
  const Polynomial u{-center / scale, 1.0 / scale};
  Polynomial power = Polynomial::constant(1.0);
  for (int k = 0; k <= deg; ++k) {
    out += power * c(k);
    power = power * u;
  }
  return out;
}

struct Candidate {
  Polynomial alpha;
  int degree = 0;
  double arc_margin = 0.0;
};

}  // namespace

std::vector<Complex> critical_fiber_points(const BlaschkeProduct& f) {
  std::vector<Complex> all;
  for (const auto& g : critical_fibers(f)) all.insert(all.end(), g.begin(), g.end());
  return distinct_points(all, kSnap);
}

void check_g1(const BlaschkeProduct& f, const Polynomial& g1) {
  const Polynomial dg1 = g1.derivative();
  for (const auto& group : critical_fibers(f)) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (!(std::abs(dg1(group[i])) > kSeparationFloor))
        throw Error(ErrorCode::G1Invalid, "g1' vanishes on a critical fiber");
      for (std::size_t j = i + 1; j < group.size(); ++j)
        if (!(std::abs(g1(group[i]) - g1(group[j])) > kSeparationFloor))
          throw Error(ErrorCode::G1Invalid, "g1 does not separate a critical fiber");
    }
  }
}

std::vector<CollidingPair> colliding_pairs(const BlaschkeProduct& f, const Polynomial& g1) {
  if (f.degree() < 2 || g1.degree() < 2) return {};
  const Polynomial n = f.numerator(), d = f.denominator();

  constexpr int kRadii = 24, kAngles = 48;
  std::vector<Complex> seeds{0.0};
  for (int i = 1; i <= kRadii; ++i)
    for (int j = 0; j < kAngles; ++j)
      seeds.push_back(std::polar(static_cast<double>(i) / kRadii,
                                 2.0 * std::numbers::pi * (j + 0.5 * (i % 2)) / kAngles));

  std::vector<std::vector<CollidingPair>> found(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t s) {
    const auto pts = fiber(f, seeds[s]);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (auto p = polish_pair(f, n, d, g1, pts[i], pts[j])) found[s].push_back(*p);
  });

  std::vector<CollidingPair> out;
  for (const auto& list : found)
    for (const auto& p : list) {
      const bool dup = std::any_of(out.begin(), out.end(), [&](const CollidingPair& q) {
        return (std::abs(p.x - q.x) < 1e-8 && std::abs(p.y - q.y) < 1e-8) ||
               (std::abs(p.x - q.y) < 1e-8 && std::abs(p.y - q.x) < 1e-8);
      });
      if (!dup) out.push_back(p);
    }
  return out;
}

Polynomial build_g2(const BlaschkeProduct& f, const Polynomial& g1) {
  check_g1(f, g1);
  Polynomial base = Polynomial::constant(1.0);
  for (Complex c : critical_fiber_points(f)) base = base * Polynomial{-c, 1.0} * Polynomial{-c, 1.0};
  const auto pairs = colliding_pairs(f, g1);

  auto separates = [&](const Polynomial& g2) {
    return std::all_of(pairs.begin(), pairs.end(), [&](const CollidingPair& p) {
      return std::abs(g2(p.x) - g2(p.y)) > kSeparationFloor;
    });
  };
  for (int k = 0; k <= f.degree() + 2; ++k) {
    if (const Polynomial g2 = Polynomial::monomial(k) * base; separates(g2)) return g2;
    for (int j = 0; j < k; ++j)
      if (const Polynomial g2 = (Polynomial::monomial(k) + Polynomial::monomial(j)) * base;
          separates(g2))
        return g2;
  }
  throw Error(ErrorCode::SeparationImpossible,
              "no q of degree <= " + std::to_string(f.degree() + 2) + " separates the " +
                  std::to_string(pairs.size()) + " colliding fibers");
}

SeparatingData make_separating_data(BlaschkeProduct f, Polynomial g1, Polynomial g2) {
  check_g1(f, g1);
  SeparatingData data{std::move(f), std::move(g1), std::move(g2), {}, {}};
  if (data.f.degree() >= 2) data.critical_values = critical_values(data.f);
  data.critical_fiber = critical_fiber_points(data.f);
  const double scale = std::max(1.0, data.g2.max_abs_coeff());
  const Polynomial dg2 = data.g2.derivative();
  for (Complex c : data.critical_fiber)
    if (std::abs(data.g2(c)) > 1e-9 * scale || std::abs(dg2(c)) > 1e-9 * scale)
      throw Error(ErrorCode::G2Invalid, "g2 does not vanish to second order on f^-1(Z)");
  return data;
}

std::vector<Complex> SigmaVariety::fiber_points(Complex z) const {
  return distinct_points(bsurf::fiber(data_.f, z), kFiberCluster);
}

std::vector<Complex> SigmaVariety::fiber(Complex z) const {
  const auto pts = fiber_points(z);
  std::vector<Complex> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Complex d1 = data_.g1(pts[i]) - data_.g1(pts[j]);
      const Complex d2 = data_.g2(pts[j]) - data_.g2(pts[i]);
      if (std::abs(d2) > 1e-10) {
        out.push_back(d1 / d2);
      } else if (std::abs(d1) < 1e-10) {
        throw Error(ErrorCode::SeparationViolated, "g1 and g2 both fail to separate a fiber");
      }
    }
  return distinct_points(out, 1e-9);
}

double SigmaVariety::distance(Complex z, Complex a) const { return distance_to(fiber(z), a); }

bool SigmaVariety::separates(Complex z, Complex a, double tol) const {
  const auto pts = fiber_points(z);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Complex gi = data_.g1(pts[i]) + a * data_.g2(pts[i]);
      const Complex gj = data_.g1(pts[j]) + a * data_.g2(pts[j]);
      if (!(std::abs(gi - gj) > tol)) return false;
    }
  return true;
}

std::vector<Complex> sigma_fiber(const SigmaVariety& v, Complex z) {
  if (!(std::abs(z) <= 1.0 + 1e-12)) throw Error(ErrorCode::InvalidArgument, "|z| > 1");
  return v.fiber(z);
}

std::vector<Complex> disc_grid(const RoundDisc& disc, double h) {
  if (!(h > 0)) throw Error(ErrorCode::InvalidArgument, "grid spacing must be positive");
  const int n = static_cast<int>(std::floor(disc.radius / h));
  std::vector<Complex> out;
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j) {
      const Complex off(i * h, j * h);
      const Complex p = disc.center + off;
      if (std::abs(off) <= disc.radius && std::abs(p) <= 1.0) out.push_back(p);
    }
  return out;
}

double avoidance_margin(const SigmaVariety& v, const Polynomial& alpha,
                        const std::vector<Complex>& zs) {
  std::vector<double> d(zs.size());
  parallel_for(zs.size(), [&](std::size_t i) { d[i] = v.distance(zs[i], alpha(zs[i])); });
  return d.empty() ? kInf : *std::min_element(d.begin(), d.end());
}

AlphaChoice choose_alpha(const SigmaVariety& v) {
  AlphaChoice out;
  auto trivial = [&] {
    out.alpha = Polynomial{};
    out.sigma_empty = true;
    out.margin = kInf;
    out.arc_margin = kInf;
    out.d0 = {0.0, 1.0};
    out.grid_spacing = 0.04;
    out.region = disc_grid(out.d0, out.grid_spacing);
    return out;
  };
  if (v.degree() < 2) return trivial();

  out.arc_vertices = arc_vertices(v.data().critical_values);
  out.arc = arc_samples(out.arc_vertices, kArcSamples);
  std::vector<std::vector<Complex>> arc_sigma(out.arc.size());
  parallel_for(out.arc.size(), [&](std::size_t s) { arc_sigma[s] = v.fiber(out.arc[s]); });

  {
    std::vector<Complex> probe;
    for (int i = 0; i < 50; ++i)
      for (int j = 0; j < 50; ++j) {
        const Complex z(-1.0 + 2.0 * (i + 0.5) / 50, -1.0 + 2.0 * (j + 0.5) / 50);
        if (std::abs(z) <= 1.0) probe.push_back(z);
      }
    std::vector<char> empty(probe.size());
    parallel_for(probe.size(), [&](std::size_t i) { empty[i] = v.fiber(probe[i]).empty(); });
    const bool arc_empty = std::all_of(arc_sigma.begin(), arc_sigma.end(),
                                       [](const auto& s) { return s.empty(); });
    if (arc_empty && std::all_of(empty.begin(), empty.end(), [](char e) { return e != 0; }))
      return trivial();
  }

  std::vector<Complex> values;
  for (int i = 0; i <= 80; ++i)
    for (int j = 0; j <= 80; ++j) values.emplace_back(-2.0 + 0.05 * i, -2.0 + 0.05 * j);

  std::vector<Complex> greedy(out.arc.size());
  Complex prev = 0.0;
  for (std::size_t s = 0; s < out.arc.size(); ++s) {
    Complex best = prev;
    double best_d = -1.0;
    if (!arc_sigma[s].empty()) {
      for (Complex val : values) {
        const double dv = distance_to(arc_sigma[s], val);
        if (dv > best_d + 1e-12 ||
            (std::abs(dv - best_d) <= 1e-12 && std::abs(val - prev) < std::abs(best - prev))) {
          best_d = dv;
          best = val;
        }
      }
    }
    greedy[s] = prev = best;
  }
  std::vector<Complex> smooth(greedy.size());
  for (std::size_t s = 0; s < greedy.size(); ++s) {
    const std::size_t lo = s >= 8 ? s - 8 : 0, hi = std::min(greedy.size() - 1, s + 8);
    Complex acc = 0.0;
    for (std::size_t t = lo; t <= hi; ++t) acc += greedy[t];
    smooth[s] = acc / static_cast<double>(hi - lo + 1);
  }

  double half_extent = 0.0;
  const Complex mid = arc_samples(out.arc_vertices, 3)[1];
  for (Complex z : out.arc) half_extent = std::max(half_extent, std::abs(z - mid));

  std::vector<Candidate> candidates;
  for (int deg : {0, 1, 2, 4, kMaxAlphaDegree})
    candidates.push_back({fit_polynomial(out.arc, smooth, deg, mid, std::max(half_extent, 1e-3)), deg, 0.0});
  {
    Complex best = 0.0;
    double best_d = -1.0;
    for (Complex val : values) {
      double dv = kInf;
      for (const auto& sig : arc_sigma) dv = std::min(dv, distance_to(sig, val));
      if (dv > best_d + 1e-12) {
        best_d = dv;
        best = val;
      }
    }
    candidates.push_back({Polynomial::constant(best), 0, 0.0});
  }
  std::erase_if(candidates, [&](Candidate& c) {
    c.arc_margin = kInf;
    for (std::size_t s = 0; s < out.arc.size(); ++s)
      c.arc_margin = std::min(c.arc_margin, distance_to(arc_sigma[s], c.alpha(out.arc[s])));
    return !(c.arc_margin > 0.0);
  });
  if (candidates.empty())
    throw Error(ErrorCode::NoAvoidingGraph, "no candidate alpha avoids Sigma along the arc");

  double delta = 0.1;
  for (int attempt = 0; attempt <= 4; ++attempt, delta *= 0.5) {
    const double h = delta / 4.0;
    const RoundDisc hull{mid, half_extent + delta};
    const auto grid = disc_grid(hull, h);
    std::vector<std::vector<Complex>> grid_sigma(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { grid_sigma[i] = v.fiber(grid[i]); });

    std::vector<std::size_t> inner;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (std::abs(grid[i] - mid) <= half_extent) inner.push_back(i);

    std::vector<Candidate> pool = candidates;
    {
      std::vector<double> score(values.size(), kInf);
      parallel_for(values.size(), [&](std::size_t k) {
        for (std::size_t i : inner) score[k] = std::min(score[k], distance_to(grid_sigma[i], values[k]));
        for (const auto& sig : arc_sigma) score[k] = std::min(score[k], distance_to(sig, values[k]));
      });
      const auto best = static_cast<std::size_t>(std::max_element(score.begin(), score.end()) - score.begin());
      if (score[best] > 0.0) pool.push_back({Polynomial::constant(values[best]), 0, score[best]});
    }

    struct Scored {
      std::size_t candidate;
      double margin;
      RoundDisc disc;
      std::vector<Complex> region;
    };
    std::vector<Scored> scored;
    for (std::size_t ci = 0; ci < pool.size(); ++ci) {
      const Candidate& c = pool[ci];
      std::vector<double> m(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i)
        m[i] = distance_to(grid_sigma[i], c.alpha(grid[i]));
      double disc_margin = c.arc_margin;
      for (std::size_t i : inner) disc_margin = std::min(disc_margin, m[i]);
      if (!(disc_margin > 0.0)) continue;
      const double threshold = std::isinf(disc_margin) ? 0.0 : 0.5 * disc_margin;
      double r = std::min(hull.radius, 1.0 - std::abs(mid));
      for (std::size_t i = 0; i < grid.size(); ++i)
        if (!(m[i] > threshold)) r = std::min(r, std::abs(grid[i] - mid));
      r -= h;
      if (r < half_extent) continue;
      Scored sc{ci, kInf, {mid, r}, {}};
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (m[i] > threshold) sc.region.push_back(grid[i]);
        if (std::abs(grid[i] - mid) <= r) sc.margin = std::min(sc.margin, m[i]);
      }
      scored.push_back(std::move(sc));
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const Scored& a, const Scored& b) { return a.margin > b.margin; });
    for (auto& sc : scored) {
      const Candidate& c = pool[sc.candidate];
      if (!std::isinf(sc.margin) &&
          !(avoidance_margin(v, c.alpha, disc_grid(sc.disc, h / 4.0)) > 0.5 * sc.margin))
        continue;
      out.alpha = c.alpha;
      out.fit_degree = c.degree;
      out.arc_margin = c.arc_margin;
      out.region = std::move(sc.region);
      out.grid_spacing = h;
      out.tube_radius = delta;
      out.d0 = sc.disc;
      out.margin = sc.margin;
      return out;
    }
  }
  throw Error(ErrorCode::NoRoundDisc, "no round disc around the arc fits inside V");
}

EmbeddingReport assemble_embedding(const SigmaVariety& v, const Polynomial& alpha,
                                   const RoundDisc& d0, std::uint64_t seed, int pairs) {
  if (!(d0.radius > 0) || !(std::abs(d0.center) + d0.radius <= 1.0 + 1e-12))
    throw Error(ErrorCode::InvalidArgument, "D0 must be a disc inside the closed unit disc");
  const auto& data = v.data();
  const Polynomial dg1 = data.g1.derivative(), dg2 = data.g2.derivative(), da = alpha.derivative();
  auto sigma = [&](Complex z) { return (z - d0.center) / d0.radius; };
  auto g = [&](Complex x) { return data.g1(x) + alpha(data.f(x)) * data.g2(x); };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  constexpr int kBase = 1000;
  std::vector<Complex> base(kBase);
  for (auto& z : base)
    z = d0.center + std::polar(d0.radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
  std::vector<std::vector<Complex>> groups(base.size());
  parallel_for(base.size(), [&](std::size_t i) { groups[i] = v.fiber_points(base[i]); });

  std::vector<Complex> pts;
  std::vector<std::pair<std::size_t, std::size_t>> pair_idx;
  for (const auto& grp : groups) {
    const std::size_t first = pts.size();
    pts.insert(pts.end(), grp.begin(), grp.end());
    for (std::size_t i = first; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) pair_idx.emplace_back(i, j);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int p = 0; p < pairs; ++p) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) j = (j + 1) % pts.size();
    pair_idx.emplace_back(i, j);
  }

  EmbeddingReport rep;
  rep.samples = static_cast<int>(pts.size());
  rep.pairs = static_cast<int>(pair_idx.size());

  std::vector<Complex> f1(pts.size()), f2(pts.size());
  std::vector<double> imm(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const Complex x = pts[i], fx = data.f(x), dfx = data.f.derivative(x);
    f1[i] = sigma(fx);
    f2[i] = g(x);
    const Complex dgx = dg1(x) + da(fx) * dfx * data.g2(x) + alpha(fx) * dg2(x);
    imm[i] = std::hypot(std::abs(dfx / d0.radius), std::abs(dgx));
  });
  std::vector<double> dist(pair_idx.size()), ratio(pair_idx.size());
  parallel_for(pair_idx.size(), [&](std::size_t k) {
    const auto [i, j] = pair_idx[k];
    dist[k] = std::hypot(std::abs(f1[i] - f1[j]), std::abs(f2[i] - f2[j]));
    ratio[k] = dist[k] / std::max(std::abs(pts[i] - pts[j]), 1e-300);
  });
  const auto worst = static_cast<std::size_t>(std::min_element(ratio.begin(), ratio.end()) - ratio.begin());
  rep.min_separation_ratio = ratio[worst];
  rep.min_image_distance = *std::min_element(dist.begin(), dist.end());
  rep.worst_x = pts[pair_idx[worst].first];
  rep.worst_y = pts[pair_idx[worst].second];
  rep.min_immersion_norm = *std::min_element(imm.begin(), imm.end());

  constexpr int kBoundary = 256;
  std::vector<double> dev(kBoundary);
  parallel_for(dev.size(), [&](std::size_t k) {
    const Complex w = d0.center + std::polar(d0.radius, 2.0 * std::numbers::pi * k / kBoundary);
    double m = 0.0;
    for (Complex x : bsurf::fiber(data.f, w)) m = std::max(m, std::abs(std::abs(sigma(data.f(x))) - 1.0));
    dev[k] = m;
  });
  rep.max_boundary_deviation = *std::max_element(dev.begin(), dev.end());

  if (!(rep.min_separation_ratio > kInjectivityFloor) || !(rep.min_image_distance > 0.0)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "F' collapses x = (%.6g, %.6g), y = (%.6g, %.6g)",
                  rep.worst_x.real(), rep.worst_x.imag(), rep.worst_y.real(), rep.worst_y.imag());
    throw Error(ErrorCode::InjectivityFailure, buf);
  }
  if (!(rep.min_immersion_norm > 0.0))
    throw Error(ErrorCode::InjectivityFailure, "dF' vanishes at a sample");
  return rep;
}

}  // namespace bsurf
