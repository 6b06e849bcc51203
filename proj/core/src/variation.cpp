#include "bernstein/variation.hpp"

#include <algorithm>
#include <limits>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

void require_sorted(const std::vector<Rational>& grid, const Rational& lo, const Rational& hi) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < lo || hi < grid[i]) throw DomainError("grid point " + grid[i].str() + " lies outside the range");
    if (i > 0 && !(grid[i - 1] < grid[i])) throw DomainError("grid must be strictly increasing");
  }
}

Rational exact_variation(const GalleryFn& f) {
  if (const auto* t = f.thomae()) return thomae_truncated_variation(*t, Rational(1));
  const auto p = as_piecewise(f);
  if (!p) throw DomainError("exact variation needs a piecewise or Thomae-type function");
  const ExactVariation v = piecewise_variation(*p, Rational(1));
  if (!v.exact) throw NeedsBreakpointsError("variation has an irrational turning point");
  return v.value;
}

}  // namespace

VariationEntry variation(const GalleryFn& f, const Rational& y, const std::vector<Rational>& grid) {
  if (!(y.sign() > 0) || y > Rational(1)) throw DomainError("variation endpoint must lie in (0,1]");
  require_sorted(grid, Rational(0), y);
  if (const auto p = as_piecewise(f)) {
    const bool all_breakpoints = std::all_of(p->breakpoints().begin(), p->breakpoints().end(), [&](const Rational& b) {
      return y < b || b.is_zero() || b == y || std::binary_search(grid.begin(), grid.end(), b);
    });
    if (all_breakpoints) {
      const ExactVariation v = piecewise_variation(*p, y);
      if (v.exact) return {y, v.value, VariationFlag::Exact};
    }
  }
  std::vector<Rational> nodes;
  if (grid.empty() || !grid.front().is_zero()) nodes.emplace_back(0);
  nodes.insert(nodes.end(), grid.begin(), grid.end());
  if (nodes.back() != y) nodes.push_back(y);
  Rational total;
  Rational prev = eval(f, nodes.front());
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    Rational cur = eval(f, nodes[i]);
    total += abs(cur - prev);
    prev = std::move(cur);
  }
  return {y, total, VariationFlag::LowerBound};
}

VariationProfile variation_profile(const GalleryFn& f, const std::vector<Rational>& nodes) {
  require_sorted(nodes, Rational(0), Rational(1));
  VariationProfile out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.nodes.push_back(nodes[i]);
    if (nodes[i].is_zero()) {
      out.cumulative.emplace_back(0);
      continue;
    }
    const std::vector<Rational> grid(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(i + 1));
    const VariationEntry e = variation(f, nodes[i], grid);
    out.cumulative.push_back(e.value);
    if (e.flag == VariationFlag::LowerBound) out.flag = VariationFlag::LowerBound;
  }
  return out;
}

std::pair<PiecewiseFn, PiecewiseFn> jordan_decompose(const GalleryFn& f) {
  const auto p = as_piecewise(f);
  if (!p) throw DomainError("Jordan decomposition needs a piecewise function");
  const auto& bps = p->breakpoints();
  // Refine every piece at its turning points so that each new piece is monotone.
  std::vector<Rational> nodes{bps.front()};
  std::vector<BreakpointData> data;
  std::vector<Polynomial> g_pieces;
  Rational v;  // V_0^{current node}
  auto push_node = [&](const BreakpointData& fd) {
    BreakpointData gd;
    if (fd.left_limit) {
      gd.left_limit = v;
      v += abs(fd.value - *fd.left_limit);
    }
    gd.value = v;
    if (fd.right_limit) gd.right_limit = v + abs(*fd.right_limit - fd.value);
    data.push_back(gd);
  };
  push_node(p->point_data()[0]);
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const Polynomial& piece = p->pieces()[i];
    const CriticalPoints cps = critical_points(piece, bps[i], bps[i + 1]);
    if (!cps.exact) throw NeedsBreakpointsError("piece " + std::to_string(i) + " has an irrational turning point");
    std::vector<Rational> cuts{bps[i]};
    cuts.insert(cuts.end(), cps.points.begin(), cps.points.end());
    cuts.push_back(bps[i + 1]);
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      // Value of g just right of cuts[j].
      v = *data.back().right_limit;
      const Rational start = piece(cuts[j]);
      const int s = (piece(cuts[j + 1]) - start).sign();
      Polynomial gp = Polynomial::constant(v);
      if (s != 0) gp = gp + Rational(s) * (piece - Polynomial::constant(start));
      v += abs(piece(cuts[j + 1]) - start);
      g_pieces.push_back(gp);
      nodes.push_back(cuts[j + 1]);
      if (j + 2 < cuts.size()) {
        data.push_back(BreakpointData{v, v, v});
      } else {
        push_node(p->point_data()[i + 1]);
      }
    }
  }
  PiecewiseFn g = PiecewiseFn::from_parts(std::move(nodes), std::move(g_pieces), std::move(data));
  PiecewiseFn h = PiecewiseFn::combine(Rational(1), g, Rational(-1), *p);
  return {std::move(g), std::move(h)};
}

bool nondecreasing_on(const GalleryFn& f, const std::vector<Rational>& points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (eval(f, points[i]) < eval(f, points[i - 1])) return false;
  }
  return true;
}

std::vector<std::size_t> helly_select(const std::vector<GalleryFn>& fs, const std::vector<Rational>& grid,
                                      const Rational& tol) {
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
  std::vector<std::size_t> survivors(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) survivors[i] = i;
  for (const auto& x : grid) {
    std::vector<Rational> values;
    for (std::size_t i : survivors) values.push_back(eval(fs[i], x));
    if (values.empty()) break;
    Rational lo = *std::min_element(values.begin(), values.end());
    Rational hi = *std::max_element(values.begin(), values.end());
    while (!(hi - lo < tol)) {
      const Rational mid = (lo + hi) / Rational(2);
      std::vector<std::size_t> lower, upper;
      std::vector<Rational> lower_v, upper_v;
      for (std::size_t j = 0; j < survivors.size(); ++j) {
        if (values[j] <= mid) {
          lower.push_back(survivors[j]);
          lower_v.push_back(values[j]);
        } else {
          upper.push_back(survivors[j]);
          upper_v.push_back(values[j]);
        }
      }
      const bool keep_lower =
          lower.size() > upper.size() ||
          (lower.size() == upper.size() && !lower.empty() && lower.front() < upper.front());
      if (keep_lower) {
        survivors = std::move(lower);
        values = std::move(lower_v);
        hi = mid;
      } else {
        survivors = std::move(upper);
        values = std::move(upper_v);
        lo = mid;
      }
    }
  }
  if (survivors.size() < 3) {
    throw InconclusiveError("fewer than three functions agree within tol on the grid", survivors);
  }
  return survivors;
}

std::vector<std::uint64_t> helly_witness(const std::vector<GalleryFn>& fs) {
  std::vector<std::uint64_t> out;
  for (const auto& f : fs) {
    const Rational v = exact_variation(f);
    const BigInt fl = v.floor();
    if (!fl.fits_ulong_p()) throw CapacityError("variation " + v.str() + " exceeds the index budget");
    const std::uint64_t g = fl.get_ui();
    if (v < Rational(g) || Rational(g) + Rational(1) < v) {
      throw ConsistencyError("floor sandwich failed for variation " + v.str());
    }
    out.push_back(g);
  }
  return out;
}

Rational riemann_sum(const GalleryFn& f, const Rational& mesh, TagRule rule) {
  if (mesh.sign() <= 0) throw DomainError("mesh must be positive");
  std::vector<Rational> candidates_all;
  std::optional<PiecewiseFn> pw;
  if (rule == TagRule::AdversarialMaxOsc) {
    if (f.dirichlet()) {
      candidates_all = f.dirichlet()->designated();
    } else {
      candidates_all = singular_points(f);
      pw = as_piecewise(f);
      if (pw) {
        const auto& bps = pw->breakpoints();
        for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
          const CriticalPoints cps = critical_points(pw->pieces()[i], bps[i], bps[i + 1]);
          candidates_all.insert(candidates_all.end(), cps.points.begin(), cps.points.end());
        }
      }
    }
    std::sort(candidates_all.begin(), candidates_all.end());
  }
  Rational total;
  for (Rational a(0); a < Rational(1); a += mesh) {
    const Rational b = min(a + mesh, Rational(1));
    Rational tag;
    switch (rule) {
      case TagRule::LeftEndpoint:
        tag = a;
        break;
      case TagRule::Midpoint:
        tag = (a + b) / Rational(2);
        break;
      case TagRule::AdversarialMaxOsc: {
        tag = a;
        Rational best = abs(eval(f, a));
        auto consider = [&](const Rational& t) {
          const Rational v = abs(eval(f, t));
          if (best < v) {
            best = v;
            tag = t;
          }
        };
        for (auto it = std::lower_bound(candidates_all.begin(), candidates_all.end(), a);
             it != candidates_all.end() && *it <= b; ++it) {
          consider(*it);
        }
        consider(b);
        break;
      }
    }
    total += eval(f, tag) * (b - a);
  }
  return total;
}

}  // namespace bernstein
