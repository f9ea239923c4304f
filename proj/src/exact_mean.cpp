#include "dtwmean/exact_mean.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <unordered_map>

#include "dtwmean/dtw.hpp"

namespace dtwmean {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double tie_tol(double a, double b) {
  return std::max(1e-12, 1e-9 * std::max(std::fabs(a), std::fabs(b)));
}

bool series_close(const TimeSeries& a, const TimeSeries& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i] - b[i]) > 1e-9) return false;
  }
  return true;
}

void push_unique(std::vector<TimeSeries>& out, TimeSeries z) {
  for (const auto& m : out) {
    if (series_close(m, z)) return;
  }
  out.push_back(std::move(z));
}

void check_budget(const Sample& s, const EdpOptions& opts, std::size_t layers) {
  double cells = 1.0;
  double work = 1.0;
  for (const auto& x : s.series) {
    double n = static_cast<double>(x.size());
    cells *= n;
    work *= n * (n + 1.0) / 2.0;
  }
  work *= static_cast<double>(layers);
  if (cells > static_cast<double>(opts.max_cells) || work > static_cast<double>(opts.max_work)) {
    char buf[224];
    std::snprintf(buf, sizeof buf,
                  "edp instance too large: %.4g table cells, estimated work %.4g "
                  "(limits %llu cells, %llu work)",
                  cells, work, static_cast<unsigned long long>(opts.max_cells),
                  static_cast<unsigned long long>(opts.max_work));
    throw ResourceError(buf);
  }
}

struct Grid {
  std::size_t k = 0;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> stride;  // last index fastest
  std::size_t cells = 1;

  explicit Grid(const Sample& s) {
    k = s.size();
    dims.resize(k);
    for (std::size_t j = 0; j < k; ++j) dims[j] = s.series[j].size();
    stride.assign(k, 1);
    for (std::size_t j = k; j-- > 1;) stride[j - 1] = stride[j] * dims[j];
    cells = stride[0] * dims[0];
  }

  std::size_t lin(std::span<const std::size_t> idx) const {
    std::size_t v = 0;
    for (std::size_t j = 0; j < k; ++j) v += (idx[j] - 1) * stride[j];
    return v;
  }

  // Lexicographic odometer over [1..hi_j]; false once past the last tuple.
  static bool advance(std::vector<std::size_t>& idx, std::span<const std::size_t> hi) {
    for (std::size_t j = idx.size(); j-- > 0;) {
      if (idx[j] < hi[j]) {
        ++idx[j];
        std::fill(idx.begin() + static_cast<std::ptrdiff_t>(j) + 1, idx.end(), 1);
        return true;
      }
    }
    return false;
  }
};

// Weighted prefix sums so one segment-stat evaluation costs O(k).
struct Prefix {
  std::vector<std::vector<double>> ws1, ws2;
  std::vector<double> w;

  explicit Prefix(const Sample& s) {
    const std::size_t k = s.size();
    w = s.weights;
    ws1.resize(k);
    ws2.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      const auto& x = s.series[j];
      ws1[j].assign(x.size() + 1, 0.0);
      ws2[j].assign(x.size() + 1, 0.0);
      for (std::size_t t = 0; t < x.size(); ++t) {
        ws1[j][t + 1] = ws1[j][t] + w[j] * x[t];
        ws2[j][t + 1] = ws2[j][t] + w[j] * x[t] * x[t];
      }
    }
  }

  void stats(std::span<const std::size_t> lo, std::span<const std::size_t> hi, double& mu,
             double& sigma) const {
    double a = 0.0;
    double b = 0.0;
    double wn = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      a += ws1[j][hi[j]] - ws1[j][lo[j] - 1];
      b += ws2[j][hi[j]] - ws2[j][lo[j] - 1];
      wn += w[j] * static_cast<double>(hi[j] - lo[j] + 1);
    }
    mu = a / wn;
    sigma = std::max(0.0, b - a * a / wn);
  }
};

struct Tables {
  Grid grid;
  Prefix prefix;
  bool with_bp;
  std::vector<double> value;             // C[i...]
  std::vector<double> cstar;             // c*(l...) seen as a cell property
  std::vector<std::uint32_t> cstar_arg;  // lex-first argmin predecessor, k coords per cell
  std::vector<std::uint32_t> bp_ell;     // chosen segment starts, k coords per cell
  std::vector<double> bp_mu;

  Tables(const Sample& s, bool bp) : grid(s), prefix(s), with_bp(bp) {
    value.resize(grid.cells);
    cstar.resize(grid.cells);
    cstar_arg.resize(grid.cells * grid.k);
    if (with_bp) {
      bp_ell.resize(grid.cells * grid.k);
      bp_mu.resize(grid.cells);
    }
  }
};

// Predecessor tuples of `at`: every combination l'_j in {at_j - 1, at_j} with
// l'_j >= 1. Bit (k-1-j) of the mask keeps coordinate j; iterating the mask
// upwards walks the tuples in lexicographic order. `mask_limit` excludes the
// identity tuple (all kept) when a strict decrease is required.
template <typename Fn>
void for_each_pred(std::span<const std::size_t> at, std::vector<std::size_t>& pred,
                   bool require_decrease, Fn&& fn) {
  const std::size_t k = at.size();
  const unsigned full = (1u << k) - 1u;
  const unsigned mask_limit = require_decrease ? full : full + 1u;
  for (unsigned mask = 0; mask < mask_limit; ++mask) {
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j) {
      bool keep = (mask >> (k - 1 - j)) & 1u;
      std::size_t v = keep ? at[j] : at[j] - 1;
      if (v < 1) {
        ok = false;
        break;
      }
      pred[j] = v;
    }
    if (ok) fn(pred);
  }
}

void fill(Tables& t) {
  const Grid& g = t.grid;
  const std::size_t k = g.k;
  std::vector<std::size_t> idx(k, 1);
  std::vector<std::size_t> ell(k, 1);
  std::vector<std::size_t> pred(k);

  do {
    const std::size_t ci = g.lin(idx);

    double cb = kInf;
    std::uint32_t* carg = &t.cstar_arg[ci * k];
    for_each_pred(idx, pred, /*require_decrease=*/true, [&](const std::vector<std::size_t>& p) {
      double c = t.value[g.lin(p)];
      if (c < cb) {
        cb = c;
        for (std::size_t j = 0; j < k; ++j) carg[j] = static_cast<std::uint32_t>(p[j]);
      }
    });
    t.cstar[ci] = cb;

    double best = kInf;
    double best_mu = 0.0;
    std::fill(ell.begin(), ell.end(), 1);
    bool ell_is_all_ones = true;
    do {
      double mu, sigma;
      t.prefix.stats(ell, idx, mu, sigma);
      double base = ell_is_all_ones ? 0.0 : t.cstar[g.lin(ell)];
      double cand = base + sigma;
      if (cand < best) {
        best = cand;
        best_mu = mu;
        if (t.with_bp) {
          std::uint32_t* bell = &t.bp_ell[ci * k];
          for (std::size_t j = 0; j < k; ++j) bell[j] = static_cast<std::uint32_t>(ell[j]);
        }
      }
      ell_is_all_ones = false;
    } while (Grid::advance(ell, idx));

    t.value[ci] = best;
    if (t.with_bp) t.bp_mu[ci] = best_mu;
  } while (Grid::advance(idx, g.dims));
}

struct Segment {
  std::vector<std::size_t> lo, hi;
  double mu = 0.0;
};

MeanResult assemble(const Grid& g, const std::vector<Segment>& segs, double frechet) {
  MeanResult r;
  r.frechet = frechet;
  r.mean.reserve(segs.size());
  for (const auto& seg : segs) r.mean.push_back(seg.mu);
  std::vector<WarpingPath> paths(g.k);
  for (std::size_t j = 0; j < g.k; ++j) {
    paths[j].m = segs.size();
    paths[j].n = g.dims[j];
    for (std::size_t q = 0; q < segs.size(); ++q) {
      for (std::size_t tpos = segs[q].lo[j]; tpos <= segs[q].hi[j]; ++tpos) {
        paths[j].pairs.push_back({q + 1, tpos});
      }
    }
  }
  r.paths = std::move(paths);
  return r;
}

MeanResult reconstruct(const Tables& t) {
  const Grid& g = t.grid;
  const std::size_t k = g.k;
  std::vector<Segment> segs;
  std::vector<std::size_t> cur = g.dims;
  for (;;) {
    const std::size_t ci = g.lin(cur);
    Segment seg;
    seg.hi = cur;
    seg.lo.assign(k, 1);
    seg.mu = t.bp_mu[ci];
    const std::uint32_t* bell = &t.bp_ell[ci * k];
    bool all_ones = true;
    for (std::size_t j = 0; j < k; ++j) {
      seg.lo[j] = bell[j];
      all_ones = all_ones && bell[j] == 1;
    }
    segs.push_back(seg);
    if (all_ones) break;
    const std::uint32_t* parg = &t.cstar_arg[g.lin(segs.back().lo) * k];
    for (std::size_t j = 0; j < k; ++j) cur[j] = parg[j];
  }
  std::reverse(segs.begin(), segs.end());
  return assemble(g, segs, t.value[g.lin(g.dims)]);
}

}  // namespace

double frechet_value(const TimeSeries& z, const Sample& s) {
  require_series(z);
  require_sample(s);
  double f = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    f += s.weights[j] * dtw_sq(z, s.series[j]).sq_distance;
  }
  return f;
}

SegmentStats aligned_segment_stats(const Sample& s, std::span<const std::size_t> lo,
                                   std::span<const std::size_t> hi) {
  require_sample(s);
  const std::size_t k = s.size();
  if (lo.size() != k || hi.size() != k)
    throw std::invalid_argument("aligned_segment_stats: index spans must have one entry per series");
  double a = 0.0;
  double wn = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    if (lo[j] < 1 || lo[j] > hi[j] || hi[j] > s.series[j].size())
      throw std::invalid_argument("aligned_segment_stats: segment indices out of range");
    for (std::size_t tpos = lo[j]; tpos <= hi[j]; ++tpos) a += s.weights[j] * s.series[j][tpos - 1];
    wn += s.weights[j] * static_cast<double>(hi[j] - lo[j] + 1);
  }
  SegmentStats st;
  st.mu = a / wn;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t tpos = lo[j]; tpos <= hi[j]; ++tpos) {
      double d = s.series[j][tpos - 1] - st.mu;
      st.sigma += s.weights[j] * d * d;
    }
  }
  return st;
}

MeanResult edp_mean(const Sample& s, const EdpOptions& opts) {
  require_sample(s);
  check_budget(s, opts, 1);
  Tables t(s, /*bp=*/true);
  fill(t);
  return reconstruct(t);
}

DpTable edp_table(const Sample& s, const EdpOptions& opts) {
  require_sample(s);
  check_budget(s, opts, 1);
  Tables t(s, /*bp=*/false);
  fill(t);
  DpTable table;
  table.dims = t.grid.dims;
  table.values = std::move(t.value);
  return table;
}

double DpTable::value_at(std::span<const std::size_t> idx) const {
  if (idx.size() != dims.size()) throw std::invalid_argument("DpTable: index arity mismatch");
  std::size_t stride = 1;
  std::size_t v = 0;
  for (std::size_t j = dims.size(); j-- > 0;) {
    if (idx[j] < 1 || idx[j] > dims[j]) throw std::invalid_argument("DpTable: index out of range");
    v += (idx[j] - 1) * stride;
    stride *= dims[j];
  }
  return values[v];
}

std::vector<MeanResult> edp_all_means(const Sample& s, const EdpOptions& opts) {
  require_sample(s);
  check_budget(s, opts, 1);
  Tables t(s, /*bp=*/false);
  fill(t);
  const Grid& g = t.grid;
  const std::size_t k = g.k;

  std::unordered_map<std::size_t, std::vector<TimeSeries>> memo;
  auto collect = [&](auto&& self, const std::vector<std::size_t>& cell)
      -> const std::vector<TimeSeries>& {
    const std::size_t ci = g.lin(cell);
    if (auto it = memo.find(ci); it != memo.end()) return it->second;

    std::vector<TimeSeries> out;
    std::vector<std::size_t> ell(k, 1);
    std::vector<std::size_t> pred(k);
    bool ell_is_all_ones = true;
    do {
      double mu, sigma;
      t.prefix.stats(ell, cell, mu, sigma);
      double base = ell_is_all_ones ? 0.0 : t.cstar[g.lin(ell)];
      double cand = base + sigma;
      if (cand <= t.value[ci] + tie_tol(cand, t.value[ci])) {
        if (ell_is_all_ones) {
          push_unique(out, TimeSeries{mu});
        } else {
          const double cb = t.cstar[g.lin(ell)];
          for_each_pred(ell, pred, /*require_decrease=*/true,
                        [&](const std::vector<std::size_t>& p) {
                          double pv = t.value[g.lin(p)];
                          if (pv > cb + tie_tol(pv, cb)) return;
                          for (const TimeSeries& prefix_mean : self(self, p)) {
                            TimeSeries mz = prefix_mean;
                            mz.push_back(mu);
                            push_unique(out, std::move(mz));
                          }
                        });
        }
      }
      ell_is_all_ones = false;
    } while (Grid::advance(ell, cell));

    return memo.emplace(ci, std::move(out)).first->second;
  };

  const double f_star = t.value[g.lin(g.dims)];
  std::vector<MeanResult> result;
  for (const TimeSeries& z : collect(collect, g.dims)) {
    result.push_back(MeanResult{z, f_star, std::nullopt});
  }
  return result;
}

namespace {

// Layered fill for the fixed-length variant. The predecessor set additionally
// admits l'_j = l_j for every j: a length-q optimum may need redundant
// elements, so the strict-decrease rule of the unconstrained program is
// dropped between layers.
struct ConstrainedTables {
  Grid grid;
  Prefix prefix;
  std::size_t layers;
  bool with_bp;
  std::vector<double> value;             // layers * cells
  std::vector<double> pmin;              // rolling, current source layer
  std::vector<std::uint32_t> pmin_arg;   // layers * cells * k (when with_bp)
  std::vector<std::uint32_t> bp_ell;     // layers * cells * k (when with_bp)
  std::vector<double> bp_mu;             // layers * cells (when with_bp)

  ConstrainedTables(const Sample& s, std::size_t q, bool bp)
      : grid(s), prefix(s), layers(q), with_bp(bp) {
    value.resize(layers * grid.cells);
    pmin.resize(grid.cells);
    if (with_bp) {
      pmin_arg.resize(layers * grid.cells * grid.k);
      bp_ell.resize(layers * grid.cells * grid.k);
      bp_mu.resize(layers * grid.cells);
    }
  }
};

void fill_constrained(ConstrainedTables& t) {
  const Grid& g = t.grid;
  const std::size_t k = g.k;
  const std::size_t cells = g.cells;
  std::vector<std::size_t> idx(k, 1);
  std::vector<std::size_t> ell(k, 1);
  std::vector<std::size_t> pred(k);

  // layer 1: a single mean element aligned with the whole prefix
  std::vector<std::size_t> ones(k, 1);
  do {
    const std::size_t ci = g.lin(idx);
    double mu, sigma;
    t.prefix.stats(ones, idx, mu, sigma);
    t.value[ci] = sigma;
    if (t.with_bp) {
      for (std::size_t j = 0; j < k; ++j) t.bp_ell[ci * k + j] = 1;
      t.bp_mu[ci] = mu;
    }
  } while (Grid::advance(idx, g.dims));

  for (std::size_t layer = 1; layer < t.layers; ++layer) {
    const double* prev = &t.value[(layer - 1) * cells];
    double* curv = &t.value[layer * cells];

    // predecessor minima over the previous layer, identity tuple included
    std::fill(idx.begin(), idx.end(), 1);
    do {
      const std::size_t ci = g.lin(idx);
      double cb = kInf;
      for_each_pred(idx, pred, /*require_decrease=*/false,
                    [&](const std::vector<std::size_t>& p) {
                      double c = prev[g.lin(p)];
                      if (c < cb) {
                        cb = c;
                        if (t.with_bp) {
                          std::uint32_t* arg = &t.pmin_arg[((layer - 1) * cells + ci) * k];
                          for (std::size_t j = 0; j < k; ++j)
                            arg[j] = static_cast<std::uint32_t>(p[j]);
                        }
                      }
                    });
      t.pmin[ci] = cb;
    } while (Grid::advance(idx, g.dims));

    std::fill(idx.begin(), idx.end(), 1);
    do {
      const std::size_t ci = g.lin(idx);
      double best = kInf;
      double best_mu = 0.0;
      std::fill(ell.begin(), ell.end(), 1);
      do {
        double mu, sigma;
        t.prefix.stats(ell, idx, mu, sigma);
        double cand = t.pmin[g.lin(ell)] + sigma;
        if (cand < best) {
          best = cand;
          best_mu = mu;
          if (t.with_bp) {
            std::uint32_t* bell = &t.bp_ell[(layer * cells + ci) * k];
            for (std::size_t j = 0; j < k; ++j) bell[j] = static_cast<std::uint32_t>(ell[j]);
          }
        }
      } while (Grid::advance(ell, idx));
      curv[ci] = best;
      if (t.with_bp) t.bp_mu[layer * cells + ci] = best_mu;
    } while (Grid::advance(idx, g.dims));
  }
}

MeanResult reconstruct_constrained(const ConstrainedTables& t) {
  const Grid& g = t.grid;
  const std::size_t k = g.k;
  const std::size_t cells = g.cells;
  std::vector<Segment> segs;
  std::vector<std::size_t> cur = g.dims;
  std::size_t layer = t.layers - 1;
  for (;;) {
    const std::size_t ci = g.lin(cur);
    Segment seg;
    seg.hi = cur;
    seg.lo.assign(k, 1);
    seg.mu = t.bp_mu[layer * cells + ci];
    const std::uint32_t* bell = &t.bp_ell[(layer * cells + ci) * k];
    for (std::size_t j = 0; j < k; ++j) seg.lo[j] = bell[j];
    segs.push_back(seg);
    if (layer == 0) break;
    const std::uint32_t* parg = &t.pmin_arg[((layer - 1) * cells + g.lin(segs.back().lo)) * k];
    for (std::size_t j = 0; j < k; ++j) cur[j] = parg[j];
    --layer;
  }
  std::reverse(segs.begin(), segs.end());
  return assemble(g, segs, t.value[(t.layers - 1) * cells + g.lin(g.dims)]);
}

}  // namespace

MeanResult edp_mean_constrained(const Sample& s, std::size_t q, const EdpOptions& opts) {
  require_sample(s);
  if (q < 1) throw std::invalid_argument("constrained mean length must be at least 1");
  check_budget(s, opts, q);
  ConstrainedTables t(s, q, /*bp=*/true);
  fill_constrained(t);
  return reconstruct_constrained(t);
}

std::vector<double> edp_constrained_sweep(const Sample& s, std::size_t q_max,
                                          const EdpOptions& opts) {
  require_sample(s);
  if (q_max < 1) throw std::invalid_argument("sweep length must be at least 1");
  check_budget(s, opts, q_max);
  ConstrainedTables t(s, q_max, /*bp=*/false);
  fill_constrained(t);
  const std::size_t final_cell = t.grid.lin(t.grid.dims);
  std::vector<double> out(q_max);
  for (std::size_t r = 0; r < q_max; ++r) out[r] = t.value[r * t.grid.cells + final_cell];
  return out;
}

namespace {

double delannoy_path_count(std::size_t m, std::size_t n) {
  std::vector<double> row(n, 1.0);
  for (std::size_t i = 1; i < m; ++i) {
    double diag = row[0];  // previous row, column 0
    for (std::size_t j = 1; j < n; ++j) {
      double up = row[j];
      row[j] = row[j] + row[j - 1] + diag;
      diag = up;
    }
  }
  return row[n - 1];
}

struct SegmentTable {  // aligned ranges per mean index, for one path
  std::vector<std::uint32_t> lo, hi;
};

SegmentTable segments_of(const WarpingPath& p, std::size_t m) {
  SegmentTable seg;
  seg.lo.assign(m, 0);
  seg.hi.assign(m, 0);
  for (const auto& [i, tpos] : p.pairs) {
    if (seg.lo[i - 1] == 0) seg.lo[i - 1] = static_cast<std::uint32_t>(tpos);
    seg.hi[i - 1] = static_cast<std::uint32_t>(tpos);
  }
  return seg;
}

// Visits every alignment tuple: visitor(m, tuple of SegmentTable pointers, cost).
template <typename Fn>
void for_each_alignment(const Sample& s, std::size_t max_len, const Prefix& prefix, Fn&& visitor) {
  const std::size_t k = s.size();
  double total = 0.0;
  for (std::size_t m = 1; m <= max_len; ++m) {
    double tuples = 1.0;
    for (std::size_t j = 0; j < k; ++j) tuples *= delannoy_path_count(m, s.series[j].size());
    total += tuples;
  }
  if (total > 2e7) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "mean_brute: combinatorial budget exceeded (%.3g alignment tuples)", total);
    throw ResourceError(buf);
  }

  for (std::size_t m = 1; m <= max_len; ++m) {
    std::vector<std::vector<SegmentTable>> segs(k);
    for (std::size_t j = 0; j < k; ++j) {
      for_each_path(m, s.series[j].size(), [&](const WarpingPath& p) {
        segs[j].push_back(segments_of(p, m));
      });
    }
    std::vector<std::size_t> pick(k, 0);
    std::vector<const SegmentTable*> tuple(k);
    for (;;) {
      for (std::size_t j = 0; j < k; ++j) tuple[j] = &segs[j][pick[j]];
      double cost = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        double a = 0.0;
        double b = 0.0;
        double wn = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
          std::size_t lo = tuple[j]->lo[i];
          std::size_t hi = tuple[j]->hi[i];
          a += prefix.ws1[j][hi] - prefix.ws1[j][lo - 1];
          b += prefix.ws2[j][hi] - prefix.ws2[j][lo - 1];
          wn += prefix.w[j] * static_cast<double>(hi - lo + 1);
        }
        cost += std::max(0.0, b - a * a / wn);
      }
      visitor(m, tuple, cost);

      std::size_t j = k;
      while (j-- > 0) {
        if (++pick[j] < segs[j].size()) break;
        pick[j] = 0;
        if (j == 0) goto next_length;
      }
    }
  next_length:;
  }
}

TimeSeries mean_of_tuple(const Sample& s, const Prefix& prefix, std::size_t m,
                         const std::vector<const SegmentTable*>& tuple) {
  TimeSeries z(m);
  for (std::size_t i = 0; i < m; ++i) {
    double a = 0.0;
    double wn = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      std::size_t lo = tuple[j]->lo[i];
      std::size_t hi = tuple[j]->hi[i];
      a += prefix.ws1[j][hi] - prefix.ws1[j][lo - 1];
      wn += prefix.w[j] * static_cast<double>(hi - lo + 1);
    }
    z[i] = a / wn;
  }
  return z;
}

bool tuple_has_redundant_element(std::size_t m, const std::vector<const SegmentTable*>& tuple) {
  const std::size_t k = tuple.size();
  for (std::size_t i = 0; i < m; ++i) {
    bool redundant = true;
    for (std::size_t j = 0; j < k; ++j) {
      bool shares_left = i > 0 && tuple[j]->hi[i - 1] == tuple[j]->lo[i];
      bool shares_right = i + 1 < m && tuple[j]->lo[i + 1] == tuple[j]->hi[i];
      if (!shares_left && !shares_right) {
        redundant = false;
        break;
      }
    }
    if (redundant) return true;
  }
  return false;
}

}  // namespace

MeanResult mean_brute(const Sample& s, std::size_t max_len) {
  require_sample(s);
  if (max_len < 1) throw std::invalid_argument("mean_brute: max_len must be at least 1");
  Prefix prefix(s);
  double best = kInf;
  std::size_t best_m = 0;
  std::vector<SegmentTable> best_tuple;
  for_each_alignment(s, max_len, prefix,
                     [&](std::size_t m, const std::vector<const SegmentTable*>& tuple, double cost) {
                       if (cost < best) {
                         best = cost;
                         best_m = m;
                         best_tuple.clear();
                         for (const auto* t : tuple) best_tuple.push_back(*t);
                       }
                     });
  std::vector<const SegmentTable*> ptrs;
  for (const auto& t : best_tuple) ptrs.push_back(&t);
  MeanResult r;
  r.mean = mean_of_tuple(s, prefix, best_m, ptrs);
  r.frechet = best;
  return r;
}

std::vector<TimeSeries> mean_brute_all(const Sample& s, std::size_t max_len) {
  require_sample(s);
  Prefix prefix(s);
  double best = kInf;
  for_each_alignment(s, max_len, prefix,
                     [&](std::size_t, const std::vector<const SegmentTable*>&, double cost) {
                       best = std::min(best, cost);
                     });
  std::vector<TimeSeries> out;
  for_each_alignment(s, max_len, prefix,
                     [&](std::size_t m, const std::vector<const SegmentTable*>& tuple, double cost) {
                       if (cost > best + tie_tol(cost, best)) return;
                       if (tuple_has_redundant_element(m, tuple)) return;
                       push_unique(out, mean_of_tuple(s, prefix, m, tuple));
                     });
  return out;
}

}  // namespace dtwmean
