/* SPDX-License-Identifier: Apache-2.0
 *
 * chain_dp.cpp -- maximal convex lattice chains.
 *
 * Primitive edge directions in the upper half plane are processed in order of
 * decreasing angle.  For each direction d every point relaxes its successors
 * q + k d (k >= 1); sources are visited so that a point updated in the current
 * direction class is never used as a source in the same class, which keeps
 * consecutive edges strictly turning.  Plain lengths are carried as certified
 * fixed-point intervals and near-ties are settled exactly.
 */
#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "chain_dp_internal.hpp"

namespace k3wall {

namespace {

using i128 = __int128;
constexpr unsigned kFrac = 100; /* fractional bits of the fixed-point lengths */

i128 to_i128(const Integer& z) {
  if (sgn(z) < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 126) throw std::overflow_error("fixed-point overflow");
  Integer hi = z >> 64;
  Integer lo = z - (hi << 64);
  return (static_cast<i128>(hi.get_ui()) << 64) | static_cast<i128>(lo.get_ui());
}

i128 cross(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
  return static_cast<i128>(ax) * by - static_cast<i128>(ay) * bx;
}

bool upper(std::int64_t x, std::int64_t y) { return y > 0 || (y == 0 && x < 0); }

/* Point set with row structure and a dense id grid over its bounding box. */
class ChainGraph {
 public:
  ChainGraph(const std::vector<GaussPoint>& allowed, const GaussPoint& target) {
    pts_ = allowed;
    std::sort(pts_.begin(), pts_.end(), [](const GaussPoint& u, const GaussPoint& v) {
      return u.b != v.b ? u.b < v.b : u.a < v.a;
    });
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    if (pts_.empty()) throw std::invalid_argument("empty point set");
    xmin_ = xmax_ = pts_[0].a;
    for (const auto& q : pts_) {
      xmin_ = std::min(xmin_, q.a);
      xmax_ = std::max(xmax_, q.a);
    }
    ymin_ = pts_.front().b;
    ymax_ = pts_.back().b;
    W_ = xmax_ - xmin_;
    H_ = ymax_ - ymin_;
    if ((W_ + 1) * (H_ + 1) > (std::int64_t(1) << 28)) throw std::length_error("point set bounding box too large");
    grid_.assign(static_cast<std::size_t>((W_ + 1) * (H_ + 1)), -1);
    row_begin_.assign(static_cast<std::size_t>(H_ + 2), 0);
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      grid_[cell(pts_[i].a, pts_[i].b)] = static_cast<std::int32_t>(i);
      row_begin_[static_cast<std::size_t>(pts_[i].b - ymin_ + 1)] = i + 1;
    }
    for (std::size_t r = 1; r < row_begin_.size(); ++r) row_begin_[r] = std::max(row_begin_[r], row_begin_[r - 1]);
    origin_ = id(0, 0);
    goal_ = id(target.a, target.b);
    if (origin_ < 0) throw std::invalid_argument("the origin is not in the allowed set");
    if (goal_ < 0) throw std::invalid_argument("the target is not in the allowed set");

    for (std::int64_t dy = 0; dy <= H_; ++dy)
      for (std::int64_t dx = -W_; dx <= W_; ++dx) {
        if (!upper(dx, dy)) continue;
        if (std::gcd(dx < 0 ? -dx : dx, dy) != 1) continue;
        dirs_.push_back(GaussPoint{dx, dy});
      }
    /* decreasing angle: u before v iff v x u > 0 */
    std::sort(dirs_.begin(), dirs_.end(),
              [](const GaussPoint& u, const GaussPoint& v) { return cross(v.a, v.b, u.a, u.b) > 0; });
    rank_.assign(vec_count(), 0);
    for (std::size_t r = 0; r < dirs_.size(); ++r) rank_[vec_index(dirs_[r].a, dirs_[r].b)] = static_cast<std::uint32_t>(r);
  }

  const std::vector<GaussPoint>& points() const { return pts_; }
  /* Rank of the direction of a nonzero upper vector. */
  std::size_t rank_of(std::int64_t ex, std::int64_t ey) const {
    const std::int64_t g = std::gcd(ex < 0 ? -ex : ex, ey);
    return rank_[vec_index(ex / g, ey / g)];
  }
  int origin() const { return origin_; }
  int goal() const { return goal_; }
  std::int64_t width() const { return W_; }
  std::int64_t height() const { return H_; }
  std::size_t vec_count() const { return static_cast<std::size_t>((2 * W_ + 1) * (H_ + 1)); }
  std::size_t vec_index(std::int64_t ex, std::int64_t ey) const {
    return static_cast<std::size_t>(ey * (2 * W_ + 1) + (ex + W_));
  }
  std::size_t row_begin(std::int64_t y) const { return row_begin_[static_cast<std::size_t>(y - ymin_)]; }
  std::size_t row_end(std::int64_t y) const { return row_begin_[static_cast<std::size_t>(y - ymin_ + 1)]; }

  int id(std::int64_t x, std::int64_t y) const {
    if (x < xmin_ || x > xmax_ || y < ymin_ || y > ymax_) return -1;
    return grid_[cell(x, y)];
  }

  /* Visits (source, target, ex, ey) edges direction class by direction class
   * in decreasing angle; `f` may update the target.  `stop(rank)` is polled
   * once per class, rank being the index of the class in that order. */
  template <class F, class S>
  bool forward(F&& f, S&& stop) const {
    for (std::size_t rank = 0; rank < dirs_.size(); ++rank) {
      const GaussPoint& d = dirs_[rank];
      if (stop(rank)) return false;
      if (d.b > 0) {
        for (std::int64_t y = ymax_ - d.b; y >= ymin_; --y) scan_row(y, d, f, false);
      } else {
        for (std::int64_t y = ymin_; y <= ymax_; ++y) scan_flat(y, f, false);
      }
    }
    return true;
  }

  /* Visits (source, target, ex, ey) so that `f` may update the *source* from
   * the target: classes in increasing angle, targets read before they change. */
  template <class F, class S>
  bool backward(F&& f, S&& stop) const {
    for (std::size_t rank = dirs_.size(); rank-- > 0;) {
      if (stop(rank)) return false;
      const GaussPoint& d = dirs_[rank];
      if (d.b > 0) {
        for (std::int64_t y = ymin_; y + d.b <= ymax_; ++y) scan_row(y, d, f, true);
      } else {
        for (std::int64_t y = ymin_; y <= ymax_; ++y) scan_flat(y, f, true);
      }
    }
    return true;
  }

 private:
  std::size_t cell(std::int64_t x, std::int64_t y) const {
    return static_cast<std::size_t>((y - ymin_) * (W_ + 1) + (x - xmin_));
  }

  template <class F>
  void scan_row(std::int64_t y, const GaussPoint& d, F& f, bool /*reverse*/) const {
    const std::size_t b = row_begin(y), e = row_end(y);
    if (b == e) return;
    for (std::int64_t k = 1; y + k * d.b <= ymax_; ++k) {
      const std::int64_t ex = k * d.a, ey = k * d.b;
      if (ex > W_ || ex < -W_) break;
      const std::int64_t ty = y + ey;
      const std::size_t tb = row_begin(ty), te = row_end(ty);
      if (tb == te) continue;
      const std::int64_t lo = pts_[tb].a - ex, hi = pts_[te - 1].a - ex;
      auto first = std::lower_bound(pts_.begin() + static_cast<std::ptrdiff_t>(b),
                                    pts_.begin() + static_cast<std::ptrdiff_t>(e), lo,
                                    [](const GaussPoint& q, std::int64_t x) { return q.a < x; });
      for (auto it = first; it != pts_.begin() + static_cast<std::ptrdiff_t>(e) && it->a <= hi; ++it) {
        int t = grid_[cell(it->a + ex, ty)];
        if (t >= 0) f(static_cast<int>(it - pts_.begin()), t, ex, ey);
      }
    }
  }

  /* Direction (-1, 0): forward visits sources left to right, backward right
   * to left. */
  template <class F>
  void scan_flat(std::int64_t y, F& f, bool reverse) const {
    const std::size_t b = row_begin(y), e = row_end(y);
    if (b == e) return;
    auto visit = [&](std::size_t i) {
      for (std::int64_t k = 1; pts_[i].a - k >= pts_[b].a; ++k) {
        int t = grid_[cell(pts_[i].a - k, y)];
        if (t >= 0) f(static_cast<int>(i), t, -k, std::int64_t(0));
      }
    };
    if (!reverse)
      for (std::size_t i = b; i < e; ++i) visit(i);
    else
      for (std::size_t i = e; i-- > b;) visit(i);
  }

  std::vector<GaussPoint> pts_;
  std::int64_t xmin_ = 0, xmax_ = 0, ymin_ = 0, ymax_ = 0, W_ = 0, H_ = 0;
  std::vector<std::int32_t> grid_;
  std::vector<std::size_t> row_begin_;
  std::vector<GaussPoint> dirs_;
  std::vector<std::uint32_t> rank_;
  int origin_ = -1, goal_ = -1;
};

struct PlainWeights {
  std::vector<i128> lo;
  std::vector<std::uint8_t> exact;
  i128 hi(std::size_t i) const { return lo[i] + (exact[i] ? 0 : 1); }
};

PlainWeights plain_weights(const ChainGraph& g, const Surface& X) {
  PlainWeights w;
  w.lo.assign(g.vec_count(), 0);
  w.exact.assign(g.vec_count(), 1);
  const Integer c(4 * X.p() + 4);
  const Integer two_f = Integer(1) << (2 * kFrac);
  for (std::int64_t ey = 0; ey <= g.height(); ++ey)
    for (std::int64_t ex = -g.width(); ex <= g.width(); ++ex) {
      Integer a(static_cast<long>(ex)), b(static_cast<long>(ey));
      Integer n = a * a + c * b * b;
      Integer scaled = n * two_f;
      Integer r = isqrt(scaled);
      std::size_t i = g.vec_index(ex, ey);
      w.lo[i] = to_i128(r);
      w.exact[i] = (r * r == scaled) ? 1 : 0;
    }
  return w;
}

struct Record {
  std::int32_t node;
  std::int32_t prev;
};

std::vector<GaussPoint> path_of(const std::vector<Record>& recs, std::int32_t r, const ChainGraph& g) {
  std::vector<GaussPoint> out;
  for (; r >= 0; r = recs[static_cast<std::size_t>(r)].prev)
    out.push_back(g.points()[static_cast<std::size_t>(recs[static_cast<std::size_t>(r)].node)]);
  std::reverse(out.begin(), out.end());
  return out;
}

RadicalSum exact_length(const std::vector<GaussPoint>& path, const Surface& X) {
  RadicalSum L;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) L += norm(path[i + 1] - path[i], X);
  return L;
}

auto deadline_poll(detail::Clock::time_point deadline) {
  return [deadline](std::size_t) { return detail::Clock::now() > deadline; };
}

}  // namespace

namespace detail {

std::optional<PlainChainResult> max_plain_chain(const std::vector<GaussPoint>& allowed,
                                                const GaussPoint& target, const Surface& X,
                                                Clock::time_point deadline) {
  ChainGraph g(allowed, target);
  PlainWeights w = plain_weights(g, X);
  const std::size_t n = g.points().size();
  std::vector<i128> lo(n, 0), hi(n, 0);
  std::vector<std::int32_t> rec(n, -1);
  std::vector<Record> recs;
  recs.push_back(Record{g.origin(), -1});
  rec[static_cast<std::size_t>(g.origin())] = 0;
  PlainChainResult res;

  auto relax = [&](int s, int t, std::int64_t ex, std::int64_t ey) {
    const std::size_t su = static_cast<std::size_t>(s), tu = static_cast<std::size_t>(t);
    if (rec[su] < 0 || t == g.origin()) return;
    ++res.relaxations;
    const std::size_t vi = g.vec_index(ex, ey);
    const i128 clo = lo[su] + w.lo[vi], chi = hi[su] + w.hi(vi);
    bool take = false;
    if (rec[tu] < 0 || clo > hi[tu]) {
      take = true;
    } else if (chi >= lo[tu]) {
      ++res.exact_comparisons;
      std::vector<GaussPoint> cand = path_of(recs, rec[su], g);
      cand.push_back(g.points()[tu]);
      std::vector<GaussPoint> inc = path_of(recs, rec[tu], g);
      Ordering o = radical_cmp(exact_length(cand, X), exact_length(inc, X));
      take = o == Ordering::Greater || (o == Ordering::Equal && cand < inc);
    }
    if (!take) return;
    recs.push_back(Record{t, rec[su]});
    rec[tu] = static_cast<std::int32_t>(recs.size() - 1);
    lo[tu] = clo;
    hi[tu] = chi;
  };
  if (!g.forward(relax, deadline_poll(deadline))) return std::nullopt;

  const std::size_t gu = static_cast<std::size_t>(g.goal());
  if (rec[gu] >= 0 && g.goal() != g.origin()) {
    res.reachable = true;
    std::vector<GaussPoint> path = path_of(recs, rec[gu], g);
    res.witness = Chain::normalized(path);
    res.length = exact_length(res.witness.vertices, X);
  }
  return res;
}

std::optional<RefinedChainResult> max_refined_chain(const std::vector<GaussPoint>& allowed,
                                                    const GaussPoint& target, const Surface& X,
                                                    Clock::time_point deadline) {
  ChainGraph g(allowed, target);
  std::vector<std::int64_t> wt(g.vec_count(), 0);
  for (std::int64_t ey = 0; ey <= g.height(); ++ey)
    for (std::int64_t ex = -g.width(); ex <= g.width(); ++ex)
      if (upper(ex, ey)) wt[g.vec_index(ex, ey)] = edge_bound(ex, ey, X).t;

  const std::size_t n = g.points().size();
  std::vector<std::int64_t> val(n, 0);
  std::vector<std::int32_t> rec(n, -1);
  std::vector<Record> recs;
  recs.push_back(Record{g.origin(), -1});
  rec[static_cast<std::size_t>(g.origin())] = 0;
  RefinedChainResult res;

  auto relax = [&](int s, int t, std::int64_t ex, std::int64_t ey) {
    const std::size_t su = static_cast<std::size_t>(s), tu = static_cast<std::size_t>(t);
    if (rec[su] < 0 || t == g.origin()) return;
    ++res.relaxations;
    const std::int64_t c = val[su] + wt[g.vec_index(ex, ey)];
    if (rec[tu] >= 0 && c <= val[tu]) return;
    recs.push_back(Record{t, rec[su]});
    rec[tu] = static_cast<std::int32_t>(recs.size() - 1);
    val[tu] = c;
  };
  if (!g.forward(relax, deadline_poll(deadline))) return std::nullopt;

  const std::size_t gu = static_cast<std::size_t>(g.goal());
  if (rec[gu] >= 0 && g.goal() != g.origin()) {
    res.reachable = true;
    res.witness = Chain::normalized(path_of(recs, rec[gu], g));
    res.sum_t = val[gu];
  }
  return res;
}

std::optional<bool> enumerate_long_chains(const std::vector<GaussPoint>& allowed, const GaussPoint& target,
                                          const Surface& X, const Integer& min_length, std::size_t cap,
                                          std::vector<Chain>& out, Clock::time_point deadline) {
  ChainGraph g(allowed, target);
  PlainWeights w = plain_weights(g, X);
  const std::size_t n = g.points().size();
  const auto& pts = g.points();

  /* Upper bounds on the longest chain from each point to the goal using only
   * directions of rank > rho (smaller angle), as a step function of rho: the
   * backward pass visits ranks in decreasing order and every improvement of a
   * point is logged with the rank of its class. */
  struct Step {
    std::size_t rank;
    i128 value;
  };
  std::vector<std::vector<Step>> steps(n);
  const std::size_t before_all = std::numeric_limits<std::size_t>::max();
  steps[static_cast<std::size_t>(g.goal())].push_back(Step{before_all, 0});
  std::size_t cur_rank = before_all;
  auto pull = [&](int s, int t, std::int64_t ex, std::int64_t ey) {
    const std::size_t su = static_cast<std::size_t>(s), tu = static_cast<std::size_t>(t);
    if (steps[tu].empty() || s == g.goal()) return;
    /* the target's value from strictly earlier classes */
    const auto& st = steps[tu];
    const Step* from = &st.back();
    if (from->rank == cur_rank) {
      if (st.size() < 2) return;
      from = &st[st.size() - 2];
    }
    const i128 c = from->value + w.hi(g.vec_index(ex, ey));
    auto& ss = steps[su];
    if (ss.empty() || c > ss.back().value) {
      if (!ss.empty() && ss.back().rank == cur_rank) ss.back().value = c;
      else ss.push_back(Step{cur_rank, c});
    }
  };
  auto poll = [&](std::size_t rank) {
    cur_rank = rank;
    return detail::Clock::now() > deadline;
  };
  if (!g.backward(pull, poll)) return std::nullopt;
  /* best suffix from r using ranks > rho only; -1 when none */
  auto suffix = [&](std::size_t r, std::size_t rho, i128& out_v) {
    const auto& st = steps[r];
    auto it = std::partition_point(st.begin(), st.end(), [rho](const Step& x) { return x.rank == before_all || x.rank > rho; });
    if (it == st.begin()) return false;
    out_v = std::prev(it)->value;
    return true;
  };

  if (sgn(min_length) < 0) throw std::invalid_argument("negative length threshold");
  const i128 threshold = to_i128(min_length << kFrac);
  const Rational min_len_q(min_length);

  std::vector<int> stack{g.origin()};
  bool complete = true, timed_out = false;
  std::size_t polls = 0;

  auto dfs = [&](auto& self, int q, std::int64_t lx, std::int64_t ly, bool has_last, i128 len_lo,
                 i128 len_hi) -> void {
    if (!complete || timed_out) return;
    if ((++polls & 0xfff) == 0 && detail::Clock::now() > deadline) {
      timed_out = true;
      return;
    }
    const GaussPoint& qp = pts[static_cast<std::size_t>(q)];
    for (std::size_t ri = g.row_begin(qp.b); ri < n; ++ri) {
      const GaussPoint& rp = pts[ri];
      const std::int64_t ex = rp.a - qp.a, ey = rp.b - qp.b;
      if (!upper(ex, ey)) continue;
      if (has_last && cross(lx, ly, ex, ey) >= 0) continue;
      i128 rest = 0;
      if (!suffix(ri, g.rank_of(ex, ey), rest)) continue;
      const std::size_t vi = g.vec_index(ex, ey);
      const i128 nlo = len_lo + w.lo[vi], nhi = len_hi + w.hi(vi);
      if (nhi + rest < threshold) continue;
      const int r = static_cast<int>(ri);
      stack.push_back(r);
      if (r == g.goal()) {
        bool keep = nlo >= threshold;
        if (!keep && nhi >= threshold) {
          std::vector<GaussPoint> path;
          for (int v : stack) path.push_back(pts[static_cast<std::size_t>(v)]);
          keep = radical_cmp(exact_length(path, X), min_len_q) != Ordering::Less;
        }
        if (keep) {
          if (out.size() >= cap) {
            complete = false;
          } else {
            std::vector<GaussPoint> path;
            for (int v : stack) path.push_back(pts[static_cast<std::size_t>(v)]);
            out.push_back(Chain::normalized(path));
          }
        }
      } else {
        self(self, r, ex, ey, true, nlo, nhi);
      }
      stack.pop_back();
      if (!complete || timed_out) return;
    }
  };
  dfs(dfs, g.origin(), 0, 0, false, 0, 0);
  if (timed_out) return std::nullopt;
  return complete;
}

}  // namespace detail

namespace {
detail::Clock::time_point no_deadline() { return detail::Clock::time_point::max(); }
}  // namespace

PlainChainResult max_plain_chain(const std::vector<GaussPoint>& allowed, const GaussPoint& target,
                                 const Surface& X) {
  return *detail::max_plain_chain(allowed, target, X, no_deadline());
}

RefinedChainResult max_refined_chain(const std::vector<GaussPoint>& allowed, const GaussPoint& target,
                                     const Surface& X) {
  return *detail::max_refined_chain(allowed, target, X, no_deadline());
}

bool enumerate_long_chains(const std::vector<GaussPoint>& allowed, const GaussPoint& target,
                           const Surface& X, const Integer& min_length, std::size_t cap,
                           std::vector<Chain>& out) {
  return *detail::enumerate_long_chains(allowed, target, X, min_length, cap, out, no_deadline());
}

}  // namespace k3wall
