#include "symtope/polytope.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace symtope {

unsigned configured_threads() {
  const char *env = std::getenv("SYMTOPE_THREADS");
  if (!env)
    return 1;
  char *end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || v < 1)
    return 1;
  return static_cast<unsigned>(v);
}

namespace {

struct Halfspaces {
  std::size_t r = 0;
  std::vector<std::vector<long>> U; // integer-scaled normals
  std::vector<long> beta;           // U.y <= k * beta
  std::vector<long> lo, hi;         // box for kP
  std::vector<std::vector<long>> minrest; // minrest[t][f] <= U_f . (y_t, ..., y_{r-1}) on kP
};

Halfspaces scaled_halfspaces(const CSPolytope &p, long k, const HullOptions &hopts) {
  Halfspaces h;
  h.r = p.dimension();
  for (const auto &f : p.facets(hopts)) {
    Integer den = 1;
    for (const auto &q : f.lattice_normal)
      den = lcm(den, q.get_den());
    std::vector<long> u;
    for (const auto &q : f.lattice_normal)
      u.push_back(to_int64(Integer(q.get_num() * (den / q.get_den()))));
    h.U.push_back(std::move(u));
    h.beta.push_back(to_int64(den) * k);
  }
  const auto &Y = p.lattice_coordinates();
  h.lo.assign(h.r, 0);
  h.hi.assign(h.r, 0);
  for (std::size_t t = 0; t < h.r; ++t) {
    long m = 0;
    for (std::size_t j = 0; j < Y.cols(); ++j)
      m = std::max(m, static_cast<long>(std::labs(to_int64(Y(t, j)))));
    h.lo[t] = -m * k;
    h.hi[t] = m * k;
  }
  // the tail of a point of kP lies in k * conv(tails of the vertices), so minimize over vertices
  h.minrest.assign(h.r + 1, std::vector<long>(h.U.size(), 0));
  std::vector<long> tail(Y.cols());
  for (std::size_t f = 0; f < h.U.size(); ++f) {
    std::fill(tail.begin(), tail.end(), 0);
    for (std::size_t t = h.r; t-- > 0;) {
      long best = 0;
      for (std::size_t j = 0; j < Y.cols(); ++j) {
        tail[j] += h.U[f][t] * to_int64(Y(t, j));
        best = std::min(best, -std::labs(tail[j]));
      }
      h.minrest[t][f] = best * k;
    }
  }
  return h;
}

class Enumerator {
public:
  Enumerator(const Halfspaces &h, bool interior, std::uint64_t max_points, std::uint64_t max_nodes,
             std::atomic<std::uint64_t> &shared, std::atomic<std::uint64_t> &nodes, const PointSink *sink,
             std::mutex *sink_mu)
      : h_(h), interior_(interior), max_points_(max_points), max_nodes_(max_nodes), shared_(shared), nodes_(nodes),
        sink_(sink), sink_mu_(sink_mu),
        y_(h.r, 0), partial_(h.U.size(), 0), minrest_(h.minrest) {}

  void run(long first_lo, long first_hi) { descend(0, first_lo, first_hi); }

  LatticeCount count;

private:
  void bounds(std::size_t t, long &lo, long &hi) const {
    lo = h_.lo[t];
    hi = h_.hi[t];
    for (std::size_t f = 0; f < h_.U.size(); ++f) {
      long u = h_.U[f][t];
      if (u == 0)
        continue;
      long slack = h_.beta[f] - partial_[f] - minrest_[t + 1][f];
      if (u > 0)
        hi = std::min(hi, floor_div_l(slack, u));
      else
        lo = std::max(lo, -floor_div_l(slack, -u));
    }
  }

  static long floor_div_l(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
      --q;
    return q;
  }

  void descend(std::size_t t, long clip_lo, long clip_hi) {
    if (t == h_.r) {
      leaf();
      return;
    }
    if (++local_nodes_ == 4096) {
      if (nodes_.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_ > max_nodes_)
        throw GuardExceeded("max-points", "lattice point enumeration exceeds its search budget (--max-points)");
      local_nodes_ = 0;
    }
    long lo, hi;
    bounds(t, lo, hi);
    lo = std::max(lo, clip_lo);
    hi = std::min(hi, clip_hi);
    for (long v = lo; v <= hi; ++v) {
      y_[t] = v;
      for (std::size_t f = 0; f < h_.U.size(); ++f)
        partial_[f] += h_.U[f][t] * v;
      descend(t + 1, h_.lo[std::min(t + 1, h_.r - 1)], h_.hi[std::min(t + 1, h_.r - 1)]);
      for (std::size_t f = 0; f < h_.U.size(); ++f)
        partial_[f] -= h_.U[f][t] * v;
    }
  }

  void leaf() {
    bool inside = true, strict = true;
    for (std::size_t f = 0; f < h_.U.size(); ++f) {
      if (partial_[f] > h_.beta[f]) {
        inside = false;
        break;
      }
      if (partial_[f] == h_.beta[f])
        strict = false;
    }
    if (!inside)
      return;
    ++count.total;
    if (interior_ && strict)
      ++count.interior;
    if (shared_.fetch_add(1, std::memory_order_relaxed) + 1 > max_points_)
      throw GuardExceeded("max-points", "lattice point enumeration exceeds --max-points");
    if (sink_ && *sink_) {
      if (sink_mu_) {
        std::lock_guard<std::mutex> lock(*sink_mu_);
        (*sink_)(y_);
      } else {
        (*sink_)(y_);
      }
    }
  }

  const Halfspaces &h_;
  bool interior_;
  std::uint64_t max_points_;
  std::uint64_t max_nodes_;
  std::atomic<std::uint64_t> &shared_;
  std::atomic<std::uint64_t> &nodes_;
  std::uint64_t local_nodes_ = 0;
  const PointSink *sink_;
  std::mutex *sink_mu_;
  std::vector<long> y_;
  std::vector<long> partial_;
  const std::vector<std::vector<long>> &minrest_;
};

} // namespace

LatticeCount lattice_points(const CSPolytope &p, long k, const LatticeCountOptions &opts, const PointSink &sink) {
  if (k < 0)
    throw std::invalid_argument("lattice_points: negative dilation");
  LatticeCount out;
  if (k == 0) {
    out.total = 1;
    if (sink)
      sink(std::vector<long>(p.dimension(), 0));
    return out;
  }
  Halfspaces h = scaled_halfspaces(p, k, opts.hull);
  std::atomic<std::uint64_t> shared{0}, nodes{0};
  const std::uint64_t max_nodes = opts.max_nodes ? opts.max_nodes : 16 * opts.max_points;
  unsigned threads = opts.threads ? opts.threads : configured_threads();
  long span = h.hi[0] - h.lo[0] + 1;
  if (threads <= 1 || span < 2) {
    Enumerator e(h, opts.count_interior, opts.max_points, max_nodes, shared, nodes, &sink, nullptr);
    e.run(h.lo[0], h.hi[0]);
    return e.count;
  }
  threads = static_cast<unsigned>(std::min<long>(threads, span));
  std::mutex sink_mu;
  std::vector<std::unique_ptr<Enumerator>> workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t)
    workers.push_back(
        std::make_unique<Enumerator>(h, opts.count_interior, opts.max_points, max_nodes, shared, nodes, &sink, &sink_mu));
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        // interleaved slices of the first coordinate balance the work
        for (long v = h.lo[0] + t; v <= h.hi[0]; v += threads)
          workers[t]->run(v, v);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto &th : pool)
    th.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  for (auto &w : workers) {
    out.total += w->count.total;
    out.interior += w->count.interior;
  }
  return out;
}

} // namespace symtope
