#include "symtope/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace symtope {

Integer predicted_minor_count(std::size_t rows, std::size_t cols) { return binomial(rows + cols, rows) - 1; }

namespace {

struct MinorKey {
  std::uint64_t rows, cols;
  bool operator==(const MinorKey &o) const { return rows == o.rows && cols == o.cols; }
};

struct MinorKeyHash {
  std::size_t operator()(const MinorKey &k) const {
    std::uint64_t h = k.rows * 0x9E3779B97F4A7C15ULL;
    h ^= k.cols + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::size_t> bits(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

bool lex_less(const MinorKey &a, const MinorKey &b) {
  auto ra = bits(a.rows), rb = bits(b.rows);
  if (ra != rb)
    return ra < rb;
  return bits(a.cols) < bits(b.cols);
}

} // namespace

TUResult is_totally_unimodular(const IntegerMatrix &input, std::uint64_t max_minors) {
  TUResult res;
  if (input.empty())
    return res;
  Integer predicted = predicted_minor_count(input.rows(), input.cols());
  if (predicted > Integer(std::to_string(max_minors)))
    throw GuardExceeded("max-minors", "is_totally_unimodular: " + predicted.get_str() +
                                          " predicted minors exceeds the guard of " + std::to_string(max_minors));
  const bool transposed = input.rows() > input.cols();
  const IntegerMatrix a = transposed ? input.transpose() : input;
  const std::size_t n = a.rows(), m = a.cols();
  if (m > 64)
    throw GuardExceeded("max-minors", "is_totally_unimodular: more than 64 columns");

  auto finish = [&](const MinorKey &key, const Integer &det) {
    res.totally_unimodular = false;
    res.rows = bits(key.rows);
    res.cols = bits(key.cols);
    if (transposed)
      std::swap(res.rows, res.cols);
    res.determinant = det;
    return res;
  };

  // level 1
  std::vector<std::vector<int>> e(n, std::vector<int>(m, 0));
  std::unordered_map<MinorKey, int, MinorKeyHash> level;
  {
    bool bad = false;
    MinorKey worst{};
    Integer worst_det;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        ++res.minors_examined;
        const Integer &x = a(i, j);
        if (x == 0)
          continue;
        MinorKey key{1ULL << i, 1ULL << j};
        if (abs(x) > 1) {
          if (!bad || lex_less(key, worst)) {
            worst = key;
            worst_det = x;
          }
          bad = true;
          continue;
        }
        e[i][j] = static_cast<int>(x.get_si());
        level.emplace(key, e[i][j]);
      }
    if (bad)
      return finish(worst, worst_det);
  }

  for (std::size_t k = 2; k <= n && !level.empty(); ++k) {
    std::unordered_map<MinorKey, int, MinorKeyHash> next;
    bool bad = false;
    MinorKey worst{};
    long worst_det = 0;
    for (const auto &[key, det] : level) {
      (void)det;
      const std::size_t min_row = static_cast<std::size_t>(std::countr_zero(key.rows));
      for (std::size_t r0 = 0; r0 < min_row; ++r0) {
        for (std::size_t c = 0; c < m; ++c) {
          if (e[r0][c] == 0 || (key.cols >> c & 1))
            continue;
          MinorKey nk{key.rows | (1ULL << r0), key.cols | (1ULL << c)};
          if (next.count(nk))
            continue;
          ++res.minors_examined;
          // Laplace expansion along row r0, the first row of the new minor
          long value = 0;
          std::size_t pos = 0;
          for (std::uint64_t cm = nk.cols; cm; cm &= cm - 1, ++pos) {
            std::size_t cc = static_cast<std::size_t>(std::countr_zero(cm));
            if (e[r0][cc] == 0)
              continue;
            auto it = level.find(MinorKey{key.rows, nk.cols & ~(1ULL << cc)});
            if (it == level.end())
              continue;
            long term = static_cast<long>(e[r0][cc]) * it->second;
            value += (pos % 2 == 0) ? term : -term;
          }
          if (value == 0) {
            next.emplace(nk, 0);
            continue;
          }
          if (value > 1 || value < -1) {
            if (!bad || lex_less(nk, worst)) {
              worst = nk;
              worst_det = value;
            }
            bad = true;
          }
          next.emplace(nk, static_cast<int>(value));
        }
      }
    }
    if (bad)
      return finish(worst, Integer(worst_det));
    std::erase_if(next, [](const auto &kv) { return kv.second == 0; });
    level = std::move(next);
  }
  return res;
}

} // namespace symtope
