#pragma once

// Exact incremental Gaussian elimination over Q for sparse rows keyed by an
// ordered key type (monomial exponents, (t,u) positions, ...).  Rows are kept
// in reduced echelon form with unit pivots, so insertion order does not affect
// the span and membership tests are exact.

#include <map>
#include <optional>
#include <vector>

#include "pdo/scalar.hpp"

namespace pdo {

template <class Key, class Less = std::less<Key>>
class SparseSpan {
 public:
  using Row = std::map<Key, Scalar, Less>;

  // Reduces `row` against the stored pivot rows and returns the residual
  // (empty map iff `row` lies in the span).
  Row reduce(Row row) const { return full_reduce(std::move(row)); }

  bool contains(const Row& row) const { return reduce(row).empty(); }

  // Inserts the row; returns true when the rank grew.
  bool insert(Row row) {
    row = full_reduce(std::move(row));
    if (row.empty()) return false;
    Scalar lead = row.rbegin()->second;
    Scalar inv = inverse(lead);
    for (auto& [k, v] : row) v = v * inv;
    Key pivot = row.rbegin()->first;
    // Back-substitute into existing rows so the basis stays fully reduced.
    for (auto& [p, r] : rows_) {
      auto hit = r.find(pivot);
      if (hit != r.end()) subtract_scaled(r, row, hit->second);
    }
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  // Echelon basis rows, in ascending pivot order (deterministic).
  std::vector<Row> basis() const {
    std::vector<Row> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(r);
    return out;
  }

 private:
  static void subtract_scaled(Row& target, const Row& src, const Scalar& c) {
    for (const auto& [k, v] : src) {
      auto it = target.find(k);
      if (it == target.end()) {
        Scalar nv = -(c * v);
        if (!nv.is_zero()) target.emplace(k, nv);
      } else {
        it->second = it->second - c * v;
        if (it->second.is_zero()) target.erase(it);
      }
    }
  }

  Row full_reduce(Row row) const {
    bool changed = true;
    while (changed && !row.empty()) {
      changed = false;
      for (auto it = row.rbegin(); it != row.rend(); ++it) {
        auto hit = rows_.find(it->first);
        if (hit != rows_.end()) {
          subtract_scaled(row, hit->second, it->second);
          changed = true;
          break;
        }
      }
    }
    return row;
  }

  std::map<Key, Row, Less> rows_;  // pivot key -> reduced row
};

// Variant that remembers how each basis row was formed from the inserted
// vectors, so membership queries can return explicit coordinates.
template <class Key, class Less = std::less<Key>>
class TrackedSpan {
 public:
  using Row = std::map<Key, Scalar, Less>;
  using Comb = std::map<int, Scalar>;  // index of inserted vector -> coeff

  bool insert(Row row) {
    Comb comb;
    comb[next_index_] = Scalar(1);
    auto [res, rescomb] = reduce_with(std::move(row), std::move(comb));
    ++next_index_;
    if (res.empty()) return false;
    Scalar inv = inverse(res.rbegin()->second);
    for (auto& [k, v] : res) v = v * inv;
    for (auto& [k, v] : rescomb) v = v * inv;
    Key pivot = res.rbegin()->first;
    rows_.emplace(pivot, Entry{std::move(res), std::move(rescomb)});
    return true;
  }

  // If `row` lies in the span, returns coefficients c_i over the inserted
  // vectors with row = sum c_i * v_i.
  std::optional<Comb> solve(Row row) const {
    auto [res, comb] = reduce_with(std::move(row), Comb{});
    if (!res.empty()) return std::nullopt;
    Comb out;
    for (auto& [i, c] : comb) {
      Scalar n = -c;
      if (!n.is_zero()) out[i] = n;
    }
    return out;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Entry {
    Row row;
    Comb comb;
  };

  std::pair<Row, Comb> reduce_with(Row row, Comb comb) const {
    bool changed = true;
    while (changed && !row.empty()) {
      changed = false;
      for (auto it = row.rbegin(); it != row.rend(); ++it) {
        auto hit = rows_.find(it->first);
        if (hit != rows_.end()) {
          Scalar c = it->second;
          for (const auto& [k, v] : hit->second.row) {
            auto t = row.find(k);
            if (t == row.end()) {
              Scalar nv = -(c * v);
              if (!nv.is_zero()) row.emplace(k, nv);
            } else {
              t->second = t->second - c * v;
              if (t->second.is_zero()) row.erase(t);
            }
          }
          for (const auto& [i, v] : hit->second.comb) {
            auto t = comb.find(i);
            if (t == comb.end()) {
              Scalar nv = -(c * v);
              if (!nv.is_zero()) comb.emplace(i, nv);
            } else {
              t->second = t->second - c * v;
              if (t->second.is_zero()) comb.erase(t);
            }
          }
          changed = true;
          break;
        }
      }
    }
    return {std::move(row), std::move(comb)};
  }

  std::map<Key, Entry, Less> rows_;
  int next_index_ = 0;
};

}  // namespace pdo
