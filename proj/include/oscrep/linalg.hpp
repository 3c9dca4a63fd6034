#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oscrep/rational.hpp"

namespace oscrep {

/// Sparse vector over an ordered key type. Entries are sorted by key and a
/// zero coefficient is never stored.
template <class Key>
class SparseVec {
 public:
  using Entry = std::pair<Key, Rational>;

  SparseVec() = default;

  static SparseVec unit(Key k) {
    SparseVec v;
    v.entries_.emplace_back(std::move(k), Rational(1));
    return v;
  }

  static SparseVec from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec v;
    for (auto& [k, c] : entries) {
      if (!v.entries_.empty() && v.entries_.back().first == k) {
        v.entries_.back().second += c;
        if (v.entries_.back().second == 0) v.entries_.pop_back();
      } else if (c != 0) {
        v.entries_.emplace_back(std::move(k), std::move(c));
      }
    }
    return v;
  }

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  const Key& leading_key() const {
    if (entries_.empty()) throw std::logic_error("SparseVec: zero vector has no leading key");
    return entries_.front().first;
  }
  const Rational& leading_coeff() const {
    if (entries_.empty()) throw std::logic_error("SparseVec: zero vector has no leading coeff");
    return entries_.front().second;
  }

  Rational coeff(const Key& k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, const Key& key) { return e.first < key; });
    if (it != entries_.end() && it->first == k) return it->second;
    return Rational(0);
  }

  void scale(const Rational& s) {
    if (s == 0) {
      entries_.clear();
      return;
    }
    for (auto& [k, c] : entries_) c *= s;
  }

  /// *this += s * other, merging sorted entry lists.
  void axpy(const Rational& s, const SparseVec& other) {
    if (s == 0 || other.is_zero()) return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto ia = entries_.begin(), ea = entries_.end();
    auto ib = other.entries_.begin(), eb = other.entries_.end();
    while (ia != ea && ib != eb) {
      if (ia->first < ib->first) {
        merged.push_back(std::move(*ia++));
      } else if (ib->first < ia->first) {
        merged.emplace_back(ib->first, s * ib->second);
        ++ib;
      } else {
        Rational c = ia->second + s * ib->second;
        if (c != 0) merged.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    for (; ia != ea; ++ia) merged.push_back(std::move(*ia));
    for (; ib != eb; ++ib) merged.emplace_back(ib->first, s * ib->second);
    entries_ = std::move(merged);
  }

  bool operator==(const SparseVec& other) const { return entries_ == other.entries_; }
  bool operator!=(const SparseVec& other) const { return !(*this == other); }

 private:
  std::vector<Entry> entries_;
};

/// Basis of a subspace kept in reduced echelon form: every row has leading
/// coefficient 1, rows are sorted by strictly increasing leading key, and a
/// leading key occurs in no other row. This form is canonical -- it depends
/// only on the spanned subspace, never on insertion order.
template <class Key>
class SpanBasis {
 public:
  using Vec = SparseVec<Key>;

  /// Adds v to the span. Returns true iff the rank grew.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    v.scale(1 / v.leading_coeff());
    const Key pivot = v.leading_key();
    for (auto& row : rows_) {
      const Rational c = row.coeff(pivot);
      if (c != 0) row.axpy(-c, v);
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const Vec& r, const Key& k) { return r.leading_key() < k; });
    rows_.insert(pos, std::move(v));
    return true;
  }

  /// Residual of v after eliminating every pivot; zero iff v is in the span.
  Vec reduce(Vec v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      const auto row = row_with_pivot(v.entries()[pos].first);
      if (!row) {
        ++pos;
        continue;
      }
      v.axpy(-v.entries()[pos].second, rows_[*row]);
    }
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).is_zero(); }

  /// Coefficients of v over the current rows; nullopt if v is outside the span.
  std::optional<std::vector<Rational>> coordinates(Vec v) const {
    std::vector<Rational> out(rows_.size(), Rational(0));
    std::size_t pos = 0;
    while (pos < v.size()) {
      const auto row = row_with_pivot(v.entries()[pos].first);
      if (!row) return std::nullopt;
      out[*row] = v.entries()[pos].second;
      v.axpy(-out[*row], rows_[*row]);
    }
    return out;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }

  std::vector<Key> pivots() const {
    std::vector<Key> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(row.leading_key());
    return out;
  }

  bool has_pivot(const Key& k) const { return row_with_pivot(k).has_value(); }

  bool operator==(const SpanBasis& other) const { return rows_ == other.rows_; }
  bool operator!=(const SpanBasis& other) const { return !(*this == other); }

 private:
  std::optional<std::size_t> row_with_pivot(const Key& k) const {
    auto it = std::lower_bound(rows_.begin(), rows_.end(), k,
                               [](const Vec& r, const Key& key) { return r.leading_key() < key; });
    if (it != rows_.end() && it->leading_key() == k) {
      return static_cast<std::size_t>(it - rows_.begin());
    }
    return std::nullopt;
  }

  std::vector<Vec> rows_;
};

/// Exact basis of the homogeneous solution space {u : row . u == 0 for all
/// rows} over the given unknowns. Every constraint must be supported on the
/// unknown set.
template <class Key>
SpanBasis<Key> nullspace(const std::vector<SparseVec<Key>>& constraints,
                         const std::vector<Key>& unknowns) {
  std::set<Key> known(unknowns.begin(), unknowns.end());
  for (const auto& row : constraints) {
    for (const auto& [k, c] : row.entries()) {
      if (!known.count(k)) throw std::invalid_argument("nullspace: constraint uses unlisted unknown");
    }
  }
  SpanBasis<Key> echelon;
  for (const auto& row : constraints) echelon.insert(row);

  SpanBasis<Key> out;
  for (const Key& u : unknowns) {
    if (echelon.has_pivot(u)) continue;
    std::vector<typename SparseVec<Key>::Entry> entries;
    entries.emplace_back(u, Rational(1));
    for (const auto& row : echelon.rows()) {
      const Rational c = row.coeff(u);
      if (c != 0) entries.emplace_back(row.leading_key(), -c);
    }
    out.insert(SparseVec<Key>::from_entries(std::move(entries)));
  }
  return out;
}

/// Echelonized view of a fixed vector list that expands new vectors as exact
/// linear combinations of the originals.
template <class Key>
class BasisExpander {
 public:
  explicit BasisExpander(const std::vector<SparseVec<Key>>& originals)
      : n_originals_(originals.size()) {
    for (std::size_t i = 0; i < originals.size(); ++i) {
      SparseVec<Key> v = originals[i];
      std::vector<Rational> combo(originals.size(), Rational(0));
      combo[i] = 1;
      std::size_t pos = 0;
      while (pos < v.size()) {
        const auto row = row_with_pivot(v.entries()[pos].first);
        if (!row) {
          ++pos;
          continue;
        }
        const Rational c = v.entries()[pos].second;
        v.axpy(-c, rows_[*row]);
        for (std::size_t j = 0; j < combo.size(); ++j) combo[j] -= c * combos_[*row][j];
      }
      if (v.is_zero()) continue;  // dependent original, contributes no new row
      const Rational lead = v.leading_coeff();
      v.scale(1 / lead);
      for (auto& c : combo) c /= lead;
      const Key pivot = v.leading_key();
      auto at = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                 [](const SparseVec<Key>& r, const Key& k) { return r.leading_key() < k; });
      const std::size_t idx = static_cast<std::size_t>(at - rows_.begin());
      rows_.insert(at, std::move(v));
      combos_.insert(combos_.begin() + idx, std::move(combo));
    }
  }

  std::size_t rank() const { return rows_.size(); }

  /// Coefficients over the original vectors, or nullopt if v is outside
  /// their span.
  std::optional<std::vector<Rational>> expand(SparseVec<Key> v) const {
    std::vector<Rational> out(n_originals_, Rational(0));
    std::size_t pos = 0;
    while (pos < v.size()) {
      const auto row = row_with_pivot(v.entries()[pos].first);
      if (!row) return std::nullopt;
      const Rational c = v.entries()[pos].second;
      v.axpy(-c, rows_[*row]);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * combos_[*row][j];
    }
    return out;
  }

 private:
  std::optional<std::size_t> row_with_pivot(const Key& k) const {
    auto it = std::lower_bound(rows_.begin(), rows_.end(), k,
                               [](const SparseVec<Key>& r, const Key& key) { return r.leading_key() < key; });
    if (it != rows_.end() && it->leading_key() == k) {
      return static_cast<std::size_t>(it - rows_.begin());
    }
    return std::nullopt;
  }

  std::size_t n_originals_ = 0;
  std::vector<SparseVec<Key>> rows_;          // forward echelon, pivot-sorted
  std::vector<std::vector<Rational>> combos_;  // rows_[i] == sum combos_[i][j] * original[j]
};

}  // namespace oscrep
