#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oscrep/linalg.hpp"
#include "oscrep/rational.hpp"

namespace oscrep {

enum class AlgebraKind { SL, SP };

/// Sparse square matrix over the rationals, 1-based indexing to match the
/// usual matrix-unit notation E(r,s).
class SqMatrix {
 public:
  using Entry = std::pair<int, int>;

  explicit SqMatrix(int size) : size_(size) {}

  static SqMatrix unit(int size, int r, int s);

  int size() const { return size_; }
  bool is_zero() const { return entries_.empty(); }
  Rational at(int r, int s) const;
  void add(int r, int s, const Rational& c);
  const std::map<Entry, Rational>& entries() const { return entries_; }

  Rational trace() const;

  SqMatrix operator-() const;
  SqMatrix& operator+=(const SqMatrix& other);
  SqMatrix& operator-=(const SqMatrix& other);
  SqMatrix& operator*=(const Rational& s);
  friend SqMatrix operator+(SqMatrix a, const SqMatrix& b) { a += b; return a; }
  friend SqMatrix operator-(SqMatrix a, const SqMatrix& b) { a -= b; return a; }
  friend SqMatrix operator*(const SqMatrix& a, const SqMatrix& b);

  bool operator==(const SqMatrix& other) const {
    return size_ == other.size_ && entries_ == other.entries_;
  }

  SparseVec<Entry> as_vec() const;

 private:
  int size_;
  std::map<Entry, Rational> entries_;
};

/// a*b - b*a.
SqMatrix matrix_bracket(const SqMatrix& a, const SqMatrix& b);

struct BasisElement {
  std::string label;
  SqMatrix mat;
};

// Label helpers; all indices 1-based as in the matrix-unit notation.
std::string sl_unit_label(int i, int j);
std::string sl_cartan_label(int r);
std::string sp_c_label(int m, int i, int j);  // E(i,j) - E(m+1+j, m+1+i)
std::string sp_a_label(int m, int r, int s);  // E(r, m+1+s) + E(s, m+1+r); bare E(r, m+1+r) when r == s
std::string sp_b_label(int m, int r, int s);  // transpose block of the above

/// Basis of sl(n+1) for rank n >= 2, or sp(2m+2) for rank m >= 1.
///
/// sl order: off-diagonal units E(i,j) lexicographically, then the Cartan
/// differences E(r,r)-E(r+1,r+1).
/// sp order: the E(i,j)-E(m+1+j,m+1+i) block lexicographically (its diagonal
/// is the Cartan), then the symmetric upper block, then the symmetric lower
/// block.
std::vector<BasisElement> enumerate_basis(AlgebraKind kind, int rank);

/// dim sl(n+1) = (n+1)^2 - 1; dim sp(2m+2) = (m+1)(2m+3).
std::size_t algebra_dimension(AlgebraKind kind, int rank);

enum class Subalgebra {
  Full,
  /// The rank-reduced subalgebra acting on the first coordinates only:
  /// sl(n) inside sl(n+1), or sp(2m) inside sp(2m+2).
  Corner,
  /// The diagonal Cartan subalgebra.
  Cartan,
  /// Cartan of the corner subalgebra.
  CornerCartan,
};

/// Indices into enumerate_basis(kind, rank) selecting the subalgebra.
std::vector<std::size_t> select_subalgebra(AlgebraKind kind, int rank, Subalgebra which);

/// All pairwise brackets expanded exactly over the given basis.
/// Construction throws if some bracket leaves the span.
class StructureTable {
 public:
  explicit StructureTable(std::vector<BasisElement> basis);

  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Expansion of [basis[i], basis[j]] as (index, coefficient) pairs.
  const std::vector<std::pair<std::size_t, Rational>>& bracket(std::size_t i, std::size_t j) const;

  /// CSV rows "label_a,label_b,label_c,coefficient".
  std::string to_csv() const;

 private:
  std::vector<BasisElement> basis_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table_;  // dim x dim, flattened
};

/// Checks [x,[y,z]] + [y,[z,x]] + [z,[x,y]] == 0 for all basis triples,
/// with the inner brackets expanded through the table.
bool jacobi_holds(const StructureTable& table);

/// Variable relabeling used for the symplectic case. Internal slot order is
/// (x_0, x_1..x_m, y_1..y_m); the ambient order is x_1..x_{2m+1} with
/// x_0 = x_{m+1} and y_i = x_{m+1+i}.
int sp_ambient_index(int m, int slot);   // 0-based slot -> 1-based ambient index
int sp_slot_index(int m, int ambient);   // inverse

}  // namespace oscrep
