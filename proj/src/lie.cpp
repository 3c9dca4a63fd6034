#include "oscrep/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace oscrep {

SqMatrix SqMatrix::unit(int size, int r, int s) {
  SqMatrix m(size);
  m.add(r, s, Rational(1));
  return m;
}

Rational SqMatrix::at(int r, int s) const {
  auto it = entries_.find({r, s});
  return it == entries_.end() ? Rational(0) : it->second;
}

void SqMatrix::add(int r, int s, const Rational& c) {
  if (r < 1 || r > size_ || s < 1 || s > size_) {
    throw std::out_of_range("SqMatrix::add: index out of range");
  }
  if (c == 0) return;
  auto [it, inserted] = entries_.emplace(Entry{r, s}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  }
}

Rational SqMatrix::trace() const {
  Rational t(0);
  for (const auto& [rs, c] : entries_) {
    if (rs.first == rs.second) t += c;
  }
  return t;
}

SqMatrix SqMatrix::operator-() const {
  SqMatrix out(size_);
  for (const auto& [rs, c] : entries_) out.entries_.emplace(rs, -c);
  return out;
}

SqMatrix& SqMatrix::operator+=(const SqMatrix& other) {
  if (size_ != other.size_) throw std::invalid_argument("SqMatrix::operator+=: size mismatch");
  for (const auto& [rs, c] : other.entries_) add(rs.first, rs.second, c);
  return *this;
}

SqMatrix& SqMatrix::operator-=(const SqMatrix& other) {
  if (size_ != other.size_) throw std::invalid_argument("SqMatrix::operator-=: size mismatch");
  for (const auto& [rs, c] : other.entries_) add(rs.first, rs.second, -c);
  return *this;
}

SqMatrix& SqMatrix::operator*=(const Rational& s) {
  if (s == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [rs, c] : entries_) c *= s;
  return *this;
}

SqMatrix operator*(const SqMatrix& a, const SqMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("SqMatrix::operator*: size mismatch");
  SqMatrix out(a.size());
  for (const auto& [rs, ca] : a.entries()) {
    for (const auto& [tu, cb] : b.entries()) {
      if (rs.second == tu.first) out.add(rs.first, tu.second, ca * cb);
    }
  }
  return out;
}

SparseVec<SqMatrix::Entry> SqMatrix::as_vec() const {
  std::vector<SparseVec<Entry>::Entry> entries(entries_.begin(), entries_.end());
  return SparseVec<Entry>::from_entries(std::move(entries));
}

SqMatrix matrix_bracket(const SqMatrix& a, const SqMatrix& b) { return a * b - b * a; }

std::string sl_unit_label(int i, int j) {
  std::ostringstream os;
  os << "E(" << i << "," << j << ")";
  return os.str();
}

std::string sl_cartan_label(int r) {
  std::ostringstream os;
  os << "E(" << r << "," << r << ")-E(" << r + 1 << "," << r + 1 << ")";
  return os.str();
}

std::string sp_c_label(int m, int i, int j) {
  std::ostringstream os;
  os << "E(" << i << "," << j << ")-E(" << m + 1 + j << "," << m + 1 + i << ")";
  return os.str();
}

std::string sp_a_label(int m, int r, int s) {
  std::ostringstream os;
  if (r == s) {
    os << "E(" << r << "," << m + 1 + r << ")";
  } else {
    os << "E(" << r << "," << m + 1 + s << ")+E(" << s << "," << m + 1 + r << ")";
  }
  return os.str();
}

std::string sp_b_label(int m, int r, int s) {
  std::ostringstream os;
  if (r == s) {
    os << "E(" << m + 1 + r << "," << r << ")";
  } else {
    os << "E(" << m + 1 + r << "," << s << ")+E(" << m + 1 + s << "," << r << ")";
  }
  return os.str();
}

std::vector<BasisElement> enumerate_basis(AlgebraKind kind, int rank) {
  std::vector<BasisElement> out;
  if (kind == AlgebraKind::SL) {
    const int n = rank;
    if (n < 2) throw std::invalid_argument("enumerate_basis: sl rank must be >= 2");
    const int size = n + 1;
    for (int i = 1; i <= size; ++i) {
      for (int j = 1; j <= size; ++j) {
        if (i == j) continue;
        out.push_back({sl_unit_label(i, j), SqMatrix::unit(size, i, j)});
      }
    }
    for (int r = 1; r <= n; ++r) {
      SqMatrix h(size);
      h.add(r, r, Rational(1));
      h.add(r + 1, r + 1, Rational(-1));
      out.push_back({sl_cartan_label(r), std::move(h)});
    }
  } else {
    const int m = rank;
    if (m < 1) throw std::invalid_argument("enumerate_basis: sp rank must be >= 1");
    const int size = 2 * m + 2;
    for (int i = 1; i <= m + 1; ++i) {
      for (int j = 1; j <= m + 1; ++j) {
        SqMatrix c(size);
        c.add(i, j, Rational(1));
        c.add(m + 1 + j, m + 1 + i, Rational(-1));
        out.push_back({sp_c_label(m, i, j), std::move(c)});
      }
    }
    for (int r = 1; r <= m + 1; ++r) {
      for (int s = r; s <= m + 1; ++s) {
        SqMatrix a(size);
        if (r == s) {
          a.add(r, m + 1 + r, Rational(1));
        } else {
          a.add(r, m + 1 + s, Rational(1));
          a.add(s, m + 1 + r, Rational(1));
        }
        out.push_back({sp_a_label(m, r, s), std::move(a)});
      }
    }
    for (int r = 1; r <= m + 1; ++r) {
      for (int s = r; s <= m + 1; ++s) {
        SqMatrix b(size);
        if (r == s) {
          b.add(m + 1 + r, r, Rational(1));
        } else {
          b.add(m + 1 + r, s, Rational(1));
          b.add(m + 1 + s, r, Rational(1));
        }
        out.push_back({sp_b_label(m, r, s), std::move(b)});
      }
    }
  }
  return out;
}

std::size_t algebra_dimension(AlgebraKind kind, int rank) {
  if (kind == AlgebraKind::SL) {
    const std::size_t n = static_cast<std::size_t>(rank);
    return (n + 1) * (n + 1) - 1;
  }
  const std::size_t m = static_cast<std::size_t>(rank);
  return (m + 1) * (2 * m + 3);
}

std::vector<std::size_t> select_subalgebra(AlgebraKind kind, int rank, Subalgebra which) {
  const auto basis = enumerate_basis(kind, rank);
  auto index_of = [&](const std::string& label) -> std::size_t {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].label == label) return i;
    }
    throw std::logic_error("select_subalgebra: missing label " + label);
  };

  std::vector<std::size_t> out;
  if (which == Subalgebra::Full) {
    out.resize(basis.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }

  if (kind == AlgebraKind::SL) {
    const int n = rank;
    switch (which) {
      case Subalgebra::Corner:
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n; ++j) {
            if (i != j) out.push_back(index_of(sl_unit_label(i, j)));
          }
        }
        for (int r = 1; r <= n - 1; ++r) out.push_back(index_of(sl_cartan_label(r)));
        break;
      case Subalgebra::Cartan:
        for (int r = 1; r <= n; ++r) out.push_back(index_of(sl_cartan_label(r)));
        break;
      case Subalgebra::CornerCartan:
        for (int r = 1; r <= n - 1; ++r) out.push_back(index_of(sl_cartan_label(r)));
        break;
      default:
        break;
    }
  } else {
    const int m = rank;
    switch (which) {
      case Subalgebra::Corner:
        for (int i = 1; i <= m; ++i) {
          for (int j = 1; j <= m; ++j) out.push_back(index_of(sp_c_label(m, i, j)));
        }
        for (int r = 1; r <= m; ++r) {
          for (int s = r; s <= m; ++s) out.push_back(index_of(sp_a_label(m, r, s)));
        }
        for (int r = 1; r <= m; ++r) {
          for (int s = r; s <= m; ++s) out.push_back(index_of(sp_b_label(m, r, s)));
        }
        break;
      case Subalgebra::Cartan:
        for (int i = 1; i <= m + 1; ++i) out.push_back(index_of(sp_c_label(m, i, i)));
        break;
      case Subalgebra::CornerCartan:
        for (int i = 1; i <= m; ++i) out.push_back(index_of(sp_c_label(m, i, i)));
        break;
      default:
        break;
    }
  }
  return out;
}

StructureTable::StructureTable(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
  std::vector<SparseVec<SqMatrix::Entry>> vecs;
  vecs.reserve(basis_.size());
  for (const auto& b : basis_) vecs.push_back(b.mat.as_vec());
  BasisExpander expander(vecs);
  if (expander.rank() != basis_.size()) {
    throw std::invalid_argument("StructureTable: basis elements are linearly dependent");
  }

  const std::size_t d = basis_.size();
  table_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const SqMatrix br = matrix_bracket(basis_[i].mat, basis_[j].mat);
      auto coords = expander.expand(br.as_vec());
      if (!coords) {
        throw std::invalid_argument("StructureTable: bracket [" + basis_[i].label + "," +
                                    basis_[j].label + "] leaves the span");
      }
      auto& cell = table_[i * d + j];
      for (std::size_t k = 0; k < d; ++k) {
        if ((*coords)[k] != 0) cell.emplace_back(k, (*coords)[k]);
      }
    }
  }
}

const std::vector<std::pair<std::size_t, Rational>>& StructureTable::bracket(std::size_t i,
                                                                             std::size_t j) const {
  return table_.at(i * basis_.size() + j);
}

std::string StructureTable::to_csv() const {
  std::ostringstream os;
  os << "label_a,label_b,label_c,coefficient\n";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      for (const auto& [k, c] : bracket(i, j)) {
        os << basis_[i].label << "," << basis_[j].label << "," << basis_[k].label << ","
           << to_string(c) << "\n";
      }
    }
  }
  return os.str();
}

bool jacobi_holds(const StructureTable& table) {
  const std::size_t d = table.dim();
  auto add_nested = [&](std::map<std::size_t, Rational>& acc, std::size_t x, std::size_t i,
                        std::size_t j, int sign) {
    for (const auto& [k, c] : table.bracket(i, j)) {
      for (const auto& [l, c2] : table.bracket(x, k)) {
        acc[l] += Rational(sign) * c * c2;
      }
    }
  };
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      for (std::size_t z = 0; z < d; ++z) {
        std::map<std::size_t, Rational> acc;
        add_nested(acc, x, y, z, 1);
        add_nested(acc, y, z, x, 1);
        add_nested(acc, z, x, y, 1);
        for (const auto& [l, c] : acc) {
          if (c != 0) return false;
        }
      }
    }
  }
  return true;
}

int sp_ambient_index(int m, int slot) {
  if (slot < 0 || slot > 2 * m) throw std::out_of_range("sp_ambient_index: slot out of range");
  if (slot == 0) return m + 1;      // x_0
  if (slot <= m) return slot;       // x_i
  return slot + 1;                  // y_i = x_{m+1+i}, slot m+i
}

int sp_slot_index(int m, int ambient) {
  if (ambient < 1 || ambient > 2 * m + 1) throw std::out_of_range("sp_slot_index: index out of range");
  if (ambient == m + 1) return 0;
  if (ambient < m + 1) return ambient;
  return ambient - 1;
}

}  // namespace oscrep
