#include "soficlab/finite_monoid.hpp"

#include <algorithm>
#include <unordered_set>

#include "soficlab/errors.hpp"

namespace soficlab {

FiniteMonoid::FiniteMonoid(std::vector<std::vector<std::uint32_t>> table,
                           std::vector<std::string>                names)
    : table_(std::move(table)), names_(std::move(names)) {
  size_t const n = table_.size();
  if (n == 0) {
    throw BadIndex("empty multiplication table");
  }
  if (n > limits::kTableCap) {
    throw CapExceeded("core", "table monoid of size " + std::to_string(n)
                                  + " exceeds cap "
                                  + std::to_string(limits::kTableCap));
  }
  if (names_.size() != n) {
    throw BadIndex("expected " + std::to_string(n) + " names, got "
                   + std::to_string(names_.size()));
  }
  std::unordered_set<std::string> seen;
  for (auto const& name : names_) {
    if (!seen.insert(name).second) {
      throw BadIndex("duplicate element name \"" + name + "\"");
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) {
      throw BadIndex("row " + std::to_string(i) + " has wrong length");
    }
    for (size_t j = 0; j < n; ++j) {
      if (table_[i][j] >= n) {
        throw BadIndex("table entry [" + std::to_string(i) + "]["
                       + std::to_string(j) + "] out of range");
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      std::uint32_t const ij = table_[i][j];
      for (size_t k = 0; k < n; ++k) {
        if (table_[ij][k] != table_[i][table_[j][k]]) {
          throw NotAssociative(i, j, k);
        }
      }
    }
  }
  bool found = false;
  for (size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      ok = table_[e][i] == i && table_[i][e] == i;
    }
    if (ok) {
      identity_ = static_cast<std::uint32_t>(e);
      found     = true;
    }
  }
  if (!found) {
    throw NoIdentity();
  }
}

std::uint32_t FiniteMonoid::index_of(std::string const& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw BadIndex("no element named \"" + name + "\"");
  }
  return static_cast<std::uint32_t>(it - names_.begin());
}

std::uint32_t FiniteMonoid::word_product(
    std::vector<std::uint32_t> const& word) const {
  std::uint32_t acc = identity_;
  for (auto w : word) {
    if (w >= size()) {
      throw BadIndex("word letter out of range");
    }
    acc = table_[acc][w];
  }
  return acc;
}

bool FiniteMonoid::is_unit(std::uint32_t i) const {
  for (size_t v = 0; v < size(); ++v) {
    if (table_[i][v] == identity_ && table_[v][i] == identity_) {
      return true;
    }
  }
  return false;
}

std::vector<std::uint32_t> FiniteMonoid::units() const {
  std::vector<std::uint32_t> out;
  for (size_t i = 0; i < size(); ++i) {
    if (is_unit(static_cast<std::uint32_t>(i))) {
      out.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return out;
}

bool FiniteMonoid::is_regular_element(std::uint32_t x) const {
  for (size_t y = 0; y < size(); ++y) {
    if (table_[table_[x][y]][x] == x) {
      return true;
    }
  }
  return false;
}

FiniteMonoid make_finite_monoid(std::vector<std::vector<std::uint32_t>> table,
                                std::vector<std::string>                names) {
  return FiniteMonoid(std::move(table), std::move(names));
}

FiniteMonoid make_transformation_monoid(size_t n, size_t cap) {
  if (n == 0) {
    throw BadIndex("T_n requires n >= 1");
  }
  if (n > cap) {
    throw CapExceeded("core", "T_" + std::to_string(n) + " exceeds cap n <= "
                                  + std::to_string(cap));
  }
  size_t size = 1;
  for (size_t i = 0; i < n; ++i) {
    size *= n;
  }
  // Element index encodes the image list in base n, most significant digit
  // first, so index 0 is the constant-0 map and the names read naturally.
  std::vector<std::vector<std::uint32_t>> maps(size,
                                               std::vector<std::uint32_t>(n));
  std::vector<std::string>                names(size);
  for (size_t e = 0; e < size; ++e) {
    size_t      v = e;
    std::string name(n, '0');
    for (size_t t = n; t-- > 0;) {
      maps[e][t] = static_cast<std::uint32_t>(v % n);
      name[t]    = static_cast<char>('0' + maps[e][t]);
      v /= n;
    }
    names[e] = name;
  }
  auto index_of_map = [&](std::vector<std::uint32_t> const& f) {
    size_t idx = 0;
    for (size_t t = 0; t < n; ++t) {
      idx = idx * n + f[t];
    }
    return static_cast<std::uint32_t>(idx);
  };
  std::vector<std::vector<std::uint32_t>> table(
      size, std::vector<std::uint32_t>(size));
  std::vector<std::uint32_t> comp(n);
  for (size_t a = 0; a < size; ++a) {
    for (size_t b = 0; b < size; ++b) {
      for (size_t t = 0; t < n; ++t) {
        comp[t] = maps[b][maps[a][t]];  // apply a, then b
      }
      table[a][b] = index_of_map(comp);
    }
  }
  return FiniteMonoid(std::move(table), std::move(names));
}

FiniteMonoid direct_product(FiniteMonoid const& a, FiniteMonoid const& b,
                            size_t cap) {
  size_t const n = a.size() * b.size();
  if (n > cap) {
    throw CapExceeded("core", "direct product of size " + std::to_string(n)
                                  + " exceeds cap " + std::to_string(cap));
  }
  std::vector<std::vector<std::uint32_t>> table(n,
                                                std::vector<std::uint32_t>(n));
  std::vector<std::string>                names(n);
  auto idx = [&](size_t i, size_t j) {
    return static_cast<std::uint32_t>(i * b.size() + j);
  };
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      names[idx(i, j)] = "(" + a.name(static_cast<std::uint32_t>(i)) + ","
                         + b.name(static_cast<std::uint32_t>(j)) + ")";
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      std::uint32_t const ai = static_cast<std::uint32_t>(i / b.size());
      std::uint32_t const bi = static_cast<std::uint32_t>(i % b.size());
      std::uint32_t const aj = static_cast<std::uint32_t>(j / b.size());
      std::uint32_t const bj = static_cast<std::uint32_t>(j % b.size());
      table[i][j]            = idx(a.product(ai, aj), b.product(bi, bj));
    }
  }
  return FiniteMonoid(std::move(table), std::move(names));
}

FiniteMonoid make_semilattice2() {
  // index 0 = the identity "1", index 1 = the absorbing "0"
  return FiniteMonoid({{0, 1}, {1, 1}}, {"1", "0"});
}

FiniteMonoid make_cyclic_monoid(size_t n) {
  if (n == 0) {
    throw BadIndex("cyclic group requires n >= 1");
  }
  std::vector<std::vector<std::uint32_t>> table(n,
                                                std::vector<std::uint32_t>(n));
  std::vector<std::string>                names(n);
  for (size_t i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (size_t j = 0; j < n; ++j) {
      table[i][j] = static_cast<std::uint32_t>((i + j) % n);
    }
  }
  return FiniteMonoid(std::move(table), std::move(names));
}

FiniteMonoid make_trivial_monoid() {
  return FiniteMonoid({{0}}, {"1"});
}

Cancellativity cancellativity_check(FiniteMonoid const& m) {
  size_t const n = m.size();
  Cancellativity out{true, true};
  for (size_t a = 0; a < n && (out.left || out.right); ++a) {
    std::vector<bool> seen_left(n, false), seen_right(n, false);
    for (size_t x = 0; x < n; ++x) {
      std::uint32_t const ax = m.product(static_cast<std::uint32_t>(a),
                                         static_cast<std::uint32_t>(x));
      std::uint32_t const xa = m.product(static_cast<std::uint32_t>(x),
                                         static_cast<std::uint32_t>(a));
      if (seen_left[ax]) {
        out.left = false;
      }
      if (seen_right[xa]) {
        out.right = false;
      }
      seen_left[ax]  = true;
      seen_right[xa] = true;
    }
  }
  return out;
}

}  // namespace soficlab
