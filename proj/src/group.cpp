#include "soficlab/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "soficlab/errors.hpp"

namespace soficlab {

namespace {
constexpr size_t kEnumerationCap = 200000;
// Exhaustive associativity is cubic; larger tables come from constructions
// that are associative by construction and get a strided sample instead.
constexpr size_t kFullAssocCheckCap = 256;
}  // namespace

std::vector<Elem> Group::elements() const {
  throw UnsupportedGroup("cannot enumerate an infinite group ("
                         + description() + ")");
}

std::optional<size_t> Group::order() const {
  if (!is_finite()) {
    return std::nullopt;
  }
  return elements().size();
}

std::vector<Elem> Group::folner_candidate(size_t) const {
  throw NotAmenableCapable("no Folner provider for " + description());
}

// ---------------------------------------------------------------------
// TableGroup
// ---------------------------------------------------------------------

TableGroup::TableGroup(std::vector<std::vector<std::uint32_t>> table,
                       std::vector<std::string>                names)
    : table_(std::move(table)), names_(std::move(names)) {
  size_t const n = table_.size();
  if (n == 0 || names_.size() != n) {
    throw BadIndex("group table/name size mismatch");
  }
  for (auto const& row : table_) {
    if (row.size() != n) {
      throw BadIndex("group table is not square");
    }
    for (auto v : row) {
      if (v >= n) {
        throw BadIndex("group table entry out of range");
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
  inverse_.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (size_t j = 0; j < n; ++j) {
      if (table_[i][j] == identity_ && table_[j][i] == identity_) {
        inverse_[i] = static_cast<std::uint32_t>(j);
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      throw BadIndex("element " + std::to_string(i) + " has no inverse");
    }
  }
  size_t const stride
      = n <= kFullAssocCheckCap ? 1 : (n / kFullAssocCheckCap + 1);
  for (size_t i = 0; i < n; i += stride) {
    for (size_t j = 0; j < n; j += stride) {
      for (size_t k = 0; k < n; k += stride) {
        if (table_[table_[i][j]][k] != table_[i][table_[j][k]]) {
          throw NotAssociative(i, j, k);
        }
      }
    }
  }
}

std::shared_ptr<TableGroup const> TableGroup::cyclic(size_t n) {
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
  return std::make_shared<TableGroup const>(std::move(table),
                                            std::move(names));
}

std::shared_ptr<TableGroup const> TableGroup::trivial() {
  return cyclic(1);
}

std::shared_ptr<TableGroup const> TableGroup::units_of(
    FiniteMonoid const& m, std::vector<std::uint32_t>* monoid_index_of) {
  std::vector<std::uint32_t> units = m.units();
  std::unordered_map<std::uint32_t, std::uint32_t> pos;
  for (size_t i = 0; i < units.size(); ++i) {
    pos[units[i]] = static_cast<std::uint32_t>(i);
  }
  size_t const n = units.size();
  std::vector<std::vector<std::uint32_t>> table(n,
                                                std::vector<std::uint32_t>(n));
  std::vector<std::string>                names(n);
  for (size_t i = 0; i < n; ++i) {
    names[i] = m.name(units[i]);
    for (size_t j = 0; j < n; ++j) {
      table[i][j] = pos.at(m.product(units[i], units[j]));
    }
  }
  if (monoid_index_of != nullptr) {
    *monoid_index_of = units;
  }
  return std::make_shared<TableGroup const>(std::move(table),
                                            std::move(names));
}

std::shared_ptr<TableGroup const> TableGroup::from_permutations(
    size_t degree, std::vector<std::vector<std::uint32_t>> const& gens) {
  for (auto const& g : gens) {
    if (g.size() != degree) {
      throw BadIndex("permutation degree mismatch");
    }
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) {
        throw BadIndex("not a permutation");
      }
      hit[v] = true;
    }
  }
  std::vector<std::uint32_t> id(degree);
  for (size_t t = 0; t < degree; ++t) {
    id[t] = static_cast<std::uint32_t>(t);
  }
  std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
  std::vector<std::vector<std::uint32_t>>             elems;
  std::queue<std::vector<std::uint32_t>>              work;
  seen[id] = 0;
  elems.push_back(id);
  work.push(id);
  while (!work.empty()) {
    auto cur = work.front();
    work.pop();
    for (auto const& g : gens) {
      std::vector<std::uint32_t> next(degree);
      for (size_t t = 0; t < degree; ++t) {
        next[t] = g[cur[t]];  // apply cur, then g
      }
      if (seen.emplace(next, static_cast<std::uint32_t>(elems.size()))
              .second) {
        elems.push_back(next);
        work.push(next);
        if (elems.size() > kEnumerationCap) {
          throw CapExceeded("core", "permutation closure exceeds cap");
        }
      }
    }
  }
  // re-index in lexicographic order so construction order does not leak
  std::sort(elems.begin(), elems.end());
  std::map<std::vector<std::uint32_t>, std::uint32_t> pos;
  for (size_t i = 0; i < elems.size(); ++i) {
    pos[elems[i]] = static_cast<std::uint32_t>(i);
  }
  size_t const n = elems.size();
  std::vector<std::vector<std::uint32_t>> table(n,
                                                std::vector<std::uint32_t>(n));
  std::vector<std::string>                names(n);
  for (size_t i = 0; i < n; ++i) {
    std::string name;
    name.push_back('[');
    for (size_t t = 0; t < degree; ++t) {
      if (t > 0) name.push_back(' ');
      name += std::to_string(elems[i][t]);
    }
    name.push_back(']');
    names[i] = name;
    for (size_t j = 0; j < n; ++j) {
      std::vector<std::uint32_t> prod(degree);
      for (size_t t = 0; t < degree; ++t) {
        prod[t] = elems[j][elems[i][t]];
      }
      table[i][j] = pos.at(prod);
    }
  }
  return std::make_shared<TableGroup const>(std::move(table),
                                            std::move(names));
}

std::string TableGroup::description() const {
  return "finite group of order " + std::to_string(size());
}

std::uint32_t TableGroup::index(Elem const& a) const {
  size_t        pos = 0;
  std::uint32_t i   = enc::get_u32(a, pos);
  if (i >= size() || pos != a.size()) {
    throw BadIndex("bad table group element encoding");
  }
  return i;
}

Elem TableGroup::mul(Elem const& a, Elem const& b) const {
  return enc::u32(table_[index(a)][index(b)]);
}

Elem TableGroup::inv(Elem const& a) const {
  return enc::u32(inverse_[index(a)]);
}

std::string TableGroup::label(Elem const& a) const {
  return names_[index(a)];
}

std::vector<Elem> TableGroup::generators() const {
  return elements();
}

std::vector<Elem> TableGroup::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for (size_t i = 0; i < size(); ++i) {
    out.push_back(enc::u32(static_cast<std::uint32_t>(i)));
  }
  return out;
}

std::vector<Elem> TableGroup::folner_candidate(size_t) const {
  return elements();
}

bool TableGroup::is_abelian() const {
  for (size_t i = 0; i < size(); ++i) {
    for (size_t j = i + 1; j < size(); ++j) {
      if (table_[i][j] != table_[j][i]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<size_t> TableGroup::element_orders() const {
  std::vector<size_t> orders;
  orders.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i) {
    std::uint32_t acc = i;
    size_t        ord = 1;
    while (acc != identity_) {
      acc = table_[acc][i];
      ++ord;
    }
    orders.push_back(ord);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<std::uint32_t> TableGroup::subgroup_closure(
    std::vector<std::uint32_t> gens) const {
  std::unordered_set<std::uint32_t> seen{identity_};
  std::queue<std::uint32_t>         work;
  work.push(identity_);
  for (auto g : gens) {
    if (seen.insert(g).second) {
      work.push(g);
    }
  }
  while (!work.empty()) {
    std::uint32_t cur = work.front();
    work.pop();
    for (auto g : gens) {
      for (std::uint32_t next : {table_[cur][g], table_[cur][inverse_[g]]}) {
        if (seen.insert(next).second) {
          work.push(next);
        }
      }
    }
  }
  std::vector<std::uint32_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool TableGroup::is_normal_subgroup(
    std::vector<std::uint32_t> const& sorted_subgroup) const {
  auto contains = [&](std::uint32_t x) {
    return std::binary_search(sorted_subgroup.begin(), sorted_subgroup.end(),
                              x);
  };
  for (auto h : sorted_subgroup) {
    for (std::uint32_t g = 0; g < size(); ++g) {
      if (!contains(table_[table_[g][h]][inverse_[g]])) {
        return false;
      }
    }
  }
  return true;
}

TableGroup::Quotient TableGroup::quotient_by(
    std::vector<std::uint32_t> const& sorted_subgroup) const {
  if (!is_normal_subgroup(sorted_subgroup)) {
    throw BadIndex("quotient by a non-normal subgroup");
  }
  size_t const               n = size();
  std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
  std::vector<std::uint32_t> representative;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (coset_of[g] != UINT32_MAX) {
      continue;
    }
    std::uint32_t const c = static_cast<std::uint32_t>(representative.size());
    representative.push_back(g);
    for (auto h : sorted_subgroup) {
      coset_of[table_[h][g]] = c;
    }
  }
  size_t const q = representative.size();
  std::vector<std::vector<std::uint32_t>> table(q,
                                                std::vector<std::uint32_t>(q));
  std::vector<std::string>                names(q);
  for (size_t i = 0; i < q; ++i) {
    names[i] = names_[representative[i]];
    for (size_t j = 0; j < q; ++j) {
      table[i][j] = coset_of[table_[representative[i]][representative[j]]];
    }
  }
  Quotient out;
  out.group = std::make_shared<TableGroup const>(std::move(table),
                                                 std::move(names));
  out.coset_of       = std::move(coset_of);
  out.representative = std::move(representative);
  return out;
}

// ---------------------------------------------------------------------
// FgAbelianGroup
// ---------------------------------------------------------------------

FgAbelianGroup::FgAbelianGroup(size_t rank, std::vector<std::uint64_t> factors)
    : rank_(rank), factors_(std::move(factors)) {
  for (auto f : factors_) {
    if (f == 0) {
      throw BadIndex("invariant factor must be positive");
    }
  }
}

std::string FgAbelianGroup::description() const {
  std::string out;
  if (rank_ > 0) {
    out = rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
  }
  for (auto f : factors_) {
    if (!out.empty()) out += " x ";
    out += "Z/" + std::to_string(f);
  }
  return out.empty() ? "trivial group" : out;
}

Elem FgAbelianGroup::make(std::vector<std::int64_t> const& coords) const {
  if (coords.size() != rank_ + factors_.size()) {
    throw BadIndex("coordinate count mismatch");
  }
  Elem out;
  for (size_t i = 0; i < rank_; ++i) {
    enc::put_i64(out, coords[i]);
  }
  for (size_t i = 0; i < factors_.size(); ++i) {
    std::int64_t const f = static_cast<std::int64_t>(factors_[i]);
    std::int64_t       v = coords[rank_ + i] % f;
    if (v < 0) v += f;
    enc::put_i64(out, v);
  }
  return out;
}

std::vector<std::int64_t> FgAbelianGroup::coords(Elem const& a) const {
  std::vector<std::int64_t> out(rank_ + factors_.size());
  size_t                    pos = 0;
  for (auto& v : out) {
    v = enc::get_i64(a, pos);
  }
  if (pos != a.size()) {
    throw BadIndex("bad abelian group element encoding");
  }
  return out;
}

Elem FgAbelianGroup::one() const {
  return make(std::vector<std::int64_t>(rank_ + factors_.size(), 0));
}

Elem FgAbelianGroup::mul(Elem const& a, Elem const& b) const {
  auto ca = coords(a);
  auto cb = coords(b);
  for (size_t i = 0; i < ca.size(); ++i) {
    ca[i] += cb[i];
  }
  return make(ca);
}

Elem FgAbelianGroup::inv(Elem const& a) const {
  auto c = coords(a);
  for (auto& v : c) {
    v = -v;
  }
  return make(c);
}

std::string FgAbelianGroup::label(Elem const& a) const {
  auto c = coords(a);
  if (c.size() == 1) {
    return std::to_string(c[0]);
  }
  std::string out = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c[i]);
  }
  out += ")";
  return out;
}

std::vector<Elem> FgAbelianGroup::generators() const {
  std::vector<Elem> out;
  for (size_t i = 0; i < rank_ + factors_.size(); ++i) {
    std::vector<std::int64_t> c(rank_ + factors_.size(), 0);
    c[i] = 1;
    out.push_back(make(c));
  }
  return out;
}

std::vector<Elem> FgAbelianGroup::elements() const {
  if (rank_ != 0) {
    return Group::elements();
  }
  std::vector<std::vector<std::int64_t>> all{{}};
  for (auto f : factors_) {
    std::vector<std::vector<std::int64_t>> next;
    for (auto const& prefix : all) {
      for (std::uint64_t v = 0; v < f; ++v) {
        auto c = prefix;
        c.push_back(static_cast<std::int64_t>(v));
        next.push_back(std::move(c));
        if (next.size() > kEnumerationCap) {
          throw CapExceeded("groups", "torsion part exceeds enumeration cap");
        }
      }
    }
    all = std::move(next);
  }
  std::vector<Elem> out;
  out.reserve(all.size());
  for (auto const& c : all) {
    out.push_back(make(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> FgAbelianGroup::folner_candidate(size_t step) const {
  if (rank_ == 0) {
    return elements();
  }
  std::uint64_t const side = step + 1;
  std::uint64_t       total = 1;
  for (size_t i = 0; i < rank_; ++i) {
    total *= side;
    if (total > kEnumerationCap) {
      throw CapExceeded("groups", "Folner box exceeds enumeration cap");
    }
  }
  std::vector<std::vector<std::int64_t>> boxes{{}};
  for (size_t i = 0; i < rank_; ++i) {
    std::vector<std::vector<std::int64_t>> next;
    next.reserve(boxes.size() * side);
    for (auto const& prefix : boxes) {
      for (std::uint64_t v = 0; v < side; ++v) {
        auto c = prefix;
        c.push_back(static_cast<std::int64_t>(v));
        next.push_back(std::move(c));
      }
    }
    boxes = std::move(next);
  }
  std::vector<std::vector<std::int64_t>> torsion{{}};
  for (auto f : factors_) {
    std::vector<std::vector<std::int64_t>> next;
    for (auto const& prefix : torsion) {
      for (std::uint64_t v = 0; v < f; ++v) {
        auto c = prefix;
        c.push_back(static_cast<std::int64_t>(v));
        next.push_back(std::move(c));
      }
    }
    torsion = std::move(next);
    if (torsion.size() * boxes.size() > kEnumerationCap) {
      throw CapExceeded("groups", "Folner box exceeds enumeration cap");
    }
  }
  std::vector<Elem> out;
  out.reserve(boxes.size() * torsion.size());
  for (auto const& b : boxes) {
    for (auto const& t : torsion) {
      auto c = b;
      c.insert(c.end(), t.begin(), t.end());
      out.push_back(make(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------
// FreeGroup
// ---------------------------------------------------------------------

namespace {
constexpr char kGenLetters[] = "xyzwuvst";
constexpr size_t kMaxFreeRank = sizeof(kGenLetters) - 1;
}  // namespace

FreeGroup::FreeGroup(size_t rank, std::vector<FiniteQuotient> quotients)
    : rank_(rank), quotients_(std::move(quotients)) {
  if (rank_ > kMaxFreeRank) {
    throw UnsupportedGroup("free group rank capped at "
                           + std::to_string(kMaxFreeRank));
  }
  for (auto const& q : quotients_) {
    if (!q.target || !q.target->is_finite()
        || q.gen_images.size() != rank_) {
      throw BadIndex("bad finite quotient data for free group");
    }
  }
}

std::string FreeGroup::description() const {
  return "free group of rank " + std::to_string(rank_) + " ("
         + std::to_string(quotients_.size()) + " finite quotients supplied)";
}

Elem FreeGroup::mul(Elem const& a, Elem const& b) const {
  Elem out = a;
  for (char c : b) {
    if (!out.empty()
        && (static_cast<unsigned char>(out.back()) ^ 1U)
               == static_cast<unsigned char>(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Elem FreeGroup::inv(Elem const& a) const {
  Elem out;
  out.reserve(a.size());
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    out.push_back(static_cast<char>(static_cast<unsigned char>(*it) ^ 1U));
  }
  return out;
}

std::string FreeGroup::label(Elem const& a) const {
  if (a.empty()) {
    return "1";
  }
  std::string out;
  for (char c : a) {
    unsigned char const u   = static_cast<unsigned char>(c);
    size_t const        gen = u >> 1;
    if (gen >= rank_) {
      throw BadIndex("bad free group element encoding");
    }
    char letter = kGenLetters[gen];
    out.push_back((u & 1U) ? static_cast<char>(letter - 'a' + 'A') : letter);
  }
  return out;
}

std::vector<Elem> FreeGroup::generators() const {
  std::vector<Elem> out;
  for (size_t i = 0; i < rank_; ++i) {
    out.push_back(generator(i));
  }
  return out;
}

std::vector<Elem> FreeGroup::elements() const {
  if (rank_ == 0) {
    return {Elem()};
  }
  return Group::elements();
}

Elem FreeGroup::apply_quotient(size_t q, Elem const& word) const {
  auto const& quot = quotients_.at(q);
  Elem        acc  = quot.target->one();
  for (char c : word) {
    unsigned char const u   = static_cast<unsigned char>(c);
    size_t const        gen = u >> 1;
    Elem const&         img = quot.gen_images.at(gen);
    acc = quot.target->mul(acc, (u & 1U) ? quot.target->inv(img) : img);
  }
  return acc;
}

Elem FreeGroup::generator(size_t i, bool inverse) const {
  if (i >= rank_) {
    throw BadIndex("generator index out of range");
  }
  Elem out;
  out.push_back(static_cast<char>((i << 1) | (inverse ? 1U : 0U)));
  return out;
}

Elem FreeGroup::parse_word(std::string const& text) const {
  if (text == "1") {
    return Elem();
  }
  Elem word;
  for (char c : text) {
    bool const  inverse = (c >= 'A' && c <= 'Z');
    char const  lower   = inverse ? static_cast<char>(c - 'A' + 'a') : c;
    char const* hit     = std::char_traits<char>::find(
        kGenLetters, kMaxFreeRank, lower);
    if (hit == nullptr || static_cast<size_t>(hit - kGenLetters) >= rank_) {
      throw BadIndex("bad free group letter '" + std::string(1, c) + "'");
    }
    word = mul(word, generator(static_cast<size_t>(hit - kGenLetters),
                               inverse));
  }
  return word;
}

// ---------------------------------------------------------------------
// QuotientImageGroup
// ---------------------------------------------------------------------

QuotientImageGroup::QuotientImageGroup(
    GroupPtr source, std::vector<StabiliserQuotient> components)
    : source_(std::move(source)), components_(std::move(components)) {
  if (!source_) {
    throw BadIndex("quotient image needs a source group");
  }
}

std::string QuotientImageGroup::description() const {
  if (components_.empty()) {
    return "trivial group (empty quotient product)";
  }
  std::string out = "image of " + source_->description() + " in ";
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += " x ";
    out += components_[i].quotient->description();
  }
  return out;
}

Elem QuotientImageGroup::one() const {
  std::vector<Elem> parts;
  parts.reserve(components_.size());
  for (auto const& c : components_) {
    parts.push_back(c.quotient->one());
  }
  return enc::tuple(parts);
}

Elem QuotientImageGroup::mul(Elem const& a, Elem const& b) const {
  auto pa = enc::untuple(a);
  auto pb = enc::untuple(b);
  if (pa.size() != components_.size() || pb.size() != components_.size()) {
    throw BadIndex("bad quotient image element encoding");
  }
  std::vector<Elem> parts(components_.size());
  for (size_t i = 0; i < components_.size(); ++i) {
    parts[i] = components_[i].quotient->mul(pa[i], pb[i]);
  }
  return enc::tuple(parts);
}

Elem QuotientImageGroup::inv(Elem const& a) const {
  auto pa = enc::untuple(a);
  if (pa.size() != components_.size()) {
    throw BadIndex("bad quotient image element encoding");
  }
  std::vector<Elem> parts(components_.size());
  for (size_t i = 0; i < components_.size(); ++i) {
    parts[i] = components_[i].quotient->inv(pa[i]);
  }
  return enc::tuple(parts);
}

std::string QuotientImageGroup::label(Elem const& a) const {
  auto pa = enc::untuple(a);
  std::string out = "(";
  for (size_t i = 0; i < pa.size(); ++i) {
    if (i > 0) out += ",";
    out += components_[i].quotient->label(pa[i]);
  }
  out += ")";
  return out;
}

Elem QuotientImageGroup::project(Elem const& source_elem) const {
  std::vector<Elem> parts;
  parts.reserve(components_.size());
  for (auto const& c : components_) {
    parts.push_back(c.hom(source_elem));
  }
  return enc::tuple(parts);
}

Elem QuotientImageGroup::component_of(Elem const& tuple_elem, size_t i) const {
  auto parts = enc::untuple(tuple_elem);
  if (i >= parts.size()) {
    throw BadIndex("component index out of range");
  }
  return parts[i];
}

std::vector<Elem> QuotientImageGroup::generators() const {
  std::vector<Elem> out;
  for (auto const& g : source_->generators()) {
    out.push_back(project(g));
  }
  if (out.empty()) {
    out.push_back(one());
  }
  return out;
}

bool QuotientImageGroup::is_finite() const noexcept {
  for (auto const& c : components_) {
    if (!c.quotient->is_finite()) {
      return false;
    }
  }
  return true;
}

std::vector<Elem> QuotientImageGroup::elements() const {
  if (!is_finite()) {
    return Group::elements();
  }
  std::vector<Elem> gens = generators();
  for (auto const& g : std::vector<Elem>(gens)) {
    gens.push_back(inv(g));
  }
  std::unordered_set<Elem> seen{one()};
  std::queue<Elem>         work;
  work.push(one());
  while (!work.empty()) {
    Elem cur = work.front();
    work.pop();
    for (auto const& g : gens) {
      Elem next = mul(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > kEnumerationCap) {
          throw CapExceeded("groups", "quotient image exceeds enumeration cap");
        }
        work.push(next);
      }
    }
  }
  std::vector<Elem> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool QuotientImageGroup::folner_capable() const noexcept {
  return is_finite() || source_->folner_capable();
}

std::string QuotientImageGroup::folner_strategy() const {
  return is_finite() ? "whole-finite-image" : "measured-pushforward";
}

std::vector<Elem> QuotientImageGroup::folner_candidate(size_t step) const {
  if (is_finite()) {
    return elements();
  }
  if (!source_->folner_capable()) {
    throw NotAmenableCapable("no Folner provider for " + description());
  }
  // Pushforward quality is measured, never assumed: the caller re-checks
  // each candidate with folner_quality before accepting it.
  std::vector<Elem> out;
  for (auto const& g : source_->folner_candidate(step)) {
    out.push_back(project(g));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

JointQuotientImage joint_quotient_image(
    GroupPtr source, std::vector<StabiliserQuotient> quotients) {
  std::vector<StabiliserQuotient> deduped;
  std::unordered_set<std::string> seen_ids;
  for (auto& q : quotients) {
    if (seen_ids.insert(q.orbit_id).second) {
      deduped.push_back(std::move(q));
    }
  }
  auto group = std::make_shared<QuotientImageGroup const>(std::move(source),
                                                          std::move(deduped));
  JointQuotientImage out;
  out.hom   = [group](Elem const& g) { return group->project(g); };
  out.group = group;
  return out;
}

}  // namespace soficlab
