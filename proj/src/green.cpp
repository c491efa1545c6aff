#include "soficlab/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "soficlab/errors.hpp"

namespace soficlab {

namespace {

// Iterative Tarjan over an implicit graph: successor(v, e) is the target of
// the e-th edge out of v, for e in [0, out_degree).
template <typename Successor>
std::vector<std::uint32_t> scc_ids(size_t n, size_t out_degree,
                                   Successor successor) {
  std::vector<std::uint32_t> ids(n, UINT32_MAX);
  std::vector<std::uint32_t> low(n, 0), num(n, UINT32_MAX);
  std::vector<bool>          on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t              counter = 0;
  std::uint32_t              next_id = 0;

  struct Frame {
    std::uint32_t v;
    size_t        edge;
  };
  std::vector<Frame> frames;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (num[root] != UINT32_MAX) {
      continue;
    }
    frames.push_back({root, 0});
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      std::uint32_t const v = frames.back().v;
      if (frames.back().edge < out_degree) {
        std::uint32_t const w = successor(v, frames.back().edge++);
        if (num[w] == UINT32_MAX) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          for (;;) {
            std::uint32_t const w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            ids[w]      = next_id;
            if (w == v) break;
          }
          ++next_id;
        }
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
      }
    }
  }
  return ids;
}

// Renumbers class ids by first element occurrence so partitions computed by
// different algorithms compare equal.
std::uint32_t normalize_ids(std::vector<std::uint32_t>& ids) {
  std::map<std::uint32_t, std::uint32_t> remap;
  for (auto& id : ids) {
    auto [it, added] = remap.emplace(
        id, static_cast<std::uint32_t>(remap.size()));
    id = it->second;
  }
  return static_cast<std::uint32_t>(remap.size());
}

std::vector<std::vector<std::uint32_t>> members_of(
    std::vector<std::uint32_t> const& ids, size_t count) {
  std::vector<std::vector<std::uint32_t>> out(count);
  for (std::uint32_t x = 0; x < ids.size(); ++x) {
    out[ids[x]].push_back(x);
  }
  return out;
}

std::uint32_t intersect_partitions(std::vector<std::uint32_t> const& a,
                                   std::vector<std::uint32_t> const& b,
                                   std::vector<std::uint32_t>&       out) {
  out.resize(a.size());
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> remap;
  for (size_t x = 0; x < a.size(); ++x) {
    auto [it, added] = remap.emplace(
        std::make_pair(a[x], b[x]), static_cast<std::uint32_t>(remap.size()));
    out[x] = it->second;
  }
  return static_cast<std::uint32_t>(remap.size());
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x         = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    parent[find(a)] = find(b);
  }
};

void finish_structure(FiniteMonoid const& m, GreenStructure& g) {
  g.n_r = normalize_ids(g.r_class);
  g.n_l = normalize_ids(g.l_class);
  g.n_d = normalize_ids(g.d_class);
  g.n_j = normalize_ids(g.j_class);
  g.n_h = intersect_partitions(g.r_class, g.l_class, g.h_class);

  g.r_members = members_of(g.r_class, g.n_r);
  g.l_members = members_of(g.l_class, g.n_l);
  g.h_members = members_of(g.h_class, g.n_h);
  g.d_members = members_of(g.d_class, g.n_d);
  g.j_members = members_of(g.j_class, g.n_j);

  g.unit_h_class = g.h_class[m.identity()];

  g.eggbox.resize(g.n_d);
  for (std::uint32_t d = 0; d < g.n_d; ++d) {
    auto& box = g.eggbox[d];
    std::set<std::uint32_t> r_set, l_set;
    for (auto x : g.d_members[d]) {
      r_set.insert(g.r_class[x]);
      l_set.insert(g.l_class[x]);
    }
    box.r_ids.assign(r_set.begin(), r_set.end());
    box.l_ids.assign(l_set.begin(), l_set.end());
    box.h_grid.assign(box.r_ids.size(),
                      std::vector<std::uint32_t>(box.l_ids.size(),
                                                 UINT32_MAX));
    box.h_sizes.assign(box.r_ids.size(),
                       std::vector<size_t>(box.l_ids.size(), 0));
    for (auto x : g.d_members[d]) {
      size_t const r = std::lower_bound(box.r_ids.begin(), box.r_ids.end(),
                                        g.r_class[x])
                       - box.r_ids.begin();
      size_t const l = std::lower_bound(box.l_ids.begin(), box.l_ids.end(),
                                        g.l_class[x])
                       - box.l_ids.begin();
      if (box.h_grid[r][l] != UINT32_MAX
          && box.h_grid[r][l] != g.h_class[x]) {
        throw Error("green", "egg-box cell holds two H-classes");
      }
      box.h_grid[r][l] = g.h_class[x];
      ++box.h_sizes[r][l];
    }
    for (auto const& row : box.h_grid) {
      for (auto cell : row) {
        if (cell == UINT32_MAX) {
          throw Error("green", "empty egg-box cell in a D-class");
        }
      }
    }
  }
}

}  // namespace

GreenStructure green_relations(FiniteMonoid const& m) {
  size_t const n = m.size();
  GreenStructure g;

  g.r_class = scc_ids(n, n, [&](std::uint32_t x, size_t e) {
    return m.product(x, static_cast<std::uint32_t>(e));
  });
  g.l_class = scc_ids(n, n, [&](std::uint32_t x, size_t e) {
    return m.product(static_cast<std::uint32_t>(e), x);
  });
  g.j_class = scc_ids(n, 2 * n, [&](std::uint32_t x, size_t e) {
    return e < n ? m.product(x, static_cast<std::uint32_t>(e))
                 : m.product(static_cast<std::uint32_t>(e - n), x);
  });

  // D = join of R and L
  UnionFind uf(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      if (g.r_class[x] == g.r_class[y] || g.l_class[x] == g.l_class[y]) {
        uf.unite(x, y);
      }
    }
  }
  g.d_class.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    g.d_class[x] = uf.find(x);
  }

  finish_structure(m, g);
  return g;
}

GreenStructure green_relations_bruteforce(FiniteMonoid const& m) {
  size_t const n = m.size();
  GreenStructure g;

  std::vector<std::vector<bool>> left_ideal(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> right_ideal(n, std::vector<bool>(n, false));
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t e = 0; e < n; ++e) {
      left_ideal[x][m.product(e, x)]  = true;  // Mx
      right_ideal[x][m.product(x, e)] = true;  // xM
    }
  }
  std::vector<std::vector<bool>> two_sided(n, std::vector<bool>(n, false));
  for (std::uint32_t x = 0; x < n; ++x) {
    // MxM = union of (ax)M over a
    for (std::uint32_t a = 0; a < n; ++a) {
      auto const& row = right_ideal[m.product(a, x)];
      for (std::uint32_t e = 0; e < n; ++e) {
        two_sided[x][e] = two_sided[x][e] || row[e];
      }
    }
  }

  auto classify = [n](std::vector<std::vector<bool>> const& sets,
                      std::vector<std::uint32_t>&           out) {
    std::map<std::vector<bool>, std::uint32_t> remap;
    out.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      auto [it, added] = remap.emplace(
          sets[x], static_cast<std::uint32_t>(remap.size()));
      out[x] = it->second;
    }
  };
  classify(left_ideal, g.l_class);
  classify(right_ideal, g.r_class);
  classify(two_sided, g.j_class);

  // x D y iff there is z with x L z and z R y; verify the composed relation
  // is an equivalence while building it
  std::vector<std::vector<bool>> lr_exists;
  {
    std::uint32_t n_l = *std::max_element(g.l_class.begin(),
                                          g.l_class.end())
                        + 1;
    std::uint32_t n_r = *std::max_element(g.r_class.begin(),
                                          g.r_class.end())
                        + 1;
    lr_exists.assign(n_l, std::vector<bool>(n_r, false));
    for (std::uint32_t z = 0; z < n; ++z) {
      lr_exists[g.l_class[z]][g.r_class[z]] = true;
    }
  }
  auto related = [&](std::uint32_t x, std::uint32_t y) {
    return lr_exists[g.l_class[x]][g.r_class[y]];
  };
  g.d_class.assign(n, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (g.d_class[x] != UINT32_MAX) {
      continue;
    }
    g.d_class[x] = next;
    for (std::uint32_t y = x + 1; y < n; ++y) {
      if (related(x, y)) {
        if (!related(y, x)) {
          throw Error("green", "definitional D relation is not symmetric");
        }
        g.d_class[y] = next;
      }
    }
    ++next;
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if ((g.d_class[x] == g.d_class[y]) != related(x, y)) {
        throw Error("green", "definitional D relation is not transitive");
      }
    }
  }

  finish_structure(m, g);
  return g;
}

std::shared_ptr<TableGroup const> group_of_units(
    FiniteMonoid const& m, std::vector<std::uint32_t>* monoid_index_of) {
  return TableGroup::units_of(m, monoid_index_of);
}

bool j_class_of_identity_is_units(FiniteMonoid const&   m,
                                  GreenStructure const& green) {
  auto const units = m.units();
  auto const& j    = green.j_members[green.j_class[m.identity()]];
  return units == j;  // both sorted ascending
}

SchutzGroup schutzenberger_group(FiniteMonoid const&   m,
                                 GreenStructure const& green,
                                 std::uint32_t         h_id) {
  if (h_id >= green.n_h) {
    throw BadIndex("H-class id out of range");
  }
  SchutzGroup out;
  out.h_members = green.h_members[h_id];
  auto const& h = out.h_members;
  auto pos_of   = [&](std::uint32_t x) {
    return static_cast<std::uint32_t>(
        std::lower_bound(h.begin(), h.end(), x) - h.begin());
  };
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint32_t e = 0; e < m.size(); ++e) {
    std::vector<std::uint32_t> image(h.size());
    bool                       stays = true;
    for (size_t i = 0; i < h.size() && stays; ++i) {
      std::uint32_t const y = m.product(h[i], e);
      stays = std::binary_search(h.begin(), h.end(), y);
      if (stays) {
        image[i] = pos_of(y);
      }
    }
    if (!stays) {
      continue;
    }
    std::vector<bool> hit(h.size(), false);
    bool              bijective = true;
    for (auto v : image) {
      if (hit[v]) {
        bijective = false;
        break;
      }
      hit[v] = true;
    }
    // Hm = H forces a permutation; a non-bijective stable image means
    // Hm is a proper subset, which does not qualify
    if (bijective) {
      seen.insert(image);
    }
  }
  out.perms.assign(seen.begin(), seen.end());

  auto compose = [&](std::vector<std::uint32_t> const& f,
                     std::vector<std::uint32_t> const& g) {
    std::vector<std::uint32_t> fg(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      fg[i] = g[f[i]];  // acting on the right: apply f, then g
    }
    return fg;
  };
  for (auto const& f : out.perms) {
    for (auto const& g : out.perms) {
      if (!seen.count(compose(f, g))) {
        throw Error("green", "Schutzenberger permutations not closed");
      }
      if (out.abelian && compose(f, g) != compose(g, f)) {
        out.abelian = false;
      }
    }
  }
  std::vector<std::uint32_t> identity(h.size());
  std::iota(identity.begin(), identity.end(), 0);
  for (auto const& f : out.perms) {
    std::vector<std::uint32_t> acc = f;
    size_t                     ord = 1;
    while (acc != identity) {
      acc = compose(acc, f);
      ++ord;
    }
    out.element_orders.push_back(ord);
  }
  std::sort(out.element_orders.begin(), out.element_orders.end());
  return out;
}

CircleAction circle_action(FiniteMonoid const& m, GreenStructure const& green,
                           std::uint32_t d_id) {
  if (d_id >= green.n_d) {
    throw BadIndex("D-class id out of range");
  }
  CircleAction out;
  {
    std::set<std::uint32_t> h_set;
    for (auto x : green.d_members[d_id]) {
      h_set.insert(green.h_class[x]);
    }
    out.h_ids.assign(h_set.begin(), h_set.end());
  }
  out.unit_indices = m.units();
  auto h_pos = [&](std::uint32_t h_id) {
    auto it = std::lower_bound(out.h_ids.begin(), out.h_ids.end(), h_id);
    if (it == out.h_ids.end() || *it != h_id) {
      throw Error("green",
                  "right unit translation left the D-class's H-classes");
    }
    return static_cast<std::uint32_t>(it - out.h_ids.begin());
  };
  out.act.assign(out.h_ids.size(),
                 std::vector<std::uint32_t>(out.unit_indices.size()));
  for (size_t hi = 0; hi < out.h_ids.size(); ++hi) {
    auto const& members = green.h_members[out.h_ids[hi]];
    for (size_t ui = 0; ui < out.unit_indices.size(); ++ui) {
      std::uint32_t       image  = UINT32_MAX;
      for (auto x : members) {
        std::uint32_t const y = green.h_class[m.product(x, out.unit_indices[ui])];
        if (image == UINT32_MAX) {
          image = y;
        } else if (image != y) {
          throw Error("green", "circle action not well-defined");
        }
      }
      out.act[hi][ui] = h_pos(image);
    }
  }
  return out;
}

EggboxReport eggbox_summary(FiniteMonoid const& m) {
  auto const green = green_relations(m);
  EggboxReport out;
  out.monoid_size = m.size();
  out.unit_count  = m.units().size();
  out.units_equal_j_class_of_identity
      = j_class_of_identity_is_units(m, green);
  for (std::uint32_t d = 0; d < green.n_d; ++d) {
    DClassSummary s;
    s.d_id    = d;
    s.size    = green.d_members[d].size();
    s.r_count = green.eggbox[d].r_ids.size();
    s.l_count = green.eggbox[d].l_ids.size();
    {
      std::set<std::uint32_t> h_set;
      for (auto x : green.d_members[d]) {
        h_set.insert(green.h_class[x]);
      }
      s.h_count = h_set.size();
    }
    s.regular = true;
    for (auto x : green.d_members[d]) {
      if (!m.is_regular_element(x)) {
        s.regular = false;
        break;
      }
    }
    s.contains_units = green.d_class[m.identity()] == d;
    auto const schutz
        = schutzenberger_group(m, green, green.h_class[green.d_members[d][0]]);
    s.schutz_order          = schutz.order();
    s.schutz_abelian        = schutz.abelian;
    s.schutz_element_orders = schutz.element_orders;
    out.d_classes.push_back(std::move(s));
  }
  return out;
}

std::string eggbox_ascii(FiniteMonoid const& m, GreenStructure const& green) {
  std::string out;
  for (std::uint32_t d = 0; d < green.n_d; ++d) {
    auto const& box = green.eggbox[d];
    out += "D" + std::to_string(d) + " ("
           + std::to_string(green.d_members[d].size()) + " elements, "
           + std::to_string(box.r_ids.size()) + " R x "
           + std::to_string(box.l_ids.size()) + " L)";
    if (green.d_class[m.identity()] == d) {
      out += " [units]";
    }
    out += "\n";
    size_t width = 1;
    for (auto const& row : box.h_sizes) {
      for (auto v : row) {
        width = std::max(width, std::to_string(v).size());
      }
    }
    for (size_t r = 0; r < box.r_ids.size(); ++r) {
      out += "  |";
      for (size_t l = 0; l < box.l_ids.size(); ++l) {
        std::string cell = std::to_string(box.h_sizes[r][l]);
        out += " " + std::string(width - cell.size(), ' ') + cell;
      }
      out += " |\n";
    }
  }
  return out;
}

}  // namespace soficlab
