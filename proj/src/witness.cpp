#include "soficlab/witness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>
#include <unordered_map>

#include "soficlab/errors.hpp"

namespace soficlab {

std::uint32_t ActionWitness::index_of(Elem const& e) const {
  for (size_t i = 0; i < acting.size(); ++i) {
    if (acting[i].enc == e) {
      return static_cast<std::uint32_t>(i);
    }
  }
  return npos;
}

namespace {

std::vector<Elem> dedup_stable(std::vector<Elem> const& in) {
  std::vector<Elem> out;
  for (auto const& e : in) {
    if (std::find(out.begin(), out.end(), e) == out.end()) {
      out.push_back(e);
    }
  }
  return out;
}

void check_tables_shape(ActionWitness const& w) {
  if (w.tables.size() != w.acting.size()) {
    throw MissingTable("witness has " + std::to_string(w.tables.size())
                       + " tables for " + std::to_string(w.acting.size())
                       + " acting elements");
  }
  for (size_t i = 0; i < w.tables.size(); ++i) {
    if (w.tables[i].size() != w.ground_size) {
      throw MissingTable("table " + std::to_string(i)
                         + " is not total on the ground set");
    }
    for (auto v : w.tables[i]) {
      if (v >= w.ground_size) {
        throw BadIndex("table " + std::to_string(i)
                       + " maps outside the ground set");
      }
    }
  }
}

}  // namespace

DefectReport check_witness(ActionWitness const& witness, Elem const& identity,
                           std::vector<Elem> const& k_set, size_t workers) {
  check_tables_shape(witness);

  std::uint32_t const id_idx = witness.index_of(identity);
  if (id_idx == ActionWitness::npos) {
    throw MissingTable("identity element has no table");
  }

  std::vector<Elem> const    k = dedup_stable(k_set);
  std::vector<std::uint32_t> k_idx(k.size());
  for (size_t i = 0; i < k.size(); ++i) {
    k_idx[i] = witness.index_of(k[i]);
    if (k_idx[i] == ActionWitness::npos) {
      throw MissingTable("element of K has no table (position "
                         + std::to_string(i) + ")");
    }
  }

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> product;
  for (auto const& p : witness.products) {
    if (p.i >= witness.acting.size() || p.j >= witness.acting.size()
        || p.k >= witness.acting.size()) {
      throw BadIndex("product entry out of range");
    }
    product[{p.i, p.j}] = p.k;
  }

  struct MultPair {
    std::uint32_t g, h, gh;
  };
  std::vector<MultPair> mult_pairs;
  for (auto gi : k_idx) {
    for (auto hj : k_idx) {
      auto it = product.find({gi, hj});
      if (it == product.end()) {
        throw MissingTable("product of a K x K pair has no table ("
                           + witness.acting[gi].label + ", "
                           + witness.acting[hj].label + ")");
      }
      mult_pairs.push_back({gi, hj, it->second});
    }
  }
  struct SepPair {
    std::uint32_t g, h;
  };
  std::vector<SepPair> sep_pairs;
  for (size_t a = 0; a < k_idx.size(); ++a) {
    for (size_t b = a + 1; b < k_idx.size(); ++b) {
      sep_pairs.push_back({k_idx[a], k_idx[b]});
    }
  }

  std::uint64_t const n       = witness.ground_size;
  size_t const        nworker = std::max<size_t>(1, workers);
  struct Counts {
    std::vector<std::uint64_t> mult, sep;
    std::uint64_t              id_violations = 0;
  };
  std::vector<Counts> partials(nworker);
  auto const& tables = witness.tables;

  auto count_range = [&](size_t w, std::uint64_t lo, std::uint64_t hi) {
    Counts& c = partials[w];
    c.mult.assign(mult_pairs.size(), 0);
    c.sep.assign(sep_pairs.size(), 0);
    auto const& id_table = tables[id_idx];
    for (std::uint64_t x = lo; x < hi; ++x) {
      if (id_table[x] != x) {
        ++c.id_violations;
      }
    }
    for (size_t p = 0; p < mult_pairs.size(); ++p) {
      auto const& gp = tables[mult_pairs[p].g];
      auto const& hp = tables[mult_pairs[p].h];
      auto const& gh = tables[mult_pairs[p].gh];
      std::uint64_t bad = 0;
      for (std::uint64_t x = lo; x < hi; ++x) {
        bad += gp[hp[x]] != gh[x];
      }
      c.mult[p] = bad;
    }
    for (size_t p = 0; p < sep_pairs.size(); ++p) {
      auto const& gp = tables[sep_pairs[p].g];
      auto const& hp = tables[sep_pairs[p].h];
      std::uint64_t agree = 0;
      for (std::uint64_t x = lo; x < hi; ++x) {
        agree += gp[x] == hp[x];
      }
      c.sep[p] = agree;
    }
  };

  if (nworker == 1) {
    count_range(0, 0, n);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t const      chunk = n / nworker;
    for (size_t w = 0; w < nworker; ++w) {
      std::uint64_t const lo = w * chunk;
      std::uint64_t const hi = (w + 1 == nworker) ? n : lo + chunk;
      pool.emplace_back(count_range, w, lo, hi);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  DefectReport report;
  report.ground_size = Int(n);
  for (size_t p = 0; p < mult_pairs.size(); ++p) {
    std::uint64_t bad = 0;
    for (auto const& c : partials) {
      bad += c.mult[p];
    }
    Rational const defect = n == 0 ? Rational(0) : Rational(Int(bad), Int(n));
    report.mult.push_back({witness.acting[mult_pairs[p].g].label,
                           witness.acting[mult_pairs[p].h].label, defect});
    report.max_mult_defect = std::max(report.max_mult_defect, defect);
  }
  for (size_t p = 0; p < sep_pairs.size(); ++p) {
    std::uint64_t agree = 0;
    for (auto const& c : partials) {
      agree += c.sep[p];
    }
    Rational const overlap
        = n == 0 ? Rational(0) : Rational(Int(agree), Int(n));
    report.sep.push_back({witness.acting[sep_pairs[p].g].label,
                          witness.acting[sep_pairs[p].h].label, overlap});
    report.max_sep_overlap = std::max(report.max_sep_overlap, overlap);
  }
  for (auto const& c : partials) {
    report.identity_violations += c.id_violations;
  }
  return report;
}

bool passes(DefectReport const& report, Rational const& eps) {
  return report.identity_violations == 0 && report.max_mult_defect <= eps
         && report.max_sep_overlap <= eps;
}

void validate_witness(
    ActionWitness const& witness, Elem const& identity,
    std::vector<Elem> const& k_set,
    std::function<Elem(Elem const&, Elem const&)> const& mul) {
  check_tables_shape(witness);
  std::uint32_t const id_idx = witness.index_of(identity);
  if (id_idx == ActionWitness::npos) {
    throw MissingTable("identity element has no table");
  }
  for (std::uint64_t x = 0; x < witness.ground_size; ++x) {
    if (witness.tables[id_idx][x] != x) {
      throw IdentityViolated("identity table moves point "
                             + std::to_string(x));
    }
  }
  std::vector<Elem> const k = dedup_stable(k_set);
  for (auto const& e : k) {
    if (witness.index_of(e) == ActionWitness::npos) {
      throw MissingTable("element of K has no table");
    }
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> product;
  for (auto const& p : witness.products) {
    product[{p.i, p.j}] = p.k;
  }
  for (auto const& g : k) {
    for (auto const& h : k) {
      std::uint32_t const gi = witness.index_of(g);
      std::uint32_t const hj = witness.index_of(h);
      auto                it = product.find({gi, hj});
      if (it == product.end()) {
        throw MissingTable("missing product entry over K x K");
      }
      Elem const gh = mul(g, h);
      if (witness.acting[it->second].enc != gh) {
        throw BadIndex("product entry inconsistent with multiplication");
      }
    }
  }
}

DiagonalPowerResult diagonal_power_witness(
    FiniteMonoid const& m, std::vector<std::uint32_t> const& k_indices,
    Rational const& eps, std::uint64_t ground_cap) {
  if (eps <= 0 || eps >= 1) {
    throw BadIndex("eps must lie in (0,1)");
  }
  std::vector<std::uint32_t> k;
  for (auto x : k_indices) {
    if (x >= m.size()) {
      throw BadIndex("K element out of range");
    }
    if (std::find(k.begin(), k.end(), x) == k.end()) {
      k.push_back(x);
    }
  }

  size_t const msize = m.size();
  // worst pairwise agreement fraction of the left regular action
  std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> agreement;
  Rational p(0);
  for (size_t a = 0; a < k.size(); ++a) {
    for (size_t b = a + 1; b < k.size(); ++b) {
      std::uint64_t agree = 0;
      for (std::uint32_t x = 0; x < msize; ++x) {
        agree += m.product(k[a], x) == m.product(k[b], x);
      }
      Rational const frac{Int(agree), Int(msize)};
      agreement[{k[a], k[b]}] = frac;
      p                       = std::max(p, frac);
    }
  }

  size_t   n   = 1;
  Rational acc = p;
  if (p > 0) {
    while (acc > eps) {
      acc *= p;
      ++n;
    }
  }

  DiagonalPowerResult result;
  result.power         = n;
  result.max_agreement = p;

  Int big_n = 1;
  for (size_t i = 0; i < n; ++i) {
    big_n *= Int(msize);
  }

  // acting set: identity, then K, then the K x K products
  std::vector<std::uint32_t> acting{m.identity()};
  auto push_unique = [&](std::uint32_t e) {
    if (std::find(acting.begin(), acting.end(), e) == acting.end()) {
      acting.push_back(e);
    }
    return static_cast<std::uint32_t>(
        std::find(acting.begin(), acting.end(), e) - acting.begin());
  };
  for (auto x : k) {
    push_unique(x);
  }
  std::vector<ActionWitness::ProductEntry> products;
  for (auto g : k) {
    for (auto h : k) {
      std::uint32_t const gi = push_unique(g);
      std::uint32_t const hj = push_unique(h);
      std::uint32_t const gh = push_unique(m.product(g, h));
      products.push_back({gi, hj, gh});
    }
  }

  std::uint64_t const cap
      = std::min<std::uint64_t>(ground_cap, UINT32_MAX - 1);
  if (big_n <= Int(cap)) {
    std::uint64_t const big = big_n.convert_to<std::uint64_t>();
    ActionWitness       w;
    w.ground_size = big;
    for (auto e : acting) {
      w.acting.push_back({enc::u32(e), m.name(e)});
    }
    w.products = std::move(products);
    std::vector<std::uint64_t> powers(n, 1);
    for (size_t i = 1; i < n; ++i) {
      powers[n - 1 - i] = powers[n - i] * msize;
    }
    for (auto e : acting) {
      std::vector<std::uint32_t> table(big);
      for (std::uint64_t x = 0; x < big; ++x) {
        std::uint64_t img = 0;
        std::uint64_t rem = x;
        for (size_t t = 0; t < n; ++t) {
          std::uint32_t const digit
              = static_cast<std::uint32_t>(rem / powers[t]);
          rem %= powers[t];
          img += static_cast<std::uint64_t>(m.product(e, digit)) * powers[t];
        }
        table[x] = static_cast<std::uint32_t>(img);
      }
      w.tables.push_back(std::move(table));
    }
    if (big <= 1024) {
      for (std::uint64_t x = 0; x < big; ++x) {
        std::string   label = "(";
        std::uint64_t rem   = x;
        for (size_t t = 0; t < n; ++t) {
          if (t > 0) label += ",";
          label += m.name(static_cast<std::uint32_t>(rem / powers[t]));
          rem %= powers[t];
        }
        label += ")";
        w.point_labels.push_back(label);
      }
    }
    std::vector<Elem> k_encs;
    for (auto x : k) {
      k_encs.push_back(enc::u32(x));
    }
    result.report  = check_witness(w, enc::u32(m.identity()), k_encs);
    result.witness = std::move(w);
    return result;
  }

  // Implicit mode: the action is genuine, so multiplicative defects are
  // structurally zero; per-pair overlap on M^n is exactly agreement^n.
  DefectReport report;
  report.ground_size = big_n;
  for (auto g : k) {
    for (auto h : k) {
      report.mult.push_back({m.name(g), m.name(h), Rational(0)});
    }
  }
  for (size_t a = 0; a < k.size(); ++a) {
    for (size_t b = a + 1; b < k.size(); ++b) {
      Rational overlap(1);
      Rational const base = agreement[{k[a], k[b]}];
      for (size_t i = 0; i < n; ++i) {
        overlap *= base;
      }
      report.sep.push_back({m.name(k[a]), m.name(k[b]), overlap});
      report.max_sep_overlap = std::max(report.max_sep_overlap, overlap);
    }
  }
  result.report = std::move(report);
  return result;
}

}  // namespace soficlab
