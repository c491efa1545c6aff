#include "soficlab/witness_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "soficlab/errors.hpp"

namespace soficlab {

namespace {

using nlohmann::json;

json parse_or_throw(std::string const& text, std::string const& what) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    throw MalformedFile(what + ": " + e.what());
  }
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw MalformedFile("cannot open \"" + path + "\"");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw MalformedFile("cannot write \"" + path + "\"");
  }
  out << text;
}

}  // namespace

std::string witness_to_json(ActionWitness const& w) {
  json j;
  j["N"] = w.ground_size;
  j["elements"] = json::array();
  for (auto const& a : w.acting) {
    j["elements"].push_back(
        {{"enc", enc::base64_encode(a.enc)}, {"label", a.label}});
  }
  j["tables"] = w.tables;
  j["products"] = json::array();
  for (auto const& p : w.products) {
    j["products"].push_back({p.i, p.j, p.k});
  }
  if (!w.point_labels.empty()) {
    j["points"] = w.point_labels;
  }
  return j.dump() + "\n";
}

ActionWitness witness_from_json(std::string const& text) {
  json const j = parse_or_throw(text, "bad witness file");
  ActionWitness w;
  try {
    w.ground_size = j.at("N").get<std::uint64_t>();
    for (auto const& e : j.at("elements")) {
      w.acting.push_back({enc::base64_decode(e.at("enc").get<std::string>()),
                          e.at("label").get<std::string>()});
    }
    w.tables = j.at("tables").get<std::vector<std::vector<std::uint32_t>>>();
    for (auto const& p : j.at("products")) {
      if (!p.is_array() || p.size() != 3) {
        throw MalformedFile("product entries must be [i,j,k] triples");
      }
      w.products.push_back({p[0].get<std::uint32_t>(),
                            p[1].get<std::uint32_t>(),
                            p[2].get<std::uint32_t>()});
    }
    if (j.contains("points")) {
      w.point_labels = j.at("points").get<std::vector<std::string>>();
    }
  } catch (json::exception const& e) {
    throw MalformedFile(std::string("bad witness file: ") + e.what());
  } catch (std::invalid_argument const& e) {
    throw MalformedFile(std::string("bad witness file: ") + e.what());
  }
  if (w.tables.size() != w.acting.size()) {
    throw MalformedFile("witness table count does not match acting set");
  }
  for (auto const& t : w.tables) {
    if (t.size() != w.ground_size) {
      throw MalformedFile("witness table is not total on the ground set");
    }
    for (auto v : t) {
      if (v >= w.ground_size) {
        throw MalformedFile("witness table maps outside the ground set");
      }
    }
  }
  for (auto const& p : w.products) {
    if (p.i >= w.acting.size() || p.j >= w.acting.size()
        || p.k >= w.acting.size()) {
      throw MalformedFile("witness product entry out of range");
    }
  }
  if (!w.point_labels.empty() && w.point_labels.size() != w.ground_size) {
    throw MalformedFile("witness point label count mismatch");
  }
  return w;
}

void save_witness(ActionWitness const& w, std::string const& path) {
  write_file(path, witness_to_json(w));
}

ActionWitness load_witness(std::string const& path) {
  return witness_from_json(read_file(path));
}

std::string monoid_to_json(FiniteMonoid const& m) {
  json j;
  j["size"]     = m.size();
  j["identity"] = m.identity();
  j["names"]    = m.names();
  j["table"]    = m.table();
  return j.dump(2) + "\n";
}

FiniteMonoid monoid_from_json(std::string const& text) {
  json const j = parse_or_throw(text, "bad monoid file");
  try {
    auto table = j.at("table").get<std::vector<std::vector<std::uint32_t>>>();
    auto names = j.at("names").get<std::vector<std::string>>();
    if (j.at("size").get<size_t>() != table.size()) {
      throw MalformedFile("monoid file size field does not match table");
    }
    FiniteMonoid m(std::move(table), std::move(names));
    if (j.at("identity").get<std::uint32_t>() != m.identity()) {
      throw MalformedFile("monoid file identity field is wrong");
    }
    return m;
  } catch (json::exception const& e) {
    throw MalformedFile(std::string("bad monoid file: ") + e.what());
  }
}

void save_monoid(FiniteMonoid const& m, std::string const& path) {
  write_file(path, monoid_to_json(m));
}

FiniteMonoid load_monoid(std::string const& path) {
  return monoid_from_json(read_file(path));
}

}  // namespace soficlab
