#include "gammacalc/json_io.hpp"

#include <algorithm>
#include <charconv>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gammacalc/errors.hpp"

namespace gammacalc {

namespace {

[[noreturn]] void malformed(std::string const &what)
{ throw std::invalid_argument("malformed input: " + what); }

Json const &field(Json const &j, char const *key)
{
  if (!j.is_object() || !j.contains(key))
    malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t as_size(Json const &j, char const *what)
{
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    malformed(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<Elem> as_table(Json const &j, char const *what)
{
  if (!j.is_array())
    malformed(std::string(what) + " must be an array");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (auto const &e : j)
    out.push_back(as_size(e, what));
  return out;
}

PointedMap checked_map(std::size_t dom, std::size_t cod,
                       std::vector<Elem> table, char const *what)
{
  if (table.size() != dom + 1)
    malformed(std::string(what) + ": table length differs from domain");
  try {
    return PointedMap(cod, std::move(table));
  } catch (std::exception const &e) {
    malformed(std::string(what) + ": " + e.what());
  }
}

} // namespace

Json pointed_set_to_json(FinPointedSet const &x)
{
  Json j;
  j["size"] = x.size();
  if (!x.labels().empty())
    j["labels"] = x.labels();
  return j;
}

FinPointedSet pointed_set_from_json(Json const &j)
{
  std::size_t n = as_size(field(j, "size"), "size");
  if (!j.contains("labels"))
    return FinPointedSet(n);
  auto const &l = j.at("labels");
  if (!l.is_array() || l.size() != n + 1)
    malformed("labels must cover every element");
  std::vector<std::string> labels;
  for (auto const &s : l) {
    if (!s.is_string())
      malformed("labels must be strings");
    labels.push_back(s.get<std::string>());
  }
  return FinPointedSet(n, std::move(labels));
}

Json pointed_map_to_json(PointedMap const &f)
{
  return Json{{"dom", f.dom()}, {"cod", f.cod()}, {"table", f.table()}};
}

PointedMap pointed_map_from_json(Json const &j)
{
  std::size_t dom = as_size(field(j, "dom"), "dom");
  std::size_t cod = as_size(field(j, "cod"), "cod");
  return checked_map(dom, cod, as_table(field(j, "table"), "table"), "map");
}

Json operator_to_json(GammaOperator const &op)
{
  return Json{{"dom", op.dom()}, {"cod", op.cod()}, {"pieces", op.pieces()}};
}

GammaOperator operator_from_json(Json const &j)
{
  std::size_t k = as_size(field(j, "dom"), "dom");
  std::size_t n = as_size(field(j, "cod"), "cod");
  auto const &p = field(j, "pieces");
  if (!p.is_array() || p.size() != k)
    malformed("operator must have one piece per domain element");
  std::vector<std::vector<Elem>> pieces;
  for (auto const &piece : p)
    pieces.push_back(as_table(piece, "piece"));
  try {
    return GammaOperator(n, std::move(pieces));
  } catch (std::invalid_argument const &e) {
    malformed(std::string("operator: ") + e.what());
  }
}

std::string map_key(PointedMap const &f)
{
  std::ostringstream out;
  out << f.dom() << '>' << f.cod() << ":[";
  for (std::size_t i = 0; i < f.table().size(); ++i)
    out << (i ? "," : "") << f.table()[i];
  out << ']';
  return out.str();
}

PointedMap map_from_key(std::string const &key)
{
  auto number = [&](std::size_t from, std::size_t to) {
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(key.data() + from, key.data() + to, v);
    if (ec != std::errc() || end != key.data() + to || from == to)
      malformed("map key \"" + key + "\"");
    return v;
  };
  std::size_t gt = key.find('>');
  std::size_t colon = key.find(':');
  if (gt == std::string::npos || colon == std::string::npos || colon < gt)
    malformed("map key \"" + key + "\"");
  std::size_t dom = number(0, gt);
  std::size_t cod = number(gt + 1, colon);
  Json table = Json::parse(key.substr(colon + 1), nullptr, false);
  if (table.is_discarded())
    malformed("map key \"" + key + "\"");
  return checked_map(dom, cod, as_table(table, "map key"), "map key");
}

Json gamma_set_to_json(GammaSet const &a)
{
  Json j;
  j["degree_bound"] = a.bound();
  j["levels"] = a.levels();
  Json action = Json::object();
  for (std::size_t m = 0; m <= a.bound(); ++m) {
    for (std::size_t n = 0; n <= a.bound(); ++n) {
      std::size_t count = hom_count(m, n);
      for (std::size_t h = 0; h < count; ++h) {
        PointedMap alpha = map_at(m, n, h);
        action[map_key(alpha)] = a.action(alpha).table();
      }
    }
  }
  j["action"] = std::move(action);
  return j;
}

GammaSet gamma_set_from_json(Json const &j)
{
  std::size_t bound = as_size(field(j, "degree_bound"), "degree_bound");
  std::vector<std::size_t> levels = as_table(field(j, "levels"), "levels");
  if (levels.size() != bound + 1)
    malformed("levels must list degrees 0..degree_bound");
  if (levels[0] != 0)
    malformed("degree 0 must be the one-point set");
  auto const &action = field(j, "action");
  if (!action.is_object())
    malformed("action must be an object");

  GammaSet::Tables tables(bound + 1);
  for (std::size_t m = 0; m <= bound; ++m) {
    tables[m].resize(bound + 1);
    for (std::size_t n = 0; n <= bound; ++n) {
      std::size_t count = hom_count(m, n);
      check_budget(count * (levels[m] + 1), "action table");
      auto &t = tables[m][n];
      t.reserve(count * (levels[m] + 1));
      for (std::size_t h = 0; h < count; ++h) {
        std::string key = map_key(map_at(m, n, h));
        if (!action.contains(key))
          malformed("missing action for " + key);
        std::vector<Elem> row = as_table(action.at(key), "action");
        if (row.size() != levels[m] + 1)
          malformed("action for " + key + " has the wrong length");
        for (Elem x : row) {
          if (x > levels[n])
            malformed("action for " + key + " leaves level " +
                      std::to_string(n));
        }
        if (row[0] != 0)
          malformed("action for " + key + " moves the basepoint");
        t.insert(t.end(), row.begin(), row.end());
      }
    }
  }
  std::size_t expected = 0;
  for (std::size_t m = 0; m <= bound; ++m)
    for (std::size_t n = 0; n <= bound; ++n)
      expected += hom_count(m, n);
  if (action.size() != expected)
    malformed("action has keys outside the degree bound");
  return GammaSet(std::move(levels), std::move(tables));
}

Json coend_table_to_json(CoendTable const &t)
{
  Json j;
  j["classes"] = t.classes().cardinality();
  Json w = Json::array();
  for (Elem c = 1; c <= t.classes().size(); ++c) {
    auto const &e = t.witness(c);
    w.push_back({{"degree", e.degree},
                 {"label", e.label},
                 {"eval", map_at(e.degree, t.target(), e.eval).table()}});
  }
  j["witnesses"] = std::move(w);
  return j;
}

Json read_json_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (Json::exception const &e) {
    malformed(path + ": " + e.what());
  }
}

namespace {

bool is_flat(Json const &j)
{
  return std::none_of(j.begin(), j.end(), [](Json const &e) {
    return e.is_array() || e.is_object();
  });
}

void print(std::ostream &out, Json const &j, std::size_t indent)
{
  std::string pad(indent + 1, ' ');
  if (j.is_object() && !j.empty()) {
    out << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out << pad << Json(it.key()).dump() << ": ";
      print(out, it.value(), indent + 1);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << std::string(indent, ' ') << '}';
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad;
      print(out, j[i], indent + 1);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << std::string(indent, ' ') << ']';
  } else {
    out << j.dump();
  }
}

} // namespace

std::string dump_json(Json const &j)
{
  std::ostringstream out;
  print(out, j, 0);
  return out.str();
}

void write_json_file(std::string const &path, Json const &j)
{
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << dump_json(j) << '\n';
}

} // namespace gammacalc
