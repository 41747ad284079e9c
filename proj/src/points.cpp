#include "semialg/points.hpp"

#include <fstream>
#include <sstream>

namespace semialg {

void PointSet::validate() const {
  if (dim < 1) throw input_error("point set dimension must be positive");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != dim)
      throw input_error("point set contains a point of wrong dimension");
}

PointSet PointSet::load_csv(std::istream& in) {
  PointSet ps;
  std::string line;
  if (!std::getline(in, line)) throw input_error("points csv: empty input");
  if (line.rfind("# d=", 0) != 0)
    throw input_error("points csv: first line must be '# d=<dim>'");
  try {
    ps.dim = std::stoi(line.substr(4));
  } catch (const std::exception&) {
    throw input_error("points csv: malformed dimension header");
  }
  if (ps.dim < 1) throw input_error("points csv: dimension must be positive");
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<Rational> p;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) {
      try {
        p.push_back(rational_from_string(field));
      } catch (const input_error&) {
        throw input_error("points csv: bad rational at line " + std::to_string(lineno));
      }
    }
    if (static_cast<int>(p.size()) != ps.dim)
      throw input_error("points csv: wrong arity at line " + std::to_string(lineno));
    ps.pts.push_back(std::move(p));
  }
  return ps;
}

PointSet PointSet::load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open points file '" + path + "'");
  return load_csv(in);
}

void PointSet::dump_csv(std::ostream& out) const {
  out << "# d=" << dim << "\n";
  for (const auto& p : pts) {
    for (int v = 0; v < dim; ++v) {
      if (v) out << ",";
      out << rational_to_string(p[v]);
    }
    out << "\n";
  }
}

void PointSet::dump_csv_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write points file '" + path + "'");
  dump_csv(out);
}

Json PointSet::to_json() const {
  Json j;
  j["dim"] = dim;
  j["label"] = label;
  Json rows = Json::array();
  for (const auto& p : pts) {
    Json row = Json::array();
    for (const auto& c : p) row.push_back(rational_to_string(c));
    rows.push_back(std::move(row));
  }
  j["points"] = std::move(rows);
  return j;
}

PointSet PointSet::from_json(const Json& j) {
  PointSet ps;
  ps.dim = j.at("dim").get<int>();
  ps.label = j.value("label", std::string());
  for (const auto& row : j.at("points")) {
    Point p;
    for (const auto& c : row) p.push_back(rational_from_string(c.get<std::string>()));
    ps.pts.push_back(std::move(p));
  }
  ps.validate();
  return ps;
}

}  // namespace semialg
