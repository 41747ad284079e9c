#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "semialg/json.hpp"
#include "semialg/rational.hpp"

namespace semialg {

using Point = std::vector<Rational>;

// A finite labelled point set in R^d. Duplicate points are permitted; the
// generators reject them but measurement code treats repeats as distinct
// vertices at equal positions.
struct PointSet {
  int dim = 0;
  std::vector<Point> pts;
  std::string label;

  std::size_t size() const { return pts.size(); }
  void validate() const;

  // CSV form: first line "# d=<dim>", then one point per line, coordinates
  // comma-separated, each "num/den" or a decimal integer.
  static PointSet load_csv(std::istream& in);
  static PointSet load_csv_file(const std::string& path);
  void dump_csv(std::ostream& out) const;
  void dump_csv_file(const std::string& path) const;

  Json to_json() const;
  static PointSet from_json(const Json& j);

  bool operator==(const PointSet& o) const { return dim == o.dim && pts == o.pts; }
};

}  // namespace semialg
