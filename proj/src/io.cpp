// Copyright 2026 The hidcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "hidcorr/io.hpp"

#include <fstream>
#include <sstream>

namespace hidcorr::io {

namespace {

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw UsageError(what + " must be a number");
  return j.get<double>();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError("cannot parse " + what + ": " + e.what());
  }
}

}  // namespace

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Factorization parse_dims(const std::string& comma_list) {
  std::vector<Index> dims;
  std::stringstream ss(comma_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad factor '" + item + "' in --dims");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw UsageError("bad factor '" + item + "' in --dims");
    }
    dims.push_back(static_cast<Index>(v));
  }
  if (!comma_list.empty() && comma_list.back() == ',') {
    throw UsageError("trailing comma in --dims '" + comma_list + "'");
  }
  return Factorization(std::move(dims));
}

Factorization factorization_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("factorization must be a JSON integer array");
  std::vector<Index> dims;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw UsageError("factorization entries must be integers");
    dims.push_back(v.get<Index>());
  }
  return Factorization(std::move(dims));
}

Json to_json(const Factorization& f) { return Json(f.dims()); }

ProbabilityVector<double> parse_probability_vector(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<double> values;
  if (first != std::string::npos && text[first] == '[') {
    const Json j = parse_json(text, "probability vector");
    for (const auto& v : j) values.push_back(number(v, "probability"));
  } else {
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(line.substr(b), &used);
      } catch (const std::exception&) {
        throw UsageError("bad probability line '" + line + "'");
      }
      if (line.find_first_not_of(" \t\r,", b + used) != std::string::npos) {
        throw UsageError("bad probability line '" + line + "'");
      }
      values.push_back(v);
    }
  }
  return ProbabilityVector<double>(
      Eigen::Map<const Vector<double>>(values.data(), static_cast<Index>(values.size())));
}

ProbabilityVector<double> read_probability_vector(const std::string& path) {
  return parse_probability_vector(read_text(path));
}

ComplexMatrix<double> matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re")) {
    throw UsageError("density matrix must be an object with \"re\" (and \"im\")");
  }
  const Json& re = j.at("re");
  if (!re.is_array() || re.empty()) throw UsageError("\"re\" must be a nonempty array of rows");
  const Index n = static_cast<Index>(re.size());
  if (j.contains("dim") && (!j.at("dim").is_number_integer() || j.at("dim").get<Index>() != n)) {
    throw UsageError("\"dim\" does not match the number of rows");
  }
  const bool has_im = j.contains("im");
  if (has_im && j.at("im").size() != re.size()) throw UsageError("\"im\" has the wrong shape");
  ComplexMatrix<double> m(n, n);
  for (Index r = 0; r < n; ++r) {
    const Json& row = re[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw UsageError("row " + std::to_string(r + 1) + " of \"re\" is not of length " +
                       std::to_string(n));
    }
    for (Index c = 0; c < n; ++c) {
      double im = 0;
      if (has_im) {
        const Json& irow = j.at("im")[static_cast<std::size_t>(r)];
        if (!irow.is_array() || static_cast<Index>(irow.size()) != n) {
          throw UsageError("row " + std::to_string(r + 1) + " of \"im\" is not of length " +
                           std::to_string(n));
        }
        im = number(irow[static_cast<std::size_t>(c)], "matrix entry");
      }
      m(r, c) = {number(row[static_cast<std::size_t>(c)], "matrix entry"), im};
    }
  }
  return m;
}

ComplexMatrix<double> read_matrix(const std::string& path) {
  return matrix_from_json(parse_json(read_text(path), path));
}

Json to_json(const ComplexMatrix<double>& m) {
  Json re = Json::array(), im = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array(), ir = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  Json j;
  j["dim"] = m.rows();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

std::vector<Direction> directions_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("direction grid must be a JSON array");
  std::vector<Direction> grid;
  for (const auto& d : j) {
    if (!d.is_object() || !d.contains("theta") || !d.contains("phi")) {
      throw UsageError("each direction needs \"theta\" and \"phi\"");
    }
    Direction dir;
    dir.theta = number(d.at("theta"), "theta");
    dir.phi = number(d.at("phi"), "phi");
    if (d.contains("psi")) dir.psi = number(d.at("psi"), "psi");
    grid.push_back(dir);
  }
  return grid;
}

std::vector<Direction> read_directions(const std::string& path) {
  return directions_from_json(parse_json(read_text(path), path));
}

QubitProbabilities<double> qubit_probabilities_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("qubit probabilities must be a JSON object");
  QubitProbabilities<double> qp;
  qp.p1 = number(j.value("p1", Json()), "p1");
  qp.p2 = number(j.value("p2", Json()), "p2");
  qp.p3 = number(j.value("p3", Json()), "p3");
  return qp;
}

Json to_json(const QubitProbabilities<double>& qp) {
  return Json{{"p1", qp.p1}, {"p2", qp.p2}, {"p3", qp.p3}};
}

QutritElements<double> qutrit_elements_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("qutrit elements must be a JSON object");
  QutritElements<double> qe;
  for (int jj = 1; jj <= 3; ++jj) {
    for (int k = 1; k <= 3; ++k) {
      const std::string key = "p" + std::to_string(jj) + "_" + std::to_string(k);
      qe(jj, k) = number(j.value(key, Json()), key);
    }
  }
  return qe;
}

Json to_json(const ProbabilityVector<double>& p) { return to_json(p.values()); }

Json to_json(const Vector<double>& v) {
  Json j = Json::array();
  for (Index i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

}  // namespace hidcorr::io
