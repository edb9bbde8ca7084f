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
#pragma once

// File formats:
//   factorization        JSON integer array [2,2] or comma list "2,2"
//   probability vector   JSON array, or CSV with one value per line
//   density matrix       {"dim": N, "re": [[...]], "im": [[...]]}, row-major
//   direction grid       [{"theta": t, "phi": p, "psi": s}, ...], psi optional
//   qubit probabilities  {"p1": .., "p2": .., "p3": ..}
//   qutrit elements      {"p1_1": .., ..., "p3_3": ..} with "pJ_K" = p_J^(K)
// Parse failures throw UsageError.

#include <string>
#include <vector>

#include <json.hpp>

#include "hidcorr/hidcorr.hpp"

namespace hidcorr::io {

using Json = nlohmann::ordered_json;

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

Factorization parse_dims(const std::string& comma_list);
Factorization factorization_from_json(const Json& j);
Json to_json(const Factorization& f);

ProbabilityVector<double> parse_probability_vector(const std::string& text);
ProbabilityVector<double> read_probability_vector(const std::string& path);

// Raw matrix, not yet validated.
ComplexMatrix<double> matrix_from_json(const Json& j);
ComplexMatrix<double> read_matrix(const std::string& path);
// {"dim", "re", "im"}; doubles are written in shortest round-trip form.
Json to_json(const ComplexMatrix<double>& m);

std::vector<Direction> directions_from_json(const Json& j);
std::vector<Direction> read_directions(const std::string& path);

QubitProbabilities<double> qubit_probabilities_from_json(const Json& j);
Json to_json(const QubitProbabilities<double>& qp);
QutritElements<double> qutrit_elements_from_json(const Json& j);

Json to_json(const ProbabilityVector<double>& p);
Json to_json(const Vector<double>& v);

}  // namespace hidcorr::io
