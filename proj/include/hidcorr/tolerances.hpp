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

namespace hidcorr::tol {

// Probability vectors.
inline constexpr double kNormalization = 1e-12;
inline constexpr double kNegativeClamp = 1e-12;

// Density matrices.
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kEigenvalue = 1e-10;

// Inequality verdicts.
inline constexpr double kInequality = 1e-10;
inline constexpr double kQuantumSubadditivity = 1e-9;

// Tomograms.
inline constexpr double kTomogramNormalization = 1e-10;
inline constexpr double kTomogramNegative = 1e-12;

}  // namespace hidcorr::tol
