// Copyright 2026 The jjvar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JJVAR_ERRORS_HPP
#define JJVAR_ERRORS_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace jjvar {

/// Input rejected by parameter validation. Carries every violated
/// constraint, not just the first one found.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string msg = "invalid configuration:";
        for (const auto& s : v) msg += "\n  - " + s;
        return msg;
    }
    std::vector<std::string> violations_;
};

/// Numerical computation failed (quadrature non-convergence, table range
/// violations, grid mismatches, statistical domain errors).
class ComputationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A Monte Carlo sample failed; the whole ensemble aborts.
class EnsembleError : public ComputationError {
  public:
    EnsembleError(long sample_index, const std::string& cause)
        : ComputationError("ensemble sample " + std::to_string(sample_index) +
                           " failed: " + cause),
          sample_index_(sample_index) {}

    long sample_index() const { return sample_index_; }

  private:
    long sample_index_;
};

/// Filesystem / output failure in the CLI layer.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace jjvar

#endif // JJVAR_ERRORS_HPP
