// Copyright 2026 The Super Scrambler Authors
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

#ifndef SUPERSCRAMBLER_PROGRAM_TEXT_HPP
#define SUPERSCRAMBLER_PROGRAM_TEXT_HPP

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "superscrambler/core_model.hpp"

namespace superscrambler {

class ProgramParseError : public std::runtime_error {
public:
  ProgramParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Program text format, one instruction per line, sites 1-based:
//
//   @state-space-order        optional, must precede everything else
//   N <n_qubits>              required before the first gate
//   T <i>
//   SWAP <i> <j>
//   C3 <control> <target_1> <target_2>
//
// '#' starts a comment. Without the directive the gate order is the
// operator-space application order; with it the loader reverses the list.
OperatorProgram parse_program(std::string_view text);
OperatorProgram load_program(const std::filesystem::path &path);

/// Emits the header and gates in operator-space order.
std::string format_program(const OperatorProgram &program);

} // namespace superscrambler

#endif // SUPERSCRAMBLER_PROGRAM_TEXT_HPP
