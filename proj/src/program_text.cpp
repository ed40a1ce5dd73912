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

#include "superscrambler/program_text.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace superscrambler {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      ++i;
    }
    if (i > start) {
      out.push_back(line.substr(start, i - start));
    }
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ProgramParseError(line, "expected a positive integer, got '" + std::string(tok) + "'");
  }
  if (value == 0) {
    throw ProgramParseError(line, "site indices are 1-based");
  }
  return value;
}

} // namespace

OperatorProgram parse_program(std::string_view text) {
  std::optional<std::size_t> n_qubits;
  bool state_space_order = false;
  bool seen_anything = false;
  std::vector<SuperGate> gates;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) {
      if (end == text.size()) {
        break;
      }
      continue;
    }

    const std::string_view op = tokens[0];
    auto expect_args = [&](std::size_t n) {
      if (tokens.size() != n + 1) {
        throw ProgramParseError(line_no, std::string(op) + " takes " + std::to_string(n) +
                                             " argument(s)");
      }
    };

    if (op == "@state-space-order") {
      if (seen_anything) {
        throw ProgramParseError(line_no, "@state-space-order must be the first directive");
      }
      expect_args(0);
      state_space_order = true;
    } else if (op == "N") {
      if (n_qubits) {
        throw ProgramParseError(line_no, "duplicate N header");
      }
      expect_args(1);
      n_qubits = parse_index(tokens[1], line_no);
    } else {
      if (!n_qubits) {
        throw ProgramParseError(line_no, "gate before N header");
      }
      SuperGate gate;
      if (op == "T") {
        expect_args(1);
        gate = make_t(parse_index(tokens[1], line_no) - 1);
      } else if (op == "SWAP") {
        expect_args(2);
        gate = make_swap(parse_index(tokens[1], line_no) - 1,
                         parse_index(tokens[2], line_no) - 1);
      } else if (op == "C3") {
        expect_args(3);
        gate = make_c3(parse_index(tokens[1], line_no) - 1,
                       parse_index(tokens[2], line_no) - 1,
                       parse_index(tokens[3], line_no) - 1);
      } else {
        throw ProgramParseError(line_no, "unknown instruction '" + std::string(op) + "'");
      }
      try {
        validate_gate(gate, *n_qubits);
      } catch (const std::out_of_range &e) {
        throw ProgramParseError(line_no, e.what());
      } catch (const std::invalid_argument &e) {
        throw ProgramParseError(line_no, e.what());
      }
      gates.push_back(gate);
    }
    seen_anything = true;
    if (end == text.size()) {
      break;
    }
  }

  if (!n_qubits) {
    throw ProgramParseError(line_no, "missing N header");
  }
  if (state_space_order) {
    return reverse_from_state_space(std::move(gates), *n_qubits);
  }
  return OperatorProgram(*n_qubits, std::move(gates));
}

OperatorProgram load_program(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::ios_base::failure("cannot open program file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_program(buf.str());
}

std::string format_program(const OperatorProgram &program) {
  std::string out = "N " + std::to_string(program.n_qubits()) + "\n";
  for (const auto &g : program.gates()) {
    out += to_string(g);
    out += '\n';
  }
  return out;
}

} // namespace superscrambler
