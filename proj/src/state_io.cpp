// Copyright 2026 The tripneg Authors
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

#include "tripneg/state_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "tripneg/error.hpp"

namespace tripneg {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << "line " << line << ": " << what;
  throw Error(ErrorKind::kParse, os.str());
}

bool is_blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

TripartiteState read_state(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<DimTriple> dims;
  ComplexMatrix m;
  long long filled = 0;
  long long expected = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    if (!dims) {
      long long a = 0, b = 0, c = 0;
      if (!(ls >> a >> b >> c)) parse_error(lineno, "expected header 'dA dB dC'");
      std::string rest;
      if (ls >> rest) parse_error(lineno, "unexpected token '" + rest + "' after header");
      if (a < 1 || b < 1 || c < 1) parse_error(lineno, "dimensions must be positive");
      if (a * b * c > 4096) parse_error(lineno, "total dimension exceeds 4096");
      dims = DimTriple(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c));
      const int d = dims->total();
      m = ComplexMatrix::Zero(d, d);
      expected = static_cast<long long>(d) * d;
      continue;
    }
    if (filled >= expected) parse_error(lineno, "more entries than d*d");
    double re = 0, im = 0;
    if (!(ls >> re >> im)) parse_error(lineno, "expected 're im'");
    std::string rest;
    if (ls >> rest) parse_error(lineno, "unexpected token '" + rest + "'");
    const int d = dims->total();
    m(static_cast<int>(filled / d), static_cast<int>(filled % d)) = Complex(re, im);
    ++filled;
  }
  if (!dims) parse_error(lineno + 1, "missing header 'dA dB dC'");
  if (filled != expected) {
    std::ostringstream os;
    os << "expected " << expected << " entries, found " << filled;
    parse_error(lineno + 1, os.str());
  }
  return TripartiteState(*dims, m);
}

TripartiteState load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open state file " + path.string());
  return read_state(in);
}

void write_state(std::ostream& out, const TripartiteState& rho) {
  const DimTriple& d = rho.dims();
  out << "# tripartite density matrix, row-major 're im'\n";
  out << d.a << ' ' << d.b << ' ' << d.c << '\n';
  const ComplexMatrix& m = rho.matrix();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out << format_double(m(i, j).real()) << ' ' << format_double(m(i, j).imag()) << '\n';
    }
  }
}

void save_state(const std::filesystem::path& path, const TripartiteState& rho) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kParse, "cannot write state file " + path.string());
  write_state(out, rho);
  if (!out) throw Error(ErrorKind::kParse, "write failed for " + path.string());
}

}  // namespace tripneg
