// Copyright 2026 The Monarq Authors
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

#include "monarq/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "monarq/errors.hpp"

namespace monarq::cli {

namespace {

bool parse_double(const std::string& text, double& out) {
  std::size_t consumed = 0;
  try {
    out = std::stod(text, &consumed);
  } catch (const std::exception&) {
    return false;
  }
  while (consumed < text.size() &&
         std::isspace(static_cast<unsigned char>(text[consumed]))) {
    ++consumed;
  }
  return consumed == text.size();
}

std::string strip(const std::string& line) {
  std::size_t begin = 0;
  std::size_t end = line.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
  return line.substr(begin, end - begin);
}

// Token scanner for PGM headers: whitespace-separated, '#' starts a
// comment running to end of line.
class PnmScanner {
 public:
  explicit PnmScanner(std::istream& in) : in_(in) {}

  std::string next_token() {
    std::string token;
    int c;
    while ((c = in_.get()) != EOF) {
      if (c == '#') {
        while ((c = in_.get()) != EOF && c != '\n') {
        }
        continue;
      }
      if (std::isspace(c)) {
        if (!token.empty()) return token;
        continue;
      }
      token.push_back(static_cast<char>(c));
    }
    if (token.empty()) {
      throw DataFormatError("unexpected end of PGM header");
    }
    return token;
  }

  int next_int(const char* what) {
    const std::string token = next_token();
    try {
      std::size_t consumed = 0;
      const int v = std::stoi(token, &consumed);
      if (consumed != token.size()) throw std::invalid_argument(token);
      return v;
    } catch (const std::exception&) {
      throw DataFormatError(std::string("malformed PGM ") + what + ": '" +
                            token + "'");
    }
  }

 private:
  std::istream& in_;
};

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> read_sequence_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataFormatError("cannot open '" + path.string() + "'");
  }
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip(line);
    if (text.empty()) continue;
    double v = 0.0;
    if (!parse_double(text, v)) {
      if (first_content_line) {
        first_content_line = false;  // header line
        continue;
      }
      throw DataFormatError("'" + path.string() + "' line " +
                            std::to_string(line_no) +
                            ": expected one numeric value, got '" + text + "'");
    }
    first_content_line = false;
    values.push_back(v);
  }
  if (values.empty()) {
    throw DataFormatError("'" + path.string() + "' holds no values");
  }
  return values;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw DataFormatError("cannot write '" + path.string() + "'");
  }
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c > 0) out << ',';
    out << table.header[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << format_double(row[c]);
    }
    out << '\n';
  }
}

std::vector<double> minmax_normalize(const std::vector<double>& values) {
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  std::vector<double> out(values.size(), 0.0);
  if (hi == lo) return out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = 2.0 * (values[i] - lo) / (hi - lo) - 1.0;
  }
  return out;
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataFormatError("cannot open '" + path.string() + "'");
  }
  PnmScanner scanner(in);
  const std::string magic = scanner.next_token();
  if (magic != "P2" && magic != "P5") {
    throw DataFormatError("'" + path.string() + "' is not a PGM (P2/P5) file");
  }
  const int width = scanner.next_int("width");
  const int height = scanner.next_int("height");
  const int maxval = scanner.next_int("maxval");
  if (width < 1 || height < 1) {
    throw DataFormatError("PGM dimensions must be positive");
  }
  if (maxval < 1 || maxval > 65535) {
    throw DataFormatError("PGM maxval must be in [1, 65535]");
  }

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<std::uint16_t> levels(count);
  if (magic == "P2") {
    for (std::size_t i = 0; i < count; ++i) {
      levels[i] = static_cast<std::uint16_t>(scanner.next_int("sample"));
    }
  } else {
    // The single whitespace byte after maxval was consumed as the token
    // terminator; raw samples start immediately.
    const bool wide = maxval > 255;
    std::vector<unsigned char> raw(count * (wide ? 2 : 1));
    in.read(reinterpret_cast<char*>(raw.data()),
            static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
      throw DataFormatError("'" + path.string() + "' truncated pixel data");
    }
    for (std::size_t i = 0; i < count; ++i) {
      levels[i] = wide ? static_cast<std::uint16_t>((raw[2 * i] << 8) | raw[2 * i + 1])
                       : raw[i];
    }
  }
  try {
    return normalize_gray(levels, width, height, maxval);
  } catch (const DataFormatError& e) {
    throw DataFormatError("'" + path.string() + "': " + e.what());
  }
}

void write_pgm_levels(const std::filesystem::path& path,
                      const std::vector<std::uint16_t>& levels, int width,
                      int height, int maxval, bool binary) {
  if (levels.size() != static_cast<std::size_t>(width) * height) {
    throw DataFormatError("pixel buffer does not match image dimensions");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw DataFormatError("cannot write '" + path.string() + "'");
  }
  out << (binary ? "P5" : "P2") << '\n'
      << width << ' ' << height << '\n'
      << maxval << '\n';
  if (binary) {
    const bool wide = maxval > 255;
    std::vector<unsigned char> raw;
    raw.reserve(levels.size() * (wide ? 2 : 1));
    for (std::uint16_t v : levels) {
      if (wide) raw.push_back(static_cast<unsigned char>(v >> 8));
      raw.push_back(static_cast<unsigned char>(v & 0xFF));
    }
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size()));
  } else {
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        if (x > 0) out << ' ';
        out << levels[static_cast<std::size_t>(y) * width + x];
      }
      out << '\n';
    }
  }
}

void write_pgm(const std::filesystem::path& path, const GrayImage& image,
               bool binary) {
  const int maxval = (1 << image.source_depth) - 1;
  write_pgm_levels(path, denormalize_gray(image), image.width, image.height,
                   maxval, binary);
}

}  // namespace monarq::cli
